#pragma once

#include "microbot/actuator_models.hpp"
#include "microbot/brownian_nav.hpp"
#include "microbot/constants.hpp"
#include "microbot/design_space.hpp"
#include "microbot/errors.hpp"
#include "microbot/scenario.hpp"
#include "microbot/shape_tradeoff.hpp"
#include "microbot/sphere_tangential.hpp"
#include "microbot/squirmer_modes.hpp"
#include "microbot/stokes_bem.hpp"
#include "microbot/stokes_field.hpp"
