#pragma once

#include "fracper/errors.hpp"
#include "fracper/frac_operators.hpp"
#include "fracper/fode_solver.hpp"
#include "fracper/gamma.hpp"
#include "fracper/grid.hpp"
#include "fracper/impulsive.hpp"
#include "fracper/io.hpp"
#include "fracper/mellin.hpp"
#include "fracper/mittag_leffler.hpp"
#include "fracper/periodicity.hpp"
#include "fracper/product_integration.hpp"
#include "fracper/systems.hpp"
