#pragma once

#include "g1min/error.hpp"
#include "g1min/arith.hpp"
#include "g1min/matrix.hpp"
#include "g1min/poly.hpp"
#include "g1min/models.hpp"
#include "g1min/invariants.hpp"
#include "g1min/jacobian.hpp"
#include "g1min/options.hpp"
#include "g1min/fiber.hpp"
#include "g1min/minimise.hpp"
#include "g1min/testgen.hpp"
#include "g1min/io.hpp"
