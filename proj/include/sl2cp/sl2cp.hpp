#pragma once

#include "sl2cp/charpoly.hpp"
#include "sl2cp/error.hpp"
#include "sl2cp/monoid.hpp"
#include "sl2cp/polynomial.hpp"
#include "sl2cp/polynomial_io.hpp"
#include "sl2cp/rational_matrix.hpp"
#include "sl2cp/repmatrix.hpp"
#include "sl2cp/sln.hpp"
#include "sl2cp/weights.hpp"
