#pragma once

#include "sturm/abelian.hpp"
#include "sturm/exact/continued_fraction.hpp"
#include "sturm/exact/decimal.hpp"
#include "sturm/exact/integer.hpp"
#include "sturm/exact/quadratic.hpp"
#include "sturm/fibonacci.hpp"
#include "sturm/formulas.hpp"
#include "sturm/lagrange.hpp"
#include "sturm/parikh.hpp"
#include "sturm/sturmian.hpp"
