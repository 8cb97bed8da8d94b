#pragma once

#include "cyclok2/algebra/field.hpp"
#include "cyclok2/algebra/poly.hpp"
#include "cyclok2/algebra/quotient.hpp"
#include "cyclok2/algebra/rational.hpp"
#include "cyclok2/algebra/ratfunc.hpp"
