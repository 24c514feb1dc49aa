#pragma once

// Umbrella header.
#include "areapoly.hpp"
#include "corpus.hpp"
#include "gcd.hpp"
#include "geometry.hpp"
#include "groebner.hpp"
#include "io.hpp"
#include "model.hpp"
#include "monsky_poly.hpp"
#include "order.hpp"
#include "param.hpp"
#include "poly.hpp"
#include "poly_parse.hpp"
#include "ratfunc.hpp"
#include "rational.hpp"
#include "svg.hpp"
#include "valuation.hpp"
