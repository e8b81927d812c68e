#pragma once

#include "folinv/rational.hpp"

#include <vector>

namespace folinv {

/// Dense univariate polynomial over Q, coefficient i multiplies t^i.
using UniPoly = std::vector<Rational>;

void trim(UniPoly& p);
int degree(const UniPoly& p);
Rational evaluate(const UniPoly& p, const Rational& t);
UniPoly uni_gcd(UniPoly a, UniPoly b);

struct RationalRootSplit {
  std::vector<Rational> roots; // distinct, ascending
  UniPoly residual;            // monic factor left after removing every rational root
};

/// Finds all rational roots by the rational root test.
RationalRootSplit split_rational_roots(UniPoly p);

std::string uni_str(const UniPoly& p, const std::string& var);

} // namespace folinv
