#pragma once

// Dense polynomials over Q in one and two variables; used for gcd and exact
// division of Laurent polynomials after clearing exponent denominators.

#include "wallcross/rational.hpp"

#include <optional>
#include <vector>

namespace wc::detail {

using UPoly = std::vector<Rational>;  // index = degree in x
using BiPoly = std::vector<UPoly>;    // index = degree in y

void trim(UPoly& a);
void trim(BiPoly& a);
int degree(const UPoly& a);

UPoly add(const UPoly& a, const UPoly& b);
UPoly sub(const UPoly& a, const UPoly& b);
UPoly mul(const UPoly& a, const UPoly& b);
void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
UPoly gcd(const UPoly& a, const UPoly& b);
std::optional<UPoly> exact_div(const UPoly& a, const UPoly& b);
Rational eval(const UPoly& a, const Rational& x);

BiPoly gcd(const BiPoly& a, const BiPoly& b);
std::optional<BiPoly> exact_div(const BiPoly& a, const BiPoly& b);

}  // namespace wc::detail
