#pragma once

#include "wallcross/linalg.hpp"
#include "wallcross/partition.hpp"
#include "wallcross/symfunc.hpp"

#include <string>
#include <utility>
#include <vector>

// Stable bases of K_T(Hilb_n). Restriction coefficients are kept in the
// coordinates q, t with q1 = q t and q2 = q / t.
namespace wc::stable {

// The slope m + side * epsilon.
struct SlopePoint {
  Rational m{0};
  int side = 1;

  std::string to_string() const;
  friend bool operator==(const SlopePoint&, const SlopePoint&) = default;
};

SlopePoint parse_slope(const std::string& m, int side);

// s_lambda = sum_mu gamma[lambda][mu] [I_mu], order = partitions(n).
struct StableTable {
  int n = 0;
  SlopePoint slope;
  std::vector<Partition> order;
  Matrix<LaurentPoly> gamma;
};

// s^{w-eps}_lambda = sum_mu b[mu][lambda] s^{w+eps}_mu.
struct WallCrossing {
  int n = 0;
  Rational wall;
  std::vector<Partition> order;
  Matrix<LaurentPoly> b;

  bool is_identity() const;
};

// prod over boxes of (q2^leg - q1^(arm+1)), in q, t coordinates.
LaurentPoly diagonal(const Partition& lambda);

// Admissible t-degrees [lower, upper] of gamma[lambda][mu] at the slope point.
std::pair<long, long> degree_window(const Partition& lambda, const Partition& mu, const SlopePoint& slope);

// Checks the diagonal formula, triangularity and every window; returns the
// violations (empty when the table is valid).
std::vector<std::string> validate(const StableTable& table);

StableTable seed_slope0(int n);

// Rationals a/b in the open interval with b <= n(n-1), b dividing a content
// difference of partitions of n, integers excluded; increasing.
std::vector<Rational> candidate_walls(int n, const Rational& lo, const Rational& hi);

struct Crossed {
  StableTable table;
  WallCrossing crossing;
};

// table must sit at w - eps; returns the table at w + eps.
Crossed cross_wall(const StableTable& table, const Rational& w);
// Same result by an independent linear solve over Q with an explicit monomial support.
Crossed cross_wall_linear(const StableTable& table, const Rational& w);

// gamma[lambda][mu] -> gamma[lambda][mu] chi_mu^k / chi_lambda^k, slope + k.
StableTable nabla_shift(const StableTable& table, int k);

// Integer shift first, then the walls of [0, 1).
StableTable stable_basis(int n, const SlopePoint& slope);
// Crossing every wall between 0 and the slope one at a time.
StableTable stable_basis_by_walls(int n, const SlopePoint& slope);

WallCrossing wall_crossing(int n, const Rational& w);

// o_lambda^m times the ribbon factor, as a monomial in q, t.
Monomial renorm_factor(const Partition& lambda, const Rational& m);
// b[mu][lambda] r_lambda / r_mu.
Matrix<LaurentPoly> renormalize(const WallCrossing& w);

// Expresses the basis at `from` in the basis at `to`: column lambda holds
// the expansion of s^from_lambda. Optionally conjugated by the renormalization
// at the slope of `to`.
Matrix<Scalar> transition_matrix(int n, const SlopePoint& from, const SlopePoint& to, bool renormalized = false);

// [I_mu] = (1 - q2) omega(H~_mu) / (chi_mu [T_mu]); q1, q2 coordinates.
const sym::SymFunc& fixed_point_class(const Partition& mu);
// s^slope_lambda as a symmetric function (q1, q2 coordinates), optionally renormalized.
sym::SymFunc stable_function(const StableTable& table, const Partition& lambda, bool renormalized = false);

}  // namespace wc::stable
