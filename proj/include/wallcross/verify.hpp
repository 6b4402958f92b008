#pragma once

#include "wallcross/stable.hpp"
#include "wallcross/symfunc.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wc::verify {

enum class Status { Match, Mismatch, Skipped };
std::string status_name(Status s);

struct Report {
  std::string check;
  std::map<std::string, std::string> params;
  Status status = Status::Match;
  std::string witness;  // first differing entry or the reason for skipping
  std::optional<long> millis;

  bool ok() const { return status != Status::Mismatch; }
};

// Renormalized crossing at the wall against the bar matrix A_b(q).
Report conjecture_check(int n, const Rational& wall);
// Every candidate wall in (0, 1); reports in wall order.
std::vector<Report> conjecture_sweep(int n, int jobs = 1);

// One report per printed item of the Hilb_2 / Hilb_3 tables.
std::vector<Report> appendix_items();
Report appendix_check();

// Schur coefficients of every stable basis element series-expanded in q2
// (the renormalizing monomial does not affect signs and is left out).
Report positivity_report(int n, const stable::SlopePoint& slope, int order);

struct Character {
  sym::SymFunc raw;         // sum over single-ribbon shapes, renormalized
  sym::SymFunc normalized;  // raw times the monomial making minimal q1 and q2 exponents zero
};
// Class of the finite-dimensional representation at slope m = a/b, in q1, q2.
Character finite_dim_class(const Rational& m);
// t^{-m c_lambda} (1 - t) s_lambda[X / (1 - t)], with t as the first variable.
sym::SymFunc verma_character(const Rational& m, const Partition& lambda);

// Runs f(i) for i in [0, count) on up to `jobs` threads.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& f);

}  // namespace wc::verify
