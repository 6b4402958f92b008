#pragma once

#include "wallcross/laurent.hpp"
#include "wallcross/linalg.hpp"
#include "wallcross/partition.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wc::fock {

// Coefficients are Laurent polynomials in the single variable q (no t).
class FockVector {
 public:
  using Map = std::map<Partition, LaurentPoly, CanonicalLess>;

  FockVector() = default;
  static FockVector basis(const Partition& p, const LaurentPoly& c = 1);
  static FockVector vacuum() { return basis(Partition{}); }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(const Partition& p) const;
  void add(const Partition& p, const LaurentPoly& c);

  FockVector operator-() const;
  friend FockVector operator+(const FockVector& a, const FockVector& b);
  friend FockVector operator-(const FockVector& a, const FockVector& b);
  FockVector scaled(const LaurentPoly& c) const;
  // Coefficientwise q -> 1/q.
  FockVector bar_coefficients() const;
  friend bool operator==(const FockVector& a, const FockVector& b) { return a.terms_ == b.terms_; }

  // "c1*|[2]> + c2*|[1,1]>" with coefficients in canonical serialization.
  std::string to_string() const;

 private:
  Map terms_;
};

LaurentPoly q_power(long k);
// Substitutes q -> 1/q.
LaurentPoly bar(const LaurentPoly& p);

// Coordinates in which an operator is written: the standard basis |lambda>
// or the costandard basis (the bar image of |lambda>).
enum class Frame { Standard, Costandard };

// Terms of size above max_size are discarded.
struct Truncation {
  std::optional<int> max_size;
};

FockVector apply_f(int i, const FockVector& v, int b, Frame frame = Frame::Standard, Truncation tr = {});
FockVector apply_e(int i, const FockVector& v, int b);
FockVector apply_K(int i, const FockVector& v, int b);
FockVector apply_D(const FockVector& v, int b);
FockVector apply_V(int k, const FockVector& v, int b, Frame frame = Frame::Standard, Truncation tr = {});
FockVector apply_B(int k, const FockVector& v, int b, Truncation tr = {});

// Matrix of an operator from the degree-n piece to the degree-m piece, rows
// and columns in canonical partition order.
Matrix<LaurentPoly> operator_matrix(const std::function<FockVector(const FockVector&)>& op, int n, int m);

// bar|lambda> = sum_mu a[mu][lambda] |mu>, order = partitions(n).
struct BarMatrix {
  int n = 0;
  int b = 0;
  std::vector<Partition> order;
  Matrix<LaurentPoly> a;

  const LaurentPoly& entry(const Partition& lambda, const Partition& mu) const;
};

struct BarOptions {
  // Nonzero seeds permute the candidate order inside each degree.
  unsigned shuffle_seed = 0;
  // Rational point used for the independence test.
  Rational probe{3, 7};
};

BarMatrix bar_matrix(int n, int b, const BarOptions& opt = {});

// G(lambda) = sum_mu d[mu][lambda] |mu>; sign +1 or -1.
struct CanonicalMatrix {
  int n = 0;
  int b = 0;
  int sign = 1;
  std::vector<Partition> order;
  Matrix<LaurentPoly> d;
};

CanonicalMatrix canonical_basis(const BarMatrix& a, int sign);

struct LtReport {
  bool integral = true;
  bool support = true;
  bool unit_diagonal = true;
  bool conjugate_symmetric = true;
  bool involution = true;
  std::vector<std::string> violations;

  bool ok() const { return integral && support && unit_diagonal && conjugate_symmetric && involution; }
};

LtReport lt_property_check(const BarMatrix& a);

}  // namespace wc::fock
