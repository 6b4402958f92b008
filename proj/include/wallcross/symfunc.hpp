#pragma once

#include "wallcross/linalg.hpp"
#include "wallcross/partition.hpp"
#include "wallcross/scalar.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

// Symmetric functions of fixed degree with coefficients in Q(q1, q2).
namespace wc::sym {

enum class Basis { m, e, p, s, P, Htilde };

std::string basis_name(Basis b);
Basis parse_basis(const std::string& name);

class SymFunc {
 public:
  SymFunc(int degree, Basis basis);
  static SymFunc basis_element(Basis basis, const Partition& p, const Scalar& c = 1);

  int degree() const { return degree_; }
  Basis basis() const { return basis_; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  std::vector<Scalar>& coeffs() { return coeffs_; }
  const Scalar& coeff(const Partition& p) const;
  Scalar& coeff(const Partition& p);
  bool is_zero() const;

  SymFunc operator-() const;
  friend SymFunc operator+(const SymFunc& a, const SymFunc& b);
  friend SymFunc operator-(const SymFunc& a, const SymFunc& b);
  friend SymFunc operator*(const Scalar& c, const SymFunc& f);
  // Equality as symmetric functions, regardless of basis.
  friend bool operator==(const SymFunc& a, const SymFunc& b);

 private:
  int degree_;
  Basis basis_;
  std::vector<Scalar> coeffs_;  // indexed like partitions(degree)
};

// Position of p in partitions(|p|).
std::size_t index_of(const Partition& p);

// Rational transition data of one degree; the power sums are the hub.
struct DegreeTables {
  std::vector<Partition> parts;
  std::map<Partition, std::size_t> index;
  std::vector<long long> z;
  Matrix<Rational> character;  // [lambda][rho] = chi^lambda(rho)
  std::map<Basis, Matrix<Rational>> to_p;    // [lambda][rho]: B_lambda = sum to_p p_rho
  std::map<Basis, Matrix<Rational>> from_p;  // [rho][lambda]: p_rho = sum from_p B_lambda
};
const DegreeTables& tables(int n);

long long character_value(const Partition& lambda, const Partition& rho);

SymFunc convert(const SymFunc& f, Basis target);

// Coefficient multiplication in the power-sum basis: p_rho -> prod m(rho_i) p_rho.
SymFunc plethystic_scale(const SymFunc& f, const std::function<Scalar(int)>& multiplier);
SymFunc omega(const SymFunc& f);
SymFunc product(const SymFunc& a, const SymFunc& b);
// p_b composed with f: p_rho -> p_{b rho}.
SymFunc compose_power_sum(const SymFunc& f, int b);

// <p_k, p_k>_0 = k (1 - q1^k) / (1 - q2^-k)
Scalar inner0(const SymFunc& f, const SymFunc& g);
// <p_k, p_k>_* = (-1)^(k-1) k (1 - q1^k)(1 - q2^k)
Scalar inner_mod(const SymFunc& f, const SymFunc& g);
// Localized pairing sum_lambda f|_lambda g|_lambda / [T_lambda].
Scalar euler_form(const SymFunc& f, const SymFunc& g);

SymFunc macdonald_P(const Partition& lambda);
struct IntegralForms {
  SymFunc Jtilde;
  SymFunc Htilde;
};
IntegralForms integral_forms(const Partition& lambda);
SymFunc modified_macdonald(const Partition& lambda);
// <P_lambda, P_lambda>_0 and <H~_lambda, H~_lambda>_* as computed.
Scalar macdonald_norm(const Partition& lambda);
Scalar modified_norm(const Partition& lambda);
// J~_lambda = jtilde_scale(lambda) P_lambda.
Scalar jtilde_scale(const Partition& lambda);

Scalar chi(const Partition& lambda);
Scalar tangent_bracket(const Partition& lambda);

SymFunc nabla(const SymFunc& f, int power = 1);
Scalar restrict(const SymFunc& f, const Partition& lambda);
std::vector<Scalar> restrictions(const SymFunc& f);
SymFunc from_restrictions(int degree, const std::vector<Scalar>& values);

}  // namespace wc::sym
