#pragma once

#include "folinv/linalg.hpp"
#include "folinv/poly.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace folinv {

/// Local degree ordering on monomials in x, y: lower total degree is larger,
/// ties broken lexicographically with x > y. The constant 1 is the maximum.
struct LocalOrder {
  static bool greater(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exp > b.exp;
  }
};

/// Leading monomial / coefficient of a nonzero polynomial under LocalOrder.
Monomial local_leading_monomial(const Poly& p);
Rational local_leading_coeff(const Poly& p);
/// deg(p) - deg(LM(p)).
int ecart(const Poly& p);

class StandardBasis {
public:
  const std::vector<Poly>& generators() const { return gens_; }
  /// Minimal generators of the leading ideal.
  const std::vector<Monomial>& leading_ideal() const { return leading_; }
  bool in_leading_ideal(const Monomial& m) const;

  /// Quotient is finite-dimensional (the ideal is primary to (x, y)).
  bool is_finite() const { return finite_; }
  /// Monomials outside the leading ideal, in decreasing LocalOrder; empty when infinite.
  const std::vector<Monomial>& quotient_basis() const { return basis_; }
  /// Every monomial of this degree or more lies in the ideal; only for finite quotients.
  int vanishing_degree() const { return vanishing_degree_; }

private:
  friend StandardBasis standard_basis(std::vector<Poly> gens);
  std::vector<Poly> gens_;
  std::vector<Monomial> leading_;
  bool finite_ = false;
  std::vector<Monomial> basis_;
  int vanishing_degree_ = 0;
  int truncation_ = 0;
  friend Poly normal_form(const Poly& p, const StandardBasis& sb);
};

/// Standard basis in the localization at the origin (Mora's tangent cone algorithm).
StandardBasis standard_basis(std::vector<Poly> gens);

/// Mora weak normal form; zero exactly when p belongs to the ideal in the local ring.
Poly normal_form(const Poly& p, const StandardBasis& sb);

/// Fully reduced representative supported on the quotient basis. Finite quotients only.
Poly reduced_normal_form(const Poly& p, const StandardBasis& sb);

std::optional<std::size_t> quotient_dim(const StandardBasis& sb);

/// Multiplication by a fixed class on the finite quotient; column j holds the
/// coordinates of NF(basis[j] * f).
struct QuotientOperator {
  std::vector<Monomial> basis;
  RationalMatrix matrix;
};

QuotientOperator mult_operator(const StandardBasis& sb, const Poly& f);

struct KernelRank {
  std::size_t kernel_dim = 0;
  std::size_t rank = 0;
};

KernelRank kernel_rank(const QuotientOperator& op);

// ---------------------------------------------------------------- truncation oracle

/// The truncated multiplication matrix: one row per (monomial m, generator g)
/// with deg(m) + order(g) < bound, holding m*g with terms of degree >= bound dropped.
RationalMatrix macaulay_matrix(std::span<const Poly> gens, int bound);

/// dim of polynomials of degree < bound modulo the row space of macaulay_matrix.
std::size_t macaulay_dim(std::span<const Poly> gens, int bound);
std::size_t macaulay_dim_serial(std::span<const Poly> gens, int bound);

struct MacaulayRun {
  std::size_t dim = 0;
  int bound = 0;
  std::vector<std::pair<int, std::size_t>> history;
};

class NotStabilized : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Starts at max(4, 2*maxdeg + 2), steps by 2 until two consecutive values agree.
MacaulayRun stabilized_macaulay_dim(std::span<const Poly> gens, int cap = 64);

} // namespace folinv
