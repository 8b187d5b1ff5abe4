#ifndef ARITH_INTPOLY_HPP
#define ARITH_INTPOLY_HPP

#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace arith {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Dense polynomial over Z, coefficients in ascending degree order.
/// The zero polynomial has an empty coefficient vector; otherwise the
/// leading coefficient is nonzero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static IntPoly zero() { return IntPoly(); }
  static IntPoly constant(Int c);
  // c * x^d
  static IntPoly monomial(Int c, std::size_t d);
  // x^n - 1
  static IntPoly x_pow_minus_one(unsigned n);

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return c_; }
  Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
  const Int& leading() const { return c_.back(); }

  Int eval_int(const Int& x) const;
  Rat eval(const Rat& x) const;
  // Sign of the value at a rational point: -1, 0, +1.
  int sign_at(const Rat& x) const;

  IntPoly derivative() const;
  // Coefficient reversal x^deg * P(1/x). Requires P nonzero.
  IntPoly reciprocal() const;
  // gcd of coefficients (nonnegative); 0 for the zero polynomial.
  Int content() const;
  // P / content, sign-normalized so the leading coefficient is positive.
  IntPoly primitive_part() const;

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    return a.c_ == b.c_;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;
};

/// Exact division in Q[x] restricted to integer quotients: returns Q with
/// P = D * Q, or nullopt when D does not divide P over Z[x].
std::optional<IntPoly> poly_divexact(const IntPoly& p, const IntPoly& d);

/// Primitive gcd over Q with positive leading coefficient, computed by the
/// subresultant PRS. Requires not both arguments zero.
IntPoly poly_gcd(const IntPoly& p, const IntPoly& q);

/// Euler totient.
unsigned long euler_phi(unsigned long m);

/// Cyclotomic polynomial Phi_m, m >= 1.
IntPoly cyclotomic(unsigned long m);

/// All m >= 1 with Phi_m | P, sorted ascending. Complete: every candidate m
/// with phi(m) <= deg P is tested (phi(m) >= sqrt(m/2) bounds the scan by
/// 2*deg^2). Requires P nonzero.
std::vector<unsigned long> cyclotomic_divisors(const IntPoly& p);

/// P / gcd(P, P'): same roots, all simple.
IntPoly squarefree_part(const IntPoly& p);

/// Number of real roots of H in the half-open interval (lo, hi], by Sturm
/// sign-variation counts. Throws NotSquarefree when a repeated root of H
/// lies in the interval.
int sturm_count(const IntPoly& h, const Rat& lo, const Rat& hi);

/// Number of distinct complex roots of P with |z| = 1, computed exactly:
/// gcd with the reciprocal, squarefree reduction, stripping of z = +-1, and
/// a Sturm count of the Chebyshev-style transform on (-2, 2).
int count_unit_circle_roots(const IntPoly& p);

struct RootCluster {
  std::complex<double> value;
  int multiplicity = 1;
};

/// All complex roots with multiplicity clusters, deterministic for fixed
/// input and tolerance. Exact squarefree decomposition first, then
/// Durand-Kerner on each squarefree factor. Throws NonConvergence if the
/// iteration budget runs out.
std::vector<RootCluster> numeric_roots(const IntPoly& p, double tol = 1e-12);

struct NotSquarefree : std::runtime_error {
  NotSquarefree() : std::runtime_error("polynomial not squarefree on interval") {}
};
struct NonConvergence : std::runtime_error {
  NonConvergence() : std::runtime_error("root iteration did not converge") {}
};

}  // namespace arith

#endif  // ARITH_INTPOLY_HPP
