#ifndef ARITH_ZARITH_HPP
#define ARITH_ZARITH_HPP

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "arith/intpoly.hpp"
#include "arith/zset.hpp"

namespace arith {

struct DoesNotGenerate : std::invalid_argument {
  DoesNotGenerate() : std::invalid_argument("set does not generate Z") {}
};
struct CardinalityNotPrime : std::invalid_argument {
  CardinalityNotPrime() : std::invalid_argument("|K| is not prime") {}
};
struct ModulusTooSmall : std::invalid_argument {
  ModulusTooSmall() : std::invalid_argument("modulus must exceed |K|") {}
};
struct WrongInitialCount : std::invalid_argument {
  WrongInitialCount() : std::invalid_argument("need exactly max(K) initial values") {}
};
struct NotBArithmetic : std::invalid_argument {
  NotBArithmetic() : std::invalid_argument("set is not b-arithmetic") {}
};
struct BadCertificate : std::invalid_argument {
  BadCertificate() : std::invalid_argument("certificate is not a partition of Z_n") {}
};
struct BadParameters : std::invalid_argument {
  explicit BadParameters(const std::string& w) : std::invalid_argument(w) {}
};

/// Mask polynomial P_K = sum_i x^{s_i}.
IntPoly mask_polynomial(const ZSet& k);

struct BArithResult {
  bool b_arithmetic = false;
  int circle_root_count = 0;  // distinct roots of P_K on |z| = 1
};

/// K is b-arithmetic iff P_K has a root on the unit circle. Requires K to
/// generate Z.
BArithResult is_b_arithmetic(const ZSet& k);

/// Smallest m >= 2 with Phi_m | P_K, or nullopt. Requires K to generate Z.
std::optional<unsigned long> is_p_arithmetic(const ZSet& k);

struct CMReport {
  std::vector<unsigned long> r_k;  // cyclotomic divisor indices of P_K
  std::vector<unsigned long> s_k;  // prime powers in r_k
  bool t1 = false;
  bool t2 = false;
};

/// Coven-Meyerowitz conditions. T1: P_K(1) = prod over prime powers
/// p^a in S_K of Phi_{p^a}(1) = p. T2: products over prime powers with
/// distinct bases stay in R_K (vacuously true when S_K is empty).
CMReport coven_meyerowitz_report(const ZSet& k);

/// Newman's criterion for prime cardinality: tile iff some e >= 0 has all
/// elements congruent mod p^e and pairwise incongruent mod p^{e+1}.
bool newman_prime_test(const ZSet& k);

struct TileCertificate {
  long period = 0;
  std::vector<long> offsets;  // C subset of [0, period)
};

struct TileResultZ {
  bool is_tile = false;
  std::optional<TileCertificate> certificate;
  std::optional<long> collision;  // first doubly covered position
};

/// Forced-greedy tiling automaton over Z: the translate covering the least
/// uncovered integer must place its minimum there. Collision => not a tile;
/// repeated coverage state => tile, with the cycle re-verified as an exact
/// partition of Z_n.
TileResultZ decide_tile_Z(const ZSet& k);

/// Backtracking exact cover of Z_n by translates of K mod n, branching on
/// the smallest uncovered residue. Requires |K| | n and elements distinct
/// mod n (else BadModulus).
std::optional<std::vector<long>> tile_Zn_exact_cover(const ZSet& k, long n);

/// K arithmetic in Z_n: the circulant system is singular, decided exactly
/// via gcd(P_K, x^n - 1) != 1. Requires n > |K|.
bool is_arithmetic_Zn(const ZSet& k, long n);

/// Integral periodic solution of A(K) when K is p-arithmetic: period
/// n = m * ceil((|K|+1)/m) for the smallest witness m, primitive integer
/// kernel vector of the circulant, verified window sums.
std::optional<std::pair<long, std::vector<Int>>> integral_periodic_solution(const ZSet& k);

struct SequenceWindow {
  long lo = 0, hi = -1;
  std::vector<Rat> values;  // indexed lo..hi
};

/// Unique bi-infinite extension of the initial values x_0..x_{max(K)-1} by
/// the two-branch recurrence; returns the window [lo, hi].
SequenceWindow extend_recurrence(const ZSet& k, const std::vector<Rat>& initial,
                                 long lo, long hi);

enum class BoundedVerdict { Bounded, Unbounded, Inconclusive };

struct RootCoefficient {
  std::complex<double> root;
  int power = 0;  // confluent basis exponent n^power * root^n
  bool on_circle = false;
  std::complex<double> coefficient;
};

struct BoundednessReport {
  BoundedVerdict verdict = BoundedVerdict::Inconclusive;
  std::vector<RootCoefficient> root_data;
};

/// Numeric classification: expand the recurrence solution over the root
/// basis of P_K; bounded iff every coefficient on an off-circle root is
/// below tol. Coefficients in [tol, 10 tol) make the verdict Inconclusive.
BoundednessReport classify_boundedness(const ZSet& k,
                                       const std::vector<Rat>& initial,
                                       double tol = 1e-8);

struct NumericWindow {
  long lo = 0, hi = -1;
  std::vector<double> values;
  double max_residual = 0.0;  // relative, over fully supported equations
};

/// Nontrivial bounded solution: unit coefficients on the unit-circle roots
/// of P_K, zero elsewhere; real part of the window. Requires b-arithmetic.
NumericWindow make_bounded_solution(const ZSet& k, long lo, long hi);

/// Two-level periodic solution from a tiling certificate: x_g = |K|-1 when
/// (-g mod n) is an offset, else -1. Certificate re-verified first.
SequenceWindow tiling_to_solution(const ZSet& k, const TileCertificate& cert,
                                  long lo, long hi);

/// {0, 3, p, p+2, p+3, ..., 2p-3, 2p-1} for prime p > 3: mask polynomial
/// Phi_6 * (1 + x + x^p + ... + x^{2p-3}), so p-arithmetic but not a tile.
ZSet family_parith_nontile(long p);

/// {0, ..., dp+d-1} minus {jp + j - 1 : j = 1..d} for prime p, d > 1:
/// Phi_p divides the mask polynomial, p-arithmetic but not a tile.
ZSet family_parith_nontile_composite(long p, long d);

}  // namespace arith

#endif  // ARITH_ZARITH_HPP
