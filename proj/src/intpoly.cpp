#include "arith/intpoly.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace arith {

IntPoly IntPoly::constant(Int c) {
  std::vector<Int> v;
  if (c != 0) v.push_back(std::move(c));
  return IntPoly(std::move(v));
}

IntPoly IntPoly::monomial(Int c, std::size_t d) {
  if (c == 0) return IntPoly();
  std::vector<Int> v(d + 1, Int(0));
  v[d] = std::move(c);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::x_pow_minus_one(unsigned n) {
  std::vector<Int> v(n + 1, Int(0));
  v[0] = -1;
  v[n] = 1;
  return IntPoly(std::move(v));
}

Int IntPoly::eval_int(const Int& x) const {
  Int r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

Rat IntPoly::eval(const Rat& x) const {
  Rat r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + Rat(*it);
  return r;
}

int IntPoly::sign_at(const Rat& x) const {
  Rat v = eval(x);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return IntPoly();
  std::vector<Int> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Int(i);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::reciprocal() const {
  if (is_zero()) throw std::invalid_argument("reciprocal of zero polynomial");
  std::vector<Int> v(c_.rbegin(), c_.rend());
  return IntPoly(std::move(v));
}

Int IntPoly::content() const {
  Int g = 0;
  for (const Int& a : c_) g = boost::multiprecision::gcd(g, a);
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return IntPoly();
  Int g = content();
  if (leading() < 0) g = -g;
  std::vector<Int> v(c_);
  for (Int& a : v) a /= g;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-() const {
  std::vector<Int> v(c_);
  for (Int& a : v) a = -a;
  return IntPoly(std::move(v));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> v(std::max(a.c_.size(), b.c_.size()), Int(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> v(std::max(a.c_.size(), b.c_.size()), Int(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
  return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<Int> v(a.c_.size() + b.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return IntPoly(std::move(v));
}

std::optional<IntPoly> poly_divexact(const IntPoly& p, const IntPoly& d) {
  if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (p.is_zero()) return IntPoly();
  if (p.degree() < d.degree()) return std::nullopt;

  // Long division over Q; accept only a zero remainder with integer quotient.
  std::vector<Rat> rem(p.coeffs().begin(), p.coeffs().end());
  const int dd = d.degree();
  const Rat dl{d.leading()};
  std::vector<Rat> quot(p.degree() - dd + 1);
  for (int i = p.degree() - dd; i >= 0; --i) {
    Rat q = rem[i + dd] / dl;
    quot[i] = q;
    if (q == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[i + j] -= q * Rat(d.coeff(j));
  }
  for (int j = 0; j < dd; ++j)
    if (rem[j] != 0) return std::nullopt;
  std::vector<Int> qi(quot.size());
  for (std::size_t i = 0; i < quot.size(); ++i) {
    if (boost::multiprecision::denominator(quot[i]) != 1) return std::nullopt;
    qi[i] = boost::multiprecision::numerator(quot[i]);
  }
  return IntPoly(std::move(qi));
}

namespace {

// Pseudo-remainder: lc(d)^(deg p - deg d + 1) * p mod d, all in Z[x].
IntPoly pseudo_rem(IntPoly p, const IntPoly& d) {
  const int dd = d.degree();
  while (!p.is_zero() && p.degree() >= dd) {
    const int k = p.degree() - dd;
    IntPoly t = IntPoly::monomial(p.leading(), k) * d;
    std::vector<Int> v(p.coeffs());
    for (Int& a : v) a *= d.leading();
    p = IntPoly(std::move(v)) - t;
  }
  return p;
}

}  // namespace

IntPoly poly_gcd(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() && q.is_zero())
    throw std::invalid_argument("gcd of two zero polynomials");
  if (p.is_zero()) return q.primitive_part();
  if (q.is_zero()) return p.primitive_part();

  IntPoly a = p.primitive_part();
  IntPoly b = q.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);

  // Subresultant PRS; only the primitive gcd is needed, so each remainder is
  // reduced to its primitive part. Coefficient growth stays tame at the
  // degrees this toolkit meets.
  while (!b.is_zero()) {
    IntPoly r = pseudo_rem(a, b);
    a = std::move(b);
    b = r.is_zero() ? IntPoly() : r.primitive_part();
  }
  return a.primitive_part();
}

unsigned long euler_phi(unsigned long m) {
  unsigned long result = m;
  for (unsigned long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

IntPoly cyclotomic(unsigned long m) {
  if (m == 0) throw std::invalid_argument("cyclotomic index must be >= 1");
  // Phi_m = prod_{d | m} (x^d - 1)^{mu(m/d)}.
  IntPoly num = IntPoly::constant(1);
  IntPoly den = IntPoly::constant(1);
  for (unsigned long d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    unsigned long q = m / d;
    // Moebius mu(q) by trial factorization.
    int mu = 1;
    for (unsigned long p = 2; p * p <= q; ++p) {
      if (q % p == 0) {
        q /= p;
        if (q % p == 0) { mu = 0; break; }
        mu = -mu;
      }
    }
    if (q > 1 && mu != 0) mu = -mu;
    if (mu == 1) num = num * IntPoly::x_pow_minus_one(d);
    else if (mu == -1) den = den * IntPoly::x_pow_minus_one(d);
  }
  auto q = poly_divexact(num, den);
  if (!q) throw std::logic_error("cyclotomic division failed");
  return *q;
}

std::vector<unsigned long> cyclotomic_divisors(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("cyclotomic_divisors of zero");
  const unsigned long deg = static_cast<unsigned long>(p.degree());
  std::vector<unsigned long> result;
  if (deg == 0) return result;
  const unsigned long bound = 2 * deg * deg;
  for (unsigned long m = 1; m <= bound; ++m) {
    if (euler_phi(m) > deg) continue;
    if (poly_divexact(p, cyclotomic(m))) result.push_back(m);
  }
  return result;
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_part of zero");
  if (p.degree() == 0) return IntPoly::constant(1);
  IntPoly g = poly_gcd(p, p.derivative());
  auto q = poly_divexact(p.primitive_part(), g);
  if (!q) throw std::logic_error("squarefree division failed");
  return q->primitive_part();
}

namespace {

// True remainder of a by b over Q, scaled by a positive rational to a
// primitive integer polynomial (sign preserved).
IntPoly rat_rem_primitive(const IntPoly& a, const IntPoly& b) {
  std::vector<Rat> rem(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  const Rat bl{b.leading()};
  for (int i = a.degree() - db; i >= 0; --i) {
    Rat q = rem[i + db] / bl;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[i + j] -= q * Rat(b.coeff(j));
  }
  rem.resize(db);
  // Clear denominators, then strip content, keeping the sign.
  Int lcm = 1;
  for (const Rat& r : rem)
    lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(r));
  std::vector<Int> v(rem.size());
  for (std::size_t i = 0; i < rem.size(); ++i) {
    Rat s = rem[i] * Rat(lcm);
    v[i] = boost::multiprecision::numerator(s);
  }
  IntPoly r(std::move(v));
  if (r.is_zero()) return r;
  IntPoly prim = r.primitive_part();  // positive leading
  return r.leading() < 0 ? -prim : prim;
}

std::vector<IntPoly> sturm_chain(const IntPoly& h) {
  std::vector<IntPoly> chain;
  chain.push_back(h.primitive_part());
  if (h.degree() >= 1) {
    chain.push_back(h.derivative().primitive_part());
    while (chain.back().degree() >= 1) {
      IntPoly r = rat_rem_primitive(chain[chain.size() - 2], chain.back());
      if (r.is_zero()) break;
      chain.push_back(-r);
    }
  }
  return chain;
}

int sign_variations(const std::vector<IntPoly>& chain, const Rat& x) {
  int vars = 0, prev = 0;
  for (const IntPoly& f : chain) {
    int s = f.sign_at(x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++vars;
    prev = s;
  }
  return vars;
}

// Divide out a rational root r of h exactly, returning a primitive result.
IntPoly divide_out_root(const IntPoly& h, const Rat& r) {
  // h = (den*x - num) * q up to constants.
  std::vector<Int> d{-boost::multiprecision::numerator(r),
                     boost::multiprecision::denominator(r)};
  IntPoly lin{std::vector<Int>(d)};
  auto q = poly_divexact(h, lin);
  if (q) return q->primitive_part();
  // Non-monic edge: divide the primitive part instead.
  auto q2 = poly_divexact(h.primitive_part(), lin);
  if (!q2) throw std::logic_error("claimed root does not divide");
  return q2->primitive_part();
}

}  // namespace

int sturm_count(const IntPoly& h_in, const Rat& lo, const Rat& hi) {
  if (h_in.is_zero()) throw std::invalid_argument("sturm_count of zero");
  if (!(lo < hi)) throw std::invalid_argument("sturm_count needs lo < hi");

  IntPoly g = h_in.degree() >= 1 ? poly_gcd(h_in, h_in.derivative())
                                 : IntPoly::constant(1);
  if (g.degree() >= 1 && sturm_count(squarefree_part(g), lo, hi) > 0)
    throw NotSquarefree();

  IntPoly h = h_in.primitive_part();
  int extra = 0;
  while (h.degree() >= 1 && h.sign_at(hi) == 0) {
    ++extra;  // hi itself belongs to (lo, hi]
    h = divide_out_root(h, hi);
  }
  while (h.degree() >= 1 && h.sign_at(lo) == 0) h = divide_out_root(h, lo);
  if (h.degree() < 1) return extra;

  auto chain = sturm_chain(h);
  return extra + sign_variations(chain, lo) - sign_variations(chain, hi);
}

int count_unit_circle_roots(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("count_unit_circle_roots of zero");
  if (p.degree() == 0) return 0;

  // Strip x^v: roots at 0 are off the circle, and the reciprocal below needs
  // a nonzero constant term to preserve degrees.
  IntPoly q = p;
  {
    std::size_t v = 0;
    const auto& c = p.coeffs();
    while (v < c.size() && c[v] == 0) ++v;
    if (v > 0)
      q = IntPoly(std::vector<Int>(c.begin() + v, c.end()));
  }
  if (q.degree() == 0) return 0;

  // Every unit-circle root of a real polynomial is shared with the
  // reciprocal (1/z = conj z on the circle), so it survives into the gcd.
  IntPoly g = poly_gcd(q, q.reciprocal());
  if (g.degree() == 0) return 0;
  g = squarefree_part(g);

  int count = 0;
  if (g.sign_at(1) == 0) {
    ++count;
    g = divide_out_root(g, 1);
  }
  if (g.degree() >= 1 && g.sign_at(-1) == 0) {
    ++count;
    g = divide_out_root(g, -1);
  }
  if (g.degree() < 1) return count;

  // g is now palindromic of even degree 2m with g(0) != 0. Rewrite
  // g(x)/x^m = c_m + sum c_{m+i} (x^i + x^-i) and substitute
  // x^i + x^-i = D_i(t), t = x + 1/x, with D_0 = 2, D_1 = t,
  // D_i = t D_{i-1} - D_{i-2}.
  const int m = g.degree() / 2;
  if (g.degree() % 2 != 0 || g.coeffs() != g.reciprocal().coeffs())
    throw std::logic_error("unit-circle remainder not palindromic");
  IntPoly h = IntPoly::constant(g.coeff(m));
  IntPoly d_prev = IntPoly::constant(2);
  IntPoly d_cur{0, 1};  // t
  const IntPoly t{0, 1};
  for (int i = 1; i <= m; ++i) {
    h = h + IntPoly::constant(g.coeff(m + i)) * d_cur;
    IntPoly d_next = t * d_cur - d_prev;
    d_prev = std::move(d_cur);
    d_cur = std::move(d_next);
  }
  // Real t in (-2, 2) <=> a conjugate pair on the circle; |t| > 2 would be a
  // reciprocal real pair off the circle, which must not be counted.
  count += 2 * sturm_count(h, Rat(-2), Rat(2));
  return count;
}

namespace {

// Yun's squarefree decomposition: p = prod a_i^i (up to content).
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
  std::vector<std::pair<IntPoly, int>> out;
  IntPoly f = p.primitive_part();
  if (f.degree() < 1) return out;
  IntPoly g = poly_gcd(f, f.derivative());
  if (g.degree() == 0) {
    out.emplace_back(f, 1);
    return out;
  }
  IntPoly w = *poly_divexact(f, g);
  int i = 1;
  while (w.degree() >= 1) {
    IntPoly y = poly_gcd(w, g);
    IntPoly factor = *poly_divexact(w, y);
    if (factor.degree() >= 1) out.emplace_back(factor.primitive_part(), i);
    w = std::move(y);
    g = *poly_divexact(g, w);
    ++i;
    if (g.degree() == 0 && w.degree() >= 1) {
      out.emplace_back(w.primitive_part(), i);
      break;
    }
  }
  return out;
}

std::vector<std::complex<double>> durand_kerner(const IntPoly& p, double tol) {
  const int n = p.degree();
  std::vector<std::complex<double>> c(n + 1);
  const double lead = static_cast<double>(p.leading());
  for (int i = 0; i <= n; ++i)
    c[i] = static_cast<double>(p.coeff(i)) / lead;

  // Cauchy-style radius for the initial circle.
  double radius = 0.0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(c[i]));
  radius = 1.0 + radius;

  // Fixed non-real seed angle makes the iteration deterministic and avoids
  // symmetry traps on real-coefficient inputs.
  std::vector<std::complex<double>> z(n);
  for (int i = 0; i < n; ++i) {
    double angle = 2.0 * M_PI * i / n + 0.7;
    z[i] = radius * std::polar(1.0, angle) * std::complex<double>(0.9, 0.1);
  }

  auto eval = [&](std::complex<double> x) {
    std::complex<double> r = 0;
    for (int i = n; i >= 0; --i) r = r * x + c[i];
    return r;
  };

  const int max_iter = 4000;
  for (int iter = 0; iter < max_iter; ++iter) {
    double max_step = 0.0;
    for (int i = 0; i < n; ++i) {
      std::complex<double> num = eval(z[i]);
      std::complex<double> den = 1.0;
      for (int j = 0; j < n; ++j)
        if (j != i) den *= (z[i] - z[j]);
      std::complex<double> step = num / den;
      z[i] -= step;
      max_step = std::max(max_step, std::abs(step));
    }
    if (max_step < tol * std::max(1.0, radius)) return z;
  }
  throw NonConvergence();
}

}  // namespace

std::vector<RootCluster> numeric_roots(const IntPoly& p, double tol) {
  if (p.is_zero()) throw std::invalid_argument("numeric_roots of zero");
  std::vector<RootCluster> out;
  if (p.degree() == 0) return out;

  IntPoly q = p;
  {
    std::size_t v = 0;
    const auto& c = p.coeffs();
    while (v < c.size() && c[v] == 0) ++v;
    if (v > 0) {
      out.push_back({{0.0, 0.0}, static_cast<int>(v)});
      q = IntPoly(std::vector<Int>(c.begin() + v, c.end()));
    }
  }

  for (const auto& [factor, mult] : squarefree_decomposition(q)) {
    for (const auto& z : durand_kerner(factor, tol))
      out.push_back({z, mult});
  }

  // Merge clusters closer than 1e3 * tol (multiplicity detection radius).
  const double cluster_radius = 1e3 * tol;
  std::vector<RootCluster> merged;
  for (const auto& r : out) {
    bool absorbed = false;
    for (auto& m : merged) {
      if (std::abs(m.value - r.value) < cluster_radius) {
        m.multiplicity += r.multiplicity;
        absorbed = true;
        break;
      }
    }
    if (!absorbed) merged.push_back(r);
  }
  // Deterministic report order: by real part, then imaginary part.
  std::sort(merged.begin(), merged.end(), [](const RootCluster& a, const RootCluster& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return merged;
}

}  // namespace arith
