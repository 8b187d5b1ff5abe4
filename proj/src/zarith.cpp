#include "arith/zarith.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "arith/exactlin.hpp"

namespace arith {

ZSet normalize_set(std::vector<long> raw) {
  if (raw.empty()) throw std::invalid_argument("empty set");
  std::sort(raw.begin(), raw.end());
  if (std::adjacent_find(raw.begin(), raw.end()) != raw.end())
    throw DuplicateElements();
  const long base = raw.front();
  for (long& x : raw) x -= base;
  long g = 0;
  for (long x : raw) g = std::gcd(g, x);
  ZSet k;
  k.elements = std::move(raw);
  k.generates = (k.elements.size() == 1) ? false : (g == 1);
  return k;
}

IntPoly mask_polynomial(const ZSet& k) {
  std::vector<Int> c(k.max() + 1, Int(0));
  for (long s : k.elements) c[s] = 1;
  return IntPoly(std::move(c));
}

BArithResult is_b_arithmetic(const ZSet& k) {
  if (!k.generates) throw DoesNotGenerate();
  int n = count_unit_circle_roots(mask_polynomial(k));
  return {n > 0, n};
}

std::optional<unsigned long> is_p_arithmetic(const ZSet& k) {
  if (!k.generates) throw DoesNotGenerate();
  for (unsigned long m : cyclotomic_divisors(mask_polynomial(k)))
    if (m >= 2) return m;
  return std::nullopt;
}

namespace {

bool is_prime_power(unsigned long m, unsigned long* base = nullptr) {
  if (m < 2) return false;
  for (unsigned long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      if (m != 1) return false;
      if (base) *base = p;
      return true;
    }
  }
  if (base) *base = m;  // m itself prime
  return true;
}

bool is_prime(unsigned long n) {
  unsigned long b;
  return is_prime_power(n, &b) && b == n;
}

}  // namespace

CMReport coven_meyerowitz_report(const ZSet& k) {
  CMReport rep;
  IntPoly p = mask_polynomial(k);
  for (unsigned long m : cyclotomic_divisors(p))
    if (m >= 2) rep.r_k.push_back(m);

  std::vector<unsigned long> bases;
  for (unsigned long m : rep.r_k) {
    unsigned long b;
    if (is_prime_power(m, &b)) {
      rep.s_k.push_back(m);
      bases.push_back(b);
    }
  }

  // T1: P_K(1) = prod Phi_{p^a}(1) = prod of the prime bases.
  Int prod = 1;
  for (unsigned long b : bases) prod *= b;
  rep.t1 = (p.eval_int(1) == prod);

  // T2: every product of prime powers with pairwise distinct bases lies in
  // R_K. Vacuous for empty S_K.
  std::set<unsigned long> r_set(rep.r_k.begin(), rep.r_k.end());
  rep.t2 = true;
  const std::size_t n = rep.s_k.size();
  for (std::size_t mask = 1; mask < (std::size_t(1) << n) && rep.t2; ++mask) {
    std::set<unsigned long> used;
    unsigned long prod_m = 1;
    bool distinct = true;
    int cnt = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask & (std::size_t(1) << i))) continue;
      if (!used.insert(bases[i]).second) { distinct = false; break; }
      prod_m *= rep.s_k[i];
      ++cnt;
    }
    if (distinct && cnt >= 2 && !r_set.count(prod_m)) rep.t2 = false;
  }
  return rep;
}

bool newman_prime_test(const ZSet& k) {
  const unsigned long p = k.size();
  if (!is_prime(p)) throw CardinalityNotPrime();
  long pe = 1;  // p^e
  while (true) {
    bool congruent = true;
    for (long s : k.elements)
      if (s % pe != k.elements.front() % pe) { congruent = false; break; }
    if (!congruent) return false;
    long pe1 = pe * static_cast<long>(p);
    std::set<long> residues;
    for (long s : k.elements) residues.insert(s % pe1);
    if (residues.size() == k.size()) return true;
    pe = pe1;
    if (pe > k.max() + 1) return false;  // all congruent mod pe forces equality
  }
}

namespace {

// Forced scan of the tiling automaton from one boundary state. The state
// encodes coverage of the diam positions right of the (uncovered) frontier:
// bit j = covered(t + 1 + j). Placing the translate with minimum at the
// frontier is forced; a state seen twice within a scan closes a periodic
// tiling, and the cycle is re-verified as an exact partition of Z_n.
struct TileScanner {
  std::uint64_t kmask = 0;  // bit s-1 for each nonzero element s
  std::vector<long> elements;
  std::set<std::uint64_t> dead;  // states whose forced future collides

  // Returns a verified certificate, or the first collision position.
  std::pair<std::optional<TileCertificate>, long> scan(std::uint64_t window) {
    std::map<std::uint64_t, long> seen;
    std::vector<long> placements;
    long t = 0;
    while (true) {
      if (dead.count(window)) {
        for (const auto& [s, tt] : seen) dead.insert(s);
        return {std::nullopt, -1};
      }
      auto [it, fresh] = seen.try_emplace(window, t);
      if (!fresh) {
        const long t_prev = it->second;
        const long n = t - t_prev;
        TileCertificate cert;
        cert.period = n;
        for (long p : placements)
          if (p >= t_prev) cert.offsets.push_back(((p - t_prev) % n + n) % n);
        std::sort(cert.offsets.begin(), cert.offsets.end());
        cert.offsets.erase(
            std::unique(cert.offsets.begin(), cert.offsets.end()),
            cert.offsets.end());
        std::vector<int> cover(n, 0);
        for (long c : cert.offsets)
          for (long s : elements) ++cover[(c + s) % n];
        for (int v : cover)
          if (v != 1)
            throw std::logic_error("automaton cycle failed Z_n verification");
        return {std::move(cert), -1};
      }
      if (window & kmask) {
        long bit = 0;
        std::uint64_t overlap = window & kmask;
        while (!(overlap & 1)) { overlap >>= 1; ++bit; }
        for (const auto& [s, tt] : seen) dead.insert(s);
        return {std::nullopt, t + bit + 1};
      }
      placements.push_back(t);
      window |= kmask;
      long d = 1;
      while (d <= 63 && (window & (std::uint64_t(1) << (d - 1)))) ++d;
      window = d >= 64 ? 0 : window >> d;
      t += d;
    }
  }
};

}  // namespace

TileResultZ decide_tile_Z(const ZSet& k) {
  TileResultZ res;
  const long diam = k.max();
  if (diam == 0) {
    res.is_tile = true;
    res.certificate = TileCertificate{1, {0}};
    return res;
  }
  if (diam > 63)
    throw std::runtime_error("set diameter exceeds the automaton state width");

  TileScanner scanner;
  scanner.elements = k.elements;
  for (long s : k.elements)
    if (s > 0) scanner.kmask |= std::uint64_t(1) << (s - 1);

  // Empty boundary first: its collision position is the reported witness.
  auto [cert0, collision0] = scanner.scan(0);
  if (cert0) {
    res.is_tile = true;
    res.certificate = std::move(*cert0);
    return res;
  }

  // A tiling of Z need not admit a cut point: translates starting left of
  // the origin may protrude past it. Enumerate every realizable boundary
  // state -- a disjoint union of translates with minimum m in [-diam, -1]
  // leaving the origin uncovered -- and run the forced scan from each.
  // Footprints are tracked over [-diam, diam) so disjointness is exact.
  std::set<std::uint64_t> tried{0};
  std::vector<std::pair<unsigned __int128, std::uint64_t>> translate_bits;
  for (long m = -1; m >= -diam; --m) {
    bool covers_origin = false;
    unsigned __int128 occ = 0;
    std::uint64_t window = 0;
    for (long s : k.elements) {
      long pos = m + s;
      if (pos == 0) { covers_origin = true; break; }
      occ |= static_cast<unsigned __int128>(1) << (pos + diam);
      if (pos >= 1) window |= std::uint64_t(1) << (pos - 1);
    }
    if (!covers_origin) translate_bits.emplace_back(occ, window);
  }

  constexpr long kStateBudget = 1 << 21;
  long states = 0;
  std::optional<TileCertificate> found;
  std::function<bool(std::size_t, unsigned __int128, std::uint64_t)> dfs =
      [&](std::size_t i, unsigned __int128 occ, std::uint64_t window) {
        if (i == translate_bits.size()) {
          if (++states > kStateBudget)
            throw std::runtime_error("tiling automaton exceeded state budget");
          if (window && tried.insert(window).second &&
              !scanner.dead.count(window)) {
            auto [cert, ignored] = scanner.scan(window);
            if (cert) {
              found = std::move(cert);
              return true;
            }
          }
          return false;
        }
        if (dfs(i + 1, occ, window)) return true;
        const auto& [tocc, twin] = translate_bits[i];
        if ((occ & tocc) == 0 && dfs(i + 1, occ | tocc, window | twin))
          return true;
        return false;
      };
  dfs(0, 0, 0);

  if (found) {
    res.is_tile = true;
    res.certificate = std::move(*found);
  } else {
    res.is_tile = false;
    res.collision = collision0;
  }
  return res;
}

namespace {

bool cover_backtrack(const std::vector<long>& kmod, long n,
                     std::vector<bool>& covered, std::vector<long>& chosen,
                     long remaining) {
  if (remaining == 0) return true;
  long r = 0;
  while (covered[r]) ++r;
  for (long s : kmod) {
    long t = ((r - s) % n + n) % n;
    bool ok = true;
    for (long s2 : kmod)
      if (covered[(t + s2) % n]) { ok = false; break; }
    if (!ok) continue;
    for (long s2 : kmod) covered[(t + s2) % n] = true;
    chosen.push_back(t);
    if (cover_backtrack(kmod, n, covered, chosen, remaining - kmod.size()))
      return true;
    chosen.pop_back();
    for (long s2 : kmod) covered[(t + s2) % n] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<long>> tile_Zn_exact_cover(const ZSet& k, long n) {
  if (n <= 0) throw BadModulus();
  std::vector<long> kmod;
  std::set<long> distinct;
  for (long s : k.elements) {
    long r = ((s % n) + n) % n;
    if (!distinct.insert(r).second) throw BadModulus();
    kmod.push_back(r);
  }
  if (n % static_cast<long>(k.size()) != 0) return std::nullopt;
  std::vector<bool> covered(n, false);
  std::vector<long> chosen;
  if (!cover_backtrack(kmod, n, covered, chosen, n)) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

bool is_arithmetic_Zn(const ZSet& k, long n) {
  if (n <= static_cast<long>(k.size())) throw ModulusTooSmall();
  IntPoly g = poly_gcd(mask_polynomial(k), IntPoly::x_pow_minus_one(n));
  return g.degree() >= 1;
}

std::optional<std::pair<long, std::vector<Int>>> integral_periodic_solution(
    const ZSet& k) {
  std::optional<unsigned long> m;
  for (unsigned long d : cyclotomic_divisors(mask_polynomial(k)))
    if (d >= 2) { m = d; break; }
  if (!m) return std::nullopt;

  const long kk = static_cast<long>(k.size());
  const long n = static_cast<long>(*m) * ((kk + 1 + *m - 1) / *m);
  RatMatrix a = circulant_counts(k, n);
  auto basis = kernel_basis(a);
  if (basis.empty()) throw std::logic_error("singular circulant has empty kernel");
  std::vector<Int> v = clear_denominators(basis.front());
  for (long g = 0; g < n; ++g) {
    Int sum = 0;
    for (long s : k.elements) sum += v[(s + g) % n];
    if (sum != 0) throw std::logic_error("kernel vector fails cyclic equations");
  }
  return std::make_pair(n, std::move(v));
}

SequenceWindow extend_recurrence(const ZSet& k, const std::vector<Rat>& initial,
                                 long lo, long hi) {
  const long top = k.max();
  if (static_cast<long>(initial.size()) != top) throw WrongInitialCount();
  if (lo > hi) throw std::invalid_argument("empty window");

  const long full_lo = std::min(lo, 0L);
  const long full_hi = std::max(hi, top - 1);
  std::vector<Rat> x(full_hi - full_lo + 1, Rat(0));
  auto at = [&](long i) -> Rat& { return x[i - full_lo]; };
  for (long i = 0; i < top; ++i) at(i) = initial[i];
  for (long n = top; n <= full_hi; ++n) {
    Rat s = 0;
    for (std::size_t i = 0; i + 1 < k.elements.size(); ++i)
      s += at(n - top + k.elements[i]);
    at(n) = -s;
  }
  for (long n = -1; n >= full_lo; --n) {
    Rat s = 0;
    for (std::size_t i = 1; i < k.elements.size(); ++i)
      s += at(n + k.elements[i]);
    at(n) = -s;
  }

  SequenceWindow w;
  w.lo = lo;
  w.hi = hi;
  w.values.assign(x.begin() + (lo - full_lo), x.begin() + (hi - full_lo + 1));
  return w;
}

namespace {

std::vector<std::complex<double>> solve_complex(
    std::vector<std::vector<std::complex<double>>> a,
    std::vector<std::complex<double>> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    for (std::size_t r = col + 1; r < n; ++r) {
      auto f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<std::complex<double>> x(n);
  for (std::size_t r = n; r-- > 0;) {
    auto s = b[r];
    for (std::size_t c = r + 1; c < n; ++c) s -= a[r][c] * x[c];
    x[r] = s / a[r][r];
  }
  return x;
}

constexpr double kCircleTol = 1e-9;

}  // namespace

BoundednessReport classify_boundedness(const ZSet& k,
                                       const std::vector<Rat>& initial,
                                       double tol) {
  const long top = k.max();
  if (static_cast<long>(initial.size()) != top) throw WrongInitialCount();

  auto roots = numeric_roots(mask_polynomial(k));
  // Confluent basis columns n^p * alpha^n, p < multiplicity.
  std::vector<RootCoefficient> cols;
  for (const auto& r : roots)
    for (int p = 0; p < r.multiplicity; ++p)
      cols.push_back({r.value, p, std::abs(std::abs(r.value) - 1.0) < kCircleTol, 0.0});

  std::vector<std::vector<std::complex<double>>> a(
      top, std::vector<std::complex<double>>(top));
  std::vector<std::complex<double>> b(top);
  for (long n = 0; n < top; ++n) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      double np = (cols[j].power == 0) ? 1.0 : std::pow(double(n), cols[j].power);
      a[n][j] = np * std::pow(cols[j].root, double(n));
    }
    b[n] = static_cast<double>(initial[n]);
  }
  auto coef = solve_complex(std::move(a), std::move(b));
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j].coefficient = coef[j];

  BoundednessReport rep;
  rep.root_data = cols;
  bool unbounded = false, inconclusive = false;
  for (const auto& c : cols) {
    if (c.on_circle) continue;
    double mag = std::abs(c.coefficient);
    if (mag > 10 * tol) unbounded = true;
    else if (mag >= tol) inconclusive = true;
  }
  rep.verdict = unbounded ? BoundedVerdict::Unbounded
              : inconclusive ? BoundedVerdict::Inconclusive
                             : BoundedVerdict::Bounded;
  return rep;
}

NumericWindow make_bounded_solution(const ZSet& k, long lo, long hi) {
  if (count_unit_circle_roots(mask_polynomial(k)) == 0) throw NotBArithmetic();
  if (lo > hi) throw std::invalid_argument("empty window");

  std::vector<std::complex<double>> circle;
  for (const auto& r : numeric_roots(mask_polynomial(k)))
    if (std::abs(std::abs(r.value) - 1.0) < kCircleTol) circle.push_back(r.value);

  NumericWindow w;
  w.lo = lo;
  w.hi = hi;
  w.values.resize(hi - lo + 1);
  for (long n = lo; n <= hi; ++n) {
    std::complex<double> s = 0;
    for (const auto& z : circle) s += std::pow(z, double(n));
    w.values[n - lo] = s.real();
  }

  double max_abs = 1.0;
  for (double v : w.values) max_abs = std::max(max_abs, std::abs(v));
  for (long g = lo; g + k.max() <= hi; ++g) {
    double s = 0;
    for (long e : k.elements) s += w.values[g + e - lo];
    w.max_residual = std::max(w.max_residual, std::abs(s) / max_abs);
  }
  return w;
}

SequenceWindow tiling_to_solution(const ZSet& k, const TileCertificate& cert,
                                  long lo, long hi) {
  const long n = cert.period;
  if (n <= 0) throw BadCertificate();
  std::vector<int> cover(n, 0);
  for (long c : cert.offsets) {
    if (c < 0 || c >= n) throw BadCertificate();
    for (long s : k.elements) ++cover[(c + s) % n];
  }
  for (int v : cover)
    if (v != 1) throw BadCertificate();

  std::set<long> offsets(cert.offsets.begin(), cert.offsets.end());
  SequenceWindow w;
  w.lo = lo;
  w.hi = hi;
  const long km1 = static_cast<long>(k.size()) - 1;
  for (long g = lo; g <= hi; ++g) {
    long r = ((-g) % n + n) % n;
    w.values.emplace_back(offsets.count(r) ? km1 : -1);
  }
  for (long g = lo; g + k.max() <= hi; ++g) {
    Rat s = 0;
    for (long e : k.elements) s += w.values[g + e - lo];
    if (s != 0) throw std::logic_error("tiling solution failed equation check");
  }
  return w;
}

ZSet family_parith_nontile(long p) {
  if (p <= 3 || !is_prime(p)) throw BadParameters("p must be a prime > 3");
  // Phi_6 * (1 + x + x^p + x^{p+1} + ... + x^{2p-3}); the product has 0/1
  // coefficients and its exponent set is the family member.
  std::vector<Int> f(2 * p - 2, Int(0));
  f[0] = 1;
  f[1] = 1;
  for (long i = 0; i <= p - 3; ++i) f[p + i] = 1;
  IntPoly prod = cyclotomic(6) * IntPoly(std::move(f));
  std::vector<long> elems;
  for (int i = 0; i <= prod.degree(); ++i) {
    Int c = prod.coeff(i);
    if (c == 1) elems.push_back(i);
    else if (c != 0) throw std::logic_error("family polynomial not 0/1");
  }
  return normalize_set(std::move(elems));
}

ZSet family_parith_nontile_composite(long p, long d) {
  if (!is_prime(p)) throw BadParameters("p must be prime");
  if (d <= 1) throw BadParameters("d must exceed 1");
  std::set<long> removed;
  for (long j = 1; j <= d; ++j) removed.insert(j * p + j - 1);
  std::vector<long> elems;
  for (long i = 0; i < d * p + d; ++i)
    if (!removed.count(i)) elems.push_back(i);
  return normalize_set(std::move(elems));
}

}  // namespace arith
