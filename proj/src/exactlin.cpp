#include "arith/exactlin.hpp"

#include <algorithm>

namespace arith {

RatMatrix circulant_from_set(const ZSet& k, long n) {
  if (n <= 0) throw BadModulus();
  std::vector<bool> seen(n, false);
  for (long s : k.elements) {
    long r = ((s % n) + n) % n;
    if (seen[r]) throw BadModulus();
    seen[r] = true;
  }
  return circulant_counts(k, n);
}

RatMatrix circulant_counts(const ZSet& k, long n) {
  if (n <= 0) throw BadModulus();
  RatMatrix m(n, n);
  for (long g = 0; g < n; ++g)
    for (long s : k.elements) m.at(g, (s + g) % n) += 1;
  return m;
}

namespace {

struct Echelon {
  std::vector<std::vector<Int>> a;  // echelon rows (integer, fraction-free)
  std::vector<std::size_t> pivot_cols;
  std::size_t cols = 0;
};

Echelon bareiss(const RatMatrix& m) {
  Echelon e;
  e.cols = m.cols();
  // Common-denominator integer copy, row by row.
  std::vector<std::vector<Int>> a(m.rows(), std::vector<Int>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Int l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c)
      l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(m.at(r, c)));
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Rat v = m.at(r, c) * Rat(l);
      a[r][c] = boost::multiprecision::numerator(v);
    }
  }

  Int prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && a[p][col] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[row], a[p]);
    for (std::size_t i = row + 1; i < m.rows(); ++i) {
      for (std::size_t j = col + 1; j < m.cols(); ++j)
        a[i][j] = (a[row][col] * a[i][j] - a[i][col] * a[row][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[row][col];
    e.pivot_cols.push_back(col);
    ++row;
  }
  a.resize(row);
  e.a = std::move(a);
  return e;
}

}  // namespace

std::size_t rank(const RatMatrix& m) { return bareiss(m).pivot_cols.size(); }

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  Echelon e = bareiss(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector x(m.cols(), Rat(0));
    x[f] = 1;
    // Back-substitute pivot variables from the echelon rows.
    for (std::size_t t = e.pivot_cols.size(); t-- > 0;) {
      std::size_t p = e.pivot_cols[t];
      Rat s = 0;
      for (std::size_t j = p + 1; j < m.cols(); ++j)
        if (e.a[t][j] != 0 && x[j] != 0) s += Rat(e.a[t][j]) * x[j];
      x[p] = -s / Rat(e.a[t][p]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<Int> clear_denominators(const RatVector& v) {
  bool nonzero = false;
  Int l = 1;
  for (const Rat& r : v) {
    if (r != 0) nonzero = true;
    l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(r));
  }
  if (!nonzero) throw ZeroVector();
  std::vector<Int> out(v.size());
  Int g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rat s = v[i] * Rat(l);
    out[i] = boost::multiprecision::numerator(s);
    g = boost::multiprecision::gcd(g, out[i]);
  }
  for (Int& x : out) x /= g;
  for (const Int& x : out) {
    if (x == 0) continue;
    if (x < 0)
      for (Int& y : out) y = -y;
    break;
  }
  return out;
}

}  // namespace arith
