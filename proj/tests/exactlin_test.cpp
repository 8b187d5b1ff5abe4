#include <doctest.h>

#include <algorithm>
#include <random>

#include "arith/exactlin.hpp"
#include "arith/zarith.hpp"

using namespace arith;

namespace {

ZSet zset(std::vector<long> v) {
  ZSet k;
  k.elements = std::move(v);
  k.generates = true;
  return k;
}

RatVector mat_vec(const RatMatrix& m, const RatVector& v) {
  RatVector out(m.rows(), Rat(0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out[r] += m.at(r, c) * v[c];
  return out;
}

bool is_zero(const RatVector& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

RatMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  RatMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m.at(r, c) = Rat(num(rng), den(rng));
  return m;
}

}  // namespace

TEST_CASE("circulant layout") {
  RatMatrix m = circulant_from_set(zset({0, 1, 2}), 6);
  CHECK(m.rows() == 6);
  CHECK(m.cols() == 6);
  for (long g = 0; g < 6; ++g)
    for (long c = 0; c < 6; ++c) {
      bool hit = c == g || c == (g + 1) % 6 || c == (g + 2) % 6;
      CHECK(m.at(g, c) == Rat(hit ? 1 : 0));
    }
  CHECK_THROWS_AS(circulant_from_set(zset({0, 2, 6}), 4), BadModulus);

  RatMatrix counts = circulant_counts(zset({0, 2, 6}), 4);
  CHECK(counts.at(0, 0) == Rat(1));
  CHECK(counts.at(0, 2) == Rat(2));  // 2 and 6 collide mod 4
  CHECK(counts.at(0, 1) == Rat(0));
}

TEST_CASE("rank and kernel of the mod-6 interval circulant") {
  RatMatrix m = circulant_from_set(zset({0, 1, 2}), 6);
  CHECK(rank(m) == 4);
  auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 2);
  for (const auto& v : ker) {
    CHECK(v.size() == 6);
    CHECK(!is_zero(v));
    CHECK(is_zero(mat_vec(m, v)));
  }
}

TEST_CASE("full-rank circulant has empty kernel") {
  RatMatrix m = circulant_from_set(zset({0, 1, 3}), 5);
  CHECK(rank(m) == 5);
  CHECK(kernel_basis(m).empty());
}

TEST_CASE("rank-nullity on random matrices") {
  std::mt19937 rng(321);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t rows = 1 + trial % 6, cols = 1 + (trial * 7) % 6;
    RatMatrix m = random_matrix(rng, rows, cols);
    auto ker = kernel_basis(m);
    CHECK(rank(m) + ker.size() == cols);
    for (const auto& v : ker) {
      CHECK(!is_zero(v));
      CHECK(is_zero(mat_vec(m, v)));
    }
  }
}

TEST_CASE("circulant singularity matches the polynomial gcd criterion") {
  std::mt19937 rng(555);
  for (int trial = 0; trial < 80; ++trial) {
    long n = 4 + trial % 9;
    std::uniform_int_distribution<long> pick(1, n - 1);
    std::vector<long> els{0};
    while (static_cast<long>(els.size()) < 3) {
      long e = pick(rng);
      if (std::find(els.begin(), els.end(), e) == els.end()) els.push_back(e);
    }
    std::sort(els.begin(), els.end());
    ZSet k = zset(els);
    bool singular = rank(circulant_from_set(k, n)) < static_cast<std::size_t>(n);
    bool gcd_nontrivial =
        poly_gcd(mask_polynomial(k), IntPoly::x_pow_minus_one(n)).degree() > 0;
    CHECK(singular == gcd_nontrivial);
  }
}

TEST_CASE("clear_denominators") {
  CHECK(clear_denominators({Rat(1, 2), Rat(1, 3)}) ==
        std::vector<Int>{3, 2});
  CHECK(clear_denominators({Rat(-2, 4), Rat(1, 4)}) ==
        std::vector<Int>{2, -1});
  CHECK(clear_denominators({Rat(0), Rat(-3), Rat(6)}) ==
        std::vector<Int>{0, 1, -2});
  CHECK(clear_denominators({Rat(5)}) == std::vector<Int>{1});
  CHECK_THROWS_AS(clear_denominators({Rat(0), Rat(0)}), ZeroVector);

  std::mt19937 rng(42);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
  for (int trial = 0; trial < 50; ++trial) {
    RatVector v(4);
    bool nonzero = false;
    for (auto& x : v) {
      x = Rat(num(rng), den(rng));
      if (x != 0) nonzero = true;
    }
    if (!nonzero) continue;
    auto w = clear_denominators(v);
    // Primitive, first nonzero positive, and proportional to the input.
    Int g = 0;
    for (const Int& x : w) g = boost::multiprecision::gcd(g, x);
    CHECK(g == 1);
    std::size_t first = 0;
    while (w[first] == 0) ++first;
    CHECK(w[first] > 0);
    Rat scale = Rat(w[first]) / v[first];
    for (std::size_t i = 0; i < v.size(); ++i)
      CHECK(Rat(w[i]) == v[i] * scale);
  }
}
