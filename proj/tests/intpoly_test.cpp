#include <doctest.h>

#include <random>

#include "arith/intpoly.hpp"

using namespace arith;

namespace {

// Independent long-division oracle over Q: quotient and remainder.
std::pair<std::vector<Rat>, std::vector<Rat>> long_division(const IntPoly& p,
                                                            const IntPoly& d) {
  std::vector<Rat> rem(p.coeffs().begin(), p.coeffs().end());
  std::vector<Rat> quot(std::max(0, p.degree() - d.degree() + 1), Rat(0));
  while (static_cast<int>(rem.size()) - 1 >= d.degree()) {
    if (rem.back() == 0) { rem.pop_back(); continue; }
    int shift = static_cast<int>(rem.size()) - 1 - d.degree();
    Rat q = rem.back() / Rat(d.leading());
    quot[shift] = q;
    for (int j = 0; j <= d.degree(); ++j)
      rem[shift + j] -= q * Rat(d.coeff(j));
    rem.pop_back();
  }
  return {quot, rem};
}

bool divides_oracle(const IntPoly& p, const IntPoly& d) {
  auto [q, r] = long_division(p, d);
  for (const Rat& c : r)
    if (c != 0) return false;
  return true;
}

IntPoly random_poly(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::vector<Int> c(deg(rng) + 1);
  for (auto& x : c) x = coef(rng);
  IntPoly p(std::move(c));
  return p.is_zero() ? IntPoly{1} : p;
}

}  // namespace

TEST_CASE("ring arithmetic") {
  IntPoly a{1, 1};        // 1+x
  IntPoly b{1, 1, 1};     // 1+x+x^2
  CHECK(a * b == IntPoly{1, 2, 2, 1});
  CHECK(a + IntPoly() == a);
  CHECK((a - a).is_zero());
  CHECK((a * b).degree() == a.degree() + b.degree());

  // Phi_6 times the p=5 cofactor expands to the {0,3,5,7,9} mask polynomial.
  IntPoly phi6{1, -1, 1};
  IntPoly cof{1, 1, 0, 0, 0, 1, 1, 1};
  IntPoly mask{1, 0, 0, 1, 0, 1, 0, 1, 0, 1};
  CHECK(phi6 * cof == mask);
  CHECK(divides_oracle(mask, phi6));
}

TEST_CASE("exact division") {
  IntPoly b{1, 1, 1};
  CHECK(*poly_divexact(b, b) == IntPoly{1});
  CHECK(!poly_divexact(IntPoly{1, 1, 0, 1}, b).has_value());
  CHECK(!divides_oracle(IntPoly{1, 1, 0, 1}, b));

  IntPoly mask{1, 0, 0, 1, 0, 1, 0, 1, 0, 1};
  auto q = poly_divexact(mask, IntPoly{1, -1, 1});
  REQUIRE(q.has_value());
  CHECK(*q == IntPoly{1, 1, 0, 0, 0, 1, 1, 1});
}

TEST_CASE("divexact inverts multiplication on random inputs") {
  std::mt19937 rng(12345);
  for (int i = 0; i < 200; ++i) {
    IntPoly p = random_poly(rng, 5);
    IntPoly q = random_poly(rng, 5);
    auto back = poly_divexact(p * q, q);
    REQUIRE(back.has_value());
    CHECK(*back == p);
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == IntPoly{-1, 1});
  CHECK(cyclotomic(3) == IntPoly{1, 1, 1});
  CHECK(cyclotomic(6) == IntPoly{1, -1, 1});

  for (unsigned long m = 1; m <= 200; ++m) {
    CHECK(cyclotomic(m).degree() == static_cast<int>(euler_phi(m)));
    IntPoly prod{1};
    for (unsigned long d = 1; d <= m; ++d)
      if (m % d == 0) prod = prod * cyclotomic(d);
    CHECK(prod == IntPoly::x_pow_minus_one(m));
  }
}

TEST_CASE("cyclotomic divisor scan") {
  CHECK(cyclotomic_divisors(IntPoly{1, 1, 1}) == std::vector<unsigned long>{3});
  CHECK(cyclotomic_divisors(IntPoly{1, 1, 0, 1, 0, 1, 1}).empty());
  CHECK(cyclotomic_divisors(IntPoly{1, 0, 1, 1, 0, 1, 1, 0, 1}) ==
        std::vector<unsigned long>{4, 9});
  // m = 1 is tested too for general polynomials.
  CHECK(cyclotomic_divisors(IntPoly{-1, 1}) == std::vector<unsigned long>{1});
}

TEST_CASE("reciprocal") {
  IntPoly ex7{1, 1, 0, 1, 0, 1, 1};
  CHECK(ex7.reciprocal() == ex7);
  CHECK(IntPoly{1, 1, 0, 1}.reciprocal() == IntPoly{1, 0, 1, 1});
  std::mt19937 rng(99);
  for (int i = 0; i < 50; ++i) {
    IntPoly p = random_poly(rng, 6);
    if (p.coeff(0) == 0) continue;
    CHECK(p.reciprocal().reciprocal() == p);
  }
}

TEST_CASE("gcd") {
  IntPoly phi3{1, 1, 1};
  CHECK(poly_gcd(phi3 * IntPoly{1, 1}, phi3 * IntPoly{1, -1}) == phi3);
  CHECK(poly_gcd(phi3, IntPoly::x_pow_minus_one(6)) == phi3);
  CHECK(divides_oracle(IntPoly::x_pow_minus_one(6), phi3));
  for (unsigned n = 1; n <= 12; ++n)
    CHECK(poly_gcd(IntPoly{1, 1, 0, 1}, IntPoly::x_pow_minus_one(n)) == IntPoly{1});
}

TEST_CASE("gcd with reciprocal contains every cyclotomic divisor") {
  std::mt19937 rng(7);
  for (int i = 0; i < 60; ++i) {
    IntPoly p = random_poly(rng, 8);
    if (p.degree() < 1 || p.coeff(0) == 0) continue;
    IntPoly g = poly_gcd(p, p.reciprocal());
    for (unsigned long m : cyclotomic_divisors(p))
      CHECK(divides_oracle(g, cyclotomic(m)));
  }
}

TEST_CASE("sturm counting") {
  CHECK(sturm_count(IntPoly{-2, 0, 1}, Rat(0), Rat(2)) == 1);  // sqrt 2
  CHECK(sturm_count(IntPoly{-1, -3, 1, 1}, Rat(-2), Rat(2)) == 2);
  CHECK(sturm_count(IntPoly{0, 1}, Rat(-2), Rat(2)) == 1);
  // Endpoint membership: (0, 2] contains the root 2 of t-2.
  CHECK(sturm_count(IntPoly{-2, 1}, Rat(0), Rat(2)) == 1);
  CHECK(sturm_count(IntPoly{-2, 1}, Rat(2), Rat(3)) == 0);
  // Bisection oracle agreement for the Example-7-style cubic: the roots lie
  // near -2.170, -0.311, 1.481.
  CHECK(sturm_count(IntPoly{-1, -3, 1, 1}, Rat(-3), Rat(-2)) == 1);
  CHECK(sturm_count(IntPoly{-1, -3, 1, 1}, Rat(-1), Rat(0)) == 1);
  CHECK(sturm_count(IntPoly{-1, -3, 1, 1}, Rat(1), Rat(2)) == 1);
  CHECK_THROWS_AS(sturm_count(IntPoly{1, 1} * IntPoly{1, 1}, Rat(-2), Rat(0)),
                  NotSquarefree);
}

TEST_CASE("unit circle root counting") {
  CHECK(count_unit_circle_roots(IntPoly{1, 1, 1}) == 2);
  CHECK(count_unit_circle_roots(IntPoly{1, 1, 0, 1}) == 0);
  CHECK(count_unit_circle_roots(IntPoly{1, 1, 0, 1, 0, 1, 1}) == 4);
  CHECK(count_unit_circle_roots(IntPoly{-1, 0, 1}) == 2);   // +-1
  CHECK(count_unit_circle_roots(IntPoly{-2, 0, 1}) == 0);   // +-sqrt 2
  // Reciprocal real pairs off the circle must not be counted.
  CHECK(count_unit_circle_roots(IntPoly{1, -3, 1}) == 0);
  for (unsigned long m = 1; m <= 50; ++m)
    CHECK(count_unit_circle_roots(cyclotomic(m)) ==
          static_cast<int>(euler_phi(m)));
}

TEST_CASE("circle count is additive over coprime squarefree factors") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 40; ++i) {
    IntPoly p = squarefree_part(random_poly(rng, 5));
    IntPoly q = squarefree_part(random_poly(rng, 5));
    if (p.degree() < 1 || q.degree() < 1) continue;
    if (poly_gcd(p, q).degree() != 0) continue;
    CHECK(count_unit_circle_roots(p * q) ==
          count_unit_circle_roots(p) + count_unit_circle_roots(q));
  }
}

TEST_CASE("numeric roots") {
  auto r = numeric_roots(IntPoly{1, 1, 1});
  REQUIRE(r.size() == 2);
  for (const auto& rc : r) {
    CHECK(std::abs(rc.value.real() + 0.5) < 1e-9);
    CHECK(std::abs(std::abs(rc.value.imag()) - std::sqrt(3.0) / 2) < 1e-9);
  }

  auto pm = numeric_roots(IntPoly{-1, 0, 1});
  REQUIRE(pm.size() == 2);
  CHECK(std::abs(pm[0].value - std::complex<double>(-1, 0)) < 1e-9);
  CHECK(std::abs(pm[1].value - std::complex<double>(1, 0)) < 1e-9);

  // Example-7 sextic: 2 real roots off the circle, 4 roots on it.
  auto ex7 = numeric_roots(IntPoly{1, 1, 0, 1, 0, 1, 1});
  int on = 0, real_off = 0;
  for (const auto& rc : ex7) {
    if (std::abs(std::abs(rc.value) - 1.0) < 1e-9) ++on;
    else if (std::abs(rc.value.imag()) < 1e-9) ++real_off;
  }
  CHECK(on == 4);
  CHECK(real_off == 2);

  // Multiplicities via exact squarefree decomposition.
  IntPoly sq = IntPoly{1, 1, 1} * IntPoly{1, 1, 1} * IntPoly{-1, 1};
  auto msq = numeric_roots(sq);
  int total = 0;
  for (const auto& rc : msq) total += rc.multiplicity;
  CHECK(total == 5);
  CHECK(msq.size() == 3);
}

TEST_CASE("numeric and exact circle counts agree on mask polynomials") {
  // All mask polynomials of sets K in [0, 12] (0 in K, max in K).
  for (unsigned mask = 1; mask < (1u << 12); ++mask) {
    std::vector<Int> c(13, Int(0));
    c[0] = 1;
    for (int b = 0; b < 12; ++b)
      if (mask & (1u << b)) c[b + 1] = 1;
    IntPoly p(std::move(c));
    int exact = count_unit_circle_roots(p);
    int numeric = 0;
    for (const auto& rc : numeric_roots(p))
      if (std::abs(std::abs(rc.value) - 1.0) < 1e-9) ++numeric;
    CHECK(exact == numeric);
  }
}
