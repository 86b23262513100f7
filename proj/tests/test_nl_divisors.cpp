#include <doctest.h>

#include <algorithm>
#include <random>

#include "k3nl/nl_divisors.hpp"
#include "k3nl/orbit.hpp"

using namespace k3nl;

namespace {

using Class = std::pair<Integer, Integer>;

std::vector<Class> classes(const std::vector<TriangularTerm>& terms) {
  std::vector<Class> out;
  for (const auto& t : terms) out.emplace_back(t.d, t.n);
  return out;
}

bool same_terms(const std::vector<TriangularTerm>& a, const std::vector<TriangularTerm>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].d != b[i].d || a[i].n != b[i].n || a[i].mu != b[i].mu) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("delta") {
  CHECK(delta({6, 0, 0}) == 0);
  CHECK(delta({6, 0, -2}) == -20);
  CHECK(delta({6, 5, 2}) == -5);
  CHECK(delta({9, 7, -4}) == delta({9, -7, -4}));
}

TEST_CASE("vector data") {
  auto a = nl_vector_data({6, 0, -2});
  CHECK(a.half_norm == -1);
  CHECK(a.disc_class == 0);
  CHECK(a.multiplicity_two);

  auto b = nl_vector_data({6, 5, 2});
  CHECK(b.half_norm == Rational(-1, 4));
  CHECK(b.disc_class == 5);
  CHECK(b.multiplicity_two);

  auto c = nl_vector_data({6, 1, 0});
  CHECK(c.disc_class == 1);
  CHECK_FALSE(c.multiplicity_two);

  CHECK_THROWS_AS(nl_vector_data({6, 0, 0}), DomainError);
  CHECK_THROWS_AS(nl_vector_data({6, 1, 2}), DomainError);
}

TEST_CASE("prim_equiv") {
  CHECK(prim_equiv(6, 3, 4, 3, 4));
  for (int g : {3, 6, 11}) {
    for (int d = -5; d <= 5; ++d) {
      for (int n = -6; n <= 6; n += 2) {
        Integer d2 = d + 2 * g - 2;
        Integer n2 = n + 2 * d + 2 * g - 2;
        CHECK(prim_equiv(g, d, n, d2, n2));
      }
    }
  }
  CHECK_FALSE(prim_equiv(6, 0, -2, 5, 2));
}

TEST_CASE("mu coefficient") {
  CHECK(mu_coefficient(6, 0, -2, 5, 2) == 2);
  CHECK(mu_coefficient(6, 0, -2, 0, -2) == 2);
  CHECK(mu_coefficient(6, 0, -2, 1, -2) == 0);  // 20 / 21 is not a square
  // The as-written rule loses the x = +-2 solutions: y = (0 -+ 2*2) / 10.
  CHECK(mu_coefficient(6, 0, -2, 5, 2, MuVariant::as_written) == 0);
  CHECK_THROWS_AS(mu_coefficient(6, 0, -2, 0, 2), DomainError);
}

TEST_CASE("triangular decomposition examples") {
  auto six = triangular_decomposition({6, 0, -2});
  // |delta| = 5 sorts before |delta| = 20
  REQUIRE(six.size() == 2);
  CHECK(six[0].d == 5);
  CHECK(six[0].n == 2);
  CHECK(six[0].delta == -5);
  CHECK(six[0].mu == 2);
  CHECK(six[1].d == 0);
  CHECK(six[1].n == -2);
  CHECK(six[1].delta == -20);
  CHECK(six[1].mu == 2);

  auto five = triangular_decomposition({5, 0, -2});
  REQUIRE(five.size() == 1);
  CHECK(five[0].d == 0);
  CHECK(five[0].n == -2);
  CHECK(five[0].mu == 2);

  // D = 1: only x = 1 hits (1, 0) and only x = -1 hits (3, 2) ~ (-1, 0).
  auto unit = triangular_decomposition({3, 1, 0});
  REQUIRE(unit.size() == 2);
  CHECK(unit[0].d == 1);
  CHECK(unit[0].n == 0);
  CHECK(unit[0].mu == 1);
  CHECK(unit[1].d == 3);
  CHECK(unit[1].n == 2);
  CHECK(unit[1].mu == 1);

  CHECK_THROWS_AS(triangular_decomposition({6, 0, 0}), DomainError);
  CHECK_THROWS_AS(triangular_decomposition({6, 1, -1}), DomainError);
}

TEST_CASE("nodal divisor classes match the orbit classification") {
  for (int g = 3; g <= 40; ++g) {
    auto got = classes(triangular_decomposition({g, 0, -2}));
    std::sort(got.begin(), got.end());
    std::vector<Class> want{{0, -2}};
    if (g % 4 == 2) want.emplace_back(g - 1, (g - 2) / 2);
    CHECK(got == want);
    CHECK(got.size() == nl_component_count(g, Locus::nodal).count());
  }
}

TEST_CASE("decomposition invariances") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int g = std::uniform_int_distribution<int>(3, 20)(rng);
    const int d = std::uniform_int_distribution<int>(-4 * g, 4 * g)(rng);
    const int n = 2 * std::uniform_int_distribution<int>(-2 * g, 2 * g)(rng);
    NLKey key{g, d, n};
    if (delta(key) >= 0) continue;
    auto base = triangular_decomposition(key);
    CHECK(same_terms(base, triangular_decomposition({g, -d, n})));
    NLKey shifted{g, Integer(d + 2 * g - 2), Integer(n + 2 * d + 2 * g - 2)};
    CHECK(same_terms(base, triangular_decomposition(shifted)));
    CHECK(same_terms(base, triangular_decomposition(key)));
  }
}

TEST_CASE("mu stays in {0,1,2}") {
  std::mt19937 rng(5);
  int evaluated = 0;
  while (evaluated < 2000) {
    const int g = std::uniform_int_distribution<int>(3, 25)(rng);
    auto pick = [&](int r) { return std::uniform_int_distribution<int>(-r, r)(rng); };
    Integer d = pick(4 * g), n = pick(4 * g), di = pick(4 * g), ni = pick(4 * g);
    if (di * di - 2 * ni * (g - 1) <= 0) continue;
    for (auto variant : {MuVariant::d_corrected, MuVariant::as_written}) {
      int mu = mu_coefficient(g, d, n, di, ni, variant);
      CHECK(mu >= 0);
      CHECK(mu <= 2);
    }
    ++evaluated;
  }
}

TEST_CASE("odd-square representatives are excluded") {
  // At g = 4 the class (3, 1) satisfies the mu equations but has odd square.
  CHECK(mu_coefficient(4, 0, -2, 3, 1) == 2);
  auto terms = triangular_decomposition({4, 0, -2});
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].d == 0);
}
