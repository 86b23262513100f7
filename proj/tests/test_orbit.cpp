#include <doctest.h>

#include "k3nl/orbit.hpp"

using namespace k3nl;

namespace {

DiscriminantClass half_class(const IntegralLattice& l, const DiscriminantGroup& group,
                             const std::string& expr) {
  return group.class_of(l.parse_vector(expr).cast<Rational>() / Rational(2));
}

}  // namespace

TEST_CASE("eichler candidates for binodal norm -2") {
  auto a5 = build_standard("LambdaA1", 5);
  auto c5 = eichler_candidates(a5, -2);
  REQUIRE(c5.size() == 1);
  CHECK(c5[0].divisibility == 1);
  CHECK(c5[0].dual_class.is_zero());

  auto a6 = build_standard("LambdaA1", 6);
  auto g6 = discriminant_group(a6);
  auto c6 = eichler_candidates(a6, -2);
  REQUIRE(c6.size() == 2);
  CHECK(c6[0].divisibility == 1);
  CHECK(c6[1].divisibility == 2);
  CHECK(c6[1].dual_class == half_class(a6, g6, "h"));
  for (const auto& c : c6) CHECK(c.dual_class != half_class(a6, g6, "w1"));

  auto a7 = build_standard("LambdaA1", 7);
  auto g7 = discriminant_group(a7);
  auto c7 = eichler_candidates(a7, -2);
  REQUIRE(c7.size() == 2);
  CHECK(c7[1].dual_class == half_class(a7, g7, "h+w1"));

  CHECK_THROWS_AS(eichler_candidates(build_standard("E8neg"), -2), DomainError);
}

TEST_CASE("witnesses from the closed-form recipes") {
  auto a6 = build_standard("LambdaA1", 6);
  auto c6 = eichler_candidates(a6, -2);
  auto w6 = find_witness(a6, c6[1], 12);
  REQUIRE(w6);
  CHECK(*w6 == a6.parse_vector("h+2e2+2f2"));  // h + 2(e2 + (g-2)/4 f2)

  auto a7 = build_standard("LambdaA1", 7);
  auto c7 = eichler_candidates(a7, -2);
  auto w7 = find_witness(a7, c7[1], 14);
  REQUIRE(w7);
  CHECK(*w7 == a7.parse_vector("h+w1+2e2+4f2"));  // ... + 2(e2 + (g+1)/4 f2)

  auto w1 = find_witness(a6, c6[0], 12);
  REQUIRE(w1);
  CHECK(*w1 == a6.parse_vector("e2-f2"));
}

TEST_CASE("infeasible candidate has no witness") {
  auto a6 = build_standard("LambdaA1", 6);
  auto g6 = discriminant_group(a6);
  OrbitCandidate bad{2, half_class(a6, g6, "w1"), -2, std::nullopt};
  CHECK_FALSE(find_witness(a6, bad, 4));
  OrbitCandidate wrong_order{3, half_class(a6, g6, "h"), -18, std::nullopt};
  CHECK_FALSE(find_witness(a6, wrong_order, 4));
}

TEST_CASE("bounded search finds witnesses without recipes") {
  // div-6 cuspidal class at g = 4: lift h/3 + w1/2, corrected by e2 + f2.
  auto a4 = build_standard("LambdaA1", 4);
  auto g4 = discriminant_group(a4);
  auto cands = eichler_candidates(a4, -6);
  const OrbitCandidate* six = nullptr;
  for (const auto& c : cands) {
    if (c.divisibility == 6) six = &c;
  }
  REQUIRE(six);
  LatticeVector hand = a4.parse_vector("2h+3w1+6e2+6f2");
  CHECK(a4.norm(hand) == -6);
  CHECK(divisibility(a4, hand) == 6);
  auto found = find_witness(a4, *six, 8);
  REQUIRE(found);
  CHECK(realizes(a4, g4, *six, *found));
  CHECK((realizes(a4, g4, *six, hand) ||
         realizes(a4, g4, *six, LatticeVector(-hand))));
}

TEST_CASE("nodal component counts") {
  for (int g = 3; g <= 100; ++g) {
    auto r = nl_component_count(g, Locus::nodal);
    CHECK(r.count() == (g % 4 == 2 ? 2u : 1u));
    CHECK(r.components[0].label == "P_{0,-2}");
    if (r.count() == 2) CHECK(r.components[1].label == "P_{g-1,(g-2)/2}");
  }
  CHECK_THROWS_AS(nl_component_count(2, Locus::nodal), DomainError);
}

TEST_CASE("binodal component counts") {
  for (int g = 3; g <= 100; ++g) {
    auto r = nl_component_count(g, Locus::a11);
    const bool two = g % 4 == 2 || g % 4 == 3;
    CHECK(r.count() == (two ? 2u : 1u));
    CHECK(r.components[0].label == "H'");
    if (g % 4 == 2) CHECK(r.components[1].label == "H''");
    if (g % 4 == 3) CHECK(r.components[1].label == "H'''");
  }
  CHECK(nl_component_count(8, Locus::a11).count() == 1);
  CHECK(nl_component_count(6, Locus::a11).count() == 2);
  CHECK(nl_component_count(7, Locus::a11).count() == 2);
}

TEST_CASE("cuspidal component counts") {
  // The div-2 class of w1/2 always survives. A div-6 class h/3 + w1/2 (up to
  // sign) survives exactly when 3 | 2g-2 and q matches, i.e. g = 4 mod 9.
  for (int g = 3; g <= 100; ++g) {
    auto r = nl_component_count(g, Locus::a2);
    CHECK(r.components[0].label == "H_{A_2}");
    CHECK(r.components[0].candidate.divisibility == 2);
    CHECK(r.count() == (g % 9 == 4 ? 2u : 1u));
    if (r.count() == 2) CHECK(r.components[1].candidate.divisibility == 6);
  }
}

TEST_CASE("div-6 cuspidal configuration exists in the K3 lattice at g = 4") {
  // v^2 = -2, v.t1 = 1, v.L = 0 for L = e1 + 3 f1, yet t1 + 2v has
  // divisibility 6 in the complement of L and t1.
  auto k3 = build_standard("K3");
  LatticeVector pol = k3.parse_vector("e1+3f1");
  LatticeVector t1 = k3.basis_vector("t1");
  LatticeVector v = k3.parse_vector("e1-3f1+t1+3t2+3e2+3f2");
  CHECK(k3.norm(v) == -2);
  CHECK(k3.pairing(v, t1) == 1);
  CHECK(k3.pairing(v, pol) == 0);

  LatticeVector w = t1 + 2 * v;
  auto perp = orthogonal_complement(k3, {pol, t1});
  IntVector pairings = perp.embedding.transpose() * k3.gram() * w;
  Integer div = 0;
  for (Eigen::Index i = 0; i < pairings.size(); ++i) div = gcd(div, pairings(i));
  CHECK(k3.norm(w) == -6);
  CHECK(div == 6);
}

TEST_CASE("witness round trip and determinism") {
  for (int g : {5, 6, 7, 8, 13}) {
    for (Locus locus : {Locus::nodal, Locus::a11, Locus::a2}) {
      auto r1 = nl_component_count(g, locus, true);
      auto r2 = nl_component_count(g, locus, true);
      auto group = discriminant_group(r1.lattice);
      REQUIRE(r1.count() == r2.count());
      for (std::size_t i = 0; i < r1.count(); ++i) {
        const auto& c = r1.components[i].candidate;
        CHECK(r1.components[i].label == r2.components[i].label);
        CHECK(c.dual_class == r2.components[i].candidate.dual_class);
        REQUIRE(c.witness);
        CHECK(*c.witness == *r2.components[i].candidate.witness);
        CHECK(realizes(r1.lattice, group, c, *c.witness));
      }
    }
  }
}

TEST_CASE("locus names") {
  CHECK(parse_locus("a11") == Locus::a11);
  CHECK(to_string(parse_locus("nodal")) == "nodal");
  CHECK_THROWS_AS(parse_locus("a3"), DomainError);
}
