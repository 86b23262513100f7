#include <doctest.h>

#include <sstream>

#include "k3nl/chern.hpp"

using namespace k3nl;

namespace {

const SurfaceChernData kAnticanonicalDouble{32, -16, 8, 4};

UnigonalTable only(const std::string& name, const P2Class& value) {
  UnigonalTable t = UnigonalTable::zero();
  t.entries[name] = value;
  return t;
}

}  // namespace

TEST_CASE("net invariants") {
  auto inv = net_invariants(kAnticanonicalDouble);
  CHECK(inv.g == 81);
  CHECK(inv.d == 80);
  CHECK(inv.e == 68);

  auto zero = net_invariants({0, 0, 0, 0});
  CHECK(zero.g == 1);
  CHECK(zero.d == 0);
  CHECK(zero.e == 0);

  CHECK_THROWS_AS(net_invariants({1, 0, 0, 0}), DomainError);
}

TEST_CASE("net counts") {
  auto one = net_counts(kAnticanonicalDouble);
  CHECK(one.a2 == 216);
  CHECK(one.a11 == 1914);

  auto four = net_counts(kAnticanonicalDouble, 4);
  CHECK(four.a2 == 864);
  CHECK(four.a11 == 7656);

  auto zero = net_counts({0, 0, 0, 0}, 7);
  CHECK(zero.a2 == 0);
  CHECK(zero.a11 == 0);

  CHECK_THROWS_AS(net_counts(kAnticanonicalDouble, 0), DomainError);
}

TEST_CASE("P2 class arithmetic truncates at z^3") {
  P2Class z = P2Class::zeta();
  CHECK(z * z == P2Class::zeta2());
  CHECK(z * z * z == P2Class());
  P2Class x(1, 2, 3);
  CHECK(x * P2Class::constant(1) == x);
  CHECK((x * x).degree() == 2 * 3 + 2 * 2);
  CHECK(Rational(1, 2) * x == P2Class(Rational(1, 2), 1, Rational(3, 2)));
}

TEST_CASE("shipped unigonal table") {
  auto t = UnigonalTable::standard();
  CHECK(table_is_consistent(t));  // 264 = 18*3 + 210
  CHECK(unigonal_a2(t) == 816);
  CHECK(unigonal_double_point(t) == 68592);
  auto counts = unigonal_counts(t);
  CHECK(counts.a2 == 816);
  CHECK(counts.a11 == 33480);
  CHECK(counts.a2 >= 0);
  CHECK(counts.a11 >= 0);

  std::stringstream file;
  file << "# comment\n\nh_alpha1 18 0 0\n";
  auto partial = read_unigonal_table(file);
  CHECK_THROWS_AS(unigonal_a2(partial), DomainError);
}

TEST_CASE("individual terms of the cusp formula") {
  // 4 h(a1) b1^2 alone: 4 * 18 * 9
  CHECK(unigonal_a2(only("h_alpha1", P2Class::constant(18))) == 648 - 108);
  CHECK(unigonal_a2(UnigonalTable::zero()) == 0);
  CHECK(unigonal_double_point(UnigonalTable::zero()) == 0);
  CHECK(unigonal_counts(UnigonalTable::zero()).a11 == 0);
  // delta only: 264^2 - 3*264
  CHECK(unigonal_double_point(only("delta", P2Class::zeta(264))) == 68904);
  BaseClasses bare;
  bare.beta2 = P2Class();
  CHECK(unigonal_a2(only("h_alpha1", P2Class::constant(18)), bare) == 648);
}

TEST_CASE("scaled table") {
  UnigonalTable t = UnigonalTable::standard();
  for (auto& [name, value] : t.entries) value = Rational(2) * value;
  CHECK(unigonal_a2(t) == 1632);
  // delta^2 scales by 4, everything else by 2
  CHECK(unigonal_double_point(t) == 4 * 69696 - 2 * 792 + 2 * (1200 + 450 - 1476 - 486));
  CHECK(unigonal_counts(t).a11 == (4 * 69696 - 2 * 792 + 2 * (1200 + 450 - 1476 - 486)) / 2 - 1632);
}

TEST_CASE("table file round trip") {
  std::stringstream buf;
  write_unigonal_table(buf, UnigonalTable::standard());
  auto back = read_unigonal_table(buf);
  CHECK(back.entries == UnigonalTable::standard().entries);

  auto shipped = load_unigonal_table(std::string(K3NL_DATA_DIR) + "/unigonal.tbl");
  CHECK(shipped.entries == UnigonalTable::standard().entries);

  std::stringstream bad("delta 0 264\n");
  CHECK_THROWS_AS(read_unigonal_table(bad), DomainError);
  std::stringstream bad2("delta 0 x 0\n");
  CHECK_THROWS_AS(read_unigonal_table(bad2), DomainError);
}
