#include "k3nl/chern.hpp"

#include <fstream>
#include <sstream>

namespace k3nl {

NetInvariants net_invariants(const SurfaceChernData& x) {
  const Integer twice = 9 * x.alpha2 + 9 * x.alpha_c1 + 2 * x.c1sq;
  if (twice % 2 != 0) throw DomainError("9a^2 + 9a.c1 + 2c1^2 must be even");
  return {twice / 2 + 1, 3 * x.alpha2 + x.alpha_c1, 3 * x.alpha2 + 2 * x.alpha_c1 + x.c2};
}

FiberCounts net_counts(const SurfaceChernData& data, const Integer& family_degree) {
  if (family_degree <= 0) throw DomainError("family degree must be positive");
  const auto [g, d, e] = net_invariants(data);
  const Integer a2 = 2 * g - d + 2 * (e - 1);
  const Rational a11 = Rational(d - 3 * g - e * (e - 1)) +
                       Rational(3, 2) * Rational((e - 1) * (e - 2));
  return {family_degree * a2, family_degree * to_integer(a11, "binodal count")};
}

// --- P2Class -----------------------------------------------------------------

P2Class P2Class::operator+(const P2Class& o) const {
  return {c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2]};
}

P2Class P2Class::operator-(const P2Class& o) const {
  return {c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2]};
}

P2Class P2Class::operator-() const { return {-c_[0], -c_[1], -c_[2]}; }

P2Class P2Class::operator*(const P2Class& o) const {
  return {c_[0] * o.c_[0], c_[0] * o.c_[1] + c_[1] * o.c_[0],
          c_[0] * o.c_[2] + c_[1] * o.c_[1] + c_[2] * o.c_[0]};
}

P2Class operator*(const Rational& s, const P2Class& x) {
  return {s * x.c_[0], s * x.c_[1], s * x.c_[2]};
}

std::string P2Class::to_string() const {
  return k3nl::to_string(c_[0]) + " " + k3nl::to_string(c_[1]) + " " + k3nl::to_string(c_[2]);
}

// --- tables --------------------------------------------------------------------

const std::array<const char*, 6>& UnigonalTable::names() {
  static const std::array<const char*, 6> n = {"h_alpha1",   "h_alpha2",       "h_alpha3",
                                               "h_alpha1sq", "h_alpha1alpha2", "delta"};
  return n;
}

const P2Class& UnigonalTable::at(const std::string& name) const {
  auto it = entries.find(name);
  if (it == entries.end()) throw DomainError("unigonal table is missing '" + name + "'");
  return it->second;
}

void UnigonalTable::require_complete() const {
  for (const char* n : names()) at(n);
}

UnigonalTable UnigonalTable::standard() {
  UnigonalTable t;
  t.entries["h_alpha1"] = P2Class::constant(18);
  t.entries["h_alpha2"] = P2Class::zeta(210);
  t.entries["h_alpha3"] = P2Class::zeta2(-450);
  t.entries["h_alpha1sq"] = P2Class::zeta(36);
  t.entries["h_alpha1alpha2"] = P2Class::zeta2(-600);
  t.entries["delta"] = P2Class::zeta(264);
  return t;
}

UnigonalTable UnigonalTable::zero() {
  UnigonalTable t;
  for (const char* n : names()) t.entries[n] = P2Class();
  return t;
}

UnigonalTable read_unigonal_table(std::istream& in) {
  UnigonalTable t;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string name, a, b, c, extra;
    if (!(fields >> name)) continue;
    if (!(fields >> a >> b >> c) || (fields >> extra)) {
      throw DomainError("unigonal table line " + std::to_string(lineno) +
                        ": expected 'name c0 c1 c2'");
    }
    try {
      t.entries[name] = P2Class(parse_rational(a), parse_rational(b), parse_rational(c));
    } catch (const DomainError& err) {
      throw DomainError("unigonal table line " + std::to_string(lineno) + ": " + err.what());
    }
  }
  return t;
}

UnigonalTable load_unigonal_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open unigonal table '" + path + "'");
  return read_unigonal_table(in);
}

void write_unigonal_table(std::ostream& out, const UnigonalTable& table) {
  for (const auto& [name, value] : table.entries) out << name << ' ' << value.to_string() << '\n';
}

// --- unigonal family -------------------------------------------------------------

bool table_is_consistent(const UnigonalTable& t, const BaseClasses& base) {
  return t.at("delta") == t.at("h_alpha1") * base.beta1 + t.at("h_alpha2");
}

Integer unigonal_a2(const UnigonalTable& t, const BaseClasses& base) {
  t.require_complete();
  const P2Class& a1 = t.at("h_alpha1");
  const P2Class sq_plus = t.at("h_alpha1sq") + t.at("h_alpha2");
  const P2Class total = Rational(4) * (a1 * base.beta1 * base.beta1) +
                        Rational(2) * (sq_plus * base.beta1) - Rational(2) * (a1 * base.beta2) +
                        Rational(2) * t.at("h_alpha1alpha2");
  return to_integer(total.degree(), "cusp count");
}

Integer unigonal_double_point(const UnigonalTable& t, const BaseClasses& base) {
  t.require_complete();
  const P2Class& a1 = t.at("h_alpha1");
  const P2Class& delta = t.at("delta");
  const P2Class sq_plus = t.at("h_alpha1sq") + t.at("h_alpha2");
  const P2Class total =
      delta * delta - base.beta1 * delta - Rational(2) * t.at("h_alpha1alpha2") -
      t.at("h_alpha3") - Rational(2) * (sq_plus * base.beta1) +
      a1 * (Rational(-4) * (base.beta1 * base.beta1) + Rational(3) * base.beta2);
  return to_integer(total.degree(), "double point degree");
}

FiberCounts unigonal_counts(const UnigonalTable& t, const BaseClasses& base) {
  const Integer a2 = unigonal_a2(t, base);
  const Integer dp = unigonal_double_point(t, base);
  if (dp % 2 != 0) throw ComputationError("double point degree " + dp.str() + " is odd");
  return {a2, dp / 2 - a2};
}

}  // namespace k3nl
