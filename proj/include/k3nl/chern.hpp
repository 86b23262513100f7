#pragma once

// Enumerative counts of cuspidal and binodal fibers: the net-of-curves
// formulas on a surface, and the unigonal family computed from pushforwards
// to the plane of lines.

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "k3nl/arith.hpp"

namespace k3nl {

struct SurfaceChernData {
  Integer alpha2;    // alpha^2
  Integer alpha_c1;  // alpha.c1
  Integer c1sq;      // c1^2
  Integer c2;
};

struct NetInvariants {
  Integer g, d, e;
};

/// g = (9a^2 + 9a.c1 + 2c1^2)/2 + 1, d = 3a^2 + a.c1, e = 3a^2 + 2a.c1 + c2.
NetInvariants net_invariants(const SurfaceChernData& data);

struct FiberCounts {
  Integer a2;   // cuspidal
  Integer a11;  // binodal
};

/// a2 = deg (2g - d + 2(e-1)),
/// a11 = deg (d - 3g - e(e-1) + 3/2 (e-1)(e-2)).
FiberCounts net_counts(const SurfaceChernData& data, const Integer& family_degree = 1);

/// Element of Q[z]/(z^3).
class P2Class {
 public:
  P2Class() = default;
  P2Class(Rational c0, Rational c1, Rational c2) : c_{std::move(c0), std::move(c1), std::move(c2)} {}
  static P2Class constant(const Rational& c) { return {c, 0, 0}; }
  static P2Class zeta(const Rational& c = 1) { return {0, c, 0}; }
  static P2Class zeta2(const Rational& c = 1) { return {0, 0, c}; }

  const Rational& operator[](int i) const { return c_[i]; }
  /// Integral over the plane: the z^2 coefficient.
  const Rational& degree() const { return c_[2]; }

  P2Class operator+(const P2Class& o) const;
  P2Class operator-(const P2Class& o) const;
  P2Class operator-() const;
  P2Class operator*(const P2Class& o) const;
  friend P2Class operator*(const Rational& s, const P2Class& x);
  friend bool operator==(const P2Class&, const P2Class&) = default;

  std::string to_string() const;

 private:
  std::array<Rational, 3> c_{};
};

/// Pushforwards along the family map, keyed by
///   h_alpha1, h_alpha2, h_alpha3, h_alpha1sq, h_alpha1alpha2, delta.
struct UnigonalTable {
  std::map<std::string, P2Class> entries;

  static const std::array<const char*, 6>& names();
  /// Throws DomainError naming the first missing entry.
  const P2Class& at(const std::string& name) const;
  void require_complete() const;

  /// The shipped values: 18, 210z, -450z^2, 36z, -600z^2, 264z.
  static UnigonalTable standard();
  static UnigonalTable zero();
};

/// Lines "name c0 c1 c2" with rational coefficients; '#' starts a comment.
UnigonalTable read_unigonal_table(std::istream& in);
UnigonalTable load_unigonal_table(const std::string& path);
void write_unigonal_table(std::ostream& out, const UnigonalTable& table);

/// Chern classes of the tangent bundle of the base; 3z and 3z^2 for the plane.
struct BaseClasses {
  P2Class beta1 = P2Class::zeta(3);
  P2Class beta2 = P2Class::zeta2(3);
};

/// delta = h(alpha1) beta1 + h(alpha2).
bool table_is_consistent(const UnigonalTable& table, const BaseClasses& base = {});

/// deg of 4h(a1)b1^2 + 2h(a1^2 + a2)b1 - 2h(a1)b2 + 2h(a1 a2).
Integer unigonal_a2(const UnigonalTable& table, const BaseClasses& base = {});

/// deg of delta^2 - b1 delta - 2h(a1 a2) - h(a3) - 2h(a1^2 + a2)b1 + h(a1)(-4b1^2 + 3b2).
Integer unigonal_double_point(const UnigonalTable& table, const BaseClasses& base = {});

/// 2(a2 + a11) = deg of the double point class.
FiberCounts unigonal_counts(const UnigonalTable& table, const BaseClasses& base = {});

}  // namespace k3nl
