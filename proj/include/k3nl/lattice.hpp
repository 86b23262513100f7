#pragma once

// Even integral lattices: construction of the standard K3-related lattices,
// direct sums and rescaling, discriminant groups with their Q/2Z-valued
// quadratic forms, divisibility, dual classes and orthogonal complements.
//
// The negative definite E8 used throughout is the negated Cartan matrix in
// the chain labelling
//
//     t1 - t2 - t3 - t4 - t5 - t6 - t7
//                         |
//                         t8
//
//         t1  t2  t3  t4  t5  t6  t7  t8
//   t1 [  -2   1   0   0   0   0   0   0 ]
//   t2 [   1  -2   1   0   0   0   0   0 ]
//   t3 [   0   1  -2   1   0   0   0   0 ]
//   t4 [   0   0   1  -2   1   0   0   0 ]
//   t5 [   0   0   0   1  -2   1   0   1 ]
//   t6 [   0   0   0   0   1  -2   1   0 ]
//   t7 [   0   0   0   0   0   1  -2   0 ]
//   t8 [   0   0   0   0   1   0   0  -2 ]
//
// so that t1.t2 = 1 and t1.t3 = 0. W7 = t1^perp inside E8(-1) is spanned by
// w1 = t1 + 2 t2 together with t3, ..., t8.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "k3nl/arith.hpp"

namespace k3nl {

/// Coordinates of a lattice vector in the lattice basis.
using LatticeVector = IntVector;

/// Indices of a standard hyperbolic pair (e, f) with e^2 = f^2 = 0, e.f = 1.
struct HyperbolicPlane {
  Eigen::Index e = 0;
  Eigen::Index f = 0;
  friend bool operator==(const HyperbolicPlane&, const HyperbolicPlane&) = default;
};

class IntegralLattice {
 public:
  /// The rank-0 lattice.
  IntegralLattice() = default;

  /// Throws DomainError unless `gram` is square and symmetric, the label
  /// count matches, and (unless `allow_odd`) the diagonal is even.
  IntegralLattice(IntMatrix gram, std::vector<std::string> labels,
                  bool allow_odd = false);

  Eigen::Index rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool is_even() const;

  /// Hyperbolic planes recorded by the construction recipe. Only lattices
  /// assembled from U summands carry them; they are what Eichler-criterion
  /// operations rely on.
  const std::vector<HyperbolicPlane>& hyperbolic_planes() const { return planes_; }
  void set_hyperbolic_planes(std::vector<HyperbolicPlane> planes);

  Integer determinant() const;

  Integer pairing(const LatticeVector& x, const LatticeVector& y) const;
  Rational pairing(const RatVector& x, const RatVector& y) const;
  Integer norm(const LatticeVector& x) const { return pairing(x, x); }

  std::optional<Eigen::Index> index_of(std::string_view label) const;
  LatticeVector basis_vector(std::string_view label) const;
  LatticeVector zero_vector() const { return LatticeVector::Zero(rank()); }

  /// Parses expressions such as "e2+3f2-t1" or "2*w1+t3" over the basis
  /// labels. A comma separated integer list is read as raw coordinates.
  LatticeVector parse_vector(std::string_view text) const;
  std::string format_vector(const LatticeVector& v) const;

 private:
  IntMatrix gram_ = IntMatrix(0, 0);
  std::vector<std::string> labels_;
  std::vector<HyperbolicPlane> planes_;
};

IntegralLattice direct_sum(const IntegralLattice& a, const IntegralLattice& b);

/// Multiplies the form by `t`; throws DomainError for t = 0. Hyperbolic
/// plane records survive only for t = 1.
IntegralLattice rescale(const IntegralLattice& a, const Integer& t);

/// The hyperbolic plane with labels e<i>, f<i>.
IntegralLattice hyperbolic_plane(int index = 1);
/// E8(-1) with labels <prefix>1 ... <prefix>8 in the chain ordering above.
IntegralLattice e8_negative(std::string_view prefix = "t");

/// Names: "U", "E8", "E8neg", "E7neg", "K3", "Uperp", "LambdaG", "LambdaA1".
/// The last two require `g` >= 2. Throws DomainError otherwise.
IntegralLattice build_standard(std::string_view name, std::optional<int> g = std::nullopt);

std::vector<std::string> standard_lattice_names();

// --- discriminant groups -------------------------------------------------

/// An element of a discriminant group as residues modulo the invariant factors.
class DiscriminantClass {
 public:
  DiscriminantClass() = default;
  explicit DiscriminantClass(std::vector<Integer> residues) : residues_(std::move(residues)) {}
  const std::vector<Integer>& residues() const { return residues_; }
  bool is_zero() const;
  std::string to_string() const;
  friend bool operator==(const DiscriminantClass&, const DiscriminantClass&) = default;
  friend bool operator<(const DiscriminantClass& a, const DiscriminantClass& b) {
    return a.residues_ < b.residues_;
  }

 private:
  std::vector<Integer> residues_;
};

struct DiscriminantGroup {
  /// d1 | d2 | ..., each > 1.
  std::vector<Integer> invariant_factors;
  /// Dual-lattice vector for each cyclic generator, in lattice coordinates.
  std::vector<RatVector> generator_lifts;
  /// Row i maps the pairing vector G*x of a dual vector x to its i-th residue.
  IntMatrix class_map;
  /// Gram matrix of the lattice the group belongs to.
  IntMatrix gram;

  Integer order() const;
  Integer exponent() const;
  bool is_trivial() const { return invariant_factors.empty(); }

  DiscriminantClass zero() const;
  DiscriminantClass add(const DiscriminantClass& a, const DiscriminantClass& b) const;
  DiscriminantClass negate(const DiscriminantClass& a) const;
  DiscriminantClass scale(const Integer& k, const DiscriminantClass& a) const;
  Integer order_of(const DiscriminantClass& a) const;

  /// Dual vector representing the class, coordinates reduced into [0, 1).
  RatVector lift(const DiscriminantClass& a) const;
  /// Class of a dual-lattice vector; throws DomainError if `x` is not dual.
  DiscriminantClass class_of(const RatVector& x) const;

  /// All elements in lexicographic residue order.
  std::vector<DiscriminantClass> elements() const;

  /// q(x) = x.x reduced into (-2, 0].
  Rational quadratic(const DiscriminantClass& a) const;
  /// b(x, y) = x.y reduced into [0, 1).
  Rational bilinear(const DiscriminantClass& a, const DiscriminantClass& b) const;

  void validate(const DiscriminantClass& a) const;
};

/// Throws DomainError for degenerate lattices.
DiscriminantGroup discriminant_group(const IntegralLattice& l);

Rational disc_quadratic(const IntegralLattice& l, const DiscriminantClass& x);

/// gcd of the pairings of `v` with all basis vectors. Throws on v = 0.
Integer divisibility(const IntegralLattice& l, const LatticeVector& v);

/// True when the coordinates of v are coprime.
bool is_primitive(const LatticeVector& v);

/// Class of v / div(v). Throws DomainError when v is not primitive.
DiscriminantClass dual_class(const IntegralLattice& l, const DiscriminantGroup& group,
                             const LatticeVector& v);

struct OrthogonalComplement {
  IntegralLattice lattice;
  /// Columns are the complement's basis vectors in coordinates of the ambient lattice.
  IntMatrix embedding;
};

/// Saturated complement of span(vs). Throws DomainError for dependent vs.
OrthogonalComplement orthogonal_complement(const IntegralLattice& l,
                                           const std::vector<LatticeVector>& vs);

// --- text format ---------------------------------------------------------
//   rank N
//   N rows of N integers
//   one line of N labels

IntegralLattice read_lattice(std::istream& in);
void write_lattice(std::ostream& out, const IntegralLattice& l);

}  // namespace k3nl
