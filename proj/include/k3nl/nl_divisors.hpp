#pragma once

// Noether-Lefschetz divisor bookkeeping for a genus-g polarization L:
// a key (d, n) stands for a class a with a.L = d and a^2 = n.

#include <string_view>
#include <vector>

#include "k3nl/arith.hpp"

namespace k3nl {

struct NLKey {
  int g = 3;
  Integer d = 0;
  Integer n = 0;
};

/// Determinant of the rank-two Gram matrix [[2g-2, d], [d, n]].
Integer delta(const NLKey& key);

struct NLVectorData {
  /// Delta / (4g - 4), half the square of the projection of a to L^perp.
  Rational half_norm;
  /// Multiple of the generator of Z/(2g-2), in [0, 2g-3].
  Integer disc_class;
  bool multiplicity_two = false;
};

/// Throws DomainError when delta >= 0.
NLVectorData nl_vector_data(const NLKey& key);

/// d = d' mod 2g-2 and d^2 - 2n(g-1) = d'^2 - 2n'(g-1).
bool prim_equiv(int g, const Integer& d1, const Integer& n1, const Integer& d2,
                const Integer& n2);

/// Which coefficient multiplies x in (2g-2) y = d - x * (.):
/// the class representative's n (as written) or its d (corrected).
enum class MuVariant { as_written, d_corrected };

MuVariant parse_mu_variant(std::string_view name);
std::string_view to_string(MuVariant v);

/// Number of integer pairs (x, y) with
///   (d_i^2 - 2 n_i (g-1)) x^2 = d^2 - 2n(g-1),  (2g-2) y = d - x * (d_i or n_i).
int mu_coefficient(int g, const Integer& d, const Integer& n, const Integer& di,
                   const Integer& ni, MuVariant variant = MuVariant::d_corrected);

struct TriangularTerm {
  Integer d;
  Integer n;
  Integer delta;
  int mu = 0;
};

/// Primitive classes (d_i in [0, 2g-3], n_i even) with positive mu, smallest
/// |delta_i| first, then d_i ascending. Throws DomainError for delta >= 0 or odd n.
std::vector<TriangularTerm> triangular_decomposition(const NLKey& key,
                                                     MuVariant variant = MuVariant::d_corrected);

}  // namespace k3nl
