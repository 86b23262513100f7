#pragma once

// Orbits of primitive vectors under the stable orthogonal group, via the
// Eichler criterion: in a lattice containing two hyperbolic planes, the orbit
// of a primitive v is determined by v^2 and the class of v/div(v).

#include <optional>
#include <string>
#include <vector>

#include "k3nl/lattice.hpp"

namespace k3nl {

struct OrbitCandidate {
  Integer divisibility;
  DiscriminantClass dual_class;
  Integer norm;
  std::optional<LatticeVector> witness;
};

/// All (div, class) pairs compatible with `norm`: class of exact order div,
/// div | norm, and q(class) = norm / div^2 mod 2. Sorted by div, then class.
/// Throws DomainError unless `l` records two hyperbolic planes.
std::vector<OrbitCandidate> eichler_candidates(const IntegralLattice& l, const Integer& norm);

/// True when `v` is primitive with the candidate's norm, divisibility and class.
bool realizes(const IntegralLattice& l, const DiscriminantGroup& group,
              const OrbitCandidate& cand, const LatticeVector& v);

/// Closed-form recipes first, then a bounded search
///   v = div * (lift(class) + a e + b f + c e' + x f')
/// over the first two recorded planes with a, b, c in [-bound, bound] scanned
/// lexicographically and x solved from the norm equation.
std::optional<LatticeVector> find_witness(const IntegralLattice& l, const OrbitCandidate& cand,
                                          int bound);

enum class Locus { nodal, a11, a2 };

Locus parse_locus(std::string_view name);
std::string to_string(Locus locus);

struct NLComponent {
  std::string label;
  OrbitCandidate candidate;
  Rational q_value;
};

struct ComponentCount {
  int g = 0;
  Locus locus = Locus::nodal;
  IntegralLattice lattice;
  std::vector<NLComponent> components;
  std::size_t count() const { return components.size(); }
};

/// Components of the nodal, binodal or cuspidal locus in genus g >= 3.
/// Candidates c and -c describe the same sublattice and are counted once.
/// `witness_bound` <= 0 selects the default 2g.
ComponentCount nl_component_count(int g, Locus locus, bool with_witnesses = false,
                                  int witness_bound = 0);

}  // namespace k3nl
