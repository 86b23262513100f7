#include "k3nl/orbit.hpp"

#include <set>

namespace k3nl {

namespace {

void require_two_planes(const IntegralLattice& l) {
  if (l.hyperbolic_planes().size() < 2) {
    throw DomainError("Eichler criterion needs two recorded hyperbolic planes");
  }
}

RatVector as_rational(const LatticeVector& v) { return v.cast<Rational>(); }

std::optional<LatticeVector> from_recipe(const IntegralLattice& l, const DiscriminantGroup& group,
                                         const OrbitCandidate& cand) {
  const auto& planes = l.hyperbolic_planes();
  const Integer& n = cand.norm;

  std::vector<LatticeVector> recipes;
  if (n % 2 == 0) {
    LatticeVector v = l.zero_vector();
    v(planes[0].e) = 1;
    v(planes[0].f) = n / 2;
    recipes.push_back(v);
  }
  // base + 2 e + k f, with k fixed by the norm
  std::vector<std::vector<std::string>> bases = {{"h"}, {"h", "w1"}};
  for (const auto& labels : bases) {
    LatticeVector base = l.zero_vector();
    bool ok = true;
    for (const auto& label : labels) {
      auto idx = l.index_of(label);
      if (!idx) {
        ok = false;
        break;
      }
      base(*idx) += 1;
    }
    if (!ok) continue;
    Integer rest = n - l.norm(base);
    if (rest % 4 != 0) continue;
    LatticeVector v = base;
    v(planes[0].e) += 2;
    v(planes[0].f) += rest / 4;
    recipes.push_back(v);
  }
  if (l.index_of("w1")) recipes.push_back(l.basis_vector("w1"));

  for (const auto& v : recipes) {
    if (realizes(l, group, cand, v)) return v;
  }
  return std::nullopt;
}

std::optional<LatticeVector> search(const IntegralLattice& l, const DiscriminantGroup& group,
                                    const OrbitCandidate& cand, int bound) {
  const auto& planes = l.hyperbolic_planes();
  const Eigen::Index e = planes[0].e, f = planes[0].f;
  const Eigen::Index e2 = planes[1].e, f2 = planes[1].f;

  const RatVector x0 = group.lift(cand.dual_class);
  const RatVector gx0 = l.gram().cast<Rational>() * x0;
  const Rational x0sq = x0.dot(gx0);
  const Rational target = Rational(cand.norm) / Rational(cand.divisibility * cand.divisibility);
  const Rational pe = gx0(e), pf = gx0(f), pe2 = gx0(e2), pf2 = gx0(f2);

  for (int a = -bound; a <= bound; ++a) {
    for (int b = -bound; b <= bound; ++b) {
      const Rational partial = x0sq + 2 * a * pe + 2 * b * pf + 2 * a * b;
      for (int c = -bound; c <= bound; ++c) {
        const Rational x1sq = partial + 2 * c * pe2;
        const Rational slope = 2 * (pf2 + c);
        Rational t = 0;
        if (slope == 0) {
          if (x1sq != target) continue;
        } else {
          t = (target - x1sq) / slope;
          if (!is_integer(t)) continue;
        }
        RatVector x = x0;
        x(e) += a;
        x(f) += b;
        x(e2) += c;
        x(f2) += t;
        x *= Rational(cand.divisibility);
        LatticeVector v(x.size());
        bool integral = true;
        for (Eigen::Index i = 0; i < x.size() && integral; ++i) {
          integral = is_integer(x(i));
          if (integral) v(i) = boost::multiprecision::numerator(x(i));
        }
        if (integral && realizes(l, group, cand, v)) return v;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<OrbitCandidate> eichler_candidates(const IntegralLattice& l, const Integer& norm) {
  require_two_planes(l);
  if (norm == 0) throw DomainError("Eichler candidates need a nonzero norm");
  const auto group = discriminant_group(l);
  std::vector<OrbitCandidate> out;
  for (const auto& c : group.elements()) {
    const Integer d = group.order_of(c);
    if (norm % d != 0) continue;
    if (reduce_mod2(group.quadratic(c) - Rational(norm) / Rational(d * d)) != 0) continue;
    out.push_back({d, c, norm, std::nullopt});
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.divisibility != y.divisibility) return x.divisibility < y.divisibility;
    return x.dual_class < y.dual_class;
  });
  return out;
}

bool realizes(const IntegralLattice& l, const DiscriminantGroup& group,
              const OrbitCandidate& cand, const LatticeVector& v) {
  if (v.size() != l.rank() || v.isZero() || !is_primitive(v)) return false;
  if (l.norm(v) != cand.norm) return false;
  if (divisibility(l, v) != cand.divisibility) return false;
  return group.class_of(as_rational(v) / Rational(cand.divisibility)) == cand.dual_class;
}

std::optional<LatticeVector> find_witness(const IntegralLattice& l, const OrbitCandidate& cand,
                                          int bound) {
  require_two_planes(l);
  const auto group = discriminant_group(l);
  group.validate(cand.dual_class);
  if (group.order_of(cand.dual_class) != cand.divisibility) return std::nullopt;
  if (reduce_mod2(group.quadratic(cand.dual_class) -
                  Rational(cand.norm) / Rational(cand.divisibility * cand.divisibility)) != 0) {
    return std::nullopt;
  }
  if (auto v = from_recipe(l, group, cand)) return v;
  return search(l, group, cand, bound);
}

Locus parse_locus(std::string_view name) {
  if (name == "nodal") return Locus::nodal;
  if (name == "a11" || name == "A11") return Locus::a11;
  if (name == "a2" || name == "A2") return Locus::a2;
  throw DomainError("unknown locus '" + std::string(name) + "' (expected nodal, a11 or a2)");
}

std::string to_string(Locus locus) {
  switch (locus) {
    case Locus::nodal: return "nodal";
    case Locus::a11: return "a11";
    case Locus::a2: return "a2";
  }
  return "?";
}

ComponentCount nl_component_count(int g, Locus locus, bool with_witnesses, int witness_bound) {
  if (g < 3) throw DomainError("component counts need g >= 3");
  ComponentCount result;
  result.g = g;
  result.locus = locus;
  result.lattice = build_standard(locus == Locus::nodal ? "LambdaG" : "LambdaA1", g);
  const auto& l = result.lattice;
  const auto group = discriminant_group(l);
  const Integer norm = locus == Locus::a2 ? -6 : -2;

  auto half_class = [&](std::initializer_list<const char*> labels) {
    LatticeVector v = l.zero_vector();
    for (const char* label : labels) v += l.basis_vector(label);
    return group.class_of(as_rational(v) / Rational(2));
  };

  std::set<DiscriminantClass> seen;
  for (auto& cand : eichler_candidates(l, norm)) {
    if (seen.count(group.negate(cand.dual_class))) continue;
    std::string label;
    if (locus == Locus::nodal) {
      label = cand.divisibility == 1 ? "P_{0,-2}" : "P_{g-1,(g-2)/2}";
      if (cand.divisibility > 2) label = "P[div " + cand.divisibility.str() + "]";
    } else if (locus == Locus::a11) {
      if (cand.divisibility == 1) {
        label = "H'";
      } else if (cand.dual_class == half_class({"h"})) {
        label = "H''";
      } else if (cand.dual_class == half_class({"h", "w1"})) {
        label = "H'''";
      } else {
        label = "H_{A_{1,1}}[" + cand.dual_class.to_string() + "]";
      }
    } else {
      // w = t1 + 2v requires (w - t1)/2 in the K3 lattice: w/2 must glue to
      // t1/2, whose partner in the discriminant group is the class of w1/2.
      if (cand.divisibility % 2 != 0) continue;
      if (group.scale(cand.divisibility / 2, cand.dual_class) != half_class({"w1"})) continue;
      label = cand.divisibility == 2 ? "H_{A_2}" : "H_{A_2}^{(" + cand.divisibility.str() + ")}";
    }
    seen.insert(cand.dual_class);
    if (with_witnesses) {
      cand.witness = find_witness(l, cand, witness_bound > 0 ? witness_bound : 2 * g);
    }
    Rational q = group.quadratic(cand.dual_class);
    result.components.push_back({std::move(label), std::move(cand), q});
  }
  return result;
}

}  // namespace k3nl
