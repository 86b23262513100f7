#include "k3nl/nl_divisors.hpp"

#include <algorithm>

namespace k3nl {

namespace {

void require_genus(int g) {
  if (g < 3) throw DomainError("NL keys need g >= 3");
}

Integer reduced_disc(int g, const Integer& d, const Integer& n) {
  return d * d - 2 * n * Integer(g - 1);
}

}  // namespace

Integer delta(const NLKey& key) { return Integer(2 * key.g - 2) * key.n - key.d * key.d; }

NLVectorData nl_vector_data(const NLKey& key) {
  require_genus(key.g);
  const Integer disc = delta(key);
  if (disc >= 0) throw DomainError("not an NL divisor: delta = " + disc.str() + " >= 0");
  const Integer m = 2 * key.g - 2;
  NLVectorData out;
  out.half_norm = Rational(disc, Integer(4 * key.g - 4));
  out.disc_class = floor_mod(key.d, m);
  out.multiplicity_two = floor_mod(2 * key.d, m) == 0;
  return out;
}

bool prim_equiv(int g, const Integer& d1, const Integer& n1, const Integer& d2,
                const Integer& n2) {
  require_genus(g);
  return floor_mod(d1 - d2, Integer(2 * g - 2)) == 0 &&
         reduced_disc(g, d1, n1) == reduced_disc(g, d2, n2);
}

MuVariant parse_mu_variant(std::string_view name) {
  if (name == "d-corrected") return MuVariant::d_corrected;
  if (name == "as-written") return MuVariant::as_written;
  throw DomainError("unknown variant '" + std::string(name) +
                    "' (expected as-written or d-corrected)");
}

std::string_view to_string(MuVariant v) {
  return v == MuVariant::d_corrected ? "d-corrected" : "as-written";
}

int mu_coefficient(int g, const Integer& d, const Integer& n, const Integer& di,
                   const Integer& ni, MuVariant variant) {
  require_genus(g);
  const Integer target = reduced_disc(g, d, n);
  const Integer rep = reduced_disc(g, di, ni);
  if (rep <= 0) throw DomainError("class representative must have d^2 - 2n(g-1) > 0");
  if (target % rep != 0) return 0;
  Integer root;
  if (!is_perfect_square(target / rep, &root)) return 0;

  std::vector<Integer> xs{root};
  if (root != 0) xs.push_back(-root);
  const Integer step = variant == MuVariant::d_corrected ? di : ni;
  const Integer m = 2 * g - 2;
  int count = 0;
  for (const auto& x : xs) {
    if ((d - x * step) % m == 0) ++count;
  }
  if (count > 2) throw ComputationError("mu coefficient outside {0,1,2}");
  return count;
}

std::vector<TriangularTerm> triangular_decomposition(const NLKey& key, MuVariant variant) {
  require_genus(key.g);
  if (delta(key) >= 0) throw DomainError("triangular decomposition needs delta < 0");
  if (key.n % 2 != 0) throw DomainError("a class in an even lattice has even square; n is odd");
  const Integer target = reduced_disc(key.g, key.d, key.n);
  const Integer m = 2 * key.g - 2;

  std::vector<TriangularTerm> out;
  for (Integer x = 1; x * x <= target; ++x) {
    if (target % (x * x) != 0) continue;
    const Integer rep = target / (x * x);
    for (Integer di = 0; di < m; ++di) {
      const Integer num = di * di - rep;
      if (num % m != 0) continue;
      const Integer ni = num / m;
      if (ni % 2 != 0) continue;
      const int mu = mu_coefficient(key.g, key.d, key.n, di, ni, variant);
      if (mu > 0) out.push_back({di, ni, -rep, mu});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.delta != b.delta) return a.delta > b.delta;  // smaller |delta| first
    return a.d < b.d;
  });
  return out;
}

}  // namespace k3nl
