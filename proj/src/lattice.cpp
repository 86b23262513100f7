#include "k3nl/lattice.hpp"

#include <istream>
#include <ostream>
#include <regex>
#include <sstream>

#include "k3nl/smith.hpp"

namespace k3nl {

namespace {


IntMatrix e8_cartan_negative() {
  IntMatrix g = IntMatrix::Zero(8, 8);
  for (int i = 0; i < 8; ++i) g(i, i) = -2;
  auto link = [&](int a, int b) {
    g(a, b) = 1;
    g(b, a) = 1;
  };
  for (int i = 0; i + 1 < 7; ++i) link(i, i + 1);  // t1 - ... - t7
  link(4, 7);                                       // t5 - t8
  return g;
}

IntegralLattice rank_one(const Integer& square, std::string label) {
  IntMatrix g(1, 1);
  g(0, 0) = square;
  return IntegralLattice(std::move(g), {std::move(label)});
}

// W7 = t1^perp in E8(-1), basis w1 = t1 + 2 t2, t3, ..., t8.
IntegralLattice w7_negative() {
  const IntMatrix e8 = e8_cartan_negative();
  IntMatrix basis = IntMatrix::Zero(8, 7);
  basis(0, 0) = 1;
  basis(1, 0) = 2;
  for (int j = 1; j < 7; ++j) basis(j + 1, j) = 1;
  IntMatrix gram = basis.transpose() * e8 * basis;
  return IntegralLattice(std::move(gram), {"w1", "t3", "t4", "t5", "t6", "t7", "t8"});
}

void require_genus(std::string_view name, std::optional<int> g) {
  if (!g) throw DomainError("lattice '" + std::string(name) + "' needs a genus g");
  if (*g < 2) throw DomainError("lattice '" + std::string(name) + "' needs g >= 2");
}

}  // namespace

// --- IntegralLattice ------------------------------------------------------

IntegralLattice::IntegralLattice(IntMatrix gram, std::vector<std::string> labels,
                                 bool allow_odd)
    : gram_(std::move(gram)), labels_(std::move(labels)) {
  if (gram_.rows() != gram_.cols()) throw DomainError("Gram matrix is not square");
  if (static_cast<Eigen::Index>(labels_.size()) != gram_.rows()) {
    throw DomainError("label count does not match the rank");
  }
  for (Eigen::Index i = 0; i < gram_.rows(); ++i) {
    for (Eigen::Index j = 0; j < i; ++j) {
      if (gram_(i, j) != gram_(j, i)) throw DomainError("Gram matrix is not symmetric");
    }
    if (!allow_odd && gram_(i, i) % 2 != 0) {
      throw DomainError("odd diagonal entry for label '" + labels_[i] + "'");
    }
  }
}

bool IntegralLattice::is_even() const {
  for (Eigen::Index i = 0; i < rank(); ++i) {
    if (gram_(i, i) % 2 != 0) return false;
  }
  return true;
}

void IntegralLattice::set_hyperbolic_planes(std::vector<HyperbolicPlane> planes) {
  for (const auto& p : planes) {
    if (p.e < 0 || p.f < 0 || p.e >= rank() || p.f >= rank() || gram_(p.e, p.e) != 0 ||
        gram_(p.f, p.f) != 0 || gram_(p.e, p.f) != 1) {
      throw DomainError("recorded hyperbolic plane is not a standard (e, f) pair");
    }
  }
  planes_ = std::move(planes);
}

Integer IntegralLattice::determinant() const { return bareiss_determinant(gram_); }

Integer IntegralLattice::pairing(const LatticeVector& x, const LatticeVector& y) const {
  if (x.size() != rank() || y.size() != rank()) {
    throw DomainError("vector length does not match the lattice rank");
  }
  return x.dot(gram_ * y);
}

Rational IntegralLattice::pairing(const RatVector& x, const RatVector& y) const {
  if (x.size() != rank() || y.size() != rank()) {
    throw DomainError("vector length does not match the lattice rank");
  }
  return x.dot(gram_.cast<Rational>() * y);
}

std::optional<Eigen::Index> IntegralLattice::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<Eigen::Index>(i);
  }
  return std::nullopt;
}

LatticeVector IntegralLattice::basis_vector(std::string_view label) const {
  auto idx = index_of(label);
  if (!idx) throw DomainError("unknown basis label '" + std::string(label) + "'");
  LatticeVector v = zero_vector();
  v(*idx) = 1;
  return v;
}

LatticeVector IntegralLattice::parse_vector(std::string_view text) const {
  const std::string s(text);
  static const std::regex coords_re(R"(^\s*[+-]?\d+(\s*,\s*[+-]?\d+)*\s*$)");
  if (std::regex_match(s, coords_re) && (s.find(',') != std::string::npos || rank() == 1)) {
    LatticeVector v = zero_vector();
    std::stringstream in(s);
    std::string item;
    Eigen::Index i = 0;
    while (std::getline(in, item, ',')) {
      if (i >= rank()) throw DomainError("too many coordinates for rank " + std::to_string(rank()));
      v(i++) = parse_integer(item);
    }
    if (i != rank()) throw DomainError("expected " + std::to_string(rank()) + " coordinates");
    return v;
  }

  static const std::regex term_re(R"(\s*([+-])?\s*(\d+)?\s*\*?\s*([A-Za-z_][A-Za-z0-9_]*)\s*)");
  LatticeVector v = zero_vector();
  auto begin = std::sregex_iterator(s.begin(), s.end(), term_re);
  std::ptrdiff_t consumed = 0;
  bool first = true;
  for (auto it = begin; it != std::sregex_iterator(); ++it) {
    const std::smatch& m = *it;
    if (m.position(0) != consumed || (!first && !m[1].matched)) {
      throw DomainError("malformed vector expression '" + s + "'");
    }
    consumed += m.length(0);
    first = false;
    Integer coeff = m[2].matched ? Integer(m[2].str()) : Integer(1);
    if (m[1].matched && m[1].str() == "-") coeff = -coeff;
    auto idx = index_of(m[3].str());
    if (!idx) throw DomainError("unknown basis label '" + m[3].str() + "'");
    v(*idx) += coeff;
  }
  if (first || consumed != static_cast<std::ptrdiff_t>(s.size())) {
    throw DomainError("malformed vector expression '" + s + "'");
  }
  return v;
}

std::string IntegralLattice::format_vector(const LatticeVector& v) const {
  if (v.size() != rank()) throw DomainError("vector length does not match the lattice rank");
  std::string out;
  for (Eigen::Index i = 0; i < rank(); ++i) {
    const Integer& c = v(i);
    if (c == 0) continue;
    if (c < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    Integer mag = c < 0 ? Integer(-c) : c;
    if (mag != 1) out += mag.str();
    out += labels_[i];
  }
  return out.empty() ? "0" : out;
}

IntegralLattice direct_sum(const IntegralLattice& a, const IntegralLattice& b) {
  const Eigen::Index n = a.rank() + b.rank();
  IntMatrix g = IntMatrix::Zero(n, n);
  g.topLeftCorner(a.rank(), a.rank()) = a.gram();
  g.bottomRightCorner(b.rank(), b.rank()) = b.gram();
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  IntegralLattice sum(std::move(g), std::move(labels), !(a.is_even() && b.is_even()));
  std::vector<HyperbolicPlane> planes = a.hyperbolic_planes();
  for (auto p : b.hyperbolic_planes()) {
    planes.push_back({p.e + a.rank(), p.f + a.rank()});
  }
  sum.set_hyperbolic_planes(std::move(planes));
  return sum;
}

IntegralLattice rescale(const IntegralLattice& a, const Integer& t) {
  if (t == 0) throw DomainError("rescaling factor must be nonzero");
  IntMatrix g = a.gram() * t;
  IntegralLattice out(std::move(g), a.labels(), true);
  if (t == 1) out.set_hyperbolic_planes(a.hyperbolic_planes());
  return out;
}

IntegralLattice hyperbolic_plane(int index) {
  IntMatrix g(2, 2);
  g << 0, 1, 1, 0;
  IntegralLattice u(std::move(g), {"e" + std::to_string(index), "f" + std::to_string(index)});
  u.set_hyperbolic_planes({{0, 1}});
  return u;
}

IntegralLattice e8_negative(std::string_view prefix) {
  std::vector<std::string> labels;
  for (int i = 1; i <= 8; ++i) labels.push_back(std::string(prefix) + std::to_string(i));
  return IntegralLattice(e8_cartan_negative(), std::move(labels));
}

std::vector<std::string> standard_lattice_names() {
  return {"U", "E8", "E8neg", "E7neg", "K3", "Uperp", "LambdaG", "LambdaA1"};
}

IntegralLattice build_standard(std::string_view name, std::optional<int> g) {
  if (name == "U") return hyperbolic_plane(1);
  if (name == "E8neg") return e8_negative("t");
  if (name == "E8") return rescale(e8_negative("t"), -1);
  if (name == "E7neg") return w7_negative();
  if (name == "K3") {
    return direct_sum(direct_sum(direct_sum(hyperbolic_plane(1), hyperbolic_plane(2)),
                                 direct_sum(hyperbolic_plane(3), e8_negative("t"))),
                      e8_negative("u"));
  }
  if (name == "Uperp") {
    return direct_sum(direct_sum(hyperbolic_plane(2), hyperbolic_plane(3)),
                      direct_sum(e8_negative("t"), e8_negative("u")));
  }
  if (name == "LambdaG") {
    require_genus(name, g);
    // h stands for e1 - (g-1) f1, the generator of the U1 part orthogonal to L.
    return direct_sum(direct_sum(rank_one(2 - 2 * Integer(*g), "h"),
                                 direct_sum(hyperbolic_plane(2), hyperbolic_plane(3))),
                      direct_sum(e8_negative("t"), e8_negative("u")));
  }
  if (name == "LambdaA1") {
    require_genus(name, g);
    return direct_sum(direct_sum(rank_one(2 - 2 * Integer(*g), "h"),
                                 direct_sum(hyperbolic_plane(2), hyperbolic_plane(3))),
                      direct_sum(w7_negative(), e8_negative("u")));
  }
  throw DomainError("unknown lattice name '" + std::string(name) + "'");
}

// --- discriminant groups ---------------------------------------------------

bool DiscriminantClass::is_zero() const {
  for (const auto& r : residues_) {
    if (r != 0) return false;
  }
  return true;
}

std::string DiscriminantClass::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < residues_.size(); ++i) {
    if (i) out += ",";
    out += residues_[i].str();
  }
  return out + ")";
}

Integer DiscriminantGroup::order() const {
  Integer n = 1;
  for (const auto& d : invariant_factors) n *= d;
  return n;
}

Integer DiscriminantGroup::exponent() const {
  return invariant_factors.empty() ? Integer(1) : invariant_factors.back();
}

void DiscriminantGroup::validate(const DiscriminantClass& a) const {
  if (a.residues().size() != invariant_factors.size()) {
    throw DomainError("discriminant class has the wrong number of residues");
  }
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    if (a.residues()[i] < 0 || a.residues()[i] >= invariant_factors[i]) {
      throw DomainError("discriminant class residue out of range");
    }
  }
}

DiscriminantClass DiscriminantGroup::zero() const {
  return DiscriminantClass(std::vector<Integer>(invariant_factors.size(), Integer(0)));
}

DiscriminantClass DiscriminantGroup::add(const DiscriminantClass& a,
                                         const DiscriminantClass& b) const {
  validate(a);
  validate(b);
  std::vector<Integer> r(invariant_factors.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = floor_mod(a.residues()[i] + b.residues()[i], invariant_factors[i]);
  }
  return DiscriminantClass(std::move(r));
}

DiscriminantClass DiscriminantGroup::negate(const DiscriminantClass& a) const {
  return scale(-1, a);
}

DiscriminantClass DiscriminantGroup::scale(const Integer& k, const DiscriminantClass& a) const {
  validate(a);
  std::vector<Integer> r(invariant_factors.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = floor_mod(k * a.residues()[i], invariant_factors[i]);
  }
  return DiscriminantClass(std::move(r));
}

Integer DiscriminantGroup::order_of(const DiscriminantClass& a) const {
  validate(a);
  Integer ord = 1;
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    const Integer& d = invariant_factors[i];
    ord = boost::multiprecision::lcm(ord, d / gcd(a.residues()[i], d));
  }
  return ord;
}

RatVector DiscriminantGroup::lift(const DiscriminantClass& a) const {
  validate(a);
  RatVector x = RatVector::Zero(gram.rows());
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    x += generator_lifts[i] * Rational(a.residues()[i]);
  }
  for (Eigen::Index j = 0; j < x.size(); ++j) x(j) = reduce_mod1(x(j));
  return x;
}

DiscriminantClass DiscriminantGroup::class_of(const RatVector& x) const {
  if (x.size() != gram.rows()) throw DomainError("vector length does not match the lattice rank");
  RatVector y = gram.cast<Rational>() * x;
  IntVector yi(y.size());
  for (Eigen::Index j = 0; j < y.size(); ++j) {
    if (!is_integer(y(j))) throw DomainError("vector does not lie in the dual lattice");
    yi(j) = boost::multiprecision::numerator(y(j));
  }
  std::vector<Integer> r(invariant_factors.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = floor_mod(class_map.row(static_cast<Eigen::Index>(i)).dot(yi), invariant_factors[i]);
  }
  return DiscriminantClass(std::move(r));
}

std::vector<DiscriminantClass> DiscriminantGroup::elements() const {
  std::vector<DiscriminantClass> out;
  std::vector<Integer> r(invariant_factors.size(), Integer(0));
  for (;;) {
    out.emplace_back(r);
    // Odometer with the last factor varying fastest.
    std::size_t i = r.size();
    while (i > 0) {
      --i;
      if (++r[i] < invariant_factors[i]) break;
      r[i] = 0;
      if (i == 0) return out;
    }
    if (r.empty()) return out;
  }
}

Rational DiscriminantGroup::quadratic(const DiscriminantClass& a) const {
  RatVector x = lift(a);
  return reduce_mod2(x.dot(gram.cast<Rational>() * x));
}

Rational DiscriminantGroup::bilinear(const DiscriminantClass& a, const DiscriminantClass& b) const {
  RatVector x = lift(a);
  RatVector y = lift(b);
  return reduce_mod1(x.dot(gram.cast<Rational>() * y));
}

DiscriminantGroup discriminant_group(const IntegralLattice& l) {
  const auto snf = smith_normal_form(l.gram());
  DiscriminantGroup group;
  group.gram = l.gram();
  std::vector<Eigen::Index> rows;
  for (Eigen::Index i = 0; i < l.rank(); ++i) {
    const Integer& d = snf.d(i, i);
    if (d == 0) throw DomainError("degenerate lattice: Gram determinant is zero");
    if (d == 1) continue;
    group.invariant_factors.push_back(d);
    group.generator_lifts.push_back(snf.v.col(i).cast<Rational>() / Rational(d));
    rows.push_back(i);
  }
  group.class_map = IntMatrix(static_cast<Eigen::Index>(rows.size()), l.rank());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    group.class_map.row(static_cast<Eigen::Index>(k)) = snf.u.row(rows[k]);
  }
  return group;
}

Rational disc_quadratic(const IntegralLattice& l, const DiscriminantClass& x) {
  return discriminant_group(l).quadratic(x);
}

Integer divisibility(const IntegralLattice& l, const LatticeVector& v) {
  if (v.size() != l.rank()) throw DomainError("vector length does not match the lattice rank");
  IntVector p = l.gram() * v;
  Integer g = 0;
  for (Eigen::Index i = 0; i < p.size(); ++i) g = gcd(g, p(i));
  if (v.isZero()) throw DomainError("divisibility of the zero vector");
  if (g == 0) throw DomainError("vector lies in the radical of the form");
  return g;
}

bool is_primitive(const LatticeVector& v) {
  Integer g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, v(i));
  return g == 1;
}

DiscriminantClass dual_class(const IntegralLattice& l, const DiscriminantGroup& group,
                             const LatticeVector& v) {
  if (!is_primitive(v)) throw DomainError("dual class requires a primitive vector");
  const Integer div = divisibility(l, v);
  return group.class_of(v.cast<Rational>() / Rational(div));
}

OrthogonalComplement orthogonal_complement(const IntegralLattice& l,
                                           const std::vector<LatticeVector>& vs) {
  const Eigen::Index k = static_cast<Eigen::Index>(vs.size());
  IntMatrix pairings(k, l.rank());
  for (Eigen::Index i = 0; i < k; ++i) {
    if (vs[i].size() != l.rank()) throw DomainError("vector length does not match the lattice rank");
    pairings.row(i) = (l.gram() * vs[i]).transpose();
  }
  const auto snf = smith_normal_form(pairings);
  if (snf.rank() != k) throw DomainError("orthogonal complement of dependent vectors");
  IntMatrix basis = snf.v.rightCols(l.rank() - k);
  IntMatrix gram = basis.transpose() * l.gram() * basis;
  std::vector<std::string> labels;
  for (Eigen::Index i = 0; i < basis.cols(); ++i) labels.push_back("c" + std::to_string(i + 1));
  return {IntegralLattice(std::move(gram), std::move(labels), !l.is_even()), std::move(basis)};
}

// --- text format -----------------------------------------------------------

IntegralLattice read_lattice(std::istream& in) {
  std::string word;
  long long n = -1;
  if (!(in >> word) || word != "rank" || !(in >> n) || n < 0) {
    throw DomainError("lattice file must start with 'rank N'");
  }
  IntMatrix g(n, n);
  for (long long i = 0; i < n; ++i) {
    for (long long j = 0; j < n; ++j) {
      std::string tok;
      if (!(in >> tok)) throw DomainError("lattice file: Gram matrix is truncated");
      g(i, j) = parse_integer(tok);
    }
  }
  std::vector<std::string> labels;
  for (long long i = 0; i < n; ++i) {
    std::string label;
    if (!(in >> label)) throw DomainError("lattice file: expected " + std::to_string(n) + " labels");
    labels.push_back(label);
  }
  return IntegralLattice(std::move(g), std::move(labels), true);
}

void write_lattice(std::ostream& out, const IntegralLattice& l) {
  out << "rank " << l.rank() << "\n";
  for (Eigen::Index i = 0; i < l.rank(); ++i) {
    for (Eigen::Index j = 0; j < l.rank(); ++j) {
      if (j) out << ' ';
      out << l.gram()(i, j);
    }
    out << "\n";
  }
  for (std::size_t i = 0; i < l.labels().size(); ++i) {
    if (i) out << ' ';
    out << l.labels()[i];
  }
  out << "\n";
}

}  // namespace k3nl
