#include "k3nl/siegel.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace k3nl {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::string line_error(std::string_view what, int lineno, const std::string& detail) {
  return std::string(what) + " line " + std::to_string(lineno) + ": " + detail;
}

// Strips comments; returns false for blank lines.
bool data_fields(std::string line, std::vector<std::string>& out) {
  if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  std::istringstream in(line);
  out.clear();
  for (std::string f; in >> f;) out.push_back(f);
  return !out.empty();
}

long parse_long(const std::string& s) {
  const Integer z = parse_integer(s);
  if (z > 1000000000 || z < -1000000000) throw DomainError("index out of range: " + s);
  return z.convert_to<long>();
}

}  // namespace

std::string GenusTwoIndex::to_string() const {
  return std::to_string(k) + "," + std::to_string(l) + "," + std::to_string(m);
}

GenusTwoIndex parse_index(std::string_view text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 3) throw DomainError("index must be 'k,l,m': '" + std::string(text) + "'");
  return {parse_long(parts[0]), parse_long(parts[1]), parse_long(parts[2])};
}

GenusTwoIndex reduce_index(const GenusTwoIndex& i) {
  if (i.k < 0 || i.m < 0 || i.discriminant() < 0) {
    throw DomainError("index " + i.to_string() + " is not positive semidefinite");
  }
  long k = i.k, l = i.l, m = i.m;
  for (;;) {
    if (k > m) std::swap(k, m);
    if (k == 0) return {0, 0, m};
    if (-k <= l && l <= k) break;
    // x -> x - n y moves l into (-k, k]; l = -k is already reduced up to sign
    const long n = floor_div(l + k, 2 * k);
    m = m - n * l + n * n * k;
    l = l - 2 * n * k;
  }
  return {k, l < 0 ? -l : l, m};
}

Truncation Truncation::for_bounds(long k_max, long m_max) {
  if (k_max < 0 || m_max < 0) throw DomainError("truncation bounds must be nonnegative");
  return {k_max, m_max, 2 * std::max(k_max, m_max) + 2};
}

Truncation Truncation::meet(const Truncation& o) const {
  return {std::min(k_max, o.k_max), std::min(m_max, o.m_max), std::min(l_max, o.l_max)};
}

// --- series ---------------------------------------------------------------------

GenusTwoSeries GenusTwoSeries::one(Truncation trunc) { return monomial({0, 0, 0}, 1, trunc); }

GenusTwoSeries GenusTwoSeries::monomial(const GenusTwoIndex& i, const Rational& c,
                                        Truncation trunc) {
  GenusTwoSeries s(trunc);
  s.add(i, c);
  return s;
}

Rational GenusTwoSeries::coefficient(const GenusTwoIndex& i) const {
  if (!trunc_.contains(i)) {
    throw DomainError("index " + i.to_string() + " lies beyond the truncation");
  }
  auto it = terms_.find(i);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GenusTwoSeries::add(const GenusTwoIndex& i, const Rational& c) {
  if (c == 0 || !trunc_.contains(i)) return;
  auto [it, fresh] = terms_.emplace(i, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GenusTwoSeries series_mul(const GenusTwoSeries& x, const GenusTwoSeries& y) {
  GenusTwoSeries out(x.truncation().meet(y.truncation()));
  for (const auto& [i, a] : x.terms()) {
    for (const auto& [j, b] : y.terms()) out.add(i + j, a * b);
  }
  return out;
}

GenusTwoSeries binomial_pow(const GenusTwoIndex& u, const Integer& c, Truncation trunc) {
  if (u.is_zero()) throw DomainError("binomial power of the constant monomial");
  GenusTwoSeries out = GenusTwoSeries::one(trunc);
  Integer binom = 1;  // C(c, j)
  GenusTwoIndex power{0, 0, 0};
  for (long j = 1;; ++j) {
    power = power + u;
    if (!trunc.contains(power)) break;
    binom = binom * (c - (j - 1)) / j;
    if (binom == 0) break;
    out.add(power, Rational(j % 2 == 0 ? binom : Integer(-binom)));
  }
  return out;
}

// --- tables ---------------------------------------------------------------------

Integer HalfIntegralTable::at(long m) const {
  if (m < -1) return 0;
  if (m > support_max) {
    throw ComputationError("coefficient table exhausted: c(" + std::to_string(m) +
                           ") is not tabulated (support ends at " +
                           std::to_string(support_max) + ")");
  }
  auto it = values.find(m);
  return it == values.end() ? Integer(0) : it->second;
}

HalfIntegralTable HalfIntegralTable::standard() {
  HalfIntegralTable t;
  t.values = {{-1, 2}, {0, 20}, {3, -128}, {4, 216}, {7, -1026}, {8, 1616}};
  t.support_max = 8;
  return t;
}

HalfIntegralTable read_half_integral_table(std::istream& in) {
  HalfIntegralTable t;
  t.support_max = -2;
  std::string line;
  std::vector<std::string> f;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!data_fields(line, f)) continue;
    if (f.size() != 2) throw DomainError(line_error("c(m) table", lineno, "expected 'm value'"));
    try {
      const long m = parse_long(f[0]);
      const Integer v = parse_integer(f[1]);
      if (m < -1 && v != 0) throw DomainError("c(m) vanishes for m < -1");
      if (t.values.count(m)) throw DomainError("duplicate m = " + f[0]);
      if (v != 0) t.values[m] = v;
      t.support_max = std::max(t.support_max, m);
    } catch (const DomainError& err) {
      throw DomainError(line_error("c(m) table", lineno, err.what()));
    }
  }
  return t;
}

HalfIntegralTable load_half_integral_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open c(m) table '" + path + "'");
  return read_half_integral_table(in);
}

void write_half_integral_table(std::ostream& out, const HalfIntegralTable& t) {
  for (long m = -1; m <= t.support_max; ++m) out << m << ' ' << t.at(m) << '\n';
}

Rational CoefficientTable::lookup(const GenusTwoIndex& i) const {
  if (i.k < 0 || i.m < 0 || i.discriminant() < 0) return 0;
  if (auto it = values.find(i); it != values.end()) return it->second;
  const GenusTwoIndex r = reduce_index(i);
  if (auto it = values.find(r); it != values.end()) return it->second;
  throw ComputationError("coefficient table exhausted at index " + i.to_string() +
                         " (reduced " + r.to_string() + ")");
}

void CoefficientTable::insert(const GenusTwoIndex& i, const Rational& value) {
  const GenusTwoIndex images[] = {i, {i.k, -i.l, i.m}, {i.m, i.l, i.k}, {i.m, -i.l, i.k}};
  for (const auto& j : images) {
    auto it = values.find(j);
    if (it != values.end() && it->second != value) {
      throw DomainError("conflicting coefficients at " + j.to_string());
    }
  }
  for (const auto& j : images) values[j] = value;
}

CoefficientTable CoefficientTable::eisenstein4() {
  CoefficientTable t;
  t.insert({0, 0, 0}, 1);
  t.insert({1, 0, 0}, 240);
  t.insert({0, 0, 1}, 240);
  t.insert({1, 1, 1}, 13440);
  t.insert({1, 0, 1}, 30240);
  return t;
}

CoefficientTable CoefficientTable::eisenstein6() {
  CoefficientTable t;
  t.insert({0, 0, 0}, 1);
  t.insert({1, 0, 0}, -504);
  t.insert({0, 0, 1}, -504);
  t.insert({1, 1, 1}, 44352);
  t.insert({1, 0, 1}, 166320);
  return t;
}

CoefficientTable read_coeff_table(std::istream& in) {
  CoefficientTable t;
  std::string line;
  std::vector<std::string> f;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!data_fields(line, f)) continue;
    if (f.size() != 4) throw DomainError(line_error("coefficient table", lineno, "expected 'k l m value'"));
    try {
      t.insert({parse_long(f[0]), parse_long(f[1]), parse_long(f[2])}, parse_rational(f[3]));
    } catch (const DomainError& err) {
      throw DomainError(line_error("coefficient table", lineno, err.what()));
    }
  }
  return t;
}

CoefficientTable load_coeff_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open coefficient table '" + path + "'");
  return read_coeff_table(in);
}

void write_coeff_table(std::ostream& out, const CoefficientTable& t) {
  for (const auto& [i, v] : t.values) {
    if (i.l >= 0 && i.k <= i.m) out << i.k << ' ' << i.l << ' ' << i.m << ' ' << to_string(v) << '\n';
  }
}

// --- forms ------------------------------------------------------------------------

GenusTwoSeries series_from_table(const CoefficientTable& t, Truncation trunc) {
  GenusTwoSeries s(trunc);
  for (long k = 0; k <= trunc.k_max; ++k) {
    for (long m = 0; m <= trunc.m_max; ++m) {
      for (long l = -trunc.l_max; l <= trunc.l_max; ++l) {
        const GenusTwoIndex i{k, l, m};
        if (i.discriminant() >= 0) s.add(i, t.lookup(i));
      }
    }
  }
  return s;
}

GenusTwoSeries chi10(const HalfIntegralTable& table, long k_max, long m_max) {
  const Truncation trunc = Truncation::for_bounds(k_max, m_max);
  GenusTwoSeries out = GenusTwoSeries::monomial({1, 1, 1}, 1, trunc);
  for (long r = 0; r < k_max; ++r) {
    for (long t = 0; t < m_max; ++t) {
      for (long s = -trunc.l_max; s <= trunc.l_max; ++s) {
        const bool positive = r > 0 || t > 0 || s < 0;
        if (!positive || s * s > 4 * r * t + 1) continue;
        const Integer c = table.at(4 * r * t - s * s);
        if (c != 0) out = series_mul(out, binomial_pow({r, s, t}, c, trunc));
      }
    }
  }
  return out;
}

GenusTwoSeries e4e6(long k_max, long m_max, const CoefficientTable& e4, const CoefficientTable& e6) {
  const Truncation trunc = Truncation::for_bounds(k_max, m_max);
  return series_mul(series_from_table(e4, trunc), series_from_table(e6, trunc));
}

// --- fitting ------------------------------------------------------------------------

namespace {

struct BasisValues {
  GenusTwoSeries eis;
  GenusTwoSeries cusp;
};

BasisValues basis_at(long k_max, long m_max, const HalfIntegralTable& table) {
  k_max = std::max(k_max, 1L);
  m_max = std::max(m_max, 1L);
  return {e4e6(k_max, m_max), chi10(table, k_max, m_max)};
}

void require_index(const GenusTwoIndex& i) {
  if (i.k < 0 || i.m < 0) throw DomainError("index " + i.to_string() + " has negative k or m");
}

}  // namespace

ThetaFit fit_weight10(const std::map<GenusTwoIndex, Rational>& obs, const HalfIntegralTable& table) {
  if (obs.size() < 2) throw DomainError("fitting needs at least two observations");
  long k_max = 0, m_max = 0;
  for (const auto& [i, v] : obs) {
    require_index(i);
    k_max = std::max(k_max, i.k);
    m_max = std::max(m_max, i.m);
  }
  const auto basis = basis_at(k_max, m_max, table);
  auto it = obs.begin();
  const auto& [i1, o1] = *it++;
  const auto& [i2, o2] = *it++;
  const Rational e1 = basis.eis.coefficient(i1), x1 = basis.cusp.coefficient(i1);
  const Rational e2 = basis.eis.coefficient(i2), x2 = basis.cusp.coefficient(i2);
  const Rational det = e1 * x2 - e2 * x1;
  if (det == 0) {
    throw DomainError("singular system at indices " + i1.to_string() + " and " + i2.to_string());
  }
  ThetaFit fit{(o1 * x2 - o2 * x1) / det, (e1 * o2 - e2 * o1) / det};
  for (; it != obs.end(); ++it) {
    const Rational got = fit.a * basis.eis.coefficient(it->first) +
                         fit.b * basis.cusp.coefficient(it->first);
    if (got != it->second) {
      throw ComputationError("observation at " + it->first.to_string() + " is " +
                             to_string(it->second) + " but the fit gives " + to_string(got));
    }
  }
  return fit;
}

Rational fitted_coefficient(const ThetaFit& fit, const GenusTwoIndex& i, const HalfIntegralTable& table) {
  require_index(i);
  const auto basis = basis_at(i.k, i.m, table);
  return fit.a * basis.eis.coefficient(i) + fit.b * basis.cusp.coefficient(i);
}

Prediction parse_prediction(std::string_view name) {
  if (name == "cuspidal") return Prediction::cuspidal;
  if (name == "binodal") return Prediction::binodal;
  if (name == "hodge-disc") return Prediction::hodge_disc;
  if (name == "hodge-sq") return Prediction::hodge_sq;
  throw DomainError("unknown prediction '" + std::string(name) +
                    "' (expected cuspidal, binodal, hodge-disc or hodge-sq)");
}

std::string_view to_string(Prediction p) {
  switch (p) {
    case Prediction::cuspidal: return "cuspidal";
    case Prediction::binodal: return "binodal";
    case Prediction::hodge_disc: return "hodge-disc";
    case Prediction::hodge_sq: return "hodge-sq";
  }
  return "?";
}

Rational predict_nl(const ThetaFit& fit, Prediction which, const HalfIntegralTable& table) {
  switch (which) {
    case Prediction::cuspidal: return fitted_coefficient(fit, {1, 1, 1}, table) / 2;
    case Prediction::binodal: return fitted_coefficient(fit, {1, 0, 1}, table) / 2;
    case Prediction::hodge_disc: {
      Rational v = fitted_coefficient(fit, {0, 0, 1}, table);
      return v < 0 ? Rational(-v) : v;
    }
    case Prediction::hodge_sq: return fitted_coefficient(fit, {0, 0, 0}, table);
  }
  return 0;
}

bool independence_check(const ThetaFit& fit, const HalfIntegralTable& table) {
  if (fit.a == 0 && fit.b == 0) throw DomainError("independence check of the zero form");
  const auto basis = basis_at(1, 1, table);
  const Rational cusp = fit.a * basis.eis.coefficient({1, 1, 1}) + fit.b * basis.cusp.coefficient({1, 1, 1});
  const Rational bin = fit.a * basis.eis.coefficient({1, 0, 1}) + fit.b * basis.cusp.coefficient({1, 0, 1});
  return cusp * 7656 != bin * 864;
}

}  // namespace k3nl
