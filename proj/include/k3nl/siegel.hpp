#pragma once

// Truncated Fourier expansions of genus-2 Siegel modular forms in the
// variables (q~, p, q): a term c q~^k p^l q^m is stored under (k, l, m).

#include <compare>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

#include "k3nl/arith.hpp"

namespace k3nl {

struct GenusTwoIndex {
  long k = 0;
  long l = 0;
  long m = 0;
  friend auto operator<=>(const GenusTwoIndex&, const GenusTwoIndex&) = default;
  GenusTwoIndex operator+(const GenusTwoIndex& o) const { return {k + o.k, l + o.l, m + o.m}; }
  bool is_zero() const { return k == 0 && l == 0 && m == 0; }
  /// 4km - l^2
  long discriminant() const { return 4 * k * m - l * l; }
  std::string to_string() const;
};

/// Parses "k,l,m".
GenusTwoIndex parse_index(std::string_view text);

/// Representative of the GL2(Z)-class of the binary form [k, l, m]:
/// 0 <= l <= k <= m for definite forms, (0, 0, m) for degenerate ones.
/// Throws DomainError for indefinite forms or negative k, m.
GenusTwoIndex reduce_index(const GenusTwoIndex& i);

struct Truncation {
  long k_max = 0;
  long m_max = 0;
  long l_max = 0;
  /// l_max = 2 max(k_max, m_max) + 2.
  static Truncation for_bounds(long k_max, long m_max);
  bool contains(const GenusTwoIndex& i) const {
    return i.k >= 0 && i.m >= 0 && i.k <= k_max && i.m <= m_max && i.l <= l_max && -i.l <= l_max;
  }
  Truncation meet(const Truncation& o) const;
  friend bool operator==(const Truncation&, const Truncation&) = default;
};

class GenusTwoSeries {
 public:
  using Terms = std::map<GenusTwoIndex, Rational>;

  explicit GenusTwoSeries(Truncation trunc) : trunc_(trunc) {}
  static GenusTwoSeries one(Truncation trunc);
  static GenusTwoSeries monomial(const GenusTwoIndex& i, const Rational& c, Truncation trunc);

  const Truncation& truncation() const { return trunc_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Zero for absent indices; throws DomainError outside the truncation.
  Rational coefficient(const GenusTwoIndex& i) const;
  /// Terms beyond the truncation are dropped; zero sums are erased.
  void add(const GenusTwoIndex& i, const Rational& c);

  friend bool operator==(const GenusTwoSeries&, const GenusTwoSeries&) = default;

 private:
  Truncation trunc_;
  Terms terms_;
};

/// Convolution, truncated to the meet of both truncations.
GenusTwoSeries series_mul(const GenusTwoSeries& x, const GenusTwoSeries& y);

/// (1 - u)^c for the monomial u, by generalized binomial coefficients.
GenusTwoSeries binomial_pow(const GenusTwoIndex& u, const Integer& c, Truncation trunc);

// --- coefficient tables -------------------------------------------------------

/// c(m) of the weight -1/2 form 2q^-1 + 20 - 128q^3 + ...
struct HalfIntegralTable {
  std::map<long, Integer> values;
  long support_max = -1;

  /// Zero below -1; throws ComputationError beyond support_max.
  Integer at(long m) const;
  static HalfIntegralTable standard();
};

HalfIntegralTable read_half_integral_table(std::istream& in);
HalfIntegralTable load_half_integral_table(const std::string& path);
void write_half_integral_table(std::ostream& out, const HalfIntegralTable& t);

/// Fourier coefficients of a genus-2 form, closed under l -> -l and k <-> m.
struct CoefficientTable {
  std::map<GenusTwoIndex, Rational> values;

  /// Coefficient via GL2(Z) reduction: zero off the semidefinite cone,
  /// ComputationError when the reduced index is not tabulated.
  Rational lookup(const GenusTwoIndex& i) const;
  /// Adds i and its images under l -> -l and k <-> m. Throws on conflict.
  void insert(const GenusTwoIndex& i, const Rational& value);

  static CoefficientTable eisenstein4();
  static CoefficientTable eisenstein6();
};

/// '#' comments; data lines "k l m value", value an integer or num/den.
CoefficientTable read_coeff_table(std::istream& in);
CoefficientTable load_coeff_table(const std::string& path);
/// Writes one line per orbit representative (l >= 0, k <= m).
void write_coeff_table(std::ostream& out, const CoefficientTable& t);

// --- forms --------------------------------------------------------------------------

/// The table as a truncated series.
GenusTwoSeries series_from_table(const CoefficientTable& t, Truncation trunc);

/// q~ p q prod (1 - q~^r p^s q^t)^c(4rt - s^2) over (r,s,t) > 0, with
/// r < k_max, t < m_max and s^2 <= 4rt + 1. Larger r or t only reach
/// indices beyond the truncation once the q~ p q prefix is applied.
GenusTwoSeries chi10(const HalfIntegralTable& table, long k_max, long m_max);

GenusTwoSeries e4e6(long k_max, long m_max, const CoefficientTable& e4 = CoefficientTable::eisenstein4(),
                    const CoefficientTable& e6 = CoefficientTable::eisenstein6());

// --- fitting --------------------------------------------------------------------------

struct ThetaFit {
  Rational a;  // E4 E6
  Rational b;  // chi10
  bool integral() const { return is_integer(a) && is_integer(b); }
};

/// Solves theta = a E4E6 + b chi10 on the two smallest indices and checks
/// the rest. DomainError for fewer than two observations or a singular
/// system; ComputationError when later observations disagree.
ThetaFit fit_weight10(const std::map<GenusTwoIndex, Rational>& observations,
                      const HalfIntegralTable& table = HalfIntegralTable::standard());

/// a E4E6(i) + b chi10(i).
Rational fitted_coefficient(const ThetaFit& fit, const GenusTwoIndex& i,
                            const HalfIntegralTable& table = HalfIntegralTable::standard());

enum class Prediction { cuspidal, binodal, hodge_disc, hodge_sq };

Prediction parse_prediction(std::string_view name);
std::string_view to_string(Prediction p);

/// cuspidal: theta(1,1,1)/2, binodal: theta(1,0,1)/2,
/// hodge-disc: |theta(0,0,1)|, hodge-sq: theta(0,0,0).
Rational predict_nl(const ThetaFit& fit, Prediction which,
                    const HalfIntegralTable& table = HalfIntegralTable::standard());

/// False when (theta(1,1,1), theta(1,0,1)) is proportional to the
/// hyperelliptic counts (864, 7656). DomainError for the zero form.
bool independence_check(const ThetaFit& fit,
                        const HalfIntegralTable& table = HalfIntegralTable::standard());

}  // namespace k3nl
