// Command-line front end: one subcommand per library operation, each printing
// a record {command, inputs, result, exact} as JSON (default) or TSV.
//
// Exit codes: 0 success, 1 usage or domain error, 2 computation error,
// 3 verification mismatch.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "k3nl/chern.hpp"
#include "k3nl/lattice.hpp"
#include "k3nl/nl_divisors.hpp"
#include "k3nl/orbit.hpp"
#include "k3nl/siegel.hpp"
#include "k3nl/smith.hpp"
#include "k3nl/verify.hpp"

namespace {

using namespace k3nl;
using Json = nlohmann::ordered_json;

struct Output {
  Json inputs = Json::object();
  Json result = Json::object();
  // Tabular view for TSV; when empty the result is flattened to key/value rows.
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  int exit_code = 0;
};

std::string str(const Integer& z) { return to_string(z); }
std::string str(const Rational& q) { return to_string(q); }

template <typename Derived>
Json matrix_json(const Eigen::MatrixBase<Derived>& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(str(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

template <typename Derived>
std::string joined(const Eigen::MatrixBase<Derived>& v) {
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) out += (i ? "," : "") + str(v(i));
  return out;
}

// --- TSV -----------------------------------------------------------------------

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void flatten(const Json& j, const std::string& key, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, key.empty() ? k : key + "." + k, out);
  } else if (j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); })) {
    std::string s;
    for (const auto& x : j) s += (s.empty() ? "" : ",") + scalar_text(x);
    out.emplace_back(key, s);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], key + "." + std::to_string(i), out);
  } else {
    out.emplace_back(key, scalar_text(j));
  }
}

void print_tsv(std::ostream& os, const Output& out) {
  if (!out.columns.empty()) {
    for (std::size_t i = 0; i < out.columns.size(); ++i) os << (i ? "\t" : "") << out.columns[i];
    os << '\n';
    for (const auto& row : out.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "\t" : "") << row[i];
      os << '\n';
    }
    return;
  }
  std::vector<std::pair<std::string, std::string>> kv;
  flatten(out.result, "", kv);
  os << "key\tvalue\n";
  for (const auto& [k, v] : kv) os << k << '\t' << v << '\n';
}

// --- lattice -------------------------------------------------------------------

struct LatticeSource {
  std::string name;
  std::string file;
  std::optional<int> g;

  void add_options(CLI::App* sub) {
    auto* n = sub->add_option("--lattice", name, "Standard lattice: " + names());
    auto* f = sub->add_option("--file", file, "Lattice file (rank line, Gram rows, labels)");
    n->excludes(f);
    sub->add_option("--g", g, "Genus for LambdaG / LambdaA1");
  }
  static std::string names() {
    std::string s;
    for (const auto& n : standard_lattice_names()) s += (s.empty() ? "" : ", ") + n;
    return s;
  }
  IntegralLattice load() const {
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw DomainError("cannot open lattice file '" + file + "'");
      return read_lattice(in);
    }
    if (name.empty()) throw DomainError("give --lattice or --file");
    return build_standard(name, g);
  }
  void echo(Json& inputs) const {
    if (!file.empty()) inputs["file"] = file;
    else inputs["lattice"] = name;
    if (g) inputs["g"] = *g;
  }
};

Output lattice_disc(const LatticeSource& src) {
  Output out;
  src.echo(out.inputs);
  const auto l = src.load();
  const auto group = discriminant_group(l);
  out.result["rank"] = l.rank();
  out.result["determinant"] = str(l.determinant());
  out.result["order"] = str(group.order());
  Json factors = Json::array();
  for (const auto& d : group.invariant_factors) factors.push_back(str(d));
  out.result["invariant_factors"] = factors;

  Json gens = Json::array();
  out.columns = {"generator", "order", "q", "lift"};
  for (std::size_t i = 0; i < group.invariant_factors.size(); ++i) {
    std::vector<Integer> residues(group.invariant_factors.size(), 0);
    residues[i] = 1;
    const DiscriminantClass c(residues);
    const std::string q = str(group.quadratic(c));
    gens.push_back({{"order", str(group.invariant_factors[i])}, {"q", q},
                    {"lift", joined(group.generator_lifts[i])}});
    out.rows.push_back({std::to_string(i + 1), str(group.invariant_factors[i]), q,
                        joined(group.generator_lifts[i])});
  }
  out.result["generators"] = gens;
  return out;
}

Output lattice_complement(const LatticeSource& src, const std::vector<std::string>& vectors) {
  Output out;
  src.echo(out.inputs);
  out.inputs["vectors"] = vectors;
  const auto l = src.load();
  std::vector<LatticeVector> vs;
  for (const auto& v : vectors) vs.push_back(l.parse_vector(v));
  const auto comp = orthogonal_complement(l, vs);
  out.result["rank"] = comp.lattice.rank();
  out.result["determinant"] = str(comp.lattice.determinant());
  out.result["gram"] = matrix_json(comp.lattice.gram());
  Json basis = Json::array();
  out.columns = {"label", "vector", "gram_row"};
  for (Eigen::Index i = 0; i < comp.lattice.rank(); ++i) {
    const std::string label = comp.lattice.labels()[i];
    const std::string vec = l.format_vector(comp.embedding.col(i));
    basis.push_back({{"label", label}, {"vector", vec}});
    out.rows.push_back({label, vec, joined(comp.lattice.gram().row(i))});
  }
  out.result["basis"] = basis;
  return out;
}

IntMatrix parse_matrix(const std::string& text) {
  std::vector<std::vector<Integer>> rows;
  std::stringstream rs(text);
  std::string row;
  while (std::getline(rs, row, ';')) {
    std::vector<Integer> entries;
    std::stringstream es(row);
    std::string e;
    while (std::getline(es, e, ',')) entries.push_back(parse_integer(e));
    if (!rows.empty() && entries.size() != rows.front().size()) {
      throw DomainError("matrix rows differ in length: '" + text + "'");
    }
    rows.push_back(std::move(entries));
  }
  if (rows.empty() || rows.front().empty()) throw DomainError("empty matrix");
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Output lattice_snf(const LatticeSource& src, const std::string& matrix) {
  Output out;
  IntMatrix m;
  if (!matrix.empty()) {
    out.inputs["matrix"] = matrix;
    m = parse_matrix(matrix);
  } else {
    src.echo(out.inputs);
    m = src.load().gram();
  }
  const auto s = smith_normal_form(m);
  Json diag = Json::array();
  out.columns = {"i", "invariant"};
  for (Eigen::Index i = 0; i < std::min(s.d.rows(), s.d.cols()); ++i) {
    diag.push_back(str(s.d(i, i)));
    out.rows.push_back({std::to_string(i + 1), str(s.d(i, i))});
  }
  out.result["diagonal"] = diag;
  out.result["rank"] = s.rank();
  out.result["u"] = matrix_json(s.u);
  out.result["v"] = matrix_json(s.v);
  return out;
}

// --- nl ------------------------------------------------------------------------

Output nl_components(int g, const std::string& locus_name, bool witnesses, int bound) {
  Output out;
  out.inputs = {{"g", g}, {"locus", locus_name}, {"witnesses", witnesses}};
  if (witnesses) out.inputs["bound"] = bound > 0 ? bound : 2 * g;
  const auto r = nl_component_count(g, parse_locus(locus_name), witnesses, bound);
  out.result["count"] = r.count();
  Json comps = Json::array();
  out.columns = {"label", "div", "class", "q"};
  if (witnesses) out.columns.push_back("witness");
  for (const auto& c : r.components) {
    Json j{{"label", c.label},
           {"div", str(c.candidate.divisibility)},
           {"class", c.candidate.dual_class.to_string()},
           {"q", str(c.q_value)}};
    std::vector<std::string> row{c.label, str(c.candidate.divisibility),
                                 c.candidate.dual_class.to_string(), str(c.q_value)};
    if (witnesses) {
      const std::string w = c.candidate.witness ? r.lattice.format_vector(*c.candidate.witness) : "";
      if (c.candidate.witness) j["witness"] = w;
      row.push_back(w);
    }
    comps.push_back(std::move(j));
    out.rows.push_back(std::move(row));
  }
  out.result["components"] = comps;
  return out;
}

NLKey make_key(int g, const std::string& d, const std::string& n) {
  return {g, parse_integer(d), parse_integer(n)};
}

Output nl_triangular(int g, const std::string& d, const std::string& n, const std::string& variant) {
  Output out;
  out.inputs = {{"g", g}, {"d", d}, {"n", n}, {"variant", variant}};
  const NLKey key = make_key(g, d, n);
  const auto terms = triangular_decomposition(key, parse_mu_variant(variant));
  out.result["delta"] = str(delta(key));
  Json js = Json::array();
  out.columns = {"d", "n", "delta", "mu"};
  for (const auto& t : terms) {
    js.push_back({{"d", str(t.d)}, {"n", str(t.n)}, {"delta", str(t.delta)}, {"mu", t.mu}});
    out.rows.push_back({str(t.d), str(t.n), str(t.delta), std::to_string(t.mu)});
  }
  out.result["terms"] = js;
  return out;
}

Output nl_vector_data_cmd(int g, const std::string& d, const std::string& n) {
  Output out;
  out.inputs = {{"g", g}, {"d", d}, {"n", n}};
  const NLKey key = make_key(g, d, n);
  const auto v = nl_vector_data(key);
  out.result = {{"delta", str(delta(key))},
                {"half_norm", str(v.half_norm)},
                {"disc_class", str(v.disc_class)},
                {"multiplicity_two", v.multiplicity_two}};
  return out;
}

// --- enum ----------------------------------------------------------------------

struct NetArgs {
  std::string alpha2, alphac1, c1sq, c2, degree = "1";
};

Output enum_net(const NetArgs& a) {
  Output out;
  out.inputs = {{"alpha2", a.alpha2}, {"alphac1", a.alphac1}, {"c1sq", a.c1sq},
                {"c2", a.c2},         {"degree", a.degree}};
  const SurfaceChernData data{parse_integer(a.alpha2), parse_integer(a.alphac1),
                              parse_integer(a.c1sq), parse_integer(a.c2)};
  const auto inv = net_invariants(data);
  const auto counts = net_counts(data, parse_integer(a.degree));
  out.result = {{"g", str(inv.g)}, {"d", str(inv.d)},       {"e", str(inv.e)},
                {"a2", str(counts.a2)}, {"a11", str(counts.a11)}};
  return out;
}

Output enum_unigonal(const std::string& table_path) {
  Output out;
  out.inputs["table"] = table_path.empty() ? "shipped" : table_path;
  const auto table = table_path.empty() ? UnigonalTable::standard() : load_unigonal_table(table_path);
  const auto counts = unigonal_counts(table);
  out.result = {{"a2", str(counts.a2)},
                {"double_point", str(unigonal_double_point(table))},
                {"a11", str(counts.a11)},
                {"table_consistent", table_is_consistent(table)}};
  return out;
}

// --- siegel --------------------------------------------------------------------

HalfIntegralTable c_table_from(const std::string& path) {
  return path.empty() ? HalfIntegralTable::standard() : load_half_integral_table(path);
}

Output series_output(const GenusTwoSeries& s, const std::vector<std::string>& indices) {
  Output out;
  const auto& tr = s.truncation();
  out.result["truncation"] = {{"k", tr.k_max}, {"m", tr.m_max}, {"l", tr.l_max}};
  Json coeffs = Json::array();
  out.columns = {"k", "l", "m", "value"};
  auto emit = [&](const GenusTwoIndex& i, const Rational& c) {
    coeffs.push_back({{"index", i.to_string()}, {"value", str(c)}});
    out.rows.push_back({std::to_string(i.k), std::to_string(i.l), std::to_string(i.m), str(c)});
  };
  if (indices.empty()) {
    for (const auto& [i, c] : s.terms()) emit(i, c);
  } else {
    for (const auto& text : indices) {
      const auto i = parse_index(text);
      emit(i, s.coefficient(i));
    }
  }
  out.result["coefficients"] = coeffs;
  return out;
}

Output siegel_chi10(long k, long m, const std::vector<std::string>& indices, const std::string& c_path) {
  Output out = series_output(chi10(c_table_from(c_path), k, m), indices);
  out.inputs = {{"trunc_k", k}, {"trunc_m", m}, {"index", indices},
                {"c_table", c_path.empty() ? "shipped" : c_path}};
  return out;
}

Output siegel_e4e6(long k, long m, const std::vector<std::string>& indices, const std::string& e4_path,
                   const std::string& e6_path) {
  const auto e4 = e4_path.empty() ? CoefficientTable::eisenstein4() : load_coeff_table(e4_path);
  const auto e6 = e6_path.empty() ? CoefficientTable::eisenstein6() : load_coeff_table(e6_path);
  Output out = series_output(e4e6(k, m, e4, e6), indices);
  out.inputs = {{"trunc_k", k},
                {"trunc_m", m},
                {"index", indices},
                {"e4_table", e4_path.empty() ? "shipped" : e4_path},
                {"e6_table", e6_path.empty() ? "shipped" : e6_path}};
  return out;
}

Output siegel_fit(const std::vector<std::string>& obs_text, const std::string& c_path) {
  Output out;
  out.inputs = {{"obs", obs_text}, {"c_table", c_path.empty() ? "shipped" : c_path}};
  std::map<GenusTwoIndex, Rational> obs;
  for (const auto& text : obs_text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw DomainError("observation '" + text + "' is not k,l,m=value");
    const auto i = parse_index(text.substr(0, eq));
    if (!obs.emplace(i, parse_rational(text.substr(eq + 1))).second) {
      throw DomainError("index " + i.to_string() + " observed twice");
    }
  }
  const auto fit = fit_weight10(obs, c_table_from(c_path));
  out.result = {{"a", str(fit.a)}, {"b", str(fit.b)}, {"integral", fit.integral()}};
  return out;
}

Output siegel_predict(const std::string& a, const std::string& b, const std::string& which,
                      const std::string& c_path) {
  Output out;
  out.inputs = {{"a", a}, {"b", b}, {"which", which}, {"c_table", c_path.empty() ? "shipped" : c_path}};
  const ThetaFit fit{parse_rational(a), parse_rational(b)};
  const auto p = parse_prediction(which);
  out.result = {{"which", std::string(to_string(p))}, {"value", str(predict_nl(fit, p, c_table_from(c_path)))}};
  return out;
}

Output siegel_independence(const std::string& a, const std::string& b, const std::string& c_path) {
  Output out;
  out.inputs = {{"a", a}, {"b", b}, {"c_table", c_path.empty() ? "shipped" : c_path}};
  const ThetaFit fit{parse_rational(a), parse_rational(b)};
  const auto table = c_table_from(c_path);
  out.result = {{"independent", independence_check(fit, table)},
                {"theta_111", str(fitted_coefficient(fit, {1, 1, 1}, table))},
                {"theta_101", str(fitted_coefficient(fit, {1, 0, 1}, table))}};
  return out;
}

// --- verify --------------------------------------------------------------------

Output verify_cmd(const std::vector<int>& ids, const std::string& unigonal_path, const std::string& c_path) {
  Output out;
  out.inputs = {{"criteria", ids.empty() ? Json("all") : Json(ids)},
                {"unigonal_table", unigonal_path.empty() ? "shipped" : unigonal_path},
                {"c_table", c_path.empty() ? "shipped" : c_path}};
  VerifyInputs in;
  if (!unigonal_path.empty()) in.unigonal = load_unigonal_table(unigonal_path);
  if (!c_path.empty()) in.c_table = load_half_integral_table(c_path);

  std::vector<CriterionResult> results;
  if (ids.empty()) {
    results = verify_all(in);
  } else {
    for (int id : ids) results.push_back(verify_criterion(id, in));
  }
  bool all = true;
  Json js = Json::array();
  out.columns = {"id", "status", "title", "expected", "actual"};
  for (const auto& r : results) {
    all = all && r.passed;
    js.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed},
                  {"expected", r.expected}, {"actual", r.actual}});
    out.rows.push_back({std::to_string(r.id), r.passed ? "PASS" : "FAIL", r.title, r.expected, r.actual});
  }
  out.result = {{"passed", all}, {"criteria", js}};
  if (!all) out.exit_code = 3;
  return out;
}

// --- driver --------------------------------------------------------------------

void emit(const std::string& format, const std::string& command, const Output& out) {
  if (format == "tsv") {
    print_tsv(std::cout, out);
    return;
  }
  Json record{{"command", command}, {"inputs", out.inputs}, {"result", out.result}, {"exact", true}};
  std::cout << record.dump(2) << '\n';
}

int emit_error(const std::string& format, const std::string& command, const std::string& kind,
               const std::string& message, int code) {
  if (format == "tsv") {
    std::cout << "error\t" << kind << '\t' << message << '\n';
  } else {
    Json record{{"command", command}, {"error", {{"kind", kind}, {"message", message}}}, {"exit_code", code}};
    std::cout << record.dump(2) << '\n';
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice, Noether-Lefschetz and genus-2 modular form computations for K3 moduli."};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "tsv"}));

  // lattice
  auto* lattice = app.add_subcommand("lattice", "Lattices and discriminant groups")->require_subcommand(1);
  LatticeSource disc_src, comp_src, snf_src;
  std::vector<std::string> comp_vectors;
  std::string snf_matrix;
  auto* disc = lattice->add_subcommand("disc", "Discriminant group with its quadratic form");
  disc_src.add_options(disc);
  auto* complement = lattice->add_subcommand("complement", "Orthogonal complement of vectors");
  comp_src.add_options(complement);
  complement->add_option("--vector", comp_vectors, "Vector such as e2+3f2 or 1,0,2 (repeatable)")->required();
  auto* snf = lattice->add_subcommand("snf", "Smith normal form of a matrix or Gram matrix");
  snf_src.add_options(snf);
  snf->add_option("--matrix", snf_matrix, "Rows separated by ';', entries by ','");

  // nl
  auto* nl = app.add_subcommand("nl", "Noether-Lefschetz loci and divisors")->require_subcommand(1);
  int comp_g = 0, comp_bound = 0;
  std::string comp_locus;
  bool comp_witnesses = false;
  auto* components = nl->add_subcommand("components", "Irreducible components of a locus");
  components->add_option("--g", comp_g, "Genus (>= 3)")->required();
  components->add_option("--locus", comp_locus, "nodal, a11 or a2")->required();
  components->add_flag("--witnesses", comp_witnesses, "Find a lattice vector for each component");
  components->add_option("--bound", comp_bound, "Witness search bound (default 2g)");

  int tri_g = 0;
  std::string tri_d, tri_n, tri_variant = "d-corrected";
  auto* triangular = nl->add_subcommand("triangular", "Decomposition into primitive divisors");
  triangular->add_option("--g", tri_g, "Genus")->required();
  triangular->add_option("--d", tri_d, "Degree against the polarization")->required();
  triangular->add_option("--n", tri_n, "Square")->required();
  triangular->add_option("--variant", tri_variant, "d-corrected or as-written");

  int vd_g = 0;
  std::string vd_d, vd_n;
  auto* vector_data = nl->add_subcommand("vector-data", "Projected half-norm and discriminant class");
  vector_data->add_option("--g", vd_g, "Genus")->required();
  vector_data->add_option("--d", vd_d, "Degree against the polarization")->required();
  vector_data->add_option("--n", vd_n, "Square")->required();

  // enum
  auto* enumerate = app.add_subcommand("enum", "Singular fiber counts from Chern classes")->require_subcommand(1);
  NetArgs net_args;
  auto* net = enumerate->add_subcommand("net", "Cuspidal and binodal members of a net of curves");
  net->add_option("--alpha2", net_args.alpha2, "alpha^2")->required();
  net->add_option("--alphac1", net_args.alphac1, "alpha.c1")->required();
  net->add_option("--c1sq", net_args.c1sq, "c1^2")->required();
  net->add_option("--c2", net_args.c2, "c2")->required();
  net->add_option("--degree", net_args.degree, "Family degree");
  std::string unigonal_table;
  auto* unigonal = enumerate->add_subcommand("unigonal", "Counts for the unigonal family");
  unigonal->add_option("--table", unigonal_table, "Pushforward table (default: shipped)");

  // siegel
  auto* siegel = app.add_subcommand("siegel", "Genus-2 Siegel modular forms")->require_subcommand(1);
  long chi_k = 2, chi_m = 2, e_k = 1, e_m = 1;
  std::vector<std::string> chi_index, e_index, fit_obs;
  std::string chi_c, e4_path, e6_path, fit_c, pred_a, pred_b, pred_which, pred_c, ind_a, ind_b, ind_c;
  auto* chi = siegel->add_subcommand("chi10", "Igusa cusp form from its product expansion");
  chi->add_option("--trunc-k", chi_k, "Largest q~ exponent");
  chi->add_option("--trunc-m", chi_m, "Largest q exponent");
  chi->add_option("--index", chi_index, "Coefficient k,l,m to report (repeatable; default all)");
  chi->add_option("--c-table", chi_c, "c(m) table (default: shipped)");
  auto* eis = siegel->add_subcommand("e4e6", "Product of the weight 4 and 6 Eisenstein series");
  eis->add_option("--trunc-k", e_k, "Largest q~ exponent");
  eis->add_option("--trunc-m", e_m, "Largest q exponent");
  eis->add_option("--index", e_index, "Coefficient k,l,m to report (repeatable; default all)");
  eis->add_option("--e4-table", e4_path, "E4 coefficient table (default: shipped)");
  eis->add_option("--e6-table", e6_path, "E6 coefficient table (default: shipped)");
  auto* fit = siegel->add_subcommand("fit", "Fit a E4E6 + b chi10 to observed coefficients");
  fit->add_option("--obs", fit_obs, "Observation k,l,m=value (repeatable)")->required();
  fit->add_option("--c-table", fit_c, "c(m) table (default: shipped)");
  auto* predict = siegel->add_subcommand("predict", "NL number from a fitted form");
  predict->add_option("--a", pred_a, "E4E6 coefficient")->required();
  predict->add_option("--b", pred_b, "chi10 coefficient")->required();
  predict->add_option("--which", pred_which, "cuspidal, binodal, hodge-disc or hodge-sq")->required();
  predict->add_option("--c-table", pred_c, "c(m) table (default: shipped)");
  auto* independence = siegel->add_subcommand("independence", "Compare with the hyperelliptic ratio");
  independence->add_option("--a", ind_a, "E4E6 coefficient")->required();
  independence->add_option("--b", ind_b, "chi10 coefficient")->required();
  independence->add_option("--c-table", ind_c, "c(m) table (default: shipped)");

  // verify
  std::vector<int> verify_ids;
  bool verify_all_flag = false;
  std::string verify_unigonal, verify_c;
  auto* verify = app.add_subcommand("verify", "Run the reproduction checks");
  auto* all_flag = verify->add_flag("--all", verify_all_flag, "All criteria (default)");
  verify->add_option("--criterion", verify_ids, "Criterion number 1-9 (repeatable)")->excludes(all_flag);
  verify->add_option("--unigonal-table", verify_unigonal, "Pushforward table (default: shipped)");
  verify->add_option("--c-table", verify_c, "c(m) table (default: shipped)");

  std::string command;
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit_error(format, "", "usage", e.what(), 1);
  }

  for (auto* sub = app.get_subcommands().front();; sub = sub->get_subcommands().front()) {
    command += (command.empty() ? "" : " ") + sub->get_name();
    if (sub->get_subcommands().empty()) break;
  }

  try {
    Output out;
    if (disc->parsed()) out = lattice_disc(disc_src);
    else if (complement->parsed()) out = lattice_complement(comp_src, comp_vectors);
    else if (snf->parsed()) out = lattice_snf(snf_src, snf_matrix);
    else if (components->parsed()) out = nl_components(comp_g, comp_locus, comp_witnesses, comp_bound);
    else if (triangular->parsed()) out = nl_triangular(tri_g, tri_d, tri_n, tri_variant);
    else if (vector_data->parsed()) out = nl_vector_data_cmd(vd_g, vd_d, vd_n);
    else if (net->parsed()) out = enum_net(net_args);
    else if (unigonal->parsed()) out = enum_unigonal(unigonal_table);
    else if (chi->parsed()) out = siegel_chi10(chi_k, chi_m, chi_index, chi_c);
    else if (eis->parsed()) out = siegel_e4e6(e_k, e_m, e_index, e4_path, e6_path);
    else if (fit->parsed()) out = siegel_fit(fit_obs, fit_c);
    else if (predict->parsed()) out = siegel_predict(pred_a, pred_b, pred_which, pred_c);
    else if (independence->parsed()) out = siegel_independence(ind_a, ind_b, ind_c);
    else if (verify->parsed()) out = verify_cmd(verify_ids, verify_unigonal, verify_c);
    emit(format, command, out);
    return out.exit_code;
  } catch (const DomainError& e) {
    return emit_error(format, command, "domain", e.what(), 1);
  } catch (const ComputationError& e) {
    return emit_error(format, command, "computation", e.what(), 2);
  }
}
