#include "sgraph/cli_run.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sgraph/chareq.hpp"
#include "sgraph/degree_set.hpp"
#include "sgraph/genfun.hpp"
#include "sgraph/sim.hpp"
#include "sgraph/structure.hpp"

namespace sgraph {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string d2s(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ordered_json jnum(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

// --lambda accepts a single value "A" or an inclusive range "A:B:POINTS".
struct LambdaSpec {
  bool is_range = false;
  double a = 0, b = 0;
  std::uint64_t points = 1;

  std::vector<double> values(bool log_grid = false) const {
    if (!is_range) return {a};
    std::vector<double> v(points);
    if (log_grid) {
      double la = std::log(a), lb = std::log(b);
      for (std::uint64_t i = 0; i < points; ++i)
        v[i] = std::exp(la + (lb - la) * static_cast<double>(i) /
                                 static_cast<double>(points - 1));
      v.front() = a;
      v.back() = b;
    } else {
      for (std::uint64_t i = 0; i < points; ++i)
        v[i] = a + (b - a) * static_cast<double>(i) /
                       static_cast<double>(points - 1);
      v.back() = b;
    }
    return v;
  }

  std::string text() const {
    if (!is_range) return d2s(a);
    return d2s(a) + ":" + d2s(b) + ":" + std::to_string(points);
  }
};

LambdaSpec parse_lambda_spec(const std::string& text, bool allow_range) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);

  auto to_double = [&](const std::string& s) {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad number '" + s + "'");
    return v;
  };

  LambdaSpec spec;
  if (parts.size() == 1) {
    spec.a = to_double(parts[0]);
    if (!(spec.a > 0) || !std::isfinite(spec.a))
      throw std::invalid_argument("--lambda must be positive and finite");
    return spec;
  }
  if (parts.size() == 3) {
    if (!allow_range)
      throw std::invalid_argument("this command takes a single --lambda value");
    spec.is_range = true;
    spec.a = to_double(parts[0]);
    spec.b = to_double(parts[1]);
    spec.points = std::stoull(parts[2]);
    if (!(spec.a > 0) || !std::isfinite(spec.b) || !(spec.b > spec.a))
      throw std::invalid_argument("--lambda range needs 0 < A < B");
    if (spec.points < 2 || spec.points > 2'000'000)
      throw std::invalid_argument("--lambda range needs 2 <= POINTS <= 2e6");
    return spec;
  }
  throw std::invalid_argument("--lambda must be A or A:B:POINTS");
}

// All option storage for every subcommand (only one subcommand runs).
struct Opts {
  std::string set_spec;
  std::string lambda_text;
  std::string format = "csv";
  std::string out_path;
  double tol = 0;  // 0 = per-command default
  double p = 0;
  double nu = 0;
  std::uint64_t n = 0;
  std::uint64_t reps = 5;
  std::uint64_t seed = 1;
  std::uint64_t degree_cutoff = 0;
  std::uint64_t n_cutoff = 0;
  std::vector<int> k_list;
  int k = 0;
  bool log_grid = false;
  bool multigraph = false;
};

using ConfigKv = std::vector<std::pair<std::string, std::string>>;

std::string config_comment(const ConfigKv& kv) {
  std::string s = "config:";
  for (const auto& [k, v] : kv) s += " " + k + "=" + v;
  return s;
}

ordered_json config_json(const ConfigKv& kv) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, v] : kv) j[k] = v;
  return j;
}

struct Csv {
  std::string text;
  void comment(const std::string& s) { text += "# " + s + "\n"; }
  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) text += ",";
      text += cells[i];
    }
    text += "\n";
  }
};

int emit(const std::string& body, const std::string& out_path) {
  if (out_path.empty()) {
    std::fwrite(body.data(), 1, body.size(), stdout);
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open output file '" << out_path << "'\n";
    return 1;
  }
  f.write(body.data(), static_cast<std::streamsize>(body.size()));
  return f.good() ? 0 : 1;
}

int emit_error_record(const std::string& type, const std::string& message,
                      const ConfigKv& kv, const ordered_json& extra,
                      const std::string& out_path) {
  ordered_json j;
  j["error"] = ordered_json::object();
  j["error"]["type"] = type;
  j["error"]["message"] = message;
  for (auto it = extra.begin(); it != extra.end(); ++it)
    j["error"][it.key()] = it.value();
  j["config"] = config_json(kv);
  std::cerr << "error: " << message << "\n";
  emit(j.dump(2) + "\n", out_path);
  return 1;
}

double effective_tol(const Opts& o, double dflt) {
  return o.tol > 0 ? o.tol : dflt;
}

// ---------------------------------------------------------------- analyze --
int run_analyze(const Opts& o, const DegreeSet& S, const LambdaSpec& ls) {
  double tol = effective_tol(o, 1e-10);
  ConfigKv kv{{"command", "analyze"},
              {"set", S.label()},
              {"lambda", ls.text()},
              {"tol", d2s(tol)},
              {"format", o.format}};
  CharEqResult r = solve_char_eq(S, ls.a, tol);
  double mu = r.mu_star_max;
  double nu = pos_mean(S, mu);
  double q = q_value(S, mu);

  auto is_max = [&](std::size_t i) {
    for (std::size_t m : r.maximizers)
      if (m == i) return true;
    return false;
  };

  if (o.format == "json") {
    ordered_json j;
    j["config"] = config_json(kv);
    j["roots"] = ordered_json::array();
    for (std::size_t i = 0; i < r.roots.size(); ++i) {
      ordered_json rj;
      rj["mu"] = jnum(r.roots[i].mu);
      rj["psi"] = jnum(r.roots[i].psi);
      rj["flag"] = r.roots[i].multiplicity_flag == RootFlag::Simple
                       ? "simple"
                       : "suspected_tangent";
      rj["is_max"] = is_max(i);
      j["roots"].push_back(rj);
    }
    j["selected"] = {{"mu", jnum(mu)},          {"psi", jnum(psi(S, mu))},
                     {"nu", jnum(nu)},          {"q", jnum(q)},
                     {"unique", r.unique},      {"mu_star_min", jnum(r.mu_star_min)},
                     {"mu_star_max", jnum(r.mu_star_max)}};
    return emit(j.dump(2) + "\n", o.out_path);
  }

  Csv csv;
  csv.comment("sgraph analyze");
  csv.comment(config_comment(kv));
  csv.comment("units: mu,psi,nu,q dimensionless; is_max,unique boolean 0/1");
  csv.row({"record", "lambda", "mu", "psi", "is_max", "flag", "nu", "q",
           "unique"});
  for (std::size_t i = 0; i < r.roots.size(); ++i)
    csv.row({"root", d2s(ls.a), d2s(r.roots[i].mu), d2s(r.roots[i].psi),
             is_max(i) ? "1" : "0",
             r.roots[i].multiplicity_flag == RootFlag::Simple
                 ? "simple"
                 : "suspected_tangent",
             "", "", ""});
  csv.row({"selected", d2s(ls.a), d2s(mu), d2s(psi(S, mu)), "", "", d2s(nu),
           d2s(q), r.unique ? "1" : "0"});
  return emit(csv.text, o.out_path);
}

// ------------------------------------------------------------------- scan --
int run_scan(const Opts& o, const DegreeSet& S, const LambdaSpec& ls) {
  double tol = effective_tol(o, 1e-6);
  ConfigKv kv{{"command", "scan"},
              {"set", S.label()},
              {"lambda", ls.text()},
              {"tol", d2s(tol)},
              {"log_grid", o.log_grid ? "1" : "0"},
              {"format", o.format}};
  ScanResult sr = scan_phases(S, ls.a, ls.b, ls.points, tol, o.log_grid);

  if (o.format == "json") {
    ordered_json j;
    j["config"] = config_json(kv);
    j["points"] = ordered_json::array();
    for (const ScanPoint& p : sr.table)
      j["points"].push_back({{"lambda", jnum(p.lambda)},
                             {"mu", jnum(p.mu_star)},
                             {"psi", jnum(p.psi)},
                             {"nu", jnum(p.nu)},
                             {"q", jnum(p.q)},
                             {"unique", p.unique}});
    j["transitions"] = ordered_json::array();
    for (const PhaseTransition& t : sr.transitions)
      j["transitions"].push_back({{"lambda_c", jnum(t.lambda_c)},
                                  {"type", phase_type_name(t.type)},
                                  {"mu_left", jnum(t.mu_left)},
                                  {"mu_right", jnum(t.mu_right)},
                                  {"detail", t.detail}});
    j["warnings"] = sr.warnings;
    return emit(j.dump(2) + "\n", o.out_path);
  }

  Csv csv;
  csv.comment("sgraph scan");
  csv.comment(config_comment(kv));
  csv.comment(
      "units: lambda,mu,psi,nu,q dimensionless; unique boolean 0/1; "
      "transition rows carry type,mu_left,mu_right,detail");
  csv.row({"record", "lambda", "mu", "psi", "nu", "q", "unique", "type",
           "mu_left", "mu_right", "detail"});
  for (const ScanPoint& p : sr.table)
    csv.row({"point", d2s(p.lambda), d2s(p.mu_star), d2s(p.psi), d2s(p.nu),
             d2s(p.q), p.unique ? "1" : "0", "", "", "", ""});
  for (const PhaseTransition& t : sr.transitions)
    csv.row({"transition", d2s(t.lambda_c), "", "", "", "", "",
             phase_type_name(t.type), d2s(t.mu_left), d2s(t.mu_right),
             t.detail});
  for (const std::string& w : sr.warnings)
    csv.row({"warning", "", "", "", "", "", "", "", "", "", w});
  return emit(csv.text, o.out_path);
}

// ------------------------------------------------------------------ giant --
int run_giant(const Opts& o, const DegreeSet& S, const LambdaSpec& ls) {
  double tol = effective_tol(o, 1e-10);
  ConfigKv kv{{"command", "giant"},
              {"set", S.label()},
              {"lambda", ls.text()},
              {"tol", d2s(tol)},
              {"format", o.format}};
  std::vector<double> lambdas = ls.values(o.log_grid);

  struct Row {
    double lambda, mu, q, xi, gamma, zeta, gw;
    GiantCase c;
  };
  std::vector<Row> rows;
  for (double la : lambdas) {
    GiantPrediction g = giant_prediction(S, la, tol);
    double gw = gw_extinction(S, g.mu);
    rows.push_back({la, g.mu, g.Q, g.xi_star, g.gamma_star, g.zeta_star, gw,
                    g.case_id});
  }

  if (o.format == "json") {
    ordered_json j;
    j["config"] = config_json(kv);
    j["rows"] = ordered_json::array();
    for (const Row& r : rows)
      j["rows"].push_back({{"lambda", jnum(r.lambda)},
                           {"mu", jnum(r.mu)},
                           {"q", jnum(r.q)},
                           {"case", giant_case_name(r.c)},
                           {"xi_star", jnum(r.xi)},
                           {"gamma_star", jnum(r.gamma)},
                           {"zeta_star", jnum(r.zeta)},
                           {"gw_extinction", jnum(r.gw)}});
    return emit(j.dump(2) + "\n", o.out_path);
  }

  Csv csv;
  csv.comment("sgraph giant");
  csv.comment(config_comment(kv));
  csv.comment(
      "units: gamma_star fraction of vertices; zeta_star edges per vertex; "
      "xi_star,gw_extinction probabilities");
  csv.row({"lambda", "mu", "q", "case", "xi_star", "gamma_star", "zeta_star",
           "gw_extinction"});
  for (const Row& r : rows)
    csv.row({d2s(r.lambda), d2s(r.mu), d2s(r.q), giant_case_name(r.c),
             d2s(r.xi), d2s(r.gamma), d2s(r.zeta), d2s(r.gw)});
  return emit(csv.text, o.out_path);
}

// ------------------------------------------------------------------- core --
int run_core(const Opts& o, const DegreeSet& S, const LambdaSpec& ls) {
  double tol = effective_tol(o, 1e-10);
  ConfigKv kv{{"command", "core"},
              {"set", S.label()},
              {"lambda", ls.text()},
              {"k", std::to_string(o.k)},
              {"tol", d2s(tol)},
              {"format", o.format}};
  std::vector<double> lambdas = ls.values(o.log_grid);

  std::vector<CorePrediction> rows;
  for (double la : lambdas) rows.push_back(core_prediction(S, la, o.k, tol));

  if (o.format == "json") {
    ordered_json j;
    j["config"] = config_json(kv);
    j["rows"] = ordered_json::array();
    for (std::size_t i = 0; i < rows.size(); ++i)
      j["rows"].push_back({{"lambda", jnum(lambdas[i])},
                           {"mu", jnum(rows[i].mu)},
                           {"k", rows[i].k},
                           {"r_hat", jnum(rows[i].r_hat)},
                           {"vertex_frac", jnum(rows[i].vertex_fraction)},
                           {"edges_per_n", jnum(rows[i].edge_fraction)},
                           {"degenerate_boundary", rows[i].degenerate_boundary},
                           {"note", rows[i].note}});
    return emit(j.dump(2) + "\n", o.out_path);
  }

  Csv csv;
  csv.comment("sgraph core");
  csv.comment(config_comment(kv));
  csv.comment(
      "units: vertex_frac fraction of vertices; edges_per_n edges per vertex; "
      "r_hat probability; degenerate_boundary boolean 0/1");
  csv.row({"lambda", "mu", "k", "r_hat", "vertex_frac", "edges_per_n",
           "degenerate_boundary", "note"});
  for (std::size_t i = 0; i < rows.size(); ++i)
    csv.row({d2s(lambdas[i]), d2s(rows[i].mu), std::to_string(rows[i].k),
             d2s(rows[i].r_hat), d2s(rows[i].vertex_fraction),
             d2s(rows[i].edge_fraction), rows[i].degenerate_boundary ? "1" : "0",
             rows[i].note});
  return emit(csv.text, o.out_path);
}

// --------------------------------------------------------------- simulate --
int run_simulate(const Opts& o, const DegreeSet& S, const LambdaSpec& ls) {
  ConfigKv kv{{"command", "simulate"},
              {"set", S.label()},
              {"lambda", ls.text()},
              {"n", std::to_string(o.n)},
              {"reps", std::to_string(o.reps)},
              {"seed", std::to_string(o.seed)},
              {"graphs", o.multigraph ? "multigraph" : "simple"},
              {"format", o.format}};
  {
    std::string ks;
    for (int k : o.k_list) ks += (ks.empty() ? "" : ";") + std::to_string(k);
    kv.emplace_back("k_list", ks.empty() ? "none" : ks);
  }
  McSummary s = mc_experiment(S, ls.a, o.n, o.reps, o.k_list, o.seed,
                              !o.multigraph);

  if (o.format == "json") {
    ordered_json j;
    j["config"] = config_json(kv);
    j["predictions"] = {{"mu", jnum(s.mu)},
                        {"nu", jnum(s.nu)},
                        {"edges_per_n", jnum(0.5 * s.nu)},
                        {"gamma_star", jnum(s.gamma_star)},
                        {"zeta_star", jnum(s.zeta_star)}};
    j["predictions"]["cores"] = ordered_json::array();
    for (std::size_t i = 0; i < s.k_list.size(); ++i)
      j["predictions"]["cores"].push_back(
          {{"k", s.k_list[i]},
           {"vertex_frac", jnum(s.core_vertex_pred[i])},
           {"edges_per_n", jnum(s.core_edge_pred[i])}});
    j["replicates"] = ordered_json::array();
    for (const McReplicate& r : s.replicates) {
      ordered_json rj = {{"replicate", r.replicate},
                         {"attempts", r.attempts},
                         {"tv_degree", jnum(r.tv_degree)},
                         {"edges_per_n", jnum(r.edges_per_n)},
                         {"largest_frac", jnum(r.largest_frac)},
                         {"second_frac", jnum(r.second_frac)}};
      rj["cores"] = ordered_json::array();
      for (std::size_t i = 0; i < s.k_list.size(); ++i)
        rj["cores"].push_back({{"k", s.k_list[i]},
                               {"vertex_frac", jnum(r.core_vertex_frac[i])},
                               {"edges_per_n", jnum(r.core_edge_frac[i])}});
      j["replicates"].push_back(rj);
    }
    j["max_deviation"] = {{"tv_degree", jnum(s.max_tv)},
                          {"edges_per_n", jnum(s.max_edge_dev)},
                          {"largest_frac", jnum(s.max_largest_dev)},
                          {"second_frac", jnum(s.max_second)}};
    j["max_deviation"]["cores"] = ordered_json::array();
    for (std::size_t i = 0; i < s.k_list.size(); ++i)
      j["max_deviation"]["cores"].push_back(
          {{"k", s.k_list[i]},
           {"vertex_frac", jnum(s.max_core_vertex_dev[i])},
           {"edges_per_n", jnum(s.max_core_edge_dev[i])}});
    return emit(j.dump(2) + "\n", o.out_path);
  }

  Csv csv;
  csv.comment("sgraph simulate");
  csv.comment(config_comment(kv));
  csv.comment(
      "units: *_frac fraction of vertices; edges_per_n edges per vertex; "
      "tv_degree total-variation distance; attempts count; k core order");
  csv.row({"record", "replicate", "metric", "k", "observed", "predicted",
           "deviation"});
  auto num = [](double v) { return d2s(v); };
  csv.row({"prediction", "", "mu", "", "", num(s.mu), ""});
  csv.row({"prediction", "", "nu", "", "", num(s.nu), ""});
  csv.row({"prediction", "", "edges_per_n", "", "", num(0.5 * s.nu), ""});
  csv.row({"prediction", "", "largest_frac", "", "", num(s.gamma_star), ""});
  csv.row({"prediction", "", "giant_edges_per_n", "", "", num(s.zeta_star), ""});
  for (std::size_t i = 0; i < s.k_list.size(); ++i) {
    csv.row({"prediction", "", "core_vertex_frac", std::to_string(s.k_list[i]),
             "", num(s.core_vertex_pred[i]), ""});
    csv.row({"prediction", "", "core_edges_per_n", std::to_string(s.k_list[i]),
             "", num(s.core_edge_pred[i]), ""});
  }
  for (const McReplicate& r : s.replicates) {
    std::string rep = std::to_string(r.replicate);
    csv.row({"replicate", rep, "attempts", "",
             std::to_string(r.attempts), "", ""});
    csv.row({"replicate", rep, "tv_degree", "", num(r.tv_degree), "0",
             num(r.tv_degree)});
    csv.row({"replicate", rep, "edges_per_n", "", num(r.edges_per_n),
             num(0.5 * s.nu), num(std::abs(r.edges_per_n - 0.5 * s.nu))});
    csv.row({"replicate", rep, "largest_frac", "", num(r.largest_frac),
             num(s.gamma_star), num(std::abs(r.largest_frac - s.gamma_star))});
    csv.row({"replicate", rep, "second_frac", "", num(r.second_frac), "0",
             num(r.second_frac)});
    for (std::size_t i = 0; i < s.k_list.size(); ++i) {
      std::string kstr = std::to_string(s.k_list[i]);
      csv.row({"replicate", rep, "core_vertex_frac", kstr,
               num(r.core_vertex_frac[i]), num(s.core_vertex_pred[i]),
               num(std::abs(r.core_vertex_frac[i] - s.core_vertex_pred[i]))});
      csv.row({"replicate", rep, "core_edges_per_n", kstr,
               num(r.core_edge_frac[i]), num(s.core_edge_pred[i]),
               num(std::abs(r.core_edge_frac[i] - s.core_edge_pred[i]))});
    }
  }
  csv.row({"max_deviation", "", "tv_degree", "", "", "", num(s.max_tv)});
  csv.row({"max_deviation", "", "edges_per_n", "", "", "", num(s.max_edge_dev)});
  csv.row({"max_deviation", "", "largest_frac", "", "", "",
           num(s.max_largest_dev)});
  csv.row({"max_deviation", "", "second_frac", "", "", "", num(s.max_second)});
  for (std::size_t i = 0; i < s.k_list.size(); ++i) {
    std::string kstr = std::to_string(s.k_list[i]);
    csv.row({"max_deviation", "", "core_vertex_frac", kstr, "", "",
             num(s.max_core_vertex_dev[i])});
    csv.row({"max_deviation", "", "core_edges_per_n", kstr, "", "",
             num(s.max_core_edge_dev[i])});
  }
  return emit(csv.text, o.out_path);
}

// -------------------------------------------------------------- enumerate --
int run_enumerate(const Opts& o, const DegreeSet& S) {
  ConfigKv kv{{"command", "enumerate"},
              {"set", S.label()},
              {"n", std::to_string(o.n)},
              {"p", d2s(o.p)},
              {"format", o.format}};
  ExactEnumeration e = enumerate_exact(S, static_cast<unsigned>(o.n), o.p);

  auto degree_key = [](const std::vector<std::uint8_t>& key) {
    std::string s;
    for (std::size_t i = 0; i < key.size(); ++i)
      s += (i ? ":" : "") + std::to_string(static_cast<unsigned>(key[i]));
    return s;
  };

  if (o.format == "json") {
    ordered_json j;
    j["config"] = config_json(kv);
    j["z"] = jnum(e.z);
    j["prob_s_graph"] = jnum(e.prob_s_graph());
    j["expected_edges"] = jnum(e.expected_edges);
    j["expected_triangles"] = jnum(e.expected_triangles);
    j["edge_count_pmf"] = ordered_json::array();
    for (double v : e.edge_count_pmf) j["edge_count_pmf"].push_back(jnum(v));
    j["largest_component_pmf"] = ordered_json::array();
    for (double v : e.largest_component_pmf)
      j["largest_component_pmf"].push_back(jnum(v));
    j["degree_count_law"] = ordered_json::object();
    for (const auto& [key, prob] : e.degree_count_law)
      j["degree_count_law"][degree_key(key)] = jnum(prob);
    return emit(j.dump(2) + "\n", o.out_path);
  }

  Csv csv;
  csv.comment("sgraph enumerate");
  csv.comment(config_comment(kv));
  csv.comment(
      "units: value is a probability except for expected_edges and "
      "expected_triangles (counts); key is an edge count, a component size, "
      "or a degree-count vector n_0:n_1:...");
  csv.row({"record", "key", "value"});
  csv.row({"summary", "z", d2s(e.z)});
  csv.row({"summary", "prob_s_graph", d2s(e.prob_s_graph())});
  csv.row({"summary", "expected_edges", d2s(e.expected_edges)});
  csv.row({"summary", "expected_triangles", d2s(e.expected_triangles)});
  for (std::size_t i = 0; i < e.edge_count_pmf.size(); ++i)
    csv.row({"edge_count_pmf", std::to_string(i), d2s(e.edge_count_pmf[i])});
  for (std::size_t i = 1; i < e.largest_component_pmf.size(); ++i)
    csv.row({"largest_component_pmf", std::to_string(i),
             d2s(e.largest_component_pmf[i])});
  for (const auto& [key, prob] : e.degree_count_law)
    csv.row({"degree_count_law", degree_key(key), d2s(prob)});
  return emit(csv.text, o.out_path);
}

// -------------------------------------------------------------- partition --
int run_partition(const Opts& o, const DegreeSet& S, double nu) {
  ConfigKv kv{{"command", "partition"},  {"set", S.label()},
              {"n", std::to_string(o.n)}, {"nu", d2s(nu)},
              {"format", o.format}};
  PartitionSeries ps =
      multigraph_partition_series(S, o.n, nu, o.degree_cutoff, o.n_cutoff);
  kv.emplace_back("degree_cutoff", std::to_string(ps.degree_cutoff));
  kv.emplace_back("n_cutoff", std::to_string(ps.n_cutoff));

  double per_n = ps.log_z_star / static_cast<double>(o.n);
  if (o.format == "json") {
    ordered_json j;
    j["config"] = config_json(kv);
    j["log_z_star"] = jnum(ps.log_z_star);
    j["log_z_star_per_n"] = jnum(per_n);
    j["tail_estimate"] = jnum(ps.tail_estimate);
    return emit(j.dump(2) + "\n", o.out_path);
  }
  Csv csv;
  csv.comment("sgraph partition");
  csv.comment(config_comment(kv));
  csv.comment(
      "units: log_z_star natural log of the weighted multigraph sum; "
      "tail_estimate relative to z_star");
  csv.row({"n", "nu", "log_z_star", "log_z_star_per_n", "tail_estimate"});
  csv.row({std::to_string(o.n), d2s(nu), d2s(ps.log_z_star), d2s(per_n),
           d2s(ps.tail_estimate)});
  return emit(csv.text, o.out_path);
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  Opts o;
  CLI::App app{
      "sgraph: random graphs G(n, lambda/n) conditioned on all vertex "
      "degrees lying in a set S"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* c, bool with_tol = true) {
    c->add_option("--set", o.set_spec,
                  "Degree set: even | odd | ge:<s> | set:k1,k2,... | "
                  "pow2:<cutoff>, optionally |cut:<K>")
        ->required();
    c->add_option("--format", o.format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->envname("SGRAPH_FORMAT");
    c->add_option("--out", o.out_path, "Output file (default stdout)")
        ->envname("SGRAPH_OUT");
    if (with_tol)
      c->add_option("--tol", o.tol, "Root-finding tolerance")
          ->envname("SGRAPH_TOL");
  };

  CLI::App* analyze = app.add_subcommand(
      "analyze", "Roots of the characteristic equation at one lambda");
  add_common(analyze);
  analyze->add_option("--lambda", o.lambda_text, "Edge-density parameter")
      ->required();

  CLI::App* scan = app.add_subcommand(
      "scan", "Sweep lambda, tabulate the selected root, locate transitions");
  add_common(scan);
  scan->add_option("--lambda", o.lambda_text, "Range A:B:POINTS")->required();
  scan->add_flag("--log-grid", o.log_grid, "Logarithmic lambda grid");

  CLI::App* giant = app.add_subcommand(
      "giant", "Giant-component prediction (and extinction cross-check)");
  add_common(giant);
  giant->add_option("--lambda", o.lambda_text, "Value A or range A:B:POINTS")
      ->required();
  giant->add_flag("--log-grid", o.log_grid, "Logarithmic lambda grid");

  CLI::App* core =
      app.add_subcommand("core", "k-core prediction from the thinning fixed point");
  add_common(core);
  core->add_option("--lambda", o.lambda_text, "Value A or range A:B:POINTS")
      ->required();
  core->add_option("--k", o.k, "Core order (k >= 2)")->required();
  core->add_flag("--log-grid", o.log_grid, "Logarithmic lambda grid");

  CLI::App* simulate = app.add_subcommand(
      "simulate", "Configuration-model Monte Carlo vs the predictions");
  add_common(simulate, false);
  simulate->add_option("--lambda", o.lambda_text, "Edge-density parameter")
      ->required();
  simulate->add_option("--n", o.n, "Number of vertices")->required();
  simulate->add_option("--reps", o.reps, "Replicates (default 5)");
  simulate->add_option("--k", o.k_list, "Core orders to measure (repeatable)");
  simulate->add_option("--seed", o.seed, "RNG seed (default 1)")
      ->envname("SGRAPH_SEED");
  simulate->add_flag(
      "--multigraph", o.multigraph,
      "Keep raw configuration multigraphs instead of rejecting to simple");

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "Exact small-n law by complete subgraph enumeration");
  add_common(enumerate, false);
  enumerate->add_option("--n", o.n, "Number of vertices (1..7)")->required();
  enumerate->add_option("--p", o.p, "Edge probability in (0,1)")->required();

  CLI::App* partition = app.add_subcommand(
      "partition", "Weighted multigraph partition series log Z*");
  add_common(partition, false);
  partition->add_option("--n", o.n, "Number of vertices")->required();
  partition->add_option("--nu", o.nu, "Per-pair edge intensity (overrides --lambda/n)");
  partition->add_option("--lambda", o.lambda_text,
                        "Edge-density parameter; nu = lambda/n");
  partition->add_option("--degree-cutoff", o.degree_cutoff,
                        "Series truncation: max degree (0 = auto)");
  partition->add_option("--n-cutoff", o.n_cutoff,
                        "Series truncation: max edge count (0 = auto)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();

  // Validation phase: bad inputs are usage errors (exit 2).
  std::optional<DegreeSet> parsed_set;
  LambdaSpec ls;
  double nu = 0;
  try {
    bool allow_trivial = cmd == "enumerate" || cmd == "partition";
    parsed_set = DegreeSet::parse(o.set_spec, allow_trivial);
    if (cmd == "analyze" || cmd == "simulate")
      ls = parse_lambda_spec(o.lambda_text, false);
    else if (cmd == "scan") {
      ls = parse_lambda_spec(o.lambda_text, true);
      if (!ls.is_range)
        throw std::invalid_argument("scan requires --lambda A:B:POINTS");
    } else if (cmd == "giant" || cmd == "core")
      ls = parse_lambda_spec(o.lambda_text, true);
    if (cmd == "core" && o.k < 2)
      throw std::invalid_argument("--k must be at least 2");
    for (int k : o.k_list)
      if (k < 2) throw std::invalid_argument("--k values must be at least 2");
    if (cmd == "simulate" || cmd == "partition") {
      if (o.n < 1) throw std::invalid_argument("--n must be positive");
      if (cmd == "simulate" && o.reps < 1)
        throw std::invalid_argument("--reps must be positive");
    }
    if (cmd == "enumerate") {
      if (o.n < 1 || o.n > 7)
        throw std::invalid_argument("--n must lie in 1..7");
      if (!(o.p > 0 && o.p < 1))
        throw std::invalid_argument("--p must lie strictly inside (0,1)");
    }
    if (cmd == "partition") {
      if (o.nu > 0)
        nu = o.nu;
      else if (!o.lambda_text.empty()) {
        LambdaSpec tmp = parse_lambda_spec(o.lambda_text, false);
        nu = tmp.a / static_cast<double>(o.n);
      } else
        throw std::invalid_argument("partition needs --nu or --lambda");
    }
    if (o.tol != 0 && !(o.tol > 0 && o.tol <= 1e-3))
      throw std::invalid_argument("--tol must lie in (0, 1e-3]");
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  // Compute phase: numerical failures are exit 1 with a JSON error record.
  const DegreeSet& S = *parsed_set;
  ConfigKv err_kv{{"command", cmd}, {"set", S.label()}};
  if (!o.lambda_text.empty()) err_kv.emplace_back("lambda", o.lambda_text);
  try {
    if (cmd == "analyze") return run_analyze(o, S, ls);
    if (cmd == "scan") return run_scan(o, S, ls);
    if (cmd == "giant") return run_giant(o, S, ls);
    if (cmd == "core") return run_core(o, S, ls);
    if (cmd == "simulate") return run_simulate(o, S, ls);
    if (cmd == "enumerate") return run_enumerate(o, S);
    return run_partition(o, S, nu);
  } catch (const TieError& e) {
    ordered_json extra = {{"lambda", jnum(e.lambda())},
                          {"mu_low", jnum(e.mu_low())},
                          {"mu_high", jnum(e.mu_high())}};
    return emit_error_record("tied_maximizers", e.what(), err_kv, extra,
                             o.out_path);
  } catch (const std::exception& e) {
    return emit_error_record("numerical_failure", e.what(), err_kv,
                             ordered_json::object(), o.out_path);
  }
}

}  // namespace sgraph
