#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "infconn/bounds.hpp"
#include "infconn/cheeger.hpp"
#include "infconn/edge_list.hpp"
#include "infconn/families.hpp"
#include "infconn/gamma.hpp"
#include "infconn/graph.hpp"
#include "infconn/lp_oracle.hpp"
#include "infconn/random_graphs.hpp"
#include "infconn/spectral.hpp"

// Subcommand implementations for the `infconn` executable. Each command
// writes its document to `out`, diagnostics to `err`, and returns the exit
// code: 0 success, 1 verification failure, 2 input error, 3 cap violation.

namespace infconn::cli {

using json = nlohmann::ordered_json;

enum ExitCode : int { kSuccess = 0, kVerifyFailed = 1, kInputError = 2, kCapViolation = 3 };

struct Caps {
  std::size_t lp_max_n = 60;
  std::size_t cheeger_max_n = kCheegerMaxN;
  std::size_t b_max_n = kBOracleMaxN;

  /// GAMMA_MAX_N, when set to a positive integer, replaces every cap.
  static Caps from_env() {
    Caps caps;
    if (const char* v = std::getenv("GAMMA_MAX_N")) {
      char* end = nullptr;
      const unsigned long long cap = std::strtoull(v, &end, 10);
      if (end != v && *end == '\0' && cap > 0) caps.lp_max_n = caps.cheeger_max_n = caps.b_max_n = cap;
    }
    return caps;
  }
};

struct GlobalOptions {
  bool json = false;
  double tol = 1e-9;
  unsigned long long seed = 1;
  Caps caps = Caps::from_env();
};

struct AnalysisFlags {
  bool lp = false;
  bool spectral = false;
  bool cheeger = false;
};

inline json skipped(const std::string& reason) { return json{{"skipped", reason}}; }

inline json fraction(const Rational& r) { return json{{"num", r.num()}, {"den", r.den()}, {"approx", r.to_double()}}; }

inline json spectral_json(const SpectralEstimate& s) {
  return json{{"value", s.value}, {"residual", s.residual}, {"iterations", s.iterations}, {"converged", s.converged}};
}

inline json graph_summary(const Graph& g) {
  return json{{"n", g.n()}, {"m", g.m()}, {"connected", is_connected(g)}, {"tree", is_tree(g)}};
}

inline json certificate_json(const GammaCertificate& cert) {
  json values = json::array();
  for (const auto& x : cert.witness) values.push_back(json{{"num", x.num()}, {"den", x.den()}});
  json w{{"valid", cert.witness_valid},
         {"values", values},
         {"residuals",
          {{"sum", fraction(cert.residuals.sum)},
           {"sup_norm", fraction(cert.residuals.sup_norm_deviation)},
           {"edge_gap", fraction(cert.residuals.edge_gap)}}}};
  w["fallback"] = cert.fallback_witness.empty() ? json(nullptr) : json(cert.fallback_witness);
  return w;
}

inline json entry_json(const BoundEntry& e) {
  json j{{"id", e.id}, {"statement", e.statement}, {"relation", e.relation == Strictness::Strict ? "strict" : "nonstrict"},
         {"status", to_string(e.status)}};
  if (e.status == EntryStatus::Evaluated) {
    j["lhs"] = e.lhs;
    j["rhs"] = e.rhs;
    j["lhs_exact"] = e.lhs_exact ? json(e.lhs_exact->str()) : json(nullptr);
    j["rhs_exact"] = e.rhs_exact ? json(e.rhs_exact->str()) : json(nullptr);
    j["holds"] = e.holds;
    j["equality_attained"] = e.equality_attained;
  } else {
    j["lhs"] = j["rhs"] = j["lhs_exact"] = j["rhs_exact"] = j["holds"] = j["equality_attained"] = nullptr;
  }
  j["equality_expected"] = e.equality_expected ? json(*e.equality_expected) : json(nullptr);
  j["note"] = e.note;
  return j;
}

inline json report_json(const BoundReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) entries.push_back(entry_json(e));
  return json{{"all_hold", r.all_hold()}, {"entries", entries}};
}

inline json lp_oracle_json(const Graph& g, const GammaCertificate& cert, double tol) {
  const auto profile = lp_gamma_profile(g, tol);
  const bool agrees = std::abs(profile.gamma - cert.approx()) <= 1e-6;
  return json{{"lp_gamma", profile.gamma}, {"per_k", profile.per_k}, {"best_k", profile.best_k}, {"agrees", agrees}};
}

/// Builds the full result document; every key is always present.
inline json result_document(const std::string& command, const Graph& g, const GammaCertificate& cert,
                            const AnalysisFlags& flags, const GlobalOptions& opt,
                            const std::optional<BoundReport>& report) {
  const bool connected = cert.connected;
  const std::string disconnected = "graph is disconnected";
  json doc;
  doc["command"] = command;
  doc["graph"] = graph_summary(g);
  doc["gamma"] = fraction(cert.gamma);
  doc["attaining_vertex"] = cert.attaining_vertex ? json(*cert.attaining_vertex) : json(nullptr);
  doc["witness"] = certificate_json(cert);

  json inv;
  if (connected) {
    const auto table = transmission_table(g);
    inv["wiener"] = table.wiener;
    inv["d_max"] = table.d_max;
    inv["transmission_regular"] = table.argmax.size() == g.n();
  } else {
    inv["wiener"] = inv["d_max"] = inv["transmission_regular"] = skipped(disconnected);
  }
  const std::string not_requested = "not requested (--spectral)";
  if (!flags.spectral) {
    inv["distance_spectral_radius"] = inv["algebraic_connectivity"] = inv["normalized_laplacian_mu"] =
        skipped(not_requested);
  } else {
    inv["distance_spectral_radius"] =
        connected ? spectral_json(distance_spectral_radius(g, opt.tol)) : skipped(disconnected);
    inv["algebraic_connectivity"] = spectral_json(algebraic_connectivity(g, opt.tol));
    inv["normalized_laplacian_mu"] =
        connected ? spectral_json(normalized_laplacian_mu(g, opt.tol)) : skipped(disconnected);
  }
  if (!flags.cheeger) {
    inv["cheeger"] = skipped("not requested (--cheeger)");
  } else if (!connected) {
    inv["cheeger"] = skipped(disconnected);
  } else {
    const auto h = cheeger_constant(g, opt.caps.cheeger_max_n);
    json c = fraction(h.value);
    c["subset"] = h.subset;
    inv["cheeger"] = c;
  }
  doc["invariants"] = inv;

  doc["bounds"] = report ? report_json(*report) : skipped(command == "verify" ? "not evaluated" : "run 'verify'");

  if (!flags.lp) doc["oracle"] = skipped("not requested (--lp)");
  else if (!connected) doc["oracle"] = skipped(disconnected);
  else doc["oracle"] = lp_oracle_json(g, cert, opt.tol);
  return doc;
}

namespace detail {

inline void print_value(std::ostream& out, const std::string& key, const json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object() && v.contains("skipped") && v.size() == 1) {
    out << pad << key << ": skipped (" << v["skipped"].get<std::string>() << ")\n";
  } else if (v.is_object() && v.contains("num") && v.contains("den")) {
    out << pad << key << ": " << v["num"].get<long long>();
    if (v["den"].get<long long>() != 1) out << "/" << v["den"].get<long long>();
    if (v.contains("approx")) out << " (" << std::setprecision(12) << v["approx"].get<double>() << ")";
    out << "\n";
  } else if (v.is_object()) {
    out << pad << key << ":\n";
    for (const auto& [k, sub] : v.items()) print_value(out, k, sub, indent + 2);
  } else {
    out << pad << key << ": " << v.dump() << "\n";
  }
}

}  // namespace detail

/// Plain-text rendering of a result document.
inline void print_text(std::ostream& out, const json& doc) {
  for (const auto& [key, value] : doc.items()) {
    if (key == "witness") {
      std::string values;
      for (const auto& x : value["values"]) {
        if (!values.empty()) values += ' ';
        values += std::to_string(x["num"].get<long long>());
        if (x["den"].get<long long>() != 1) values += "/" + std::to_string(x["den"].get<long long>());
      }
      out << "witness: " << (value["valid"].get<bool>() ? "valid" : "INVALID") << " [" << values << "]\n";
    } else if (key == "bounds" && value.contains("entries")) {
      out << "bounds: " << (value["all_hold"].get<bool>() ? "all hold" : "VIOLATION") << "\n";
      for (const auto& e : value["entries"]) {
        out << "  (" << e["id"].get<std::string>() << ") " << e["statement"].get<std::string>() << ": ";
        if (e["status"] == "evaluated") {
          out << (e["holds"].get<bool>() ? "holds" : "FAILS") << "  lhs=" << std::setprecision(12)
              << e["lhs"].get<double>() << " rhs=" << e["rhs"].get<double>();
          if (e["equality_attained"].get<bool>()) out << "  [equality]";
        } else {
          out << e["status"].get<std::string>() << " (" << e["note"].get<std::string>() << ")";
        }
        out << "\n";
      }
    } else {
      detail::print_value(out, key, value, 0);
    }
  }
}

inline void emit(std::ostream& out, const json& doc, const GlobalOptions& opt) {
  if (opt.json) out << doc.dump(2) << "\n";
  else print_text(out, doc);
}

inline int cap_violation(std::ostream& err, const std::string& what, std::size_t n, std::size_t cap) {
  err << "error: " << what << " limited to n <= " << cap << " (graph has n = " << n
      << "); set GAMMA_MAX_N to override\n";
  return kCapViolation;
}

inline std::optional<int> check_caps(const Graph& g, const AnalysisFlags& flags, const GlobalOptions& opt,
                                     std::ostream& err) {
  if (flags.lp && g.n() > opt.caps.lp_max_n) return cap_violation(err, "--lp", g.n(), opt.caps.lp_max_n);
  if (flags.cheeger && g.n() > opt.caps.cheeger_max_n)
    return cap_violation(err, "--cheeger", g.n(), opt.caps.cheeger_max_n);
  return std::nullopt;
}

inline int cmd_compute(const std::string& path, const AnalysisFlags& flags, const GlobalOptions& opt,
                       std::ostream& out, std::ostream& err) {
  try {
    const Graph g = read_edge_list_file(path);
    if (auto code = check_caps(g, flags, opt, err)) return *code;
    const auto cert = gamma(g);
    emit(out, result_document("compute", g, cert, flags, opt, std::nullopt), opt);
    return kSuccess;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::TooLarge ? kCapViolation : kInputError;
  }
}

inline int cmd_verify(const std::string& path, const AnalysisFlags& flags, const GlobalOptions& opt,
                      std::ostream& out, std::ostream& err) {
  try {
    const Graph g = read_edge_list_file(path);
    if (!is_connected(g)) {
      err << "error: verify requires a connected graph\n";
      return kInputError;
    }
    if (auto code = check_caps(g, flags, opt, err)) return *code;
    AnalysisFlags all = flags;
    all.spectral = true;
    const auto cert = gamma(g);
    BoundOptions bo;
    bo.cheeger = flags.cheeger;
    bo.b_oracle = flags.lp;
    bo.cheeger_max_n = opt.caps.cheeger_max_n;
    bo.b_max_n = opt.caps.b_max_n;
    const auto report = bound_report(g, bo);
    const json doc = result_document("verify", g, cert, all, opt, report);
    emit(out, doc, opt);
    bool ok = report.all_hold() && cert.witness_valid;
    if (flags.lp) ok = ok && doc["oracle"]["agrees"].get<bool>();
    return ok ? kSuccess : kVerifyFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::TooLarge ? kCapViolation : kInputError;
  }
}

/// verify over a seeded corpus of random connected G(n, 0.4) graphs with
/// 2 <= n <= max_n.
inline int cmd_verify_random(std::size_t count, std::size_t max_n, const AnalysisFlags& flags,
                             const GlobalOptions& opt, std::ostream& out, std::ostream& err) {
  if (max_n < 2) {
    err << "error: --max-n must be at least 2\n";
    return kInputError;
  }
  if (flags.lp && max_n > opt.caps.lp_max_n) return cap_violation(err, "--lp", max_n, opt.caps.lp_max_n);
  if (flags.cheeger && max_n > opt.caps.cheeger_max_n)
    return cap_violation(err, "--cheeger", max_n, opt.caps.cheeger_max_n);
  random::Rng rng(opt.seed);
  std::uniform_int_distribution<std::size_t> size(2, max_n);
  json runs = json::array();
  std::size_t failures = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const Graph g = random::connected_gnp(size(rng), 0.4, rng);
    BoundOptions bo;
    bo.cheeger = flags.cheeger;
    bo.b_oracle = flags.lp;
    bo.cheeger_max_n = opt.caps.cheeger_max_n;
    bo.b_max_n = opt.caps.b_max_n;
    const auto cert = gamma(g);
    const auto report = bound_report(g, bo);
    bool ok = report.all_hold() && cert.witness_valid;
    json run{{"index", i}, {"n", g.n()}, {"m", g.m()}, {"gamma", fraction(cert.gamma)}, {"all_hold", report.all_hold()},
             {"witness_valid", cert.witness_valid}};
    if (flags.lp) {
      const double lp = gamma_via_lp(g, opt.tol);
      const bool agrees = std::abs(lp - cert.approx()) <= 1e-6;
      run["lp_gamma"] = lp;
      run["lp_agrees"] = agrees;
      ok = ok && agrees;
    } else {
      run["lp_gamma"] = run["lp_agrees"] = nullptr;
    }
    run["ok"] = ok;
    if (!ok) ++failures;
    runs.push_back(run);
  }
  json doc{{"command", "verify"}, {"seed", opt.seed}, {"count", count}, {"max_n", max_n},
           {"failures", failures}, {"runs", runs}};
  if (opt.json) {
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& r : runs)
      out << "#" << r["index"].get<std::size_t>() << " n=" << r["n"].get<std::size_t>()
          << " m=" << r["m"].get<std::size_t>() << " gamma=" << r["gamma"]["num"].get<long long>() << "/"
          << r["gamma"]["den"].get<long long>() << " " << (r["ok"].get<bool>() ? "ok" : "FAIL") << "\n";
    out << failures << " failure(s) in " << count << " graph(s), seed " << opt.seed << "\n";
  }
  return failures == 0 ? kSuccess : kVerifyFailed;
}

inline int write_graph(const Graph& g, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") out << write_edge_list(g);
  else write_edge_list_file(g, path);
  return kSuccess;
}

inline int cmd_generate(const std::string& family_name, const std::vector<long long>& params,
                        const std::string& path, std::ostream& out, std::ostream& err) {
  try {
    return write_graph(generate(parse_family(family_name, params)), path, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::TooLarge ? kCapViolation : kInputError;
  }
}

inline int cmd_product(const std::vector<std::string>& inputs, const std::string& path, std::ostream& out,
                       std::ostream& err) {
  try {
    if (inputs.size() < 2) {
      err << "error: product needs at least two input graphs\n";
      return kInputError;
    }
    std::vector<Graph> factors;
    for (const auto& in : inputs) factors.push_back(read_edge_list_file(in));
    return write_graph(cartesian_product(factors), path, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

enum class BenchMethod { Formula, Lp, Both };

inline int cmd_bench(const std::string& family_name, const std::vector<long long>& sizes, BenchMethod method,
                     const GlobalOptions& opt, std::ostream& out, std::ostream& err) {
  using clock = std::chrono::steady_clock;
  const bool run_formula = method != BenchMethod::Lp;
  const bool run_lp = method != BenchMethod::Formula;
  std::vector<Graph> graphs;
  try {
    for (long long s : sizes) {
      const Graph g = generate(parse_family(family_name, {s}));
      if (run_lp && g.n() > opt.caps.lp_max_n) return cap_violation(err, "bench --method lp", g.n(), opt.caps.lp_max_n);
      graphs.push_back(g);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::TooLarge ? kCapViolation : kInputError;
  }

  json rows = json::array();
  try {
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const Graph& g = graphs[i];
      json row{{"size", sizes[i]}, {"n", g.n()}, {"m", g.m()}};
      std::optional<GammaCertificate> cert;
      if (run_formula) {
        const auto t0 = clock::now();
        cert = gamma(g);
        const auto t1 = clock::now();
        row["formula_gamma"] = fraction(cert->gamma);
        row["formula_ms"] = std::chrono::duration<double, std::milli>(t1 - t0).count();
      } else {
        row["formula_gamma"] = row["formula_ms"] = nullptr;
      }
      if (run_lp) {
        const auto t0 = clock::now();
        const auto profile = lp_gamma_profile(g, opt.tol);
        const auto t1 = clock::now();
        const auto [lo, hi] = std::minmax_element(profile.per_k.begin(), profile.per_k.end());
        row["lp_gamma"] = profile.gamma;
        row["lp_ms"] = std::chrono::duration<double, std::milli>(t1 - t0).count();
        row["per_k_min"] = *lo;
        row["per_k_max"] = *hi;
      } else {
        row["lp_gamma"] = row["lp_ms"] = row["per_k_min"] = row["per_k_max"] = nullptr;
      }
      row["agree"] = (run_formula && run_lp) ? json(std::abs(row["lp_gamma"].get<double>() - cert->approx()) <= 1e-6)
                                             : json(nullptr);
      rows.push_back(row);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  if (opt.json) {
    out << json{{"command", "bench"}, {"family", family_name}, {"rows", rows}}.dump(2) << "\n";
  } else {
    out << std::left << std::setw(8) << "size" << std::setw(8) << "n" << std::setw(10) << "m" << std::setw(16)
        << "gamma" << std::setw(14) << "formula_ms" << std::setw(16) << "lp_gamma" << std::setw(14) << "lp_ms"
        << "agree\n";
    auto cell = [](const json& v) {
      if (v.is_null()) return std::string("-");
      std::ostringstream s;
      if (v.is_object()) s << v["num"].get<long long>() << "/" << v["den"].get<long long>();
      else if (v.is_boolean()) s << (v.get<bool>() ? "true" : "false");
      else s << std::setprecision(6) << v.get<double>();
      return s.str();
    };
    for (const auto& r : rows)
      out << std::setw(8) << r["size"].get<long long>() << std::setw(8) << r["n"].get<std::size_t>() << std::setw(10)
          << r["m"].get<std::size_t>() << std::setw(16) << cell(r["formula_gamma"]) << std::setw(14)
          << cell(r["formula_ms"]) << std::setw(16) << cell(r["lp_gamma"]) << std::setw(14) << cell(r["lp_ms"])
          << cell(r["agree"]) << "\n";
  }
  for (const auto& r : rows)
    if (!r["agree"].is_null() && !r["agree"].get<bool>()) return kVerifyFailed;
  return kSuccess;
}

}  // namespace infconn::cli
