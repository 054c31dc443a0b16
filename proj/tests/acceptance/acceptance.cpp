// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// hard criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "infconn/bounds.hpp"
#include "infconn/cheeger.hpp"
#include "infconn/families.hpp"
#include "infconn/gamma.hpp"
#include "infconn/graph.hpp"
#include "infconn/lp_oracle.hpp"
#include "infconn/random_graphs.hpp"
#include "infconn/spectral.hpp"

using namespace infconn;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Named {
  std::string name;
  Graph graph;
};

struct Outcome {
  bool pass = true;
  std::vector<std::string> failures;
  std::string summary;

  void fail(const std::string& what) {
    pass = false;
    if (failures.size() < 8) failures.push_back(what);
  }
  void check(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
};

struct Seen {
  std::string name;
  Graph graph;
  GammaCertificate cert;
};

// Every graph seen by criteria 1 to 4 with the certificate computed there.
std::vector<Seen> g_connected_corpus;

const GammaCertificate& remember(const std::string& name, const Graph& g) {
  return g_connected_corpus.emplace_back(Seen{name, g, gamma(g)}).cert;
}

std::vector<FamilySpec> family_members(std::size_t max_n) {
  std::vector<FamilySpec> out;
  for (std::size_t n = 2; n <= max_n; ++n) {
    out.push_back(family::Path{n});
    if (n >= 3) out.push_back(family::Cycle{n});
    out.push_back(family::Complete{n});
    out.push_back(family::Star{n});
  }
  for (std::size_t n = 1; 2 * n <= max_n; ++n)
    for (std::size_t m = n; m + n <= max_n; ++m) out.push_back(family::CompleteBipartite{m, n});
  for (std::size_t t = 1; (std::size_t{1} << t) <= max_n; ++t) out.push_back(family::Hypercube{t});
  for (std::size_t s = 3; s <= max_n; ++s) {
    std::size_t count = s;
    for (std::size_t t = 1; count <= max_n; ++t, count *= s) out.push_back(family::Hamming{t, s});
  }
  for (std::size_t l = 1; l <= max_n; ++l)
    for (std::size_t m = l; l * m <= max_n; ++m)
      for (std::size_t n = m; l * m * n <= max_n; ++n)
        if (l * m * n >= 2) out.push_back(family::Grid3{l, m, n});
  for (std::size_t m = 3; m * 3 <= max_n; ++m)
    for (std::size_t n = 3; m * n <= max_n; ++n) out.push_back(family::Torus{m, n});
  if (max_n >= 10) out.push_back(family::Petersen{});
  return out;
}

std::vector<Named> family_graphs(std::size_t max_n) {
  std::vector<Named> out;
  for (const auto& spec : family_members(max_n)) out.push_back({to_string(spec), generate(spec)});
  return out;
}

// Criterion 1: closed forms in exact rationals for every family up to 200 vertices.
Outcome closed_forms() {
  Outcome o;
  const auto t0 = Clock::now();
  std::vector<FamilySpec> specs;
  for (std::size_t n = 2; n <= 200; ++n) {
    specs.push_back(family::Complete{n});
    if (n >= 3) specs.push_back(family::Cycle{n});
    specs.push_back(family::Path{n});
    specs.push_back(family::Star{n});
  }
  for (std::size_t n = 1; 2 * n <= 200; ++n)
    for (std::size_t m = n; m + n <= 200; ++m) specs.push_back(family::CompleteBipartite{m, n});
  for (std::size_t t = 1; t <= 7; ++t) specs.push_back(family::Hypercube{t});
  for (std::size_t s = 2; s <= 200; ++s) {
    std::size_t count = s;
    for (std::size_t t = 1; count <= 200; ++t, count *= s) specs.push_back(family::Hamming{t, s});
  }
  for (std::size_t l = 1; l <= 200; ++l)
    for (std::size_t m = l; l * m <= 200; ++m)
      for (std::size_t n = m; l * m * n <= 200; ++n)
        if (l * m * n >= 2) specs.push_back(family::Grid3{l, m, n});
  for (std::size_t m = 3; m * 3 <= 200; ++m)
    for (std::size_t n = 3; m * n <= 200; ++n) specs.push_back(family::Torus{m, n});

  for (const auto& spec : specs) {
    const Graph g = generate(spec);
    const Rational got = remember(to_string(spec), g).gamma;
    const Rational want = closed_form_gamma(spec);
    o.check(got == want, to_string(spec) + ": gamma " + got.str() + " != closed form " + want.str());
  }
  const double secs = seconds_since(t0);
  o.check(secs < 30.0, "runtime " + std::to_string(secs) + " s exceeds 30 s");
  std::ostringstream s;
  s << specs.size() << " family members, " << secs << " s";
  o.summary = s.str();
  return o;
}

// Criterion 2: formula vs LP oracle.
Outcome lp_agreement() {
  Outcome o;
  const auto t0 = Clock::now();
  std::vector<Named> corpus = family_graphs(10);
  random::Rng rng(20240601);
  std::uniform_int_distribution<std::size_t> size(2, 9);
  for (int i = 0; i < 200; ++i) corpus.push_back({"random#" + std::to_string(i), random::connected_gnp(size(rng), 0.4, rng)});
  double worst = 0.0;
  for (const auto& [name, g] : corpus) {
    const double diff = std::abs(remember(name, g).approx() - gamma_via_lp(g));
    worst = std::max(worst, diff);
    o.check(diff <= 1e-6, name + ": |gamma - gamma_LP| = " + std::to_string(diff));
  }
  const double secs = seconds_since(t0);
  o.check(secs < 60.0, "runtime " + std::to_string(secs) + " s exceeds 60 s");
  std::ostringstream s;
  s << corpus.size() << " graphs, max deviation " << worst << ", " << secs << " s";
  o.summary = s.str();
  return o;
}

// Criterion 3: harmonic product law.
Outcome product_law() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto factors = family_graphs(8);
  std::size_t checked = 0;
  for (const auto& [gn, g] : factors)
    for (const auto& [hn, h] : factors) {
      const Graph p = cartesian_product(g, h);
      const Rational lhs = Rational(1) / remember(gn + " x " + hn, p).gamma;
      const Rational rhs = Rational(1) / gamma(g).gamma + Rational(1) / gamma(h).gamma;
      o.check(lhs == rhs, gn + " x " + hn + ": 1/gamma " + lhs.str() + " != " + rhs.str());
      ++checked;
    }
  const Graph k2 = generate(family::Complete{2}), p3 = generate(family::Path{3});
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<Graph> fs;
    std::vector<Rational> gs;
    std::string name;
    for (int b = 0; b < 3; ++b) {
      const bool is_p3 = (mask >> b) & 1;
      fs.push_back(is_p3 ? p3 : k2);
      gs.push_back(gamma(fs.back()).gamma);
      name += std::string(b ? " x " : "") + (is_p3 ? "P3" : "K2");
    }
    const Graph p = cartesian_product(fs);
    const Rational got = remember(name, p).gamma;
    const Rational want = gamma_harmonic(gs);
    o.check(got == want, name + ": " + got.str() + " != " + want.str());
    ++checked;
  }
  const double secs = seconds_since(t0);
  o.check(secs < 30.0, "runtime " + std::to_string(secs) + " s exceeds 30 s");
  std::ostringstream s;
  s << checked << " products, " << secs << " s";
  o.summary = s.str();
  return o;
}

// Criterion 4: the bound suite and its equality characterisations.
Outcome bound_suite() {
  Outcome o;
  const auto t0 = Clock::now();
  std::vector<Named> corpus = family_graphs(16);
  for (auto& fg : family_graphs(24))
    if (fg.graph.n() > 16 && fg.graph.is_regular()) corpus.push_back(std::move(fg));
  random::Rng rng(777);
  std::uniform_int_distribution<std::size_t> size(2, 16);
  for (int i = 0; i < 100; ++i) corpus.push_back({"random#" + std::to_string(i), random::connected_gnp(size(rng), 0.4, rng)});
  std::uniform_int_distribution<std::size_t> tree_size(3, 50);
  std::size_t trees = 0, stars = 0;
  for (int i = 0; i < 100; ++i) corpus.push_back({"tree#" + std::to_string(i), random::tree(tree_size(rng), rng)});
  for (std::size_t n = 3; n <= 50; n += 7) corpus.push_back({"star(" + std::to_string(n) + ")", generate(family::Star{n})});

  BoundOptions opt;
  opt.b_max_n = 8;
  std::size_t regular_checked = 0, b_checked = 0;
  for (const auto& [name, g] : corpus) {
    remember(name, g);
    BoundOptions gopt = opt;
    gopt.cheeger = g.n() <= 16 || g.is_regular();
    const auto r = bound_report(g, gopt);
    for (const auto& e : r.entries) {
      o.check(e.status != EntryStatus::Failed, name + " (" + e.id + ") failed: " + e.note);
      if (e.status == EntryStatus::Evaluated) {
        std::ostringstream msg;
        msg << name << " (" << e.id << ") violated: lhs " << e.lhs << ", rhs " << e.rhs;
        o.check(e.holds, msg.str());
        if (e.equality_expected)
          o.check(e.equality_attained == *e.equality_expected,
                  name + " (" + e.id + ") equality attained = " + (e.equality_attained ? "true" : "false") +
                      ", characterisation says " + (*e.equality_expected ? "true" : "false"));
      }
    }
    for (const char* id : {"i", "ii", "iv", "v", "viii.lower", "viii.upper"})
      o.check(r.at(id).status == EntryStatus::Evaluated, name + " (" + id + ") not evaluated");
    if (g.n() <= 8) {
      o.check(r.at("iii").status == EntryStatus::Evaluated, name + " (iii) not evaluated");
      ++b_checked;
    }
    if (g.is_regular() && g.n() <= 24) {
      for (const char* id : {"vi", "vii.upper", "vii.lower"})
        o.check(r.at(id).status == EntryStatus::Evaluated, name + " (" + id + ") not evaluated");
      ++regular_checked;
    }
    if (is_tree(g) && g.n() >= 3) {
      o.check(r.at("ix").status == EntryStatus::Evaluated, name + " (ix) not evaluated");
      ++trees;
      if (r.at("ix").equality_attained) ++stars;
    }
  }
  std::ostringstream s;
  s << corpus.size() << " graphs (" << b_checked << " with b oracle, " << regular_checked << " regular with Cheeger, "
    << trees << " trees of which " << stars << " attain the tree bound), " << seconds_since(t0) << " s";
  o.summary = s.str();
  return o;
}

// Criterion 5: tree rerooting and pendant maximisers.
Outcome tree_properties() {
  Outcome o;
  const auto t0 = Clock::now();
  random::Rng rng(5150);
  std::uniform_int_distribution<std::size_t> size(2, 1000);
  std::size_t largest = 0;
  for (int i = 0; i < 100; ++i) {
    const Graph t = random::tree(size(rng), rng);
    largest = std::max(largest, t.n());
    const auto fast = tree_transmissions(t);
    const auto bfs = transmission_table(t);
    const std::string name = "tree#" + std::to_string(i) + " (n=" + std::to_string(t.n()) + ")";
    o.check(fast.tr == bfs.tr, name + ": rerooted transmissions differ from BFS");
    o.check(fast.d_max == bfs.d_max && fast.argmax == bfs.argmax, name + ": argmax differs");
    for (Vertex v : bfs.argmax) o.check(t.degree(v) == 1, name + ": maximiser " + std::to_string(v) + " is not pendant");
  }
  const double secs = seconds_since(t0);
  o.check(secs < 20.0, "runtime " + std::to_string(secs) + " s exceeds 20 s");
  std::ostringstream s;
  s << "100 trees, largest n = " << largest << ", " << secs << " s";
  o.summary = s.str();
  return o;
}

// Criterion 6: the explicit witness over everything criteria 1 to 4 touched.
Outcome witness_validity() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t fallbacks = 0;
  for (const auto& [name, g, cert] : g_connected_corpus) {
    if (!cert.witness_valid) {
      ++fallbacks;
      std::ostringstream msg;
      msg << name << ": explicit witness infeasible (sum " << cert.residuals.sum << ", sup-norm deviation "
          << cert.residuals.sup_norm_deviation << ", edge gap " << cert.residuals.edge_gap << "); LP fallback used";
      o.fail(msg.str());
      continue;
    }
    o.check(cert.residuals.all_zero(), name + ": residuals not zero");
    const Rational value = gamma_objective(g, std::span<const Rational>(cert.witness));
    o.check(value == cert.gamma, name + ": gamma_objective(witness) = " + value.str() + " != " + cert.gamma.str());
  }
  std::ostringstream s;
  s << g_connected_corpus.size() << " graphs, " << fallbacks << " fallback(s), " << seconds_since(t0) << " s";
  o.summary = s.str();
  return o;
}

// Criterion 7: disconnected graphs give gamma = 0 with a two-block witness.
Outcome disconnection() {
  Outcome o;
  random::Rng rng(4242);
  std::uniform_int_distribution<std::size_t> size(2, 20);
  for (int i = 0; i < 50; ++i) {
    const Graph g = random::disconnected_gnp(size(rng), 0.3, rng);
    const std::string name = "disconnected#" + std::to_string(i);
    o.check(!is_connected(g), name + ": generator returned a connected graph");
    const auto cert = gamma(g);
    o.check(cert.gamma.is_zero(), name + ": gamma = " + cert.gamma.str());
    o.check(cert.witness_valid && cert.residuals.all_zero(), name + ": witness infeasible");
    std::vector<Rational> values(cert.witness);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    o.check(values.size() == 2 && values.back() == Rational(1), name + ": witness is not two-block");
    o.check(gamma_objective(g, std::span<const Rational>(cert.witness)).is_zero(), name + ": objective is not 0");
  }
  std::size_t positive = 0;
  for (const auto& [name, g, cert] : g_connected_corpus) {
    const bool ok = cert.gamma > Rational(0);
    o.check(ok, name + ": connected graph with gamma = 0");
    positive += ok;
  }
  std::ostringstream s;
  s << "50 disconnected graphs at gamma = 0; " << positive << "/" << g_connected_corpus.size()
    << " connected graphs positive";
  o.summary = s.str();
  return o;
}

// Criterion 8: formula scale and the formula vs LP speed gap.
Outcome performance() {
  Outcome o;
  random::Rng rng(8000);
  const Graph big = random::connected_with_edges(2000, 10000, rng);
  const auto t0 = Clock::now();
  const auto cert = gamma(big);
  const double big_secs = seconds_since(t0);
  o.check(cert.witness_valid, "n = 2000 witness invalid");
  o.check(big_secs < 5.0, "n = 2000 took " + std::to_string(big_secs) + " s (limit 5 s)");

  const Graph mid = random::connected_gnp(50, 0.1, rng);
  const auto f0 = Clock::now();
  Rational formula;
  for (int rep = 0; rep < 20; ++rep) formula = gamma(mid).gamma;
  const double formula_secs = seconds_since(f0) / 20.0;
  const auto l0 = Clock::now();
  const double lp = gamma_via_lp(mid);
  const double lp_secs = seconds_since(l0);
  const double diff = std::abs(lp - formula.to_double());
  o.check(diff <= 1e-6, "n = 50 LP deviates by " + std::to_string(diff));
  const double ratio = lp_secs / std::max(formula_secs, 1e-9);

  std::ostringstream s;
  s << "n = 2000, m = " << big.m() << ": " << big_secs << " s; n = 50: formula " << formula_secs * 1e3 << " ms, LP "
    << lp_secs * 1e3 << " ms, ratio " << ratio << "x (soft target >= 10x: " << (ratio >= 10.0 ? "met" : "NOT met")
    << ")";
  o.summary = s.str();
  return o;
}

// Criterion 9: spectral sanity checks.
Outcome spectral_sanity() {
  Outcome o;
  for (std::size_t n = 2; n <= 100; ++n) {
    const auto est = distance_spectral_radius(generate(family::Complete{n}));
    o.check(std::abs(est.value - static_cast<double>(n - 1)) <= 1e-8,
            "d1(K_" + std::to_string(n) + ") = " + std::to_string(est.value));
  }
  for (const auto& [name, g, cert] : g_connected_corpus) {
    const auto est = distance_spectral_radius(g);
    const double dm = (Rational(static_cast<Rational::int_type>(g.n())) / cert.gamma).to_double();
    o.check(est.value <= dm + 1e-8 * std::max(1.0, dm),
            name + ": d1 " + std::to_string(est.value) + " > D_M " + std::to_string(dm));
  }
  for (std::size_t n = 2; n <= 50; ++n) {
    const auto est = algebraic_connectivity(generate(family::Complete{n}));
    o.check(std::abs(est.value - static_cast<double>(n)) <= 1e-8,
            "a(K_" + std::to_string(n) + ") = " + std::to_string(est.value));
  }
  const Graph c6 = generate(family::Cycle{6});
  const double a = algebraic_connectivity(c6).value;
  const double mu = normalized_laplacian_mu(c6).value;
  o.check(std::abs(mu - a / 2.0) <= 1e-8, "C6: mu " + std::to_string(mu) + " != a/2 " + std::to_string(a / 2.0));
  std::ostringstream s;
  s << "K_2..K_100, " << g_connected_corpus.size() << " corpus graphs, K_2..K_50, C6 (mu = " << mu << ")";
  o.summary = s.str();
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"closed-form exactness", closed_forms},
      {"LP oracle agreement", lp_agreement},
      {"product law", product_law},
      {"bound suite", bound_suite},
      {"tree properties", tree_properties},
      {"witness validity", witness_validity},
      {"disconnection", disconnection},
      {"performance", performance},
      {"spectral sanity", spectral_sanity},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << i + 1 << " (" << criteria[i].first << "): " << o.summary
              << "\n";
    for (const auto& f : o.failures) std::cout << "      " << f << "\n";
    std::cout.flush();
  }
  return all ? 0 : 1;
}
