// specdim: spectral dimension toolkit for the three sphere families.
//
// Subcommands: dim, zeta, graph, verify, report. All machine-readable output
// carries schema_version 1 and echoes the random seed in use.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "specdim/growth_graph.hpp"
#include "specdim/length_operator.hpp"
#include "specdim/lie_action.hpp"
#include "specdim/norms.hpp"
#include "specdim/tensor_branching.hpp"

namespace {

using nlohmann::json;
using namespace specdim;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFailure = 2;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SPECDIM_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      // fall through to the fixed default
    }
  }
  return 42;
}

SphereFamily parse_family(const std::string& name, int n) {
  if (name == "odd-a") return {Family::OddA, n};
  if (name == "even-b") return {Family::EvenB, n};
  if (name == "odd-d") return {Family::OddD, n};
  throw CLI::ValidationError("--family", "expected odd-a, even-b or odd-d");
}

NormKind parse_norm(const std::string& name) {
  if (name == "sup") return NormKind::Sup;
  if (name == "l2") return NormKind::L2;
  throw CLI::ValidationError("--norm", "expected sup or l2");
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------- dim

int cmd_dim(const std::string& family, int n, const std::string& method, std::int64_t cutoff,
            double c, const std::string& norm, const std::string& fmt, std::uint64_t seed) {
  SphereFamily fam = parse_family(family, n);
  if (method == "fit") {
    double fitted = fit_summability(fam, cutoff, cutoff / 2, cutoff);
    int exact = fam.sphere_dim();
    if (fmt == "json") {
      json j{{"schema_version", 1},  {"seed", seed},           {"family", fam.name()},
             {"n", n},               {"method", "fit"},        {"cutoff", cutoff},
             {"fitted_dimension", fitted}, {"exact_dimension", exact}};
      emit(j);
    } else {
      std::cout << "family " << fam.name() << " n=" << n << " fitted dimension " << fitted
                << " (exact " << exact << ", seed " << seed << ")\n";
    }
    return kExitOk;
  }

  DimensionOptions opts;
  if (c > 0) opts.c = c;
  opts.norm_kind = parse_norm(norm) == NormKind::Sup ? 0 : 1;
  try {
    DimensionCertificate cert = spectral_dimension(fam, opts);
    if (fmt == "json") {
      json j = json::parse(cert.to_json());
      j["seed"] = seed;
      emit(j);
    } else {
      std::cout << "family " << fam.name() << " n=" << n << " spectral dimension "
                << cert.dimension << " (certificate complete, seed " << seed << ")\n";
    }
    return kExitOk;
  } catch (const CertificateIncomplete& e) {
    std::cerr << "certificate incomplete: " << e.what() << "\n";
    return kExitFailure;
  }
}

// ---------------------------------------------------------------- zeta

int cmd_zeta(const std::string& family, int n, double p, std::int64_t cutoff,
             const std::string& fmt, std::uint64_t seed) {
  SphereFamily fam = parse_family(family, n);
  ZetaEstimate z = zeta_partial_sum(fam, p, cutoff);
  if (fmt == "json") {
    json j{{"schema_version", 1},
           {"seed", seed},
           {"family", fam.name()},
           {"n", n},
           {"p", z.p},
           {"cutoff", z.cutoff},
           {"partial_sum", z.partial_sum},
           {"tail_upper_bound", z.converged ? json(z.tail_upper_bound) : json()},
           {"converged", z.converged}};
    emit(j);
  } else {
    std::cout << "zeta(" << p << ") partial sum " << z.partial_sum;
    if (z.converged)
      std::cout << " tail <= " << z.tail_upper_bound << " (converged)";
    else
      std::cout << " (diverges)";
    std::cout << ", seed " << seed << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- graph

int cmd_graph(const std::string& family, int n, std::int64_t cutoff, double c,
              const std::string& norm, const std::string& fmt, std::uint64_t seed) {
  SphereFamily fam = parse_family(family, n);
  if (cutoff < 0 || cutoff > 300) throw CLI::ValidationError("--cutoff", "must be in [0, 300]");
  NormKind nk = parse_norm(norm);
  double cc = c > 0 ? c : default_ratio_bound(fam, nk);
  GrowthGraph g = build_graph(fam, default_generators(fam), cc, cutoff, nk);
  auto root = find_root(g);
  if (fmt == "dot") {
    std::cout << graph_to_dot(g);
    if (!root) std::cout << "// no root\n";
  } else {
    json j = json::parse(graph_to_json(g));
    j["seed"] = seed;
    j["root"] = root ? json(root->to_string(fam)) : json();
    if (!root) j["note"] = "no root";
    emit(j);
  }
  return kExitOk;
}

// ---------------------------------------------------------------- verify

json spherical_vs_interlacing(const SphereFamily& fam, int max_entry, std::int64_t& checked,
                              std::int64_t& failures) {
  json bad = json::array();
  const int rank = fam.big_rank();
  const int len = fam.big_kind() == RootKind::A ? rank + 1 : rank;
  std::vector<int> entry(len, 0);
  const bool d_kind = fam.big_kind() == RootKind::D;
  auto advance = [&]() {
    for (int i = len - 1; i >= 0; --i) {
      int lo = (d_kind && i == len - 1) ? -max_entry : 0;
      if (entry[i] < max_entry) {
        ++entry[i];
        for (int j = i + 1; j < len; ++j)
          entry[j] = (d_kind && j == len - 1) ? -max_entry : 0;
        return true;
      }
      (void)lo;
    }
    return false;
  };
  if (d_kind) entry[len - 1] = -max_entry;
  do {
    Weight w;
    for (int v : entry) w.coords.emplace_back(v);
    if (!is_dominant(fam.big_kind(), w)) continue;
    ++checked;
    int direct = spherical_multiplicity(fam, w);
    int via;
    if (fam.family == Family::OddA) {
      via = interlacing_branching_oracle(BranchingPair::AdownA, w, Weight::zero(rank));
    } else if (fam.family == Family::EvenB) {
      via = interlacing_branching_oracle(BranchingPair::BdownD, w, Weight::zero(rank));
    } else {
      via = interlacing_branching_oracle(BranchingPair::DdownB, w, Weight::zero(rank - 1));
    }
    if (via > 1) via = 1;
    if (direct != via) {
      ++failures;
      bad.push_back({{"weight", w.to_string()}, {"direct", direct}, {"oracle", via}});
    }
  } while (advance());
  return bad;
}

json tensor_vs_brauer_klimyk(RootKind kind, int rank, int max_entry, std::int64_t& checked,
                             std::int64_t& failures) {
  json bad = json::array();
  const int len = kind == RootKind::A ? rank + 1 : rank;
  std::vector<int> entry(len, 0);
  auto advance = [&]() {
    for (int i = len - 1; i >= 0; --i) {
      if (entry[i] < max_entry) {
        ++entry[i];
        for (int j = i + 1; j < len; ++j) entry[j] = (kind == RootKind::D && j == len - 1)
                                                         ? -max_entry
                                                         : 0;
        return true;
      }
    }
    return false;
  };
  if (kind == RootKind::D) entry[len - 1] = -max_entry;
  do {
    Weight w;
    for (int v : entry) w.coords.emplace_back(v);
    if (!is_dominant(kind, w)) continue;
    ++checked;
    auto direct = fundamental_tensor(kind, rank, w);
    auto oracle = brauer_klimyk_oracle(kind, rank, w);
    if (direct != oracle) {
      ++failures;
      bad.push_back({{"kind", kind == RootKind::A ? "A" : kind == RootKind::B ? "B" : "D"},
                     {"rank", rank},
                     {"weight", w.to_string()}});
    }
  } while (advance());
  return bad;
}

int cmd_verify(const std::string& target, const std::string& family, int n, int max_gamma,
               int max_entry, int max_rank, const std::string& gamma_str, int samples,
               std::uint64_t seed) {
  json report{{"schema_version", 1}, {"seed", seed}, {"target", target}};
  json instances = json::array();
  bool pass = true;

  if (target == "branching") {
    std::int64_t checked = 0, failures = 0;
    json bad = json::array();
    for (const auto& famname : {"odd-a", "even-b", "odd-d"}) {
      for (int nn = (std::string(famname) == "odd-d" ? 2 : 1); nn <= max_rank; ++nn) {
        auto b = spherical_vs_interlacing(parse_family(famname, nn), max_entry, checked, failures);
        for (auto& e : b) bad.push_back(e);
      }
    }
    instances.push_back({{"check", "spherical vs interlacing"},
                         {"checked", checked},
                         {"failures", failures},
                         {"bad", bad}});
    pass = pass && failures == 0;

    checked = failures = 0;
    bad = json::array();
    for (RootKind k : {RootKind::A, RootKind::B, RootKind::D})
      for (int r = (k == RootKind::D ? 2 : 1); r <= max_rank; ++r) {
        auto b = tensor_vs_brauer_klimyk(k, r, max_entry, checked, failures);
        for (auto& e : b) bad.push_back(e);
      }
    instances.push_back({{"check", "fundamental tensor vs reflection oracle"},
                         {"checked", checked},
                         {"failures", failures},
                         {"bad", bad}});
    pass = pass && failures == 0;
  } else if (target == "leap") {
    SphereFamily fam = parse_family(family, n);
    std::int64_t worst = 0;
    bool discrepancy = false;
    for (int a = 0; a <= max_gamma; ++a) {
      if (fam.index_arity() == 2) {
        for (int b = 0; b <= max_gamma; ++b) {
          auto r = bounded_leap_check(fam, {a, b});
          worst = std::max(worst, r.max_abs_shift);
          discrepancy = discrepancy || r.one_sided_discrepancy;
        }
      } else {
        auto r = bounded_leap_check(fam, SpectrumIndex::single(a));
        worst = std::max(worst, r.max_abs_shift);
      }
    }
    pass = worst <= 1;
    instances.push_back({{"check", "bounded leap"},
                         {"max_gamma", max_gamma},
                         {"max_abs_shift", worst},
                         {"one_sided_discrepancy", discrepancy}});
  } else if (target == "norms") {
    int failures = 0;
    double worst_gap = 0;
    for (int a = 0; a <= max_gamma; ++a)
      for (int b = 0; b <= max_gamma; ++b) {
        double gap = std::abs(monomial_sup(a, b) - monomial_sup_oracle(a, b, 256));
        worst_gap = std::max(worst_gap, gap);
        if (gap > 1e-9) ++failures;
      }
    instances.push_back(
        {{"check", "sup norm vs sweep oracle"}, {"worst_gap", worst_gap}, {"failures", failures}});
    pass = pass && failures == 0;

    auto diag = ratio_bound_check({0, 0}, {1, 1}, max_gamma);
    auto off = ratio_bound_check({1, 1}, {1, 0}, max_gamma);
    instances.push_back({{"check", "ratio bounds"},
                         {"diagonal_max_ratio", diag.max_ratio},
                         {"off_diagonal_max_ratio", off.max_ratio},
                         {"within_bound", diag.within_bound && off.within_bound}});
    pass = pass && diag.within_bound && off.within_bound;

    SphereFamily fam = parse_family(family, n);
    int mc_fail = 0;
    for (int k = 1; k <= 4; ++k) {
      SpectrumIndex g = fam.index_arity() == 2 ? SpectrumIndex(k, k / 2)
                                               : SpectrumIndex::single(k);
      double exact = to_double(l2_monomial_norm_sq(fam, g));
      auto mc = mc_l2_monomial_norm_sq(fam, g, samples, seed + std::uint64_t(k));
      if (std::abs(mc.mean - exact) > 5 * mc.std_error + 1e-12) ++mc_fail;
    }
    instances.push_back({{"check", "exact L2 moment vs Monte Carlo"},
                         {"samples", samples},
                         {"failures", mc_fail}});
    pass = pass && mc_fail == 0;
  } else if (target == "hwv") {
    SphereFamily fam = parse_family(family, n);
    SpectrumIndex g;
    {
      std::istringstream is(gamma_str);
      char comma;
      is >> g.g1;
      if (is >> comma >> g.g2) {
      }
    }
    auto rep = hwv_check_symbolic(fam, g);
    json evec = json::array();
    for (bool b : rep.e_annihilated) evec.push_back(b);
    json hvals = json::array();
    for (const auto& h : rep.h_eigenvalues) hvals.push_back(to_double(h));
    double worst = 0;
    for (int i = 1; i <= fam.n; ++i)
      worst = std::max(worst, directional_derivative_oracle(fam, hwv_monomial(fam, g),
                                                            {GenType::E, i}, samples, seed));
    pass = rep.all_annihilated && rep.h_eigenvector && worst <= 1e-6;
    instances.push_back({{"check", "highest weight vector"},
                         {"gamma", g.to_string(fam)},
                         {"e_annihilated", evec},
                         {"h_eigenvalues", hvals},
                         {"numeric_e_derivative_max", worst}});
  } else if (target == "dirac") {
    SphereFamily fam = parse_family(family, n);
    GrowthGraph g = build_graph(fam, default_generators(fam),
                                default_ratio_bound(fam, NormKind::Sup), max_gamma, NormKind::Sup);
    auto root = find_root(g);
    if (!root) {
      pass = false;
      instances.push_back({{"check", "dirac growth"}, {"error", "no root"}});
    } else {
      auto len = length_function(g, *root);
      std::vector<double> d(len.begin(), len.end());
      auto rep = dirac_growth_check(g, *root, d);
      pass = rep.violations.empty();
      instances.push_back({{"check", "dirac growth with d = length"},
                           {"delta", rep.max_edge_increment},
                           {"violations", rep.violations.size()}});
    }
  } else {
    throw CLI::ValidationError("target", "expected hwv, branching, leap, norms or dirac");
  }

  report["instances"] = instances;
  report["pass"] = pass;
  emit(report);
  return pass ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------- report

int cmd_report(int max_n, const std::string& fmt, std::uint64_t seed) {
  struct Row {
    std::string family;
    int n;
    int sphere_dim;
    int spectral_dim;
    bool match;
  };
  std::vector<Row> rows;
  bool all_match = true;
  for (const auto& famname : {"odd-a", "even-b", "odd-d"}) {
    int lo = std::string(famname) == "odd-d" ? 2 : 1;
    for (int n = lo; n <= max_n; ++n) {
      SphereFamily fam = parse_family(famname, n);
      int dim = exact_summability(fam);
      bool match = dim == fam.sphere_dim();
      all_match = all_match && match;
      rows.push_back({fam.name(), n, fam.sphere_dim(), dim, match});
    }
  }
  if (fmt == "csv") {
    std::cout << "family,n,sphere_dim,spectral_dim,match\n";
    for (const auto& r : rows)
      std::cout << r.family << "," << r.n << "," << r.sphere_dim << "," << r.spectral_dim << ","
                << (r.match ? "true" : "false") << "\n";
  } else {
    json j{{"schema_version", 1}, {"seed", seed}};
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"family", r.family},
                     {"n", r.n},
                     {"sphere_dim", r.sphere_dim},
                     {"spectral_dim", r.spectral_dim},
                     {"match", r.match}});
    j["rows"] = arr;
    j["all_match"] = all_match;
    emit(j);
  }
  return all_match ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral dimension of the homogeneous sphere families"};
  app.set_config("--config", "", "plain-text key=value configuration file, [subcommand] sections");
  app.fallthrough(true);
  app.require_subcommand(1);

  std::string family = "odd-a", norm = "sup", fmt = "text", method = "exact", target,
              gamma_str = "1";
  int n = 1, max_n = 5, max_gamma = 10, max_entry = 3, max_rank = 4, samples = 50;
  std::int64_t cutoff = 0;
  double c = -1, p = 4;
  std::uint64_t seed = default_seed();

  auto add_common = [&](CLI::App* sub) {
    sub->configurable(true);
    sub->add_option("--family", family, "odd-a | even-b | odd-d");
    sub->add_option("--n", n, "family parameter");
    sub->add_option("--seed", seed, "random seed (default: SPECDIM_SEED or 42)");
  };

  auto* dim = app.add_subcommand("dim", "spectral dimension with certificate");
  add_common(dim);
  dim->add_option("--method", method, "exact | fit");
  dim->add_option("--cutoff", cutoff, "shell cutoff for --method fit");
  dim->add_option("--c", c, "growth-graph ratio bound (default per family)");
  dim->add_option("--norm", norm, "sup | l2");
  dim->add_option("--emit", fmt, "json | text");

  auto* zeta = app.add_subcommand("zeta", "length-operator zeta partial sum");
  add_common(zeta);
  zeta->add_option("--p", p, "exponent")->required();
  zeta->add_option("--cutoff", cutoff, "number of shells");
  zeta->add_option("--emit", fmt, "json | text");

  auto* graph = app.add_subcommand("graph", "growth graph dump");
  add_common(graph);
  graph->add_option("--cutoff", cutoff, "index truncation (<= 300)");
  graph->add_option("--c", c, "ratio bound (default per family)");
  graph->add_option("--norm", norm, "sup | l2");
  graph->add_option("--emit", fmt, "dot | json");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->configurable(true);
  verify->add_option("target", target, "hwv | branching | leap | norms | dirac")->required();
  add_common(verify);
  verify->add_option("--max-gamma", max_gamma, "index range for leap/norms/dirac");
  verify->add_option("--max-entry", max_entry, "weight entry bound for branching");
  verify->add_option("--max-rank", max_rank, "rank bound for branching");
  verify->add_option("--gamma", gamma_str, "index for hwv, e.g. 2,1");
  verify->add_option("--samples", samples, "random samples for numeric oracles");

  auto* report = app.add_subcommand("report", "dimension table across families");
  report->configurable(true);
  report->add_option("--max-n", max_n, "largest n per family")->required();
  report->add_option("--emit", fmt, "csv | json");
  report->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (dim->parsed()) {
      if (cutoff == 0) cutoff = method == "fit" ? 500 : 0;
      return cmd_dim(family, n, method, cutoff, c, norm, fmt == "text" ? "text" : fmt, seed);
    }
    if (zeta->parsed()) {
      if (cutoff == 0) cutoff = 100000;
      return cmd_zeta(family, n, p, cutoff, fmt, seed);
    }
    if (graph->parsed()) {
      if (cutoff == 0) cutoff = 8;
      if (fmt == "text") fmt = "dot";
      return cmd_graph(family, n, cutoff, c, norm, fmt, seed);
    }
    if (verify->parsed())
      return cmd_verify(target, family, n, max_gamma, max_entry, max_rank, gamma_str, samples,
                        seed);
    if (report->parsed()) {
      if (fmt == "text") fmt = "csv";
      return cmd_report(max_n, fmt, seed);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
