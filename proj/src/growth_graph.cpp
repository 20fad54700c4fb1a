#include "specdim/growth_graph.hpp"

#include <cmath>
#include <deque>
#include <sstream>

#include "json.hpp"

namespace specdim {

GeneratorSet default_generators(const SphereFamily& fam) {
  if (fam.family == Family::OddA)
    return {{"y", {1, 0}, {1, 0}}, {"z", {0, 1}, {0, 1}}, {"yz", {1, 1}, {1, 1}}};
  if (fam.family == Family::EvenB) return {{"y^2", {1, 0}, {1, 0}}};
  return {{"y", {1, 0}, {1, 0}}};
}

double default_ratio_bound(const SphereFamily& fam, NormKind kind) {
  if (kind == NormKind::Sup) return fam.family == Family::OddA ? 2.1 : 1.1;
  // L2: smallest round margin above the exact ratio suprema. The diagonal
  // ratio peaks at gamma = 0: sqrt((n+1)(n+2)) for the complex sphere,
  // sqrt(ambient dim) for the real spheres.
  if (fam.family == Family::OddA)
    return std::sqrt(double((fam.n + 1) * (fam.n + 2))) + 0.1;
  return std::sqrt(double(fam.sphere_dim() + 1)) + 0.1;
}

int GrowthGraph::vertex_id(const SpectrumIndex& g) const {
  if (g.g1 < 0 || g.g2 < 0 || g.g1 > cutoff || g.g2 > cutoff) return -1;
  if (fam.index_arity() == 2) return int(g.g1 * (cutoff + 1) + g.g2);
  return g.g2 == 0 ? int(g.g1) : -1;
}

GrowthGraph build_graph(const SphereFamily& fam, const GeneratorSet& R, double c,
                        std::int64_t cutoff, NormKind norm_kind) {
  if (c <= 0 || cutoff < 1) throw std::invalid_argument("need c > 0 and cutoff >= 1");
  GrowthGraph g{fam, cutoff, c, norm_kind, R, {}, {}, {}};
  if (fam.index_arity() == 2) {
    g.vertices.reserve((cutoff + 1) * (cutoff + 1));
    for (std::int64_t a = 0; a <= cutoff; ++a)
      for (std::int64_t b = 0; b <= cutoff; ++b) g.vertices.emplace_back(a, b);
  } else {
    for (std::int64_t k = 0; k <= cutoff; ++k) g.vertices.push_back(SpectrumIndex::single(k));
  }

  std::vector<double> log_norm(g.vertices.size());
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    log_norm[i] = log_hwv_norm(fam, g.vertices[i], norm_kind);

  const double log_c = std::log(c);
  g.out.assign(g.vertices.size(), {});
  for (int v = 0; v < int(g.vertices.size()); ++v) {
    for (int r = 0; r < int(R.size()); ++r) {
      SpectrumIndex to{g.vertices[v].g1 + R[r].shift.g1, g.vertices[v].g2 + R[r].shift.g2};
      int w = g.vertex_id(to);
      if (w < 0) continue;
      double log_ratio = log_norm[v] - log_norm[w];
      if (log_ratio < log_c) {
        g.out[v].push_back(int(g.edges.size()));
        g.edges.push_back({v, w, r, std::exp(log_ratio)});
      }
    }
  }
  return g;
}

namespace {

// BFS distances in edge counts; -1 for unreachable.
std::vector<std::int64_t> bfs(const GrowthGraph& g, int src) {
  std::vector<std::int64_t> dist(g.vertices.size(), -1);
  std::deque<int> q{src};
  dist[src] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int e : g.out[v]) {
      int w = g.edges[e].to;
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace

std::optional<SpectrumIndex> find_root(const GrowthGraph& g) {
  // A root must have in-degree zero (the graph is acyclic: shifts strictly
  // increase the coordinate sum), and there can be at most one such source
  // if everything is reachable from it.
  std::vector<int> indeg(g.vertices.size(), 0);
  for (const auto& e : g.edges) ++indeg[e.to];
  int src = -1;
  for (int v = 0; v < int(g.vertices.size()); ++v) {
    if (indeg[v] == 0) {
      if (src >= 0) return std::nullopt;
      src = v;
    }
  }
  if (src < 0) return std::nullopt;
  auto dist = bfs(g, src);
  for (auto d : dist)
    if (d < 0) return std::nullopt;
  return g.vertices[src];
}

std::vector<std::int64_t> length_function(const GrowthGraph& g, const SpectrumIndex& root) {
  int src = g.vertex_id(root);
  if (src < 0) throw NotARoot("vertex outside truncation");
  auto dist = bfs(g, src);
  for (auto d : dist)
    if (d < 0) throw NotARoot("not every vertex is reachable from the given root");
  dist[src] = 1;  // l(root) = 1 by definition
  return dist;
}

DiracGrowthReport dirac_growth_check(const GrowthGraph& g, const SpectrumIndex& root,
                                     const std::vector<double>& d,
                                     std::int64_t delta_vertex_cap) {
  if (d.size() != g.vertices.size())
    throw std::invalid_argument("eigenvalue map must cover all vertices");
  auto len = length_function(g, root);

  auto in_window = [&](const SpectrumIndex& v) {
    return delta_vertex_cap < 0 || (v.g1 <= delta_vertex_cap && v.g2 <= delta_vertex_cap);
  };
  double delta = 0;
  for (const auto& e : g.edges)
    if (in_window(g.vertices[e.from]) && in_window(g.vertices[e.to]))
      delta = std::max(delta, std::abs(d[e.to] - d[e.from]));

  int src = g.vertex_id(root);
  double d0 = std::abs(d[src]);
  DiracGrowthReport rep{delta, d0 + delta, {}};
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    if (std::abs(d[v]) > d0 + delta * double(len[v]) + 1e-9)
      rep.violations.push_back(g.vertices[v]);
  return rep;
}

std::string graph_to_dot(const GrowthGraph& g) {
  auto root = find_root(g);
  std::ostringstream os;
  os << "digraph growth {\n";
  os << "  rankdir=LR;\n";
  for (const auto& v : g.vertices) {
    os << "  \"" << v.to_string(g.fam) << "\"";
    if (root && *root == v) os << " [shape=doublecircle,style=bold]";
    os << ";\n";
  }
  os.precision(6);
  for (const auto& e : g.edges) {
    os << "  \"" << g.vertices[e.from].to_string(g.fam) << "\" -> \""
       << g.vertices[e.to].to_string(g.fam) << "\" [label=\"" << g.generators[e.generator].name
       << " " << e.ratio << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string graph_to_json(const GrowthGraph& g) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["family"] = g.fam.name();
  j["n"] = g.fam.n;
  j["cutoff"] = g.cutoff;
  j["c"] = g.c;
  j["norm"] = g.norm_kind == NormKind::Sup ? "sup" : "l2";
  auto root = find_root(g);
  if (root)
    j["root"] = root->to_string(g.fam);
  else
    j["root"] = nullptr;
  auto& verts = j["vertices"] = nlohmann::json::array();
  for (const auto& v : g.vertices) {
    if (g.fam.index_arity() == 2)
      verts.push_back({v.g1, v.g2});
    else
      verts.push_back(v.g1);
  }
  auto& edges = j["edges"] = nlohmann::json::array();
  for (const auto& e : g.edges)
    edges.push_back({{"from", e.from},
                     {"to", e.to},
                     {"generator", g.generators[e.generator].name},
                     {"ratio", e.ratio}});
  return j.dump(2) + "\n";
}

}  // namespace specdim
