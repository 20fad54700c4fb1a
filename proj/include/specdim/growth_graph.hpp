#ifndef SPECDIM_GROWTH_GRAPH_HPP
#define SPECDIM_GROWTH_GRAPH_HPP

#include <optional>
#include <string>
#include <vector>

#include "specdim/norms.hpp"

namespace specdim {

// A generator r in R: its monomial descriptor and the index shift it induces.
struct Generator {
  std::string name;
  SpectrumIndex shift;
  MonomialExponents mono;
};

using GeneratorSet = std::vector<Generator>;

// Paper defaults: {y, z, yz} for the complex sphere, {y^2} / {y} for the real
// spheres (single shift +1 either way).
GeneratorSet default_generators(const SphereFamily& fam);

double default_ratio_bound(const SphereFamily& fam, NormKind kind);

struct Edge {
  int from;      // vertex ids
  int to;
  int generator; // index into the generator set
  double ratio;  // hwv_norm(from) / hwv_norm(to)
};

struct GrowthGraph {
  SphereFamily fam;
  std::int64_t cutoff;
  double c;
  NormKind norm_kind;
  GeneratorSet generators;
  std::vector<SpectrumIndex> vertices;  // lexicographic
  std::vector<Edge> edges;              // ordered by (from, generator)
  std::vector<std::vector<int>> out;    // adjacency: indices into edges

  int vertex_id(const SpectrumIndex& g) const;
};

GrowthGraph build_graph(const SphereFamily& fam, const GeneratorSet& R, double c,
                        std::int64_t cutoff, NormKind norm_kind);

// The unique vertex from which every truncated vertex is reachable, if any.
std::optional<SpectrumIndex> find_root(const GrowthGraph& g);

// BFS length function with l(root) = 1. Aligned with g.vertices.
std::vector<std::int64_t> length_function(const GrowthGraph& g, const SpectrumIndex& root);

struct DiracGrowthReport {
  double max_edge_increment;       // Delta
  double bound_constant;           // |d_root| + Delta
  std::vector<SpectrumIndex> violations;
};

// Checks |d_gamma| <= |d_root| + Delta * l(gamma) on the truncation, where
// Delta is the max |d_to - d_from| over edges. When delta_vertex_cap >= 0 only
// edges with all coordinates <= cap feed Delta (lets tests probe growth beyond
// a calibration window).
DiracGrowthReport dirac_growth_check(const GrowthGraph& g, const SpectrumIndex& root,
                                     const std::vector<double>& d,
                                     std::int64_t delta_vertex_cap = -1);

std::string graph_to_dot(const GrowthGraph& g);
std::string graph_to_json(const GrowthGraph& g);

}  // namespace specdim

#endif
