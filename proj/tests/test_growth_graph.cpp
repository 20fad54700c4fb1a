#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "specdim/growth_graph.hpp"

using namespace specdim;

namespace {

bool has_edge(const GrowthGraph& g, SpectrumIndex from, SpectrumIndex to) {
  int v = g.vertex_id(from), w = g.vertex_id(to);
  if (v < 0 || w < 0) return false;
  for (int e : g.out[v])
    if (g.edges[e].to == w) return true;
  return false;
}

}  // namespace

TEST_CASE("default generators and ratio bounds") {
  CHECK(default_generators(SphereFamily(Family::OddA, 2)).size() == 3);
  CHECK(default_generators(SphereFamily(Family::EvenB, 2)).size() == 1);
  CHECK(default_generators(SphereFamily(Family::OddD, 2)).size() == 1);
  CHECK(default_ratio_bound(SphereFamily(Family::OddA, 1), NormKind::Sup) == 2.1);
  CHECK(default_ratio_bound(SphereFamily(Family::EvenB, 3), NormKind::Sup) == 1.1);
  CHECK(default_ratio_bound(SphereFamily(Family::OddA, 1), NormKind::L2) ==
        doctest::Approx(std::sqrt(6.0) + 0.1));
}

TEST_CASE("EvenB default graph is a path") {
  SphereFamily fam(Family::EvenB, 2);
  auto g = build_graph(fam, default_generators(fam), 1.1, 5, NormKind::Sup);
  REQUIRE(g.vertices.size() == 6);
  REQUIRE(g.edges.size() == 5);
  for (int k = 0; k < 5; ++k) {
    CHECK(has_edge(g, SpectrumIndex::single(k), SpectrumIndex::single(k + 1)));
    CHECK(g.edges[k].ratio == doctest::Approx(1.0));
  }
  auto root = find_root(g);
  REQUIRE(root.has_value());
  CHECK(*root == SpectrumIndex::single(0));
  auto len = length_function(g, *root);
  CHECK(len[0] == 1);
  for (int k = 1; k <= 5; ++k) CHECK(len[g.vertex_id(SpectrumIndex::single(k))] == k);
}

TEST_CASE("OddA default graph edges and root") {
  SphereFamily fam(Family::OddA, 1);
  auto g = build_graph(fam, default_generators(fam), 2.1, 2, NormKind::Sup);
  CHECK(has_edge(g, {0, 0}, {1, 1}));
  CHECK(has_edge(g, {1, 1}, {2, 1}));
  CHECK(has_edge(g, {1, 1}, {1, 2}));
  auto root = find_root(g);
  REQUIRE(root.has_value());
  CHECK(*root == SpectrumIndex(0, 0));
}

TEST_CASE("tight ratio bound removes diagonal edges and the root") {
  SphereFamily fam(Family::OddA, 1);
  auto g = build_graph(fam, default_generators(fam), 1.5, 2, NormKind::Sup);
  CHECK_FALSE(has_edge(g, {0, 0}, {1, 1}));
  CHECK_FALSE(has_edge(g, {1, 1}, {2, 2}));
  CHECK_FALSE(find_root(g).has_value());
}

TEST_CASE("graphs are acyclic") {
  // shifts strictly increase the coordinate sum, so every edge goes to a
  // strictly larger sum
  SphereFamily fam(Family::OddA, 2);
  auto g = build_graph(fam, default_generators(fam), 2.1, 10, NormKind::Sup);
  for (const auto& e : g.edges) {
    auto f = g.vertices[e.from];
    auto t = g.vertices[e.to];
    CHECK(t.g1 + t.g2 > f.g1 + f.g2);
  }
}

TEST_CASE("length equals the max coordinate for OddA defaults") {
  for (int n : {1, 2}) {
    SphereFamily fam(Family::OddA, n);
    auto g = build_graph(fam, default_generators(fam), 2.1, 100, NormKind::Sup);
    auto root = find_root(g);
    REQUIRE(root.has_value());
    auto len = length_function(g, *root);
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      auto idx = g.vertices[v];
      std::int64_t expect = std::max<std::int64_t>({idx.g1, idx.g2, 1});
      REQUIRE(len[v] == expect);
    }
  }
}

TEST_CASE("length is the index itself for B and D defaults") {
  for (auto fam : {SphereFamily(Family::EvenB, 2), SphereFamily(Family::OddD, 2)}) {
    auto g = build_graph(fam, default_generators(fam), 1.1, 10000, NormKind::Sup);
    auto root = find_root(g);
    REQUIRE(root.has_value());
    auto len = length_function(g, *root);
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
      REQUIRE(len[v] == std::max<std::int64_t>(g.vertices[v].g1, 1));
  }
}

TEST_CASE("sup and L2 defaults give the same root and length function") {
  for (auto fam : {SphereFamily(Family::OddA, 1), SphereFamily(Family::OddA, 2),
                   SphereFamily(Family::EvenB, 2), SphereFamily(Family::OddD, 2)}) {
    auto gs = build_graph(fam, default_generators(fam),
                          default_ratio_bound(fam, NormKind::Sup), 40, NormKind::Sup);
    auto gl = build_graph(fam, default_generators(fam),
                          default_ratio_bound(fam, NormKind::L2), 40, NormKind::L2);
    auto rs = find_root(gs);
    auto rl = find_root(gl);
    REQUIRE(rs.has_value());
    REQUIRE(rl.has_value());
    CHECK(*rs == *rl);
    CHECK(length_function(gs, *rs) == length_function(gl, *rl));
  }
}

TEST_CASE("length_function rejects non-roots") {
  SphereFamily fam(Family::OddA, 1);
  auto g = build_graph(fam, default_generators(fam), 2.1, 5, NormKind::Sup);
  CHECK_THROWS_AS(length_function(g, SpectrumIndex(2, 0)), NotARoot);
  CHECK_THROWS_AS(length_function(g, SpectrumIndex(7, 7)), NotARoot);
}

TEST_CASE("dirac growth bound holds for length-like eigenvalues") {
  SphereFamily fam(Family::OddA, 1);
  auto g = build_graph(fam, default_generators(fam), 2.1, 30, NormKind::Sup);
  auto root = *find_root(g);
  auto len = length_function(g, root);

  std::vector<double> d_len(len.begin(), len.end());
  auto r1 = dirac_growth_check(g, root, d_len);
  CHECK(r1.max_edge_increment == doctest::Approx(1.0));
  CHECK(r1.violations.empty());

  std::vector<double> d_sum(g.vertices.size());
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    d_sum[v] = double(g.vertices[v].g1 + g.vertices[v].g2);
  auto r2 = dirac_growth_check(g, root, d_sum);
  CHECK(r2.max_edge_increment == doctest::Approx(2.0));
  CHECK(r2.violations.empty());
}

TEST_CASE("dirac growth negative control with quadratic eigenvalues") {
  SphereFamily fam(Family::EvenB, 1);
  auto g = build_graph(fam, default_generators(fam), 1.1, 50, NormKind::Sup);
  auto root = *find_root(g);
  std::vector<double> d(g.vertices.size());
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    d[v] = double(g.vertices[v].g1) * double(g.vertices[v].g1);
  // the edge increment is calibrated on the window gamma <= 20, so growth
  // beyond 40 breaks the linear bound
  auto r = dirac_growth_check(g, root, d, 20);
  CHECK_FALSE(r.violations.empty());
}

TEST_CASE("dot and json outputs") {
  SphereFamily fam(Family::EvenB, 2);
  auto g = build_graph(fam, default_generators(fam), 1.1, 3, NormKind::Sup);
  auto dot = graph_to_dot(g);
  CHECK(dot.find("digraph growth") != std::string::npos);
  CHECK(dot.find("doublecircle") != std::string::npos);
  CHECK(dot.find("y^2") != std::string::npos);
  auto js = graph_to_json(g);
  CHECK(js.find("\"schema_version\": 1") != std::string::npos);
  CHECK(js.find("\"root\": \"0\"") != std::string::npos);
  CHECK(graph_to_json(g) == js);  // deterministic bytes
}
