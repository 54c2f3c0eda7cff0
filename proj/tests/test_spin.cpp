// Copyright 2026 The cubicplane Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <numeric>

#include "cubicplane/errors.hpp"
#include "cubicplane/spin.hpp"
#include "doctest.h"

using namespace cubicplane;

namespace {

// Number of quadratic forms on F_2^{2g} refining the symplectic pairing
// whose Arf invariant is 0, by direct count of zeros.
std::pair<std::uint64_t, std::uint64_t> brute_theta(int g) {
  const unsigned n = 1u << (2 * g);
  std::uint64_t even = 0, odd = 0;
  for (unsigned lin = 0; lin < n; ++lin) {
    unsigned zeros = 0;
    for (unsigned v = 0; v < n; ++v) {
      unsigned val = __builtin_popcount(lin & v);
      for (int i = 0; i < g; ++i) val += ((v >> i) & 1u) & ((v >> (g + i)) & 1u);
      if (val % 2 == 0) ++zeros;
    }
    (2 * zeros > n ? even : odd) += 1;
  }
  return {even, odd};
}

struct Pieces {
  std::vector<int> root;
  int find(int x) { return root[x] == x ? x : root[x] = find(root[x]); }
};

int components_of(const DualGraph& g, const std::vector<bool>& keep) {
  Pieces p{std::vector<int>(g.vertices.size())};
  std::iota(p.root.begin(), p.root.end(), 0);
  int comps = static_cast<int>(g.vertices.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (!keep[e]) continue;
    int a = p.find(g.edges[e].first), b = p.find(g.edges[e].second);
    if (a != b) {
      p.root[a] = b;
      --comps;
    }
  }
  return comps;
}

// Independent check of a witness: residual degrees are even and some
// connected piece has arithmetic genus at least one.
bool verify_witness(const DualGraph& g, const std::vector<int>& removed) {
  std::vector<bool> keep(g.edges.size(), true);
  for (int e : removed) keep[e] = false;
  std::vector<int> deg(g.vertices.size(), 0);
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    if (keep[e]) {
      ++deg[g.edges[e].first];
      ++deg[g.edges[e].second];
    }
  for (int d : deg)
    if (d % 2) return false;
  Pieces p{std::vector<int>(g.vertices.size())};
  std::iota(p.root.begin(), p.root.end(), 0);
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    if (keep[e]) p.root[p.find(g.edges[e].first)] = p.find(g.edges[e].second);
  std::vector<int> genus(g.vertices.size(), 0), verts(g.vertices.size(), 0), edges(g.vertices.size(), 0);
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    genus[p.find(static_cast<int>(v))] += g.vertices[v].geometric_genus();
    ++verts[p.find(static_cast<int>(v))];
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    if (keep[e]) ++edges[p.find(g.edges[e].first)];
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    if (p.find(static_cast<int>(v)) == static_cast<int>(v) && genus[v] + edges[v] - verts[v] + 1 >= 1) return true;
  return false;
}

bool has_witness(const std::string& cfg, int k = 10) {
  DualGraph g = build_dual_graph(parse_config(cfg));
  auto found = spin_subsets(g, k);
  if (!found.empty()) CHECK(verify_witness(g, found.front().removed));
  return !found.empty();
}

}  // namespace

TEST_CASE("dual graphs of standard configurations") {
  DualGraph k6 = build_dual_graph(parse_config("lines=6"));
  CHECK(k6.vertices.size() == 6);
  CHECK(k6.edge_count() == 15);
  CHECK(k6.arithmetic_genus() == 10);
  GraphStats s = graph_stats(k6);
  CHECK_FALSE(s.is_even);
  CHECK(s.b1 == 10);

  DualGraph conics = build_dual_graph(parse_config("conics=3"));
  CHECK(conics.edge_count() == 12);
  CHECK(graph_stats(conics).is_even);
  CHECK(graph_stats(conics).b1 == 10);

  DualGraph sextic = build_dual_graph(parse_config("sextic:nodes=10"));
  CHECK(sextic.vertices.size() == 1);
  CHECK(sextic.edge_count() == 10);
  CHECK(graph_stats(sextic).is_even);
  CHECK(graph_stats(sextic).b1 == 10);

  DualGraph lq = build_dual_graph(parse_config("line=1,quintic=1:nodes=5"));
  CHECK(lq.edge_count() == 10);
  CHECK(lq.arithmetic_genus() == 10);
  CHECK(std::count_if(lq.edges.begin(), lq.edges.end(), [](auto e) { return e.first == e.second; }) == 5);
}

TEST_CASE("edge order: cross edges lexicographic, then loops") {
  DualGraph g = build_dual_graph(parse_config("line=1,line=1,quartic=1:nodes=1"));
  std::vector<std::pair<int, int>> want{{0, 1}, {0, 2}, {0, 2}, {0, 2}, {0, 2},
                                        {1, 2}, {1, 2}, {1, 2}, {1, 2}, {2, 2}};
  CHECK(g.edges == want);
}

TEST_CASE("b1 and arithmetic genus agree with union-find across configurations") {
  for (const char* cfg : {"lines=6", "conics=3", "conics=2,lines=2", "conic=1,lines=4", "lines=3,cubic:nodes=1",
                           "line=1,quintic=1:nodes=6", "cubic=1,cubic=1:nodes=1", "quartic:nodes=2,lines=2",
                           "cubics=2", "quartic=1,conic=1", "sextic:nodes=7", "line=1,quintic=1:nodes=2"}) {
    CAPTURE(cfg);
    DualGraph g = build_dual_graph(parse_config(cfg));
    CHECK(g.arithmetic_genus() == 10);
    const int comps = components_of(g, std::vector<bool>(g.edges.size(), true));
    CHECK(graph_stats(g).b1 == g.edge_count() - static_cast<int>(g.vertices.size()) + comps);
  }
}

TEST_CASE("invalid configurations") {
  CHECK_THROWS_AS(build_dual_graph(parse_config("lines=5")), std::invalid_argument);
  CHECK_THROWS_AS(build_dual_graph(parse_config("cubic:nodes=2,cubic=1")), std::invalid_argument);
  CHECK_NOTHROW(build_dual_graph(parse_config("lines=5"), false));
  CHECK_THROWS_AS(parse_config(""), ParseError);
  CHECK_THROWS_AS(parse_config("septic=1"), ParseError);
  CHECK_THROWS_AS(parse_config("lines=x"), ParseError);
  CHECK_THROWS_AS(parse_config("cubic:knots=1"), ParseError);
  try {
    parse_config("lines=6,blob=1");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.column() == 9);
  }
}

TEST_CASE("configuration strings round trip") {
  for (const char* cfg : {"lines=6", "conics=3", "line=1,quintic=1:nodes=5", "cubic:nodes=1,cubic=1"}) {
    CAPTURE(cfg);
    auto c = parse_config(cfg);
    CHECK(parse_config(config_to_string(c)) == c);
  }
  CHECK_THROWS_AS(parse_config("cubic=1,"), ParseError);
  CHECK(config_to_string(parse_config("line,line,line,line,line,line")) == "line=6");
}

TEST_CASE("theta-characteristic counts") {
  CHECK(theta_counts(10) == ThetaCounts{1048576, 524800, 523776});
  CHECK(theta_counts(0) == ThetaCounts{1, 1, 0});
  CHECK(theta_counts(1) == ThetaCounts{4, 3, 1});
  for (int g = 0; g <= 12; ++g) {
    ThetaCounts t = theta_counts(g);
    CHECK(t.even + t.odd == t.total);
    CHECK(t.total == (std::uint64_t{1} << (2 * g)));
  }
  for (int g = 1; g <= 5; ++g) {
    CAPTURE(g);
    auto [even, odd] = brute_theta(g);
    CHECK(theta_counts(g).even == even);
    CHECK(theta_counts(g).odd == odd);
  }
  CHECK(theta_counts(31).total == (std::uint64_t{1} << 62));
  CHECK_THROWS(theta_counts(32));
  CHECK_THROWS(theta_counts(-1));
}

TEST_CASE("the eight listed configurations admit a ten-edge witness") {
  for (const char* cfg : {"lines=6", "conics=3", "conics=2,lines=2", "conic=1,lines=4", "lines=3,cubic:nodes=1",
                           "line=1,quintic=1:nodes=5", "line=1,quintic=1:nodes=6", "cubic=1,cubic=1:nodes=1",
                           "quartic:nodes=1,lines=2", "quartic:nodes=2,lines=2"}) {
    CAPTURE(cfg);
    CHECK(has_witness(cfg));
    ConfigPredicates p = config_predicates(parse_config(cfg));
    CHECK(p.in_remark41_list);
    CHECK(p.listed_in_remark41);
  }
}

TEST_CASE("the excluded families do not") {
  for (const char* cfg : {"sextic:nodes=9", "sextic:nodes=4", "sextic", "cubics=2", "line=1,quintic=1:nodes=4",
                           "line=1,quintic=1", "quartic=1,conic=1"}) {
    CAPTURE(cfg);
    CHECK_FALSE(has_witness(cfg));
    CHECK_FALSE(config_predicates(parse_config(cfg)).listed_in_remark41);
  }
  // Ten loops on a rational normalization: the residual has genus zero.
  CHECK_FALSE(has_witness("sextic:nodes=10"));
}

TEST_CASE("line plus five-nodal quintic: the witness removes every edge") {
  DualGraph g = build_dual_graph(parse_config("line=1,quintic=1:nodes=5"));
  auto w = spin_subsets(g, 10, true);
  REQUIRE(w.size() == 1);
  CHECK(w[0].removed == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
  CHECK(w[0].residual_even);
  CHECK(w[0].vertex_genera == std::vector<int>{0, 1});
  CHECK(w[0].has_genus_one_component);
}

TEST_CASE("enumeration returns each witness once and in order") {
  DualGraph g = build_dual_graph(parse_config("lines=6"));
  auto all = spin_subsets(g, 10, true);
  REQUIRE_FALSE(all.empty());
  CHECK(std::is_sorted(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.removed < b.removed; }));
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].removed != all[i].removed);
  for (const auto& r : all) CHECK(verify_witness(g, r.removed));
  CHECK(spin_subsets(g, 10).front().removed == all.front().removed);
  // Brute count over all C(15,10) subsets with the independent check.
  std::size_t brute = 0;
  std::vector<int> idx{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  while (true) {
    if (verify_witness(g, idx)) ++brute;
    int i = 9;
    while (i >= 0 && idx[i] == 15 - 10 + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < 10; ++j) idx[j] = idx[j - 1] + 1;
  }
  CHECK(all.size() == brute);
}

TEST_CASE("evaluate_removal on a non-even residual") {
  DualGraph g = build_dual_graph(parse_config("conics=3"));
  SpinSubsetReport r = evaluate_removal(g, {0});
  CHECK_FALSE(r.residual_even);
  CHECK_FALSE(r.witness);
  SpinSubsetReport none = evaluate_removal(g, {});
  CHECK(none.residual_even);
  CHECK(none.connected_genera == std::vector<int>{10});
}

TEST_CASE("configuration predicates") {
  ConfigPredicates six = config_predicates(parse_config("lines=6"));
  CHECK(six.satisfies_prop41i);
  CHECK(six.all_components_rational);
  CHECK(six.reducible);
  ConfigPredicates sextic = config_predicates(parse_config("sextic:nodes=10"));
  CHECK(sextic.satisfies_prop41i);
  CHECK_FALSE(sextic.reducible);
  CHECK(sextic.all_components_rational);
  CHECK_FALSE(config_predicates(parse_config("sextic:nodes=9")).satisfies_prop41i);
  ConfigPredicates cq = config_predicates(parse_config("conic=1,quartic:nodes=1"));
  CHECK_FALSE(cq.all_components_rational);
  CHECK_FALSE(cq.satisfies_prop41i);
  CHECK_FALSE(cq.in_remark41_list);
  CHECK_FALSE(config_predicates(parse_config("cubic=1,cubic:nodes=1")).satisfies_prop41i);
  CHECK_FALSE(config_predicates(parse_config("line=1,quintic:nodes=5")).satisfies_prop41i);
  CHECK(config_predicates(parse_config("line=1,quintic:nodes=6")).satisfies_prop41i);
  CHECK(config_predicates(parse_config("lines=2,quartic:nodes=3")).satisfies_prop41i);
  // Wider than the printed list.
  ConfigPredicates wide = config_predicates(parse_config("conic=1,quartic:nodes=2"));
  CHECK(wide.in_remark41_list);
  CHECK_FALSE(wide.listed_in_remark41);
}
