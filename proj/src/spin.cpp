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

#include "cubicplane/spin.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "cubicplane/errors.hpp"

namespace cubicplane {

namespace {

const char* const kNames[] = {"line", "conic", "cubic", "quartic", "quintic", "sextic"};

int degree_of(std::string name) {
  for (int d = 1; d <= 6; ++d) {
    const std::string n = kNames[d - 1];
    if (name == n || name == n + "s") return d;
  }
  return 0;
}

int parse_count(const std::string& s, int column, const char* what) {
  if (s.empty() || s.size() > 3 || s.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(std::string("expected a small non-negative integer for ") + what, 0, column);
  return std::stoi(s);
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

int Component::geometric_genus() const { return (degree - 1) * (degree - 2) / 2 - nodes; }

std::vector<Component> parse_config(const std::string& text) {
  std::vector<Component> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const std::size_t lead = item.find_first_not_of(" \t");
    const int col = static_cast<int>(start + (lead == std::string::npos ? 0 : lead)) + 1;
    item.erase(std::remove_if(item.begin(), item.end(), [](char c) { return c == ' ' || c == '\t'; }), item.end());
    if (item.empty()) throw ParseError("empty component in configuration", 0, col);

    std::string head = item, nodes_part;
    if (std::size_t colon = item.find(':'); colon != std::string::npos) {
      head = item.substr(0, colon);
      nodes_part = item.substr(colon + 1);
      if (nodes_part.rfind("nodes=", 0) != 0) throw ParseError("expected ':nodes=K'", 0, col);
      nodes_part = nodes_part.substr(6);
    }
    std::string name = head, count_part = "1";
    if (std::size_t eq = head.find('='); eq != std::string::npos) {
      name = head.substr(0, eq);
      count_part = head.substr(eq + 1);
    }
    const int d = degree_of(name);
    if (d == 0) throw ParseError("unknown component '" + name + "'", 0, col);
    const int count = parse_count(count_part, col, "the component count");
    const int nodes = nodes_part.empty() ? 0 : parse_count(nodes_part, col, "nodes");
    if (count == 0) throw ParseError("component count must be positive", 0, col);
    for (int i = 0; i < count; ++i) out.push_back({d, nodes});
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string config_to_string(const std::vector<Component>& config) {
  std::string out;
  for (std::size_t i = 0; i < config.size();) {
    std::size_t j = i;
    while (j < config.size() && config[j] == config[i]) ++j;
    if (!out.empty()) out += ",";
    out += std::string(kNames[config[i].degree - 1]) + "=" + std::to_string(j - i);
    if (config[i].nodes > 0) out += ":nodes=" + std::to_string(config[i].nodes);
    i = j;
  }
  return out;
}

int DualGraph::arithmetic_genus() const {
  int g = 0;
  for (const auto& c : vertices) g += c.geometric_genus();
  return g + edge_count() - (static_cast<int>(vertices.size()) - 1);
}

DualGraph build_dual_graph(const std::vector<Component>& config, bool general_position) {
  if (config.empty()) throw std::invalid_argument("empty configuration");
  DualGraph g;
  g.vertices = config;
  int degree_sum = 0;
  for (const auto& c : config) {
    if (c.degree < 1 || c.degree > 6) throw std::invalid_argument("component degree must be between 1 and 6");
    if (c.nodes < 0 || c.geometric_genus() < 0)
      throw std::invalid_argument("a degree " + std::to_string(c.degree) + " component has at most " +
                                  std::to_string((c.degree - 1) * (c.degree - 2) / 2) + " nodes");
    degree_sum += c.degree;
  }
  const int n = static_cast<int>(config.size());
  if (general_position) {
    if (degree_sum != 6)
      throw std::invalid_argument("component degrees sum to " + std::to_string(degree_sum) + ", not 6");
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int e = 0; e < config[i].degree * config[j].degree; ++e) g.edges.emplace_back(i, j);
  }
  for (int i = 0; i < n; ++i)
    for (int e = 0; e < config[i].nodes; ++e) g.edges.emplace_back(i, i);
  if (general_position && g.arithmetic_genus() != 10)
    throw std::invalid_argument("genus bookkeeping gives " + std::to_string(g.arithmetic_genus()) + ", not 10");
  return g;
}

GraphStats graph_stats(const DualGraph& g) {
  const int n = static_cast<int>(g.vertices.size());
  std::vector<int> deg(n, 0);
  UnionFind uf(n);
  for (const auto& [a, b] : g.edges) {
    deg[a] += 1;
    deg[b] += 1;
    uf.unite(a, b);
  }
  GraphStats s;
  int pieces = 0;
  for (int v = 0; v < n; ++v) {
    if (deg[v] % 2 != 0) s.is_even = false;
    if (uf.find(v) == v) ++pieces;
  }
  s.b1 = g.edge_count() - n + pieces;
  return s;
}

ThetaCounts theta_counts(int g) {
  if (g < 0 || g > 31) throw std::invalid_argument("genus must be between 0 and 31");
  const std::uint64_t p = std::uint64_t{1} << g;
  ThetaCounts t;
  t.total = p * p;
  t.even = (p * (p + 1)) / 2;
  t.odd = (p * (p - 1)) / 2;
  return t;
}

SpinSubsetReport evaluate_removal(const DualGraph& g, const std::vector<int>& removed) {
  const int n = static_cast<int>(g.vertices.size());
  std::vector<char> gone(g.edges.size(), 0);
  for (int e : removed) gone.at(e) = 1;

  SpinSubsetReport r;
  r.removed = removed;
  std::vector<int> deg(n, 0), loops(n, 0), piece_edges(n, 0), piece_genus(n, 0);
  UnionFind uf(n);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (gone[e]) continue;
    const auto [a, b] = g.edges[e];
    deg[a] += 1;
    deg[b] += 1;
    if (a == b) ++loops[a];
    uf.unite(a, b);
  }
  r.residual_even = std::all_of(deg.begin(), deg.end(), [](int d) { return d % 2 == 0; });
  for (int v = 0; v < n; ++v) {
    r.vertex_genera.push_back(g.vertices[v].geometric_genus() + loops[v]);
    if (r.vertex_genera.back() == 1) r.has_genus_one_component = true;
  }
  // Arithmetic genus of a connected piece: sum of geometric genera + edges - vertices + 1.
  std::map<int, std::pair<int, int>> pieces;  // root -> (genus sum - vertices, edges)
  for (int v = 0; v < n; ++v) pieces[uf.find(v)].first += g.vertices[v].geometric_genus() - 1;
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    if (!gone[e]) pieces[uf.find(g.edges[e].first)].second += 1;
  for (const auto& [root, data] : pieces) {
    const int genus = data.first + data.second + 1;
    r.connected_genera.push_back(genus);
    if (genus >= 1) ++r.odd_capable;
  }
  r.witness = r.residual_even && r.odd_capable >= 1;
  return r;
}

std::vector<SpinSubsetReport> spin_subsets(const DualGraph& g, int k, bool enumerate_all) {
  const int e = g.edge_count();
  std::vector<SpinSubsetReport> out;
  if (k < 0 || k > e) return out;
  const int n = static_cast<int>(g.vertices.size());

  // Parity of the removed set must match the full degree parity at every
  // vertex; check that cheaply before the full evaluation.
  std::vector<int> full(n, 0);
  for (const auto& [a, b] : g.edges) {
    full[a] ^= 1;
    full[b] ^= 1;
  }
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<int> par(n);
  for (;;) {
    par = full;
    for (int i : idx) {
      par[g.edges[i].first] ^= 1;
      par[g.edges[i].second] ^= 1;
    }
    if (std::all_of(par.begin(), par.end(), [](int p) { return p == 0; })) {
      SpinSubsetReport r = evaluate_removal(g, idx);
      if (r.witness) {
        out.push_back(std::move(r));
        if (!enumerate_all) return out;
      }
    }
    int i = k - 1;
    while (i >= 0 && idx[i] == e - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

ConfigPredicates config_predicates(const std::vector<Component>& config) {
  DualGraph g = build_dual_graph(config, true);
  ConfigPredicates p;
  p.reducible = config.size() > 1;
  p.all_components_rational =
      std::all_of(config.begin(), config.end(), [](const Component& c) { return c.geometric_genus() == 0; });

  if (!p.reducible) {
    p.satisfies_prop41i = config[0].degree == 6 && config[0].nodes == 10;
  } else {
    bool excluded = false;
    for (const auto& c : config) {
      if (c.degree == 3 && c.nodes == 0) excluded = true;
      if (c.degree == 4 && c.nodes <= 2) excluded = true;
      if (c.degree == 5 && c.nodes <= 5) excluded = true;
    }
    p.satisfies_prop41i = !excluded;
  }

  p.in_remark41_list = !spin_subsets(g, 10, false).empty();

  std::vector<std::pair<int, int>> key;
  for (const auto& c : config) key.emplace_back(c.degree, c.nodes);
  std::sort(key.begin(), key.end());
  using K = std::vector<std::pair<int, int>>;
  const std::vector<K> table = {
      {{1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 0}},  // 6 lines
      {{2, 0}, {2, 0}, {2, 0}},                          // 3 conics
      {{1, 0}, {1, 0}, {2, 0}, {2, 0}},                  // 2 conics, 2 lines
      {{1, 0}, {1, 0}, {1, 0}, {1, 0}, {2, 0}},          // conic, 4 lines
      {{1, 0}, {1, 0}, {1, 0}, {3, 1}},                  // 3 lines, nodal cubic
      {{1, 0}, {5, 5}},
      {{1, 0}, {5, 6}},
      {{3, 0}, {3, 1}},
      {{1, 0}, {1, 0}, {4, 1}},
      {{1, 0}, {1, 0}, {4, 2}},
  };
  p.listed_in_remark41 = std::find(table.begin(), table.end(), key) != table.end();
  return p;
}

}  // namespace cubicplane
