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

#ifndef CUBICPLANE_SPIN_HPP
#define CUBICPLANE_SPIN_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cubicplane {

/// One irreducible component: plane degree and number of internal nodes.
struct Component {
  int degree = 1;
  int nodes = 0;

  /// Geometric genus (d-1)(d-2)/2 - nodes.
  int geometric_genus() const;
  friend bool operator==(const Component&, const Component&) = default;
};

/// Parses `lines=6`, `conics=3`, `line=1,quintic=1:nodes=5`, `cubic:nodes=1`.
/// Names are line, conic, cubic, quartic, quintic, sextic (plural allowed).
/// Throws ParseError with the column of the offending item.
std::vector<Component> parse_config(const std::string& text);

std::string config_to_string(const std::vector<Component>& config);

/// Dual graph of a nodal curve. Edges are nodes: cross edges join distinct
/// components, loops are internal nodes. Multi-edges are kept individually.
struct DualGraph {
  std::vector<Component> vertices;
  std::vector<std::pair<int, int>> edges;  // loops have first == second

  int edge_count() const { return static_cast<int>(edges.size()); }
  /// Sum of geometric genera + nodes - (components - 1).
  int arithmetic_genus() const;
};

/// With general_position, component i and j meet in d_i*d_j nodes and the
/// degrees must sum to 6; otherwise only loops are added. Throws
/// std::invalid_argument for a component with more nodes than its genus
/// allows or for a degree sum other than 6 in general position.
DualGraph build_dual_graph(const std::vector<Component>& config, bool general_position = true);

struct GraphStats {
  bool is_even = true;  // loops count twice
  int b1 = 0;
};

GraphStats graph_stats(const DualGraph& g);

struct ThetaCounts {
  std::uint64_t total = 0;
  std::uint64_t even = 0;
  std::uint64_t odd = 0;
  friend bool operator==(const ThetaCounts&, const ThetaCounts&) = default;
};

/// 2^{2g} theta-characteristics, 2^{g-1}(2^g+1) even. Valid for 0 <= g <= 31.
ThetaCounts theta_counts(int g);

struct SpinSubsetReport {
  std::vector<int> removed;  // edge indices into DualGraph::edges
  bool residual_even = false;
  std::vector<int> vertex_genera;     // arithmetic genus of each component after removal
  std::vector<int> connected_genera;  // arithmetic genus of each residual connected piece
  /// Connected pieces that carry an odd theta-characteristic (genus >= 1).
  int odd_capable = 0;
  /// Even residual and an odd choice exists on an odd number of pieces.
  bool witness = false;
  bool has_genus_one_component = false;
};

/// Removals of exactly k edges leaving an even residual graph that admits an
/// odd theta-characteristic. Stops at the first witness unless
/// enumerate_all. Subsets are visited in lexicographic order of indices.
std::vector<SpinSubsetReport> spin_subsets(const DualGraph& g, int k, bool enumerate_all = false);

/// Evaluates a single removal; `removed` must be sorted and distinct.
SpinSubsetReport evaluate_removal(const DualGraph& g, const std::vector<int>& removed);

struct ConfigPredicates {
  bool satisfies_prop41i = false;  // every associated fourfold is singular
  bool in_remark41_list = false;   // admits a k = 10 witness
  bool listed_in_remark41 = false; // literally one of the eight printed types
  bool all_components_rational = false;
  bool reducible = false;
};

ConfigPredicates config_predicates(const std::vector<Component>& config);

}  // namespace cubicplane

#endif  // CUBICPLANE_SPIN_HPP
