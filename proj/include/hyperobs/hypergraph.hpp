#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace hyperobs {

/// Hyperedge over 0-based node indices, stored strictly increasing.
struct Hyperedge {
  std::vector<int> nodes;

  std::size_t cardinality() const { return nodes.size(); }
  auto operator<=>(const Hyperedge&) const = default;
};

/// Undirected, unweighted hypergraph with edges of any cardinality >= 2.
///
/// Node ids are 1-based at the construction and I/O boundary and 0-based
/// everywhere else. Instances are immutable; edges are kept in
/// lexicographic order without duplicates.
class Hypergraph {
 public:
  /// Validates and normalizes `edges` (1-based ids). Throws std::invalid_argument
  /// for n < 1, out-of-range ids, repeated nodes inside an edge, or |e| < 2.
  static Hypergraph create(int n, const std::vector<std::vector<int>>& edges);

  int node_count() const { return n_; }
  const std::vector<Hyperedge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  /// Maximum edge cardinality; 0 for an edgeless hypergraph.
  int max_cardinality() const { return max_card_; }

  std::vector<Hyperedge> edges_of_cardinality(int k) const;
  /// Edges converted back to 1-based ids.
  std::vector<std::vector<int>> edges_one_based() const;

  bool operator==(const Hypergraph&) const = default;

 private:
  Hypergraph(int n, std::vector<Hyperedge> edges);

  int n_ = 0;
  std::vector<Hyperedge> edges_;
  int max_card_ = 0;
};

/// Edges {j, ..., j+k-1} for j = 1..n-k+1.
Hypergraph hyperchain(int n, int k);
/// Cyclic windows of k consecutive nodes, wrapping past n.
Hypergraph hyperring(int n, int k);
/// Internal nodes {1..k-1} shared by every edge, one leaf per edge.
Hypergraph hyperstar(int n, int k);
/// Every k-subset of the n nodes.
Hypergraph complete_hypergraph(int n, int k);

Hypergraph hypergraph_union(const Hypergraph& a, const Hypergraph& b);
Hypergraph restrict_to_cardinality(const Hypergraph& g, int k);

/// Canonical topology families used by the generators and the MON experiment.
enum class Family { chain, ring, star, complete };

Family parse_family(const std::string& name);
std::string family_name(Family family);
Hypergraph generate(Family family, int n, int k);

}  // namespace hyperobs
