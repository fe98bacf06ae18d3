#include "hyperobs/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperobs {

namespace {

void check_generator_args(const char* name, int n, int k) {
  if (k < 2 || k > n) {
    throw std::invalid_argument(std::string(name) + ": need 2 <= k <= n, got n=" +
                                std::to_string(n) + ", k=" + std::to_string(k));
  }
}

}  // namespace

Hypergraph::Hypergraph(int n, std::vector<Hyperedge> edges) : n_(n), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const auto& e : edges_) {
    max_card_ = std::max(max_card_, static_cast<int>(e.cardinality()));
  }
}

Hypergraph Hypergraph::create(int n, const std::vector<std::vector<int>>& edges) {
  if (n < 1) throw std::invalid_argument("hypergraph needs at least one node");
  std::vector<Hyperedge> normalized;
  normalized.reserve(edges.size());
  for (const auto& raw : edges) {
    if (raw.size() < 2) {
      throw std::invalid_argument("hyperedge cardinality must be >= 2");
    }
    Hyperedge e;
    e.nodes.reserve(raw.size());
    for (int id : raw) {
      if (id < 1 || id > n) {
        throw std::invalid_argument("node id " + std::to_string(id) + " outside [1, " +
                                    std::to_string(n) + "]");
      }
      e.nodes.push_back(id - 1);
    }
    std::sort(e.nodes.begin(), e.nodes.end());
    if (std::adjacent_find(e.nodes.begin(), e.nodes.end()) != e.nodes.end()) {
      throw std::invalid_argument("hyperedge repeats a node");
    }
    normalized.push_back(std::move(e));
  }
  return Hypergraph(n, std::move(normalized));
}

std::vector<Hyperedge> Hypergraph::edges_of_cardinality(int k) const {
  std::vector<Hyperedge> out;
  for (const auto& e : edges_) {
    if (static_cast<int>(e.cardinality()) == k) out.push_back(e);
  }
  return out;
}

std::vector<std::vector<int>> Hypergraph::edges_one_based() const {
  std::vector<std::vector<int>> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) {
    std::vector<int> ids(e.nodes);
    for (int& id : ids) ++id;
    out.push_back(std::move(ids));
  }
  return out;
}

Hypergraph hyperchain(int n, int k) {
  check_generator_args("hyperchain", n, k);
  std::vector<std::vector<int>> edges;
  for (int j = 1; j <= n - k + 1; ++j) {
    std::vector<int> e;
    for (int t = 0; t < k; ++t) e.push_back(j + t);
    edges.push_back(std::move(e));
  }
  return Hypergraph::create(n, edges);
}

Hypergraph hyperring(int n, int k) {
  check_generator_args("hyperring", n, k);
  std::vector<std::vector<int>> edges;
  for (int j = 1; j <= n; ++j) {
    std::vector<int> e;
    for (int t = 0; t < k; ++t) {
      int id = j + t;
      e.push_back(id > n ? id - n : id);
    }
    edges.push_back(std::move(e));
  }
  return Hypergraph::create(n, edges);
}

Hypergraph hyperstar(int n, int k) {
  check_generator_args("hyperstar", n, k);
  std::vector<std::vector<int>> edges;
  for (int leaf = k; leaf <= n; ++leaf) {
    std::vector<int> e;
    for (int c = 1; c < k; ++c) e.push_back(c);
    e.push_back(leaf);
    edges.push_back(std::move(e));
  }
  return Hypergraph::create(n, edges);
}

Hypergraph complete_hypergraph(int n, int k) {
  check_generator_args("complete_hypergraph", n, k);
  std::vector<std::vector<int>> edges;
  std::vector<int> subset(k);
  for (int i = 0; i < k; ++i) subset[i] = i + 1;
  while (true) {
    edges.push_back(subset);
    int i = k - 1;
    while (i >= 0 && subset[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
  return Hypergraph::create(n, edges);
}

Hypergraph hypergraph_union(const Hypergraph& a, const Hypergraph& b) {
  if (a.node_count() != b.node_count()) {
    throw std::invalid_argument("union of hypergraphs with different node counts");
  }
  auto edges = a.edges_one_based();
  auto more = b.edges_one_based();
  edges.insert(edges.end(), more.begin(), more.end());
  return Hypergraph::create(a.node_count(), edges);
}

Hypergraph restrict_to_cardinality(const Hypergraph& g, int k) {
  std::vector<std::vector<int>> edges;
  for (auto& e : g.edges_one_based()) {
    if (static_cast<int>(e.size()) == k) edges.push_back(std::move(e));
  }
  return Hypergraph::create(g.node_count(), edges);
}

Family parse_family(const std::string& name) {
  if (name == "chain") return Family::chain;
  if (name == "ring") return Family::ring;
  if (name == "star") return Family::star;
  if (name == "complete") return Family::complete;
  throw std::invalid_argument("unknown family '" + name + "' (chain|ring|star|complete)");
}

std::string family_name(Family family) {
  switch (family) {
    case Family::chain: return "chain";
    case Family::ring: return "ring";
    case Family::star: return "star";
    case Family::complete: return "complete";
  }
  return "?";
}

Hypergraph generate(Family family, int n, int k) {
  switch (family) {
    case Family::chain: return hyperchain(n, k);
    case Family::ring: return hyperring(n, k);
    case Family::star: return hyperstar(n, k);
    case Family::complete: return complete_hypergraph(n, k);
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace hyperobs
