#pragma once

#include "hyperobs/config.hpp"
#include "hyperobs/hypergraph.hpp"
#include "hyperobs/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace hyperobs {

/// Sparse rational matrix in coordinate form, entries sorted by (row, col)
/// with no explicit zeros. Indices are 0-based.
class SparseMatrix {
 public:
  struct Entry {
    std::size_t row;
    std::size_t col;
    Rational value;
  };

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}
  /// Sorts, merges duplicates and drops zeros.
  SparseMatrix(std::size_t rows, std::size_t cols, std::vector<Entry> entries);

  static SparseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t nonzeros() const { return entries_.size(); }
  Rational at(std::size_t row, std::size_t col) const;

  SparseMatrix& operator+=(const SparseMatrix& other);
  bool operator==(const SparseMatrix& other) const;

  /// Row-vector product v * M for a sparse row vector keyed by column of v.
  std::map<std::size_t, Rational> left_multiply(const std::map<std::size_t, Rational>& v) const;

  /// Coordinate listing, one "row col num/den" line per entry, 1-based.
  std::string to_coordinate_text() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Entry> entries_;
};

/// Standard Kronecker product (first factor varies slowest).
SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);

/// Supersymmetric order-k tensor over n modes, stored as one entry per
/// sorted multi-index (0-based).
class SymmetricTensor {
 public:
  SymmetricTensor(int order, int dim) : order_(order), dim_(dim) {}

  int order() const { return order_; }
  int dim() const { return dim_; }
  const std::map<std::vector<int>, Rational>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  /// Sets the entry for the multi-index (any order; sorted on insertion).
  void set(std::vector<int> index, const Rational& value);
  /// Value at an arbitrary (possibly unsorted) multi-index.
  Rational at(std::vector<int> index) const;

 private:
  int order_;
  int dim_;
  std::map<std::vector<int>, Rational> entries_;
};

/// Adjacency tensor of the cardinality-k edges: 1/(k-1)! at every edge.
SymmetricTensor adjacency_tensor(const Hypergraph& g, int k);

/// Linear position (1-based) of the 1-based index tuple J in a box with mode
/// sizes N, first index fastest. Throws std::out_of_range on bad input.
std::int64_t ivec(std::span<const std::int64_t> index, std::span<const std::int64_t> modes);
/// Inverse of ivec.
std::vector<std::int64_t> ivec_inverse(std::int64_t position, std::span<const std::int64_t> modes);

/// Mode-p unfolding (1-based p), n x n^(k-1), columns ordered by ivec over
/// the remaining modes.
SparseMatrix unfold(const SymmetricTensor& t, int p);

/// n^m, saturating at SIZE_MAX.
std::size_t saturating_power(std::size_t n, int m);

/// Number of distinct orderings of a multiset given as a sorted index list.
std::int64_t multinomial_count(std::span<const int> sorted_index);

/// x (x) x (x) ... (x) x, m factors; m = 0 yields {1}. Throws GuardError
/// when n^m exceeds `cap`.
std::vector<Rational> kron_power(std::span<const Rational> x, int m,
                                 std::size_t cap = Caps{}.kron);
std::vector<Rational> kron(std::span<const Rational> a, std::span<const Rational> b);

/// Contraction A x^{k-1}: component i sums A[i, j2..jk] x_j2 ... x_jk.
/// Works from canonical entries with multinomial weights, so the n^(k-1)
/// vector is never formed. T needs T(Rational), T * T and T += T.
template <class T>
std::vector<T> tensor_apply(const SymmetricTensor& t, std::span<const T> x) {
  std::vector<T> out(static_cast<std::size_t>(t.dim()), T(Rational(0)));
  std::vector<int> rest;
  for (const auto& [index, value] : t.entries()) {
    for (std::size_t pos = 0; pos < index.size(); ++pos) {
      if (pos > 0 && index[pos] == index[pos - 1]) continue;
      rest.assign(index.begin(), index.end());
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
      T prod(Rational(value * Rational(multinomial_count(rest))));
      for (int j : rest) prod = prod * x[static_cast<std::size_t>(j)];
      out[static_cast<std::size_t>(index[pos])] += prod;
    }
  }
  return out;
}

}  // namespace hyperobs
