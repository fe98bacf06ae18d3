#include "hyperobs/tensor.hpp"

#include "hyperobs/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace hyperobs {

namespace {

std::size_t env_or(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0) {
    throw std::invalid_argument(std::string(name) + " must be a positive integer");
  }
  return static_cast<std::size_t>(v);
}

std::int64_t factorial(int k) {
  std::int64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

std::size_t saturating_power(std::size_t n, int m) {
  std::size_t out = 1;
  for (int i = 0; i < m; ++i) {
    if (n != 0 && out > std::numeric_limits<std::size_t>::max() / n) {
      return std::numeric_limits<std::size_t>::max();
    }
    out *= n;
  }
  return out;
}

Caps Caps::from_env() {
  Caps caps;
  caps.terms = env_or("HYPEROBS_TERM_CAP", caps.terms);
  caps.kron = env_or("HYPEROBS_KRON_CAP", caps.kron);
  return caps;
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, std::vector<Entry> entries)
    : rows_(rows), cols_(cols) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.row, a.col) < std::tie(b.row, b.col);
  });
  for (auto& e : entries) {
    if (e.row >= rows || e.col >= cols) throw std::out_of_range("sparse entry outside matrix");
    if (!entries_.empty() && entries_.back().row == e.row && entries_.back().col == e.col) {
      entries_.back().value += e.value;
      if (entries_.back().value == 0) entries_.pop_back();
    } else if (e.value != 0) {
      entries_.push_back(std::move(e));
    }
  }
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  std::vector<Entry> entries;
  entries.reserve(n);
  for (std::size_t i = 0; i < n; ++i) entries.push_back({i, i, Rational(1)});
  return SparseMatrix(n, n, std::move(entries));
}

Rational SparseMatrix::at(std::size_t row, std::size_t col) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::make_pair(row, col),
                             [](const Entry& e, const std::pair<std::size_t, std::size_t>& key) {
                               return std::tie(e.row, e.col) < std::tie(key.first, key.second);
                             });
  if (it != entries_.end() && it->row == row && it->col == col) return it->value;
  return 0;
}

SparseMatrix& SparseMatrix::operator+=(const SparseMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("sparse matrix sum with mismatched shapes");
  }
  std::vector<Entry> all = entries_;
  all.insert(all.end(), other.entries_.begin(), other.entries_.end());
  *this = SparseMatrix(rows_, cols_, std::move(all));
  return *this;
}

bool SparseMatrix::operator==(const SparseMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_ || entries_.size() != other.entries_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& a = entries_[i];
    const auto& b = other.entries_[i];
    if (a.row != b.row || a.col != b.col || a.value != b.value) return false;
  }
  return true;
}

std::map<std::size_t, Rational> SparseMatrix::left_multiply(
    const std::map<std::size_t, Rational>& v) const {
  std::map<std::size_t, Rational> out;
  auto it = entries_.begin();
  for (const auto& [row, coeff] : v) {
    if (row >= rows_) throw std::out_of_range("row vector longer than matrix");
    it = std::lower_bound(it, entries_.end(), row,
                          [](const Entry& e, std::size_t r) { return e.row < r; });
    for (auto e = it; e != entries_.end() && e->row == row; ++e) out[e->col] += coeff * e->value;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::string SparseMatrix::to_coordinate_text() const {
  std::ostringstream os;
  for (const auto& e : entries_) {
    os << e.row + 1 << ' ' << e.col + 1 << ' ' << e.value.get_num().get_str() << '/'
       << e.value.get_den().get_str() << '\n';
  }
  return os.str();
}

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
  std::vector<SparseMatrix::Entry> entries;
  entries.reserve(a.nonzeros() * b.nonzeros());
  for (const auto& ea : a.entries()) {
    for (const auto& eb : b.entries()) {
      entries.push_back({ea.row * b.rows() + eb.row, ea.col * b.cols() + eb.col, ea.value * eb.value});
    }
  }
  return SparseMatrix(a.rows() * b.rows(), a.cols() * b.cols(), std::move(entries));
}

void SymmetricTensor::set(std::vector<int> index, const Rational& value) {
  if (static_cast<int>(index.size()) != order_) throw std::invalid_argument("tensor index has wrong order");
  for (int j : index) {
    if (j < 0 || j >= dim_) throw std::out_of_range("tensor index outside dimension");
  }
  std::sort(index.begin(), index.end());
  if (value == 0) {
    entries_.erase(index);
  } else {
    entries_[std::move(index)] = value;
  }
}

Rational SymmetricTensor::at(std::vector<int> index) const {
  std::sort(index.begin(), index.end());
  auto it = entries_.find(index);
  return it == entries_.end() ? Rational(0) : it->second;
}

SymmetricTensor adjacency_tensor(const Hypergraph& g, int k) {
  if (k < 2) throw std::invalid_argument("adjacency tensor order must be >= 2");
  SymmetricTensor t(k, g.node_count());
  const Rational weight(1, factorial(k - 1));
  for (const auto& e : g.edges_of_cardinality(k)) t.set(e.nodes, weight);
  return t;
}

std::int64_t ivec(std::span<const std::int64_t> index, std::span<const std::int64_t> modes) {
  if (index.size() != modes.size()) throw std::invalid_argument("ivec: index and mode lists differ in length");
  std::int64_t pos = 0;
  std::int64_t stride = 1;
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (index[i] < 1 || index[i] > modes[i]) throw std::out_of_range("ivec: index outside its mode");
    pos += (index[i] - 1) * stride;
    stride *= modes[i];
  }
  return pos + 1;
}

std::vector<std::int64_t> ivec_inverse(std::int64_t position, std::span<const std::int64_t> modes) {
  std::int64_t total = 1;
  for (auto m : modes) total *= m;
  if (position < 1 || position > total) throw std::out_of_range("ivec_inverse: position outside box");
  std::vector<std::int64_t> index(modes.size());
  std::int64_t rem = position - 1;
  for (std::size_t i = 0; i < modes.size(); ++i) {
    index[i] = rem % modes[i] + 1;
    rem /= modes[i];
  }
  return index;
}

SparseMatrix unfold(const SymmetricTensor& t, int p) {
  if (p < 1 || p > t.order()) throw std::out_of_range("unfold: mode outside [1, order]");
  const std::size_t n = static_cast<std::size_t>(t.dim());
  std::size_t cols = 1;
  for (int i = 1; i < t.order(); ++i) cols *= n;
  std::vector<std::int64_t> modes(static_cast<std::size_t>(t.order() - 1), static_cast<std::int64_t>(n));
  std::vector<SparseMatrix::Entry> entries;
  std::vector<std::int64_t> rest(modes.size());
  for (const auto& [canonical, value] : t.entries()) {
    std::vector<int> perm = canonical;
    do {
      std::size_t r = 0;
      for (int i = 0; i < t.order(); ++i) {
        if (i == p - 1) continue;
        rest[r++] = perm[static_cast<std::size_t>(i)] + 1;
      }
      auto col = static_cast<std::size_t>(ivec(rest, modes) - 1);
      entries.push_back({static_cast<std::size_t>(perm[static_cast<std::size_t>(p - 1)]), col, value});
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return SparseMatrix(n, cols, std::move(entries));
}

std::int64_t multinomial_count(std::span<const int> sorted_index) {
  std::int64_t count = factorial(static_cast<int>(sorted_index.size()));
  std::size_t run = 1;
  for (std::size_t i = 1; i <= sorted_index.size(); ++i) {
    if (i < sorted_index.size() && sorted_index[i] == sorted_index[i - 1]) {
      ++run;
    } else {
      count /= factorial(static_cast<int>(run));
      run = 1;
    }
  }
  return count;
}

std::vector<Rational> kron(std::span<const Rational> a, std::span<const Rational> b) {
  std::vector<Rational> out;
  out.reserve(a.size() * b.size());
  for (const auto& u : a) {
    for (const auto& v : b) out.push_back(u * v);
  }
  return out;
}

std::vector<Rational> kron_power(std::span<const Rational> x, int m, std::size_t cap) {
  if (m < 0) throw std::invalid_argument("kron_power: negative exponent");
  std::size_t size = saturating_power(x.size(), m);
  if (size > cap) throw GuardError("kron_power: n^m exceeds the Kronecker cap", size, cap);
  std::vector<Rational> out{Rational(1)};
  for (int i = 0; i < m; ++i) out = kron(out, x);
  return out;
}

}  // namespace hyperobs
