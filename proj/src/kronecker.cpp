#include "hyperobs/kronecker.hpp"

#include "hyperobs/errors.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace hyperobs {

namespace {

void check_dim(const char* what, std::size_t dim, const Caps& caps) {
  if (dim > caps.kron) throw GuardError(std::string(what) + ": dimension exceeds the Kronecker cap", dim, caps.kron);
}

// Tuple of a Kronecker position (first factor slowest) as a monomial.
Monomial position_monomial(std::size_t position, std::size_t n, int m) {
  std::vector<int> counts(n, 0);
  for (int i = 0; i < m; ++i) {
    ++counts[position % n];
    position /= n;
  }
  std::vector<Monomial::Factor> factors;
  for (std::size_t v = 0; v < n; ++v) {
    if (counts[v] > 0) factors.emplace_back(static_cast<int>(v), counts[v]);
  }
  return Monomial::from_factors(std::move(factors));
}

using SparseRow = std::map<std::size_t, Rational>;

// Per-output, per-sequence coefficient rows w with C A_{k1} B... = w, plus
// the Kronecker degree d of the state power they multiply.
struct LevelTerm {
  SparseRow w;
  int degree;
};

class KroneckerStackBuilder {
 public:
  KroneckerStackBuilder(const Hypergraph& g, const OutputMatrix& c, const Caps& caps)
      : g_(g), c_(c), caps_(caps), n_(static_cast<std::size_t>(g.node_count())) {
    if (c.state_dim() != g.node_count()) throw std::invalid_argument("output matrix and hypergraph differ in dimension");
    max_k_ = g.max_cardinality();
    for (int k = 2; k <= max_k_; ++k) {
      check_dim("unfolded adjacency tensor", saturating_power(n_, k - 1), caps_);
      unfolded_.emplace(k, unfold(adjacency_tensor(g, k), 1));
    }
  }

  // Terms contributing to level j for output i (j = 0 is C x itself).
  std::vector<LevelTerm> level_terms(int output, int level) {
    SparseRow base;
    const auto& row = c_.rows()[static_cast<std::size_t>(output)];
    for (std::size_t v = 0; v < n_; ++v) {
      if (row[v] != 0) base[v] = row[v];
    }
    if (level == 0) return {{base, 1}};
    std::vector<LevelTerm> out;
    if (max_k_ < 2) return out;
    std::vector<int> seq(static_cast<std::size_t>(level), 2);
    while (true) {
      SparseRow w = base.empty() ? base : unfolded_.at(seq[0]).left_multiply(base);
      for (int t = 2; t <= level && !w.empty(); ++t) {
        std::vector<int> prefix(seq.begin(), seq.begin() + t);
        w = b_for(prefix).left_multiply(w);
      }
      int degree = std::accumulate(seq.begin(), seq.end(), 0) - (2 * level - 1);
      out.push_back({std::move(w), degree});
      int pos = level - 1;
      while (pos >= 0 && seq[static_cast<std::size_t>(pos)] == max_k_) seq[static_cast<std::size_t>(pos--)] = 2;
      if (pos < 0) break;
      ++seq[static_cast<std::size_t>(pos)];
    }
    return out;
  }

  std::size_t n() const { return n_; }

 private:
  const SparseMatrix& b_for(const std::vector<int>& seq) {
    auto it = b_cache_.find(seq);
    if (it == b_cache_.end()) it = b_cache_.emplace(seq, b_matrix(g_, seq, caps_).matrix).first;
    return it->second;
  }

  const Hypergraph& g_;
  const OutputMatrix& c_;
  Caps caps_;
  std::size_t n_;
  int max_k_ = 0;
  std::map<int, SparseMatrix> unfolded_;
  std::map<std::vector<int>, SparseMatrix> b_cache_;
};

}  // namespace

SparseMatrix kronecker_slot_sum(const SparseMatrix& a, std::size_t n, int slots, const Caps& caps) {
  if (slots < 1) throw std::invalid_argument("Kronecker slot sum needs at least one slot");
  if (a.rows() != n) throw std::invalid_argument("slot matrix must have n rows");
  check_dim("slot sum rows", saturating_power(n, slots), caps);
  const std::size_t cols = saturating_power(n, slots - 1) * a.cols();
  check_dim("slot sum columns", cols, caps);
  SparseMatrix sum(saturating_power(n, slots), cols);
  for (int i = 1; i <= slots; ++i) {
    auto left = SparseMatrix::identity(saturating_power(n, i - 1));
    auto right = SparseMatrix::identity(saturating_power(n, slots - i));
    sum += kron(kron(left, a), right);
  }
  return sum;
}

int b_matrix_slots(std::span<const int> sequence) {
  const int p = static_cast<int>(sequence.size());
  int sum = 0;
  for (int i = 0; i + 1 < p; ++i) sum += sequence[static_cast<std::size_t>(i)];
  return sum - (2 * p - 3);
}

BMatrix b_matrix(const Hypergraph& g, std::span<const int> sequence, const Caps& caps) {
  if (sequence.size() < 2) throw std::invalid_argument("B matrix needs a sequence of length >= 2");
  for (int k : sequence) {
    if (k < 2) throw std::invalid_argument("cardinalities in a B sequence must be >= 2");
  }
  const auto n = static_cast<std::size_t>(g.node_count());
  const int slots = b_matrix_slots(sequence);
  const int last = sequence.back();
  check_dim("b_matrix rows", saturating_power(n, slots), caps);
  check_dim("b_matrix columns", saturating_power(n, slots + last - 2), caps);
  auto a = unfold(adjacency_tensor(g, last), 1);
  return BMatrix{std::vector<int>(sequence.begin(), sequence.end()), kronecker_slot_sum(a, n, slots, caps)};
}

SparseMatrix uniform_b_matrix(const Hypergraph& g, int k, int p, const Caps& caps) {
  if (p < 2 || k < 2) throw std::invalid_argument("uniform B matrix needs k >= 2 and p >= 2");
  const auto n = static_cast<std::size_t>(g.node_count());
  const int slots = (p - 1) * k - (2 * p - 3);
  check_dim("uniform B rows", saturating_power(n, slots), caps);
  check_dim("uniform B columns", saturating_power(n, slots + k - 2), caps);
  return kronecker_slot_sum(unfold(adjacency_tensor(g, k), 1), n, slots, caps);
}

std::vector<Polynomial> kron_power_symbolic(int n, int m) {
  std::vector<Polynomial> out{Polynomial(Rational(1))};
  for (int i = 0; i < m; ++i) {
    std::vector<Polynomial> next;
    next.reserve(out.size() * static_cast<std::size_t>(n));
    for (const auto& p : out) {
      for (int v = 0; v < n; ++v) next.push_back(p * Polynomial::variable(v));
    }
    out = std::move(next);
  }
  return out;
}

std::vector<std::vector<Polynomial>> kron_power_jacobian(int n, int m) {
  using PolyMatrix = std::vector<std::vector<Polynomial>>;
  auto kron_dense = [](const PolyMatrix& a, const PolyMatrix& b) {
    PolyMatrix out(a.size() * b.size());
    const std::size_t bcols = b.empty() ? 0 : b.front().size();
    const std::size_t acols = a.empty() ? 0 : a.front().size();
    for (auto& row : out) row.resize(acols * bcols);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < acols; ++j) {
        if (a[i][j].is_zero()) continue;
        for (std::size_t k = 0; k < b.size(); ++k) {
          for (std::size_t l = 0; l < bcols; ++l) {
            if (!b[k][l].is_zero()) out[i * b.size() + k][j * bcols + l] = a[i][j] * b[k][l];
          }
        }
      }
    }
    return out;
  };
  auto column = [](std::vector<Polynomial> v) {
    PolyMatrix out;
    for (auto& p : v) out.push_back({std::move(p)});
    return out;
  };
  PolyMatrix identity(static_cast<std::size_t>(n), std::vector<Polynomial>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) identity[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Polynomial(Rational(1));

  const std::size_t rows = saturating_power(static_cast<std::size_t>(n), m);
  PolyMatrix jac(rows, std::vector<Polynomial>(static_cast<std::size_t>(n)));
  for (int s = 1; s <= m; ++s) {
    auto term = kron_dense(kron_dense(column(kron_power_symbolic(n, s - 1)), identity), column(kron_power_symbolic(n, m - s)));
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < static_cast<std::size_t>(n); ++c) jac[r][c] += term[r][c];
    }
  }
  return jac;
}

ObservationStack stack_kronecker(const Hypergraph& g, const OutputMatrix& c, int depth, const Caps& caps) {
  if (depth < 0) throw std::invalid_argument("derivative depth must be >= 0");
  KroneckerStackBuilder builder(g, c, caps);
  const std::size_t n = builder.n();
  ObservationStack stack{g.node_count(), c.output_count(), depth, {}};
  for (int level = 0; level <= depth; ++level) {
    for (int i = 0; i < c.output_count(); ++i) {
      PolynomialBuilder entry;
      for (const auto& term : builder.level_terms(i, level)) {
        check_dim("state Kronecker power", saturating_power(n, term.degree), caps);
        for (const auto& [pos, coeff] : term.w) entry.add(position_monomial(pos, n, term.degree), coeff);
      }
      stack.entries.push_back(std::move(entry).build());
    }
  }
  return stack;
}

NomSymbolic nom_kronecker(const Hypergraph& g, const OutputMatrix& c, int depth, const Caps& caps) {
  if (depth < 0) throw std::invalid_argument("derivative depth must be >= 0");
  KroneckerStackBuilder builder(g, c, caps);
  const std::size_t n = builder.n();
  std::map<int, std::vector<std::vector<Polynomial>>> jacobians;
  NomSymbolic nom{g.node_count(), {}};
  for (int level = 0; level <= depth; ++level) {
    for (int i = 0; i < c.output_count(); ++i) {
      std::vector<PolynomialBuilder> row(n);
      for (const auto& term : builder.level_terms(i, level)) {
        check_dim("state Kronecker power", saturating_power(n, term.degree), caps);
        auto it = jacobians.find(term.degree);
        if (it == jacobians.end()) it = jacobians.emplace(term.degree, kron_power_jacobian(g.node_count(), term.degree)).first;
        const auto& jac = it->second;
        for (const auto& [pos, coeff] : term.w) {
          for (std::size_t v = 0; v < n; ++v) row[v].add(jac[pos][v], coeff);
        }
      }
      std::vector<Polynomial> built;
      built.reserve(n);
      for (auto& b : row) built.push_back(std::move(b).build());
      nom.rows.push_back(std::move(built));
    }
  }
  return nom;
}

}  // namespace hyperobs
