#include "hyperobs/observability.hpp"

#include "hyperobs/errors.hpp"
#include "hyperobs/kernels.hpp"
#include "hyperobs/rng.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperobs {

namespace {

std::uint64_t factorial_floor(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::size_t count_terms(const std::vector<Polynomial>& polys) {
  std::size_t total = 0;
  for (const auto& p : polys) total += p.term_count();
  return total;
}

// Determinant by cofactor expansion along the first row.
Polynomial determinant(const std::vector<std::vector<const Polynomial*>>& m) {
  const std::size_t k = m.size();
  if (k == 1) return *m[0][0];
  Polynomial det;
  for (std::size_t col = 0; col < k; ++col) {
    if (m[0][col]->is_zero()) continue;
    std::vector<std::vector<const Polynomial*>> minor;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<const Polynomial*> row;
      for (std::size_t c = 0; c < k; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    Polynomial term = *m[0][col] * determinant(minor);
    if (col % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

// Calls visit(subset) for every k-subset of [0, n) in lexicographic order
// until visit returns true.
template <class Visit>
bool for_each_subset(int n, int k, Visit&& visit) {
  if (k > n) return false;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (visit(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

Polynomial lie_derivative(const Polynomial& phi, const PolyVectorField& f) {
  PolynomialBuilder builder;
  for (const auto& term : phi.terms()) {
    for (const auto& [var, power] : term.monomial.factors()) {
      if (var >= f.n) throw std::invalid_argument("polynomial uses a variable outside the vector field");
      const auto& component = f.components[static_cast<std::size_t>(var)];
      if (component.is_zero()) continue;
      const Monomial lowered = term.monomial.lowered(var);
      const Rational scale = term.coeff * power;
      for (const auto& ft : component.terms()) builder.add(lowered * ft.monomial, scale * ft.coeff);
    }
  }
  return std::move(builder).build();
}

std::size_t ObservationStack::total_terms() const { return count_terms(entries); }

ObservationStack ObservationStack::truncated(int d) const {
  if (d < 0 || d > depth) throw std::out_of_range("truncation depth outside the stack");
  ObservationStack out{n, outputs, d, {}};
  out.entries.assign(entries.begin(), entries.begin() + static_cast<std::ptrdiff_t>((d + 1) * outputs));
  return out;
}

int NomSymbolic::max_total_degree() const {
  int degree = 0;
  for (const auto& row : rows) {
    for (const auto& p : row) degree = std::max(degree, p.total_degree());
  }
  return degree;
}

ObservationStack observation_stack(const PolyVectorField& f, const OutputMatrix& c, int depth, const Caps& caps) {
  if (depth < 0) throw std::invalid_argument("derivative depth must be >= 0");
  if (c.state_dim() != f.n) throw std::invalid_argument("output matrix and vector field differ in dimension");
  ObservationStack stack{f.n, c.output_count(), depth, {}};
  std::vector<Polynomial> level;
  for (int i = 0; i < c.output_count(); ++i) level.push_back(c.output_polynomial(i));
  std::size_t total = 0;
  for (int j = 0;; ++j) {
    total += count_terms(level);
    if (total > caps.terms) {
      throw GuardError("observation stack exceeded the term cap at depth " + std::to_string(j), total, caps.terms);
    }
    stack.entries.insert(stack.entries.end(), level.begin(), level.end());
    if (j == depth) break;
    level = kernels::parallel::lie_step(level, f);
  }
  return stack;
}

ObservationStack observation_stack(const Hypergraph& g, const OutputMatrix& c, std::optional<int> depth,
                                   const Caps& caps) {
  return observation_stack(vector_field(g), c, depth.value_or(g.node_count()), caps);
}

NomSymbolic nom_symbolic(const ObservationStack& stack) {
  NomSymbolic nom{stack.n, {}};
  nom.rows.reserve(stack.entries.size());
  for (const auto& entry : stack.entries) nom.rows.push_back(entry.gradient(stack.n));
  return nom;
}

std::uint64_t trial_seed(std::uint64_t root, std::size_t prime_index, int point) {
  return SplitMix64::derive(SplitMix64::derive(root, prime_index), static_cast<std::uint64_t>(point));
}

FieldRow random_point(std::uint64_t seed, int n, const PrimeField& field) {
  SplitMix64 gen(seed);
  FieldRow point(static_cast<std::size_t>(n));
  for (auto& v : point) v = gen.below(field.modulus());
  return point;
}

RankCertificate generic_rank(const NomSymbolic& nom, const RankOptions& options, std::uint64_t prime_floor) {
  if (options.points_per_prime < 1) throw std::invalid_argument("need at least one trial point per prime");
  if (options.primes.empty()) throw std::invalid_argument("need at least one prime");
  RankCertificate cert;
  cert.n = nom.n;
  cert.max_total_degree = nom.max_total_degree();
  const auto degree_floor = static_cast<std::uint64_t>(cert.max_total_degree);
  for (std::uint64_t p : options.primes) {
    if (p <= degree_floor || p <= prime_floor) {
      throw std::invalid_argument("prime " + std::to_string(p) + " does not exceed the required bound " +
                                  std::to_string(std::max(degree_floor, prime_floor)));
    }
  }

  const Rational decisive_degree = Rational(nom.n) * cert.max_total_degree;
  for (std::size_t pi = 0; pi < options.primes.size(); ++pi) {
    const PrimeField field(options.primes[pi]);
    std::vector<FieldRow> points;
    std::vector<std::uint64_t> seeds;
    for (int t = 0; t < options.points_per_prime; ++t) {
      seeds.push_back(trial_seed(options.seed, pi, t));
      points.push_back(random_point(seeds.back(), nom.n, field));
    }
    const auto ranks = kernels::parallel::rank_batch(kernels::parallel::evaluate_batch(nom.rows, field, points), field);
    for (int t = 0; t < options.points_per_prime; ++t) {
      cert.trials.push_back({field.modulus(), seeds[static_cast<std::size_t>(t)], ranks[static_cast<std::size_t>(t)]});
      cert.rank = std::max(cert.rank, ranks[static_cast<std::size_t>(t)]);
    }
    cert.failure_bound += decisive_degree * options.points_per_prime / Rational(mpz_class(std::to_string(field.modulus())));
  }
  cert.failure_bound.canonicalize();
  cert.low_confidence = cert.failure_bound >= options.confidence_threshold;
  return cert;
}

std::size_t exact_rank(const NomSymbolic& nom) {
  if (nom.n > 3) throw std::invalid_argument("exact rank by minors is limited to n <= 3");
  std::vector<const std::vector<Polynomial>*> rows;
  for (const auto& row : nom.rows) {
    if (std::any_of(row.begin(), row.end(), [](const Polynomial& p) { return !p.is_zero(); })) rows.push_back(&row);
  }
  const int m = static_cast<int>(rows.size());
  for (int k = std::min(nom.n, m); k >= 1; --k) {
    bool found = for_each_subset(m, k, [&](const std::vector<int>& row_idx) {
      return for_each_subset(nom.n, k, [&](const std::vector<int>& col_idx) {
        std::vector<std::vector<const Polynomial*>> minor;
        for (int r : row_idx) {
          std::vector<const Polynomial*> entries;
          for (int c : col_idx) entries.push_back(&(*rows[static_cast<std::size_t>(r)])[static_cast<std::size_t>(c)]);
          minor.push_back(std::move(entries));
        }
        return !determinant(minor).is_zero();
      });
    });
    if (found) return static_cast<std::size_t>(k);
  }
  return 0;
}

ObservabilityVerdict is_locally_weakly_observable(const Hypergraph& g, const OutputMatrix& c,
                                                  const ObservabilityOptions& options) {
  const int n = g.node_count();
  if (c.state_dim() != n) throw std::invalid_argument("output matrix and hypergraph differ in dimension");
  const int depth = options.depth.value_or(n);
  if (depth < 0) throw std::invalid_argument("derivative depth must be >= 0");
  if (options.rank.primes.empty()) throw std::invalid_argument("need at least one prime");

  const auto f = vector_field(g);
  const PrimeField field(options.rank.primes.front());
  const FieldRow point = random_point(trial_seed(options.rank.seed, 0, 0), n, field);
  EchelonBasis basis(field, n);

  ObservationStack stack{n, c.output_count(), 0, {}};
  std::vector<Polynomial> level;
  for (int i = 0; i < c.output_count(); ++i) level.push_back(c.output_polynomial(i));
  std::size_t total = 0;
  for (int j = 0;; ++j) {
    total += count_terms(level);
    if (total > options.caps.terms) {
      throw GuardError("observation stack exceeded the term cap at depth " + std::to_string(j), total,
                       options.caps.terms);
    }
    stack.entries.insert(stack.entries.end(), level.begin(), level.end());
    stack.depth = j;
    for (auto& row : kernels::parallel::gradient_rows(level, n, field, point)) basis.insert(std::move(row));
    if (options.early_exit && static_cast<int>(basis.rank()) == n) break;
    if (j == depth) break;
    level = kernels::parallel::lie_step(level, f);
  }

  ObservabilityVerdict verdict;
  verdict.r_used = stack.depth;
  const auto nom = nom_symbolic(stack);
  verdict.certificate = generic_rank(nom, options.rank, factorial_floor(std::max(g.max_cardinality() - 1, 1)));
  verdict.observable = static_cast<int>(verdict.certificate.rank) == n;
  if (options.exact) verdict.exact_rank = exact_rank(nom);
  return verdict;
}

Prop15Report check_proposition15(const Hypergraph& g, const OutputMatrix& c, const ObservabilityOptions& options) {
  Prop15Report report;
  report.max_cardinality = g.max_cardinality();
  if (report.max_cardinality < 2) throw std::invalid_argument("proposition check needs at least one hyperedge");
  report.restricted = is_locally_weakly_observable(restrict_to_cardinality(g, report.max_cardinality), c, options);
  report.full = is_locally_weakly_observable(g, c, options);
  report.implication_holds = !report.restricted.observable || report.full.observable;
  return report;
}

}  // namespace hyperobs
