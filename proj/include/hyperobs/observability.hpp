#pragma once

#include "hyperobs/config.hpp"
#include "hyperobs/dynamics.hpp"
#include "hyperobs/hypergraph.hpp"
#include "hyperobs/polynomial.hpp"
#include "hyperobs/prime_field.hpp"
#include "hyperobs/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace hyperobs {

/// L_f phi = sum_i (d phi / d x_i) f_i.
Polynomial lie_derivative(const Polynomial& phi, const PolyVectorField& f);

/// Iterated Lie derivatives L^0 .. L^depth of each output, level-major:
/// entry (level, i) sits at level * outputs + i.
struct ObservationStack {
  int n = 0;
  int outputs = 0;
  int depth = 0;
  std::vector<Polynomial> entries;

  const Polynomial& at(int level, int output) const {
    return entries[static_cast<std::size_t>(level * outputs + output)];
  }
  std::size_t total_terms() const;
  /// The first `depth + 1` levels.
  ObservationStack truncated(int depth) const;
  bool operator==(const ObservationStack&) const = default;
};

/// Gradient rows of an observation stack (the nonlinear observability matrix).
struct NomSymbolic {
  int n = 0;
  std::vector<std::vector<Polynomial>> rows;

  int max_total_degree() const;
  bool operator==(const NomSymbolic&) const = default;
};

struct RankTrial {
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  std::size_t rank = 0;
};

/// Outcome of the randomized generic-rank test.
///
/// `rank` is the maximum rank seen over all trial points. `failure_bound`
/// is the Schwartz-Zippel union bound sum_t D / p_t with
/// D = n * max_total_degree; it bounds the chance that any single trial
/// (and hence the maximum) under-reports the generic rank.
struct RankCertificate {
  std::size_t rank = 0;
  int n = 0;
  std::vector<RankTrial> trials;
  int max_total_degree = 0;
  Rational failure_bound = 0;
  bool low_confidence = false;
};

struct RankOptions {
  std::vector<std::uint64_t> primes = default_primes();
  int points_per_prime = 2;
  std::uint64_t seed = 0;
  Rational confidence_threshold = Rational(1, mpz_class(1) << 40);
};

/// Seed of trial `point` under prime number `prime_index`.
std::uint64_t trial_seed(std::uint64_t root, std::size_t prime_index, int point);
/// Uniform field point for a trial seed.
FieldRow random_point(std::uint64_t seed, int n, const PrimeField& field);

struct ObservabilityOptions {
  std::optional<int> depth;  // defaults to n
  RankOptions rank;
  Caps caps;
  bool early_exit = true;
  bool exact = false;  // additionally compute the exact rank by minors (n <= 3)
};

struct ObservabilityVerdict {
  bool observable = false;
  RankCertificate certificate;
  int r_used = 0;
  std::optional<std::size_t> exact_rank;
};

ObservationStack observation_stack(const PolyVectorField& f, const OutputMatrix& c, int depth,
                                   const Caps& caps = {});
/// Depth defaults to n.
ObservationStack observation_stack(const Hypergraph& g, const OutputMatrix& c,
                                   std::optional<int> depth = {}, const Caps& caps = {});

NomSymbolic nom_symbolic(const ObservationStack& stack);

/// Evaluates the matrix at `points_per_prime` random points per prime and
/// eliminates over each field. Every prime must exceed both the maximal
/// entry degree and `prime_floor`; otherwise std::invalid_argument.
RankCertificate generic_rank(const NomSymbolic& nom, const RankOptions& options,
                             std::uint64_t prime_floor = 0);

/// Exact rank over the rational function field by polynomial minors.
/// Limited to n <= 3.
std::size_t exact_rank(const NomSymbolic& nom);

ObservabilityVerdict is_locally_weakly_observable(const Hypergraph& g, const OutputMatrix& c,
                                                  const ObservabilityOptions& options = {});

struct Prop15Report {
  int max_cardinality = 0;
  ObservabilityVerdict restricted;
  ObservabilityVerdict full;
  bool implication_holds = true;
};

/// Compares the verdict on the max-cardinality part of g with the verdict on g.
Prop15Report check_proposition15(const Hypergraph& g, const OutputMatrix& c,
                                 const ObservabilityOptions& options = {});

}  // namespace hyperobs
