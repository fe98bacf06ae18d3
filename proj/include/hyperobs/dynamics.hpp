#pragma once

#include "hyperobs/hypergraph.hpp"
#include "hyperobs/polynomial.hpp"
#include "hyperobs/rational.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperobs {

/// Polynomial vector field x' = f(x) on n states.
struct PolyVectorField {
  int n = 0;
  std::vector<Polynomial> components;

  static PolyVectorField zero(int n);
  PolyVectorField& operator+=(const PolyVectorField& other);
  bool operator==(const PolyVectorField& other) const = default;
};

/// f(x) = sum_k A_k x^{k-1} for every cardinality present in g.
PolyVectorField vector_field(const Hypergraph& g);
/// The single summand f_k = A_k x^{k-1}.
PolyVectorField vector_field_summand(const Hypergraph& g, int k);

/// Observed nodes, 1-based, ascending and unique.
struct SensorSet {
  std::vector<int> nodes;

  static SensorSet of(std::vector<int> nodes);
  std::size_t size() const { return nodes.size(); }
  bool operator==(const SensorSet&) const = default;
};

/// Linear output map y = C x, m x n with no zero rows.
class OutputMatrix {
 public:
  /// Throws std::invalid_argument for m = 0, ragged rows or an all-zero row.
  OutputMatrix(int n, std::vector<std::vector<Rational>> rows);

  int state_dim() const { return n_; }
  int output_count() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }
  /// Row i as the linear polynomial c_i . x.
  Polynomial output_polynomial(int i) const;

 private:
  int n_;
  std::vector<std::vector<Rational>> rows_;
};

/// One basis row per sensor, in ascending node order.
OutputMatrix sensor_matrix(const SensorSet& sensors, int n);

std::vector<Rational> evaluate(const PolyVectorField& f, std::span<const Rational> x);
std::vector<double> evaluate(const PolyVectorField& f, std::span<const double> x);

/// Raised when an RK4 stage produces a non-finite state.
class BlowUpError : public std::runtime_error {
 public:
  BlowUpError(int step, double t)
      : std::runtime_error("trajectory left the finite range at step " + std::to_string(step) +
                           " (t = " + std::to_string(t) + ")"),
        step_(step),
        time_(t) {}
  int step() const { return step_; }
  double time() const { return time_; }

 private:
  int step_;
  double time_;
};

struct Trajectory {
  double dt = 0.0;
  std::vector<std::vector<double>> states;  // steps + 1 rows, states[0] = x0
};

/// Fixed-step classical RK4.
Trajectory simulate(const PolyVectorField& f, std::span<const double> x0, double dt, int steps);

}  // namespace hyperobs
