#include "hyperobs/dynamics.hpp"

#include "hyperobs/tensor.hpp"

#include <algorithm>
#include <cmath>

namespace hyperobs {

PolyVectorField PolyVectorField::zero(int n) {
  return PolyVectorField{n, std::vector<Polynomial>(static_cast<std::size_t>(n))};
}

PolyVectorField& PolyVectorField::operator+=(const PolyVectorField& other) {
  if (n != other.n) throw std::invalid_argument("vector field sum with mismatched dimensions");
  for (std::size_t i = 0; i < components.size(); ++i) components[i] += other.components[i];
  return *this;
}

PolyVectorField vector_field_summand(const Hypergraph& g, int k) {
  const int n = g.node_count();
  std::vector<Polynomial> vars;
  vars.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) vars.push_back(Polynomial::variable(i));
  auto tensor = adjacency_tensor(g, k);
  return PolyVectorField{n, tensor_apply<Polynomial>(tensor, vars)};
}

PolyVectorField vector_field(const Hypergraph& g) {
  auto f = PolyVectorField::zero(g.node_count());
  for (int k = 2; k <= g.max_cardinality(); ++k) f += vector_field_summand(g, k);
  return f;
}

SensorSet SensorSet::of(std::vector<int> nodes) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return SensorSet{std::move(nodes)};
}

OutputMatrix::OutputMatrix(int n, std::vector<std::vector<Rational>> rows) : n_(n), rows_(std::move(rows)) {
  if (rows_.empty()) throw std::invalid_argument("output matrix needs at least one row");
  for (const auto& row : rows_) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("output row has wrong length");
    if (std::all_of(row.begin(), row.end(), [](const Rational& c) { return c == 0; })) {
      throw std::invalid_argument("output matrix has an all-zero row");
    }
  }
}

Polynomial OutputMatrix::output_polynomial(int i) const {
  std::vector<Term> terms;
  const auto& row = rows_.at(static_cast<std::size_t>(i));
  for (int j = 0; j < n_; ++j) {
    if (row[static_cast<std::size_t>(j)] != 0) terms.push_back({Monomial::variable(j), row[static_cast<std::size_t>(j)]});
  }
  return Polynomial::from_terms(std::move(terms));
}

OutputMatrix sensor_matrix(const SensorSet& sensors, int n) {
  if (sensors.nodes.empty()) throw std::invalid_argument("sensor set is empty");
  std::vector<std::vector<Rational>> rows;
  int previous = 0;
  for (int id : sensors.nodes) {
    if (id < 1 || id > n) {
      throw std::invalid_argument("sensor " + std::to_string(id) + " outside [1, " + std::to_string(n) + "]");
    }
    if (id <= previous) throw std::invalid_argument("sensor set must be ascending and unique");
    previous = id;
    std::vector<Rational> row(static_cast<std::size_t>(n), Rational(0));
    row[static_cast<std::size_t>(id - 1)] = 1;
    rows.push_back(std::move(row));
  }
  return OutputMatrix(n, std::move(rows));
}

std::vector<Rational> evaluate(const PolyVectorField& f, std::span<const Rational> x) {
  if (static_cast<int>(x.size()) != f.n) throw std::invalid_argument("state dimension mismatch");
  std::vector<Rational> out;
  out.reserve(f.components.size());
  for (const auto& c : f.components) out.push_back(c.evaluate(x));
  return out;
}

std::vector<double> evaluate(const PolyVectorField& f, std::span<const double> x) {
  if (static_cast<int>(x.size()) != f.n) throw std::invalid_argument("state dimension mismatch");
  std::vector<double> out;
  out.reserve(f.components.size());
  for (const auto& c : f.components) out.push_back(c.evaluate(x));
  return out;
}

Trajectory simulate(const PolyVectorField& f, std::span<const double> x0, double dt, int steps) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("simulate: dt must be positive and finite");
  if (steps < 0) throw std::invalid_argument("simulate: steps must be >= 0");
  if (static_cast<int>(x0.size()) != f.n) throw std::invalid_argument("state dimension mismatch");

  const auto n = x0.size();
  auto finite = [](const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double d) { return std::isfinite(d); });
  };
  auto axpy = [n](const std::vector<double>& x, double h, const std::vector<double>& k) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = x[i] + h * k[i];
    return out;
  };

  Trajectory traj;
  traj.dt = dt;
  traj.states.reserve(static_cast<std::size_t>(steps) + 1);
  traj.states.emplace_back(x0.begin(), x0.end());
  if (!finite(traj.states.back())) throw BlowUpError(0, 0.0);

  for (int s = 1; s <= steps; ++s) {
    const auto& x = traj.states.back();
    auto k1 = evaluate(f, std::span<const double>(x));
    auto k2 = evaluate(f, std::span<const double>(axpy(x, dt / 2, k1)));
    auto k3 = evaluate(f, std::span<const double>(axpy(x, dt / 2, k2)));
    auto k4 = evaluate(f, std::span<const double>(axpy(x, dt, k3)));
    std::vector<double> next(n);
    for (std::size_t i = 0; i < n; ++i) next[i] = x[i] + dt / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    if (!finite(k1) || !finite(k2) || !finite(k3) || !finite(k4) || !finite(next)) {
      throw BlowUpError(s, s * dt);
    }
    traj.states.push_back(std::move(next));
  }
  return traj;
}

}  // namespace hyperobs
