#include "hyperobs/errors.hpp"
#include "hyperobs/kronecker.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace hyperobs;

namespace {

const Hypergraph kMixed = hypergraph_union(complete_hypergraph(3, 2), complete_hypergraph(3, 3));

OutputMatrix sensors(std::vector<int> nodes, int n) { return sensor_matrix(SensorSet::of(std::move(nodes)), n); }

// Every edge subset of complete(3,2) plus complete(3,3).
std::vector<Hypergraph> all_small_hypergraphs() {
  const std::vector<std::vector<int>> pool{{1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};
  std::vector<Hypergraph> out;
  for (unsigned mask = 0; mask < 16; ++mask) {
    std::vector<std::vector<int>> edges;
    for (unsigned b = 0; b < 4; ++b) {
      if (mask & (1u << b)) edges.push_back(pool[b]);
    }
    out.push_back(Hypergraph::create(3, edges));
  }
  return out;
}

// Row vector times x^[d], as a polynomial.
Polynomial apply_row(const std::map<std::size_t, Rational>& w, int n, int d) {
  auto power = kron_power_symbolic(n, d);
  Polynomial out;
  for (const auto& [pos, coeff] : w) out += power[pos] * coeff;
  return out;
}

}  // namespace

TEST_CASE("slot counts") {
  CHECK(b_matrix_slots(std::vector<int>{2, 2}) == 1);
  CHECK(b_matrix_slots(std::vector<int>{3, 2}) == 2);
  CHECK(b_matrix_slots(std::vector<int>{3, 3}) == 2);
  CHECK(b_matrix_slots(std::vector<int>{3, 3, 2}) == 3);
  CHECK(b_matrix_slots(std::vector<int>{2, 2, 2, 2}) == 1);
  CHECK(b_matrix_slots(std::vector<int>{4, 3, 2}) == 4);
}

TEST_CASE("B matrix examples") {
  auto a2 = unfold(adjacency_tensor(kMixed, 2), 1);
  auto b22 = b_matrix(kMixed, std::vector<int>{2, 2});
  CHECK(b22.matrix == a2);
  CHECK(b22.sequence == std::vector<int>{2, 2});

  auto b32 = b_matrix(kMixed, std::vector<int>{3, 2}).matrix;
  auto expected = kron(a2, SparseMatrix::identity(3));
  expected += kron(SparseMatrix::identity(3), a2);
  CHECK(b32 == expected);
  CHECK(b32.rows() == 9);
  CHECK(b32.cols() == 9);

  auto b23 = b_matrix(kMixed, std::vector<int>{2, 3}).matrix;
  CHECK(b23 == unfold(adjacency_tensor(kMixed, 3), 1));

  CHECK_THROWS_AS(b_matrix(kMixed, std::vector<int>{2}), std::invalid_argument);
  CHECK_THROWS_AS(b_matrix(kMixed, std::vector<int>{2, 1}), std::invalid_argument);
}

TEST_CASE("uniform B matrix equals the B matrix of the constant sequence") {
  auto g = complete_hypergraph(3, 3);
  for (int p = 2; p <= 4; ++p) {
    CAPTURE(p);
    CHECK(uniform_b_matrix(g, 3, p) == b_matrix(g, std::vector<int>(static_cast<std::size_t>(p), 3)).matrix);
  }
  auto chain = hyperchain(3, 2);
  for (int p = 2; p <= 5; ++p) CHECK(uniform_b_matrix(chain, 2, p) == unfold(adjacency_tensor(chain, 2), 1));
  CHECK_THROWS_AS(uniform_b_matrix(g, 3, 1), std::invalid_argument);
}

TEST_CASE("slot sum is the Lie derivative of a Kronecker power") {
  // L_{f_k} (w x^[d]) = w B x^[d+k-2] with B the d-slot sum of A_k.
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    auto g = oracle::random_hypergraph(rng, 3, 3, 0.5);
    for (int k = 2; k <= 3; ++k) {
      auto fk = vector_field_summand(g, k);
      auto a = unfold(adjacency_tensor(g, k), 1);
      for (int d = 1; d <= 3; ++d) {
        std::map<std::size_t, Rational> w;
        const auto len = saturating_power(3, d);
        for (std::size_t i = 0; i < len; ++i) {
          if (std::bernoulli_distribution(0.3)(rng)) w[i] = oracle::random_rational(rng);
        }
        auto lhs = lie_derivative(apply_row(w, 3, d), fk);
        auto rhs = apply_row(kronecker_slot_sum(a, 3, d).left_multiply(w), 3, d + k - 2);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("gradient of a Kronecker power") {
  for (int n = 1; n <= 3; ++n) {
    for (int m = 0; m <= 3; ++m) {
      auto power = kron_power_symbolic(n, m);
      auto jac = kron_power_jacobian(n, m);
      REQUIRE(jac.size() == power.size());
      for (std::size_t r = 0; r < power.size(); ++r) CHECK(jac[r] == power[r].gradient(n));
    }
  }
  auto p = kron_power_symbolic(2, 2);
  CHECK(p[1] == Polynomial::variable(0) * Polynomial::variable(1));
  CHECK(p[3] == Polynomial::variable(1) * Polynomial::variable(1));
}

TEST_CASE("Kronecker path matches the polynomial path on every small hypergraph") {
  std::size_t compared = 0;
  for (const auto& g : all_small_hypergraphs()) {
    for (const auto& s : std::vector<std::vector<int>>{{1}, {2}, {1, 3}}) {
      auto c = sensors(s, 3);
      for (int r = 0; r <= 3; ++r) {
        CHECK(stack_kronecker(g, c, r) == observation_stack(g, c, r));
        CHECK(nom_kronecker(g, c, r) == nom_symbolic(observation_stack(g, c, r)));
        ++compared;
      }
    }
  }
  CHECK(compared == 16 * 3 * 4);
}

TEST_CASE("Kronecker path matches on random n=4 hypergraphs") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 6; ++trial) {
    auto g = oracle::random_hypergraph(rng, 4, 3, 0.4);
    auto c = sensors(oracle::random_sensors(rng, 4), 4);
    CHECK(nom_kronecker(g, c, 3) == nom_symbolic(observation_stack(g, c, 3)));
  }
}

TEST_CASE("general output matrices") {
  OutputMatrix c(3, {{1, Rational(-2, 3), 0}, {0, 1, 1}});
  CHECK(nom_kronecker(kMixed, c, 2) == nom_symbolic(observation_stack(kMixed, c, 2)));
}

TEST_CASE("graph case reproduces C, CA, CA^2") {
  auto g = hyperchain(4, 2);
  auto nom = nom_kronecker(g, sensors({1}, 4), 3);
  auto a = oracle::adjacency_matrix(g);
  std::vector<Rational> row{1, 0, 0, 0};
  for (int level = 0; level <= 3; ++level) {
    for (int v = 0; v < 4; ++v) {
      CHECK(nom.rows[static_cast<std::size_t>(level)][static_cast<std::size_t>(v)] ==
            Polynomial(row[static_cast<std::size_t>(v)]));
    }
    std::vector<Rational> next(4, Rational(0));
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) next[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    row = next;
  }
}

TEST_CASE("level two of a mixed hypergraph has all four sequences") {
  auto c = sensors({1}, 3);
  std::map<std::size_t, Rational> base{{0, Rational(1)}};
  Polynomial sum;
  for (int k1 = 2; k1 <= 3; ++k1) {
    for (int k2 = 2; k2 <= 3; ++k2) {
      auto w = unfold(adjacency_tensor(kMixed, k1), 1).left_multiply(base);
      w = b_matrix(kMixed, std::vector<int>{k1, k2}).matrix.left_multiply(w);
      auto term = apply_row(w, 3, k1 + k2 - 3);
      CAPTURE(k1);
      CAPTURE(k2);
      CHECK_FALSE(term.is_zero());
      CHECK(term.is_homogeneous(k1 + k2 - 3));
      // The summand is exactly L_{f_k2} L_{f_k1} x1.
      CHECK(term == lie_derivative(lie_derivative(Polynomial::variable(0), vector_field_summand(kMixed, k1)),
                                   vector_field_summand(kMixed, k2)));
      sum += term;
    }
  }
  CHECK(sum == stack_kronecker(kMixed, c, 2).at(2, 0));
}

TEST_CASE("Kronecker cap refusal") {
  Caps caps;
  caps.kron = 20;
  CHECK_THROWS_AS(b_matrix(kMixed, std::vector<int>{3, 3}, caps), GuardError);
  CHECK_THROWS_AS(nom_kronecker(kMixed, sensors({1}, 3), 3, caps), GuardError);
  try {
    (void)b_matrix(kMixed, std::vector<int>{3, 3, 3}, caps);
    FAIL("expected a guard error");
  } catch (const GuardError& e) {
    CHECK(e.cap() == 20);
    CHECK(e.required() == 27);
  }
  CHECK_NOTHROW(nom_kronecker(hyperchain(3, 2), sensors({1}, 3), 3, caps));
}
