#pragma once

// Closed-form Kronecker construction of the observability matrix. Dense
// dimensions grow like n^(sum of cardinalities), so this path is a bounded
// cross-check for the polynomial path in observability.hpp.

#include "hyperobs/config.hpp"
#include "hyperobs/dynamics.hpp"
#include "hyperobs/hypergraph.hpp"
#include "hyperobs/observability.hpp"
#include "hyperobs/tensor.hpp"

#include <span>
#include <vector>

namespace hyperobs {

struct BMatrix {
  std::vector<int> sequence;  // (k1, ..., kp)
  SparseMatrix matrix;
};

/// sum over slot positions of I (x) ... (x) a (x) ... (x) I, where `a` has n
/// rows and every identity is n x n.
SparseMatrix kronecker_slot_sum(const SparseMatrix& a, std::size_t n, int slots, const Caps& caps = {});

/// Number of Kronecker slots of B for the sequence (k1..kp):
/// sum_{i<p} k_i - (2p - 3).
int b_matrix_slots(std::span<const int> sequence);

/// B_{kp..k1}: the unfolded A_{kp} summed over every slot. Needs p >= 2.
/// Throws GuardError when a dimension exceeds caps.kron.
BMatrix b_matrix(const Hypergraph& g, std::span<const int> sequence, const Caps& caps = {});

/// The uniform-case matrix for cardinality k at level p >= 2, with
/// (p-1)k - (2p-3) slots.
SparseMatrix uniform_b_matrix(const Hypergraph& g, int k, int p, const Caps& caps = {});

/// Symbolic x^[m] as a length n^m column, first factor slowest.
std::vector<Polynomial> kron_power_symbolic(int n, int m);
/// d x^[m] / dx (n^m x n) assembled as sum_s x^[s-1] (x) I (x) x^[m-s].
std::vector<std::vector<Polynomial>> kron_power_jacobian(int n, int m);

/// Observation stack from C A_{k1} B_{k2k1} ... x^[..] summed over every
/// cardinality sequence in [2, K]^j at each level j <= depth.
ObservationStack stack_kronecker(const Hypergraph& g, const OutputMatrix& c, int depth, const Caps& caps = {});

/// Gradient rows of the Kronecker stack, taken term by term through
/// kron_power_jacobian. Row order matches nom_symbolic.
NomSymbolic nom_kronecker(const Hypergraph& g, const OutputMatrix& c, int depth, const Caps& caps = {});

}  // namespace hyperobs
