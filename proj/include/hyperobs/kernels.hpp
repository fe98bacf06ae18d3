#pragma once

// Data-parallel kernels. Each has a plain serial version and an OpenMP
// version that returns identical results; the library calls the parallel
// ones, tests compare the two and bench/ times both.

#include "hyperobs/dynamics.hpp"
#include "hyperobs/polynomial.hpp"
#include "hyperobs/prime_field.hpp"

#include <cstddef>
#include <limits>
#include <vector>

namespace hyperobs::kernels {

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

namespace serial {

/// One Lie-derivative step applied to every polynomial.
std::vector<Polynomial> lie_step(const std::vector<Polynomial>& polys, const PolyVectorField& f);
/// Gradient of each polynomial evaluated at one field point, one row each.
FieldMatrix gradient_rows(const std::vector<Polynomial>& polys, int n, const PrimeField& field,
                          const FieldRow& point);
/// A polynomial matrix evaluated at each point.
std::vector<FieldMatrix> evaluate_batch(const std::vector<std::vector<Polynomial>>& matrix,
                                        const PrimeField& field, const std::vector<FieldRow>& points);
std::vector<std::size_t> rank_batch(const std::vector<FieldMatrix>& matrices, const PrimeField& field);
/// rank(base + blocks[c]) for each candidate node c.
std::vector<std::size_t> candidate_ranks(const FieldMatrix& base, const std::vector<FieldMatrix>& blocks,
                                         const std::vector<int>& candidates, const PrimeField& field);
/// Index of the first subset whose stacked blocks reach rank `target`, or npos.
std::size_t first_full_rank(const std::vector<FieldMatrix>& blocks,
                            const std::vector<std::vector<int>>& subsets, std::size_t target,
                            const PrimeField& field);

}  // namespace serial

namespace parallel {

/// One Lie-derivative step applied to every polynomial.
std::vector<Polynomial> lie_step(const std::vector<Polynomial>& polys, const PolyVectorField& f);
/// Gradient of each polynomial evaluated at one field point, one row each.
FieldMatrix gradient_rows(const std::vector<Polynomial>& polys, int n, const PrimeField& field,
                          const FieldRow& point);
/// A polynomial matrix evaluated at each point.
std::vector<FieldMatrix> evaluate_batch(const std::vector<std::vector<Polynomial>>& matrix,
                                        const PrimeField& field, const std::vector<FieldRow>& points);
std::vector<std::size_t> rank_batch(const std::vector<FieldMatrix>& matrices, const PrimeField& field);
/// rank(base + blocks[c]) for each candidate node c.
std::vector<std::size_t> candidate_ranks(const FieldMatrix& base, const std::vector<FieldMatrix>& blocks,
                                         const std::vector<int>& candidates, const PrimeField& field);
/// Index of the first subset whose stacked blocks reach rank `target`, or npos.
std::size_t first_full_rank(const std::vector<FieldMatrix>& blocks,
                            const std::vector<std::vector<int>>& subsets, std::size_t target,
                            const PrimeField& field);

}  // namespace parallel

}  // namespace hyperobs::kernels
