#include "hyperobs/kernels.hpp"
#include "hyperobs/observability.hpp"

#include <omp.h>

#include <atomic>
#include <cstdint>

namespace hyperobs::kernels::parallel {

namespace {

std::int64_t ssize(std::size_t n) { return static_cast<std::int64_t>(n); }

}  // namespace

std::vector<Polynomial> lie_step(const std::vector<Polynomial>& polys, const PolyVectorField& f) {
  std::vector<Polynomial> out(polys.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < ssize(polys.size()); ++i) out[i] = lie_derivative(polys[i], f);
  return out;
}

FieldMatrix gradient_rows(const std::vector<Polynomial>& polys, int n, const PrimeField& field,
                          const FieldRow& point) {
  FieldMatrix rows(polys.size(), FieldRow(static_cast<std::size_t>(n), 0));
  const std::int64_t cells = ssize(polys.size()) * n;
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < cells; ++c) {
    const auto i = static_cast<std::size_t>(c / n);
    const int j = static_cast<int>(c % n);
    rows[i][static_cast<std::size_t>(j)] = evaluate_mod(polys[i].derivative(j), field, point);
  }
  return rows;
}

std::vector<FieldMatrix> evaluate_batch(const std::vector<std::vector<Polynomial>>& matrix,
                                        const PrimeField& field, const std::vector<FieldRow>& points) {
  std::vector<FieldMatrix> out(points.size());
  for (auto& m : out) {
    m.resize(matrix.size());
    for (std::size_t r = 0; r < matrix.size(); ++r) m[r].assign(matrix[r].size(), 0);
  }
  const std::int64_t rows = ssize(matrix.size());
  const std::int64_t work = ssize(points.size()) * rows;
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t w = 0; w < work; ++w) {
    const auto t = static_cast<std::size_t>(w / rows);
    const auto r = static_cast<std::size_t>(w % rows);
    for (std::size_t c = 0; c < matrix[r].size(); ++c) out[t][r][c] = evaluate_mod(matrix[r][c], field, points[t]);
  }
  return out;
}

std::vector<std::size_t> rank_batch(const std::vector<FieldMatrix>& matrices, const PrimeField& field) {
  std::vector<std::size_t> out(matrices.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < ssize(matrices.size()); ++i) out[i] = rank(matrices[i], field);
  return out;
}

std::vector<std::size_t> candidate_ranks(const FieldMatrix& base, const std::vector<FieldMatrix>& blocks,
                                         const std::vector<int>& candidates, const PrimeField& field) {
  std::vector<std::size_t> out(candidates.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < ssize(candidates.size()); ++i) {
    FieldMatrix rows = base;
    const auto& block = blocks[static_cast<std::size_t>(candidates[i])];
    rows.insert(rows.end(), block.begin(), block.end());
    out[i] = rank(std::move(rows), field);
  }
  return out;
}

std::size_t first_full_rank(const std::vector<FieldMatrix>& blocks,
                            const std::vector<std::vector<int>>& subsets, std::size_t target,
                            const PrimeField& field) {
  std::atomic<std::size_t> best{npos};
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < ssize(subsets.size()); ++i) {
    const auto idx = static_cast<std::size_t>(i);
    if (idx >= best.load(std::memory_order_relaxed)) continue;
    FieldMatrix rows;
    for (int node : subsets[idx]) {
      const auto& block = blocks[static_cast<std::size_t>(node)];
      rows.insert(rows.end(), block.begin(), block.end());
    }
    if (rank(std::move(rows), field) >= target) {
      std::size_t current = best.load();
      while (idx < current && !best.compare_exchange_weak(current, idx)) {
      }
    }
  }
  return best.load();
}

}  // namespace hyperobs::kernels::parallel
