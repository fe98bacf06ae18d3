#include "hyperobs/kernels.hpp"
#include "hyperobs/observability.hpp"

namespace hyperobs::kernels::serial {

std::vector<Polynomial> lie_step(const std::vector<Polynomial>& polys, const PolyVectorField& f) {
  std::vector<Polynomial> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(lie_derivative(p, f));
  return out;
}

FieldMatrix gradient_rows(const std::vector<Polynomial>& polys, int n, const PrimeField& field,
                          const FieldRow& point) {
  FieldMatrix rows(polys.size(), FieldRow(static_cast<std::size_t>(n), 0));
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (int j = 0; j < n; ++j) rows[i][static_cast<std::size_t>(j)] = evaluate_mod(polys[i].derivative(j), field, point);
  }
  return rows;
}

std::vector<FieldMatrix> evaluate_batch(const std::vector<std::vector<Polynomial>>& matrix,
                                        const PrimeField& field, const std::vector<FieldRow>& points) {
  std::vector<FieldMatrix> out;
  out.reserve(points.size());
  for (const auto& point : points) {
    FieldMatrix m;
    m.reserve(matrix.size());
    for (const auto& row : matrix) {
      FieldRow values;
      values.reserve(row.size());
      for (const auto& entry : row) values.push_back(evaluate_mod(entry, field, point));
      m.push_back(std::move(values));
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<std::size_t> rank_batch(const std::vector<FieldMatrix>& matrices, const PrimeField& field) {
  std::vector<std::size_t> out;
  out.reserve(matrices.size());
  for (const auto& m : matrices) out.push_back(rank(m, field));
  return out;
}

std::vector<std::size_t> candidate_ranks(const FieldMatrix& base, const std::vector<FieldMatrix>& blocks,
                                         const std::vector<int>& candidates, const PrimeField& field) {
  std::vector<std::size_t> out;
  out.reserve(candidates.size());
  for (int c : candidates) {
    FieldMatrix rows = base;
    const auto& block = blocks[static_cast<std::size_t>(c)];
    rows.insert(rows.end(), block.begin(), block.end());
    out.push_back(rank(std::move(rows), field));
  }
  return out;
}

std::size_t first_full_rank(const std::vector<FieldMatrix>& blocks,
                            const std::vector<std::vector<int>>& subsets, std::size_t target,
                            const PrimeField& field) {
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    FieldMatrix rows;
    for (int node : subsets[i]) {
      const auto& block = blocks[static_cast<std::size_t>(node)];
      rows.insert(rows.end(), block.begin(), block.end());
    }
    if (rank(std::move(rows), field) >= target) return i;
  }
  return npos;
}

}  // namespace hyperobs::kernels::serial
