#include "biextra/gf.hpp"

namespace biextra {

int gf2_rank(std::vector<GF2Vector> rows) {
  int rank = 0;
  for (int col = 0; col < 64 && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r].bit(col)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r != rank && rows[r].bit(col)) rows[r] = rows[r] + rows[rank];
    }
    ++rank;
  }
  return rank;
}

GF2Solver::GF2Solver(std::vector<GF2Vector> basis) : basis_(std::move(basis)) {
  const int n = static_cast<int>(basis_.size());
  reduced_ = basis_;
  combination_.reserve(n);
  for (int i = 0; i < n; ++i) combination_.push_back(GF2Vector::unit(i, n));
  int rank = 0;
  const int dim = basis_.empty() ? 0 : basis_[0].dim();
  for (int col = 0; col < dim && rank < n; ++col) {
    int pivot = -1;
    for (int r = rank; r < n; ++r) {
      if (reduced_[r].bit(col)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(reduced_[rank], reduced_[pivot]);
    std::swap(combination_[rank], combination_[pivot]);
    for (int r = 0; r < n; ++r) {
      if (r != rank && reduced_[r].bit(col)) {
        reduced_[r] = reduced_[r] + reduced_[rank];
        combination_[r] = combination_[r] + combination_[rank];
      }
    }
    pivot_.push_back(col);
    ++rank;
  }
  if (rank != n) throw std::invalid_argument("GF2Solver: basis vectors are dependent");
}

std::optional<GF2Vector> GF2Solver::coordinates(GF2Vector v) const {
  const int n = basis_size();
  GF2Vector coords = GF2Vector::zero(n);
  for (int r = 0; r < n; ++r) {
    if (v.bit(pivot_[r])) {
      v = v + reduced_[r];
      coords = coords + combination_[r];
    }
  }
  if (!v.is_zero()) return std::nullopt;
  return coords;
}

std::optional<GF2Vector> gf2_coordinates(const std::vector<GF2Vector>& basis, GF2Vector v) {
  return GF2Solver(basis).coordinates(v);
}

}  // namespace biextra
