#pragma once

#include <vector>

#include "biextra/gf.hpp"

namespace biextra {

enum class FormType { plus, minus };

inline char form_type_char(FormType t) { return t == FormType::plus ? '+' : '-'; }

// A two-dimensional subspace of an ambient GF(2) space, given by a basis pair
// in ambient coordinates.
struct Plane {
  GF2Vector u, v;
};

// Quadratic space over GF(2): a symmetric bilinear form with zero diagonal
// (the polarization of q) given by its Gram matrix on a fixed basis, plus the
// values of q on the basis vectors. q extends to the whole space by
//   q(sum_i v_i e_i) = sum_i v_i q(e_i) + sum_{i<j} v_i v_j beta(e_i, e_j).
class QuadraticSpace {
public:
  QuadraticSpace(std::vector<GF2Vector> gram_rows, GF2Vector basis_q_values);

  int dim() const { return dim_; }
  const std::vector<GF2Vector>& gram() const { return gram_; }
  GF2Vector basis_q_values() const { return qvals_; }

  int beta(GF2Vector u, GF2Vector v) const;
  int eval_q(GF2Vector v) const;

  bool nondegenerate() const;

  // Number of nonzero singular vectors (q = 0).
  int singular_count() const;

  // Exhaustive singular-vector count decides the type; throws on degenerate
  // forms or counts matching neither orthogonal-space formula.
  FormType type() const;

  // Greedy split into pairwise orthogonal 2-dimensional nondegenerate
  // subspaces: hyperbolic planes while singular vectors remain, then at most
  // one anisotropic plane. Requires a nondegenerate form of even dimension.
  std::vector<Plane> orthogonal_decompose() const;

  // The form restricted to the span of the given independent vectors,
  // expressed in that basis. Also serves as change of basis.
  QuadraticSpace restricted(const std::vector<GF2Vector>& basis) const;

private:
  int dim_;
  std::vector<GF2Vector> gram_;
  GF2Vector qvals_;
};

// |GO^eps_m(2)| for even m >= 2.
std::uint64_t orthogonal_group_order(int m, FormType eps);

}  // namespace biextra
