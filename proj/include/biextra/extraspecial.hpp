#pragma once

#include <map>
#include <utility>
#include <vector>

#include "biextra/dent_space.hpp"
#include "biextra/group.hpp"
#include "biextra/quadratic_space.hpp"

namespace biextra {

// R_t = C_Q(t): the elements of Q fixed by the canonical involution. For a
// group of rank m this is an extraspecial 2-group of order 2^(m+1) with
// center <a>; its central quotient carries a quadratic form (squares) and
// bilinear form (commutators) in the shared t-fixed coset coordinates.
class ExtraspecialSubgroup {
public:
  static ExtraspecialSubgroup centralizer(const Group& g);

  const Group& group() const { return group_; }
  int rank() const { return group_.rank(); }

  // Sorted by raw bits; size 2^(m+1).
  const std::vector<QElement>& elements() const { return elements_; }
  std::uint64_t order() const { return elements_.size(); }
  bool contains(QElement x) const;

  // Brute-forced center; always {identity, a}.
  const std::vector<QElement>& center() const { return center_; }
  QElement center_generator() const { return group_.central(z_a); }

  // {element order -> count}; separates the dihedral and quaternion cases
  // at rank 2.
  std::map<int, int> order_histogram() const;

  // R_t / <a> with q(rbar) = 0 iff r^2 = 1 and beta from commutators, both
  // expressed in the coset coordinates.
  const QuadraticSpace& quotient_space() const { return space_; }
  GF2Vector coords(QElement x) const;
  QElement lift(GF2Vector coords) const;

  // The unique factorization q = r1 * r2^s over R_t x R_t; its existence and
  // uniqueness for every q is verified when the subgroup is built.
  std::pair<QElement, QElement> direct_factorization(QElement q) const;

  // D meets R_t in {1, a, x, ax}: a Klein four-group when D is singular and
  // a cyclic four-group (generated by x) otherwise.
  std::vector<QElement> dent_intersection(const Dent& d) const;

private:
  ExtraspecialSubgroup(Group g, std::vector<QElement> elements, std::vector<QElement> center,
                       QuadraticSpace space);
  void build_factor_table();

  Group group_;
  std::vector<QElement> elements_;
  std::vector<QElement> center_;
  QuadraticSpace space_;
  // raw bits of q -> (index of r1, index of r2) in elements_.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> factor_table_;
};

// Whether Q = R_t x R_t^s holds: trivial intersection, full order, and a
// unique factorization of every element.
bool direct_factorization_check(const Group& g);

// The dent-index -> coset-coordinate map is an isometry onto the quotient of
// R_t, checked exhaustively on all dent pairs (and that every dent
// representative lands in R_t with the matching coordinates).
bool verify_psi(const DentSpace& ds, const ExtraspecialSubgroup& rt);

}  // namespace biextra
