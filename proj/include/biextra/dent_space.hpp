#pragma once

#include <array>
#include <vector>

#include "biextra/group.hpp"
#include "biextra/quadratic_space.hpp"

namespace biextra {

// A dent D = <x, x^s, Z>: the preimage in Q of an irreducible L-submodule of
// Q/Z. Exactly one nonzero coset of C_{Q/Z}(t) meets each dent, so dents are
// indexed by the nonzero vectors of an m-dimensional GF(2) space.
struct Dent {
  int index = 0;        // coordinate bits as an integer, 1 .. 2^m - 1
  GF2Vector coords;     // m bits over the basis dents
  QElement x;           // canonical representative: t-fixed, lexicographically least
  QElement y;           // x^s
  bool singular = true; // true iff x^2 = id (all of D \ Z has order 2)
};

class DentSpace {
public:
  static DentSpace enumerate(const Group& g);

  const Group& group() const { return group_; }
  int rank() const { return group_.rank(); }
  int count() const { return static_cast<int>(dents_.size()); }

  const Dent& dent(int index) const;
  const std::vector<Dent>& dents() const { return dents_; }
  // Indices of the m basis dents (the coordinate unit vectors).
  std::vector<int> basis_indices() const;

  const QuadraticSpace& space() const { return space_; }
  FormType type() const { return type_; }
  int singular_count() const;

  // Dent addition: D + E is the dent through x_D * x_E; index 0 stands for
  // the formal zero. Coordinates simply XOR.
  int add(int d1, int d2) const;
  int beta(int d1, int d2) const;
  int qform(int d) const;

  // ([x1,x2], [x1,y2], [y1,x2], [y1,y2]) for a non-commuting pair; throws if
  // the pair commutes or any entry deviates from (a, c, c, b).
  std::array<GF4, 4> commutator_table(int d1, int d2) const;

  // The unique nontrivial automorphism of D commuting with the L-action and
  // fixing Z pointwise: u = x^i y^j z maps to a^i b^j u.
  QElement unique_auto_image(const Dent& d, QElement u) const;

  // All 16 elements of the dent subgroup.
  std::vector<QElement> elements(const Dent& d) const;

  // The t-fixed coset coordinates of an element of Q whose image lies in
  // C_{Q/Z}(t), if it does.
  std::optional<GF2Vector> coset_coords(QElement x) const;

private:
  DentSpace(Group g, std::vector<Dent> dents, QuadraticSpace space);

  Group group_;
  std::vector<Dent> dents_;
  QuadraticSpace space_;
  FormType type_;
};

// (rank, type) computed from the dent space.
std::pair<int, FormType> group_type(const Group& g);

// Shared coordinate chart for the t-fixed cosets of Q/Z: factor i occupies
// bits (2i, 2i+1). A plus factor stores (a, b) with a, b in GF(2); a minus
// factor stores the two bits of b (basis {1, w}) and carries a = b^2.
std::optional<GF2Vector> coset_coords(const Group& g, QElement x);

// Lexicographically least t-fixed element of the coset with the given
// coordinates; throws unless the coset has exactly two fixed translates.
QElement coset_representative(const Group& g, GF2Vector coords);

}  // namespace biextra
