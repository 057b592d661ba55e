#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "biextra/dent_space.hpp"
#include "biextra/extraspecial.hpp"
#include "biextra/gf.hpp"
#include "biextra/group.hpp"
#include "biextra/quadratic_space.hpp"

namespace biextra {

// Automorphism of R = C_Q(t), stored as the image table over rt.elements().
// Keeps a pointer to the subgroup object, which must outlive it.
class RtAutomorphism {
public:
  RtAutomorphism(const ExtraspecialSubgroup& rt, std::vector<std::uint32_t> image);

  static RtAutomorphism identity(const ExtraspecialSubgroup& rt);
  // The automorphism sending the coordinate-basis lifts to the given images.
  // Fully validated; throws std::invalid_argument if the images do not
  // determine an automorphism.
  static RtAutomorphism from_generator_images(const ExtraspecialSubgroup& rt,
                                              const std::vector<QElement>& images);

  const ExtraspecialSubgroup& subgroup() const { return *rt_; }
  const std::vector<std::uint32_t>& image() const { return image_; }
  QElement apply(QElement r) const;
  RtAutomorphism then(const RtAutomorphism& g) const;  // this first, then g
  bool is_identity() const;
  // Induced linear map on R/<a>: row i = coordinates of the image of the
  // i-th basis lift.
  std::vector<GF2Vector> bar_matrix() const;

  friend bool operator==(const RtAutomorphism& x, const RtAutomorphism& y) {
    return (x.rt_ == y.rt_ || x.rt_->group() == y.rt_->group()) && x.image_ == y.image_;
  }

private:
  const ExtraspecialSubgroup* rt_;
  std::vector<std::uint32_t> image_;  // positions in rt.elements()
};

// Every automorphism of R, by backtracking over generator images. Requires
// |R| <= 32, i.e. rank <= 4 (throws std::domain_error beyond); the count is
// 2^m |GO^eps_m(2)|.
std::vector<RtAutomorphism> aut_extraspecial(const ExtraspecialSubgroup& rt);

// Automorphism of G restricting to the identity on the complement L, stored
// as a raw-indexed image table on Q. Keeps a pointer to the group.
class GAutomorphism {
public:
  GAutomorphism(const Group& g, std::vector<std::uint32_t> q_image);
  static GAutomorphism identity(const Group& g);

  const Group& group() const { return *group_; }
  const std::vector<std::uint32_t>& q_image() const { return q_image_; }
  QElement apply_q(QElement q) const;
  GroupElement apply(GroupElement x) const;  // (phi(q), l)
  GAutomorphism then(const GAutomorphism& g) const;  // this first, then g
  bool is_identity() const;

  // Induced permutation of the dent indices 1 .. 2^m - 1.
  std::vector<int> dent_permutation(const DentSpace& ds) const;
  // For an automorphism fixing every dent: the functional recording on which
  // basis dents it acts as the unique nontrivial automorphism. Throws
  // std::logic_error if some dent action is neither that nor the identity.
  GF2Vector kernel_functional(const DentSpace& ds) const;

  friend bool operator==(const GAutomorphism& x, const GAutomorphism& y) {
    return (x.group_ == y.group_ || *x.group_ == *y.group_) && x.q_image_ == y.q_image_;
  }

private:
  const Group* group_;
  std::vector<std::uint32_t> q_image_;  // raw -> raw
};

// Extension of alpha to Q along the factorization Q = R * R^s, identity on
// L. Verified multiplicative on every (element, generator) pair, bijective,
// and equivariant for the L-action; throws std::logic_error otherwise.
GAutomorphism lift_to_G(const ExtraspecialSubgroup& rt, const RtAutomorphism& alpha);

// Lift of the central twist r -> r a^{<coords(r), e_i>}: acts as the unique
// nontrivial automorphism on basis dent i and as the identity on the other
// basis dents. i is 0-based.
GAutomorphism phi_i(const ExtraspecialSubgroup& rt, int i);

enum class SplitStatus { yes, no, cited_not_computed };

std::string split_status_str(SplitStatus s);

struct OutReport {
  int rank = 2;
  FormType type = FormType::plus;
  std::uint64_t kernel_order = 0;
  std::uint64_t image_order = 0;
  std::uint64_t total_order = 0;
  SplitStatus split = SplitStatus::cited_not_computed;

  friend bool operator==(const OutReport&, const OutReport&) = default;
};

// Kernel, image and split structure of C = C_{Aut G}(L) acting on the dent
// space. Up to rank 4 everything is enumerated and the split question is
// settled by exhaustive complement search; at rank 6 the kernel is still
// built from the phi_i, but the image order comes from the orthogonal group
// formula and the split status stays cited_not_computed.
OutReport out_structure(const Group& g);

// |Aut(G)| by exhaustive search over generator images; rank 2 only (throws
// std::domain_error beyond).
std::uint64_t brute_aut_count(const Group& g);

// The elements of C at rank 2, found the same brute way with the embedding
// of L pinned, returned as their restrictions to Q.
std::vector<GAutomorphism> brute_centralizing_autos(const Group& g);

}  // namespace biextra
