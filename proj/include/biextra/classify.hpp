#pragma once

#include <cstdint>
#include <map>
#include <string_view>
#include <utility>
#include <vector>

#include "biextra/dent_space.hpp"
#include "biextra/gf.hpp"
#include "biextra/group.hpp"
#include "biextra/quadratic_space.hpp"

namespace biextra {

// Central product of two groups over the shared center with the diagonal
// L-action, realized by concatenating the factor lists and stably moving
// minus factors last. Factor provenance is recorded in origins().
Group compose(const Group& g1, const Group& g2);

// "B+(2) * B-(4) * ..." — descriptors combined left-associatively with *.
Group parse_expression(std::string_view text);

// Rank and type of the dent space, i.e. the group's classification name.
GroupDescriptor classify(const Group& g);

// For a composed group: each side's dents embed (via the recorded factor
// origins) as dents of the composite with the same kinds and Gram values,
// and every cross-side dent pair commutes.
bool dent_space_isometry_check(const Group& composed, const Group& g1, const Group& g2);

// One rank-2 constituent of an orthogonal decomposition: the plane in dent
// coordinates, its three dent indices (u, v, u+v), the classified rank-2
// descriptor, and the 64-element subgroup of Q the two dents generate.
struct RankTwoPiece {
  Plane plane;
  std::vector<int> dent_indices;
  GroupDescriptor descriptor;
  std::vector<QElement> q_elements;  // sorted by raw value
};

// Splits Q along pairwise-orthogonal nondegenerate planes of the dent space.
// Validates that the pieces are L-invariant 64-element subgroups with center
// Z, that distinct pieces commute elementwise, and that together they
// generate Q. The one-argument form uses space().orthogonal_decompose().
std::vector<RankTwoPiece> decompose(const Group& g, const std::vector<Plane>& summands);
std::vector<RankTwoPiece> decompose(const Group& g);

// An explicit isomorphism determined by generator images: the 2m dent
// representatives of an adapted basis on each side. Q maps by quotient
// coordinates with exact central bookkeeping, L maps identically.
class Isomorphism {
public:
  Isomorphism(Group from, Group to, std::vector<int> from_dents, std::vector<int> to_dents,
              std::vector<QElement> from_gens, std::vector<QElement> to_gens);

  const Group& from() const { return from_; }
  const Group& to() const { return to_; }
  const std::vector<int>& from_dents() const { return from_dents_; }
  const std::vector<int>& to_dents() const { return to_dents_; }
  const std::vector<QElement>& from_generators() const { return from_gens_; }
  const std::vector<QElement>& to_generators() const { return to_gens_; }

  QElement map_q(QElement q) const;
  GroupElement map(GroupElement x) const;

private:
  Group from_;
  Group to_;
  std::vector<int> from_dents_;
  std::vector<int> to_dents_;
  std::vector<QElement> from_gens_;
  std::vector<QElement> to_gens_;
  GF2Solver solver_;
};

// Builds the isomorphism along matching orthogonal decompositions of the two
// dent spaces. Throws std::domain_error when ranks or types differ.
Isomorphism build_isomorphism(const Group& from, const Group& to);

struct IsomorphismCertificate {
  GroupDescriptor source;
  GroupDescriptor target;
  std::vector<std::pair<int, int>> dent_matching;
  std::vector<std::pair<QElement, QElement>> generator_images;
  bool verified = false;
  bool exhaustive = false;
  std::uint64_t checked_pairs = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const IsomorphismCertificate&, const IsomorphismCertificate&) = default;
};

// Checks the map is a bijective homomorphism and packages the evidence.
// Rank 2 is verified over every pair of group elements; larger ranks over
// every (element, generator) pair — complete by induction on word length —
// plus `samples` seeded random pairs. Throws std::logic_error on failure.
IsomorphismCertificate certify(const Isomorphism& iso, std::uint64_t seed = 0,
                               std::uint64_t samples = 100000);

// Cheap isomorphism invariants, used to separate the two types of a rank.
struct Fingerprint {
  std::uint64_t group_order = 0;
  int rank = 0;
  FormType type = FormType::plus;
  int singular_dents = 0;
  std::map<int, int> g_order_histogram;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const Group& g);

// Order statistics of Q alone. Identical for both types of the same rank,
// which is why classification needs the dent space at all.
std::map<int, int> q_order_histogram(const Group& g);

}  // namespace biextra
