#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "biextra/gf.hpp"
#include "biextra/quadratic_space.hpp"

namespace biextra {

enum class Flavor : std::uint8_t { plus, minus };

// Central letters of Z = Z(Q) under the triple encoding a = (0,0,1),
// b = (0,0,w^2), c = (0,0,w): a is fixed by the canonical involution,
// b = a^s, c = b^s, and c = ab (letters multiply by code XOR).
inline constexpr GF4 z_a{1};
inline constexpr GF4 z_b{3};
inline constexpr GF4 z_c{2};

// Element of L = <s, t | s^3 = t^2 = (st)^2 = e> ~ S3, stored as one of the
// six normal-form words e, s, s2, t, ts, ts2 (index = 3*[has t] + s-count).
// Words act on the right: x^(gh) = (x^g)^h.
class LElement {
public:
  constexpr LElement() = default;

  static LElement identity() { return from_index(0); }
  static LElement s() { return from_index(1); }
  static LElement t() { return from_index(3); }
  static LElement from_index(int idx);

  int index() const { return idx_; }
  bool has_t() const { return idx_ >= 3; }
  int s_exponent() const { return idx_ % 3; }
  bool is_identity() const { return idx_ == 0; }

  LElement operator*(LElement other) const;
  LElement inverse() const;
  int order() const;

  std::string_view name() const;

  friend bool operator==(LElement x, LElement y) { return x.idx_ == y.idx_; }
  friend bool operator!=(LElement x, LElement y) { return x.idx_ != y.idx_; }

private:
  std::uint8_t idx_ = 0;
};

// Element of Q in canonical form: k factors of GF(4) pairs (a_i, b_i) plus a
// single central charge c carried by factor 1 (all other central parts are
// accumulated there, which the packed layout enforces by construction).
// Bit layout: [0,2) = c, [2+4i, 2+4i+2) = a_i, [2+4i+2, 2+4i+4) = b_i.
class QElement {
public:
  QElement() = default;
  QElement(std::uint64_t bits, int k);

  static QElement identity(int k) { return QElement(0, k); }

  int factor_count() const { return k_; }
  std::uint64_t raw() const { return bits_; }

  GF4 a(int i) const { return GF4(static_cast<unsigned>(bits_ >> (2 + 4 * i)) & 3u); }
  GF4 b(int i) const { return GF4(static_cast<unsigned>(bits_ >> (4 + 4 * i)) & 3u); }
  GF4 c() const { return GF4(static_cast<unsigned>(bits_) & 3u); }

  QElement with_a(int i, GF4 v) const;
  QElement with_b(int i, GF4 v) const;
  QElement with_c(GF4 v) const;

  bool is_identity() const { return bits_ == 0; }
  bool is_central() const { return (bits_ >> 2) == 0; }

  // Triples ((a_1,b_1,c), (a_2,b_2,0), ...); accepts the same shape back,
  // folding any central parts into factor 1.
  std::vector<std::array<GF4, 3>> triples() const;
  static QElement from_triples(const std::vector<std::array<GF4, 3>>& triples);

  std::string str() const;

  friend bool operator==(QElement x, QElement y) { return x.bits_ == y.bits_ && x.k_ == y.k_; }
  friend bool operator!=(QElement x, QElement y) { return !(x == y); }
  friend bool operator<(QElement x, QElement y) { return x.bits_ < y.bits_; }

private:
  std::uint64_t bits_ = 0;
  std::uint8_t k_ = 0;
};

struct GroupElement {
  QElement q;
  LElement l;

  friend bool operator==(const GroupElement& x, const GroupElement& y) {
    return x.q == y.q && x.l == y.l;
  }
  friend bool operator!=(const GroupElement& x, const GroupElement& y) { return !(x == y); }
};

// Canonical name of a group in the classification: even rank plus a type,
// with the flavor list normalized to at most one minus factor, placed last.
struct GroupDescriptor {
  int rank = 2;
  FormType type = FormType::plus;

  int factor_count() const { return rank / 2; }
  std::vector<Flavor> flavors() const;
  std::string text() const;

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

// Parses "B+(m)", "B-(m)", "B+m", "B-m" (even m >= 2).
GroupDescriptor parse_descriptor(std::string_view text);

// The group G = Q : L for a list of rank-2 factors. Canonical flavor lists
// (at most one minus, last) carry classification names B+(m) / B-(m);
// compositions may hold arbitrary flavor lists. Elements of Q are canonical
// tuples and the whole object is immutable.
class Group {
public:
  explicit Group(std::vector<Flavor> flavors, std::string name = {});

  struct FactorOrigin {
    int side;   // 1 or 2
    int index;  // factor index within that side
  };

  int k() const { return static_cast<int>(flavors_.size()); }
  int rank() const { return 2 * k(); }
  const std::vector<Flavor>& flavors() const { return flavors_; }
  const std::string& name() const { return name_; }
  bool canonical_flavors() const;
  int minus_count() const;
  FormType flavor_type() const;  // product of factor types

  const std::vector<FactorOrigin>& origins() const { return origins_; }
  void set_origins(std::vector<FactorOrigin> origins);

  std::uint64_t q_order() const { return std::uint64_t{1} << (2 + 2 * rank()); }
  std::uint64_t order() const { return 6 * q_order(); }

  // Enumeration of Q: every index in [0, q_order()) is a canonical element.
  QElement q_at(std::uint64_t index) const;
  QElement q_identity() const { return QElement::identity(k()); }
  QElement central(GF4 z) const { return QElement(z.code(), k()); }

  QElement mul(QElement x, QElement y) const;
  QElement inverse(QElement x) const;
  // x^2 = (0,...,0, sum_i a_i b_i); the returned value is that central charge.
  GF4 square_value(QElement x) const;
  // [x, y] is central: (0,...,0, sum_i (a_i b_i' + a_i' b_i)).
  GF4 commutator(QElement x, QElement y) const;

  // Right action of L on Q. s scales (a_i, b_i) by w and c by w^2; the
  // involution generator maps plus factors by (a, b) -> (a^2, b^2) and minus
  // factors by (a, b) -> (b^2, a^2), with c -> c^2 plus the minus factors'
  // (a_i b_i)^2 contributions.
  QElement act(LElement l, QElement x) const;

  // Semidirect product with right action: (q1, l1)(q2, l2) = (q1 * q2^(l1^-1), l1 l2).
  GroupElement mul(GroupElement x, GroupElement y) const;
  GroupElement inverse(GroupElement x) const;
  GroupElement g_identity() const { return GroupElement{q_identity(), LElement::identity()}; }

  int q_element_order(QElement x) const;
  int element_order(GroupElement x) const;

  friend bool operator==(const Group& x, const Group& y) { return x.flavors_ == y.flavors_; }
  friend bool operator!=(const Group& x, const Group& y) { return !(x == y); }

private:
  void check(QElement x) const;

  std::vector<Flavor> flavors_;
  std::string name_;
  std::vector<FactorOrigin> origins_;
};

// Builds the canonical group for a descriptor.
Group construct(const GroupDescriptor& descriptor);

// N_G(<sylow3>) for an order-3 element; the canonical complement is the
// result for (identity, s). Always has order 6 and meets Q trivially.
std::vector<GroupElement> find_complement(const Group& g, const GroupElement& sylow3);
std::vector<GroupElement> find_complement(const Group& g);

}  // namespace biextra
