#include "biextra/dent_space.hpp"

#include <algorithm>
#include <stdexcept>

namespace biextra {

namespace {

// Lifts coordinate bits to the c = 0 element of the matching coset (which
// need not itself be t-fixed; the fixed translates differ from it centrally).
QElement lift_coset(const Group& g, GF2Vector coords) {
  QElement x = g.q_identity();
  for (int i = 0; i < g.k(); ++i) {
    const unsigned bit0 = static_cast<unsigned>(coords.bit(2 * i));
    const unsigned bit1 = static_cast<unsigned>(coords.bit(2 * i + 1));
    if (g.flavors()[i] == Flavor::plus) {
      x = x.with_a(i, GF4(bit0)).with_b(i, GF4(bit1));
    } else {
      const GF4 b(bit0 | (bit1 << 1));
      x = x.with_a(i, b.square()).with_b(i, b);
    }
  }
  return x;
}

}  // namespace

std::optional<GF2Vector> coset_coords(const Group& g, QElement x) {
  const int m = g.rank();
  GF2Vector coords = GF2Vector::zero(m);
  for (int i = 0; i < g.k(); ++i) {
    const GF4 a = x.a(i);
    const GF4 b = x.b(i);
    if (g.flavors()[i] == Flavor::plus) {
      if (a.code() > 1 || b.code() > 1) return std::nullopt;
      coords = coords.with_bit(2 * i, static_cast<int>(a.code()));
      coords = coords.with_bit(2 * i + 1, static_cast<int>(b.code()));
    } else {
      if (a != b.square()) return std::nullopt;
      coords = coords.with_bit(2 * i, static_cast<int>(b.code() & 1u));
      coords = coords.with_bit(2 * i + 1, static_cast<int>((b.code() >> 1) & 1u));
    }
  }
  return coords;
}

QElement coset_representative(const Group& g, GF2Vector coords) {
  if (coords.dim() != g.rank()) throw std::invalid_argument("coset_representative: dimension mismatch");
  const QElement base = lift_coset(g, coords);
  const LElement t = LElement::t();
  QElement least = base;
  int fixed = 0;
  for (unsigned z = 0; z < 4; ++z) {
    const QElement cand = base.with_c(GF4(z));
    if (g.act(t, cand) == cand) {
      if (fixed == 0 || cand < least) least = cand;
      ++fixed;
    }
  }
  if (fixed != 2)
    throw std::logic_error("coset_representative: coset has " + std::to_string(fixed) +
                           " t-fixed translates instead of 2");
  return least;
}

DentSpace::DentSpace(Group g, std::vector<Dent> dents, QuadraticSpace space)
    : group_(std::move(g)), dents_(std::move(dents)), space_(std::move(space)), type_(space_.type()) {}

DentSpace DentSpace::enumerate(const Group& g) {
  const int m = g.rank();
  std::vector<Dent> dents;
  dents.reserve((std::size_t{1} << m) - 1);
  const LElement s = LElement::s();

  for (std::uint64_t idx = 1; idx < (std::uint64_t{1} << m); ++idx) {
    const GF2Vector coords(idx, m);
    const QElement x = coset_representative(g, coords);
    Dent d;
    d.index = static_cast<int>(idx);
    d.coords = coords;
    d.x = x;
    d.y = g.act(s, x);
    d.singular = g.square_value(x).is_zero();
    dents.push_back(d);
  }

  // Forms on the basis dents (unit coordinates): q from squares, beta from
  // commutators of the canonical representatives.
  std::vector<GF2Vector> gram;
  GF2Vector qvals = GF2Vector::zero(m);
  for (int i = 0; i < m; ++i) {
    const Dent& di = dents[(std::size_t{1} << i) - 1];
    qvals = qvals.with_bit(i, di.singular ? 0 : 1);
    GF2Vector row = GF2Vector::zero(m);
    for (int j = 0; j < m; ++j) {
      if (j == i) continue;
      const Dent& dj = dents[(std::size_t{1} << j) - 1];
      const GF4 comm = g.commutator(di.x, dj.x);
      if (comm != GF4::zero() && comm != z_a)
        throw std::logic_error("DentSpace: commutator of t-fixed representatives outside <a>");
      row = row.with_bit(j, comm.is_zero() ? 0 : 1);
    }
    gram.push_back(row);
  }

  return DentSpace(g, std::move(dents), QuadraticSpace(std::move(gram), qvals));
}

const Dent& DentSpace::dent(int index) const {
  if (index < 1 || index > count()) throw std::out_of_range("DentSpace: dent index out of range");
  return dents_[static_cast<std::size_t>(index) - 1];
}

std::vector<int> DentSpace::basis_indices() const {
  std::vector<int> out;
  for (int i = 0; i < rank(); ++i) out.push_back(1 << i);
  return out;
}

int DentSpace::singular_count() const {
  int n = 0;
  for (const Dent& d : dents_) n += d.singular ? 1 : 0;
  return n;
}

int DentSpace::add(int d1, int d2) const {
  if (d1 < 0 || d1 > count() || d2 < 0 || d2 > count())
    throw std::out_of_range("DentSpace: dent index out of range");
  return d1 ^ d2;
}

int DentSpace::beta(int d1, int d2) const {
  if (d1 == 0 || d2 == 0) return 0;
  const GF4 comm = group_.commutator(dent(d1).x, dent(d2).x);
  if (comm != GF4::zero() && comm != z_a)
    throw std::logic_error("DentSpace: commutator of t-fixed representatives outside <a>");
  return comm.is_zero() ? 0 : 1;
}

int DentSpace::qform(int d) const {
  if (d == 0) return 0;
  return dent(d).singular ? 0 : 1;
}

std::array<GF4, 4> DentSpace::commutator_table(int d1, int d2) const {
  if (beta(d1, d2) == 0) throw std::domain_error("DentSpace: commutator table needs a non-commuting pair");
  const Dent& p = dent(d1);
  const Dent& q = dent(d2);
  const std::array<GF4, 4> table = {group_.commutator(p.x, q.x), group_.commutator(p.x, q.y),
                                    group_.commutator(p.y, q.x), group_.commutator(p.y, q.y)};
  const std::array<GF4, 4> expected = {z_a, z_c, z_c, z_b};
  if (table != expected) throw std::logic_error("DentSpace: commutator table deviates from (a, c, c, b)");
  return table;
}

std::optional<GF2Vector> DentSpace::coset_coords(QElement q) const {
  return biextra::coset_coords(group_, q);
}

QElement DentSpace::unique_auto_image(const Dent& d, QElement u) const {
  // Coordinates of u's coset in the plane spanned by the cosets of x and y,
  // taken in Q/Z with each GF(4) slot split into two GF(2) bits.
  const int dim = 4 * group_.k();
  auto qbar = [&](QElement e) {
    std::uint64_t bits = 0;
    for (int i = 0; i < group_.k(); ++i) {
      bits |= std::uint64_t{e.a(i).code()} << (4 * i);
      bits |= std::uint64_t{e.b(i).code()} << (4 * i + 2);
    }
    return GF2Vector(bits, dim);
  };
  const auto coords = gf2_coordinates({qbar(d.x), qbar(d.y)}, qbar(u));
  if (!coords) throw std::invalid_argument("DentSpace: element outside the dent");
  QElement image = u;
  if (coords->bit(0)) image = group_.mul(group_.central(z_a), image);
  if (coords->bit(1)) image = group_.mul(group_.central(z_b), image);
  return image;
}

std::vector<QElement> DentSpace::elements(const Dent& d) const {
  std::vector<QElement> out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      QElement base = group_.q_identity();
      if (i) base = group_.mul(base, d.x);
      if (j) base = group_.mul(base, d.y);
      for (unsigned z = 0; z < 4; ++z) out.push_back(base.with_c(base.c() + GF4(z)));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.size() != 16) throw std::logic_error("DentSpace: dent subgroup is not sixteen elements");
  return out;
}

std::pair<int, FormType> group_type(const Group& g) {
  const DentSpace ds = DentSpace::enumerate(g);
  return {ds.rank(), ds.type()};
}

}  // namespace biextra
