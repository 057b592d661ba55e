#include "biextra/classify.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

namespace biextra {

namespace {

// Image of x in Q/Z as a GF(2) vector: factor i contributes the codes of
// a_i and b_i at bits (4i, 4i+1) and (4i+2, 4i+3).
GF2Vector qbar(const Group& g, QElement x) {
  std::uint64_t bits = 0;
  for (int i = 0; i < g.k(); ++i) {
    bits |= static_cast<std::uint64_t>(x.a(i).code()) << (4 * i);
    bits |= static_cast<std::uint64_t>(x.b(i).code()) << (4 * i + 2);
  }
  return GF2Vector(bits, 4 * g.k());
}

int dent_index_of(GF2Vector coords) {
  int out = 0;
  for (int b = 0; b < coords.dim(); ++b)
    if (coords.bit(b)) out |= 1 << b;
  return out;
}

}  // namespace

Group compose(const Group& g1, const Group& g2) {
  std::vector<std::pair<Flavor, Group::FactorOrigin>> factors;
  factors.reserve(static_cast<std::size_t>(g1.k() + g2.k()));
  for (int i = 0; i < g1.k(); ++i) factors.push_back({g1.flavors()[i], {1, i}});
  for (int i = 0; i < g2.k(); ++i) factors.push_back({g2.flavors()[i], {2, i}});
  // Normalize to plus factors first; stable, so each side keeps its own order.
  std::stable_partition(factors.begin(), factors.end(),
                        [](const auto& f) { return f.first == Flavor::plus; });

  std::vector<Flavor> flavors;
  std::vector<Group::FactorOrigin> origins;
  for (const auto& [flavor, origin] : factors) {
    flavors.push_back(flavor);
    origins.push_back(origin);
  }
  Group out(std::move(flavors), g1.name() + " * " + g2.name());
  out.set_origins(std::move(origins));
  return out;
}

Group parse_expression(std::string_view text) {
  std::vector<Group> terms;
  std::size_t start = 0;
  while (true) {
    const std::size_t star = std::min(text.find('*', start), text.size());
    std::string_view term = text.substr(start, star - start);
    std::size_t offset = start;
    while (!term.empty() && term.front() == ' ') {
      term.remove_prefix(1);
      ++offset;
    }
    while (!term.empty() && term.back() == ' ') term.remove_suffix(1);
    if (term.empty())
      throw std::invalid_argument("parse error at position " + std::to_string(offset) +
                                  ": empty group descriptor");
    try {
      terms.push_back(construct(parse_descriptor(term)));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("parse error at position " + std::to_string(offset) + ": " +
                                  e.what());
    }
    if (star == text.size()) break;
    start = star + 1;
  }
  Group out = std::move(terms.front());
  for (std::size_t i = 1; i < terms.size(); ++i) out = compose(out, terms[i]);
  return out;
}

GroupDescriptor classify(const Group& g) {
  const auto [rank, type] = group_type(g);
  return GroupDescriptor{rank, type};
}

bool dent_space_isometry_check(const Group& composed, const Group& g1, const Group& g2) {
  const auto& origins = composed.origins();
  if (origins.empty())
    throw std::invalid_argument("dent_space_isometry_check: composed group has no factor origins");
  if (composed.k() != g1.k() + g2.k()) return false;

  std::vector<int> pos1(static_cast<std::size_t>(g1.k()), -1);
  std::vector<int> pos2(static_cast<std::size_t>(g2.k()), -1);
  for (int p = 0; p < composed.k(); ++p) {
    const auto& origin = origins[static_cast<std::size_t>(p)];
    const Group& side = origin.side == 1 ? g1 : g2;
    auto& pos = origin.side == 1 ? pos1 : pos2;
    if (origin.side != 1 && origin.side != 2) return false;
    if (origin.index < 0 || origin.index >= side.k()) return false;
    if (pos[static_cast<std::size_t>(origin.index)] != -1) return false;
    if (composed.flavors()[static_cast<std::size_t>(p)] !=
        side.flavors()[static_cast<std::size_t>(origin.index)])
      return false;
    pos[static_cast<std::size_t>(origin.index)] = p;
  }

  const DentSpace dsc = DentSpace::enumerate(composed);
  const DentSpace ds1 = DentSpace::enumerate(g1);
  const DentSpace ds2 = DentSpace::enumerate(g2);

  // Dent d of a side lands at the composite dent with the same two bits per
  // factor, relocated to the factor's position. Linear by construction.
  const auto embed = [](const std::vector<int>& pos, int d) {
    int out = 0;
    for (std::size_t i = 0; i < pos.size(); ++i)
      for (int b = 0; b < 2; ++b)
        if (d >> (2 * i + b) & 1) out |= 1 << (2 * pos[i] + b);
    return out;
  };

  const DentSpace* sides[2] = {&ds1, &ds2};
  const std::vector<int>* positions[2] = {&pos1, &pos2};
  for (int s = 0; s < 2; ++s) {
    const DentSpace& ds = *sides[s];
    for (int d = 1; d <= ds.count(); ++d) {
      if (ds.qform(d) != dsc.qform(embed(*positions[s], d))) return false;
      for (int e = 1; e <= ds.count(); ++e)
        if (ds.beta(d, e) != dsc.beta(embed(*positions[s], d), embed(*positions[s], e)))
          return false;
    }
  }
  for (int d1 = 1; d1 <= ds1.count(); ++d1)
    for (int d2 = 1; d2 <= ds2.count(); ++d2)
      if (dsc.beta(embed(pos1, d1), embed(pos2, d2)) != 0) return false;
  return true;
}

std::vector<RankTwoPiece> decompose(const Group& g, const std::vector<Plane>& summands) {
  const DentSpace ds = DentSpace::enumerate(g);
  const int m = ds.rank();
  if (static_cast<int>(summands.size()) * 2 != m)
    throw std::invalid_argument("decompose: need exactly m/2 planes");

  std::vector<GF2Vector> all;
  for (const auto& plane : summands) {
    if (plane.u.dim() != m || plane.v.dim() != m)
      throw std::invalid_argument("decompose: plane has wrong ambient dimension");
    // beta(u, v) = 1 makes the plane nondegenerate and u, v independent.
    if (ds.space().beta(plane.u, plane.v) != 1)
      throw std::invalid_argument("decompose: degenerate plane");
    all.push_back(plane.u);
    all.push_back(plane.v);
  }
  for (std::size_t i = 0; i < summands.size(); ++i)
    for (std::size_t j = i + 1; j < summands.size(); ++j)
      for (GF2Vector x : {summands[i].u, summands[i].v})
        for (GF2Vector y : {summands[j].u, summands[j].v})
          if (ds.space().beta(x, y) != 0)
            throw std::invalid_argument("decompose: summands are not orthogonal");
  if (gf2_rank(all) != m) throw std::invalid_argument("decompose: summands do not span");

  std::vector<RankTwoPiece> pieces;
  for (const auto& plane : summands) {
    RankTwoPiece piece;
    piece.plane = plane;
    const int iu = dent_index_of(plane.u);
    const int iv = dent_index_of(plane.v);
    piece.dent_indices = {iu, iv, iu ^ iv};
    piece.descriptor = GroupDescriptor{2, ds.space().restricted({plane.u, plane.v}).type()};

    const Dent& du = ds.dent(iu);
    const Dent& dv = ds.dent(iv);
    for (QElement a : {g.q_identity(), du.x})
      for (QElement b : {g.q_identity(), du.y})
        for (QElement c : {g.q_identity(), dv.x})
          for (QElement d : {g.q_identity(), dv.y})
            for (unsigned z = 0; z < 4; ++z) {
              QElement e = g.mul(g.mul(a, b), g.mul(c, d));
              piece.q_elements.push_back(g.mul(e, g.central(GF4(z))));
            }
    std::sort(piece.q_elements.begin(), piece.q_elements.end());
    piece.q_elements.erase(std::unique(piece.q_elements.begin(), piece.q_elements.end()),
                           piece.q_elements.end());
    if (piece.q_elements.size() != 64)
      throw std::logic_error("decompose: piece is not a 64-element subgroup");

    const auto contains = [&piece](QElement x) {
      return std::binary_search(piece.q_elements.begin(), piece.q_elements.end(), x);
    };
    for (QElement x : piece.q_elements)
      for (QElement y : piece.q_elements)
        if (!contains(g.mul(x, y))) throw std::logic_error("decompose: piece is not closed");
    for (int l = 0; l < 6; ++l)
      for (QElement x : piece.q_elements)
        if (!contains(g.act(LElement::from_index(l), x)))
          throw std::logic_error("decompose: piece is not L-invariant");
    // Center of the piece must be exactly Z.
    for (QElement x : piece.q_elements) {
      bool commutes_with_all = true;
      for (QElement y : piece.q_elements)
        if (!g.commutator(x, y).is_zero()) {
          commutes_with_all = false;
          break;
        }
      if (commutes_with_all != x.is_central())
        throw std::logic_error("decompose: piece center differs from Z");
    }
    pieces.push_back(std::move(piece));
  }

  // Distinct pieces commute elementwise; together with spanning (checked
  // above) this makes Q the central product of the pieces.
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (std::size_t j = i + 1; j < pieces.size(); ++j)
      for (QElement x : pieces[i].q_elements)
        for (QElement y : pieces[j].q_elements)
          if (!g.commutator(x, y).is_zero())
            throw std::logic_error("decompose: pieces do not commute");
  return pieces;
}

std::vector<RankTwoPiece> decompose(const Group& g) {
  return decompose(g, DentSpace::enumerate(g).space().orthogonal_decompose());
}

Isomorphism::Isomorphism(Group from, Group to, std::vector<int> from_dents,
                         std::vector<int> to_dents, std::vector<QElement> from_gens,
                         std::vector<QElement> to_gens)
    : from_(std::move(from)),
      to_(std::move(to)),
      from_dents_(std::move(from_dents)),
      to_dents_(std::move(to_dents)),
      from_gens_(std::move(from_gens)),
      to_gens_(std::move(to_gens)),
      solver_([this] {
        std::vector<GF2Vector> basis;
        for (QElement x : from_gens_) basis.push_back(qbar(from_, x));
        return basis;
      }()) {
  const std::size_t m = static_cast<std::size_t>(from_.rank());
  if (from_dents_.size() != m || to_dents_.size() != m || from_gens_.size() != 2 * m ||
      to_gens_.size() != 2 * m || from_.rank() != to_.rank())
    throw std::invalid_argument("Isomorphism: generator lists have the wrong size");
}

QElement Isomorphism::map_q(QElement q) const {
  const auto coords = solver_.coordinates(qbar(from_, q));
  if (!coords) throw std::invalid_argument("Isomorphism: element outside the source group");
  QElement base_from = from_.q_identity();
  QElement base_to = to_.q_identity();
  for (int j = 0; j < coords->dim(); ++j) {
    if (coords->bit(j)) {
      base_from = from_.mul(base_from, from_gens_[static_cast<std::size_t>(j)]);
      base_to = to_.mul(base_to, to_gens_[static_cast<std::size_t>(j)]);
    }
  }
  const QElement correction = from_.mul(from_.inverse(base_from), q);
  if (!correction.is_central())
    throw std::logic_error("Isomorphism: coordinate section missed the center");
  return to_.mul(base_to, to_.central(correction.c()));
}

GroupElement Isomorphism::map(GroupElement x) const { return GroupElement{map_q(x.q), x.l}; }

Isomorphism build_isomorphism(const Group& from, const Group& to) {
  const DentSpace dsf = DentSpace::enumerate(from);
  const DentSpace dst = DentSpace::enumerate(to);
  if (dsf.rank() != dst.rank() || dsf.type() != dst.type())
    throw std::domain_error("build_isomorphism: " + classify(from).text() + " and " +
                            classify(to).text() + " are not isomorphic");

  // Matching adapted bases: hyperbolic planes first, then the anisotropic
  // one if any, so positions pair singular with singular.
  const auto planes_f = dsf.space().orthogonal_decompose();
  const auto planes_t = dst.space().orthogonal_decompose();
  std::vector<int> fd, td;
  for (std::size_t p = 0; p < planes_f.size(); ++p) {
    fd.push_back(dent_index_of(planes_f[p].u));
    fd.push_back(dent_index_of(planes_f[p].v));
    td.push_back(dent_index_of(planes_t[p].u));
    td.push_back(dent_index_of(planes_t[p].v));
  }
  std::vector<QElement> fg, tg;
  for (int d : fd) fg.push_back(dsf.dent(d).x);
  for (int d : fd) fg.push_back(dsf.dent(d).y);
  for (int d : td) tg.push_back(dst.dent(d).x);
  for (int d : td) tg.push_back(dst.dent(d).y);
  return Isomorphism(from, to, std::move(fd), std::move(td), std::move(fg), std::move(tg));
}

IsomorphismCertificate certify(const Isomorphism& iso, std::uint64_t seed, std::uint64_t samples) {
  const Group& f = iso.from();
  const Group& t = iso.to();
  const std::uint64_t qn = f.q_order();

  // Full image table, indexed by l * qn + raw.
  std::vector<GroupElement> image;
  image.reserve(6 * qn);
  for (int l = 0; l < 6; ++l)
    for (std::uint64_t r = 0; r < qn; ++r)
      image.push_back(iso.map(GroupElement{f.q_at(r), LElement::from_index(l)}));

  std::vector<std::uint64_t> keys;
  keys.reserve(image.size());
  for (const GroupElement& e : image)
    keys.push_back(static_cast<std::uint64_t>(e.l.index()) * qn + e.q.raw());
  std::sort(keys.begin(), keys.end());
  if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
    throw std::logic_error("certify: image is not injective");

  const auto lookup = [&](GroupElement x) -> const GroupElement& {
    return image[static_cast<std::uint64_t>(x.l.index()) * qn + x.q.raw()];
  };
  const auto check = [&](GroupElement a, GroupElement b) {
    if (lookup(f.mul(a, b)) != t.mul(lookup(a), lookup(b)))
      throw std::logic_error("certify: homomorphism fails at " + a.q.str() + "." +
                             std::string(a.l.name()) + " * " + b.q.str() + "." +
                             std::string(b.l.name()));
  };
  const auto element_at = [&](std::uint64_t id) {
    return GroupElement{f.q_at(id % qn), LElement::from_index(static_cast<int>(id / qn))};
  };

  std::uint64_t checked = 0;
  bool exhaustive = false;
  if (f.rank() == 2) {
    for (std::uint64_t i = 0; i < 6 * qn; ++i)
      for (std::uint64_t j = 0; j < 6 * qn; ++j) check(element_at(i), element_at(j));
    checked = 6 * qn * 6 * qn;
    exhaustive = true;
  } else {
    // Every (element, generator) pair; by induction on word length this
    // already forces the homomorphism property everywhere.
    std::vector<GroupElement> gens;
    for (QElement x : iso.from_generators()) gens.push_back(GroupElement{x, LElement::identity()});
    gens.push_back(GroupElement{f.central(z_a), LElement::identity()});
    gens.push_back(GroupElement{f.q_identity(), LElement::s()});
    gens.push_back(GroupElement{f.q_identity(), LElement::t()});
    for (std::uint64_t i = 0; i < 6 * qn; ++i)
      for (const GroupElement& h : gens) check(element_at(i), h);
    checked = 6 * qn * gens.size();

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> dist(0, 6 * qn - 1);
    for (std::uint64_t i = 0; i < samples; ++i) check(element_at(dist(rng)), element_at(dist(rng)));
    checked += samples;
  }

  IsomorphismCertificate cert;
  cert.source = classify(f);
  cert.target = classify(t);
  for (std::size_t i = 0; i < iso.from_dents().size(); ++i)
    cert.dent_matching.push_back({iso.from_dents()[i], iso.to_dents()[i]});
  for (std::size_t i = 0; i < iso.from_generators().size(); ++i)
    cert.generator_images.push_back({iso.from_generators()[i], iso.to_generators()[i]});
  cert.verified = true;
  cert.exhaustive = exhaustive;
  cert.checked_pairs = checked;
  cert.seed = seed;
  return cert;
}

Fingerprint fingerprint(const Group& g) {
  const DentSpace ds = DentSpace::enumerate(g);
  Fingerprint fp;
  fp.group_order = g.order();
  fp.rank = ds.rank();
  fp.type = ds.type();
  fp.singular_dents = ds.singular_count();
  for (int l = 0; l < 6; ++l)
    for (std::uint64_t r = 0; r < g.q_order(); ++r)
      ++fp.g_order_histogram[g.element_order(GroupElement{g.q_at(r), LElement::from_index(l)})];
  return fp;
}

std::map<int, int> q_order_histogram(const Group& g) {
  std::map<int, int> hist;
  for (std::uint64_t r = 0; r < g.q_order(); ++r) ++hist[g.q_element_order(g.q_at(r))];
  return hist;
}

}  // namespace biextra
