#include "biextra/aut.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "small_tables.hpp"

namespace biextra {

namespace {

int position_of(const ExtraspecialSubgroup& rt, QElement x) {
  const auto& v = rt.elements();
  const auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || *it != x)
    throw std::invalid_argument("RtAutomorphism: element outside R");
  return static_cast<int>(it - v.begin());
}

std::vector<QElement> basis_lifts(const ExtraspecialSubgroup& rt) {
  std::vector<QElement> lifts;
  for (int j = 0; j < rt.rank(); ++j) lifts.push_back(rt.lift(GF2Vector::unit(j, rt.rank())));
  return lifts;
}

}  // namespace

RtAutomorphism::RtAutomorphism(const ExtraspecialSubgroup& rt, std::vector<std::uint32_t> image)
    : rt_(&rt), image_(std::move(image)) {
  if (image_.size() != rt.elements().size())
    throw std::invalid_argument("RtAutomorphism: image table has the wrong size");
}

RtAutomorphism RtAutomorphism::identity(const ExtraspecialSubgroup& rt) {
  std::vector<std::uint32_t> image(rt.elements().size());
  for (std::uint32_t i = 0; i < image.size(); ++i) image[i] = i;
  return RtAutomorphism(rt, std::move(image));
}

RtAutomorphism RtAutomorphism::from_generator_images(const ExtraspecialSubgroup& rt,
                                                     const std::vector<QElement>& images) {
  const Group& g = rt.group();
  const int m = rt.rank();
  if (static_cast<int>(images.size()) != m)
    throw std::invalid_argument("RtAutomorphism: need one image per basis lift");
  const std::vector<QElement> lifts = basis_lifts(rt);
  const auto& elems = rt.elements();

  std::vector<std::uint32_t> image(elems.size());
  for (std::size_t p = 0; p < elems.size(); ++p) {
    const GF2Vector v = rt.coords(elems[p]);
    QElement ref = g.q_identity();
    QElement base = g.q_identity();
    for (int j = 0; j < m; ++j) {
      if (v.bit(j)) {
        ref = g.mul(ref, lifts[static_cast<std::size_t>(j)]);
        base = g.mul(base, images[static_cast<std::size_t>(j)]);
      }
    }
    const QElement delta = g.mul(g.inverse(ref), elems[p]);
    if (!delta.is_central() || (delta.c() != GF4::zero() && delta.c() != z_a))
      throw std::logic_error("RtAutomorphism: coordinate defect left <a>");
    image[p] = static_cast<std::uint32_t>(position_of(rt, g.mul(base, delta)));
  }

  RtAutomorphism alpha(rt, std::move(image));
  std::vector<std::uint32_t> sorted = alpha.image_;
  std::sort(sorted.begin(), sorted.end());
  for (std::uint32_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i) throw std::invalid_argument("RtAutomorphism: images give no bijection");
  for (const QElement x : elems)
    for (const QElement y : elems)
      if (alpha.apply(g.mul(x, y)) != g.mul(alpha.apply(x), alpha.apply(y)))
        throw std::invalid_argument("RtAutomorphism: images give no homomorphism");
  return alpha;
}

QElement RtAutomorphism::apply(QElement r) const {
  return rt_->elements()[image_[static_cast<std::size_t>(position_of(*rt_, r))]];
}

RtAutomorphism RtAutomorphism::then(const RtAutomorphism& g) const {
  if (rt_ != g.rt_ && !(rt_->group() == g.rt_->group()))
    throw std::invalid_argument("RtAutomorphism: mismatched subgroups");
  std::vector<std::uint32_t> image(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) image[i] = g.image_[image_[i]];
  return RtAutomorphism(*rt_, std::move(image));
}

bool RtAutomorphism::is_identity() const {
  for (std::uint32_t i = 0; i < image_.size(); ++i)
    if (image_[i] != i) return false;
  return true;
}

std::vector<GF2Vector> RtAutomorphism::bar_matrix() const {
  std::vector<GF2Vector> rows;
  for (QElement lift : basis_lifts(*rt_)) rows.push_back(rt_->coords(apply(lift)));
  return rows;
}

std::vector<RtAutomorphism> aut_extraspecial(const ExtraspecialSubgroup& rt) {
  if (rt.order() > 32)
    throw std::domain_error("size limit: automorphism enumeration requires |R| <= 32 (rank <= 4)");
  const Group& g = rt.group();
  const int m = rt.rank();
  const std::vector<QElement> lifts = basis_lifts(rt);
  const auto& elems = rt.elements();

  std::vector<RtAutomorphism> out;
  std::vector<QElement> chosen(static_cast<std::size_t>(m), g.q_identity());
  std::vector<GF2Vector> chosen_coords;
  const auto dfs = [&](auto&& self, int j) -> void {
    if (j == m) {
      out.push_back(RtAutomorphism::from_generator_images(rt, chosen));
      return;
    }
    for (const QElement cand : elems) {
      if (g.square_value(cand) != g.square_value(lifts[static_cast<std::size_t>(j)])) continue;
      bool compatible = true;
      for (int i = 0; i < j; ++i)
        if (g.commutator(cand, chosen[static_cast<std::size_t>(i)]) !=
            g.commutator(lifts[static_cast<std::size_t>(j)], lifts[static_cast<std::size_t>(i)])) {
          compatible = false;
          break;
        }
      if (!compatible) continue;
      chosen_coords.push_back(rt.coords(cand));
      if (gf2_rank(chosen_coords) == j + 1) {
        chosen[static_cast<std::size_t>(j)] = cand;
        self(self, j + 1);
      }
      chosen_coords.pop_back();
    }
  };
  dfs(dfs, 0);
  return out;
}

GAutomorphism::GAutomorphism(const Group& g, std::vector<std::uint32_t> q_image)
    : group_(&g), q_image_(std::move(q_image)) {
  if (q_image_.size() != g.q_order())
    throw std::invalid_argument("GAutomorphism: image table has the wrong size");
}

GAutomorphism GAutomorphism::identity(const Group& g) {
  std::vector<std::uint32_t> image(g.q_order());
  for (std::uint32_t i = 0; i < image.size(); ++i) image[i] = i;
  return GAutomorphism(g, std::move(image));
}

QElement GAutomorphism::apply_q(QElement q) const { return group_->q_at(q_image_[q.raw()]); }

GroupElement GAutomorphism::apply(GroupElement x) const {
  return GroupElement{apply_q(x.q), x.l};
}

GAutomorphism GAutomorphism::then(const GAutomorphism& g) const {
  if (group_ != g.group_ && !(*group_ == *g.group_))
    throw std::invalid_argument("GAutomorphism: mismatched groups");
  std::vector<std::uint32_t> image(q_image_.size());
  for (std::size_t i = 0; i < q_image_.size(); ++i) image[i] = g.q_image_[q_image_[i]];
  return GAutomorphism(*group_, std::move(image));
}

bool GAutomorphism::is_identity() const {
  for (std::uint32_t i = 0; i < q_image_.size(); ++i)
    if (q_image_[i] != i) return false;
  return true;
}

std::vector<int> GAutomorphism::dent_permutation(const DentSpace& ds) const {
  if (!(ds.group() == *group_))
    throw std::invalid_argument("GAutomorphism: dent space of a different group");
  std::vector<int> perm;
  for (int d = 1; d <= ds.count(); ++d) {
    const auto coords = coset_coords(*group_, apply_q(ds.dent(d).x));
    if (!coords || coords->is_zero())
      throw std::logic_error("GAutomorphism: dent image misses the t-fixed chart");
    perm.push_back(static_cast<int>(coords->bits()));
  }
  return perm;
}

GF2Vector GAutomorphism::kernel_functional(const DentSpace& ds) const {
  if (!(ds.group() == *group_))
    throw std::invalid_argument("GAutomorphism: dent space of a different group");
  const int m = ds.rank();
  GF2Vector f = GF2Vector::zero(m);
  for (int i = 0; i < m; ++i) {
    const Dent& d = ds.dent(1 << i);
    const QElement image = apply_q(d.x);
    if (image == ds.unique_auto_image(d, d.x))
      f = f.with_bit(i, 1);
    else if (image != d.x)
      throw std::logic_error("GAutomorphism: basis dent action is not a kernel action");
  }
  // The functional must predict the action on every dent, not just the basis.
  for (int d = 1; d <= ds.count(); ++d) {
    const Dent& dent = ds.dent(d);
    const QElement expected =
        dot(f, dent.coords) ? ds.unique_auto_image(dent, dent.x) : dent.x;
    if (apply_q(dent.x) != expected)
      throw std::logic_error("GAutomorphism: dent actions are not linear in the functional");
  }
  return f;
}

GAutomorphism lift_to_G(const ExtraspecialSubgroup& rt, const RtAutomorphism& alpha) {
  const Group& g = rt.group();
  const std::uint64_t qn = g.q_order();

  std::vector<std::uint32_t> q_image(qn);
  for (std::uint64_t r = 0; r < qn; ++r) {
    const auto [r1, r2] = rt.direct_factorization(g.q_at(r));
    q_image[r] = static_cast<std::uint32_t>(
        g.mul(alpha.apply(r1), g.act(LElement::s(), alpha.apply(r2))).raw());
  }

  std::vector<std::uint32_t> sorted = q_image;
  std::sort(sorted.begin(), sorted.end());
  for (std::uint32_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i) throw std::logic_error("lift_to_G: image is not a bijection of Q");

  std::vector<QElement> gens = basis_lifts(rt);
  {
    const std::vector<QElement> base = gens;
    for (const QElement r : base) gens.push_back(g.act(LElement::s(), r));
    gens.push_back(g.central(z_a));
  }
  const auto img = [&](QElement q) { return g.q_at(q_image[q.raw()]); };
  for (std::uint64_t r = 0; r < qn; ++r) {
    const QElement q = g.q_at(r);
    // Multiplicativity against every generator forces it everywhere.
    for (const QElement h : gens)
      if (img(g.mul(q, h)) != g.mul(img(q), img(h)))
        throw std::logic_error("lift_to_G: image fails multiplicativity");
    for (const LElement l : {LElement::s(), LElement::t()})
      if (img(g.act(l, q)) != g.act(l, img(q)))
        throw std::logic_error("lift_to_G: image is not L-equivariant");
  }
  return GAutomorphism(g, std::move(q_image));
}

GAutomorphism phi_i(const ExtraspecialSubgroup& rt, int i) {
  if (i < 0 || i >= rt.rank()) throw std::invalid_argument("phi_i: basis index out of range");
  std::vector<QElement> images = basis_lifts(rt);
  images[static_cast<std::size_t>(i)] =
      rt.group().mul(images[static_cast<std::size_t>(i)], rt.group().central(z_a));
  return lift_to_G(rt, RtAutomorphism::from_generator_images(rt, images));
}

std::string split_status_str(SplitStatus s) {
  switch (s) {
    case SplitStatus::yes: return "yes";
    case SplitStatus::no: return "no";
    case SplitStatus::cited_not_computed: return "cited-not-computed";
  }
  throw std::logic_error("split_status_str: bad status");
}

namespace {

using MatKey = std::vector<std::uint64_t>;

MatKey mat_key(const std::vector<GF2Vector>& rows) {
  MatKey key;
  for (const GF2Vector r : rows) key.push_back(r.bits());
  return key;
}

// Row i of "A then B" is sum_j A_i[j] * row_j(B).
std::vector<GF2Vector> mat_mul(const std::vector<GF2Vector>& a, const std::vector<GF2Vector>& b) {
  std::vector<GF2Vector> out;
  for (const GF2Vector row : a) {
    GF2Vector r = GF2Vector::zero(row.dim());
    for (int j = 0; j < row.dim(); ++j)
      if (row.bit(j)) r = r + b[static_cast<std::size_t>(j)];
    out.push_back(r);
  }
  return out;
}

std::set<MatKey> matrix_closure(const std::vector<std::vector<GF2Vector>>& gens, int m) {
  std::vector<GF2Vector> id;
  for (int i = 0; i < m; ++i) id.push_back(GF2Vector::unit(i, m));
  std::set<MatKey> seen = {mat_key(id)};
  std::vector<std::vector<GF2Vector>> frontier = {id};
  while (!frontier.empty()) {
    std::vector<std::vector<GF2Vector>> next;
    for (const auto& x : frontier)
      for (const auto& gen : gens) {
        auto y = mat_mul(x, gen);
        if (seen.insert(mat_key(y)).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return seen;
}

// Exhaustive complement search for the image inside Aut(R). A complement
// exists iff some kernel-twist of a generating set of the image closes up to
// a subgroup of exactly the image's order.
bool split_search(const std::vector<RtAutomorphism>& autos,
                  const std::vector<std::vector<GF2Vector>>& bars, std::size_t image_order,
                  int m) {
  std::vector<RtAutomorphism> kernel;
  std::map<MatKey, std::size_t> distinct_bars;
  for (std::size_t i = 0; i < autos.size(); ++i) {
    distinct_bars.emplace(mat_key(bars[i]), i);
    bool ident = true;
    for (int r = 0; r < m; ++r)
      if (bars[i][static_cast<std::size_t>(r)] != GF2Vector::unit(r, m)) {
        ident = false;
        break;
      }
    if (ident) kernel.push_back(autos[i]);
  }

  // Greedy generating set for the image, growing the closure fastest.
  std::vector<std::size_t> gen_idx;
  std::vector<std::vector<GF2Vector>> gen_mats;
  std::size_t generated = matrix_closure(gen_mats, m).size();
  while (generated < image_order) {
    std::size_t best = 0, best_size = 0;
    for (const auto& [key, idx] : distinct_bars) {
      auto trial = gen_mats;
      trial.push_back(bars[idx]);
      const std::size_t size = matrix_closure(trial, m).size();
      if (size > best_size) {
        best_size = size;
        best = idx;
      }
    }
    if (best_size <= generated) throw std::logic_error("split_search: image closure stalled");
    gen_idx.push_back(best);
    gen_mats.push_back(bars[best]);
    generated = best_size;
  }

  // Odometer over kernel corrections of each generator.
  const std::size_t g = gen_idx.size();
  std::vector<std::size_t> tuple(g, 0);
  while (true) {
    std::vector<RtAutomorphism> corrected;
    for (std::size_t j = 0; j < g; ++j)
      corrected.push_back(autos[gen_idx[j]].then(kernel[tuple[j]]));

    std::set<std::vector<std::uint32_t>> seen = {
        RtAutomorphism::identity(corrected[0].subgroup()).image()};
    std::vector<RtAutomorphism> frontier = {RtAutomorphism::identity(corrected[0].subgroup())};
    bool overflow = false;
    while (!frontier.empty() && !overflow) {
      std::vector<RtAutomorphism> next;
      for (const auto& x : frontier) {
        for (const auto& gen : corrected) {
          auto y = x.then(gen);
          if (seen.insert(y.image()).second) {
            if (seen.size() > image_order) {
              overflow = true;
              break;
            }
            next.push_back(std::move(y));
          }
        }
        if (overflow) break;
      }
      frontier = std::move(next);
    }
    if (!overflow && seen.size() == image_order) return true;

    std::size_t j = 0;
    for (; j < g; ++j) {
      if (++tuple[j] < kernel.size()) break;
      tuple[j] = 0;
    }
    if (j == g) return false;
  }
}

}  // namespace

OutReport out_structure(const Group& g) {
  const DentSpace ds = DentSpace::enumerate(g);
  const ExtraspecialSubgroup rt = ExtraspecialSubgroup::centralizer(g);
  const int m = g.rank();

  OutReport rep;
  rep.rank = m;
  rep.type = ds.type();

  // Kernel: closure of the basis twists phi_i.
  std::vector<GAutomorphism> phis;
  for (int i = 0; i < m; ++i) phis.push_back(phi_i(rt, i));
  for (int i = 0; i < m; ++i)
    if (phis[static_cast<std::size_t>(i)].kernel_functional(ds) != GF2Vector::unit(i, m))
      throw std::logic_error("out_structure: phi_i realizes the wrong functional");

  std::set<std::vector<std::uint32_t>> kernel_seen = {GAutomorphism::identity(g).q_image()};
  std::vector<GAutomorphism> frontier = {GAutomorphism::identity(g)};
  while (!frontier.empty()) {
    std::vector<GAutomorphism> next;
    for (const auto& x : frontier)
      for (const auto& p : phis) {
        auto y = x.then(p);
        if (kernel_seen.insert(y.q_image()).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  rep.kernel_order = kernel_seen.size();
  if (rep.kernel_order != std::uint64_t{1} << m)
    throw std::logic_error("out_structure: kernel is not elementary abelian of rank m");

  if (m <= 4) {
    const std::vector<RtAutomorphism> autos = aut_extraspecial(rt);
    rep.total_order = autos.size();

    std::vector<std::vector<GF2Vector>> bars;
    bars.reserve(autos.size());
    std::set<MatKey> distinct;
    std::size_t identity_bars = 0;
    for (const auto& alpha : autos) {
      bars.push_back(alpha.bar_matrix());
      distinct.insert(mat_key(bars.back()));
      bool ident = true;
      for (int r = 0; r < m; ++r)
        if (bars.back()[static_cast<std::size_t>(r)] != GF2Vector::unit(r, m)) {
          ident = false;
          break;
        }
      if (ident) ++identity_bars;
    }
    rep.image_order = distinct.size();
    if (rep.image_order != orthogonal_group_order(m, rep.type))
      throw std::logic_error("out_structure: image deviates from the orthogonal group");
    if (identity_bars != rep.kernel_order)
      throw std::logic_error("out_structure: kernel recount mismatch");
    if (rep.total_order != rep.kernel_order * rep.image_order)
      throw std::logic_error("out_structure: order bookkeeping failed");
    rep.split = split_search(autos, bars, rep.image_order, m) ? SplitStatus::yes : SplitStatus::no;
  } else {
    rep.image_order = orthogonal_group_order(m, rep.type);
    rep.total_order = rep.kernel_order * rep.image_order;
    rep.split = SplitStatus::cited_not_computed;
  }
  return rep;
}

namespace {

struct BruteOutcome {
  std::uint64_t total = 0;
  std::vector<std::vector<std::uint32_t>> central_q_tables;
};

// Exhaustive search over generator images (x1, x2, s, t). Every constraint
// used for pruning is forced for a genuine automorphism: Q = O_2(G) and
// Z(Q) are characteristic, conjugation relations and orders are preserved.
BruteOutcome brute_search(const Group& g) {
  if (g.rank() != 2)
    throw std::domain_error("size limit: exhaustive automorphism search requires rank 2");
  const auto t = detail::SmallGroupTables::build(g);
  const std::uint32_t n = t.count();
  const DentSpace ds = DentSpace::enumerate(g);

  const std::array<std::uint32_t, 4> gens = {
      t.encode(0, static_cast<std::uint32_t>(ds.dent(1).x.raw())),
      t.encode(0, static_cast<std::uint32_t>(ds.dent(2).x.raw())),
      t.encode(1, 0),   // s
      t.encode(3, 0)};  // t

  std::vector<int> parent(n, -1), via(n, -1);
  std::vector<std::uint32_t> bfs_order = {t.identity()};
  parent[t.identity()] = static_cast<int>(t.identity());
  for (std::size_t head = 0; head < bfs_order.size(); ++head)
    for (int j = 0; j < 4; ++j) {
      const std::uint32_t nxt = t.gmul(bfs_order[head], gens[static_cast<std::size_t>(j)]);
      if (parent[nxt] < 0) {
        parent[nxt] = static_cast<int>(bfs_order[head]);
        via[nxt] = j;
        bfs_order.push_back(nxt);
      }
    }
  if (bfs_order.size() != n) throw std::logic_error("brute_search: generators do not generate");

  std::vector<int> god(n);
  for (std::uint32_t i = 0; i < n; ++i) god[i] = t.gorder(i);

  std::vector<std::uint32_t> order3, involutions;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (god[i] == 3) order3.push_back(i);
    if (god[i] == 2) involutions.push_back(i);
  }

  BruteOutcome out;
  std::vector<std::uint32_t> phi(n);
  for (const std::uint32_t is : order3)
    for (const std::uint32_t it : involutions) {
      if (t.conj(is, it) != t.ginv(is)) continue;
      std::vector<std::uint32_t> cand1, cand2;
      for (std::uint32_t q = 4; q < t.q_order; ++q) {  // raw < 4 is the center
        const std::uint32_t e = t.encode(0, q);
        if (t.conj(e, it) != e) continue;
        if (god[e] == god[gens[0]]) cand1.push_back(e);
        if (god[e] == god[gens[1]]) cand2.push_back(e);
      }
      for (const std::uint32_t i1 : cand1)
        for (const std::uint32_t i2 : cand2) {
          if (t.gmul(t.gmul(t.ginv(i1), t.ginv(i2)), t.gmul(i1, i2)) == t.identity())
            continue;  // [x1, x2] = a is nontrivial
          const std::array<std::uint32_t, 4> img = {i1, i2, is, it};
          phi[t.identity()] = t.identity();
          for (std::size_t h = 1; h < bfs_order.size(); ++h) {
            const std::uint32_t x = bfs_order[h];
            phi[x] = t.gmul(phi[static_cast<std::uint32_t>(parent[x])],
                            img[static_cast<std::size_t>(via[x])]);
          }
          bool ok = true;
          for (std::uint32_t x = 0; x < n && ok; ++x)
            for (int j = 0; j < 4; ++j)
              if (phi[t.gmul(x, gens[static_cast<std::size_t>(j)])] !=
                  t.gmul(phi[x], img[static_cast<std::size_t>(j)])) {
                ok = false;
                break;
              }
          if (!ok) continue;
          std::vector<bool> hit(n, false);
          for (std::uint32_t x = 0; x < n && ok; ++x) {
            if (hit[phi[x]]) ok = false;
            hit[phi[x]] = true;
          }
          if (!ok) continue;
          ++out.total;
          if (is == gens[2] && it == gens[3]) {
            std::vector<std::uint32_t> qtab(t.q_order);
            for (std::uint32_t q = 0; q < t.q_order; ++q) {
              const std::uint32_t e = phi[t.encode(0, q)];
              if (t.l_of(e) != 0)
                throw std::logic_error("brute_search: centralizing image leaves Q");
              qtab[q] = t.q_of(e);
            }
            out.central_q_tables.push_back(std::move(qtab));
          }
        }
    }
  return out;
}

}  // namespace

std::uint64_t brute_aut_count(const Group& g) { return brute_search(g).total; }

std::vector<GAutomorphism> brute_centralizing_autos(const Group& g) {
  std::vector<GAutomorphism> out;
  for (auto& tab : brute_search(g).central_q_tables)
    out.push_back(GAutomorphism(g, std::move(tab)));
  return out;
}

}  // namespace biextra
