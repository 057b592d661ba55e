#include "biextra/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>

#include "biextra/aut.hpp"
#include "biextra/classify.hpp"
#include "biextra/dent_space.hpp"
#include "biextra/extraspecial.hpp"
#include "biextra/quadratic_space.hpp"
#include "small_tables.hpp"

namespace biextra {

bool AxiomReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

bool SuiteReport::all_passed() const {
  return std::none_of(results.begin(), results.end(),
                      [](const SuiteResult& r) { return r.status == SuiteStatus::fail; });
}

namespace {

// Lifts of the unit vectors of the Q/Z embedding: multiplicativity against
// these forces any property that is a homomorphism in one argument.
std::vector<QElement> qbar_generators(const Group& g) {
  std::vector<QElement> gens;
  for (int i = 0; i < g.k(); ++i)
    for (const GF4 v : {GF4::one(), GF4::omega()}) {
      gens.push_back(g.q_identity().with_a(i, v));
      gens.push_back(g.q_identity().with_b(i, v));
    }
  return gens;
}

}  // namespace

AxiomReport verify_axioms(const Group& g, std::uint64_t seed) {
  AxiomReport report;
  report.group_name = g.name();
  const std::uint64_t qn = g.q_order();
  const std::vector<QElement> gens = qbar_generators(g);

  const auto add = [&](const std::string& name, bool passed, const std::string& witness = {}) {
    report.checks.push_back(CheckResult{name, passed, passed ? std::string{} : witness});
  };

  {
    bool ok = true;
    std::string wit;
    int center_size = 0;
    for (std::uint64_t r = 0; r < qn && ok; ++r) {
      const QElement x = g.q_at(r);
      bool central = true;
      for (const QElement h : gens) {
        // honest commutator x^-1 h^-1 x h rather than the closed form
        if (!g.mul(g.mul(g.inverse(x), g.inverse(h)), g.mul(x, h)).is_identity()) {
          central = false;
          break;
        }
      }
      if (central) ++center_size;
      if (central != x.is_central()) {
        ok = false;
        wit = x.str();
      }
    }
    if (ok && center_size != 4) {
      ok = false;
      wit = "center has order " + std::to_string(center_size);
    }
    add("Z(Q) is the four-group of central letters", ok, wit);
  }

  {
    const QElement a = g.central(z_a), b = g.central(z_b), c = g.central(z_c);
    const bool ok = g.act(LElement::s(), a) == b && g.act(LElement::s(), b) == c &&
                    g.act(LElement::s(), c) == a && g.act(LElement::t(), a) == a &&
                    g.act(LElement::t(), b) == c && g.act(LElement::t(), c) == b;
    add("Z(Q) is the natural L-module (s cycles, t swaps)", ok, "letter action deviates");
  }

  {
    bool ok = qn / 4 == std::uint64_t{1} << (2 * g.rank());
    std::string wit = ok ? std::string{} : "wrong order";
    for (std::uint64_t r = 0; r < qn && ok; ++r) {
      const QElement x = g.q_at(r);
      if (!g.mul(x, x).is_central()) {
        ok = false;
        wit = "noncentral square at " + x.str();
      }
      for (const QElement h : gens)
        if (!g.mul(g.mul(g.inverse(x), g.inverse(h)), g.mul(x, h)).is_central()) {
          ok = false;
          wit = "noncentral commutator at " + x.str();
          break;
        }
    }
    add("Q/Z(Q) is elementary abelian of order 2^2m", ok, wit);
  }

  {
    // Squares and commutators together must span Z(Q) = GF(2)^2.
    std::set<unsigned> values;
    for (std::uint64_t r = 0; r < qn; ++r) {
      const QElement x = g.q_at(r);
      values.insert(g.square_value(x).code());
      for (const QElement h : gens) values.insert(g.commutator(x, h).code());
    }
    unsigned span = 0;
    for (const unsigned v : values) span |= v;
    int rank = 0;
    std::vector<GF2Vector> rows;
    for (const unsigned v : values)
      if (v) rows.push_back(GF2Vector(v, 2));
    rank = gf2_rank(rows);
    add("Q is special: squares and commutators span Z(Q)", rank == 2 && span == 3,
        "spanned only " + std::to_string(values.size()) + " values");
  }

  {
    bool ok = true;
    std::string wit;
    for (std::uint64_t r = 1; r < qn; ++r) {
      const QElement x = g.q_at(r);
      if (g.act(LElement::s(), x) == x) {
        ok = false;
        wit = x.str();
        break;
      }
    }
    add("s acts on Q without nontrivial fixed points", ok, wit);
  }

  {
    bool ok = true;
    std::string wit;
    const LElement s = LElement::s(), t = LElement::t();
    for (std::uint64_t r = 0; r < qn && ok; ++r) {
      const QElement x = g.q_at(r);
      const QElement xst = g.act(t, g.act(s, x));
      if (g.act(s, g.act(s, g.act(s, x))) != x || g.act(t, g.act(t, x)) != x ||
          g.act(t, g.act(s, xst)) != x) {
        ok = false;
        wit = x.str();
      }
    }
    add("S3 relations s^3 = t^2 = (st)^2 = 1 hold as maps on Q", ok, wit);
  }

  {
    bool ok = true;
    std::string wit;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> dist(0, qn - 1);
    const bool exhaustive = g.rank() <= 4;
    const std::uint64_t rounds = exhaustive ? qn : 100000;
    for (std::uint64_t i = 0; i < rounds && ok; ++i) {
      const QElement x = g.q_at(exhaustive ? i : dist(rng));
      for (const LElement l : {LElement::s(), LElement::t()})
        for (const QElement h : gens)
          if (g.act(l, g.mul(x, h)) != g.mul(g.act(l, x), g.act(l, h))) {
            ok = false;
            wit = x.str();
            break;
          }
    }
    add("L acts by automorphisms of Q", ok, wit);
  }

  return report;
}

namespace {

class SuiteRunner {
 public:
  explicit SuiteRunner(SuiteReport& rep) : rep_(rep) {}

  void section(std::string s) { section_ = std::move(s); }

  template <typename F>
  void run(const std::string& name, F&& f) {
    const auto start = std::chrono::steady_clock::now();
    SuiteResult r{section_, name, SuiteStatus::pass, "", 0.0};
    try {
      std::string detail = f();
      if (!detail.empty()) {
        r.status = SuiteStatus::fail;
        r.detail = std::move(detail);
      }
    } catch (const std::exception& e) {
      r.status = SuiteStatus::fail;
      r.detail = e.what();
    }
    r.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    rep_.results.push_back(std::move(r));
  }

  void skip(const std::string& name, const std::string& why) {
    rep_.results.push_back(SuiteResult{section_, name, SuiteStatus::skip, why, 0.0});
  }

 private:
  SuiteReport& rep_;
  std::string section_;
};

std::string check(bool ok, const std::string& detail) { return ok ? std::string{} : detail; }

std::vector<GF2Vector> random_invertible(std::mt19937_64& rng, int m) {
  std::uniform_int_distribution<std::uint64_t> bits(1, (std::uint64_t{1} << m) - 1);
  while (true) {
    std::vector<GF2Vector> rows;
    for (int i = 0; i < m; ++i) rows.push_back(GF2Vector(bits(rng), m));
    if (gf2_rank(rows) == m) return rows;
  }
}

void algebra_checks(SuiteRunner& run, const Group& g, const DentSpace& ds, std::uint64_t seed) {
  const std::string p = g.name() + ": ";
  const QuadraticSpace& space = ds.space();
  const int m = ds.rank();

  run.run(p + "polarization identity and nondegeneracy", [&] {
    if (!space.nondegenerate()) return std::string("gram matrix is degenerate");
    for (std::uint64_t u = 1; u < (std::uint64_t{1} << m); ++u)
      for (std::uint64_t v = 1; v < (std::uint64_t{1} << m); ++v) {
        const GF2Vector x(u, m), y(v, m);
        const int pol = space.eval_q(x + y) ^ space.eval_q(x) ^ space.eval_q(y);
        if (pol != space.beta(x, y)) return std::string("polarization deviates");
      }
    return std::string{};
  });

  run.run(p + "singular count matches the type formula", [&] {
    const int d = m, half = d / 2;
    const int expected = ds.type() == FormType::plus
                             ? (1 << (d - 1)) + (1 << (half - 1)) - 1
                             : (1 << (d - 1)) - (1 << (half - 1)) - 1;
    return check(space.singular_count() == expected && ds.singular_count() == expected,
                 "count " + std::to_string(space.singular_count()));
  });

  run.run(p + "type is invariant under basis change", [&] {
    std::mt19937_64 rng(seed ^ 0xa1);
    for (int round = 0; round < 5; ++round) {
      const auto rows = random_invertible(rng, m);
      if (space.restricted(rows).type() != ds.type()) return std::string("type changed");
    }
    return std::string{};
  });

  run.run(p + "orthogonal decomposition shape", [&] {
    const auto planes = space.orthogonal_decompose();
    if (static_cast<int>(planes.size()) * 2 != m) return std::string("wrong plane count");
    std::vector<GF2Vector> all;
    int minus_planes = 0;
    for (const auto& plane : planes) {
      if (space.beta(plane.u, plane.v) != 1) return std::string("degenerate plane");
      if (space.restricted({plane.u, plane.v}).type() == FormType::minus) ++minus_planes;
      all.push_back(plane.u);
      all.push_back(plane.v);
    }
    for (std::size_t i = 0; i < planes.size(); ++i)
      for (std::size_t j = i + 1; j < planes.size(); ++j)
        for (const GF2Vector x : {planes[i].u, planes[i].v})
          for (const GF2Vector y : {planes[j].u, planes[j].v})
            if (space.beta(x, y) != 0) return std::string("planes not orthogonal");
    if (gf2_rank(all) != m) return std::string("planes do not span");
    const FormType product = minus_planes % 2 ? FormType::minus : FormType::plus;
    return check(product == ds.type(), "plane types do not multiply to the space type");
  });
}

void groupmodel_checks(SuiteRunner& run, const Group& g, std::uint64_t seed) {
  const std::string p = g.name() + ": ";
  const std::uint64_t qn = g.q_order();

  run.run(p + "multiplication is associative", [&] {
    if (g.rank() == 2) {
      const auto t = detail::SmallGroupTables::build(g);
      const std::uint32_t n = t.count();
      for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y) {
          const std::uint32_t xy = t.gmul(x, y);
          for (std::uint32_t z = 0; z < n; ++z)
            if (t.gmul(xy, z) != t.gmul(x, t.gmul(y, z)))
              return std::string("associativity fails (exhaustive)");
        }
      return std::string{};
    }
    std::mt19937_64 rng(seed ^ 0xb1);
    std::uniform_int_distribution<std::uint64_t> dq(0, qn - 1);
    std::uniform_int_distribution<int> dl(0, 5);
    for (int i = 0; i < 100000; ++i) {
      const GroupElement x{g.q_at(dq(rng)), LElement::from_index(dl(rng))};
      const GroupElement y{g.q_at(dq(rng)), LElement::from_index(dl(rng))};
      const GroupElement z{g.q_at(dq(rng)), LElement::from_index(dl(rng))};
      if (g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z)))
        return std::string("associativity fails (sampled)");
    }
    return std::string{};
  });

  run.run(p + "inverses and identity", [&] {
    std::mt19937_64 rng(seed ^ 0xb2);
    std::uniform_int_distribution<std::uint64_t> dq(0, qn - 1);
    const bool exhaustive = g.rank() <= 4;
    const std::uint64_t rounds = exhaustive ? qn : 100000;
    for (std::uint64_t i = 0; i < rounds; ++i) {
      const std::uint64_t r = exhaustive ? i : dq(rng);
      for (int l = 0; l < 6; ++l) {
        const GroupElement x{g.q_at(r), LElement::from_index(l)};
        if (g.mul(x, g.inverse(x)) != g.g_identity() ||
            g.mul(g.inverse(x), x) != g.g_identity())
          return std::string("inverse fails at " + x.q.str());
        if (g.mul(x, g.g_identity()) != x || g.mul(g.g_identity(), x) != x)
          return std::string("identity fails at " + x.q.str());
      }
    }
    return std::string{};
  });

  run.run(p + "action composes contravariantly (right action)", [&] {
    const bool exhaustive = g.rank() <= 4;
    std::mt19937_64 rng(seed ^ 0xb3);
    std::uniform_int_distribution<std::uint64_t> dq(0, qn - 1);
    const std::uint64_t rounds = exhaustive ? qn : 100000;
    for (std::uint64_t i = 0; i < rounds; ++i) {
      const QElement x = g.q_at(exhaustive ? i : dq(rng));
      for (int l1 = 0; l1 < 6; ++l1)
        for (int l2 = 0; l2 < 6; ++l2) {
          const LElement a = LElement::from_index(l1), b = LElement::from_index(l2);
          if (g.act(a * b, x) != g.act(b, g.act(a, x)))
            return std::string("action does not compose");
        }
    }
    return std::string{};
  });

  run.run(p + "conjugation by L matches the action", [&] {
    const bool exhaustive = g.rank() <= 4;
    std::mt19937_64 rng(seed ^ 0xb4);
    std::uniform_int_distribution<std::uint64_t> dq(0, qn - 1);
    const std::uint64_t rounds = exhaustive ? qn : 100000;
    for (std::uint64_t i = 0; i < rounds; ++i) {
      const QElement x = g.q_at(exhaustive ? i : dq(rng));
      for (int l = 0; l < 6; ++l) {
        const GroupElement le{g.q_identity(), LElement::from_index(l)};
        const GroupElement conj = g.mul(g.mul(g.inverse(le), GroupElement{x, LElement::identity()}), le);
        if (conj.q != g.act(LElement::from_index(l), x) || !conj.l.is_identity())
          return std::string("conjugation deviates from the action");
      }
    }
    return std::string{};
  });

  run.run(p + "squares are central and Q-orders divide 4", [&] {
    for (std::uint64_t r = 0; r < qn; ++r) {
      const QElement x = g.q_at(r);
      if (!g.mul(x, x).is_central()) return std::string("noncentral square");
      const int order = g.q_element_order(x);
      if (order != 1 && order != 2 && order != 4) return std::string("bad element order");
    }
    return std::string{};
  });

  if (g.rank() == 2) {
    run.run(p + "involution count in Q", [&] {
      int count = 0;
      for (std::uint64_t r = 0; r < qn; ++r)
        if (g.q_element_order(g.q_at(r)) <= 2) ++count;
      return check(count == 28, "got " + std::to_string(count));
    });
  }

  run.run(p + "s acts fixed-point-freely", [&] {
    for (std::uint64_t r = 1; r < qn; ++r)
      if (g.act(LElement::s(), g.q_at(r)) == g.q_at(r))
        return std::string("fixed point at " + g.q_at(r).str());
    return std::string{};
  });

  run.run(p + "canonical complement is S3 meeting Q trivially", [&] {
    const auto comp = find_complement(g);
    if (comp.size() != 6) return std::string("complement has wrong order");
    std::multiset<int> orders;
    for (const GroupElement& x : comp) {
      orders.insert(g.element_order(x));
      if (x.l.is_identity() && !(x == g.g_identity()))
        return std::string("complement meets Q nontrivially");
      for (const GroupElement& y : comp) {
        const GroupElement xy = g.mul(x, y);
        if (std::find(comp.begin(), comp.end(), xy) == comp.end())
          return std::string("complement is not closed");
      }
    }
    return check(orders == std::multiset<int>{1, 2, 2, 2, 3, 3}, "complement is not S3");
  });

  run.run(p + "conjugate complements exist throughout", [&] {
    std::mt19937_64 rng(seed ^ 0xb5);
    std::uniform_int_distribution<std::uint64_t> dq(0, qn - 1);
    std::uniform_int_distribution<int> dl(0, 5);
    const GroupElement g0{g.q_at(dq(rng)), LElement::from_index(dl(rng))};
    const GroupElement sigma{g.q_identity(), LElement::s()};
    const GroupElement moved = g.mul(g.mul(g.inverse(g0), sigma), g0);
    const auto comp = find_complement(g, moved);
    if (comp.size() != 6) return std::string("conjugated complement has wrong order");
    for (const GroupElement& x : comp)
      if (x.l.is_identity() && !(x == g.g_identity()))
        return std::string("conjugated complement meets Q nontrivially");
    return std::string{};
  });

  run.run(p + "axiom catalog passes", [&] {
    const AxiomReport rep = verify_axioms(g, seed);
    for (const CheckResult& c : rep.checks)
      if (!c.passed) return c.name + " (" + c.witness + ")";
    return std::string{};
  });
}

void dentspace_checks(SuiteRunner& run, const Group& g, const DentSpace& ds, std::uint64_t) {
  const std::string p = g.name() + ": ";
  const int m = ds.rank();

  run.run(p + "dent count is 2^m - 1", [&] {
    return check(ds.count() == (1 << m) - 1, "count " + std::to_string(ds.count()));
  });

  run.run(p + "dent sum matches representative products", [&] {
    for (int d1 = 1; d1 <= ds.count(); ++d1)
      for (int d2 = 1; d2 <= ds.count(); ++d2) {
        if (d1 == d2) continue;
        const auto coords = coset_coords(g, g.mul(ds.dent(d1).x, ds.dent(d2).x));
        if (!coords || static_cast<int>(coords->bits()) != ds.add(d1, d2))
          return std::string("sum deviates");
      }
    return std::string{};
  });

  run.run(p + "distinct dents meet exactly in Z", [&] {
    for (int d1 = 1; d1 <= ds.count(); ++d1) {
      const auto e1 = ds.elements(ds.dent(d1));
      for (int d2 = d1 + 1; d2 <= ds.count(); ++d2) {
        const auto e2 = ds.elements(ds.dent(d2));
        std::vector<QElement> common;
        std::set_intersection(e1.begin(), e1.end(), e2.begin(), e2.end(),
                              std::back_inserter(common));
        if (common.size() != 4) return std::string("intersection is not Z");
        for (const QElement x : common)
          if (!x.is_central()) return std::string("intersection leaves Z");
      }
    }
    return std::string{};
  });

  run.run(p + "dents are abelian L-invariant with uniform orders", [&] {
    for (const Dent& d : ds.dents()) {
      const auto elems = ds.elements(d);
      if (elems.size() != 16) return std::string("dent is not order 16");
      for (const QElement x : elems) {
        for (const QElement y : elems)
          if (!g.commutator(x, y).is_zero()) return std::string("dent is not abelian");
        for (int l = 0; l < 6; ++l)
          if (!std::binary_search(elems.begin(), elems.end(),
                                  g.act(LElement::from_index(l), x)))
            return std::string("dent is not L-invariant");
        if (!x.is_central() && g.q_element_order(x) != (d.singular ? 2 : 4))
          return std::string("dent order profile deviates");
      }
    }
    return std::string{};
  });

  run.run(p + "commutator tables are (a, c, c, b)", [&] {
    for (int d1 = 1; d1 <= ds.count(); ++d1)
      for (int d2 = 1; d2 <= ds.count(); ++d2) {
        if (d1 == d2 || ds.beta(d1, d2) == 0) continue;
        const auto table = ds.commutator_table(d1, d2);  // throws on deviation
        if (table[0] != z_a || table[1] != z_c || table[2] != z_c || table[3] != z_b)
          return std::string("table deviates");
      }
    return std::string{};
  });

  run.run(p + "commuting is all-or-nothing between dents", [&] {
    for (int d1 = 1; d1 <= ds.count(); ++d1)
      for (int d2 = d1 + 1; d2 <= ds.count(); ++d2) {
        const auto e1 = ds.elements(ds.dent(d1)), e2 = ds.elements(ds.dent(d2));
        const bool commuting = ds.beta(d1, d2) == 0;
        for (const QElement x : e1)
          for (const QElement y : e2) {
            const bool trivial = g.commutator(x, y).is_zero();
            if (commuting && !trivial) return std::string("commuting pair has nontrivial bracket");
            if (!commuting && !trivial && (x.is_central() || y.is_central()))
              return std::string("central element fails to commute");
            if (!commuting && trivial && !x.is_central() && !y.is_central())
              return std::string("noncentral pair of noncommuting dents commutes");
          }
      }
    return std::string{};
  });

  run.run(p + "singular profile of planes (one-or-all)", [&] {
    for (int d1 = 1; d1 <= ds.count(); ++d1)
      for (int d2 = d1 + 1; d2 <= ds.count(); ++d2) {
        const int d3 = ds.add(d1, d2);
        const int singular = (ds.qform(d1) == 0) + (ds.qform(d2) == 0) + (ds.qform(d3) == 0);
        if (ds.beta(d1, d2) == 0) {
          if (singular != 1 && singular != 3) return std::string("commuting triple profile");
        } else {
          if (singular != 0 && singular != 2) return std::string("noncommuting triple profile");
        }
      }
    return std::string{};
  });

  run.run(p + "every dent commutes with one or all of a triple", [&] {
    for (int d1 = 1; d1 <= ds.count(); ++d1)
      for (int d2 = d1 + 1; d2 <= ds.count(); ++d2) {
        const int d3 = ds.add(d1, d2);
        for (int e = 1; e <= ds.count(); ++e) {
          if (e == d1 || e == d2 || e == d3) continue;
          const int commuting =
              (ds.beta(e, d1) == 0) + (ds.beta(e, d2) == 0) + (ds.beta(e, d3) == 0);
          if (commuting != 1 && commuting != 3) return std::string("triple pattern deviates");
        }
      }
    return std::string{};
  });

  run.run(p + "representative relations", [&] {
    for (const Dent& d : ds.dents()) {
      if (g.act(LElement::t(), d.x) != d.x) return std::string("x is not t-fixed");
      if (d.y != g.act(LElement::s(), d.x)) return std::string("y deviates from x^s");
      if (d.singular) {
        if (!g.mul(g.mul(d.x, d.y), g.act(LElement::s(), d.y)).is_identity())
          return std::string("singular product relation fails");
        if (!g.mul(d.x, d.x).is_identity() || !g.mul(d.y, d.y).is_identity())
          return std::string("singular squares fail");
      } else {
        if (g.act(LElement::t(), d.y) != g.mul(g.inverse(d.x), g.inverse(d.y)))
          return std::string("nonsingular twist relation fails");
        if (g.mul(d.x, d.x) != g.central(z_a) || g.mul(d.y, d.y) != g.central(z_b))
          return std::string("nonsingular squares fail");
      }
    }
    return std::string{};
  });

  run.run(p + "unique dent automorphism", [&] {
    for (const Dent& d : ds.dents()) {
      const auto elems = ds.elements(d);
      const auto image = [&](QElement u) { return ds.unique_auto_image(d, u); };
      for (const QElement u : elems) {
        if (image(image(u)) != u) return std::string("does not square to identity");
        if (u.is_central() && image(u) != u) return std::string("moves the center");
        if (!u.is_central() && image(u) == u) return std::string("fixes a noncentral element");
        for (const QElement v : elems)
          if (image(g.mul(u, v)) != g.mul(image(u), image(v)))
            return std::string("is not multiplicative");
        for (int l = 0; l < 6; ++l) {
          const LElement le = LElement::from_index(l);
          if (image(g.act(le, u)) != g.act(le, image(u)))
            return std::string("does not commute with L");
        }
      }
    }
    return std::string{};
  });
}

void extraspecial_checks(SuiteRunner& run, const Group& g, const DentSpace& ds,
                         std::uint64_t) {
  const std::string p = g.name() + ": ";
  const int m = g.rank();
  const ExtraspecialSubgroup rt = ExtraspecialSubgroup::centralizer(g);

  run.run(p + "R is all of C_Q(t) with center <a>", [&] {
    if (rt.order() != std::uint64_t{1} << (m + 1)) return std::string("wrong order");
    std::uint64_t fixed = 0;
    for (std::uint64_t r = 0; r < g.q_order(); ++r) {
      const QElement x = g.q_at(r);
      const bool is_fixed = g.act(LElement::t(), x) == x;
      if (is_fixed) ++fixed;
      if (is_fixed != rt.contains(x)) return std::string("membership deviates");
    }
    if (fixed != rt.order()) return std::string("count deviates");
    if (rt.center().size() != 2 || rt.center_generator() != g.central(z_a))
      return std::string("center is not <a>");
    return std::string{};
  });

  run.run(p + "R squares and commutators lie in <a>", [&] {
    for (const QElement x : rt.elements()) {
      const GF4 sq = g.square_value(x);
      if (sq != GF4::zero() && sq != z_a) return std::string("square leaves <a>");
      for (const QElement y : rt.elements()) {
        const GF4 comm = g.commutator(x, y);
        if (comm != GF4::zero() && comm != z_a) return std::string("commutator leaves <a>");
      }
    }
    return std::string{};
  });

  run.run(p + "quotient form matches squares and commutators", [&] {
    const QuadraticSpace& space = rt.quotient_space();
    for (const QElement x : rt.elements()) {
      if (space.eval_q(rt.coords(x)) != (g.square_value(x) == z_a ? 1 : 0))
        return std::string("q deviates");
      for (const QElement y : rt.elements())
        if (space.beta(rt.coords(x), rt.coords(y)) != (g.commutator(x, y) == z_a ? 1 : 0))
          return std::string("beta deviates");
    }
    return std::string{};
  });

  run.run(p + "R-bar has the dent space type", [&] {
    return check(rt.quotient_space().type() == ds.type(), "types differ");
  });

  if (m == 2) {
    run.run(p + "R order histogram", [&] {
      const std::map<int, int> expected = ds.type() == FormType::plus
                                              ? std::map<int, int>{{1, 1}, {2, 5}, {4, 2}}
                                              : std::map<int, int>{{1, 1}, {2, 1}, {4, 6}};
      return check(rt.order_histogram() == expected, "histogram deviates");
    });
  }

  run.run(p + "Q factors uniquely as R * R^s", [&] {
    return check(direct_factorization_check(g), "factorization check failed");
  });

  run.run(p + "dents meet R in {1, a, x, ax}", [&] {
    for (const Dent& d : ds.dents()) {
      const auto inter = rt.dent_intersection(d);
      if (inter.size() != 4) return std::string("wrong intersection size");
      std::vector<QElement> expected = {g.q_identity(), g.central(z_a), d.x,
                                        g.mul(d.x, g.central(z_a))};
      std::sort(expected.begin(), expected.end());
      if (inter != expected) return std::string("intersection deviates");
      // Klein four-group on singular dents, cyclic otherwise.
      if (d.singular != (g.q_element_order(d.x) == 2))
        return std::string("intersection shape deviates");
    }
    return std::string{};
  });

  run.run(p + "dent coordinates give an isometry onto R-bar", [&] {
    return check(verify_psi(ds, rt), "isometry verification failed");
  });

  run.run(p + "R splits centrally along the plane decomposition", [&] {
    const auto planes = ds.space().orthogonal_decompose();
    std::vector<std::vector<QElement>> pieces;
    for (const auto& plane : planes) {
      std::vector<QElement> piece;
      for (const QElement r : rt.elements()) {
        const GF2Vector c = rt.coords(r);
        if (c.is_zero() || c == plane.u || c == plane.v || c == plane.u + plane.v)
          piece.push_back(r);
      }
      if (piece.size() != 8) return std::string("piece has wrong size");
      for (const QElement x : piece)
        for (const QElement y : piece)
          if (!std::binary_search(piece.begin(), piece.end(), g.mul(x, y)))
            return std::string("piece is not closed");
      pieces.push_back(std::move(piece));
    }
    for (std::size_t i = 0; i < pieces.size(); ++i)
      for (std::size_t j = i + 1; j < pieces.size(); ++j) {
        std::vector<QElement> common;
        std::set_intersection(pieces[i].begin(), pieces[i].end(), pieces[j].begin(),
                              pieces[j].end(), std::back_inserter(common));
        if (common.size() != 2) return std::string("pieces do not meet in <a>");
        for (const QElement x : pieces[i])
          for (const QElement y : pieces[j])
            if (!g.commutator(x, y).is_zero()) return std::string("pieces do not commute");
      }
    return std::string{};
  });
}

void compose_checks(SuiteRunner& run, int rank, std::uint64_t seed) {
  run.run("classification names round-trip", [&] {
    for (const FormType t : {FormType::plus, FormType::minus}) {
      const GroupDescriptor d{rank, t};
      if (!(classify(construct(d)) == d)) return std::string("classify deviates");
      const Group parsed = parse_expression(d.text());
      if (!(parsed == construct(d)) || !(classify(parsed) == d))
        return std::string("parse round-trip deviates");
    }
    return std::string{};
  });

  run.run("type multiplication over all flavor multisets", [&] {
    const int k = rank / 2;
    for (int minus = 0; minus <= k; ++minus) {
      Group acc = construct(GroupDescriptor{2, minus == k ? FormType::minus : FormType::plus});
      for (int i = 1; i < k; ++i)
        acc = compose(acc, construct(GroupDescriptor{
                               2, i >= k - minus ? FormType::minus : FormType::plus}));
      const FormType expected = minus % 2 ? FormType::minus : FormType::plus;
      if (!(classify(acc) == GroupDescriptor{rank, expected}))
        return std::string("product type deviates at " + std::to_string(minus) + " minus factors");
    }
    return std::string{};
  });

  if (rank >= 4) {
    run.run("star is commutative up to certified isomorphism", [&] {
      const Group a = construct(GroupDescriptor{2, FormType::plus});
      const Group b = construct(GroupDescriptor{rank - 2, FormType::minus});
      const Group ab = compose(a, b), ba = compose(b, a);
      if (!(classify(ab) == classify(ba))) return std::string("types differ");
      if (!certify(build_isomorphism(ab, ba), seed).verified)
        return std::string("certificate failed");
      return std::string{};
    });

    run.run("composites satisfy the axioms", [&] {
      const Group ab = compose(construct(GroupDescriptor{2, FormType::minus}),
                               construct(GroupDescriptor{rank - 2, FormType::minus}));
      const AxiomReport rep = verify_axioms(ab, seed);
      for (const CheckResult& c : rep.checks)
        if (!c.passed) return c.name;
      return std::string{};
    });

    run.run("factor dent spaces embed isometrically", [&] {
      const Group a = construct(GroupDescriptor{2, FormType::plus});
      const Group b = construct(GroupDescriptor{rank - 2, FormType::minus});
      return check(dent_space_isometry_check(compose(a, b), a, b), "embedding check failed");
    });
  }

  if (rank >= 6) {
    run.run("star is associative up to certified isomorphism", [&] {
      const Group a = construct(GroupDescriptor{2, FormType::plus});
      const Group b = construct(GroupDescriptor{2, FormType::minus});
      const Group c = construct(GroupDescriptor{2, FormType::minus});
      const Group left = compose(compose(a, b), c);
      const Group right = compose(a, compose(b, c));
      if (!(classify(left) == classify(right))) return std::string("types differ");
      return check(certify(build_isomorphism(left, right), seed).verified,
                   "certificate failed");
    });
  }

  run.run("decompose and compose round-trip", [&] {
    for (const FormType t : {FormType::plus, FormType::minus}) {
      const Group g = construct(GroupDescriptor{rank, t});
      const auto pieces = decompose(g);
      Group rebuilt = construct(pieces[0].descriptor);
      for (std::size_t i = 1; i < pieces.size(); ++i)
        rebuilt = compose(rebuilt, construct(pieces[i].descriptor));
      if (!(classify(rebuilt) == classify(g))) return std::string("rebuilt type deviates");
      if (!certify(build_isomorphism(g, rebuilt), seed).verified)
        return std::string("round-trip certificate failed");
    }
    return std::string{};
  });

  run.run("fingerprints separate the types", [&] {
    const Group plus = construct(GroupDescriptor{rank, FormType::plus});
    const Group minus = construct(GroupDescriptor{rank, FormType::minus});
    if (fingerprint(plus) == fingerprint(minus)) return std::string("fingerprints collide");
    if (fingerprint(plus).singular_dents == fingerprint(minus).singular_dents)
      return std::string("singular counts collide");
    if (q_order_histogram(plus) != q_order_histogram(minus))
      return std::string("Q alone should not separate the types");
    return std::string{};
  });
}

void aut_checks(SuiteRunner& run, const Group& g, const DentSpace& ds, std::uint64_t) {
  const std::string p = g.name() + ": ";
  const int m = g.rank();
  const ExtraspecialSubgroup rt = ExtraspecialSubgroup::centralizer(g);

  run.run(p + "basis twists realize the dual basis", [&] {
    for (int i = 0; i < m; ++i) {
      const GAutomorphism phi = phi_i(rt, i);
      if (phi.kernel_functional(ds) != GF2Vector::unit(i, m))
        return std::string("wrong functional");
      if (!phi.then(phi).is_identity()) return std::string("twist is not an involution");
    }
    return std::string{};
  });

  run.run(p + "kernel is the dual space of the dent space", [&] {
    std::vector<GAutomorphism> phis;
    for (int i = 0; i < m; ++i) phis.push_back(phi_i(rt, i));
    std::vector<GAutomorphism> closure = {GAutomorphism::identity(g)};
    std::set<std::vector<std::uint32_t>> seen = {closure[0].q_image()};
    for (std::size_t head = 0; head < closure.size(); ++head)
      for (const auto& phi : phis) {
        auto next = closure[head].then(phi);
        if (seen.insert(next.q_image()).second) closure.push_back(std::move(next));
      }
    if (closure.size() != std::size_t{1} << m) return std::string("kernel has wrong order");
    for (const auto& x : closure)
      for (const auto& y : closure)
        if (x.then(y).kernel_functional(ds) != x.kernel_functional(ds) + y.kernel_functional(ds))
          return std::string("functionals are not additive");
    return std::string{};
  });

  const std::vector<RtAutomorphism> autos = aut_extraspecial(rt);
  const std::uint64_t go = orthogonal_group_order(m, ds.type());

  run.run(p + "automorphism count of R", [&] {
    return check(autos.size() == (std::uint64_t{1} << m) * go,
                 "got " + std::to_string(autos.size()));
  });

  run.run(p + "restriction image is the orthogonal group", [&] {
    const QuadraticSpace& space = rt.quotient_space();
    std::set<std::vector<std::uint64_t>> bars;
    for (const auto& alpha : autos) {
      const auto rows = alpha.bar_matrix();
      std::vector<std::uint64_t> key;
      for (const GF2Vector r : rows) key.push_back(r.bits());
      bars.insert(key);
      for (std::uint64_t v = 1; v < std::uint64_t{1} << m; ++v) {
        const GF2Vector vec(v, m);
        GF2Vector image = GF2Vector::zero(m);
        for (int i = 0; i < m; ++i)
          if (vec.bit(i)) image = image + rows[static_cast<std::size_t>(i)];
        if (space.eval_q(image) != space.eval_q(vec))
          return std::string("bar map does not preserve q");
      }
    }
    if (bars.size() != go) return std::string("image order deviates");
    if (m == 2) {
      // every invertible q-preserving matrix must be realized
      for (std::uint64_t r0 = 1; r0 < 4; ++r0)
        for (std::uint64_t r1 = 1; r1 < 4; ++r1) {
          if (r0 == r1) continue;
          const std::vector<GF2Vector> rows = {GF2Vector(r0, 2), GF2Vector(r1, 2)};
          bool preserves = true;
          for (std::uint64_t v = 1; v < 4; ++v) {
            const GF2Vector vec(v, 2);
            GF2Vector image = GF2Vector::zero(2);
            for (int i = 0; i < 2; ++i)
              if (vec.bit(i)) image = image + rows[static_cast<std::size_t>(i)];
            if (space.eval_q(image) != space.eval_q(vec)) preserves = false;
          }
          if (preserves && !bars.count({rows[0].bits(), rows[1].bits()}))
            return std::string("q-preserving matrix is not realized");
        }
    } else {
      // every reflection in a nonsingular vector must be realized
      const QuadraticSpace& sp = space;
      for (std::uint64_t v = 1; v < std::uint64_t{1} << m; ++v) {
        const GF2Vector vec(v, m);
        if (sp.eval_q(vec) != 1) continue;
        std::vector<std::uint64_t> key;
        for (int i = 0; i < m; ++i) {
          GF2Vector row = GF2Vector::unit(i, m);
          if (sp.beta(row, vec)) row = row + vec;
          key.push_back(row.bits());
        }
        if (!bars.count(key)) return std::string("reflection is not realized");
      }
    }
    return std::string{};
  });

  run.run(p + "lift and restrict round-trip", [&] {
    const std::size_t limit = m == 2 ? autos.size() : 24;
    for (std::size_t i = 0; i < autos.size() && i < limit; ++i) {
      const GAutomorphism lifted = lift_to_G(rt, autos[i]);
      for (const QElement r : rt.elements())
        if (lifted.apply_q(r) != autos[i].apply(r)) return std::string("restriction deviates");
      if (lifted.is_identity() != autos[i].is_identity())
        return std::string("identity status deviates");
    }
    return std::string{};
  });

  run.run(p + "outer structure report", [&] {
    const OutReport rep = out_structure(g);
    if (rep.kernel_order != std::uint64_t{1} << m) return std::string("kernel order");
    if (rep.image_order != go) return std::string("image order");
    if (rep.total_order != rep.kernel_order * rep.image_order) return std::string("total order");
    if (rep.split != SplitStatus::yes) return std::string("expected a split extension");
    return std::string{};
  });

  if (m == 2) {
    run.run(p + "center of G and C_G(L) are trivial", [&] {
      const std::vector<GroupElement> gens = {
          GroupElement{ds.dent(1).x, LElement::identity()},
          GroupElement{ds.dent(2).x, LElement::identity()},
          GroupElement{g.q_identity(), LElement::s()},
          GroupElement{g.q_identity(), LElement::t()}};
      int central = 0, fixing_l = 0;
      for (std::uint64_t r = 0; r < g.q_order(); ++r)
        for (int l = 0; l < 6; ++l) {
          const GroupElement x{g.q_at(r), LElement::from_index(l)};
          bool commutes_gens = true;
          for (const GroupElement& h : gens)
            if (g.mul(x, h) != g.mul(h, x)) {
              commutes_gens = false;
              break;
            }
          if (commutes_gens) ++central;
          if (g.mul(x, gens[2]) == g.mul(gens[2], x) && g.mul(x, gens[3]) == g.mul(gens[3], x))
            ++fixing_l;
        }
      if (central != 1) return std::string("Z(G) is nontrivial");
      if (fixing_l != 1) return std::string("C_G(L) is nontrivial");
      return std::string{};
    });

    run.run(p + "brute-force automorphism count", [&] {
      const OutReport rep = out_structure(g);
      const std::uint64_t brute = brute_aut_count(g);
      return check(brute == g.order() * rep.total_order,
                   "got " + std::to_string(brute) + ", expected |G| * |C| = " +
                       std::to_string(g.order() * rep.total_order));
    });

    run.run(p + "centralizer of L matches Aut(R)", [&] {
      const auto central_autos = brute_centralizing_autos(g);
      if (central_autos.size() != autos.size()) return std::string("counts differ");
      std::set<std::vector<std::uint32_t>> restriction_tables, aut_tables;
      for (const auto& alpha : autos) aut_tables.insert(alpha.image());
      for (const auto& phi : central_autos) {
        std::vector<std::uint32_t> table;
        for (const QElement r : rt.elements()) {
          const QElement image = phi.apply_q(r);
          const auto& elems = rt.elements();
          const auto it = std::lower_bound(elems.begin(), elems.end(), image);
          if (it == elems.end() || *it != image)
            return std::string("restriction leaves R");
          table.push_back(static_cast<std::uint32_t>(it - elems.begin()));
        }
        restriction_tables.insert(std::move(table));
      }
      if (restriction_tables.size() != central_autos.size())
        return std::string("restriction is not injective");
      return check(restriction_tables == aut_tables,
                   "restrictions do not match the automorphisms of R");
    });
  }
}

}  // namespace

SuiteReport verify_suite(int rank, std::uint64_t seed) {
  if (rank != 2 && rank != 4 && rank != 6)
    throw std::invalid_argument("verify_suite: rank must be 2, 4 or 6");

  SuiteReport report;
  report.rank = rank;
  report.seed = seed;
  SuiteRunner run(report);

  for (const FormType t : {FormType::plus, FormType::minus}) {
    const Group g = construct(GroupDescriptor{rank, t});
    const DentSpace ds = DentSpace::enumerate(g);
    run.section("algebra");
    algebra_checks(run, g, ds, seed);
    run.section("groupmodel");
    groupmodel_checks(run, g, seed);
    run.section("dentspace");
    dentspace_checks(run, g, ds, seed);
    run.section("extraspecial");
    extraspecial_checks(run, g, ds, seed);
    if (rank <= 4) {
      run.section("autmodule");
      aut_checks(run, g, ds, seed);
    } else {
      run.section("autmodule");
      run.skip(g.name() + ": automorphism analysis", "size limit");
    }
  }

  run.section("composeclassify");
  compose_checks(run, rank, seed);

  return report;
}

}  // namespace biextra
