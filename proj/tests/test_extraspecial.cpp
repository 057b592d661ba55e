#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <stdexcept>

#include "biextra/dent_space.hpp"
#include "biextra/extraspecial.hpp"
#include "biextra/group.hpp"

using namespace biextra;

TEST_CASE("centralizer orders across ranks") {
  for (const int rank : {2, 4, 6})
    for (const FormType t : {FormType::plus, FormType::minus}) {
      const Group g = construct(GroupDescriptor{rank, t});
      const auto rt = ExtraspecialSubgroup::centralizer(g);
      CHECK(rt.order() == std::uint64_t{1} << (rank + 1));
      CHECK(rt.rank() == rank);
      CHECK(rt.center().size() == 2);
      CHECK(rt.center_generator() == g.central(z_a));
    }
}

TEST_CASE("rank-2 centralizers are dihedral and quaternion") {
  const Group plus = construct(GroupDescriptor{2, FormType::plus});
  const auto rt_plus = ExtraspecialSubgroup::centralizer(plus);
  CHECK(rt_plus.order_histogram() == std::map<int, int>{{1, 1}, {2, 5}, {4, 2}});

  const Group minus = construct(GroupDescriptor{2, FormType::minus});
  const auto rt_minus = ExtraspecialSubgroup::centralizer(minus);
  CHECK(rt_minus.order_histogram() == std::map<int, int>{{1, 1}, {2, 1}, {4, 6}});
}

TEST_CASE("membership and coordinates") {
  const Group g = construct(GroupDescriptor{4, FormType::minus});
  const auto rt = ExtraspecialSubgroup::centralizer(g);

  for (const QElement r : rt.elements()) {
    CHECK(g.act(LElement::t(), r) == r);
    CHECK(rt.contains(r));
    const GF2Vector c = rt.coords(r);
    // coords kill exactly the center
    CHECK(c.is_zero() == (r.is_identity() || r == g.central(z_a)));
    // lifting the coordinates lands in the same <a>-coset
    CHECK(g.mul(g.inverse(rt.lift(c)), r).is_central());
  }
  // lift is a section: coords(lift(v)) == v
  for (std::uint64_t v = 0; v < std::uint64_t{1} << rt.rank(); ++v) {
    const GF2Vector vec(v, rt.rank());
    CHECK(rt.coords(rt.lift(vec)) == vec);
  }
  CHECK_FALSE(rt.contains(DentSpace::enumerate(g).dent(1).y));
  CHECK_THROWS_AS(rt.coords(DentSpace::enumerate(g).dent(1).y), std::invalid_argument);
}

TEST_CASE("quotient space carries squares and commutators") {
  for (const FormType t : {FormType::plus, FormType::minus}) {
    const Group g = construct(GroupDescriptor{4, t});
    const auto rt = ExtraspecialSubgroup::centralizer(g);
    const QuadraticSpace& space = rt.quotient_space();
    CHECK(space.dim() == 4);
    CHECK(space.nondegenerate());
    CHECK(space.type() == t);
    for (const QElement x : rt.elements()) {
      CHECK(space.eval_q(rt.coords(x)) == (g.square_value(x) == z_a ? 1 : 0));
      for (const QElement y : rt.elements())
        CHECK(space.beta(rt.coords(x), rt.coords(y)) ==
              (g.commutator(x, y) == z_a ? 1 : 0));
    }
  }
}

TEST_CASE("Q factors as R times its s-conjugate") {
  for (const int rank : {2, 4})
    for (const FormType t : {FormType::plus, FormType::minus}) {
      const Group g = construct(GroupDescriptor{rank, t});
      CHECK(direct_factorization_check(g));
      const auto rt = ExtraspecialSubgroup::centralizer(g);
      for (std::uint64_t i = 0; i < g.q_order(); i += 5) {
        const auto [r1, r2] = rt.direct_factorization(g.q_at(i));
        CHECK(rt.contains(r1));
        CHECK(rt.contains(r2));
        CHECK(g.mul(r1, g.act(LElement::s(), r2)) == g.q_at(i));
      }
    }
}

TEST_CASE("dents intersect R in a four-group or a cyclic four") {
  for (const FormType t : {FormType::plus, FormType::minus}) {
    const Group g = construct(GroupDescriptor{4, t});
    const auto rt = ExtraspecialSubgroup::centralizer(g);
    const DentSpace ds = DentSpace::enumerate(g);
    for (const Dent& d : ds.dents()) {
      const auto inter = rt.dent_intersection(d);
      REQUIRE(inter.size() == 4);
      int involutions = 0;
      for (const QElement x : inter) {
        CHECK(rt.contains(x));
        if (g.q_element_order(x) <= 2) ++involutions;
      }
      // 2^2 for singular dents (all four involutions), Z_4 otherwise
      CHECK(involutions == (d.singular ? 4 : 2));
    }
  }
}

TEST_CASE("dent coordinates are an isometry onto the R quotient") {
  for (const int rank : {2, 4, 6})
    for (const FormType t : {FormType::plus, FormType::minus}) {
      const Group g = construct(GroupDescriptor{rank, t});
      const DentSpace ds = DentSpace::enumerate(g);
      const auto rt = ExtraspecialSubgroup::centralizer(g);
      CHECK(verify_psi(ds, rt));
    }
}
