#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <stdexcept>

#include "biextra/group.hpp"

using namespace biextra;

TEST_CASE("descriptor grammar") {
  CHECK(parse_descriptor("B+(2)") == GroupDescriptor{2, FormType::plus});
  CHECK(parse_descriptor("B-(4)") == GroupDescriptor{4, FormType::minus});
  CHECK(parse_descriptor("B+2") == GroupDescriptor{2, FormType::plus});
  CHECK(parse_descriptor("B-6") == GroupDescriptor{6, FormType::minus});
  CHECK(parse_descriptor("B+(2)").text() == "B+(2)");
  CHECK_THROWS_AS(parse_descriptor("B+(3)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_descriptor("B+(0)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_descriptor("C+(2)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_descriptor("B*(2)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_descriptor("B+(2"), std::invalid_argument);
}

TEST_CASE("L is the symmetric group on three letters") {
  const LElement e = LElement::identity(), s = LElement::s(), t = LElement::t();
  CHECK(e.is_identity());
  CHECK(s.order() == 3);
  CHECK(t.order() == 2);
  CHECK((s * s * s).is_identity());
  CHECK((t * t).is_identity());
  CHECK(((s * t) * (s * t)).is_identity());
  CHECK(s * t != t * s);  // non-abelian
  CHECK(s.inverse() == s * s);
  CHECK(t.inverse() == t);

  std::set<int> indices;
  for (int i = 0; i < 6; ++i) {
    const LElement l = LElement::from_index(i);
    CHECK(l.index() == i);
    indices.insert((l * s).index());
  }
  CHECK(indices.size() == 6);  // right translation is a bijection
  CHECK_THROWS_AS(LElement::from_index(6), std::invalid_argument);
}

TEST_CASE("Q element packing") {
  const Group g = construct(GroupDescriptor{4, FormType::plus});
  CHECK(g.q_order() == 1024);  // 2^(2+2m)
  CHECK(g.order() == 6 * 1024);
  for (std::uint64_t i : {0ull, 5ull, 1023ull}) CHECK(g.q_at(i).raw() == i);
  CHECK_THROWS_AS(g.q_at(1024), std::out_of_range);

  const QElement x = QElement::from_triples({{GF4{1}, GF4{2}, GF4{3}}, {GF4{0}, GF4{3}, GF4{0}}});
  CHECK(x.a(0) == GF4{1});
  CHECK(x.b(0) == GF4{2});
  CHECK(x.a(1) == GF4{0});
  CHECK(x.b(1) == GF4{3});
  CHECK(x.c() == GF4{3});
  CHECK(QElement::from_triples(x.triples()) == x);
  CHECK(x.with_a(1, GF4{2}).a(1) == GF4{2});

  CHECK(g.q_identity().is_identity());
  CHECK(g.central(z_a).is_central());
  CHECK_FALSE(x.is_central());
}

TEST_CASE("central letters and the L-action on the center") {
  const Group g = construct(GroupDescriptor{2, FormType::plus});
  const QElement a = g.central(z_a), b = g.central(z_b), c = g.central(z_c);
  CHECK(g.mul(a, b) == c);  // the three letters sum to zero pairwise
  CHECK(g.act(LElement::s(), a) == b);
  CHECK(g.act(LElement::s(), b) == c);
  CHECK(g.act(LElement::s(), c) == a);
  CHECK(g.act(LElement::t(), a) == a);
  CHECK(g.act(LElement::t(), b) == c);
  CHECK(g.act(LElement::t(), c) == b);
}

TEST_CASE("action of s scales the letters") {
  const Group g = construct(GroupDescriptor{2, FormType::plus});
  const QElement x = QElement::from_triples({{GF4{1}, GF4{0}, GF4{0}}});
  const QElement xs = g.act(LElement::s(), x);
  CHECK(xs.a(0) == GF4::omega());
  CHECK(xs.b(0) == GF4{0});
  // central letter picks up the squared scale
  const QElement cen = g.central(z_a);
  CHECK(g.act(LElement::s(), cen).c() == GF4::omega2() * GF4::one());
}

TEST_CASE("alternate involutions are words in s and t") {
  // On a minus factor the involution fixing the chart acts as ts^2:
  // (1,0,0) -> conjugate -> scale, landing on (0,w2,0).
  const Group g = construct(GroupDescriptor{2, FormType::minus});
  const QElement x = QElement::from_triples({{GF4{1}, GF4{0}, GF4{0}}});
  const LElement ts2 = LElement::t() * LElement::s() * LElement::s();
  CHECK_FALSE(ts2.is_identity());
  const QElement image = g.act(ts2, x);
  CHECK(image == QElement::from_triples({{GF4{0}, GF4::omega2(), GF4{0}}}));
}

TEST_CASE("semidirect product law") {
  const Group g = construct(GroupDescriptor{2, FormType::minus});
  const GroupElement e = g.g_identity();
  CHECK(e.q.is_identity());
  CHECK(e.l.is_identity());

  // (1, l)^-1 (q, 1) (1, l) = (q^l, 1)
  for (std::uint64_t r = 0; r < g.q_order(); ++r)
    for (int li = 0; li < 6; ++li) {
      const GroupElement le{g.q_identity(), LElement::from_index(li)};
      const GroupElement x{g.q_at(r), LElement::identity()};
      const GroupElement conj = g.mul(g.mul(g.inverse(le), x), le);
      CHECK(conj.q == g.act(LElement::from_index(li), x.q));
      CHECK(conj.l.is_identity());
    }
}

TEST_CASE("Q order histogram and involution count at rank 2") {
  for (const FormType t : {FormType::plus, FormType::minus}) {
    const Group g = construct(GroupDescriptor{2, t});
    std::map<int, int> histogram;
    for (std::uint64_t r = 0; r < g.q_order(); ++r) ++histogram[g.q_element_order(g.q_at(r))];
    CHECK(histogram == std::map<int, int>{{1, 1}, {2, 27}, {4, 36}});
  }
}

TEST_CASE("the two types share Q verbatim at every rank") {
  for (const int rank : {2, 4}) {
    const Group plus = construct(GroupDescriptor{rank, FormType::plus});
    const Group minus = construct(GroupDescriptor{rank, FormType::minus});
    REQUIRE(plus.q_order() == minus.q_order());
    for (std::uint64_t i = 0; i < plus.q_order(); ++i) CHECK(plus.q_at(i) == minus.q_at(i));
    // multiplication agrees element-for-element; only the t-action differs
    for (std::uint64_t i = 0; i < plus.q_order(); i += 7)
      for (std::uint64_t j = 0; j < plus.q_order(); j += 13)
        CHECK(plus.mul(plus.q_at(i), plus.q_at(j)) == minus.mul(minus.q_at(i), minus.q_at(j)));
  }
}

TEST_CASE("complements to Q") {
  for (const FormType t : {FormType::plus, FormType::minus}) {
    const Group g = construct(GroupDescriptor{2, t});
    const auto comp = find_complement(g);
    REQUIRE(comp.size() == 6);
    std::multiset<int> orders;
    for (const GroupElement& x : comp) orders.insert(g.element_order(x));
    CHECK(orders == std::multiset<int>{1, 2, 2, 2, 3, 3});
    CHECK_THROWS_AS(find_complement(g, g.g_identity()), std::invalid_argument);
  }
}

TEST_CASE("construct validates the descriptor") {
  CHECK_THROWS_AS(construct(GroupDescriptor{3, FormType::plus}), std::invalid_argument);
  CHECK_THROWS_AS(construct(GroupDescriptor{0, FormType::plus}), std::invalid_argument);
  CHECK(construct(GroupDescriptor{2, FormType::minus}).name() == "B-(2)");
  CHECK(construct(GroupDescriptor{6, FormType::plus}).flavor_type() == FormType::plus);
  CHECK(construct(GroupDescriptor{6, FormType::minus}).minus_count() % 2 == 1);
}
