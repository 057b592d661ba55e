#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>
#include <vector>

#include "biextra/gf.hpp"
#include "biextra/quadratic_space.hpp"

using namespace biextra;

TEST_CASE("GF4 field tables") {
  const GF4 zero = GF4::zero(), one = GF4::one(), w = GF4::omega(), w2 = GF4::omega2();

  CHECK(w * w == w2);    // forced by w^2 = w + 1
  CHECK(w * w2 == one);  // w has order 3
  CHECK(zero * w == zero);
  CHECK(w + w == zero);
  CHECK(one + w == w2);

  // Frobenius is an involution and fixes the prime field
  for (unsigned c = 0; c < 4; ++c) {
    const GF4 x{c};
    CHECK(x.square().square() == x);
    CHECK(x.square() == x * x);
  }
  CHECK(one.square() == one);
  CHECK(w.square() == w2);
  CHECK(w2.square() == w);

  // inverses
  CHECK(one.inverse() == one);
  CHECK(w.inverse() == w2);
  CHECK(w2.inverse() == w);
  CHECK_THROWS_AS((void)zero.inverse(), std::domain_error);

  CHECK(w.str() == "w");
  CHECK(w2.str() == "w2");
}

TEST_CASE("GF2Vector arithmetic") {
  const GF2Vector u(0b101, 3), v(0b011, 3);
  CHECK((u + v).bits() == 0b110);
  CHECK(u.bit(0) == 1);
  CHECK(u.bit(1) == 0);
  CHECK(u.weight() == 2);
  CHECK(dot(u, v) == 1);
  CHECK(dot(u, u) == 0);  // even weight... 0b101 has weight 2
  CHECK(GF2Vector::unit(2, 3).bits() == 0b100);
  CHECK(GF2Vector::zero(3).is_zero());
  CHECK(u.with_bit(1, 1).bits() == 0b111);
  CHECK_THROWS_AS(u + GF2Vector(1, 2), std::invalid_argument);
}

TEST_CASE("rank, coordinates and solver") {
  const std::vector<GF2Vector> basis = {GF2Vector(0b011, 3), GF2Vector(0b110, 3)};
  CHECK(gf2_rank(basis) == 2);
  CHECK(gf2_rank({GF2Vector(0b011, 3), GF2Vector(0b011, 3)}) == 1);

  GF2Solver solver(basis);
  CHECK(solver.basis_size() == 2);
  const auto c = solver.coordinates(GF2Vector(0b101, 3));
  REQUIRE(c.has_value());
  CHECK(c->bits() == 0b11);  // 011 + 110 = 101
  CHECK_FALSE(solver.coordinates(GF2Vector(0b001, 3)).has_value());
  CHECK_THROWS_AS(GF2Solver({GF2Vector(1, 2), GF2Vector(1, 2)}), std::invalid_argument);
}

namespace {

QuadraticSpace hyperbolic_plane() {
  return QuadraticSpace({GF2Vector(0b10, 2), GF2Vector(0b01, 2)}, GF2Vector(0b00, 2));
}

QuadraticSpace anisotropic_plane() {
  return QuadraticSpace({GF2Vector(0b10, 2), GF2Vector(0b01, 2)}, GF2Vector(0b11, 2));
}

}  // namespace

TEST_CASE("quadratic space evaluation") {
  const QuadraticSpace h = hyperbolic_plane();
  CHECK(h.eval_q(GF2Vector(0b00, 2)) == 0);
  CHECK(h.eval_q(GF2Vector(0b01, 2)) == 0);
  CHECK(h.eval_q(GF2Vector(0b10, 2)) == 0);
  // q(e1+e2) = q(e1) + q(e2) + beta(e1,e2) = 1 in the hyperbolic plane
  CHECK(h.eval_q(GF2Vector(0b11, 2)) == 1);
  CHECK(h.singular_count() == 2);
  CHECK(h.type() == FormType::plus);

  const QuadraticSpace a = anisotropic_plane();
  CHECK(a.eval_q(GF2Vector(0b11, 2)) == 1);  // 1 + 1 + 1
  CHECK(a.singular_count() == 0);
  CHECK(a.type() == FormType::minus);

  CHECK_THROWS_AS((void)h.eval_q(GF2Vector(1, 3)), std::invalid_argument);
}

TEST_CASE("polarization identity holds in larger spaces") {
  // 4-dimensional: hyperbolic + anisotropic = minus type
  const std::vector<GF2Vector> gram = {GF2Vector(0b0010, 4), GF2Vector(0b0001, 4),
                                       GF2Vector(0b1000, 4), GF2Vector(0b0100, 4)};
  const QuadraticSpace space(gram, GF2Vector(0b1100, 4));
  for (std::uint64_t u = 0; u < 16; ++u)
    for (std::uint64_t v = 0; v < 16; ++v) {
      const GF2Vector x(u, 4), y(v, 4);
      CHECK((space.eval_q(x + y) ^ space.eval_q(x) ^ space.eval_q(y)) == space.beta(x, y));
    }
  CHECK(space.type() == FormType::minus);
  CHECK(space.singular_count() == 2 * 2 + 1);  // 2^3 - 2^1 - 1
}

TEST_CASE("orthogonal decomposition") {
  const std::vector<GF2Vector> gram = {GF2Vector(0b0010, 4), GF2Vector(0b0001, 4),
                                       GF2Vector(0b1000, 4), GF2Vector(0b0100, 4)};
  for (const std::uint64_t qbits : {0b0000ull, 0b1100ull, 0b1111ull}) {
    const QuadraticSpace space(gram, GF2Vector(qbits, 4));
    const auto planes = space.orthogonal_decompose();
    REQUIRE(planes.size() == 2);
    int minus = 0;
    for (const Plane& p : planes) {
      CHECK(space.beta(p.u, p.v) == 1);
      if (space.restricted({p.u, p.v}).type() == FormType::minus) ++minus;
    }
    for (const GF2Vector x : {planes[0].u, planes[0].v})
      for (const GF2Vector y : {planes[1].u, planes[1].v}) CHECK(space.beta(x, y) == 0);
    const FormType product = minus % 2 ? FormType::minus : FormType::plus;
    CHECK(product == space.type());
  }
}

TEST_CASE("orthogonal group orders") {
  CHECK(orthogonal_group_order(2, FormType::plus) == 2);
  CHECK(orthogonal_group_order(2, FormType::minus) == 6);
  CHECK(orthogonal_group_order(4, FormType::plus) == 72);
  CHECK(orthogonal_group_order(4, FormType::minus) == 120);
  CHECK(orthogonal_group_order(6, FormType::plus) == 40320);
  CHECK(orthogonal_group_order(6, FormType::minus) == 51840);
}
