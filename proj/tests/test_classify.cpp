#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <string>

#include "biextra/classify.hpp"
#include "biextra/dent_space.hpp"
#include "biextra/group.hpp"

using namespace biextra;

namespace {

Group make(int rank, FormType t) { return construct(GroupDescriptor{rank, t}); }

}  // namespace

TEST_CASE("composition multiplies ranks and types") {
  const Group pp = compose(make(2, FormType::plus), make(2, FormType::plus));
  CHECK(classify(pp) == GroupDescriptor{4, FormType::plus});
  const Group pm = compose(make(2, FormType::plus), make(2, FormType::minus));
  CHECK(classify(pm) == GroupDescriptor{4, FormType::minus});
  const Group mm = compose(make(2, FormType::minus), make(2, FormType::minus));
  CHECK(classify(mm) == GroupDescriptor{4, FormType::plus});
  CHECK(pp.q_order() == 1024);  // central product: 2^(2+2*4)
  CHECK(pp.order() == 6 * 1024);

  const Group triple = compose(pm, make(2, FormType::minus));
  CHECK(classify(triple) == GroupDescriptor{6, FormType::plus});
}

TEST_CASE("expression parsing") {
  CHECK(classify(parse_expression("B+(2)")) == GroupDescriptor{2, FormType::plus});
  CHECK(classify(parse_expression("B+(2) * B-(2)")) == GroupDescriptor{4, FormType::minus});
  CHECK(classify(parse_expression("B+2*B-2*B-2")) == GroupDescriptor{6, FormType::plus});
  CHECK(parse_expression("B-(2) * B-(2)").name() == "B-(2) * B-(2)");

  const auto position_of = [](const std::string& expr) {
    try {
      (void)parse_expression(expr);
    } catch (const std::invalid_argument& e) {
      return std::string(e.what());
    }
    return std::string{};
  };
  CHECK(position_of("B+(2) * ") == "parse error at position 8: empty group descriptor");
  CHECK(position_of("* B+(2)") == "parse error at position 0: empty group descriptor");
  CHECK(position_of("B+(2) * B?(2)").substr(0, 26) == "parse error at position 8:");
}

TEST_CASE("factor dent spaces embed isometrically into the composition") {
  const Group a = make(2, FormType::plus);
  const Group b = make(2, FormType::minus);
  CHECK(dent_space_isometry_check(compose(a, b), a, b));
  const Group c = make(4, FormType::minus);
  CHECK(dent_space_isometry_check(compose(a, c), a, c));
}

TEST_CASE("decomposition into rank-2 pieces") {
  for (const int rank : {2, 4, 6})
    for (const FormType t : {FormType::plus, FormType::minus}) {
      const Group g = make(rank, t);
      const auto pieces = decompose(g);
      REQUIRE(static_cast<int>(pieces.size()) == rank / 2);
      int minus = 0;
      for (const auto& piece : pieces) {
        CHECK(piece.descriptor.rank == 2);
        CHECK(piece.dent_indices.size() == 3);
        CHECK(piece.q_elements.size() == 64);
        if (piece.descriptor.type == FormType::minus) ++minus;
      }
      CHECK((minus % 2 ? FormType::minus : FormType::plus) == t);
    }
}

TEST_CASE("isomorphism certificates at rank 4") {
  // the two squares both classify as (4, +) and are isomorphic
  const Group mm = compose(make(2, FormType::minus), make(2, FormType::minus));
  const Group pp = compose(make(2, FormType::plus), make(2, FormType::plus));
  CHECK(classify(mm) == GroupDescriptor{4, FormType::plus});
  CHECK(classify(pp) == GroupDescriptor{4, FormType::plus});

  const Isomorphism iso = build_isomorphism(mm, pp);
  const IsomorphismCertificate cert = certify(iso, 42);
  CHECK(cert.verified);
  CHECK(cert.source == GroupDescriptor{4, FormType::plus});
  CHECK(cert.target == GroupDescriptor{4, FormType::plus});
  CHECK_FALSE(cert.exhaustive);
  CHECK(cert.seed == 42);
  CHECK(cert.dent_matching.size() == 4);
  CHECK(cert.generator_images.size() == 8);

  // the map is multiplicative on a spot-check of full group elements
  const Group& from = iso.from();
  for (std::uint64_t i = 0; i < from.q_order(); i += 97)
    for (std::uint64_t j = 1; j < from.q_order(); j += 131) {
      const GroupElement x{from.q_at(i), LElement::s()};
      const GroupElement y{from.q_at(j), LElement::t()};
      CHECK(iso.map(iso.from().mul(x, y)) == iso.to().mul(iso.map(x), iso.map(y)));
    }
}

TEST_CASE("rank-2 certificates are exhaustive") {
  const IsomorphismCertificate cert =
      certify(build_isomorphism(make(2, FormType::minus), make(2, FormType::minus)));
  CHECK(cert.verified);
  CHECK(cert.exhaustive);
  CHECK(cert.checked_pairs == 384ull * 384ull);
}

TEST_CASE("mismatched types refuse an isomorphism") {
  CHECK_THROWS_AS(build_isomorphism(make(2, FormType::plus), make(2, FormType::minus)),
                  std::domain_error);
  CHECK_THROWS_AS(build_isomorphism(make(4, FormType::plus), make(2, FormType::plus)),
                  std::domain_error);
}

TEST_CASE("composition is commutative up to isomorphism") {
  const Group ab = compose(make(2, FormType::plus), make(2, FormType::minus));
  const Group ba = compose(make(2, FormType::minus), make(2, FormType::plus));
  CHECK(certify(build_isomorphism(ab, ba)).verified);
}

TEST_CASE("fingerprints separate the two rank-4 groups") {
  const Fingerprint plus = fingerprint(make(4, FormType::plus));
  const Fingerprint minus = fingerprint(make(4, FormType::minus));
  CHECK(plus.group_order == 6144);
  CHECK(minus.group_order == 6144);
  CHECK(plus.singular_dents == 9);
  CHECK(minus.singular_dents == 5);
  // The full order statistics diverge only at orders 4 and 8: involution and
  // order-3 counts agree, so the coarse invariants need the dent space.
  CHECK(plus.g_order_histogram ==
        std::map<int, int>{{1, 1}, {2, 399}, {3, 2048}, {4, 2544}, {8, 1152}});
  CHECK(minus.g_order_histogram ==
        std::map<int, int>{{1, 1}, {2, 399}, {3, 2048}, {4, 1776}, {8, 1920}});
  CHECK_FALSE(plus == minus);

  // Q alone is blind to the type: identical histograms for B+(2) and B-(2).
  CHECK(q_order_histogram(make(2, FormType::plus)) ==
        std::map<int, int>{{1, 1}, {2, 27}, {4, 36}});
  CHECK(q_order_histogram(make(2, FormType::plus)) ==
        q_order_histogram(make(2, FormType::minus)));
}

TEST_CASE("decompose-compose round trip is the identity up to isomorphism") {
  for (const FormType t : {FormType::plus, FormType::minus}) {
    const Group g = make(4, t);
    const auto pieces = decompose(g);
    Group rebuilt = construct(pieces[0].descriptor);
    for (std::size_t i = 1; i < pieces.size(); ++i)
      rebuilt = compose(rebuilt, construct(pieces[i].descriptor));
    CHECK(classify(rebuilt) == classify(g));
    CHECK(certify(build_isomorphism(g, rebuilt)).verified);
  }
}
