// Acceptance gate: one timed pass/fail line per criterion, exact equality
// against independently computed values throughout. Exit 0 iff all pass.
#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "biextra/aut.hpp"
#include "biextra/classify.hpp"
#include "biextra/dent_space.hpp"
#include "biextra/extraspecial.hpp"
#include "biextra/group.hpp"
#include "biextra/serialize.hpp"
#include "biextra/verify.hpp"

using namespace biextra;

namespace {

int current = 0;
bool current_ok = true;
int failures = 0;

bool expect(bool cond, const char* what) {
  if (!cond) {
    std::fprintf(stderr, "  criterion %d: %s\n", current, what);
    current_ok = false;
  }
  return cond;
}

template <typename F>
void criterion(const char* what, F&& body) {
  ++current;
  current_ok = true;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "  criterion %d: unexpected exception: %s\n", current, e.what());
    current_ok = false;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!current_ok) ++failures;
  std::printf("%s %2d  %s  (%.2fs)\n", current_ok ? "PASS" : "FAIL", current, what, secs);
  std::fflush(stdout);
}

Group make(int rank, FormType type) { return construct(GroupDescriptor{rank, type}); }

QElement triple(GF4 a, GF4 b, GF4 c) { return QElement::from_triples({{a, b, c}}); }

constexpr GF4 f0{0}, f1{1}, fw{2}, fw2{3};

}  // namespace

int main() {
  criterion("dent count is 2^m - 1 at every rank and type", [] {
    for (int m : {2, 4, 6})
      for (FormType type : {FormType::plus, FormType::minus}) {
        const DentSpace ds = DentSpace::enumerate(make(m, type));
        expect(ds.count() == (1 << m) - 1, "count != 2^m - 1");
      }
  });

  criterion("rank-2 census: kinds, representatives, classification", [] {
    const Group gp = make(2, FormType::plus);
    const DentSpace dp = DentSpace::enumerate(gp);
    expect(dp.dent(1).singular && dp.dent(2).singular && !dp.dent(3).singular, "plus kinds");
    expect(dp.dent(1).x == triple(f1, f0, f0), "plus representative 1");
    expect(dp.dent(2).x == triple(f0, f1, f0), "plus representative 2");
    expect(dp.dent(3).x == triple(f1, f1, f0), "plus representative 3");
    expect(dp.dent(1).coords.str() == "10" && dp.dent(2).coords.str() == "01" &&
               dp.dent(3).coords.str() == "11",
           "plus coordinates");
    expect(group_type(gp) == std::pair{2, FormType::plus}, "plus classification");

    const Group gm = make(2, FormType::minus);
    const DentSpace dm = DentSpace::enumerate(gm);
    expect(!dm.dent(1).singular && !dm.dent(2).singular && !dm.dent(3).singular, "minus kinds");
    expect(dm.dent(1).x == triple(f1, f1, fw), "minus representative 1");
    expect(dm.dent(2).x == triple(fw2, fw, fw), "minus representative 2");
    expect(dm.dent(3).x == triple(fw, fw2, fw), "minus representative 3");
    expect(group_type(gm) == std::pair{2, FormType::minus}, "minus classification");
  });

  criterion("commutator tables read (a, c, c, b) for every non-commuting pair, m <= 4", [] {
    const std::array<GF4, 4> accb{z_a, z_c, z_c, z_b};
    for (int m : {2, 4})
      for (FormType type : {FormType::plus, FormType::minus}) {
        const DentSpace ds = DentSpace::enumerate(make(m, type));
        int noncommuting = 0;
        bool tables_ok = true;
        for (int i = 1; i <= ds.count(); ++i)
          for (int j = i + 1; j <= ds.count(); ++j) {
            if (ds.beta(i, j) == 0) continue;
            ++noncommuting;
            tables_ok &= ds.commutator_table(i, j) == accb;
          }
        expect(tables_ok, "a table deviates from (a, c, c, b)");
        expect(noncommuting > 0, "no non-commuting pairs");
        if (m == 2) expect(noncommuting == 3, "rank-2 non-commuting pair count");
      }
  });

  criterion("polarization equals beta; alternating, nondegenerate; exhaustive, m <= 6", [] {
    for (int m : {2, 4, 6})
      for (FormType type : {FormType::plus, FormType::minus}) {
        const DentSpace ds = DentSpace::enumerate(make(m, type));
        const QuadraticSpace& sp = ds.space();
        expect(sp.nondegenerate(), "degenerate beta");
        const int n = 1 << m;
        bool alternating = true, polarization = true;
        for (int ub = 0; ub < n; ++ub) {
          const GF2Vector u(static_cast<std::uint64_t>(ub), m);
          alternating &= sp.beta(u, u) == 0;
          for (int vb = 0; vb < n; ++vb) {
            const GF2Vector v(static_cast<std::uint64_t>(vb), m);
            polarization &= (sp.eval_q(u + v) ^ sp.eval_q(u) ^ sp.eval_q(v)) == sp.beta(u, v);
          }
        }
        expect(alternating, "beta not alternating");
        expect(polarization, "polarization identity fails");
        bool dents_match = true;
        for (int i = 1; i <= ds.count(); ++i) {
          dents_match &= ds.qform(i) == sp.eval_q(ds.dent(i).coords);
          for (int j = 1; j <= ds.count(); ++j)
            dents_match &= ds.beta(i, j) == sp.beta(ds.dent(i).coords, ds.dent(j).coords);
        }
        expect(dents_match, "dent-level values disagree with the space");
      }
  });

  criterion("type multiplication over every flavor multiset of total rank <= 6", [] {
    for (int k = 1; k <= 3; ++k)
      for (int minus = 0; minus <= k; ++minus) {
        Group acc = make(2, minus > 0 ? FormType::minus : FormType::plus);
        for (int i = 1; i < k; ++i)
          acc = compose(acc, make(2, i < minus ? FormType::minus : FormType::plus));
        const FormType want = (minus % 2) ? FormType::minus : FormType::plus;
        expect(classify(acc) == GroupDescriptor{2 * k, want}, "fold classification");
        expect(acc.rank() == 2 * k, "rank additivity");
        expect(acc.q_order() == (std::uint64_t{1} << (2 + 4 * k)), "q order");
      }
    expect(classify(compose(make(2, FormType::plus), make(2, FormType::minus))) ==
               classify(compose(make(2, FormType::minus), make(2, FormType::plus))),
           "factor order changes the type");
  });

  criterion("rank-4 collapse: minus*minus = plus*plus = (4,+) with certificate; fingerprints split", [] {
    const Group mm = compose(make(2, FormType::minus), make(2, FormType::minus));
    const Group pp = compose(make(2, FormType::plus), make(2, FormType::plus));
    expect(classify(mm) == GroupDescriptor{4, FormType::plus}, "minus*minus type");
    expect(classify(pp) == GroupDescriptor{4, FormType::plus}, "plus*plus type");
    const IsomorphismCertificate cert = certify(build_isomorphism(mm, pp));
    expect(cert.verified, "certificate not verified");
    expect(cert.source == GroupDescriptor{4, FormType::plus} && cert.source == cert.target,
           "certificate endpoints");
    const Fingerprint fp = fingerprint(make(4, FormType::plus));
    const Fingerprint fm = fingerprint(make(4, FormType::minus));
    expect(fp.singular_dents == 9, "plus singular dents != 9");
    expect(fm.singular_dents == 5, "minus singular dents != 5");
    expect(fp != fm, "fingerprints do not separate the types");
    expect(fp.group_order == 6144 && fm.group_order == 6144, "group order != 6144");
  });

  criterion("centralizer of the involution: order 2^{m+1}, center of order 2, isometric quotient", [] {
    for (int m : {2, 4, 6})
      for (FormType type : {FormType::plus, FormType::minus}) {
        const Group g = make(m, type);
        const ExtraspecialSubgroup rt = ExtraspecialSubgroup::centralizer(g);
        expect(rt.order() == (std::uint64_t{1} << (m + 1)), "order != 2^{m+1}");
        expect(rt.center().size() == 2, "center order != 2");
        bool has_id = false, has_a = false;
        for (QElement z : rt.center()) {
          has_id |= z.is_identity();
          has_a |= z == g.central(z_a);
        }
        expect(has_id && has_a, "center is not {1, a}");
        const DentSpace ds = DentSpace::enumerate(g);
        expect(rt.quotient_space().type() == ds.type(), "quotient type differs");
        expect(verify_psi(ds, rt), "dent chart is not an isometry onto the quotient");
      }
    const std::map<int, int> dihedral{{1, 1}, {2, 5}, {4, 2}};
    const std::map<int, int> quaternion{{1, 1}, {2, 1}, {4, 6}};
    expect(ExtraspecialSubgroup::centralizer(make(2, FormType::plus)).order_histogram() == dihedral,
           "plus rank-2 histogram");
    expect(ExtraspecialSubgroup::centralizer(make(2, FormType::minus)).order_histogram() ==
               quaternion,
           "minus rank-2 histogram");
  });

  criterion("the two types share Q verbatim: same elements, same multiplication", [] {
    for (int m : {2, 4, 6}) {
      const Group gp = make(m, FormType::plus);
      const Group gm = make(m, FormType::minus);
      expect(gp.q_order() == gm.q_order(), "q orders differ");
      const std::uint64_t n = gp.q_order();
      bool elements_equal = true;
      for (std::uint64_t i = 0; i < n; ++i) {
        const QElement x = gp.q_at(i);
        elements_equal &= x == gm.q_at(i) && x.raw() == i;
      }
      expect(elements_equal, "element enumerations differ");
      bool mul_equal = true;
      if (m <= 4) {
        for (std::uint64_t i = 0; i < n && mul_equal; ++i)
          for (std::uint64_t j = 0; j < n; ++j)
            if (gp.mul(gp.q_at(i), gp.q_at(j)) != gm.mul(gm.q_at(i), gm.q_at(j))) {
              mul_equal = false;
              break;
            }
      } else {
        std::mt19937_64 rng(0);
        for (int trial = 0; trial < 100000 && mul_equal; ++trial) {
          const QElement x = gp.q_at(rng() % n);
          const QElement y = gp.q_at(rng() % n);
          mul_equal = gp.mul(x, y) == gm.mul(x, y);
        }
      }
      expect(mul_equal, "products differ");
    }
  });

  criterion("centralizing outer structure at m <= 4, brute-force cross-check at m = 2", [] {
    const OutReport p2 = out_structure(make(2, FormType::plus));
    const OutReport m2 = out_structure(make(2, FormType::minus));
    expect(p2 == OutReport{2, FormType::plus, 4, 2, 8, SplitStatus::yes}, "plus rank-2 report");
    expect(m2 == OutReport{2, FormType::minus, 4, 6, 24, SplitStatus::yes}, "minus rank-2 report");
    expect(brute_aut_count(make(2, FormType::plus)) == 3072, "exhaustive automorphism count, plus");
    expect(brute_aut_count(make(2, FormType::minus)) == 9216,
           "exhaustive automorphism count, minus");
    expect(p2.total_order * 384 == 3072 && m2.total_order * 384 == 9216,
           "automorphism count != |G| * |C|");
    expect(out_structure(make(4, FormType::plus)) ==
               OutReport{4, FormType::plus, 16, 72, 1152, SplitStatus::yes},
           "plus rank-4 report");
    expect(out_structure(make(4, FormType::minus)) ==
               OutReport{4, FormType::minus, 16, 120, 1920, SplitStatus::yes},
           "minus rank-4 report");
  });

  criterion("at m = 2 the kernel is the dual dent space under alpha -> alpha-hat", [] {
    for (FormType type : {FormType::plus, FormType::minus}) {
      const Group g = make(2, type);
      const DentSpace ds = DentSpace::enumerate(g);
      const ExtraspecialSubgroup rt = ExtraspecialSubgroup::centralizer(g);
      const GAutomorphism id = GAutomorphism::identity(g);
      const GAutomorphism p0 = phi_i(rt, 0);
      const GAutomorphism p1 = phi_i(rt, 1);
      const GAutomorphism p01 = p0.then(p1);
      const std::vector<GAutomorphism> kernel{id, p0, p1, p01};
      bool distinct = true;
      for (std::size_t i = 0; i < kernel.size(); ++i)
        for (std::size_t j = i + 1; j < kernel.size(); ++j) distinct &= !(kernel[i] == kernel[j]);
      expect(distinct, "kernel elements collide");
      bool involutive = true, fixes_dents = true;
      for (const GAutomorphism& x : kernel) {
        involutive &= x.then(x).is_identity();
        const std::vector<int> perm = x.dent_permutation(ds);
        for (std::size_t d = 0; d < perm.size(); ++d)
          fixes_dents &= perm[d] == static_cast<int>(d) + 1;
      }
      expect(involutive, "kernel has an element of order > 2");
      expect(fixes_dents, "kernel moves a dent");
      expect(p0.kernel_functional(ds) == GF2Vector::unit(0, 2), "first twist functional");
      expect(p1.kernel_functional(ds) == GF2Vector::unit(1, 2), "second twist functional");
      expect(id.kernel_functional(ds) == GF2Vector::zero(2), "identity functional");
      expect(p01.kernel_functional(ds) == GF2Vector(0b11, 2), "product functional");
      bool additive = true;
      std::set<std::uint64_t> functionals;
      for (const GAutomorphism& x : kernel) {
        functionals.insert(x.kernel_functional(ds).bits());
        for (const GAutomorphism& y : kernel)
          additive &=
              x.then(y).kernel_functional(ds) == x.kernel_functional(ds) + y.kernel_functional(ds);
      }
      expect(additive, "alpha -> alpha-hat is not additive");
      expect(functionals.size() == 4, "alpha -> alpha-hat is not onto the dual");
    }
  });

  criterion("axiom catalog passes for every constructed group, m <= 6", [] {
    for (int m : {2, 4, 6})
      for (FormType type : {FormType::plus, FormType::minus}) {
        const AxiomReport report = verify_axioms(make(m, type), 0);
        expect(report.all_passed(), "axiom failures");
        bool fixed_point_free = false, s3_relations = false;
        for (const CheckResult& c : report.checks) {
          if (c.name == "s acts on Q without nontrivial fixed points") fixed_point_free = c.passed;
          if (c.name == "S3 relations s^3 = t^2 = (st)^2 = 1 hold as maps on Q")
            s3_relations = c.passed;
        }
        expect(fixed_point_free, "fixed-point-freeness not certified");
        expect(s3_relations, "S3 relations not certified");
      }
  });

  criterion("rank-6 outer reports carry the cited-not-computed marker", [] {
    const OutReport p6 = out_structure(make(6, FormType::plus));
    const OutReport m6 = out_structure(make(6, FormType::minus));
    expect(p6 == OutReport{6, FormType::plus, 64, 40320, 2580480, SplitStatus::cited_not_computed},
           "plus rank-6 report");
    expect(m6 == OutReport{6, FormType::minus, 64, 51840, 3317760, SplitStatus::cited_not_computed},
           "minus rank-6 report");
    expect(split_status_str(SplitStatus::cited_not_computed) == "cited-not-computed",
           "marker text");
    const nlohmann::json j = p6;
    expect(j.at("split") == "cited-not-computed", "marker missing from JSON");
  });

  std::printf("acceptance: %d criteria, %d failed\n", current, failures);
  return failures == 0 ? 0 : 1;
}
