// Command-line front end: descriptor expressions in, reports out.
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "biextra/aut.hpp"
#include "biextra/classify.hpp"
#include "biextra/dent_space.hpp"
#include "biextra/extraspecial.hpp"
#include "biextra/group.hpp"
#include "biextra/serialize.hpp"
#include "biextra/verify.hpp"

namespace {

using nlohmann::json;

// Out-of-desk-scale request; mapped to the usage exit code.
struct LimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

biextra::Group build_checked(const std::string& expr, int limit) {
  biextra::Group g = biextra::parse_expression(expr);
  if (g.rank() > limit || g.rank() > 30)
    throw LimitError("size limit: rank " + std::to_string(g.rank()) +
                     " exceeds the construction limit " + std::to_string(limit) +
                     " (raise with --limit)");
  return g;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_construct(const std::string& expr, int limit, bool as_json) {
  const biextra::Group g = build_checked(expr, limit);
  if (as_json) {
    emit(json(biextra::fingerprint(g)));
    return 0;
  }
  const biextra::GroupDescriptor d = biextra::classify(g);
  const biextra::DentSpace ds = biextra::DentSpace::enumerate(g);
  std::cout << "group=" << g.name() << " rank=" << d.rank << " type="
            << biextra::form_type_char(d.type) << " order=" << g.order()
            << " q_order=" << g.q_order() << " dents=" << ds.count()
            << " singular=" << ds.singular_count() << "\n";
  return 0;
}

int cmd_type(const std::string& expr, int limit, bool as_json) {
  const biextra::Group g = build_checked(expr, limit);
  const biextra::GroupDescriptor d = biextra::classify(g);
  if (as_json) {
    emit(json(d));
    return 0;
  }
  std::cout << "rank=" << d.rank << " type=" << biextra::form_type_char(d.type) << "\n";
  return 0;
}

int cmd_dents(const std::string& expr, int limit, bool as_json) {
  const biextra::Group g = build_checked(expr, limit);
  const biextra::DentSpace ds = biextra::DentSpace::enumerate(g);
  const biextra::DentTable table = biextra::dent_table(ds);
  if (as_json) {
    emit(json(table));
    return 0;
  }
  std::cout << "group=" << table.descriptor.text() << " dents=" << ds.count()
            << " singular=" << ds.singular_count() << "\n";
  for (const biextra::DentRecord& rec : table.records)
    std::cout << rec.index << " " << (rec.singular ? "singular" : "nonsingular")
              << " q=" << rec.q_value << " coords=" << rec.coords.str()
              << " x=" << rec.x.str() << "\n";
  return 0;
}

int cmd_gram(const std::string& expr, int limit, bool as_json) {
  const biextra::Group g = build_checked(expr, limit);
  const biextra::DentSpace ds = biextra::DentSpace::enumerate(g);
  const biextra::QuadraticSpace& space = ds.space();
  const int m = space.dim();
  if (as_json) {
    json j;
    j["group"] = biextra::classify(g);
    json q = json::array(), gram = json::array();
    for (int i = 0; i < m; ++i) {
      q.push_back(space.basis_q_values().bit(i));
      json row = json::array();
      for (int k = 0; k < m; ++k) row.push_back(space.gram()[static_cast<std::size_t>(i)].bit(k));
      gram.push_back(std::move(row));
    }
    j["q"] = std::move(q);
    j["gram"] = std::move(gram);
    j["type"] = std::string(1, biextra::form_type_char(ds.type()));
    emit(j);
    return 0;
  }
  std::cout << "group=" << biextra::classify(g).text() << " rank=" << m << " type="
            << biextra::form_type_char(ds.type()) << "\n";
  std::cout << "q:";
  for (int i = 0; i < m; ++i) std::cout << " " << space.basis_q_values().bit(i);
  std::cout << "\nbeta:\n";
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < m; ++k) std::cout << (k ? " " : "") << space.gram()[static_cast<std::size_t>(i)].bit(k);
    std::cout << "\n";
  }
  return 0;
}

int cmd_compose(const std::string& expr, int limit, bool as_json) {
  const biextra::Group g = build_checked(expr, limit);
  const biextra::GroupDescriptor d = biextra::classify(g);
  if (as_json) {
    json j;
    j["expression"] = g.name();
    j["result"] = d;
    emit(j);
    return 0;
  }
  std::cout << g.name() << " -> " << d.text() << "\n";
  return 0;
}

int cmd_decompose(const std::string& expr, int limit, bool as_json) {
  const biextra::Group g = build_checked(expr, limit);
  const auto pieces = biextra::decompose(g);
  const biextra::DecompositionReport report = biextra::decomposition_report(g, pieces);
  if (as_json) {
    emit(json(report));
    return 0;
  }
  std::cout << "group=" << report.overall.text() << " pieces=" << pieces.size() << "\n";
  for (std::size_t i = 0; i < report.piece_dents.size(); ++i) {
    const auto& d = report.piece_dents[i];
    std::cout << "piece " << i + 1 << ": dents=(" << d[0] << "," << d[1] << "," << d[2]
              << ") type=" << report.piece_types[i].text() << "\n";
  }
  return 0;
}

int cmd_isom(const std::string& expr1, const std::string& expr2, int limit,
             std::uint64_t seed, bool as_json) {
  const biextra::Group g1 = build_checked(expr1, limit);
  const biextra::Group g2 = build_checked(expr2, limit);
  biextra::IsomorphismCertificate cert;
  try {
    cert = biextra::certify(biextra::build_isomorphism(g1, g2), seed);
  } catch (const std::domain_error& e) {
    // not isomorphic (type mismatch): a verification failure, not a usage error
    std::cerr << e.what() << "\n";
    return 1;
  }
  if (as_json) {
    emit(json(cert));
    return 0;
  }
  std::cout << "source=" << cert.source.text() << " target=" << cert.target.text()
            << " verified=" << (cert.verified ? "yes" : "no")
            << " exhaustive=" << (cert.exhaustive ? "yes" : "no")
            << " checked_pairs=" << cert.checked_pairs << " seed=" << cert.seed << "\n";
  return cert.verified ? 0 : 1;
}

int cmd_rt(const std::string& expr, int limit, bool as_json) {
  const biextra::Group g = build_checked(expr, limit);
  const auto rt = biextra::ExtraspecialSubgroup::centralizer(g);
  const auto histogram = rt.order_histogram();
  if (as_json) {
    json j;
    j["group"] = biextra::classify(g);
    j["order"] = rt.order();
    j["center_order"] = rt.center().size();
    j["quotient_type"] = std::string(1, biextra::form_type_char(rt.quotient_space().type()));
    json h = json::object();
    for (const auto& [order, count] : histogram) h[std::to_string(order)] = count;
    j["order_histogram"] = std::move(h);
    emit(j);
    return 0;
  }
  std::cout << "group=" << biextra::classify(g).text() << " order=" << rt.order()
            << " center_order=" << rt.center().size() << " quotient_type="
            << biextra::form_type_char(rt.quotient_space().type()) << " histogram=";
  bool first = true;
  for (const auto& [order, count] : histogram) {
    std::cout << (first ? "" : ",") << order << ":" << count;
    first = false;
  }
  std::cout << "\n";
  return 0;
}

int cmd_out(const std::string& expr, int limit, bool as_json) {
  const biextra::Group g = build_checked(expr, limit);
  const biextra::OutReport report = biextra::out_structure(g);
  if (as_json) {
    emit(json(report));
    return 0;
  }
  std::cout << "kernel=" << report.kernel_order << " image=" << report.image_order
            << " total=" << report.total_order << " split="
            << biextra::split_status_str(report.split) << "\n";
  return 0;
}

int cmd_verify(int rank, std::uint64_t seed, bool as_json) {
  const biextra::SuiteReport report = biextra::verify_suite(rank, seed);
  if (as_json) {
    emit(json(report));
    return report.all_passed() ? 0 : 1;
  }
  int passed = 0, failed = 0, skipped = 0;
  for (const biextra::SuiteResult& r : report.results) {
    switch (r.status) {
      case biextra::SuiteStatus::pass:
        ++passed;
        std::cout << "[PASS] " << r.section << ": " << r.name;
        break;
      case biextra::SuiteStatus::fail:
        ++failed;
        std::cout << "[FAIL] " << r.section << ": " << r.name << " -- " << r.detail;
        break;
      case biextra::SuiteStatus::skip:
        ++skipped;
        std::cout << "[SKIP] " << r.section << ": " << r.name << " -- skipped: " << r.detail;
        break;
    }
    if (r.status != biextra::SuiteStatus::skip) {
      char buf[32];
      std::snprintf(buf, sizeof buf, " (%.3fs)", r.seconds);
      std::cout << buf;
    }
    std::cout << "\n";
  }
  std::cout << "checks=" << report.results.size() << " passed=" << passed
            << " failed=" << failed << " skipped=" << skipped << " rank=" << report.rank
            << " seed=" << report.seed << "\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"biextraspecial group calculator"};
  app.require_subcommand(1);

  bool as_json = false;
  std::uint64_t seed = 0;
  int limit = 6;
  int rank = 2;
  std::string expr, expr2;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", as_json, "emit the JSON report schema instead of text");
    sub->add_option("--seed", seed, "seed for sampled verification (default 0)");
    sub->add_option("--limit", limit,
                    "maximum rank accepted for construction (default 6)");
  };
  const auto add_expr = [&](CLI::App* sub) {
    sub->add_option("expr", expr, "group descriptor or composition expression")->required();
    add_common(sub);
  };

  CLI::App* c_construct = app.add_subcommand("construct", "construct a group and print its summary");
  add_expr(c_construct);
  CLI::App* c_dents = app.add_subcommand("dents", "enumerate the dent space");
  add_expr(c_dents);
  CLI::App* c_gram = app.add_subcommand("gram", "print the bilinear form and basis q-values");
  add_expr(c_gram);
  CLI::App* c_type = app.add_subcommand("type", "classify an expression by rank and type");
  add_expr(c_type);
  CLI::App* c_compose = app.add_subcommand("compose", "compose an expression and classify the result");
  add_expr(c_compose);
  CLI::App* c_decompose = app.add_subcommand("decompose", "split into rank-2 pieces");
  add_expr(c_decompose);
  CLI::App* c_isom = app.add_subcommand("isom", "build and certify an isomorphism between two expressions");
  c_isom->add_option("source", expr, "source expression")->required();
  c_isom->add_option("target", expr2, "target expression")->required();
  add_common(c_isom);
  CLI::App* c_rt = app.add_subcommand("rt", "summarize the extraspecial centralizer of the involution");
  add_expr(c_rt);
  CLI::App* c_out = app.add_subcommand("out", "outer automorphism structure");
  add_expr(c_out);
  CLI::App* c_verify = app.add_subcommand("verify", "run the invariant suite for both types at a rank");
  c_verify->add_option("--rank", rank, "rank to verify (2, 4 or 6)")->required();
  add_common(c_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (c_construct->parsed()) return cmd_construct(expr, limit, as_json);
    if (c_dents->parsed()) return cmd_dents(expr, limit, as_json);
    if (c_gram->parsed()) return cmd_gram(expr, limit, as_json);
    if (c_type->parsed()) return cmd_type(expr, limit, as_json);
    if (c_compose->parsed()) return cmd_compose(expr, limit, as_json);
    if (c_decompose->parsed()) return cmd_decompose(expr, limit, as_json);
    if (c_isom->parsed()) return cmd_isom(expr, expr2, limit, seed, as_json);
    if (c_rt->parsed()) return cmd_rt(expr, limit, as_json);
    if (c_out->parsed()) return cmd_out(expr, limit, as_json);
    if (c_verify->parsed()) return cmd_verify(rank, seed, as_json);
  } catch (const LimitError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
