#include "biextra/serialize.hpp"

#include <stdexcept>
#include <string>

namespace biextra {

namespace {

std::string type_str(FormType t) { return std::string(1, form_type_char(t)); }

FormType parse_type(const std::string& s) {
  if (s == "+") return FormType::plus;
  if (s == "-") return FormType::minus;
  throw std::invalid_argument("bad form type \"" + s + "\"");
}

SplitStatus parse_split(const std::string& s) {
  for (SplitStatus v : {SplitStatus::yes, SplitStatus::no, SplitStatus::cited_not_computed})
    if (split_status_str(v) == s) return v;
  throw std::invalid_argument("bad split status \"" + s + "\"");
}

std::string status_str(SuiteStatus s) {
  switch (s) {
    case SuiteStatus::pass: return "pass";
    case SuiteStatus::fail: return "fail";
    case SuiteStatus::skip: return "skip";
  }
  throw std::logic_error("bad suite status");
}

SuiteStatus parse_status(const std::string& s) {
  for (SuiteStatus v : {SuiteStatus::pass, SuiteStatus::fail, SuiteStatus::skip})
    if (status_str(v) == s) return v;
  throw std::invalid_argument("bad suite status \"" + s + "\"");
}

}  // namespace

DentTable dent_table(const DentSpace& ds) {
  DentTable table;
  table.descriptor = GroupDescriptor{ds.rank(), ds.type()};
  for (const Dent& d : ds.dents())
    table.records.push_back(DentRecord{d.index, d.x, d.singular, ds.qform(d.index), d.coords});
  return table;
}

DecompositionReport decomposition_report(const Group& g, const std::vector<RankTwoPiece>& pieces) {
  DecompositionReport rep;
  rep.overall = classify(g);
  for (const RankTwoPiece& p : pieces) {
    rep.piece_dents.push_back({p.dent_indices[0], p.dent_indices[1], p.dent_indices[2]});
    rep.piece_types.push_back(p.descriptor);
  }
  return rep;
}

void to_json(nlohmann::json& j, const GroupDescriptor& x) {
  j = nlohmann::json{{"rank", x.rank}, {"type", type_str(x.type)}};
}

void from_json(const nlohmann::json& j, GroupDescriptor& x) {
  x.rank = j.at("rank").get<int>();
  x.type = parse_type(j.at("type").get<std::string>());
}

void to_json(nlohmann::json& j, const QElement& x) {
  j = nlohmann::json::array();
  for (const auto& t : x.triples())
    j.push_back({t[0].code(), t[1].code(), t[2].code()});
}

void from_json(const nlohmann::json& j, QElement& x) {
  std::vector<std::array<GF4, 3>> triples;
  for (const auto& t : j)
    triples.push_back({GF4(t.at(0).get<unsigned>()), GF4(t.at(1).get<unsigned>()),
                       GF4(t.at(2).get<unsigned>())});
  x = QElement::from_triples(triples);
}

namespace {

nlohmann::json coords_json(GF2Vector v) {
  nlohmann::json j = nlohmann::json::array();
  for (int i = 0; i < v.dim(); ++i) j.push_back(v.bit(i));
  return j;
}

GF2Vector coords_parse(const nlohmann::json& j) {
  GF2Vector v = GF2Vector::zero(static_cast<int>(j.size()));
  for (int i = 0; i < v.dim(); ++i)
    v = v.with_bit(i, j.at(static_cast<std::size_t>(i)).get<int>());
  return v;
}

}  // namespace

void to_json(nlohmann::json& j, const DentRecord& x) {
  j = nlohmann::json{{"index", x.index},
                     {"x", x.x},
                     {"kind", x.singular ? "singular" : "nonsingular"},
                     {"q", x.q_value},
                     {"coords", coords_json(x.coords)}};
}

void from_json(const nlohmann::json& j, DentRecord& x) {
  x.index = j.at("index").get<int>();
  x.x = j.at("x").get<QElement>();
  const std::string kind = j.at("kind").get<std::string>();
  if (kind != "singular" && kind != "nonsingular")
    throw std::invalid_argument("bad dent kind \"" + kind + "\"");
  x.singular = kind == "singular";
  x.q_value = j.at("q").get<int>();
  x.coords = coords_parse(j.at("coords"));
}

void to_json(nlohmann::json& j, const DentTable& x) {
  j = nlohmann::json{{"group", x.descriptor}, {"dents", x.records}};
}

void from_json(const nlohmann::json& j, DentTable& x) {
  x.descriptor = j.at("group").get<GroupDescriptor>();
  x.records = j.at("dents").get<std::vector<DentRecord>>();
}

void to_json(nlohmann::json& j, const DecompositionReport& x) {
  nlohmann::json pieces = nlohmann::json::array();
  for (std::size_t i = 0; i < x.piece_dents.size(); ++i)
    pieces.push_back({{"dents", x.piece_dents[i]}, {"type", x.piece_types[i]}});
  j = nlohmann::json{{"group", x.overall}, {"pieces", pieces}};
}

void from_json(const nlohmann::json& j, DecompositionReport& x) {
  x.overall = j.at("group").get<GroupDescriptor>();
  x.piece_dents.clear();
  x.piece_types.clear();
  for (const auto& p : j.at("pieces")) {
    x.piece_dents.push_back(p.at("dents").get<std::array<int, 3>>());
    x.piece_types.push_back(p.at("type").get<GroupDescriptor>());
  }
}

void to_json(nlohmann::json& j, const IsomorphismCertificate& x) {
  nlohmann::json images = nlohmann::json::array();
  for (const auto& [from, to] : x.generator_images)
    images.push_back({{"from", from}, {"to", to}});
  j = nlohmann::json{{"source", x.source},
                     {"target", x.target},
                     {"dent_matching", x.dent_matching},
                     {"generator_images", images},
                     {"verified", x.verified},
                     {"exhaustive", x.exhaustive},
                     {"checked_pairs", x.checked_pairs},
                     {"seed", x.seed}};
}

void from_json(const nlohmann::json& j, IsomorphismCertificate& x) {
  x.source = j.at("source").get<GroupDescriptor>();
  x.target = j.at("target").get<GroupDescriptor>();
  x.dent_matching = j.at("dent_matching").get<std::vector<std::pair<int, int>>>();
  x.generator_images.clear();
  for (const auto& p : j.at("generator_images"))
    x.generator_images.push_back({p.at("from").get<QElement>(), p.at("to").get<QElement>()});
  x.verified = j.at("verified").get<bool>();
  x.exhaustive = j.at("exhaustive").get<bool>();
  x.checked_pairs = j.at("checked_pairs").get<std::uint64_t>();
  x.seed = j.at("seed").get<std::uint64_t>();
}

void to_json(nlohmann::json& j, const OutReport& x) {
  j = nlohmann::json{{"m", x.rank},
                     {"eps", type_str(x.type)},
                     {"kernel_order", x.kernel_order},
                     {"image_order", x.image_order},
                     {"total_order", x.total_order},
                     {"split", split_status_str(x.split)}};
}

void from_json(const nlohmann::json& j, OutReport& x) {
  x.rank = j.at("m").get<int>();
  x.type = parse_type(j.at("eps").get<std::string>());
  x.kernel_order = j.at("kernel_order").get<std::uint64_t>();
  x.image_order = j.at("image_order").get<std::uint64_t>();
  x.total_order = j.at("total_order").get<std::uint64_t>();
  x.split = parse_split(j.at("split").get<std::string>());
}

void to_json(nlohmann::json& j, const Fingerprint& x) {
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [order, count] : x.g_order_histogram) hist[std::to_string(order)] = count;
  j = nlohmann::json{{"group_order", x.group_order},
                     {"rank", x.rank},
                     {"type", type_str(x.type)},
                     {"singular_dents", x.singular_dents},
                     {"order_histogram", hist}};
}

void from_json(const nlohmann::json& j, Fingerprint& x) {
  x.group_order = j.at("group_order").get<std::uint64_t>();
  x.rank = j.at("rank").get<int>();
  x.type = parse_type(j.at("type").get<std::string>());
  x.singular_dents = j.at("singular_dents").get<int>();
  x.g_order_histogram.clear();
  for (const auto& [key, value] : j.at("order_histogram").items())
    x.g_order_histogram[std::stoi(key)] = value.get<int>();
}

void to_json(nlohmann::json& j, const CheckResult& x) {
  j = nlohmann::json{{"name", x.name}, {"passed", x.passed}, {"witness", x.witness}};
}

void from_json(const nlohmann::json& j, CheckResult& x) {
  x.name = j.at("name").get<std::string>();
  x.passed = j.at("passed").get<bool>();
  x.witness = j.at("witness").get<std::string>();
}

void to_json(nlohmann::json& j, const AxiomReport& x) {
  j = nlohmann::json{{"group", x.group_name}, {"checks", x.checks}};
}

void from_json(const nlohmann::json& j, AxiomReport& x) {
  x.group_name = j.at("group").get<std::string>();
  x.checks = j.at("checks").get<std::vector<CheckResult>>();
}

void to_json(nlohmann::json& j, const SuiteResult& x) {
  j = nlohmann::json{{"section", x.section},
                     {"name", x.name},
                     {"status", status_str(x.status)},
                     {"detail", x.detail},
                     {"seconds", x.seconds}};
}

void from_json(const nlohmann::json& j, SuiteResult& x) {
  x.section = j.at("section").get<std::string>();
  x.name = j.at("name").get<std::string>();
  x.status = parse_status(j.at("status").get<std::string>());
  x.detail = j.at("detail").get<std::string>();
  x.seconds = j.at("seconds").get<double>();
}

void to_json(nlohmann::json& j, const SuiteReport& x) {
  j = nlohmann::json{{"rank", x.rank}, {"seed", x.seed}, {"results", x.results}};
}

void from_json(const nlohmann::json& j, SuiteReport& x) {
  x.rank = j.at("rank").get<int>();
  x.seed = j.at("seed").get<std::uint64_t>();
  x.results = j.at("results").get<std::vector<SuiteResult>>();
}

}  // namespace biextra
