#include "biextra/group.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

namespace biextra {

namespace {

// Right-action permutations of the letters {a, b, c} = {0, 1, 2} for the six
// normal-form words. s cycles a -> b -> c, t fixes a and swaps b, c.
constexpr std::array<std::array<std::uint8_t, 3>, 6> kPerms = {{
    {0, 1, 2},  // e
    {1, 2, 0},  // s
    {2, 0, 1},  // s2
    {0, 2, 1},  // t
    {1, 0, 2},  // ts
    {2, 1, 0},  // ts2
}};

int perm_index(const std::array<std::uint8_t, 3>& p) {
  for (int i = 0; i < 6; ++i) {
    if (kPerms[i] == p) return i;
  }
  throw std::logic_error("LElement: not a permutation of three letters");
}

}  // namespace

LElement LElement::from_index(int idx) {
  if (idx < 0 || idx >= 6) throw std::invalid_argument("LElement: index out of range");
  LElement l;
  l.idx_ = static_cast<std::uint8_t>(idx);
  return l;
}

LElement LElement::operator*(LElement other) const {
  const auto& p = kPerms[idx_];
  const auto& q = kPerms[other.idx_];
  std::array<std::uint8_t, 3> r;
  for (int i = 0; i < 3; ++i) r[i] = q[p[i]];
  return from_index(perm_index(r));
}

LElement LElement::inverse() const {
  const auto& p = kPerms[idx_];
  std::array<std::uint8_t, 3> r{};
  for (int i = 0; i < 3; ++i) r[p[i]] = static_cast<std::uint8_t>(i);
  return from_index(perm_index(r));
}

int LElement::order() const {
  if (idx_ == 0) return 1;
  return (idx_ < 3) ? 3 : 2;
}

std::string_view LElement::name() const {
  static constexpr std::array<std::string_view, 6> names = {"e", "s", "s2", "t", "ts", "ts2"};
  return names[idx_];
}

QElement::QElement(std::uint64_t bits, int k) : bits_(bits), k_(static_cast<std::uint8_t>(k)) {
  if (k < 1 || k > 15) throw std::invalid_argument("QElement: factor count out of range");
  const std::uint64_t mask = (std::uint64_t{1} << (2 + 4 * k)) - 1;
  if (bits & ~mask) throw std::invalid_argument("QElement: bits exceed layout");
}

QElement QElement::with_a(int i, GF4 v) const {
  std::uint64_t b = bits_ & ~(std::uint64_t{3} << (2 + 4 * i));
  b |= std::uint64_t{v.code()} << (2 + 4 * i);
  return QElement(b, k_);
}

QElement QElement::with_b(int i, GF4 v) const {
  std::uint64_t b = bits_ & ~(std::uint64_t{3} << (4 + 4 * i));
  b |= std::uint64_t{v.code()} << (4 + 4 * i);
  return QElement(b, k_);
}

QElement QElement::with_c(GF4 v) const { return QElement((bits_ & ~std::uint64_t{3}) | v.code(), k_); }

std::vector<std::array<GF4, 3>> QElement::triples() const {
  std::vector<std::array<GF4, 3>> out;
  for (int i = 0; i < k_; ++i) out.push_back({a(i), b(i), i == 0 ? c() : GF4::zero()});
  return out;
}

QElement QElement::from_triples(const std::vector<std::array<GF4, 3>>& triples) {
  if (triples.empty()) throw std::invalid_argument("QElement: no factors");
  QElement x = QElement::identity(static_cast<int>(triples.size()));
  GF4 central = GF4::zero();
  for (int i = 0; i < static_cast<int>(triples.size()); ++i) {
    x = x.with_a(i, triples[i][0]).with_b(i, triples[i][1]);
    central = central + triples[i][2];
  }
  return x.with_c(central);
}

std::string QElement::str() const {
  std::string out;
  for (int i = 0; i < k_; ++i) {
    out += "(" + a(i).str() + "," + b(i).str() + "," + (i == 0 ? c() : GF4::zero()).str() + ")";
  }
  return out;
}

std::vector<Flavor> GroupDescriptor::flavors() const {
  std::vector<Flavor> out(static_cast<std::size_t>(factor_count()), Flavor::plus);
  if (type == FormType::minus) out.back() = Flavor::minus;
  return out;
}

std::string GroupDescriptor::text() const {
  return std::string("B") + form_type_char(type) + "(" + std::to_string(rank) + ")";
}

GroupDescriptor parse_descriptor(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("descriptor \"" + std::string(text) + "\": " + what + " at position " +
                                std::to_string(pos));
  };
  if (pos >= text.size() || text[pos] != 'B') fail("expected 'B'");
  ++pos;
  if (pos >= text.size() || (text[pos] != '+' && text[pos] != '-')) fail("expected '+' or '-'");
  const FormType type = text[pos] == '+' ? FormType::plus : FormType::minus;
  ++pos;
  bool parenthesized = false;
  if (pos < text.size() && text[pos] == '(') {
    parenthesized = true;
    ++pos;
  }
  if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected rank digits");
  int rank = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    rank = rank * 10 + (text[pos] - '0');
    if (rank > 1000) fail("rank out of range");
    ++pos;
  }
  if (parenthesized) {
    if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
    ++pos;
  }
  if (pos != text.size()) fail("trailing characters");
  if (rank < 2 || rank % 2 != 0) fail("rank must be an even number >= 2");
  return GroupDescriptor{rank, type};
}

Group::Group(std::vector<Flavor> flavors, std::string name)
    : flavors_(std::move(flavors)), name_(std::move(name)) {
  if (flavors_.empty() || flavors_.size() > 15) throw std::invalid_argument("Group: factor count out of range");
  if (name_.empty()) {
    if (canonical_flavors()) {
      name_ = GroupDescriptor{rank(), flavor_type()}.text();
    } else {
      for (std::size_t i = 0; i < flavors_.size(); ++i) {
        if (i) name_ += " * ";
        name_ += (flavors_[i] == Flavor::plus) ? "B+(2)" : "B-(2)";
      }
    }
  }
}

bool Group::canonical_flavors() const {
  const int minus = minus_count();
  if (minus > 1) return false;
  if (minus == 1 && flavors_.back() != Flavor::minus) return false;
  return true;
}

int Group::minus_count() const {
  return static_cast<int>(std::count(flavors_.begin(), flavors_.end(), Flavor::minus));
}

FormType Group::flavor_type() const {
  return (minus_count() % 2 == 0) ? FormType::plus : FormType::minus;
}

void Group::set_origins(std::vector<FactorOrigin> origins) {
  if (origins.size() != flavors_.size()) throw std::invalid_argument("Group: origin list size mismatch");
  origins_ = std::move(origins);
}

QElement Group::q_at(std::uint64_t index) const {
  if (index >= q_order()) throw std::out_of_range("Group: q element index out of range");
  return QElement(index, k());
}

void Group::check(QElement x) const {
  if (x.factor_count() != k()) throw std::invalid_argument("Group: element from a different descriptor");
}

QElement Group::mul(QElement x, QElement y) const {
  check(x);
  check(y);
  GF4 central = x.c() + y.c();
  QElement out = q_identity();
  for (int i = 0; i < k(); ++i) {
    out = out.with_a(i, x.a(i) + y.a(i)).with_b(i, x.b(i) + y.b(i));
    central = central + x.a(i) * y.b(i);
  }
  return out.with_c(central);
}

QElement Group::inverse(QElement x) const {
  check(x);
  return x.with_c(x.c() + square_value(x));
}

GF4 Group::square_value(QElement x) const {
  check(x);
  GF4 acc = GF4::zero();
  for (int i = 0; i < k(); ++i) acc = acc + x.a(i) * x.b(i);
  return acc;
}

GF4 Group::commutator(QElement x, QElement y) const {
  check(x);
  check(y);
  GF4 acc = GF4::zero();
  for (int i = 0; i < k(); ++i) acc = acc + x.a(i) * y.b(i) + y.a(i) * x.b(i);
  return acc;
}

QElement Group::act(LElement l, QElement x) const {
  check(x);
  if (l.has_t()) {
    QElement out = q_identity();
    GF4 central = x.c().square();
    for (int i = 0; i < k(); ++i) {
      if (flavors_[i] == Flavor::plus) {
        out = out.with_a(i, x.a(i).square()).with_b(i, x.b(i).square());
      } else {
        out = out.with_a(i, x.b(i).square()).with_b(i, x.a(i).square());
        central = central + (x.a(i) * x.b(i)).square();
      }
    }
    x = out.with_c(central);
  }
  for (int n = 0; n < l.s_exponent(); ++n) {
    QElement out = q_identity();
    for (int i = 0; i < k(); ++i) {
      out = out.with_a(i, GF4::omega() * x.a(i)).with_b(i, GF4::omega() * x.b(i));
    }
    x = out.with_c(GF4::omega2() * x.c());
  }
  return x;
}

GroupElement Group::mul(GroupElement x, GroupElement y) const {
  return GroupElement{mul(x.q, act(x.l.inverse(), y.q)), x.l * y.l};
}

GroupElement Group::inverse(GroupElement x) const {
  return GroupElement{act(x.l, inverse(x.q)), x.l.inverse()};
}

int Group::q_element_order(QElement x) const {
  check(x);
  if (x.is_identity()) return 1;
  return square_value(x).is_zero() ? 2 : 4;
}

int Group::element_order(GroupElement x) const {
  GroupElement acc = x;
  int n = 1;
  while (!(acc.q.is_identity() && acc.l.is_identity())) {
    acc = mul(acc, x);
    ++n;
    if (n > 24) throw std::logic_error("Group: element order exceeds exponent bound");
  }
  return n;
}

Group construct(const GroupDescriptor& descriptor) {
  if (descriptor.rank < 2 || descriptor.rank % 2 != 0)
    throw std::invalid_argument("construct: rank must be an even number >= 2");
  return Group(descriptor.flavors(), descriptor.text());
}

std::vector<GroupElement> find_complement(const Group& g, const GroupElement& sylow3) {
  if (g.element_order(sylow3) != 3) throw std::invalid_argument("find_complement: generator must have order 3");
  const GroupElement s2 = g.mul(sylow3, sylow3);
  std::vector<GroupElement> out;
  for (std::uint64_t qi = 0; qi < g.q_order(); ++qi) {
    for (int li = 0; li < 6; ++li) {
      const GroupElement x{g.q_at(qi), LElement::from_index(li)};
      const GroupElement conj = g.mul(g.mul(g.inverse(x), sylow3), x);
      if (conj == sylow3 || conj == s2) out.push_back(x);
    }
  }
  return out;
}

std::vector<GroupElement> find_complement(const Group& g) {
  return find_complement(g, GroupElement{g.q_identity(), LElement::s()});
}

}  // namespace biextra
