#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "biextra/group.hpp"

namespace biextra::detail {

// Flat multiplication tables for exhaustive sweeps over small groups.
// Group elements are encoded as l * q_order + raw.
struct SmallGroupTables {
  std::uint32_t q_order = 0;
  std::vector<std::uint16_t> qmul;  // q_order x q_order
  std::vector<std::uint16_t> qinv;  // q_order
  std::vector<std::uint16_t> act;   // 6 x q_order
  std::array<std::uint8_t, 6> linv{};
  std::array<std::array<std::uint8_t, 6>, 6> lmul{};

  static SmallGroupTables build(const Group& g) {
    SmallGroupTables t;
    if (g.q_order() > 4096) throw std::domain_error("SmallGroupTables: group too large");
    t.q_order = static_cast<std::uint32_t>(g.q_order());
    t.qmul.resize(static_cast<std::size_t>(t.q_order) * t.q_order);
    t.qinv.resize(t.q_order);
    t.act.resize(static_cast<std::size_t>(6) * t.q_order);
    for (std::uint32_t x = 0; x < t.q_order; ++x) {
      t.qinv[x] = static_cast<std::uint16_t>(g.inverse(g.q_at(x)).raw());
      for (std::uint32_t y = 0; y < t.q_order; ++y)
        t.qmul[static_cast<std::size_t>(x) * t.q_order + y] =
            static_cast<std::uint16_t>(g.mul(g.q_at(x), g.q_at(y)).raw());
    }
    for (int l = 0; l < 6; ++l) {
      const LElement le = LElement::from_index(l);
      t.linv[static_cast<std::size_t>(l)] = static_cast<std::uint8_t>(le.inverse().index());
      for (int l2 = 0; l2 < 6; ++l2)
        t.lmul[static_cast<std::size_t>(l)][static_cast<std::size_t>(l2)] =
            static_cast<std::uint8_t>((le * LElement::from_index(l2)).index());
      for (std::uint32_t x = 0; x < t.q_order; ++x)
        t.act[static_cast<std::size_t>(l) * t.q_order + x] =
            static_cast<std::uint16_t>(g.act(le, g.q_at(x)).raw());
    }
    return t;
  }

  std::uint32_t count() const { return 6 * q_order; }
  std::uint32_t encode(int l, std::uint32_t raw) const {
    return static_cast<std::uint32_t>(l) * q_order + raw;
  }
  int l_of(std::uint32_t x) const { return static_cast<int>(x / q_order); }
  std::uint32_t q_of(std::uint32_t x) const { return x % q_order; }
  std::uint32_t identity() const { return 0; }

  std::uint32_t gmul(std::uint32_t x, std::uint32_t y) const {
    const int l1 = l_of(x);
    const std::uint32_t q2 =
        act[static_cast<std::size_t>(linv[static_cast<std::size_t>(l1)]) * q_order + q_of(y)];
    return encode(lmul[static_cast<std::size_t>(l1)][static_cast<std::size_t>(l_of(y))],
                  qmul[static_cast<std::size_t>(q_of(x)) * q_order + q2]);
  }

  std::uint32_t ginv(std::uint32_t x) const {
    const int l = l_of(x);
    return encode(linv[static_cast<std::size_t>(l)],
                  act[static_cast<std::size_t>(l) * q_order + qinv[q_of(x)]]);
  }

  std::uint32_t conj(std::uint32_t x, std::uint32_t y) const {  // y^-1 x y
    return gmul(gmul(ginv(y), x), y);
  }

  int gorder(std::uint32_t x) const {
    std::uint32_t p = x;
    for (int n = 1; n <= 24; ++n) {
      if (p == identity()) return n;
      p = gmul(p, x);
    }
    throw std::logic_error("SmallGroupTables: unbounded element order");
  }
};

}  // namespace biextra::detail
