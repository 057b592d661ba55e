#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace biextra {

// GF(4) = {0, 1, w, w^2} with w^2 = w + 1, stored as the 2-bit codes
// 0 -> 0, 1 -> 1, w -> 2, w^2 -> 3. Addition is XOR of codes; the code of
// a field element is also its coordinate vector over GF(2) in the basis {1, w}.
class GF4 {
public:
  constexpr GF4() = default;
  constexpr explicit GF4(unsigned code) : code_(static_cast<std::uint8_t>(code & 3u)) {}

  static constexpr GF4 zero() { return GF4(0); }
  static constexpr GF4 one() { return GF4(1); }
  static constexpr GF4 omega() { return GF4(2); }
  static constexpr GF4 omega2() { return GF4(3); }

  constexpr unsigned code() const { return code_; }
  constexpr bool is_zero() const { return code_ == 0; }

  friend constexpr GF4 operator+(GF4 x, GF4 y) { return GF4(x.code_ ^ y.code_); }
  friend constexpr GF4 operator*(GF4 x, GF4 y) { return GF4(mul_table[x.code_ * 4 + y.code_]); }
  friend constexpr bool operator==(GF4 x, GF4 y) { return x.code_ == y.code_; }
  friend constexpr bool operator!=(GF4 x, GF4 y) { return x.code_ != y.code_; }

  // Frobenius x -> x^2, the nontrivial field automorphism.
  constexpr GF4 square() const { return GF4(sqr_table[code_]); }

  constexpr GF4 inverse() const {
    if (code_ == 0) throw std::domain_error("GF4: inverse of zero");
    return GF4(inv_table[code_]);
  }

  std::string str() const {
    static const char* names[4] = {"0", "1", "w", "w2"};
    return names[code_];
  }

private:
  static constexpr std::array<std::uint8_t, 16> mul_table = {
      0, 0, 0, 0,   // 0 * _
      0, 1, 2, 3,   // 1 * _
      0, 2, 3, 1,   // w * _   (w*w = w^2, w*w^2 = 1)
      0, 3, 1, 2};  // w^2 * _
  static constexpr std::array<std::uint8_t, 4> sqr_table = {0, 1, 3, 2};
  static constexpr std::array<std::uint8_t, 4> inv_table = {0, 1, 3, 2};

  std::uint8_t code_ = 0;
};

// Vector over GF(2), at most 64 coordinates, packed into a word.
class GF2Vector {
public:
  constexpr GF2Vector() = default;
  constexpr GF2Vector(std::uint64_t bits, int dim) : bits_(bits), dim_(dim) {
    if (dim < 0 || dim > 64) throw std::invalid_argument("GF2Vector: bad dimension");
    if (dim < 64) bits_ &= (std::uint64_t{1} << dim) - 1;
  }

  static constexpr GF2Vector zero(int dim) { return GF2Vector(0, dim); }
  static constexpr GF2Vector unit(int i, int dim) { return GF2Vector(std::uint64_t{1} << i, dim); }

  constexpr int dim() const { return dim_; }
  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool is_zero() const { return bits_ == 0; }
  constexpr int bit(int i) const { return static_cast<int>((bits_ >> i) & 1u); }

  constexpr GF2Vector with_bit(int i, int value) const {
    std::uint64_t b = bits_;
    if (value)
      b |= std::uint64_t{1} << i;
    else
      b &= ~(std::uint64_t{1} << i);
    return GF2Vector(b, dim_);
  }

  friend constexpr GF2Vector operator+(GF2Vector x, GF2Vector y) {
    if (x.dim_ != y.dim_) throw std::invalid_argument("GF2Vector: dimension mismatch");
    return GF2Vector(x.bits_ ^ y.bits_, x.dim_);
  }

  friend constexpr bool operator==(GF2Vector x, GF2Vector y) {
    return x.dim_ == y.dim_ && x.bits_ == y.bits_;
  }
  friend constexpr bool operator!=(GF2Vector x, GF2Vector y) { return !(x == y); }

  // Parity of the coordinatewise product.
  friend constexpr int dot(GF2Vector x, GF2Vector y) {
    if (x.dim_ != y.dim_) throw std::invalid_argument("GF2Vector: dimension mismatch");
    return __builtin_parityll(x.bits_ & y.bits_);
  }

  int weight() const { return __builtin_popcountll(bits_); }

  std::string str() const {
    std::string out;
    for (int i = 0; i < dim_; ++i) out += bit(i) ? '1' : '0';
    return out;
  }

private:
  std::uint64_t bits_ = 0;
  int dim_ = 0;
};

// Rank of a list of vectors (destructive row reduction on a copy).
int gf2_rank(std::vector<GF2Vector> rows);

// Coordinates of v in the given (independent) basis, if v lies in its span.
// The result has dimension basis.size().
std::optional<GF2Vector> gf2_coordinates(const std::vector<GF2Vector>& basis, GF2Vector v);

// Precomputed solver for repeated coordinate queries against one basis.
class GF2Solver {
public:
  explicit GF2Solver(std::vector<GF2Vector> basis);
  int basis_size() const { return static_cast<int>(basis_.size()); }
  std::optional<GF2Vector> coordinates(GF2Vector v) const;

private:
  std::vector<GF2Vector> basis_;
  std::vector<GF2Vector> reduced_;     // row echelon rows
  std::vector<GF2Vector> combination_; // combination_[r] = coords of reduced_[r] in basis_
  std::vector<int> pivot_;             // pivot column of each reduced row
};

}  // namespace biextra
