#include "biextra/quadratic_space.hpp"

#include <algorithm>

namespace biextra {

QuadraticSpace::QuadraticSpace(std::vector<GF2Vector> gram_rows, GF2Vector basis_q_values)
    : dim_(static_cast<int>(gram_rows.size())), gram_(std::move(gram_rows)), qvals_(basis_q_values) {
  if (qvals_.dim() != dim_) throw std::invalid_argument("QuadraticSpace: q values dimension mismatch");
  for (int i = 0; i < dim_; ++i) {
    if (gram_[i].dim() != dim_) throw std::invalid_argument("QuadraticSpace: gram row dimension mismatch");
    if (gram_[i].bit(i)) throw std::invalid_argument("QuadraticSpace: gram diagonal must vanish");
    for (int j = 0; j < dim_; ++j) {
      if (gram_[i].bit(j) != gram_[j].bit(i))
        throw std::invalid_argument("QuadraticSpace: gram matrix must be symmetric");
    }
  }
}

int QuadraticSpace::beta(GF2Vector u, GF2Vector v) const {
  if (u.dim() != dim_ || v.dim() != dim_)
    throw std::invalid_argument("QuadraticSpace: vector dimension mismatch");
  int acc = 0;
  for (int i = 0; i < dim_; ++i) {
    if (u.bit(i)) acc ^= dot(gram_[i], v);
  }
  return acc;
}

int QuadraticSpace::eval_q(GF2Vector v) const {
  if (v.dim() != dim_) throw std::invalid_argument("QuadraticSpace: vector dimension mismatch");
  int acc = dot(v, qvals_) & 1;
  for (int i = 0; i < dim_; ++i) {
    if (!v.bit(i)) continue;
    for (int j = i + 1; j < dim_; ++j) {
      if (v.bit(j) && gram_[i].bit(j)) acc ^= 1;
    }
  }
  return acc;
}

bool QuadraticSpace::nondegenerate() const { return gf2_rank(gram_) == dim_; }

int QuadraticSpace::singular_count() const {
  int count = 0;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << dim_); ++bits) {
    if (eval_q(GF2Vector(bits, dim_)) == 0) ++count;
  }
  return count;
}

FormType QuadraticSpace::type() const {
  if (dim_ % 2 != 0 || dim_ == 0)
    throw std::domain_error("QuadraticSpace: type needs positive even dimension");
  if (!nondegenerate()) throw std::domain_error("QuadraticSpace: degenerate form has no type");
  const int n = singular_count();
  const int half = dim_ / 2;
  const int plus_count = (1 << (dim_ - 1)) + (1 << (half - 1)) - 1;
  const int minus_count = (1 << (dim_ - 1)) - (1 << (half - 1)) - 1;
  if (n == plus_count) return FormType::plus;
  if (n == minus_count) return FormType::minus;
  throw std::domain_error("QuadraticSpace: singular count matches neither type");
}

namespace {

// Vectors of the span of `basis`, excluding zero.
std::vector<GF2Vector> span_nonzero(const std::vector<GF2Vector>& basis) {
  std::vector<GF2Vector> out;
  const int n = static_cast<int>(basis.size());
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    GF2Vector v = GF2Vector::zero(basis[0].dim());
    for (int i = 0; i < n; ++i) {
      if ((mask >> i) & 1u) v = v + basis[i];
    }
    out.push_back(v);
  }
  return out;
}

// A basis of {x in span(basis) : beta(x, u) = beta(x, v) = 0}.
std::vector<GF2Vector> perp_within(const QuadraticSpace& space, const std::vector<GF2Vector>& basis,
                                   GF2Vector u, GF2Vector v) {
  std::vector<GF2Vector> kept;
  std::vector<GF2Vector> candidates = span_nonzero(basis);
  for (GF2Vector x : candidates) {
    if (space.beta(x, u) != 0 || space.beta(x, v) != 0) continue;
    std::vector<GF2Vector> trial = kept;
    trial.push_back(x);
    if (gf2_rank(trial) == static_cast<int>(trial.size())) kept.push_back(x);
  }
  return kept;
}

}  // namespace

std::vector<Plane> QuadraticSpace::orthogonal_decompose() const {
  if (dim_ % 2 != 0) throw std::domain_error("QuadraticSpace: odd dimension cannot split into planes");
  if (!nondegenerate()) throw std::domain_error("QuadraticSpace: degenerate form");

  std::vector<Plane> planes;
  std::vector<GF2Vector> current;
  for (int i = 0; i < dim_; ++i) current.push_back(GF2Vector::unit(i, dim_));

  while (!current.empty()) {
    std::vector<GF2Vector> vectors = span_nonzero(current);
    GF2Vector v = GF2Vector::zero(dim_);
    bool have_singular = false;
    for (GF2Vector x : vectors) {
      if (eval_q(x) == 0) {
        v = x;
        have_singular = true;
        break;
      }
    }
    if (have_singular) {
      GF2Vector w = GF2Vector::zero(dim_);
      bool have_partner = false;
      for (GF2Vector x : vectors) {
        if (beta(v, x) == 1) {
          w = x;
          have_partner = true;
          break;
        }
      }
      if (!have_partner) throw std::domain_error("QuadraticSpace: radical vector in decomposition");
      if (eval_q(w) == 1) w = w + v;  // q(w + v) = q(w) + q(v) + beta(v, w) = 0
      planes.push_back(Plane{v, w});
      current = perp_within(*this, current, v, w);
    } else {
      if (current.size() != 2)
        throw std::domain_error("QuadraticSpace: anisotropic part of dimension != 2");
      planes.push_back(Plane{current[0], current[1]});
      current.clear();
    }
  }
  return planes;
}

QuadraticSpace QuadraticSpace::restricted(const std::vector<GF2Vector>& basis) const {
  const int n = static_cast<int>(basis.size());
  if (gf2_rank(basis) != n) throw std::invalid_argument("QuadraticSpace: restriction basis is dependent");
  std::vector<GF2Vector> rows;
  GF2Vector qv = GF2Vector::zero(n);
  for (int i = 0; i < n; ++i) {
    GF2Vector row = GF2Vector::zero(n);
    for (int j = 0; j < n; ++j) row = row.with_bit(j, beta(basis[i], basis[j]));
    rows.push_back(row);
    qv = qv.with_bit(i, eval_q(basis[i]));
  }
  return QuadraticSpace(std::move(rows), qv);
}

std::uint64_t orthogonal_group_order(int m, FormType eps) {
  if (m < 2 || m % 2 != 0) throw std::invalid_argument("orthogonal_group_order: even m >= 2 required");
  const int k = m / 2;
  const std::uint64_t qk = std::uint64_t{1} << k;
  std::uint64_t order = 2;
  order <<= k * (k - 1);  // * 2^{k(k-1)}
  order *= (eps == FormType::plus) ? (qk - 1) : (qk + 1);
  for (int i = 1; i <= k - 1; ++i) order *= (std::uint64_t{1} << (2 * i)) - 1;
  return order;
}

}  // namespace biextra
