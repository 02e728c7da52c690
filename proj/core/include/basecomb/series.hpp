#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "basecomb/bivar_poly.hpp"
#include "basecomb/types.hpp"

namespace basecomb {

/// Truncated power series c_0 + c_1 t + ... + c_{M-1} t^{M-1}.
/// Ring is Rat or BivarPoly; arithmetic drops every term of degree >= M.
template <class Ring>
class Series {
 public:
  explicit Series(std::size_t order) : coeffs_(check_order(order), Ring(0)) {}
  explicit Series(std::vector<Ring> coeffs) : coeffs_(std::move(coeffs)) { check_order(coeffs_.size()); }

  static Series one(std::size_t order) {
    Series s(order);
    s.coeffs_[0] = Ring(1);
    return s;
  }

  [[nodiscard]] std::size_t order() const noexcept { return coeffs_.size(); }
  [[nodiscard]] const Ring& operator[](std::size_t i) const { return coeffs_.at(i); }
  [[nodiscard]] Ring& operator[](std::size_t i) { return coeffs_.at(i); }
  [[nodiscard]] const std::vector<Ring>& coeffs() const noexcept { return coeffs_; }

  Series& operator+=(const Series& rhs) {
    require_same_order(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
  }

  friend Series operator+(Series a, const Series& b) { return a += b; }

  friend Series operator*(const Series& a, const Series& b) {
    a.require_same_order(b);
    const std::size_t m = a.order();
    Series out(m);
    for (std::size_t i = 0; i < m; ++i) {
      if (is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; i + j < m; ++j) {
        if (is_zero(b.coeffs_[j])) continue;
        out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return out;
  }

  Series& operator*=(const Series& rhs) { return *this = *this * rhs; }

  friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

 private:
  static std::size_t check_order(std::size_t order) {
    if (order == 0) throw invalid_order("series order must be at least 1");
    return order;
  }

  static bool is_zero(const Rat& r) { return sgn(r) == 0; }
  static bool is_zero(const BivarPoly& p) { return p.is_zero(); }

  void require_same_order(const Series& rhs) const {
    if (rhs.order() != order()) {
      throw shape_error("series orders differ: " + std::to_string(order()) + " vs " + std::to_string(rhs.order()));
    }
  }

  std::vector<Ring> coeffs_;
};

}  // namespace basecomb
