#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "basecomb/types.hpp"

namespace basecomb {

/// Sparse polynomial sum c_ij x^i y^j over Rat. Zero coefficients are never
/// stored, so equality is coefficientwise map equality.
class BivarPoly {
 public:
  using Exponents = std::pair<std::uint32_t, std::uint32_t>;
  using Terms = std::map<Exponents, Rat>;

  BivarPoly() = default;
  BivarPoly(const Rat& constant);  // NOLINT: constants embed implicitly
  BivarPoly(long constant) : BivarPoly(Rat(constant)) {}  // NOLINT

  static BivarPoly monomial(std::uint32_t x_power, std::uint32_t y_power, const Rat& coeff = 1);
  static BivarPoly x() { return monomial(1, 0); }
  static BivarPoly y() { return monomial(0, 1); }

  [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  /// Coefficient of x^i y^j (zero when absent).
  [[nodiscard]] Rat coeff(std::uint32_t i, std::uint32_t j) const;

  /// p(x, y) -> p(y, x)
  [[nodiscard]] BivarPoly swapped() const;
  [[nodiscard]] BivarPoly pow(std::uint64_t e) const;

  /// Adds c x^i y^j in place.
  void add_term(std::uint32_t i, std::uint32_t j, const Rat& c);

  BivarPoly& operator+=(const BivarPoly& rhs);
  BivarPoly& operator-=(const BivarPoly& rhs);
  BivarPoly& operator*=(const BivarPoly& rhs);
  BivarPoly& operator*=(const Rat& scalar);

  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator*(BivarPoly a, const Rat& s) { return a *= s; }
  friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.terms_ == b.terms_; }

  /// Human-readable form ordered by descending x power, e.g. "x^2 + 2*x*y + y^2".
  [[nodiscard]] std::string to_string() const;

 private:
  Terms terms_;
};

}  // namespace basecomb
