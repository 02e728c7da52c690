#include "basecomb/bivar_poly.hpp"

#include <vector>

namespace basecomb {

BivarPoly::BivarPoly(const Rat& constant) {
  if (sgn(constant) != 0) terms_.emplace(Exponents{0, 0}, constant);
}

BivarPoly BivarPoly::monomial(std::uint32_t x_power, std::uint32_t y_power, const Rat& coeff) {
  BivarPoly p;
  p.add_term(x_power, y_power, coeff);
  return p;
}

Rat BivarPoly::coeff(std::uint32_t i, std::uint32_t j) const {
  const auto it = terms_.find({i, j});
  return it == terms_.end() ? Rat(0) : it->second;
}

void BivarPoly::add_term(std::uint32_t i, std::uint32_t j, const Rat& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

BivarPoly BivarPoly::swapped() const {
  BivarPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exponents{e.second, e.first}, c);
  return out;
}

BivarPoly BivarPoly::pow(std::uint64_t e) const {
  BivarPoly result(1);
  BivarPoly base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e.first, e.second, c);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e.first, e.second, -c);
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    }
  }
  return out;
}

BivarPoly& BivarPoly::operator*=(const BivarPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

BivarPoly& BivarPoly::operator*=(const Rat& scalar) {
  if (sgn(scalar) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

std::string BivarPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [i, j] = it->first;
    Rat c = it->second;
    if (!out.empty()) {
      out += sgn(c) < 0 ? " - " : " + ";
      if (sgn(c) < 0) c = -c;
    }
    std::vector<std::string> factors;
    if (c != 1 || (i == 0 && j == 0)) {
      factors.push_back(c == -1 && (i != 0 || j != 0) ? "-" : c.get_str());
    }
    if (i > 0) factors.push_back(i == 1 ? "x" : "x^" + std::to_string(i));
    if (j > 0) factors.push_back(j == 1 ? "y" : "y^" + std::to_string(j));
    for (std::size_t f = 0; f < factors.size(); ++f) {
      if (f > 0 && factors[f - 1] != "-") out += "*";
      out += factors[f];
    }
  }
  return out;
}

}  // namespace basecomb
