#include "basecomb/types.hpp"

#include <cmath>

namespace basecomb {

double require_finite(double value, const char* what) {
  if (!std::isfinite(value)) {
    throw numeric_error(std::string(what) + " is not finite");
  }
  return value;
}

std::uint64_t to_u64(const Nat& value, const char* what) {
  if (sgn(value) < 0) throw domain_error(std::string(what) + " must be non-negative");
  if (mpz_sizeinbase(value.get_mpz_t(), 2) > 64) {
    throw domain_error(std::string(what) + " does not fit in 64 bits");
  }
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof out, 0, 0, value.get_mpz_t());
  return out;
}

}  // namespace basecomb
