#include "maxsurf/elliptic.hpp"

#include <cmath>
#include <string>

namespace maxsurf {

Modulus Modulus::from_alpha(double alpha) {
  if (!std::isfinite(alpha) || alpha <= 0 || alpha >= 1)
    throw DomainError("Modulus: alpha must lie in (0, 1), got " + std::to_string(alpha));
  const double one_minus_a2 = (1 - alpha) * (1 + alpha);
  return Modulus(alpha, std::sqrt(one_minus_a2), (1 + alpha * alpha) / one_minus_a2);
}

Modulus Modulus::from_k(double k) {
  if (!std::isfinite(k) || k <= 1)
    throw DomainError("Modulus: k must exceed 1, got " + std::to_string(k));
  const double alpha = std::sqrt((k - 1) / (k + 1));
  return Modulus(alpha, std::sqrt(2 / (k + 1)), k);
}

}  // namespace maxsurf
