#include "plapclaw/rates.hpp"

#include <cmath>
#include <stdexcept>

namespace plapclaw {

namespace {

double q_factor(double q, double sub) {
  // (1 - sub/q), with the q = infinity limit equal to 1.
  if (std::isinf(q)) return 1.0;
  return 1.0 - sub / q;
}

}  // namespace

RateSet parse_rate_set(std::string_view name) {
  if (name == "Thm1.1") return RateSet::Thm1_1;
  if (name == "Thm1.2") return RateSet::Thm1_2;
  if (name == "Thm1.4") return RateSet::Thm1_4;
  if (name == "Thm1.5") return RateSet::Thm1_5;
  if (name == "Thm1.6") return RateSet::Thm1_6;
  if (name == "Thm7.1") return RateSet::Thm7_1;
  if (name == "Thm7.2") return RateSet::Thm7_2;
  if (name == "Thm7.3") return RateSet::Thm7_3;
  throw std::invalid_argument("unknown theorem selector: " + std::string(name));
}

std::string rate_set_name(RateSet set) {
  switch (set) {
    case RateSet::Thm1_1: return "Thm1.1";
    case RateSet::Thm1_2: return "Thm1.2";
    case RateSet::Thm1_4: return "Thm1.4";
    case RateSet::Thm1_5: return "Thm1.5";
    case RateSet::Thm1_6: return "Thm1.6";
    case RateSet::Thm7_1: return "Thm7.1";
    case RateSet::Thm7_2: return "Thm7.2";
    case RateSet::Thm7_3: return "Thm7.3";
  }
  return "?";
}

double gradient_branch_point() { return (2.0 + std::sqrt(22.0)) / 6.0; }

double reference_exponent_lq(RateSet set, double p, double q) {
  if (!(p > 1.0)) throw std::invalid_argument("p must exceed 1");
  if (!(q >= 1.0)) throw std::invalid_argument("q must be at least 1");
  switch (set) {
    case RateSet::Thm1_1:
    case RateSet::Thm1_4:
    case RateSet::Thm7_1:
      if (!std::isinf(q) && q < 2.0)
        throw std::invalid_argument("rate set covers q >= 2 only");
      return -q_factor(q, 2.0) / (3.0 * p + 1.0);
    case RateSet::Thm1_2:
    case RateSet::Thm1_5:
    case RateSet::Thm7_2:
      return -q_factor(q, 1.0) / (2.0 * p);
    default:
      throw std::invalid_argument("rate set has no L^q deviation exponent");
  }
}

double reference_exponent_gradient(RateSet set, double p, double r_plus_1) {
  if (!(p > 1.0)) throw std::invalid_argument("p must exceed 1");
  if (!(r_plus_1 > 1.0)) throw std::invalid_argument("gradient exponent must exceed 1");
  const double r = r_plus_1 - 1.0;
  switch (set) {
    case RateSet::Thm1_2:
      return -3.0 / (2.0 * (p + 1.0) * (3.0 * p - 2.0));
    case RateSet::Thm1_5:
      if (p < gradient_branch_point()) return -p / (p + 1.0);
      return -3.0 / (2.0 * (p + 1.0) * (3.0 * p - 2.0));
    case RateSet::Thm1_6:
      if (!(r > p)) throw std::invalid_argument("rate set needs r > p");
      if (p < gradient_branch_point())
        return -(2.0 * p * r + p * p + r) / ((3.0 * p + 1.0) * (r + 1.0));
      return -(p + 2.0 * r) / (2.0 * p * (3.0 * p - 2.0) * (r + 1.0));
    case RateSet::Thm7_2:
      return -(2.0 * p + 1.0) / (2.0 * p * (p + 1.0));
    case RateSet::Thm7_3:
      if (!(r > p)) throw std::invalid_argument("rate set needs r > p");
      return -(6.0 * p * r + 3.0 * p + 2.0 * r + 1.0) /
             (2.0 * p * (3.0 * p + 1.0) * (r + 1.0));
    default:
      throw std::invalid_argument("rate set has no gradient exponent");
  }
}

}  // namespace plapclaw
