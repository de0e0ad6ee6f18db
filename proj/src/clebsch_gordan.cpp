#include "braket/clebsch_gordan.hpp"

#include <cmath>
#include <cstdlib>
#include <string>
#include <utility>
#include <algorithm>

#include "braket/errors.hpp"

namespace braket {

namespace mp = boost::multiprecision;

HalfInt HalfInt::from_real(double value) {
  const double twice = 2.0 * value;
  const double rounded = std::round(twice);
  if (!std::isfinite(value) || std::abs(twice - rounded) > 1e-9 || std::abs(rounded) > 1e6) {
    throw Error(ErrorCode::InvalidWeights, std::to_string(value) + " is not a half-integer");
  }
  return {static_cast<int>(rounded)};
}

double CGValue::value() const {
  return sign * std::sqrt(squared.convert_to<double>());
}

std::string CGValue::squared_string() const {
  if (mp::denominator(squared) == 1) return mp::numerator(squared).str();
  return mp::numerator(squared).str() + "/" + mp::denominator(squared).str();
}

namespace {

mp::cpp_int factorial(int n) {
  mp::cpp_int f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

bool same_parity(int a, int b) { return ((a - b) % 2) == 0; }

void check_projection(HalfInt j, HalfInt m, const char* name) {
  if (j.twice < 0 || std::abs(m.twice) > j.twice || !same_parity(j.twice, m.twice)) {
    throw Error(ErrorCode::InvalidWeights, std::string(name) + ": projection " +
                                               std::to_string(m.value()) + " invalid for weight " +
                                               std::to_string(j.value()));
  }
}

}  // namespace

CGValue clebsch_gordan(HalfInt j1, HalfInt l1, HalfInt j2, HalfInt l2, HalfInt s, HalfInt sigma) {
  check_projection(j1, l1, "j1");
  check_projection(j2, l2, "j2");
  check_projection(s, sigma, "s");
  if (s.twice < std::abs(j1.twice - j2.twice) || s.twice > j1.twice + j2.twice ||
      !same_parity(s.twice, j1.twice + j2.twice)) {
    throw Error(ErrorCode::InvalidWeights, "s = " + std::to_string(s.value()) +
                                               " violates the triangle rule");
  }
  if (sigma.twice != l1.twice + l2.twice) return {};

  // All quantities below are integers once the half-integers are combined.
  const int j1pj2ms = (j1.twice + j2.twice - s.twice) / 2;
  const int spj1mj2 = (s.twice + j1.twice - j2.twice) / 2;
  const int smj1pj2 = (s.twice - j1.twice + j2.twice) / 2;
  const int sum_all = (j1.twice + j2.twice + s.twice) / 2;
  const int j1ml1 = (j1.twice - l1.twice) / 2;
  const int j1pl1 = (j1.twice + l1.twice) / 2;
  const int j2ml2 = (j2.twice - l2.twice) / 2;
  const int j2pl2 = (j2.twice + l2.twice) / 2;
  const int spsig = (s.twice + sigma.twice) / 2;
  const int smsig = (s.twice - sigma.twice) / 2;
  // Offsets of the two k-dependent lower bounds.
  const int shift_a = (s.twice - j2.twice + l1.twice) / 2;  // s - j2 + l1
  const int shift_b = (s.twice - j1.twice - l2.twice) / 2;  // s - j1 - l2

  const Rational prefactor =
      Rational(mp::cpp_int(s.twice + 1) * factorial(spj1mj2) * factorial(smj1pj2) *
                   factorial(j1pj2ms) * factorial(spsig) * factorial(smsig) * factorial(j1ml1) *
                   factorial(j1pl1) * factorial(j2ml2) * factorial(j2pl2),
               factorial(sum_all + 1));

  Rational sum = 0;
  const int k_min = std::max({0, -shift_a, -shift_b});
  const int k_max = std::min({j1pj2ms, j1ml1, j2pl2});
  for (int k = k_min; k <= k_max; ++k) {
    const mp::cpp_int denom = factorial(k) * factorial(j1pj2ms - k) * factorial(j1ml1 - k) *
                              factorial(j2pl2 - k) * factorial(shift_a + k) *
                              factorial(shift_b + k);
    const Rational term(1, denom);
    sum += (k % 2 == 0) ? term : Rational(-term);
  }

  CGValue out;
  out.sign = sum > 0 ? 1 : (sum < 0 ? -1 : 0);
  out.squared = prefactor * sum * sum;
  return out;
}

namespace {

// Splits m = p^2 * r with r square-free. Prime factors above the trial bound
// are assumed to appear at most once unless the remainder is a perfect square.
std::pair<mp::cpp_int, mp::cpp_int> split_square(mp::cpp_int m) {
  mp::cpp_int outside = 1;
  mp::cpp_int radical = 1;
  for (int p = 2; p <= 10000 && mp::cpp_int(p) * p <= m; ++p) {
    int count = 0;
    while (m % p == 0) {
      m /= p;
      ++count;
    }
    for (int k = 0; k < count / 2; ++k) outside *= p;
    if (count % 2 == 1) radical *= p;
  }
  const mp::cpp_int root = mp::sqrt(m);
  if (root * root == m) {
    outside *= root;
  } else {
    radical *= m;
  }
  return {outside, radical};
}

}  // namespace

void SurdSum::add(int sign, const Rational& squared) {
  if (sign == 0 || squared == 0) return;
  if (squared < 0) throw Error(ErrorCode::InvalidWeights, "negative squared magnitude");
  // sqrt(n/d) = sqrt(n d) / d
  const mp::cpp_int n = mp::numerator(squared);
  const mp::cpp_int d = mp::denominator(squared);
  const auto [outside, radical] = split_square(n * d);
  Rational coeff(outside, d);
  if (sign < 0) coeff = -coeff;
  Rational& slot = terms_[radical];
  slot += coeff;
  if (slot == 0) terms_.erase(radical);
}

bool SurdSum::equals(const Rational& value) const {
  if (terms_.empty()) return value == 0;
  if (terms_.size() > 1) return false;
  const auto& [radical, coeff] = *terms_.begin();
  return radical == 1 && coeff == value;
}

double SurdSum::approx() const {
  double total = 0;
  for (const auto& [radical, coeff] : terms_) {
    total += coeff.convert_to<double>() * std::sqrt(radical.convert_to<double>());
  }
  return total;
}

}  // namespace braket
