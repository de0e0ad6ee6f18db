#pragma once

// Exact SU(2) Clebsch-Gordan coefficients.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>

namespace braket {

using Rational = boost::multiprecision::cpp_rational;

/// A half-integer stored as twice its value.
struct HalfInt {
  int twice = 0;

  /// Accepts values within 1e-9 of a multiple of 1/2; InvalidWeights otherwise.
  static HalfInt from_real(double value);
  double value() const { return twice / 2.0; }

  friend bool operator==(const HalfInt&, const HalfInt&) = default;
};

/// sign * sqrt(squared), with squared an exact non-negative rational.
struct CGValue {
  int sign = 0;
  Rational squared = 0;

  double value() const;
  /// "p/q" or "p".
  std::string squared_string() const;

  friend bool operator==(const CGValue&, const CGValue&) = default;
};

/// <j1 l1; j2 l2 | s sigma> in the Condon-Shortley convention, exact.
/// Zero when sigma != l1 + l2. InvalidWeights for inconsistent arguments.
CGValue clebsch_gordan(HalfInt j1, HalfInt l1, HalfInt j2, HalfInt l2, HalfInt s, HalfInt sigma);

/// Exact sums of signed square roots of non-negative rationals. Each term
/// is reduced to c * sqrt(r) with r a square-free integer; square roots of
/// distinct square-free integers are linearly independent over the
/// rationals, so comparisons are exact.
class SurdSum {
 public:
  /// Adds sign * sqrt(squared).
  void add(int sign, const Rational& squared);
  void add(const CGValue& v) { add(v.sign, v.squared); }
  /// Adds the product of two coefficients.
  void add_product(const CGValue& a, const CGValue& b) {
    add(a.sign * b.sign, a.squared * b.squared);
  }

  bool equals(const Rational& value) const;
  double approx() const;

 private:
  // radical -> rational coefficient
  std::map<boost::multiprecision::cpp_int, Rational> terms_;
};

}  // namespace braket
