#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <optional>
#include <string>

#include "hypergrass/errors.hpp"

namespace hypergrass {

using Rat = mpq_class;
using Int = mpz_class;

/// Parse "p/q" or "p" (decimal integers, optional sign) into a rational.
Rat parse_rational(const std::string& text);
std::string rational_str(const Rat& r);

/// Self-validating interval scalar: the represented real lies in
/// [value - radius, value + radius].  Value carries `bits` of mantissa;
/// the radius is tracked at fixed low precision, always rounded upward, so
/// every operation is conservative.  Used by the float numeric mode.
class Ball {
 public:
  explicit Ball(int bits);
  Ball(const Ball& o);
  Ball(Ball&& o) noexcept;
  Ball& operator=(const Ball& o);
  Ball& operator=(Ball&& o) noexcept;
  ~Ball();

  static Ball from_rational(const Rat& q, int bits);
  static Ball exact_zero(int bits);
  static Ball exact_one(int bits);

  int bits() const { return bits_; }
  bool exact() const;        ///< radius == 0
  double value_double() const;
  double radius_double() const;
  std::string str(int digits = 20) const;

  Ball operator+(const Ball& o) const;
  Ball operator-(const Ball& o) const;
  Ball operator*(const Ball& o) const;
  Ball neg() const;

  /// Natural log; requires the whole interval positive (else
  /// precision_failure).
  Ball log() const;
  Ball exp() const;

  /// Three-way comparison when the intervals allow it: -1/0/+1; nullopt when
  /// the intervals overlap without being identical exact points.
  std::optional<int> compare(const Ball& o) const;

  /// True iff the interval certainly lies strictly above zero.
  bool certainly_positive() const;

 private:
  mpfr_t v_;
  mpfr_t r_;
  int bits_;
  void add_rounding_slack(int inexact);
};

}  // namespace hypergrass
