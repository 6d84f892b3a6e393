#include "hypergrass/bigfloat.hpp"

#include <cctype>

namespace hypergrass {

Rat parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  require(!s.empty(), errc::parameter_mismatch, "empty rational literal");
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    const bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
                    ((c == '+' || c == '-') &&
                     (i == 0 || s[i - 1] == '/'));
    require(ok, errc::parameter_mismatch, "bad rational literal '" + text + "'");
  }
  // mpq does not accept explicit '+' signs; drop them after validation.
  std::string t;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (!(s[i] == '+' && (i == 0 || s[i - 1] == '/'))) t.push_back(s[i]);
  Rat q;
  require(!t.empty() && q.set_str(t, 10) == 0, errc::parameter_mismatch,
          "bad rational literal '" + text + "'");
  require(q.get_den() != 0, errc::parameter_mismatch,
          "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string rational_str(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

namespace {
constexpr int kRadiusBits = 64;
}

Ball::Ball(int bits) : bits_(bits) {
  require(bits >= 64, errc::parameter_mismatch,
          "float precision must be at least 64 bits");
  mpfr_init2(v_, bits_);
  mpfr_init2(r_, kRadiusBits);
  mpfr_set_zero(v_, 1);
  mpfr_set_zero(r_, 1);
}

Ball::Ball(const Ball& o) : bits_(o.bits_) {
  mpfr_init2(v_, bits_);
  mpfr_init2(r_, kRadiusBits);
  mpfr_set(v_, o.v_, MPFR_RNDN);
  mpfr_set(r_, o.r_, MPFR_RNDU);
}

Ball::Ball(Ball&& o) noexcept : bits_(o.bits_) {
  mpfr_init2(v_, bits_);
  mpfr_init2(r_, kRadiusBits);
  mpfr_swap(v_, o.v_);
  mpfr_swap(r_, o.r_);
}

Ball& Ball::operator=(const Ball& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.bits_);
    bits_ = o.bits_;
    mpfr_set(v_, o.v_, MPFR_RNDN);
    mpfr_set(r_, o.r_, MPFR_RNDU);
  }
  return *this;
}

Ball& Ball::operator=(Ball&& o) noexcept {
  if (this != &o) {
    bits_ = o.bits_;
    mpfr_swap(v_, o.v_);
    mpfr_swap(r_, o.r_);
  }
  return *this;
}

Ball::~Ball() {
  mpfr_clear(v_);
  mpfr_clear(r_);
}

void Ball::add_rounding_slack(int inexact) {
  if (inexact == 0 || mpfr_zero_p(v_)) return;
  // One ulp of the rounded value, added to the radius (rounded up).
  mpfr_t ulp;
  mpfr_init2(ulp, kRadiusBits);
  mpfr_set_ui_2exp(ulp, 1, mpfr_get_exp(v_) - bits_, MPFR_RNDU);
  mpfr_add(r_, r_, ulp, MPFR_RNDU);
  mpfr_clear(ulp);
}

Ball Ball::from_rational(const Rat& q, int bits) {
  Ball b(bits);
  const int inexact = mpfr_set_q(b.v_, q.get_mpq_t(), MPFR_RNDN);
  b.add_rounding_slack(inexact);
  return b;
}

Ball Ball::exact_zero(int bits) { return Ball(bits); }

Ball Ball::exact_one(int bits) {
  Ball b(bits);
  mpfr_set_ui(b.v_, 1, MPFR_RNDN);
  return b;
}

bool Ball::exact() const { return mpfr_zero_p(r_); }

double Ball::value_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
double Ball::radius_double() const { return mpfr_get_d(r_, MPFR_RNDU); }

std::string Ball::str(int digits) const {
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Rg", digits, v_);
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

Ball Ball::operator+(const Ball& o) const {
  Ball out(std::max(bits_, o.bits_));
  const int inexact = mpfr_add(out.v_, v_, o.v_, MPFR_RNDN);
  mpfr_add(out.r_, r_, o.r_, MPFR_RNDU);
  out.add_rounding_slack(inexact);
  return out;
}

Ball Ball::operator-(const Ball& o) const {
  Ball out(std::max(bits_, o.bits_));
  const int inexact = mpfr_sub(out.v_, v_, o.v_, MPFR_RNDN);
  mpfr_add(out.r_, r_, o.r_, MPFR_RNDU);
  out.add_rounding_slack(inexact);
  return out;
}

Ball Ball::operator*(const Ball& o) const {
  Ball out(std::max(bits_, o.bits_));
  const int inexact = mpfr_mul(out.v_, v_, o.v_, MPFR_RNDN);
  // |a||rb| + |b||ra| + ra rb, all rounded up.
  mpfr_t t, acc;
  mpfr_init2(t, kRadiusBits);
  mpfr_init2(acc, kRadiusBits);
  mpfr_abs(t, v_, MPFR_RNDU);
  mpfr_mul(acc, t, o.r_, MPFR_RNDU);
  mpfr_abs(t, o.v_, MPFR_RNDU);
  mpfr_mul(t, t, r_, MPFR_RNDU);
  mpfr_add(acc, acc, t, MPFR_RNDU);
  mpfr_mul(t, r_, o.r_, MPFR_RNDU);
  mpfr_add(acc, acc, t, MPFR_RNDU);
  mpfr_set(out.r_, acc, MPFR_RNDU);
  mpfr_clear(t);
  mpfr_clear(acc);
  out.add_rounding_slack(inexact);
  return out;
}

Ball Ball::neg() const {
  Ball out(*this);
  mpfr_neg(out.v_, out.v_, MPFR_RNDN);
  return out;
}

Ball Ball::log() const {
  require(certainly_positive(), errc::precision_failure,
          "log of an interval not certainly positive");
  Ball out(bits_);
  const int inexact = mpfr_log(out.v_, v_, MPFR_RNDN);
  out.add_rounding_slack(inexact);
  // Endpoint images bound the radius.
  mpfr_t lo, hi, d;
  mpfr_init2(lo, bits_);
  mpfr_init2(hi, bits_);
  mpfr_init2(d, kRadiusBits);
  mpfr_sub(lo, v_, r_, MPFR_RNDD);
  mpfr_log(lo, lo, MPFR_RNDD);
  mpfr_add(hi, v_, r_, MPFR_RNDU);
  mpfr_log(hi, hi, MPFR_RNDU);
  mpfr_sub(d, hi, lo, MPFR_RNDU);
  mpfr_add(out.r_, out.r_, d, MPFR_RNDU);
  mpfr_clear(lo);
  mpfr_clear(hi);
  mpfr_clear(d);
  return out;
}

Ball Ball::exp() const {
  Ball out(bits_);
  const int inexact = mpfr_exp(out.v_, v_, MPFR_RNDN);
  out.add_rounding_slack(inexact);
  mpfr_t lo, hi, d;
  mpfr_init2(lo, bits_);
  mpfr_init2(hi, bits_);
  mpfr_init2(d, kRadiusBits);
  mpfr_sub(lo, v_, r_, MPFR_RNDD);
  mpfr_exp(lo, lo, MPFR_RNDD);
  mpfr_add(hi, v_, r_, MPFR_RNDU);
  mpfr_exp(hi, hi, MPFR_RNDU);
  mpfr_sub(d, hi, lo, MPFR_RNDU);
  mpfr_add(out.r_, out.r_, d, MPFR_RNDU);
  mpfr_clear(lo);
  mpfr_clear(hi);
  mpfr_clear(d);
  return out;
}

std::optional<int> Ball::compare(const Ball& o) const {
  if (exact() && o.exact()) {
    const int c = mpfr_cmp(v_, o.v_);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  // Certain strict order iff |v1 - v2| > r1 + r2 with outward rounding.
  mpfr_t d, rr;
  mpfr_init2(d, kRadiusBits);
  mpfr_init2(rr, kRadiusBits);
  mpfr_sub(d, v_, o.v_, MPFR_RNDZ);  // toward zero: conservative for gaps
  mpfr_abs(d, d, MPFR_RNDZ);
  mpfr_add(rr, r_, o.r_, MPFR_RNDU);
  const bool separated = mpfr_cmp(d, rr) > 0;
  const int sign = mpfr_cmp(v_, o.v_);
  mpfr_clear(d);
  mpfr_clear(rr);
  if (!separated) return std::nullopt;
  return sign < 0 ? -1 : 1;
}

bool Ball::certainly_positive() const {
  mpfr_t lo;
  mpfr_init2(lo, kRadiusBits);
  mpfr_sub(lo, v_, r_, MPFR_RNDD);
  const bool ok = mpfr_sgn(lo) > 0;
  mpfr_clear(lo);
  return ok;
}

}  // namespace hypergrass
