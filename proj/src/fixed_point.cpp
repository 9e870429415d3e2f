#include "fedgbm/phe/fixed_point.hpp"

#include <cmath>

#include "fedgbm/common/errors.hpp"

namespace fedgbm::phe {

mpz_class FixedPointCodec::raw_magnitude_cap() const {
  mpz_class cap = 1;
  mpz_mul_2exp(cap.get_mpz_t(), cap.get_mpz_t(), kMagnitudeBits + scale_bits);
  return cap;
}

mpz_class FixedPointCodec::encode(double x, const mpz_class& modulus) const {
  if (!std::isfinite(x)) throw RangeError("cannot encode non-finite value");
  if (std::abs(x) > std::ldexp(1.0, kMagnitudeBits)) {
    throw RangeError("value magnitude exceeds 2^" + std::to_string(kMagnitudeBits));
  }
  const bool negative = std::signbit(x) && x != 0.0;
  const double mag = std::abs(x);
  // Exact scaling: mpz from the double, then shift by the fractional part.
  // ldexp keeps everything in double until the final rounding, which is fine
  // for |x| <= 2^60 and scale 40 only when the product stays below 2^63 —
  // it does not, so go through mpf for the general case.
  mpf_class scaled(mag, 128);
  mpf_mul_2exp(scaled.get_mpf_t(), scaled.get_mpf_t(), scale_bits);
  mpz_class raw;
  // Round to nearest: floor(scaled + 0.5).
  mpf_class half(0.5, 128);
  scaled += half;
  mpz_set_f(raw.get_mpz_t(), scaled.get_mpf_t());
  if (negative && raw != 0) {
    raw = modulus - raw;
  }
  return raw % modulus;
}

double FixedPointCodec::decode(const mpz_class& raw, const mpz_class& modulus) const {
  const mpz_class cap = raw_magnitude_cap();
  mpz_class mag = raw;
  bool negative = false;
  if (raw > modulus / 2) {
    mag = modulus - raw;
    negative = true;
  }
  if (mag > cap) {
    throw RangeError("decoded magnitude outside encodable range (overflow)");
  }
  mpf_class f(0, 128);
  mpf_set_z(f.get_mpf_t(), mag.get_mpz_t());
  mpf_div_2exp(f.get_mpf_t(), f.get_mpf_t(), scale_bits);
  double v = f.get_d();
  return negative ? -v : v;
}

}  // namespace fedgbm::phe
