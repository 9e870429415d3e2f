#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace fedgbm::phe {

// Signed reals ride the integer plaintext ring [0, n): non-negative values
// occupy the low range scaled by 2^scale_bits, negative values the top range
// n - |x|*2^scale_bits. Magnitudes are capped at 2^kMagnitudeBits before
// scaling, which leaves a wide dead zone in the middle of the ring; any raw
// value landing there is an overflow and decode rejects it.
struct FixedPointCodec {
  static constexpr int kDefaultScaleBits = 40;
  static constexpr int kMagnitudeBits = 60;

  int scale_bits = kDefaultScaleBits;

  // encode/decode against an explicit ring modulus.
  mpz_class encode(double x, const mpz_class& modulus) const;
  double decode(const mpz_class& raw, const mpz_class& modulus) const;

  // Largest encodable magnitude after scaling, 2^(kMagnitudeBits+scale_bits).
  mpz_class raw_magnitude_cap() const;
};

}  // namespace fedgbm::phe
