#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace fedgbm::phe {

struct PublicKey {
  mpz_class n;       // modulus
  mpz_class g;       // generator, n + 1
  mpz_class n_sq;    // cached n^2
  int modulus_bits = 0;
  std::uint64_t key_id = 0;  // fingerprint of n

  static PublicKey from_n(const mpz_class& n);
};

struct PrivateKey {
  mpz_class lambda;  // lcm(p-1, q-1)
  mpz_class mu;      // (L(g^lambda mod n^2))^-1 mod n
  mpz_class n;
  // Factor-based CRT acceleration; present for freshly generated keys,
  // absent when loaded from the serialized form (which carries only
  // lambda/mu/n).
  std::optional<mpz_class> p;
  std::optional<mpz_class> q;
};

struct KeyPair {
  PublicKey pub;
  PrivateKey priv;
  int modulus_bits = 0;
};

// modulus_bits must be one of 512, 1024, 2048; a fixed rng_seed makes the
// generated pair reproducible.
KeyPair keygen(int modulus_bits, std::optional<std::uint64_t> rng_seed = std::nullopt);

// Key files: {"n_hex", "g_hex"} and {"lambda_hex", "mu_hex", "n_hex"}.
std::string public_key_to_json(const PublicKey& pk);
std::string private_key_to_json(const PrivateKey& sk);
PublicKey public_key_from_json(const std::string& json_text);
PrivateKey private_key_from_json(const std::string& json_text);

}  // namespace fedgbm::phe
