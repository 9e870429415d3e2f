#include "fedgbm/phe/paillier.hpp"

#include <nlohmann/json.hpp>

#include "fedgbm/common/errors.hpp"
#include "fedgbm/common/hash.hpp"
#include "fedgbm/common/rng.hpp"

namespace fedgbm::phe {

namespace {

mpz_class mpz_from_hex(const std::string& hex) {
  mpz_class v;
  if (mpz_set_str(v.get_mpz_t(), hex.c_str(), 16) != 0) {
    throw KeyError("malformed hex integer in key file");
  }
  return v;
}

std::string mpz_to_hex(const mpz_class& v) {
  char* s = mpz_get_str(nullptr, 16, v.get_mpz_t());
  std::string out(s);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(s, out.size() + 1);
  return out;
}

std::uint64_t key_fingerprint(const mpz_class& n) {
  const std::string hex = mpz_to_hex(n);
  return fingerprint64(std::span<const std::uint8_t>(
      reinterpret_cast<const std::uint8_t*>(hex.data()), hex.size()));
}

// Random prime with exactly `bits` bits and the top two bits set, so the
// product of two such primes has exactly 2*bits bits.
mpz_class random_prime(gmp_randclass& rng, int bits) {
  mpz_class cand = rng.get_z_bits(bits);
  mpz_setbit(cand.get_mpz_t(), bits - 1);
  mpz_setbit(cand.get_mpz_t(), bits - 2);
  mpz_class prime;
  mpz_nextprime(prime.get_mpz_t(), cand.get_mpz_t());
  // nextprime can overshoot the width; retry from a fresh candidate.
  while (mpz_sizeinbase(prime.get_mpz_t(), 2) != static_cast<std::size_t>(bits)) {
    cand = rng.get_z_bits(bits);
    mpz_setbit(cand.get_mpz_t(), bits - 1);
    mpz_setbit(cand.get_mpz_t(), bits - 2);
    mpz_nextprime(prime.get_mpz_t(), cand.get_mpz_t());
  }
  return prime;
}

}  // namespace

PublicKey PublicKey::from_n(const mpz_class& n) {
  PublicKey pk;
  pk.n = n;
  pk.g = n + 1;
  pk.n_sq = n * n;
  pk.modulus_bits = static_cast<int>(mpz_sizeinbase(n.get_mpz_t(), 2));
  pk.key_id = key_fingerprint(n);
  return pk;
}

KeyPair keygen(int modulus_bits, std::optional<std::uint64_t> rng_seed) {
  if (modulus_bits != 512 && modulus_bits != 1024 && modulus_bits != 2048) {
    throw ConfigError("unsupported modulus size " + std::to_string(modulus_bits) +
                      " (expected 512, 1024 or 2048)");
  }
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(rng_seed ? static_cast<unsigned long>(*rng_seed)
                    : static_cast<unsigned long>(entropy_seed()));

  const int half = modulus_bits / 2;
  mpz_class p, q, n, lambda, gcd_nl;
  while (true) {
    p = random_prime(rng, half);
    q = random_prime(rng, half);
    if (p == q) continue;
    n = p * q;
    if (mpz_sizeinbase(n.get_mpz_t(), 2) != static_cast<std::size_t>(modulus_bits)) continue;
    mpz_class pm1 = p - 1, qm1 = q - 1;
    mpz_lcm(lambda.get_mpz_t(), pm1.get_mpz_t(), qm1.get_mpz_t());
    mpz_gcd(gcd_nl.get_mpz_t(), n.get_mpz_t(), lambda.get_mpz_t());
    if (gcd_nl == 1) break;
  }

  KeyPair kp;
  kp.modulus_bits = modulus_bits;
  kp.pub = PublicKey::from_n(n);
  kp.pub.modulus_bits = modulus_bits;

  // With g = n+1: g^lambda mod n^2 = 1 + lambda*n, so
  // L(g^lambda) = lambda mod n and mu = lambda^-1 mod n.
  mpz_class mu;
  if (mpz_invert(mu.get_mpz_t(), lambda.get_mpz_t(), n.get_mpz_t()) == 0) {
    throw KeyError("lambda not invertible mod n");
  }
  kp.priv.lambda = lambda;
  kp.priv.mu = mu;
  kp.priv.n = n;
  kp.priv.p = p;
  kp.priv.q = q;
  return kp;
}

std::string public_key_to_json(const PublicKey& pk) {
  nlohmann::json j;
  j["n_hex"] = mpz_to_hex(pk.n);
  j["g_hex"] = mpz_to_hex(pk.g);
  return j.dump(2) + "\n";
}

std::string private_key_to_json(const PrivateKey& sk) {
  nlohmann::json j;
  j["lambda_hex"] = mpz_to_hex(sk.lambda);
  j["mu_hex"] = mpz_to_hex(sk.mu);
  j["n_hex"] = mpz_to_hex(sk.n);
  return j.dump(2) + "\n";
}

PublicKey public_key_from_json(const std::string& json_text) {
  auto j = nlohmann::json::parse(json_text);
  PublicKey pk = PublicKey::from_n(mpz_from_hex(j.at("n_hex").get<std::string>()));
  const mpz_class g = mpz_from_hex(j.at("g_hex").get<std::string>());
  if (g != pk.g) throw KeyError("public key generator is not n+1");
  return pk;
}

PrivateKey private_key_from_json(const std::string& json_text) {
  auto j = nlohmann::json::parse(json_text);
  PrivateKey sk;
  sk.lambda = mpz_from_hex(j.at("lambda_hex").get<std::string>());
  sk.mu = mpz_from_hex(j.at("mu_hex").get<std::string>());
  sk.n = mpz_from_hex(j.at("n_hex").get<std::string>());
  return sk;
}

}  // namespace fedgbm::phe
