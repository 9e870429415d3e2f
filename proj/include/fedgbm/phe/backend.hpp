#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "fedgbm/common/bytes.hpp"
#include "fedgbm/common/rng.hpp"
#include "fedgbm/phe/fixed_point.hpp"
#include "fedgbm/phe/paillier.hpp"

namespace fedgbm::phe {

enum class CipherKind : std::uint8_t { paillier = 0, null = 1 };

// Additively homomorphic ciphertext. `value` lives in [0, n^2) for the real
// backend and [0, n) for the null backend; key_id ties it to its key.
struct Ciphertext {
  mpz_class value;
  std::uint64_t key_id = 0;

  Bytes to_bytes() const;  // length-prefixed big-endian magnitude + key id
  static Ciphertext from_bytes(ByteReader& r);
  void serialize(ByteWriter& w) const;
};

// Operations both parties can perform. Decryption requires the private key
// and throws KeyError on a public-only backend.
class CipherBackend {
 public:
  virtual ~CipherBackend() = default;

  virtual CipherKind kind() const = 0;
  virtual const PublicKey& public_key() const = 0;
  virtual bool can_decrypt() const = 0;

  virtual Ciphertext encrypt_raw(const mpz_class& raw) const = 0;
  virtual mpz_class decrypt_raw(const Ciphertext& c) const = 0;
  virtual Ciphertext add(const Ciphertext& a, const Ciphertext& b) const = 0;
  virtual Ciphertext scale(const Ciphertext& c, long k) const = 0;

  // Fixed-point convenience wrappers.
  Ciphertext encrypt(double x) const {
    return encrypt_raw(codec_.encode(x, public_key().n));
  }
  double decrypt(const Ciphertext& c) const {
    return codec_.decode(decrypt_raw(c), public_key().n);
  }
  const FixedPointCodec& codec() const { return codec_; }

 protected:
  void check_key(const Ciphertext& c) const;
  FixedPointCodec codec_;
};

class PaillierBackend : public CipherBackend {
 public:
  // Public-only (party B) or full keypair (party A).
  explicit PaillierBackend(PublicKey pk);
  PaillierBackend(PublicKey pk, PrivateKey sk);
  explicit PaillierBackend(const KeyPair& kp) : PaillierBackend(kp.pub, kp.priv) {}

  CipherKind kind() const override { return CipherKind::paillier; }
  const PublicKey& public_key() const override { return pk_; }
  bool can_decrypt() const override { return sk_.has_value(); }

  Ciphertext encrypt_raw(const mpz_class& raw) const override;
  mpz_class decrypt_raw(const Ciphertext& c) const override;
  Ciphertext add(const Ciphertext& a, const Ciphertext& b) const override;
  Ciphertext scale(const Ciphertext& c, long k) const override;

 private:
  mpz_class next_randomizer() const;
  void refill_pool() const;

  PublicKey pk_;
  std::optional<PrivateKey> sk_;
  // CRT residues for fast decryption when factors are known.
  struct CrtContext {
    mpz_class p, q, p_sq, q_sq, hp, hq, q_inv_p;
  };
  std::optional<CrtContext> crt_;

  // Rolling randomizer: r_new = r_old * pool[i] (mod n^2). Each entry of the
  // pool is a full-strength r^n; the rolling product never repeats within a
  // session, so two encryptions of equal plaintexts stay distinct.
  mutable std::mutex rand_mu_;
  mutable std::vector<mpz_class> pool_;
  mutable mpz_class rolling_;
  mutable Rng pick_;

 public:
  // test hook: deterministic encryption randomness
  void reseed_randomizer(std::uint64_t seed) const;
};

// Identity backend for oracle runs: ciphertext value == plaintext raw value,
// homomorphic ops are plain modular arithmetic. Must be explicitly enabled
// by the operator (see SessionConfig::cipher / --insecure-null-cipher).
class NullBackend : public CipherBackend {
 public:
  explicit NullBackend(PublicKey pk) : pk_(std::move(pk)) {}
  explicit NullBackend(const KeyPair& kp) : pk_(kp.pub) {}

  CipherKind kind() const override { return CipherKind::null; }
  const PublicKey& public_key() const override { return pk_; }
  bool can_decrypt() const override { return true; }

  Ciphertext encrypt_raw(const mpz_class& raw) const override;
  mpz_class decrypt_raw(const Ciphertext& c) const override;
  Ciphertext add(const Ciphertext& a, const Ciphertext& b) const override;
  Ciphertext scale(const Ciphertext& c, long k) const override;

 private:
  PublicKey pk_;
};

std::unique_ptr<CipherBackend> make_backend(CipherKind kind, const KeyPair& kp);
std::unique_ptr<CipherBackend> make_public_backend(CipherKind kind, const PublicKey& pk);

}  // namespace fedgbm::phe
