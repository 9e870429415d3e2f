#include "fedgbm/phe/backend.hpp"

#include "fedgbm/common/errors.hpp"

namespace fedgbm::phe {

namespace {

Bytes mpz_to_magnitude(const mpz_class& v) {
  if (v == 0) return {};
  const std::size_t count = (mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8;
  Bytes out(count);
  std::size_t written = 0;
  mpz_export(out.data(), &written, 1, 1, 1, 0, v.get_mpz_t());
  out.resize(written);
  return out;
}

mpz_class mpz_from_magnitude(std::span<const std::uint8_t> b) {
  mpz_class v;
  if (!b.empty()) mpz_import(v.get_mpz_t(), b.size(), 1, 1, 1, 0, b.data());
  return v;
}

}  // namespace

Bytes Ciphertext::to_bytes() const {
  ByteWriter w;
  serialize(w);
  return w.take();
}

void Ciphertext::serialize(ByteWriter& w) const {
  w.u64(key_id);
  Bytes mag = mpz_to_magnitude(value);
  w.blob(mag);
}

Ciphertext Ciphertext::from_bytes(ByteReader& r) {
  Ciphertext c;
  c.key_id = r.u64();
  c.value = mpz_from_magnitude(r.blob());
  return c;
}

void CipherBackend::check_key(const Ciphertext& c) const {
  if (c.key_id != public_key().key_id) {
    throw KeyError("ciphertext key fingerprint does not match this backend's key");
  }
}

PaillierBackend::PaillierBackend(PublicKey pk)
    : pk_(std::move(pk)), pick_(entropy_seed()) {
  refill_pool();
}

PaillierBackend::PaillierBackend(PublicKey pk, PrivateKey sk)
    : pk_(std::move(pk)), sk_(std::move(sk)), pick_(entropy_seed()) {
  if (sk_->p && sk_->q) {
    CrtContext ctx;
    ctx.p = *sk_->p;
    ctx.q = *sk_->q;
    ctx.p_sq = ctx.p * ctx.p;
    ctx.q_sq = ctx.q * ctx.q;
    // h_p = L_p(g^(p-1) mod p^2)^-1 mod p with g = n+1, likewise for q.
    auto h_for = [&](const mpz_class& prime, const mpz_class& prime_sq) {
      mpz_class exp = prime - 1;
      mpz_class u;
      mpz_powm(u.get_mpz_t(), pk_.g.get_mpz_t(), exp.get_mpz_t(), prime_sq.get_mpz_t());
      mpz_class l = (u - 1) / prime;
      mpz_class h;
      if (mpz_invert(h.get_mpz_t(), l.get_mpz_t(), prime.get_mpz_t()) == 0) {
        throw KeyError("CRT precomputation failed");
      }
      return h;
    };
    ctx.hp = h_for(ctx.p, ctx.p_sq);
    ctx.hq = h_for(ctx.q, ctx.q_sq);
    if (mpz_invert(ctx.q_inv_p.get_mpz_t(), ctx.q.get_mpz_t(), ctx.p.get_mpz_t()) == 0) {
      throw KeyError("CRT precomputation failed");
    }
    crt_ = std::move(ctx);
  }
  refill_pool();
}

void PaillierBackend::refill_pool() const {
  constexpr int kPoolSize = 64;
  gmp_randclass grng(gmp_randinit_mt);
  grng.seed(static_cast<unsigned long>(pick_.next()));
  pool_.clear();
  pool_.reserve(kPoolSize);
  for (int i = 0; i < kPoolSize; ++i) {
    mpz_class r;
    do {
      r = grng.get_z_range(pk_.n);
    } while (r == 0);
    mpz_class rn;
    mpz_powm(rn.get_mpz_t(), r.get_mpz_t(), pk_.n.get_mpz_t(), pk_.n_sq.get_mpz_t());
    pool_.push_back(std::move(rn));
  }
  rolling_ = pool_[0];
}

void PaillierBackend::reseed_randomizer(std::uint64_t seed) const {
  std::lock_guard<std::mutex> g(rand_mu_);
  pick_ = Rng(seed);
  refill_pool();
}

mpz_class PaillierBackend::next_randomizer() const {
  std::lock_guard<std::mutex> g(rand_mu_);
  const std::size_t i = static_cast<std::size_t>(pick_.below(pool_.size()));
  rolling_ = (rolling_ * pool_[i]) % pk_.n_sq;
  return rolling_;
}

Ciphertext PaillierBackend::encrypt_raw(const mpz_class& raw) const {
  if (raw < 0 || raw >= pk_.n) throw RangeError("plaintext raw value outside [0, n)");
  // g = n+1 shortcut: g^m = 1 + m*n (mod n^2).
  mpz_class gm = (1 + raw * pk_.n) % pk_.n_sq;
  Ciphertext c;
  c.value = (gm * next_randomizer()) % pk_.n_sq;
  c.key_id = pk_.key_id;
  return c;
}

mpz_class PaillierBackend::decrypt_raw(const Ciphertext& c) const {
  if (!sk_) throw KeyError("decrypt requested on a public-only backend");
  check_key(c);
  if (c.value < 0 || c.value >= pk_.n_sq) throw RangeError("ciphertext outside [0, n^2)");
  if (crt_) {
    const CrtContext& x = *crt_;
    mpz_class exp_p = x.p - 1, exp_q = x.q - 1;
    mpz_class up, uq;
    mpz_powm(up.get_mpz_t(), c.value.get_mpz_t(), exp_p.get_mpz_t(), x.p_sq.get_mpz_t());
    mpz_powm(uq.get_mpz_t(), c.value.get_mpz_t(), exp_q.get_mpz_t(), x.q_sq.get_mpz_t());
    mpz_class mp = ((up - 1) / x.p * x.hp) % x.p;
    mpz_class mq = ((uq - 1) / x.q * x.hq) % x.q;
    // Garner recombination.
    mpz_class diff = (mp - mq) % x.p;
    if (diff < 0) diff += x.p;
    mpz_class t = (diff * x.q_inv_p) % x.p;
    return (mq + t * x.q) % pk_.n;
  }
  mpz_class u;
  mpz_powm(u.get_mpz_t(), c.value.get_mpz_t(), sk_->lambda.get_mpz_t(), pk_.n_sq.get_mpz_t());
  mpz_class l = (u - 1) / pk_.n;
  return (l * sk_->mu) % pk_.n;
}

Ciphertext PaillierBackend::add(const Ciphertext& a, const Ciphertext& b) const {
  check_key(a);
  check_key(b);
  Ciphertext out;
  out.value = (a.value * b.value) % pk_.n_sq;
  out.key_id = pk_.key_id;
  return out;
}

Ciphertext PaillierBackend::scale(const Ciphertext& c, long k) const {
  check_key(c);
  mpz_class e(k);
  e %= pk_.n;
  if (e < 0) e += pk_.n;
  Ciphertext out;
  mpz_powm(out.value.get_mpz_t(), c.value.get_mpz_t(), e.get_mpz_t(), pk_.n_sq.get_mpz_t());
  out.key_id = pk_.key_id;
  return out;
}

Ciphertext NullBackend::encrypt_raw(const mpz_class& raw) const {
  if (raw < 0 || raw >= pk_.n) throw RangeError("plaintext raw value outside [0, n)");
  Ciphertext c;
  c.value = raw;
  c.key_id = pk_.key_id;
  return c;
}

mpz_class NullBackend::decrypt_raw(const Ciphertext& c) const {
  check_key(c);
  return c.value % pk_.n;
}

Ciphertext NullBackend::add(const Ciphertext& a, const Ciphertext& b) const {
  check_key(a);
  check_key(b);
  Ciphertext out;
  out.value = (a.value + b.value) % pk_.n;
  out.key_id = pk_.key_id;
  return out;
}

Ciphertext NullBackend::scale(const Ciphertext& c, long k) const {
  check_key(c);
  mpz_class e(k);
  e %= pk_.n;
  if (e < 0) e += pk_.n;
  Ciphertext out;
  out.value = (c.value * e) % pk_.n;
  out.key_id = pk_.key_id;
  return out;
}

std::unique_ptr<CipherBackend> make_backend(CipherKind kind, const KeyPair& kp) {
  if (kind == CipherKind::null) return std::make_unique<NullBackend>(kp);
  return std::make_unique<PaillierBackend>(kp);
}

std::unique_ptr<CipherBackend> make_public_backend(CipherKind kind, const PublicKey& pk) {
  if (kind == CipherKind::null) return std::make_unique<NullBackend>(pk);
  return std::make_unique<PaillierBackend>(pk);
}

}  // namespace fedgbm::phe
