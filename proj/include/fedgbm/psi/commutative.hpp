#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fedgbm/common/bytes.hpp"

namespace fedgbm::psi {

// Commutative blinding over the ristretto255 prime-order group: an id is
// hashed to a group element and raised to a party-secret scalar. Raising by
// both parties' scalars in either order yields the same element, which is
// what makes the double-blinded comparison work.
inline constexpr std::size_t kPointBytes = 32;
inline constexpr std::size_t kScalarBytes = 32;

using Point = std::array<std::uint8_t, kPointBytes>;
using Scalar = std::array<std::uint8_t, kScalarBytes>;

Scalar random_scalar();
Scalar scalar_from_seed(std::uint64_t seed);

Point hash_to_point(std::span<const std::uint8_t> id);
Point hash_to_point(const std::string& id);

// point^scalar; throws ProtocolError on a malformed element encoding.
Point blind_point(const Scalar& key, const Point& p);

// Deduplicated, canonically (lexicographically) ordered id set.
struct IdSet {
  std::vector<std::string> ids;

  static IdSet from(std::vector<std::string> raw);  // dedupes + sorts
  std::size_t size() const { return ids.size(); }
  bool contains(const std::string& id) const;
};

struct BlindedSet {
  std::vector<Point> points;
  std::uint64_t blinding_key_fingerprint = 0;
};

// Hash-to-group + exponentiation over the whole set, shuffled under
// shuffle_seed (pass entropy in production, a fixed seed in tests).
BlindedSet blind(const Scalar& key, const IdSet& ids, std::uint64_t shuffle_seed);

// Applies this party's exponent to an already-blinded peer set, preserving
// order.
BlindedSet double_blind(const Scalar& key, const BlindedSet& peer);

std::uint64_t scalar_fingerprint(const Scalar& key);

}  // namespace fedgbm::psi
