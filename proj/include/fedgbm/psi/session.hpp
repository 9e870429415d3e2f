#pragma once

#include <cstdint>
#include <optional>

#include "fedgbm/net/channel.hpp"
#include "fedgbm/psi/commutative.hpp"

namespace fedgbm::psi {

enum class Role : std::uint8_t { a = 0, b = 1 };

struct SessionOptions {
  // Fixed seeds make blinding order reproducible in tests; leave unset for
  // per-session entropy.
  std::optional<std::uint64_t> scalar_seed;
  std::optional<std::uint64_t> shuffle_seed;
};

// Secure join: both parties end up with exactly sort(I_A intersect I_B); no
// plaintext id from either symmetric difference crosses the channel (the
// intersection itself travels as indices into blinded orderings).
IdSet psi_session(Role role, const IdSet& ids, net::Channel& ch,
                  const SessionOptions& opts = {});

// Cardinality-only variant: role A learns |I_A intersect I_B|, role B learns
// nothing beyond set sizes. Returns nullopt for role B.
std::optional<std::size_t> psi_cardinality_session(Role role, const IdSet& ids,
                                                   net::Channel& ch,
                                                   const SessionOptions& opts = {});

}  // namespace fedgbm::psi
