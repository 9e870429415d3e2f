#include <sodium.h>

#include <algorithm>
#include <map>
#include <set>

#include "fedgbm/common/errors.hpp"
#include "fedgbm/common/hash.hpp"
#include "fedgbm/common/parallel.hpp"
#include "fedgbm/common/rng.hpp"
#include "fedgbm/psi/commutative.hpp"
#include "fedgbm/psi/session.hpp"

namespace fedgbm::psi {

namespace {

void ensure_sodium() {
  static const bool ok = [] { return sodium_init() >= 0; }();
  if (!ok) throw SecurityError("libsodium initialization failed");
}

}  // namespace

Scalar random_scalar() {
  ensure_sodium();
  Scalar s;
  crypto_core_ristretto255_scalar_random(s.data());
  return s;
}

Scalar scalar_from_seed(std::uint64_t seed) {
  ensure_sodium();
  std::uint8_t wide[64];
  Rng rng(seed);
  for (auto& b : wide) b = static_cast<std::uint8_t>(rng.next());
  Scalar s;
  crypto_core_ristretto255_scalar_reduce(s.data(), wide);
  return s;
}

Point hash_to_point(std::span<const std::uint8_t> id) {
  ensure_sodium();
  std::uint8_t h[crypto_hash_sha512_BYTES];
  crypto_hash_sha512(h, id.data(), id.size());
  Point p;
  crypto_core_ristretto255_from_hash(p.data(), h);
  return p;
}

Point hash_to_point(const std::string& id) {
  return hash_to_point(std::span<const std::uint8_t>(
      reinterpret_cast<const std::uint8_t*>(id.data()), id.size()));
}

Point blind_point(const Scalar& key, const Point& p) {
  ensure_sodium();
  Point out;
  if (crypto_scalarmult_ristretto255(out.data(), key.data(), p.data()) != 0) {
    throw ProtocolError("malformed group element in blinded set");
  }
  return out;
}

std::uint64_t scalar_fingerprint(const Scalar& key) {
  return fingerprint64(std::span<const std::uint8_t>(key.data(), key.size()));
}

IdSet IdSet::from(std::vector<std::string> raw) {
  for (const auto& id : raw) {
    if (id.size() > 64) throw DataError("id longer than 64 bytes");
  }
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  return IdSet{std::move(raw)};
}

bool IdSet::contains(const std::string& id) const {
  return std::binary_search(ids.begin(), ids.end(), id);
}

BlindedSet blind(const Scalar& key, const IdSet& ids, std::uint64_t shuffle_seed) {
  BlindedSet out;
  out.blinding_key_fingerprint = scalar_fingerprint(key);
  out.points.resize(ids.size());
  parallel_for(ids.size(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      out.points[i] = blind_point(key, hash_to_point(ids.ids[i]));
    }
  });
  Rng rng(shuffle_seed);
  rng.shuffle(out.points);
  return out;
}

BlindedSet double_blind(const Scalar& key, const BlindedSet& peer) {
  BlindedSet out;
  out.blinding_key_fingerprint = scalar_fingerprint(key);
  out.points.resize(peer.points.size());
  parallel_for(peer.points.size(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      out.points[i] = blind_point(key, peer.points[i]);
    }
  });
  return out;
}

namespace {

// Blind with the permutation kept so the owner can map shuffled positions
// back to its own ids.
struct BlindWithPerm {
  BlindedSet set;
  std::vector<std::uint32_t> position_of_id;  // id index -> shuffled position
};

BlindWithPerm blind_tracked(const Scalar& key, const IdSet& ids, std::uint64_t shuffle_seed) {
  BlindWithPerm out;
  out.set.blinding_key_fingerprint = scalar_fingerprint(key);
  std::vector<Point> unshuffled(ids.size());
  parallel_for(ids.size(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      unshuffled[i] = blind_point(key, hash_to_point(ids.ids[i]));
    }
  });
  std::vector<std::uint32_t> order(ids.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<std::uint32_t>(i);
  Rng rng(shuffle_seed);
  rng.shuffle(order);
  out.set.points.resize(ids.size());
  out.position_of_id.resize(ids.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    out.set.points[pos] = unshuffled[order[pos]];
    out.position_of_id[order[pos]] = static_cast<std::uint32_t>(pos);
  }
  return out;
}

void write_points(ByteWriter& w, const std::vector<Point>& pts) {
  w.u32(static_cast<std::uint32_t>(pts.size()));
  for (const auto& p : pts) w.raw(std::span<const std::uint8_t>(p.data(), p.size()));
}

std::vector<Point> read_points(ByteReader& r) {
  const std::uint32_t n = r.u32();
  std::vector<Point> out(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    auto b = r.raw(kPointBytes);
    std::copy(b.begin(), b.end(), out[i].begin());
  }
  return out;
}

}  // namespace

IdSet psi_session(Role role, const IdSet& ids, net::Channel& ch, const SessionOptions& opts) {
  const Scalar key = opts.scalar_seed ? scalar_from_seed(*opts.scalar_seed) : random_scalar();
  const std::uint64_t shuffle_seed = opts.shuffle_seed ? *opts.shuffle_seed : entropy_seed();

  if (role == Role::a) {
    // A -> B: blinded own set. B -> A: B's blinded set, then A's set doubly
    // blinded (order preserved). A intersects and returns positions into B's
    // transmitted order; both sides then hold the same sorted id list.
    BlindWithPerm mine = blind_tracked(key, ids, shuffle_seed);
    net::Frame offer;
    offer.type = net::MsgType::psi_offer;
    {
      ByteWriter w;
      write_points(w, mine.set.points);
      offer.payload = w.take();
    }
    ch.send(offer);

    net::Frame peer_offer = ch.expect(net::MsgType::psi_offer);
    ByteReader pr(peer_offer.payload);
    BlindedSet peer{read_points(pr), 0};

    net::Frame reply = ch.expect(net::MsgType::psi_reply);
    ByteReader rr(reply.payload);
    std::vector<Point> mine_doubled = read_points(rr);
    if (mine_doubled.size() != mine.set.points.size()) {
      throw ProtocolError("double-blinded set size mismatch");
    }

    BlindedSet peer_doubled = double_blind(key, peer);
    std::map<Point, std::uint32_t> peer_index;
    for (std::uint32_t i = 0; i < peer_doubled.points.size(); ++i) {
      peer_index.emplace(peer_doubled.points[i], i);
    }

    std::vector<std::string> common;
    std::vector<std::uint32_t> peer_positions;
    for (std::size_t id_idx = 0; id_idx < ids.size(); ++id_idx) {
      const Point& mine_pt = mine_doubled[mine.position_of_id[id_idx]];
      auto it = peer_index.find(mine_pt);
      if (it != peer_index.end()) {
        common.push_back(ids.ids[id_idx]);
        peer_positions.push_back(it->second);
      }
    }
    std::sort(peer_positions.begin(), peer_positions.end());

    net::Frame result;
    result.type = net::MsgType::psi_result;
    {
      ByteWriter w;
      w.u32(static_cast<std::uint32_t>(peer_positions.size()));
      for (auto p : peer_positions) w.u32(p);
      result.payload = w.take();
    }
    ch.send(result);
    return IdSet::from(std::move(common));
  }

  // Role B.
  net::Frame peer_offer = ch.expect(net::MsgType::psi_offer);
  ByteReader pr(peer_offer.payload);
  BlindedSet peer{read_points(pr), 0};

  BlindWithPerm mine = blind_tracked(key, ids, shuffle_seed);
  net::Frame offer;
  offer.type = net::MsgType::psi_offer;
  {
    ByteWriter w;
    write_points(w, mine.set.points);
    offer.payload = w.take();
  }
  ch.send(offer);

  BlindedSet peer_doubled = double_blind(key, peer);
  net::Frame reply;
  reply.type = net::MsgType::psi_reply;
  {
    ByteWriter w;
    write_points(w, peer_doubled.points);
    reply.payload = w.take();
  }
  ch.send(reply);

  net::Frame result = ch.expect(net::MsgType::psi_result);
  ByteReader rr(result.payload);
  const std::uint32_t n = rr.u32();
  // Invert the shuffle: transmitted position -> own id index.
  std::vector<std::uint32_t> id_of_position(ids.size());
  for (std::uint32_t idx = 0; idx < ids.size(); ++idx) {
    id_of_position[mine.position_of_id[idx]] = idx;
  }
  std::vector<std::string> common;
  common.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint32_t pos = rr.u32();
    if (pos >= ids.size()) throw ProtocolError("intersection position out of range");
    common.push_back(ids.ids[id_of_position[pos]]);
  }
  return IdSet::from(std::move(common));
}

std::optional<std::size_t> psi_cardinality_session(Role role, const IdSet& ids,
                                                   net::Channel& ch,
                                                   const SessionOptions& opts) {
  const Scalar key = opts.scalar_seed ? scalar_from_seed(*opts.scalar_seed) : random_scalar();
  const std::uint64_t shuffle_seed = opts.shuffle_seed ? *opts.shuffle_seed : entropy_seed();

  if (role == Role::a) {
    BlindedSet mine = blind(key, ids, shuffle_seed);
    net::Frame offer;
    offer.type = net::MsgType::psi_offer;
    {
      ByteWriter w;
      write_points(w, mine.points);
      offer.payload = w.take();
    }
    ch.send(offer);

    net::Frame reply = ch.expect(net::MsgType::psi_reply);
    ByteReader rr(reply.payload);
    std::vector<Point> mine_doubled = read_points(rr);
    std::vector<Point> peer_blinded = read_points(rr);
    if (mine_doubled.size() != mine.points.size()) {
      throw ProtocolError("double-blinded set size mismatch");
    }
    std::set<Point> mine_set(mine_doubled.begin(), mine_doubled.end());
    std::size_t count = 0;
    for (const auto& q : peer_blinded) {
      if (mine_set.count(blind_point(key, q)) != 0) ++count;
    }
    return count;
  }

  net::Frame offer = ch.expect(net::MsgType::psi_offer);
  ByteReader pr(offer.payload);
  BlindedSet peer{read_points(pr), 0};
  BlindedSet peer_doubled = double_blind(key, peer);
  // Shuffle the doubly-blinded reply so A cannot link matches back to its
  // own submission order (A only needs the count).
  Rng rng(shuffle_seed ^ 0x9e3779b97f4a7c15ULL);
  rng.shuffle(peer_doubled.points);
  BlindedSet mine = blind(key, ids, shuffle_seed);

  net::Frame reply;
  reply.type = net::MsgType::psi_reply;
  {
    ByteWriter w;
    write_points(w, peer_doubled.points);
    write_points(w, mine.points);
    reply.payload = w.take();
  }
  ch.send(reply);
  return std::nullopt;
}

}  // namespace fedgbm::psi
