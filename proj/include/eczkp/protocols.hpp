#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "eczkp/challenge.hpp"
#include "eczkp/field_curve.hpp"
#include "eczkp/rng.hpp"

namespace eczkp {

// A party's long-term key pair: secret scalar a and public point a*G.
struct Identity {
  CurveHandle curve;
  Scalar secret;
  CurvePoint public_point;
};

// Uniform secret in [1, m-1]; public point is never infinity because the
// generator has prime order.
Identity keygen(const CurveHandle& curve, Rng& rng);
// Deterministic variant used by fixtures and identity files.
Identity identity_from_secret(const CurveHandle& curve, const Scalar& secret);

enum class SessionState {
  Init,
  WitnessSent,
  Challenged,
  Answered,
  Accepted,
  Rejected,
};

// Operation counters for one session, maintained by the session objects.
// lambda/mu/point_adds count every scalar-point product, hash evaluation and
// point addition actually performed; table4_lambda/table4_mu are the subset
// matching the published comparison convention (witness + challenge products
// only, verification products and the session-key KDF excluded).
struct CostCounters {
  std::uint64_t lambda = 0;
  std::uint64_t mu = 0;
  std::uint64_t point_adds = 0;
  std::uint64_t table4_lambda = 0;
  std::uint64_t table4_mu = 0;
};

// ---------------------------------------------------------------------------
// ZKP1: hash-challenge one-way authentication.
//   witness  w = x*G
//   challenge e = H(G, PuId, w) mod m      (computed and sent by the verifier)
//   answer   y = x + a*e mod m
//   check    y*G - e*PuId == w
// ---------------------------------------------------------------------------

class Zkp1Prover {
 public:
  Zkp1Prover(Identity identity);

  CurvePoint commit(Rng& rng);                  // Init -> WitnessSent
  CurvePoint commit_with(const Scalar& x);      // forced-compromise fixture hook
  Scalar respond(const Scalar& e);              // WitnessSent -> Answered

  SessionState state() const { return state_; }
  const CostCounters& costs() const { return costs_; }
  const Identity& identity() const { return identity_; }
  const CurvePoint& witness() const;

 private:
  Identity identity_;
  SessionState state_ = SessionState::Init;
  std::optional<Scalar> compromise_;
  std::optional<CurvePoint> witness_;
  CostCounters costs_;
};

class Zkp1Verifier {
 public:
  // Each verifier draws a private challenge salt from `rng`: the challenge
  // derivation is a hash function selected by the verifier, so a transcript
  // recorded against one verifier never replays against a fresh one. Message
  // flow and cost counts are unaffected; runs are reproducible given seeds.
  Zkp1Verifier(CurveHandle curve, CurvePoint peer_public, HashKind hash, Rng& rng);
  Zkp1Verifier(CurveHandle curve, CurvePoint peer_public, Rng& rng)
      : Zkp1Verifier(std::move(curve), std::move(peer_public), HashKind::Sha3_256, rng) {}

  // Returns the challenge, or nullopt when the witness is rejected
  // (off-curve / wrong subgroup); rejection is a result, not an error.
  std::optional<Scalar> challenge(const CurvePoint& witness);
  bool verify(const Scalar& y);                 // Challenged -> Accepted/Rejected

  SessionState state() const { return state_; }
  const CostCounters& costs() const { return costs_; }
  const CurveHandle& curve() const { return curve_; }
  const CurvePoint& peer_public() const { return peer_public_; }
  const std::optional<Scalar>& issued_challenge() const { return challenge_; }
  const std::optional<CurvePoint>& received_witness() const { return witness_; }

 private:
  CurveHandle curve_;
  CurvePoint peer_public_;
  HashKind hash_;
  std::array<std::uint8_t, 16> challenge_salt_{};
  SessionState state_ = SessionState::Init;
  std::optional<CurvePoint> witness_;
  std::optional<Scalar> challenge_;
  CostCounters costs_;
};

// ---------------------------------------------------------------------------
// ZKP2: precomputed-pool one-way authentication.
//   offline  pool = { (x_i, X_i = x_i*G) }
//   witness  w = H(X_j + X_k), fresh unordered pair {j,k}, j != k
//   challenge e uniform in [0, m)
//   answer   y = x_j + x_k - a*e mod m
//   check    H(y*G + e*PuId) == w
// ---------------------------------------------------------------------------

struct PoolEntry {
  Scalar x;
  CurvePoint point;  // x*G
};

// Mutable pool state; exclusive access per session operation.
class CompromisePool {
 public:
  // n >= 2; offline cost is n scalar products, recorded for reporting.
  static CompromisePool generate(const CurveHandle& curve, std::size_t n, Rng& rng);
  static CompromisePool from_entries(const CurveHandle& curve,
                                     std::vector<PoolEntry> entries);

  std::size_t size() const { return entries_.size(); }
  const PoolEntry& entry(std::size_t i) const { return entries_.at(i); }
  std::size_t offline_lambda() const { return entries_.size(); }
  std::size_t unused_pair_count() const;
  bool pair_used(std::size_t j, std::size_t k) const;

  // Draws a uniformly random unused unordered pair and marks it consumed.
  // Throws PoolExhaustedError when none remain.
  std::pair<std::size_t, std::size_t> draw_pair(Rng& rng);
  // Fixture hook; throws on j == k or reuse.
  void consume_pair(std::size_t j, std::size_t k);

  const CurveHandle& curve() const { return curve_; }

 private:
  CompromisePool(CurveHandle curve, std::vector<PoolEntry> entries);

  CurveHandle curve_;
  std::vector<PoolEntry> entries_;
  std::set<std::pair<std::size_t, std::size_t>> used_;  // normalized j < k
};

class Zkp2Prover {
 public:
  // The pool outlives the session and is borrowed exclusively.
  Zkp2Prover(Identity identity, CompromisePool& pool, HashKind hash = HashKind::Sha3_256);

  Digest commit(Rng& rng);                                   // draws a fresh pair
  Digest commit_with_pair(std::size_t j, std::size_t k);     // fixture hook
  Scalar respond(const Scalar& e);

  SessionState state() const { return state_; }
  const CostCounters& costs() const { return costs_; }
  const Identity& identity() const { return identity_; }
  std::size_t pool_size() const { return pool_->size(); }

 private:
  Identity identity_;
  CompromisePool* pool_;
  HashKind hash_;
  SessionState state_ = SessionState::Init;
  std::optional<Scalar> pair_sum_;  // x_j + x_k mod m
  CostCounters costs_;
};

class Zkp2Verifier {
 public:
  Zkp2Verifier(CurveHandle curve, CurvePoint peer_public,
               HashKind hash = HashKind::Sha3_256);

  void receive_witness(const Digest& w);
  Scalar challenge(Rng& rng);  // uniform in [0, m)
  bool verify(const Scalar& y);

  SessionState state() const { return state_; }
  const CostCounters& costs() const { return costs_; }
  const CurveHandle& curve() const { return curve_; }
  const std::optional<Scalar>& issued_challenge() const { return challenge_; }

 private:
  CurveHandle curve_;
  CurvePoint peer_public_;
  HashKind hash_;
  SessionState state_ = SessionState::Init;
  std::optional<Digest> witness_;
  std::optional<Scalar> challenge_;
  CostCounters costs_;
};

// ---------------------------------------------------------------------------
// ZKP3: mutual authentication with key agreement. Fully symmetric; each party
// runs commit -> receive_witness -> respond -> verify_peer -> finalize.
// The challenge is never transferred: e = H(G, a*PuId_peer, x*w_peer), which
// both sides derive identically (a*b*G and x_A*x_B*G are shared secrets).
// On mutual acceptance both sides hold the same session key, derived from the
// challenge digest.
// ---------------------------------------------------------------------------

class Zkp3Party {
 public:
  Zkp3Party(Identity identity, CurvePoint peer_public,
            HashKind hash = HashKind::Sha3_256);

  CurvePoint commit(Rng& rng);              // Init -> WitnessSent
  CurvePoint commit_with(const Scalar& x);  // fixture hook
  // WitnessSent -> Challenged (derives the local challenge); rejects
  // off-curve witnesses by entering Rejected.
  bool receive_witness(const CurvePoint& peer_witness);
  Scalar respond();                         // Challenged -> Answered
  bool verify_peer(const Scalar& peer_y);   // Answered -> Accepted/Rejected (local)
  // Mutual outcome: local acceptance AND the peer's reported verdict. The
  // session key is released only on mutual acceptance.
  bool finalize(bool peer_accepted);

  SessionState state() const { return state_; }
  const CostCounters& costs() const { return costs_; }
  bool locally_accepted() const { return state_ == SessionState::Accepted; }
  bool mutually_accepted() const { return mutual_accept_; }
  const SessionKey& session_key() const;  // valid only after mutual acceptance
  const Digest& challenge_digest() const;
  const Identity& identity() const { return identity_; }
  const CurvePoint& witness() const;

 private:
  Identity identity_;
  CurvePoint peer_public_;
  HashKind hash_;
  SessionState state_ = SessionState::Init;
  std::optional<Scalar> compromise_;
  std::optional<CurvePoint> witness_;
  std::optional<CurvePoint> peer_witness_;
  std::optional<Digest> challenge_digest_;
  std::optional<Scalar> challenge_;
  std::optional<SessionKey> key_;
  bool mutual_accept_ = false;
  bool finalized_ = false;
  CostCounters costs_;
};

// In-memory honest run of ZKP3 between two identities. Returns both parties
// after finalize; used by tests and the harness.
struct Zkp3RunResult {
  Zkp3Party party_a;
  Zkp3Party party_b;
};
Zkp3RunResult zkp3_run(const Identity& a, const Identity& b, Rng& rng_a, Rng& rng_b,
                       HashKind hash = HashKind::Sha3_256);

// ---------------------------------------------------------------------------
// Honest-verifier transcript simulator for the ZKP1 shape: samples (y, e)
// uniformly and sets w = y*G - e*PuId. The output verifies by construction
// and never touches the secret.
// ---------------------------------------------------------------------------

struct SimulatedTranscript {
  CurvePoint witness;
  Scalar challenge;
  Scalar answer;
};

SimulatedTranscript simulate_transcript(const CurveHandle& curve,
                                        const CurvePoint& public_point, Rng& rng);
// Deterministic variant for exhaustive enumeration.
SimulatedTranscript simulate_transcript_with(const CurveHandle& curve,
                                             const CurvePoint& public_point,
                                             const Scalar& y, const Scalar& e);

}  // namespace eczkp
