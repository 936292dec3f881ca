#include "eczkp/protocols.hpp"

#include <algorithm>

namespace eczkp {

namespace {

// Witness validation: on-curve membership. Both named curves have prime-order
// groups of cofactor 1, so curve membership already implies subgroup
// membership; curves with a composite order and a small group get an explicit
// order*w == infinity check.
bool witness_acceptable(const CurveParams& curve, const CurvePoint& w) {
  if (!w.is_infinity() && w.x().modulus() != curve.p()) return false;
  if (!is_on_curve(curve, w)) return false;
  if (!curve.order_is_prime() && curve.order().bit_length() <= 20) {
    CurvePoint acc = CurvePoint::infinity();
    for (std::size_t i = curve.order().bit_length(); i-- > 0;) {
      acc = point_add(curve, acc, acc);
      if (curve.order().bit(i)) acc = point_add(curve, acc, w);
    }
    return acc == CurvePoint::infinity();
  }
  return true;
}

void expect_state(SessionState actual, SessionState expected, const char* op) {
  if (actual != expected)
    throw StateError(std::string(op) + ": session not in the required state");
}

}  // namespace

Identity keygen(const CurveHandle& curve, Rng& rng) {
  Scalar secret = rng.uniform_nonzero_scalar(*curve);
  return identity_from_secret(curve, secret);
}

Identity identity_from_secret(const CurveHandle& curve, const Scalar& secret) {
  if (secret.is_zero()) throw ParameterError("identity secret must be nonzero");
  if (secret.modulus() != curve->order())
    throw ParameterError("secret does not belong to this curve's order");
  CurvePoint pub = scalar_mul(*curve, secret, curve->generator());
  return Identity{curve, secret, pub};
}

// ---- ZKP1 -------------------------------------------------------------------

Zkp1Prover::Zkp1Prover(Identity identity) : identity_(std::move(identity)) {}

CurvePoint Zkp1Prover::commit(Rng& rng) {
  expect_state(state_, SessionState::Init, "zkp1 commit");
  return commit_with(rng.uniform_nonzero_scalar(*identity_.curve));
}

CurvePoint Zkp1Prover::commit_with(const Scalar& x) {
  expect_state(state_, SessionState::Init, "zkp1 commit");
  compromise_ = x;
  witness_ = scalar_mul(*identity_.curve, x, identity_.curve->generator());
  costs_.lambda += 1;
  costs_.table4_lambda += 1;
  state_ = SessionState::WitnessSent;
  return *witness_;
}

Scalar Zkp1Prover::respond(const Scalar& e) {
  expect_state(state_, SessionState::WitnessSent, "zkp1 respond");
  // y = x + a*e mod m
  Scalar y = compromise_->add(identity_.secret.mul(e));
  state_ = SessionState::Answered;
  return y;
}

const CurvePoint& Zkp1Prover::witness() const {
  if (!witness_) throw StateError("zkp1 prover has not committed");
  return *witness_;
}

Zkp1Verifier::Zkp1Verifier(CurveHandle curve, CurvePoint peer_public, HashKind hash,
                           Rng& rng)
    : curve_(std::move(curve)), peer_public_(std::move(peer_public)), hash_(hash) {
  if (!witness_acceptable(*curve_, peer_public_) || peer_public_.is_infinity())
    throw ParameterError("peer public identification is not a valid group element");
  rng.fill(challenge_salt_);
}

std::optional<Scalar> Zkp1Verifier::challenge(const CurvePoint& witness) {
  expect_state(state_, SessionState::Init, "zkp1 challenge");
  if (!witness_acceptable(*curve_, witness)) {
    state_ = SessionState::Rejected;
    return std::nullopt;
  }
  witness_ = witness;
  // The salt makes this the verifier's own challenge function; the prover
  // only ever sees the resulting scalar.
  std::vector<CurvePoint> pts{curve_->generator(), peer_public_, witness};
  Digest d = hash_points(*curve_, hash_, "ZKP1/" + hex(challenge_salt_), pts);
  costs_.mu += 1;
  costs_.table4_mu += 1;
  challenge_ = digest_to_scalar(*curve_, d);
  state_ = SessionState::Challenged;
  return challenge_;
}

bool Zkp1Verifier::verify(const Scalar& y) {
  expect_state(state_, SessionState::Challenged, "zkp1 verify");
  CurvePoint lhs = scalar_mul(*curve_, y, curve_->generator());
  CurvePoint rhs = scalar_mul(*curve_, *challenge_, peer_public_);
  costs_.lambda += 2;
  costs_.table4_lambda += 2;
  CurvePoint check = point_add(*curve_, lhs, point_neg(*curve_, rhs));
  costs_.point_adds += 1;
  const bool ok = check == *witness_;
  state_ = ok ? SessionState::Accepted : SessionState::Rejected;
  return ok;
}

// ---- ZKP2 -------------------------------------------------------------------

CompromisePool::CompromisePool(CurveHandle curve, std::vector<PoolEntry> entries)
    : curve_(std::move(curve)), entries_(std::move(entries)) {}

CompromisePool CompromisePool::generate(const CurveHandle& curve, std::size_t n, Rng& rng) {
  if (n < 2) throw ParameterError("compromise pool needs at least 2 entries");
  std::vector<PoolEntry> entries;
  entries.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Scalar x = rng.uniform_nonzero_scalar(*curve);
    entries.push_back(PoolEntry{x, scalar_mul(*curve, x, curve->generator())});
  }
  return CompromisePool(curve, std::move(entries));
}

CompromisePool CompromisePool::from_entries(const CurveHandle& curve,
                                            std::vector<PoolEntry> entries) {
  if (entries.size() < 2) throw ParameterError("compromise pool needs at least 2 entries");
  for (const PoolEntry& e : entries) {
    if (scalar_mul(*curve, e.x, curve->generator()) != e.point)
      throw ParameterError("pool entry point does not match its scalar");
  }
  return CompromisePool(curve, std::move(entries));
}

std::size_t CompromisePool::unused_pair_count() const {
  const std::size_t n = entries_.size();
  return n * (n - 1) / 2 - used_.size();
}

bool CompromisePool::pair_used(std::size_t j, std::size_t k) const {
  auto p = std::minmax(j, k);
  return used_.count({p.first, p.second}) > 0;
}

std::pair<std::size_t, std::size_t> CompromisePool::draw_pair(Rng& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> free_pairs;
  const std::size_t n = entries_.size();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k)
      if (!used_.count({j, k})) free_pairs.emplace_back(j, k);
  if (free_pairs.empty())
    throw PoolExhaustedError("compromise pool exhausted; re-provisioning required");
  auto pick = free_pairs[static_cast<std::size_t>(
      rng.uniform_below(UInt{free_pairs.size()}).low_u64())];
  used_.insert(pick);
  return pick;
}

void CompromisePool::consume_pair(std::size_t j, std::size_t k) {
  if (j == k) throw ParameterError("pool pair must have distinct indices");
  if (j >= entries_.size() || k >= entries_.size())
    throw ParameterError("pool pair index out of range");
  auto p = std::minmax(j, k);
  if (used_.count({p.first, p.second}))
    throw PoolExhaustedError("pool pair already consumed");
  used_.insert({p.first, p.second});
}

Zkp2Prover::Zkp2Prover(Identity identity, CompromisePool& pool, HashKind hash)
    : identity_(std::move(identity)), pool_(&pool), hash_(hash) {
  if (pool.curve()->order() != identity_.curve->order() ||
      pool.curve()->p() != identity_.curve->p())
    throw ParameterError("pool and identity use different curves");
}

Digest Zkp2Prover::commit(Rng& rng) {
  expect_state(state_, SessionState::Init, "zkp2 commit");
  auto [j, k] = pool_->draw_pair(rng);
  // draw_pair already consumed the pair
  const PoolEntry& ej = pool_->entry(j);
  const PoolEntry& ek = pool_->entry(k);
  pair_sum_ = ej.x.add(ek.x);
  CurvePoint sum = point_add(*identity_.curve, ej.point, ek.point);
  costs_.point_adds += 1;
  std::vector<CurvePoint> pts{sum};
  Digest w = hash_points(*identity_.curve, hash_, "ZKP2-witness", pts);
  costs_.mu += 1;  // online hash; the published comparison books no cost here
  state_ = SessionState::WitnessSent;
  return w;
}

Digest Zkp2Prover::commit_with_pair(std::size_t j, std::size_t k) {
  expect_state(state_, SessionState::Init, "zkp2 commit");
  pool_->consume_pair(j, k);
  const PoolEntry& ej = pool_->entry(j);
  const PoolEntry& ek = pool_->entry(k);
  pair_sum_ = ej.x.add(ek.x);
  CurvePoint sum = point_add(*identity_.curve, ej.point, ek.point);
  costs_.point_adds += 1;
  std::vector<CurvePoint> pts{sum};
  Digest w = hash_points(*identity_.curve, hash_, "ZKP2-witness", pts);
  costs_.mu += 1;
  state_ = SessionState::WitnessSent;
  return w;
}

Scalar Zkp2Prover::respond(const Scalar& e) {
  expect_state(state_, SessionState::WitnessSent, "zkp2 respond");
  // y = x_j + x_k - a*e mod m
  Scalar y = pair_sum_->sub(identity_.secret.mul(e));
  state_ = SessionState::Answered;
  return y;
}

Zkp2Verifier::Zkp2Verifier(CurveHandle curve, CurvePoint peer_public, HashKind hash)
    : curve_(std::move(curve)), peer_public_(std::move(peer_public)), hash_(hash) {
  if (!witness_acceptable(*curve_, peer_public_) || peer_public_.is_infinity())
    throw ParameterError("peer public identification is not a valid group element");
}

void Zkp2Verifier::receive_witness(const Digest& w) {
  expect_state(state_, SessionState::Init, "zkp2 receive witness");
  witness_ = w;
  state_ = SessionState::WitnessSent;
}

Scalar Zkp2Verifier::challenge(Rng& rng) {
  expect_state(state_, SessionState::WitnessSent, "zkp2 challenge");
  challenge_ = rng.uniform_scalar(*curve_);
  state_ = SessionState::Challenged;
  return *challenge_;
}

bool Zkp2Verifier::verify(const Scalar& y) {
  expect_state(state_, SessionState::Challenged, "zkp2 verify");
  CurvePoint lhs = scalar_mul(*curve_, y, curve_->generator());
  CurvePoint rhs = scalar_mul(*curve_, *challenge_, peer_public_);
  costs_.lambda += 2;
  costs_.table4_lambda += 2;
  CurvePoint sum = point_add(*curve_, lhs, rhs);
  costs_.point_adds += 1;
  std::vector<CurvePoint> pts{sum};
  Digest expected = hash_points(*curve_, hash_, "ZKP2-witness", pts);
  costs_.mu += 1;
  costs_.table4_mu += 1;
  const bool ok = expected == *witness_;
  state_ = ok ? SessionState::Accepted : SessionState::Rejected;
  return ok;
}

// ---- ZKP3 -------------------------------------------------------------------

Zkp3Party::Zkp3Party(Identity identity, CurvePoint peer_public, HashKind hash)
    : identity_(std::move(identity)),
      peer_public_(std::move(peer_public)),
      hash_(hash) {
  if (!witness_acceptable(*identity_.curve, peer_public_) || peer_public_.is_infinity())
    throw ParameterError("peer public identification is not a valid group element");
}

CurvePoint Zkp3Party::commit(Rng& rng) {
  expect_state(state_, SessionState::Init, "zkp3 commit");
  return commit_with(rng.uniform_nonzero_scalar(*identity_.curve));
}

CurvePoint Zkp3Party::commit_with(const Scalar& x) {
  expect_state(state_, SessionState::Init, "zkp3 commit");
  compromise_ = x;
  witness_ = scalar_mul(*identity_.curve, x, identity_.curve->generator());
  costs_.lambda += 1;
  costs_.table4_lambda += 1;
  state_ = SessionState::WitnessSent;
  return *witness_;
}

bool Zkp3Party::receive_witness(const CurvePoint& peer_witness) {
  expect_state(state_, SessionState::WitnessSent, "zkp3 receive witness");
  const CurveParams& curve = *identity_.curve;
  if (!witness_acceptable(curve, peer_witness)) {
    state_ = SessionState::Rejected;
    return false;
  }
  peer_witness_ = peer_witness;
  // Shared secrets: a*(b*G) and x_self*(x_peer*G); identical on both sides.
  CurvePoint long_term = scalar_mul(curve, identity_.secret, peer_public_);
  CurvePoint ephemeral = scalar_mul(curve, *compromise_, peer_witness);
  costs_.lambda += 2;
  costs_.table4_lambda += 2;
  std::vector<CurvePoint> pts{curve.generator(), long_term, ephemeral};
  challenge_digest_ = hash_points(curve, hash_, "ZKP3", pts);
  costs_.mu += 1;
  costs_.table4_mu += 1;
  challenge_ = digest_to_scalar(curve, *challenge_digest_);
  state_ = SessionState::Challenged;
  return true;
}

Scalar Zkp3Party::respond() {
  expect_state(state_, SessionState::Challenged, "zkp3 respond");
  Scalar y = compromise_->add(identity_.secret.mul(*challenge_));
  state_ = SessionState::Answered;
  return y;
}

bool Zkp3Party::verify_peer(const Scalar& peer_y) {
  expect_state(state_, SessionState::Answered, "zkp3 verify");
  const CurveParams& curve = *identity_.curve;
  CurvePoint lhs = scalar_mul(curve, peer_y, curve.generator());
  CurvePoint rhs = scalar_mul(curve, *challenge_, peer_public_);
  costs_.lambda += 2;  // verification products stay out of the table4 subset
  CurvePoint check = point_add(curve, lhs, point_neg(curve, rhs));
  costs_.point_adds += 1;
  const bool ok = check == *peer_witness_;
  state_ = ok ? SessionState::Accepted : SessionState::Rejected;
  return ok;
}

bool Zkp3Party::finalize(bool peer_accepted) {
  if (state_ != SessionState::Accepted && state_ != SessionState::Rejected)
    throw StateError("zkp3 finalize: session still in progress");
  if (finalized_) throw StateError("zkp3 finalize: already finalized");
  finalized_ = true;
  mutual_accept_ = (state_ == SessionState::Accepted) && peer_accepted;
  if (mutual_accept_) {
    key_ = derive_session_key(hash_, *challenge_digest_);
    costs_.mu += 1;  // KDF evaluation; no table4 counterpart
  } else {
    state_ = SessionState::Rejected;
  }
  return mutual_accept_;
}

const SessionKey& Zkp3Party::session_key() const {
  if (!mutual_accept_ || !key_)
    throw StateError("session key available only after mutual acceptance");
  return *key_;
}

const Digest& Zkp3Party::challenge_digest() const {
  if (!challenge_digest_) throw StateError("challenge digest not derived yet");
  return *challenge_digest_;
}

const CurvePoint& Zkp3Party::witness() const {
  if (!witness_) throw StateError("zkp3 party has not committed");
  return *witness_;
}

Zkp3RunResult zkp3_run(const Identity& a, const Identity& b, Rng& rng_a, Rng& rng_b,
                       HashKind hash) {
  Zkp3Party pa(a, b.public_point, hash);
  Zkp3Party pb(b, a.public_point, hash);
  CurvePoint wa = pa.commit(rng_a);
  CurvePoint wb = pb.commit(rng_b);
  pa.receive_witness(wb);
  pb.receive_witness(wa);
  Scalar ya = pa.respond();
  Scalar yb = pb.respond();
  bool a_ok = pa.verify_peer(yb);
  bool b_ok = pb.verify_peer(ya);
  pa.finalize(b_ok);
  pb.finalize(a_ok);
  return Zkp3RunResult{std::move(pa), std::move(pb)};
}

// ---- simulator ---------------------------------------------------------------

SimulatedTranscript simulate_transcript(const CurveHandle& curve,
                                        const CurvePoint& public_point, Rng& rng) {
  Scalar y = rng.uniform_scalar(*curve);
  Scalar e = rng.uniform_scalar(*curve);
  return simulate_transcript_with(curve, public_point, y, e);
}

SimulatedTranscript simulate_transcript_with(const CurveHandle& curve,
                                             const CurvePoint& public_point,
                                             const Scalar& y, const Scalar& e) {
  CurvePoint yg = scalar_mul(*curve, y, curve->generator());
  CurvePoint ep = scalar_mul(*curve, e, public_point);
  CurvePoint w = point_add(*curve, yg, point_neg(*curve, ep));
  return SimulatedTranscript{w, e, y};
}

}  // namespace eczkp
