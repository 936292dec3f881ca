#include "eczkp/driver.hpp"

#include "eczkp/sha3.hpp"

namespace eczkp {

std::string to_string(SessionOutcome outcome) {
  switch (outcome) {
    case SessionOutcome::Accepted: return "accepted";
    case SessionOutcome::VerificationFailed: return "verification-failed";
    case SessionOutcome::DecodeFailed: return "decode-failed";
    case SessionOutcome::TransportFailed: return "transport-failed";
    case SessionOutcome::ProtocolViolation: return "protocol-violation";
    case SessionOutcome::PoolExhausted: return "pool-exhausted";
  }
  return "unknown";
}

void write_frame(ByteStream& stream, const WireMessage& msg) {
  stream.send(encode_frame(msg));
}

WireMessage read_frame(ByteStream& stream) {
  std::array<std::uint8_t, 4> header;
  stream.recv_exact(header);
  const std::size_t len = (static_cast<std::size_t>(header[2]) << 8) | header[3];
  std::vector<std::uint8_t> frame(header.begin(), header.end());
  frame.resize(4 + len);
  stream.recv_exact(std::span(frame).subspan(4));
  return decode_frame(frame);
}

std::string key_fingerprint(const SessionKey& key) {
  static constexpr std::string_view kTag = "ZKP3-FP";
  std::vector<std::uint8_t> preimage;
  preimage.reserve(1 + kTag.size() + key.octets.size());
  preimage.push_back(static_cast<std::uint8_t>(kTag.size()));
  preimage.insert(preimage.end(), kTag.begin(), kTag.end());
  preimage.insert(preimage.end(), key.octets.begin(), key.octets.end());
  auto digest = sha3_256(preimage);
  return hex(std::span(digest).first(8));
}

namespace {

void send_version(ByteStream& stream) {
  const std::uint8_t v = kWireVersion;
  stream.send(std::span(&v, 1));
}

void check_version(ByteStream& stream) {
  std::uint8_t v = 0;
  stream.recv_exact(std::span(&v, 1));
  if (v != kWireVersion) throw BadTagError("unsupported wire version");
}

// Version + hello exchange. Both sides write before reading, so a mismatch
// can never deadlock two blocking endpoints. Returns false on protocol or
// curve disagreement.
bool handshake(ByteStream& stream, ProtocolId protocol, const std::string& curve_id) {
  send_version(stream);
  write_frame(stream, make_hello(protocol, curve_id));
  check_version(stream);
  WireMessage peer = read_frame(stream);
  return peer.type == MessageType::Hello && peer.protocol == protocol &&
         decode_hello(peer) == curve_id;
}

void best_effort_reject(ByteStream& stream, ProtocolId protocol) {
  try {
    write_frame(stream, make_result(protocol, false));
  } catch (const Error&) {
    // peer already gone; nothing to report to
  }
}

DriverResult failure(SessionOutcome outcome, std::string detail) {
  DriverResult r;
  r.outcome = outcome;
  r.detail = std::move(detail);
  return r;
}

// Classifies exceptions common to all session loops.
template <typename Fn>
DriverResult guarded(ByteStream& stream, ProtocolId protocol, Fn&& fn) {
  try {
    return fn();
  } catch (const DecodeError& e) {
    best_effort_reject(stream, protocol);
    return failure(SessionOutcome::DecodeFailed, e.what());
  } catch (const PoolExhaustedError& e) {
    return failure(SessionOutcome::PoolExhausted, e.what());
  } catch (const TransportError& e) {
    return failure(SessionOutcome::TransportFailed, e.what());
  } catch (const StateError& e) {
    best_effort_reject(stream, protocol);
    return failure(SessionOutcome::ProtocolViolation, e.what());
  }
}

}  // namespace

DriverResult run_zkp1_prover(ByteStream& stream, Zkp1Prover& prover, Rng& rng) {
  const ProtocolId proto = ProtocolId::Zkp1;
  return guarded(stream, proto, [&]() -> DriverResult {
    const CurveParams& curve = *prover.identity().curve;
    if (!handshake(stream, proto, curve.id()))
      return failure(SessionOutcome::ProtocolViolation, "hello mismatch");

    write_frame(stream, make_point_witness(proto, curve, prover.commit(rng)));

    WireMessage msg = read_frame(stream);
    if (msg.type == MessageType::Result && !decode_result(msg))
      return failure(SessionOutcome::VerificationFailed, "verifier rejected the witness");
    Scalar e = decode_challenge(curve, msg);
    write_frame(stream, make_answer(proto, curve, prover.respond(e)));

    WireMessage verdict = read_frame(stream);
    DriverResult r;
    r.outcome = decode_result(verdict) ? SessionOutcome::Accepted
                                       : SessionOutcome::VerificationFailed;
    r.report = measure_session(prover);
    return r;
  });
}

DriverResult run_zkp1_verifier(ByteStream& stream, Zkp1Verifier& verifier) {
  const ProtocolId proto = ProtocolId::Zkp1;
  return guarded(stream, proto, [&]() -> DriverResult {
    const CurveParams& curve = *verifier.curve();
    if (!handshake(stream, proto, curve.id()))
      return failure(SessionOutcome::ProtocolViolation, "hello mismatch");

    CurvePoint w = decode_point_witness(curve, read_frame(stream));
    auto e = verifier.challenge(w);
    if (!e) {
      best_effort_reject(stream, proto);
      return failure(SessionOutcome::VerificationFailed, "witness rejected");
    }
    write_frame(stream, make_challenge(proto, curve, *e));

    Scalar y = decode_answer(curve, read_frame(stream));
    const bool ok = verifier.verify(y);
    write_frame(stream, make_result(proto, ok));

    DriverResult r;
    r.outcome = ok ? SessionOutcome::Accepted : SessionOutcome::VerificationFailed;
    r.report = measure_session(verifier);
    return r;
  });
}

DriverResult run_zkp2_prover(ByteStream& stream, Zkp2Prover& prover, Rng& rng) {
  const ProtocolId proto = ProtocolId::Zkp2;
  return guarded(stream, proto, [&]() -> DriverResult {
    const CurveParams& curve = *prover.identity().curve;
    // Handshake before drawing from the pool: a bad hello must not be able
    // to burn pool entries.
    if (!handshake(stream, proto, curve.id()))
      return failure(SessionOutcome::ProtocolViolation, "hello mismatch");
    Digest w = prover.commit(rng);

    write_frame(stream, make_digest_witness(w));

    WireMessage msg = read_frame(stream);
    if (msg.type == MessageType::Result && !decode_result(msg))
      return failure(SessionOutcome::VerificationFailed, "verifier rejected the witness");
    Scalar e = decode_challenge(curve, msg);
    write_frame(stream, make_answer(proto, curve, prover.respond(e)));

    WireMessage verdict = read_frame(stream);
    DriverResult r;
    r.outcome = decode_result(verdict) ? SessionOutcome::Accepted
                                       : SessionOutcome::VerificationFailed;
    r.report = measure_session(prover);
    return r;
  });
}

DriverResult run_zkp2_verifier(ByteStream& stream, Zkp2Verifier& verifier, Rng& rng) {
  const ProtocolId proto = ProtocolId::Zkp2;
  return guarded(stream, proto, [&]() -> DriverResult {
    const CurveParams& curve = *verifier.curve();
    if (!handshake(stream, proto, curve.id()))
      return failure(SessionOutcome::ProtocolViolation, "hello mismatch");

    verifier.receive_witness(decode_digest_witness(read_frame(stream)));
    write_frame(stream, make_challenge(proto, curve, verifier.challenge(rng)));

    Scalar y = decode_answer(curve, read_frame(stream));
    const bool ok = verifier.verify(y);
    write_frame(stream, make_result(proto, ok));

    DriverResult r;
    r.outcome = ok ? SessionOutcome::Accepted : SessionOutcome::VerificationFailed;
    r.report = measure_session(verifier);
    return r;
  });
}

DriverResult run_zkp3_party(ByteStream& stream, Zkp3Party& party, Rng& rng,
                            bool initiator) {
  const ProtocolId proto = ProtocolId::Zkp3;
  return guarded(stream, proto, [&]() -> DriverResult {
    const CurveParams& curve = *party.identity().curve;
    if (!handshake(stream, proto, curve.id()))
      return failure(SessionOutcome::ProtocolViolation, "hello mismatch");

    // Lockstep rounds: the initiator writes first in every round, so two
    // blocking endpoints never deadlock. A Result in place of a later message
    // is a terminal early rejection.
    CurvePoint own_witness = party.commit(rng);
    WireMessage peer_witness_msg = [&] {
      if (initiator) {
        write_frame(stream, make_point_witness(proto, curve, own_witness));
        return read_frame(stream);
      }
      WireMessage m = read_frame(stream);
      write_frame(stream, make_point_witness(proto, curve, own_witness));
      return m;
    }();

    bool witness_ok = false;
    bool peer_terminated = false;
    if (peer_witness_msg.type == MessageType::Result) {
      peer_terminated = true;
      decode_result(peer_witness_msg);
    } else {
      witness_ok = party.receive_witness(decode_point_witness(curve, peer_witness_msg));
    }

    // Answer round (a locally rejected party sends its terminal verdict).
    WireMessage own_answer = witness_ok
                                 ? make_answer(proto, curve, party.respond())
                                 : make_result(proto, false);
    WireMessage peer_answer_msg = [&] {
      if (initiator) {
        write_frame(stream, own_answer);
        return read_frame(stream);
      }
      WireMessage m = read_frame(stream);
      write_frame(stream, own_answer);
      return m;
    }();

    bool local_verdict = false;
    if (peer_answer_msg.type == MessageType::Result) {
      peer_terminated = true;
      decode_result(peer_answer_msg);
    } else if (witness_ok) {
      local_verdict = party.verify_peer(decode_answer(curve, peer_answer_msg));
    }

    // Verdict round.
    bool peer_verdict = false;
    if (initiator) {
      write_frame(stream, make_result(proto, local_verdict));
      peer_verdict = decode_result(read_frame(stream));
    } else {
      WireMessage m = read_frame(stream);
      write_frame(stream, make_result(proto, local_verdict));
      peer_verdict = decode_result(m);
    }

    DriverResult r;
    if (witness_ok && !peer_terminated &&
        (party.state() == SessionState::Accepted ||
         party.state() == SessionState::Rejected)) {
      const bool mutual = party.finalize(peer_verdict);
      r.outcome = mutual ? SessionOutcome::Accepted : SessionOutcome::VerificationFailed;
      if (mutual) r.key_fingerprint = key_fingerprint(party.session_key());
      r.report = measure_session(party);
    } else {
      r.outcome = SessionOutcome::VerificationFailed;
      r.detail = "session terminated before mutual verification";
    }
    return r;
  });
}

}  // namespace eczkp
