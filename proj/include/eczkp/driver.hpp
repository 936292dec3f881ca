#pragma once

#include <optional>
#include <string>

#include "eczkp/net.hpp"
#include "eczkp/wire.hpp"

namespace eczkp {

// Session outcomes, each mapped to a distinct CLI exit code.
enum class SessionOutcome {
  Accepted,
  VerificationFailed,
  DecodeFailed,
  TransportFailed,
  ProtocolViolation,  // out-of-order message, hello mismatch
  PoolExhausted,
};
std::string to_string(SessionOutcome outcome);

struct DriverResult {
  SessionOutcome outcome = SessionOutcome::TransportFailed;
  std::optional<CostReport> report;
  std::optional<std::string> key_fingerprint;  // zkp3 mutual accept only
  std::string detail;

  bool accepted() const { return outcome == SessionOutcome::Accepted; }
};

// Frame-level stream I/O (version octet handled by the handshake).
void write_frame(ByteStream& stream, const WireMessage& msg);
WireMessage read_frame(ByteStream& stream);

// One session per connection. The initiator is the side that opened the
// connection: it speaks first in the hello exchange and in each ZKP3 round.
// ZKP1/ZKP2 provers are always the initiator, verifiers the responder.
DriverResult run_zkp1_prover(ByteStream& stream, Zkp1Prover& prover, Rng& rng);
DriverResult run_zkp1_verifier(ByteStream& stream, Zkp1Verifier& verifier);
DriverResult run_zkp2_prover(ByteStream& stream, Zkp2Prover& prover, Rng& rng);
DriverResult run_zkp2_verifier(ByteStream& stream, Zkp2Verifier& verifier, Rng& rng);
DriverResult run_zkp3_party(ByteStream& stream, Zkp3Party& party, Rng& rng,
                            bool initiator);

// Short public fingerprint of a session key (hash prefix, never the key).
std::string key_fingerprint(const SessionKey& key);

}  // namespace eczkp
