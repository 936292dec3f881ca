#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eczkp/protocols.hpp"

namespace eczkp {

// Normative wire protocol.
//
// Each direction of a stream starts with the version octet 0x01, followed by
// frames of the form
//   [protocol id: 1 octet][message type: 1 octet][payload length: u16 BE][payload]
// Payloads: points in the uncompressed encoding, scalars fixed-width
// big-endian (ceil(bits(m)/8) octets), digests raw 32 octets, results one
// octet (0 = reject, 1 = accept), hello = u8-length-prefixed curve id.

constexpr std::uint8_t kWireVersion = 0x01;

enum class ProtocolId : std::uint8_t { Zkp1 = 1, Zkp2 = 2, Zkp3 = 3 };
enum class MessageType : std::uint8_t {
  Witness = 1,
  Challenge = 2,
  Answer = 3,
  Result = 4,
  Hello = 5,
};

std::string to_string(ProtocolId id);
ProtocolId protocol_id_from_string(std::string_view s);  // "zkp1" | "zkp2" | "zkp3"

struct WireMessage {
  ProtocolId protocol;
  MessageType type;
  std::vector<std::uint8_t> payload;

  friend bool operator==(const WireMessage& a, const WireMessage& b) {
    return a.protocol == b.protocol && a.type == b.type && a.payload == b.payload;
  }
};

// Frame codec. decode_frame throws TruncatedMessageError / BadTagError for
// malformed octets and requires the input to be exactly one frame.
std::vector<std::uint8_t> encode_frame(const WireMessage& msg);
WireMessage decode_frame(std::span<const std::uint8_t> octets);

// Typed payload constructors.
WireMessage make_point_witness(ProtocolId id, const CurveParams& curve, const CurvePoint& w);
WireMessage make_digest_witness(const Digest& w);  // ZKP2
WireMessage make_challenge(ProtocolId id, const CurveParams& curve, const Scalar& e);
WireMessage make_answer(ProtocolId id, const CurveParams& curve, const Scalar& y);
WireMessage make_result(ProtocolId id, bool accepted);
WireMessage make_hello(ProtocolId id, const std::string& curve_id);

// Typed payload decoders; validate protocol/type combination, range and curve
// membership. All throw DecodeError subtypes on malformed input.
CurvePoint decode_point_witness(const CurveParams& curve, const WireMessage& msg);
Digest decode_digest_witness(const WireMessage& msg);
Scalar decode_challenge(const CurveParams& curve, const WireMessage& msg);
Scalar decode_answer(const CurveParams& curve, const WireMessage& msg);
bool decode_result(const WireMessage& msg);
std::string decode_hello(const WireMessage& msg);  // returns curve id

// ---------------------------------------------------------------------------
// Cost accounting.
// ---------------------------------------------------------------------------

enum class Role { Prover, Verifier, Party };
std::string to_string(Role role);

struct CostReport {
  std::string protocol;
  std::string curve;
  std::string role;
  std::uint64_t lambda = 0;      // scalar-point products actually performed
  std::uint64_t mu = 0;          // hash evaluations actually performed
  std::uint64_t point_adds = 0;
  std::uint64_t transferred_bits = 0;   // payload bits of messages this party sent
  std::uint64_t received_bits = 0;      // payload bits of messages this party received
  std::uint64_t stored_secret_bits = 0;
  std::uint64_t table4_lambda = 0;  // published-comparison subset
  std::uint64_t table4_mu = 0;

  std::uint64_t total_bits() const { return transferred_bits + received_bits; }
};

// JSON-lines emission: one object per report.
std::string cost_report_json(const CostReport& report);

// Measurement configuration: payload bits only by default; the flag adds the
// 4-octet frame header per counted message (the version octet and hello stay
// out either way).
struct MeasureConfig {
  bool include_framing = false;
};

// Transferred bits per message under the normative encoding, derived from the
// session content. A result message is part of every session flow: the
// verifier reports its verdict (ZKP1/2), and ZKP3 parties exchange verdicts.
std::uint64_t payload_bits(const WireMessage& msg, const MeasureConfig& cfg = {});

// Per-party reports for completed sessions (state Accepted or Rejected).
// Stored secret bits: scalars are 8*ceil(bits(m)/8) bits, points two
// fixed-width coordinates; ZKP1/ZKP3 store secret + compromise, ZKP2 stores
// the secret plus the full pool.
CostReport measure_session(const Zkp1Prover& prover, const MeasureConfig& cfg = {});
CostReport measure_session(const Zkp1Verifier& verifier, const MeasureConfig& cfg = {});
CostReport measure_session(const Zkp2Prover& prover, const MeasureConfig& cfg = {});
CostReport measure_session(const Zkp2Verifier& verifier, const MeasureConfig& cfg = {});
CostReport measure_session(const Zkp3Party& party, const MeasureConfig& cfg = {});

// Bandwidth/memory ordering across the three protocols on one curve.
// Asserting the expected shape (ZKP2 minimal bandwidth, maximal memory) is the
// caller's job; this just ranks deterministically.
struct ProtocolRanking {
  std::vector<std::string> by_transferred_bits;  // ascending, prover/party side
  std::vector<std::string> by_stored_bits;       // ascending, prover/party side
};
ProtocolRanking compare_protocols(const std::vector<CostReport>& reports);

}  // namespace eczkp
