#include "eczkp/wire.hpp"

#include <algorithm>

#include "json.hpp"

namespace eczkp {

std::string to_string(ProtocolId id) {
  switch (id) {
    case ProtocolId::Zkp1: return "zkp1";
    case ProtocolId::Zkp2: return "zkp2";
    case ProtocolId::Zkp3: return "zkp3";
  }
  throw ParameterError("invalid protocol id");
}

ProtocolId protocol_id_from_string(std::string_view s) {
  if (s == "zkp1") return ProtocolId::Zkp1;
  if (s == "zkp2") return ProtocolId::Zkp2;
  if (s == "zkp3") return ProtocolId::Zkp3;
  throw ParameterError("unknown protocol: " + std::string(s));
}

std::string to_string(Role role) {
  switch (role) {
    case Role::Prover: return "prover";
    case Role::Verifier: return "verifier";
    case Role::Party: return "party";
  }
  throw ParameterError("invalid role");
}

std::vector<std::uint8_t> encode_frame(const WireMessage& msg) {
  if (msg.payload.size() > 0xffff)
    throw ParameterError("payload exceeds the 16-bit length field");
  std::vector<std::uint8_t> out;
  out.reserve(4 + msg.payload.size());
  out.push_back(static_cast<std::uint8_t>(msg.protocol));
  out.push_back(static_cast<std::uint8_t>(msg.type));
  out.push_back(static_cast<std::uint8_t>(msg.payload.size() >> 8));
  out.push_back(static_cast<std::uint8_t>(msg.payload.size() & 0xff));
  out.insert(out.end(), msg.payload.begin(), msg.payload.end());
  return out;
}

WireMessage decode_frame(std::span<const std::uint8_t> octets) {
  if (octets.size() < 4) throw TruncatedMessageError("frame shorter than its header");
  const std::uint8_t proto = octets[0];
  if (proto < 1 || proto > 3) throw BadTagError("unknown protocol id octet");
  const std::uint8_t type = octets[1];
  if (type < 1 || type > 5) throw BadTagError("unknown message type octet");
  const std::size_t len = (static_cast<std::size_t>(octets[2]) << 8) | octets[3];
  if (octets.size() != 4 + len)
    throw TruncatedMessageError("frame length does not match its length field");
  WireMessage msg{static_cast<ProtocolId>(proto), static_cast<MessageType>(type), {}};
  msg.payload.assign(octets.begin() + 4, octets.end());
  return msg;
}

WireMessage make_point_witness(ProtocolId id, const CurveParams& curve, const CurvePoint& w) {
  if (id == ProtocolId::Zkp2)
    throw ParameterError("zkp2 witnesses are digests, not points");
  return WireMessage{id, MessageType::Witness, encode_point(curve, w)};
}

WireMessage make_digest_witness(const Digest& w) {
  return WireMessage{ProtocolId::Zkp2, MessageType::Witness,
                     std::vector<std::uint8_t>(w.octets.begin(), w.octets.end())};
}

WireMessage make_challenge(ProtocolId id, const CurveParams& curve, const Scalar& e) {
  if (id == ProtocolId::Zkp3)
    throw ParameterError("zkp3 challenges are derived locally, never transferred");
  return WireMessage{id, MessageType::Challenge, encode_scalar(curve, e)};
}

WireMessage make_answer(ProtocolId id, const CurveParams& curve, const Scalar& y) {
  return WireMessage{id, MessageType::Answer, encode_scalar(curve, y)};
}

WireMessage make_result(ProtocolId id, bool accepted) {
  return WireMessage{id, MessageType::Result,
                     {static_cast<std::uint8_t>(accepted ? 1 : 0)}};
}

WireMessage make_hello(ProtocolId id, const std::string& curve_id) {
  if (curve_id.empty() || curve_id.size() > 255)
    throw ParameterError("curve id must be 1..255 octets");
  std::vector<std::uint8_t> payload;
  payload.push_back(static_cast<std::uint8_t>(curve_id.size()));
  payload.insert(payload.end(), curve_id.begin(), curve_id.end());
  return WireMessage{id, MessageType::Hello, payload};
}

namespace {

void expect(const WireMessage& msg, MessageType type) {
  if (msg.type != type) throw BadTagError("unexpected message type");
}

}  // namespace

CurvePoint decode_point_witness(const CurveParams& curve, const WireMessage& msg) {
  expect(msg, MessageType::Witness);
  if (msg.protocol == ProtocolId::Zkp2)
    throw BadTagError("zkp2 witness carries a digest, not a point");
  return decode_point(curve, msg.payload);
}

Digest decode_digest_witness(const WireMessage& msg) {
  expect(msg, MessageType::Witness);
  if (msg.protocol != ProtocolId::Zkp2)
    throw BadTagError("point witness expected for this protocol");
  if (msg.payload.size() != 32)
    throw TruncatedMessageError("witness digest must be 32 octets");
  Digest d;
  std::copy(msg.payload.begin(), msg.payload.end(), d.octets.begin());
  return d;
}

Scalar decode_challenge(const CurveParams& curve, const WireMessage& msg) {
  expect(msg, MessageType::Challenge);
  if (msg.protocol == ProtocolId::Zkp3)
    throw BadTagError("zkp3 has no challenge message");
  return decode_scalar(curve, msg.payload);
}

Scalar decode_answer(const CurveParams& curve, const WireMessage& msg) {
  expect(msg, MessageType::Answer);
  return decode_scalar(curve, msg.payload);
}

bool decode_result(const WireMessage& msg) {
  expect(msg, MessageType::Result);
  if (msg.payload.size() != 1)
    throw TruncatedMessageError("result payload must be a single octet");
  if (msg.payload[0] > 1) throw ValueRangeError("result octet must be 0 or 1");
  return msg.payload[0] == 1;
}

std::string decode_hello(const WireMessage& msg) {
  expect(msg, MessageType::Hello);
  if (msg.payload.empty()) throw TruncatedMessageError("empty hello payload");
  const std::size_t len = msg.payload[0];
  if (msg.payload.size() != 1 + len)
    throw TruncatedMessageError("hello length prefix mismatch");
  return std::string(msg.payload.begin() + 1, msg.payload.end());
}

// ---- cost accounting ---------------------------------------------------------

std::string cost_report_json(const CostReport& r) {
  nlohmann::json j{{"protocol", r.protocol},
                   {"curve", r.curve},
                   {"role", r.role},
                   {"lambda", r.lambda},
                   {"mu", r.mu},
                   {"point_adds", r.point_adds},
                   {"transferred_bits", r.transferred_bits},
                   {"received_bits", r.received_bits},
                   {"stored_secret_bits", r.stored_secret_bits},
                   {"table4_lambda", r.table4_lambda},
                   {"table4_mu", r.table4_mu}};
  return j.dump();
}

std::uint64_t payload_bits(const WireMessage& msg, const MeasureConfig& cfg) {
  return 8 * (msg.payload.size() + (cfg.include_framing ? 4 : 0));
}

namespace {

std::uint64_t scalar_bits(const CurveParams& c) { return 8 * c.scalar_octets(); }
std::uint64_t point_bits(const CurveParams& c, const CurvePoint& q) {
  return 8 * (q.is_infinity() ? 1 : 1 + 2 * c.coord_octets());
}
std::uint64_t framing(const MeasureConfig& cfg) { return cfg.include_framing ? 32 : 0; }
constexpr std::uint64_t kDigestBits = 256;
constexpr std::uint64_t kResultBits = 8;

// stored point: two fixed-width coordinates, no wire tag
std::uint64_t stored_point_bits(const CurveParams& c) { return 16 * c.coord_octets(); }

void require_complete(SessionState s, const char* what) {
  if (s != SessionState::Answered && s != SessionState::Accepted &&
      s != SessionState::Rejected)
    throw StateError(std::string(what) + ": session not complete");
}

void fill_counters(CostReport& r, const CostCounters& c) {
  r.lambda = c.lambda;
  r.mu = c.mu;
  r.point_adds = c.point_adds;
  r.table4_lambda = c.table4_lambda;
  r.table4_mu = c.table4_mu;
}

}  // namespace

CostReport measure_session(const Zkp1Prover& prover, const MeasureConfig& cfg) {
  require_complete(prover.state(), "zkp1 prover");
  const CurveParams& c = *prover.identity().curve;
  CostReport r;
  r.protocol = "zkp1";
  r.curve = c.id();
  r.role = to_string(Role::Prover);
  fill_counters(r, prover.costs());
  r.transferred_bits = point_bits(c, prover.witness()) + scalar_bits(c) + 2 * framing(cfg);
  r.received_bits = scalar_bits(c) + kResultBits + 2 * framing(cfg);
  r.stored_secret_bits = 2 * scalar_bits(c);  // secret + compromise
  return r;
}

CostReport measure_session(const Zkp1Verifier& verifier, const MeasureConfig& cfg) {
  require_complete(verifier.state(), "zkp1 verifier");
  if (!verifier.received_witness())
    throw StateError("zkp1 verifier: no witness was received");
  const CurveParams& c = *verifier.curve();
  CostReport r;
  r.protocol = "zkp1";
  r.curve = c.id();
  r.role = to_string(Role::Verifier);
  fill_counters(r, verifier.costs());
  r.transferred_bits = scalar_bits(c) + kResultBits + 2 * framing(cfg);
  r.received_bits =
      point_bits(c, *verifier.received_witness()) + scalar_bits(c) + 2 * framing(cfg);
  r.stored_secret_bits = 0;
  return r;
}

CostReport measure_session(const Zkp2Prover& prover, const MeasureConfig& cfg) {
  require_complete(prover.state(), "zkp2 prover");
  const CurveParams& c = *prover.identity().curve;
  CostReport r;
  r.protocol = "zkp2";
  r.curve = c.id();
  r.role = to_string(Role::Prover);
  fill_counters(r, prover.costs());
  r.table4_lambda = prover.pool_size();  // offline precomputation, n products
  r.transferred_bits = kDigestBits + scalar_bits(c) + 2 * framing(cfg);
  r.received_bits = scalar_bits(c) + kResultBits + 2 * framing(cfg);
  r.stored_secret_bits =
      scalar_bits(c) + prover.pool_size() * (scalar_bits(c) + stored_point_bits(c));
  return r;
}

CostReport measure_session(const Zkp2Verifier& verifier, const MeasureConfig& cfg) {
  require_complete(verifier.state(), "zkp2 verifier");
  const CurveParams& c = *verifier.curve();
  CostReport r;
  r.protocol = "zkp2";
  r.curve = c.id();
  r.role = to_string(Role::Verifier);
  fill_counters(r, verifier.costs());
  r.transferred_bits = scalar_bits(c) + kResultBits + 2 * framing(cfg);
  r.received_bits = kDigestBits + scalar_bits(c) + 2 * framing(cfg);
  r.stored_secret_bits = 0;
  return r;
}

CostReport measure_session(const Zkp3Party& party, const MeasureConfig& cfg) {
  require_complete(party.state(), "zkp3 party");
  const CurveParams& c = *party.identity().curve;
  CostReport r;
  r.protocol = "zkp3";
  r.curve = c.id();
  r.role = to_string(Role::Party);
  fill_counters(r, party.costs());
  r.transferred_bits =
      point_bits(c, party.witness()) + scalar_bits(c) + kResultBits + 3 * framing(cfg);
  r.received_bits = r.transferred_bits;  // symmetric flow
  r.stored_secret_bits = 2 * scalar_bits(c);
  return r;
}

ProtocolRanking compare_protocols(const std::vector<CostReport>& reports) {
  if (reports.empty()) throw ParameterError("no reports to compare");
  for (const CostReport& r : reports)
    if (r.curve != reports.front().curve)
      throw ParameterError("reports mix different curves");

  std::vector<CostReport> sorted = reports;
  ProtocolRanking ranking;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const CostReport& a, const CostReport& b) {
                     return a.transferred_bits < b.transferred_bits;
                   });
  for (const CostReport& r : sorted) ranking.by_transferred_bits.push_back(r.protocol);
  sorted = reports;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const CostReport& a, const CostReport& b) {
                     return a.stored_secret_bits < b.stored_secret_bits;
                   });
  for (const CostReport& r : sorted) ranking.by_stored_bits.push_back(r.protocol);
  return ranking;
}

}  // namespace eczkp
