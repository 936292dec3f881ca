#include "eczkp/wire.hpp"

#include "doctest.h"
#include "eczkp/rng.hpp"

using namespace eczkp;

namespace {

CurveHandle tiny() { return curve_by_name("tiny17"); }

CurvePoint g_times(const CurveParams& c, std::uint64_t k) {
  return scalar_mul(c, c.scalar(k % 19), c.generator());
}

}  // namespace

TEST_CASE("frame round trips for every message type on both curves") {
  for (const std::string& id : known_curve_ids()) {
    auto c = curve_by_name(id);
    Digest d;
    d.octets[0] = 0x7f;
    d.octets[31] = 0x01;
    std::vector<WireMessage> msgs = {
        make_point_witness(ProtocolId::Zkp1, *c, c->generator()),
        make_point_witness(ProtocolId::Zkp3, *c, CurvePoint::infinity()),
        make_digest_witness(d),
        make_challenge(ProtocolId::Zkp1, *c, c->scalar(0)),
        make_challenge(ProtocolId::Zkp2, *c,
                       c->scalar(UInt::sub(c->order(), UInt{1}))),
        make_answer(ProtocolId::Zkp1, *c, c->scalar(7)),
        make_result(ProtocolId::Zkp3, true),
        make_result(ProtocolId::Zkp1, false),
        make_hello(ProtocolId::Zkp2, id),
    };
    for (const WireMessage& m : msgs) {
      CHECK(decode_frame(encode_frame(m)) == m);
    }
  }
}

TEST_CASE("typed payload decoding and validation") {
  auto c = tiny();
  CHECK(decode_point_witness(*c, make_point_witness(ProtocolId::Zkp1, *c, g_times(*c, 3))) ==
        g_times(*c, 3));
  CHECK(decode_challenge(*c, make_challenge(ProtocolId::Zkp1, *c, c->scalar(4))) ==
        c->scalar(4));
  CHECK(decode_answer(*c, make_answer(ProtocolId::Zkp2, *c, c->scalar(11))) ==
        c->scalar(11));
  CHECK(decode_result(make_result(ProtocolId::Zkp1, true)));
  CHECK_FALSE(decode_result(make_result(ProtocolId::Zkp1, false)));
  CHECK(decode_hello(make_hello(ProtocolId::Zkp3, "tiny17")) == "tiny17");

  Digest d;
  d.octets[5] = 9;
  CHECK(decode_digest_witness(make_digest_witness(d)) == d);

  // protocol/type mismatches
  CHECK_THROWS_AS(decode_digest_witness(make_point_witness(ProtocolId::Zkp1, *c, g_times(*c, 1))),
                  BadTagError);
  CHECK_THROWS_AS(decode_point_witness(*c, make_digest_witness(d)), BadTagError);
  CHECK_THROWS_AS(decode_challenge(*c, make_answer(ProtocolId::Zkp1, *c, c->scalar(1))),
                  BadTagError);
  CHECK_THROWS_AS(make_challenge(ProtocolId::Zkp3, *c, c->scalar(1)), ParameterError);
  CHECK_THROWS_AS(make_point_witness(ProtocolId::Zkp2, *c, g_times(*c, 1)), ParameterError);

  // malformed payloads
  WireMessage bad_result = make_result(ProtocolId::Zkp1, true);
  bad_result.payload[0] = 2;
  CHECK_THROWS_AS(decode_result(bad_result), ValueRangeError);
  WireMessage bad_scalar = make_challenge(ProtocolId::Zkp1, *c, c->scalar(4));
  bad_scalar.payload[0] = 19;
  CHECK_THROWS_AS(decode_challenge(*c, bad_scalar), ValueRangeError);
}

TEST_CASE("malformed frames produce decode errors") {
  auto c = tiny();
  auto frame = encode_frame(make_point_witness(ProtocolId::Zkp1, *c, g_times(*c, 2)));

  // truncating the final octet
  auto truncated = frame;
  truncated.pop_back();
  CHECK_THROWS_AS(decode_frame(truncated), TruncatedMessageError);

  auto bad_proto = frame;
  bad_proto[0] = 9;
  CHECK_THROWS_AS(decode_frame(bad_proto), BadTagError);

  auto bad_type = frame;
  bad_type[1] = 0;
  CHECK_THROWS_AS(decode_frame(bad_type), BadTagError);

  auto bad_len = frame;
  bad_len[3] += 1;
  CHECK_THROWS_AS(decode_frame(bad_len), TruncatedMessageError);

  CHECK_THROWS_AS(decode_frame(std::vector<std::uint8_t>{1, 1}), TruncatedMessageError);
}

TEST_CASE("zkp1 cost report on tiny17") {
  auto c = tiny();
  Identity id = identity_from_secret(c, c->scalar(2));
  Zkp1Prover prover(id);
  Rng salt_rng(1);
  Zkp1Verifier verifier(c, id.public_point, HashKind::Toy, salt_rng);
  auto e = verifier.challenge(prover.commit_with(c->scalar(3)));
  Scalar y = prover.respond(*e);
  verifier.verify(y);

  CostReport pr = measure_session(prover);
  CHECK(pr.protocol == "zkp1");
  CHECK(pr.role == "prover");
  CHECK(pr.lambda == 1);
  CHECK(pr.mu == 0);
  CHECK(pr.table4_lambda == 1);
  // tiny17: point = 3 octets, scalar = 1 octet
  CHECK(pr.transferred_bits == 24 + 8);
  CHECK(pr.received_bits == 8 + 8);
  CHECK(pr.stored_secret_bits == 16);

  CostReport vr = measure_session(verifier);
  CHECK(vr.lambda == 2);
  CHECK(vr.mu == 1);
  CHECK(vr.point_adds == 1);
  CHECK(vr.transferred_bits == 8 + 8);
  CHECK(vr.received_bits == 24 + 8);
  CHECK(vr.stored_secret_bits == 0);

  // endpoints agree on totals and mirror each other
  CHECK(pr.transferred_bits == vr.received_bits);
  CHECK(pr.received_bits == vr.transferred_bits);
  CHECK(pr.total_bits() == vr.total_bits());

  // framing flag adds 32 bits per counted message
  CostReport framed = measure_session(prover, MeasureConfig{true});
  CHECK(framed.transferred_bits == pr.transferred_bits + 2 * 32);
}

TEST_CASE("p192 transferred bits under the normative encoding") {
  auto c = curve_by_name("p192");
  Rng rng(2024);
  Identity id = keygen(c, rng);

  Zkp1Prover prover(id);
  Zkp1Verifier verifier(c, id.public_point, rng);
  auto e = verifier.challenge(prover.commit(rng));
  verifier.verify(prover.respond(*e));
  CostReport zkp1_prover = measure_session(prover);
  // point payload: tag octet + two 24-octet coordinates = 392 bits; scalar 192
  CHECK(zkp1_prover.transferred_bits == 392 + 192);

  CompromisePool pool = CompromisePool::generate(c, 2, rng);
  Zkp2Prover p2(id, pool);
  Zkp2Verifier v2(c, id.public_point);
  v2.receive_witness(p2.commit(rng));
  Scalar e2 = v2.challenge(rng);
  v2.verify(p2.respond(e2));
  CostReport zkp2_prover = measure_session(p2);
  CHECK(zkp2_prover.transferred_bits == 256 + 192);
  CHECK(zkp2_prover.table4_lambda == 2);  // offline n
  CHECK(zkp2_prover.lambda == 0);         // no online products
  CHECK(zkp2_prover.stored_secret_bits == 192 + 2 * (192 + 384));

  Identity idb = keygen(c, rng);
  auto run = zkp3_run(id, idb, rng, rng);
  CostReport zkp3_party = measure_session(run.party_a);
  CHECK(zkp3_party.transferred_bits == 392 + 192 + 8);

  // qualitative ordering: zkp2 < zkp1 < zkp3 (prover/party side)
  auto ranking = compare_protocols({zkp1_prover, zkp2_prover, zkp3_party});
  CHECK(ranking.by_transferred_bits ==
        std::vector<std::string>{"zkp2", "zkp1", "zkp3"});
  // zkp2 pays for its bandwidth with pool memory
  CHECK(ranking.by_stored_bits.back() == "zkp2");

  // deterministic: same inputs, same ranking
  auto again = compare_protocols({zkp1_prover, zkp2_prover, zkp3_party});
  CHECK(again.by_transferred_bits == ranking.by_transferred_bits);

  CostReport other_curve = zkp1_prover;
  other_curve.curve = "tiny17";
  CHECK_THROWS_AS(compare_protocols({zkp1_prover, other_curve}), ParameterError);
}

TEST_CASE("measure_session rejects incomplete sessions") {
  auto c = tiny();
  Identity id = identity_from_secret(c, c->scalar(2));
  Zkp1Prover prover(id);
  CHECK_THROWS_AS(measure_session(prover), StateError);
  prover.commit_with(c->scalar(3));
  CHECK_THROWS_AS(measure_session(prover), StateError);
}

TEST_CASE("cost report json shape") {
  CostReport r;
  r.protocol = "zkp1";
  r.curve = "p192";
  r.role = "prover";
  r.lambda = 1;
  r.transferred_bits = 584;
  std::string line = cost_report_json(r);
  CHECK(line.find("\"protocol\":\"zkp1\"") != std::string::npos);
  CHECK(line.find("\"transferred_bits\":584") != std::string::npos);
  CHECK(line.find('\n') == std::string::npos);
}
