#include <filesystem>
#include <future>

#include "doctest.h"
#include "eczkp/driver.hpp"
#include "eczkp/identity_file.hpp"

using namespace eczkp;

namespace {

CurveHandle tiny() { return curve_by_name("tiny17"); }

}  // namespace

TEST_CASE("identity file round trip, with and without pool") {
  auto c = tiny();
  Rng rng(77);
  Identity id = keygen(c, rng);

  std::string text = serialize_identity(id, nullptr);
  StoredIdentity loaded = parse_identity(text);
  CHECK(loaded.identity.secret == id.secret);
  CHECK(loaded.identity.public_point == id.public_point);
  CHECK_FALSE(loaded.pool.has_value());

  CompromisePool pool = CompromisePool::generate(c, 8, rng);
  std::string with_pool = serialize_identity(id, &pool);
  StoredIdentity loaded2 = parse_identity(with_pool);
  REQUIRE(loaded2.pool.has_value());
  CHECK(loaded2.pool->size() == 8);
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(loaded2.pool->entry(i).x == pool.entry(i).x);
    CHECK(loaded2.pool->entry(i).point == pool.entry(i).point);
  }

  auto path = std::filesystem::temp_directory_path() / "eczkp_test_identity.txt";
  save_identity(path, id, &pool);
  StoredIdentity from_disk = load_identity(path);
  CHECK(from_disk.identity.secret == id.secret);
  CHECK(from_disk.pool->size() == 8);
  std::filesystem::remove(path);
}

TEST_CASE("identity file rejects tampering and junk") {
  auto c = tiny();
  Identity id = identity_from_secret(c, c->scalar(2));
  std::string text = serialize_identity(id, nullptr);

  SUBCASE("tampered public point") {
    // secret 2 -> public (6,3); claim 3*G = (10,6) instead
    std::string bad = text;
    auto pos = bad.find("public=");
    bad = bad.substr(0, pos) + "public=040a06\n";
    CHECK_THROWS_AS(parse_identity(bad), FormatError);
  }
  SUBCASE("unknown key") {
    CHECK_THROWS_AS(parse_identity(text + "color=green\n"), FormatError);
  }
  SUBCASE("duplicate key") {
    CHECK_THROWS_AS(parse_identity(text + "curve=tiny17\n"), FormatError);
  }
  SUBCASE("missing field") {
    CHECK_THROWS_AS(parse_identity("curve=tiny17\n"), FormatError);
  }
  SUBCASE("tampered pool entry") {
    Rng pool_rng(1);
    CompromisePool pool = CompromisePool::generate(c, 2, pool_rng);
    std::string with_pool = serialize_identity(id, &pool);
    auto pos = with_pool.find("pool=");
    // swap the first pool point for 3*G, which cannot match its scalar
    auto line_end = with_pool.find('\n', pos);
    std::string broken = with_pool.substr(0, pos) + "pool=01:040a06" +
                         with_pool.substr(line_end);
    CHECK_THROWS_AS(parse_identity(broken), FormatError);
  }
  SUBCASE("comments and blank lines are fine") {
    CHECK_NOTHROW(parse_identity("# device identity\n\n" + text));
  }
}

TEST_CASE("zkp1 session over the in-process duplex") {
  auto c = tiny();
  Rng rng(5);
  Identity id = keygen(c, rng);
  DuplexPair pipe = make_duplex();

  Zkp1Prover prover(id);
  Rng salt_rng(9);
  Zkp1Verifier verifier(c, id.public_point, HashKind::Sha3_256, salt_rng);

  Rng prover_rng(123);
  auto prover_side = std::async(std::launch::async, [&] {
    return run_zkp1_prover(*pipe.a, prover, prover_rng);
  });
  DriverResult vr = run_zkp1_verifier(*pipe.b, verifier);
  DriverResult pr = prover_side.get();

  CHECK(pr.outcome == SessionOutcome::Accepted);
  CHECK(vr.outcome == SessionOutcome::Accepted);
  REQUIRE(pr.report.has_value());
  REQUIRE(vr.report.has_value());
  CHECK(pr.report->transferred_bits == vr.report->received_bits);
  CHECK(pr.report->total_bits() == vr.report->total_bits());
}

TEST_CASE("zkp2 session over the duplex, wrong peer key fails") {
  auto c = tiny();
  Rng rng(6);
  Identity id = keygen(c, rng);
  CompromisePool pool = CompromisePool::generate(c, 4, rng);

  SUBCASE("honest") {
    DuplexPair pipe = make_duplex();
    Zkp2Prover prover(id, pool);
    Zkp2Verifier verifier(c, id.public_point);
    Rng ra(1), rb(2);
    auto prover_side = std::async(std::launch::async,
                                  [&] { return run_zkp2_prover(*pipe.a, prover, ra); });
    DriverResult vr = run_zkp2_verifier(*pipe.b, verifier, rb);
    CHECK(prover_side.get().outcome == SessionOutcome::Accepted);
    CHECK(vr.outcome == SessionOutcome::Accepted);
  }

  SUBCASE("verifier holds the wrong public identification") {
    DuplexPair pipe = make_duplex();
    Zkp2Prover prover(id, pool);
    Identity other = identity_from_secret(c, id.secret.add(c->scalar(1)));
    Zkp2Verifier verifier(c, other.public_point);
    Rng ra(1), rb(2);
    auto prover_side = std::async(std::launch::async,
                                  [&] { return run_zkp2_prover(*pipe.a, prover, ra); });
    DriverResult vr = run_zkp2_verifier(*pipe.b, verifier, rb);
    CHECK(prover_side.get().outcome == SessionOutcome::VerificationFailed);
    CHECK(vr.outcome == SessionOutcome::VerificationFailed);
  }
}

TEST_CASE("zkp3 session over the duplex agrees on fingerprints") {
  auto c = tiny();
  Rng rng(7);
  Identity ida = keygen(c, rng);
  Identity idb = keygen(c, rng);
  DuplexPair pipe = make_duplex();

  Zkp3Party pa(ida, idb.public_point);
  Zkp3Party pb(idb, ida.public_point);
  Rng ra(11), rb(22);
  auto a_side = std::async(std::launch::async,
                           [&] { return run_zkp3_party(*pipe.a, pa, ra, true); });
  DriverResult rb_result = run_zkp3_party(*pipe.b, pb, rb, false);
  DriverResult ra_result = a_side.get();

  CHECK(ra_result.outcome == SessionOutcome::Accepted);
  CHECK(rb_result.outcome == SessionOutcome::Accepted);
  REQUIRE(ra_result.key_fingerprint.has_value());
  CHECK(*ra_result.key_fingerprint == *rb_result.key_fingerprint);
  CHECK(pa.session_key() == pb.session_key());
}

TEST_CASE("hello mismatch is a protocol violation, not a hang") {
  auto c = tiny();
  Rng rng(8);
  Identity id = keygen(c, rng);
  DuplexPair pipe = make_duplex();

  Zkp1Prover prover(id);
  Zkp2Verifier verifier(c, id.public_point);  // wrong protocol on purpose
  Rng ra(1), rb(2);
  auto prover_side = std::async(std::launch::async,
                                [&] { return run_zkp1_prover(*pipe.a, prover, ra); });
  DriverResult vr = run_zkp2_verifier(*pipe.b, verifier, rb);
  DriverResult pr = prover_side.get();
  CHECK(pr.outcome != SessionOutcome::Accepted);
  CHECK(vr.outcome != SessionOutcome::Accepted);
}

TEST_CASE("out-of-order message drives the session to rejection") {
  auto c = tiny();
  Rng rng(9);
  Identity id = keygen(c, rng);
  DuplexPair pipe = make_duplex();

  Rng salt_rng(10);
  Zkp1Verifier verifier(c, id.public_point, salt_rng);
  auto verifier_side = std::async(std::launch::async,
                                  [&] { return run_zkp1_verifier(*pipe.b, verifier); });

  // A rogue initiator that speaks the handshake but then sends its answer
  // before any witness.
  ByteStream& s = *pipe.a;
  const std::uint8_t version = kWireVersion;
  s.send(std::span(&version, 1));
  write_frame(s, make_hello(ProtocolId::Zkp1, "tiny17"));
  std::uint8_t peer_version = 0;
  s.recv_exact(std::span(&peer_version, 1));
  (void)read_frame(s);  // verifier hello
  write_frame(s, make_answer(ProtocolId::Zkp1, *c, c->scalar(3)));

  DriverResult vr = verifier_side.get();
  CHECK(vr.outcome != SessionOutcome::Accepted);
  CHECK(verifier.state() != SessionState::Accepted);
}

TEST_CASE("zkp1 session over real TCP sockets") {
  auto c = tiny();
  Rng rng(10);
  Identity id = keygen(c, rng);

  TcpListener listener("127.0.0.1", 0);
  auto verifier_side = std::async(std::launch::async, [&] {
    auto stream = listener.accept_one();
    Rng salt_rng(11);
    Zkp1Verifier verifier(c, id.public_point, salt_rng);
    return run_zkp1_verifier(*stream, verifier);
  });

  auto stream = TcpStream::connect("127.0.0.1", listener.bound_port());
  Zkp1Prover prover(id);
  Rng prng(3);
  DriverResult pr = run_zkp1_prover(*stream, prover, prng);
  DriverResult vr = verifier_side.get();
  CHECK(pr.outcome == SessionOutcome::Accepted);
  CHECK(vr.outcome == SessionOutcome::Accepted);
}

TEST_CASE("endpoint parsing") {
  auto [host, port] = parse_endpoint("127.0.0.1:8080");
  CHECK(host == "127.0.0.1");
  CHECK(port == 8080);
  CHECK_THROWS_AS(parse_endpoint("nocolon"), ParameterError);
  CHECK_THROWS_AS(parse_endpoint("host:99999"), ParameterError);
  CHECK_THROWS_AS(parse_endpoint("host:"), ParameterError);
}
