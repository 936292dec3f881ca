#pragma once

#include <condition_variable>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <span>
#include <string>

namespace eczkp {

// Blocking byte stream; the session driver is written against this interface
// so TCP sockets and the in-process test duplex are interchangeable.
class ByteStream {
 public:
  virtual ~ByteStream() = default;
  virtual void send(std::span<const std::uint8_t> data) = 0;
  // Blocks until exactly out.size() octets arrive; TransportError on EOF/failure.
  virtual void recv_exact(std::span<std::uint8_t> out) = 0;
};

// TCP client/server over plain POSIX sockets.
class TcpStream final : public ByteStream {
 public:
  static std::unique_ptr<TcpStream> connect(const std::string& host, std::uint16_t port);
  explicit TcpStream(int fd) : fd_(fd) {}
  ~TcpStream() override;
  TcpStream(const TcpStream&) = delete;
  TcpStream& operator=(const TcpStream&) = delete;

  void send(std::span<const std::uint8_t> data) override;
  void recv_exact(std::span<std::uint8_t> out) override;

 private:
  int fd_ = -1;
};

class TcpListener {
 public:
  // Binds host:port; port 0 picks an ephemeral port (see bound_port()).
  TcpListener(const std::string& host, std::uint16_t port);
  ~TcpListener();
  TcpListener(const TcpListener&) = delete;
  TcpListener& operator=(const TcpListener&) = delete;

  std::uint16_t bound_port() const { return port_; }
  std::unique_ptr<TcpStream> accept_one();

 private:
  int fd_ = -1;
  std::uint16_t port_ = 0;
};

// "host:port" -> pair; throws on malformed input.
std::pair<std::string, std::uint16_t> parse_endpoint(const std::string& endpoint);

// In-process bidirectional pipe for tests: two entangled streams, each
// reading what the other writes.
struct DuplexPair {
  std::shared_ptr<ByteStream> a;
  std::shared_ptr<ByteStream> b;
};
DuplexPair make_duplex();

}  // namespace eczkp
