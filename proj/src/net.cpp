#include "eczkp/net.hpp"

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

#include "eczkp/error.hpp"

namespace eczkp {

namespace {

[[noreturn]] void throw_errno(const std::string& what) {
  throw TransportError(what + ": " + std::strerror(errno));
}

sockaddr_in resolve(const std::string& host, std::uint16_t port) {
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_port = htons(port);
  if (host.empty() || host == "0.0.0.0") {
    addr.sin_addr.s_addr = INADDR_ANY;
    return addr;
  }
  if (inet_pton(AF_INET, host.c_str(), &addr.sin_addr) == 1) return addr;
  addrinfo hints{};
  hints.ai_family = AF_INET;
  hints.ai_socktype = SOCK_STREAM;
  addrinfo* res = nullptr;
  if (getaddrinfo(host.c_str(), nullptr, &hints, &res) != 0 || res == nullptr)
    throw TransportError("cannot resolve host: " + host);
  addr.sin_addr = reinterpret_cast<sockaddr_in*>(res->ai_addr)->sin_addr;
  freeaddrinfo(res);
  return addr;
}

}  // namespace

std::unique_ptr<TcpStream> TcpStream::connect(const std::string& host, std::uint16_t port) {
  int fd = ::socket(AF_INET, SOCK_STREAM, 0);
  if (fd < 0) throw_errno("socket");
  sockaddr_in addr = resolve(host, port);
  if (::connect(fd, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) != 0) {
    int saved = errno;
    ::close(fd);
    errno = saved;
    throw_errno("connect");
  }
  return std::make_unique<TcpStream>(fd);
}

TcpStream::~TcpStream() {
  if (fd_ >= 0) ::close(fd_);
}

void TcpStream::send(std::span<const std::uint8_t> data) {
  std::size_t sent = 0;
  while (sent < data.size()) {
    ssize_t n = ::send(fd_, data.data() + sent, data.size() - sent, MSG_NOSIGNAL);
    if (n <= 0) throw_errno("send");
    sent += static_cast<std::size_t>(n);
  }
}

void TcpStream::recv_exact(std::span<std::uint8_t> out) {
  std::size_t got = 0;
  while (got < out.size()) {
    ssize_t n = ::recv(fd_, out.data() + got, out.size() - got, 0);
    if (n == 0) throw TransportError("peer closed the connection");
    if (n < 0) throw_errno("recv");
    got += static_cast<std::size_t>(n);
  }
}

TcpListener::TcpListener(const std::string& host, std::uint16_t port) {
  fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
  if (fd_ < 0) throw_errno("socket");
  int one = 1;
  setsockopt(fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
  sockaddr_in addr = resolve(host, port);
  if (::bind(fd_, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) != 0)
    throw_errno("bind");
  if (::listen(fd_, 8) != 0) throw_errno("listen");
  sockaddr_in bound{};
  socklen_t len = sizeof(bound);
  if (getsockname(fd_, reinterpret_cast<sockaddr*>(&bound), &len) != 0)
    throw_errno("getsockname");
  port_ = ntohs(bound.sin_port);
}

TcpListener::~TcpListener() {
  if (fd_ >= 0) ::close(fd_);
}

std::unique_ptr<TcpStream> TcpListener::accept_one() {
  int fd = ::accept(fd_, nullptr, nullptr);
  if (fd < 0) throw_errno("accept");
  return std::make_unique<TcpStream>(fd);
}

std::pair<std::string, std::uint16_t> parse_endpoint(const std::string& endpoint) {
  auto colon = endpoint.rfind(':');
  if (colon == std::string::npos || colon + 1 >= endpoint.size())
    throw ParameterError("endpoint must look like HOST:PORT");
  std::string host = endpoint.substr(0, colon);
  unsigned long port = 0;
  try {
    port = std::stoul(endpoint.substr(colon + 1));
  } catch (const std::exception&) {
    throw ParameterError("endpoint port is not a number");
  }
  if (port > 0xffff) throw ParameterError("endpoint port out of range");
  return {host, static_cast<std::uint16_t>(port)};
}

namespace {

// One direction of the in-process duplex.
class ByteQueue {
 public:
  void push(std::span<const std::uint8_t> data) {
    std::scoped_lock lock(mu_);
    buf_.insert(buf_.end(), data.begin(), data.end());
    cv_.notify_all();
  }
  void pop_exact(std::span<std::uint8_t> out) {
    std::unique_lock lock(mu_);
    cv_.wait(lock, [&] { return buf_.size() >= out.size() || closed_; });
    if (buf_.size() < out.size()) throw TransportError("duplex closed");
    std::copy_n(buf_.begin(), out.size(), out.begin());
    buf_.erase(buf_.begin(), buf_.begin() + static_cast<long>(out.size()));
  }
  void close() {
    std::scoped_lock lock(mu_);
    closed_ = true;
    cv_.notify_all();
  }

 private:
  std::mutex mu_;
  std::condition_variable cv_;
  std::deque<std::uint8_t> buf_;
  bool closed_ = false;
};

class DuplexEnd final : public ByteStream {
 public:
  DuplexEnd(std::shared_ptr<ByteQueue> out, std::shared_ptr<ByteQueue> in)
      : out_(std::move(out)), in_(std::move(in)) {}
  ~DuplexEnd() override { out_->close(); }
  void send(std::span<const std::uint8_t> data) override { out_->push(data); }
  void recv_exact(std::span<std::uint8_t> out) override { in_->pop_exact(out); }

 private:
  std::shared_ptr<ByteQueue> out_;
  std::shared_ptr<ByteQueue> in_;
};

}  // namespace

DuplexPair make_duplex() {
  auto q_ab = std::make_shared<ByteQueue>();
  auto q_ba = std::make_shared<ByteQueue>();
  return DuplexPair{std::make_shared<DuplexEnd>(q_ab, q_ba),
                    std::make_shared<DuplexEnd>(q_ba, q_ab)};
}

}  // namespace eczkp
