#include "eczkp/identity_file.hpp"

#include <fstream>
#include <sstream>

namespace eczkp {

namespace {

std::vector<std::uint8_t> parse_hex_octets(std::string_view s) {
  if (s.empty() || s.size() % 2 != 0) throw FormatError("hex value must have even length");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw FormatError("invalid hex digit in identity file");
  };
  std::vector<std::uint8_t> out(s.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = static_cast<std::uint8_t>(nibble(s[2 * i]) << 4 | nibble(s[2 * i + 1]));
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string serialize_identity(const Identity& identity, const CompromisePool* pool) {
  const CurveParams& c = *identity.curve;
  std::ostringstream out;
  out << "curve=" << c.id() << "\n";
  out << "secret=" << hex(encode_scalar(c, identity.secret)) << "\n";
  out << "public=" << hex(encode_point(c, identity.public_point)) << "\n";
  if (pool) {
    for (std::size_t i = 0; i < pool->size(); ++i) {
      const PoolEntry& e = pool->entry(i);
      out << "pool=" << hex(encode_scalar(c, e.x)) << ":"
          << hex(encode_point(c, e.point)) << "\n";
    }
  }
  return out.str();
}

StoredIdentity parse_identity(const std::string& text) {
  std::optional<std::string> curve_id;
  std::optional<std::string> secret_hex;
  std::optional<std::string> public_hex;
  std::vector<std::pair<std::string, std::string>> pool_hex;

  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw FormatError("identity file line lacks '='");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "curve") {
      if (curve_id) throw FormatError("duplicate curve key");
      curve_id = value;
    } else if (key == "secret") {
      if (secret_hex) throw FormatError("duplicate secret key");
      secret_hex = value;
    } else if (key == "public") {
      if (public_hex) throw FormatError("duplicate public key");
      public_hex = value;
    } else if (key == "pool") {
      auto colon = value.find(':');
      if (colon == std::string::npos) throw FormatError("pool entry lacks ':'");
      pool_hex.emplace_back(value.substr(0, colon), value.substr(colon + 1));
    } else {
      throw FormatError("unknown identity file key: " + key);
    }
  }

  if (!curve_id || !secret_hex || !public_hex)
    throw FormatError("identity file missing curve/secret/public");

  CurveHandle curve;
  try {
    curve = curve_by_name(*curve_id);
  } catch (const ParameterError& e) {
    throw FormatError(e.what());
  }

  Scalar secret = [&] {
    try {
      return decode_scalar(*curve, parse_hex_octets(*secret_hex));
    } catch (const DecodeError& e) {
      throw FormatError(std::string("bad secret: ") + e.what());
    }
  }();
  Identity identity = identity_from_secret(curve, secret);
  CurvePoint claimed_public = [&] {
    try {
      return decode_point(*curve, parse_hex_octets(*public_hex));
    } catch (const DecodeError& e) {
      throw FormatError(std::string("bad public point: ") + e.what());
    }
  }();
  if (claimed_public != identity.public_point)
    throw FormatError("public point does not match the secret");

  std::optional<CompromisePool> pool;
  if (!pool_hex.empty()) {
    std::vector<PoolEntry> entries;
    for (const auto& [xs, ps] : pool_hex) {
      try {
        entries.push_back(PoolEntry{decode_scalar(*curve, parse_hex_octets(xs)),
                                    decode_point(*curve, parse_hex_octets(ps))});
      } catch (const DecodeError& e) {
        throw FormatError(std::string("bad pool entry: ") + e.what());
      }
    }
    try {
      pool = CompromisePool::from_entries(curve, std::move(entries));
    } catch (const ParameterError& e) {
      throw FormatError(e.what());
    }
  }
  return StoredIdentity{std::move(identity), std::move(pool)};
}

void save_identity(const std::filesystem::path& path, const Identity& identity,
                   const CompromisePool* pool) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw FormatError("cannot open identity file for writing: " + path.string());
  out << serialize_identity(identity, pool);
  if (!out.flush()) throw FormatError("failed writing identity file");
  std::filesystem::permissions(path,
                               std::filesystem::perms::owner_read |
                                   std::filesystem::perms::owner_write,
                               std::filesystem::perm_options::replace);
}

StoredIdentity load_identity(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open identity file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_identity(buf.str());
}

CurvePoint parse_public_point(const CurveParams& curve, std::string_view hex_text) {
  try {
    return decode_point(curve, parse_hex_octets(hex_text));
  } catch (const DecodeError& e) {
    throw FormatError(std::string("bad public point: ") + e.what());
  }
}

std::string format_public_point(const CurveParams& curve, const CurvePoint& q) {
  return hex(encode_point(curve, q));
}

}  // namespace eczkp
