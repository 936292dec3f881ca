#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "eczkp/protocols.hpp"

namespace eczkp {

// Line-oriented key=value identity persistence:
//
//   curve=tiny17
//   secret=<hex scalar>
//   public=<hex point encoding>
//   pool=<hex scalar>:<hex point encoding>     (zero or more lines)
//
// Blank lines and '#' comments are allowed; any other key is rejected.
// Loading recomputes the public point from the secret and checks every pool
// entry, so a tampered file never yields a usable identity.

struct StoredIdentity {
  Identity identity;
  std::optional<CompromisePool> pool;
};

std::string serialize_identity(const Identity& identity, const CompromisePool* pool);
StoredIdentity parse_identity(const std::string& text);

void save_identity(const std::filesystem::path& path, const Identity& identity,
                   const CompromisePool* pool);
StoredIdentity load_identity(const std::filesystem::path& path);

// Bare public point, for --peer-pub flags: hex of the uncompressed encoding.
CurvePoint parse_public_point(const CurveParams& curve, std::string_view hex_text);
std::string format_public_point(const CurveParams& curve, const CurvePoint& q);

}  // namespace eczkp
