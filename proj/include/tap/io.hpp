#pragma once

#include <string>
#include <variant>

#include "tap/instance.hpp"

namespace tap {

using AnyInstance = std::variant<TapInstance, NcssInstance>;

/// Parse a JSON instance ("kind": "tap" or "ncss"). Validates invariants;
/// throws SchemaError / ValidationError with field context.
AnyInstance parse_instance(const std::string& text);

TapInstance parse_tap(const std::string& text);
NcssInstance parse_ncss(const std::string& text);

/// Canonical JSON bytes; parse(serialize(x)) == x.
std::string serialize_instance(const TapInstance& inst);
std::string serialize_instance(const NcssInstance& inst);

/// 16-hex-digit digest of the canonical serialization. Reports and
/// certificates embed it so they cannot be replayed against another instance.
std::string instance_digest(const TapInstance& inst);
std::string instance_digest(const NcssInstance& inst);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace tap
