#pragma once

#include <json.hpp>

#include <string>

namespace wmix::cli {

using Json = nlohmann::ordered_json;

/// "%.17g" rendering, with ".0" appended to integral values so they read back as floats.
std::string format_double(double value);

/// Pretty-prints with two-space indentation; floating-point numbers use format_double so
/// output is byte-stable and round-trips exactly.
std::string dump(const Json& value);

} // namespace wmix::cli
