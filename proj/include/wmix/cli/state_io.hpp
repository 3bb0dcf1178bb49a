#pragma once

#include "wmix/cli/json_format.hpp"
#include "wmix/errors.hpp"
#include "wmix/state.hpp"

#include <filesystem>
#include <string>
#include <variant>

namespace wmix::cli {

/// Malformed state or ensemble file.
class FormatError : public Error {
public:
	using Error::Error;
};

using AnyState = std::variant<WMixedState, PureGeneralizedW>;

/// {"kind": "w_mixed", "n", "d", "vacuum", "coeff_re", "coeff_im"}; rows/columns follow
/// the excitation label order (position ascending, then level ascending).
Json to_json(const WMixedState& state);
/// {"kind": "w_pure", "n", "d", "amp_re", "amp_im"}
Json to_json(const PureGeneralizedW& state);
Json to_json(const AnyState& state);

/// Parses either kind. Missing "coeff_im"/"amp_im" read as zero. Structural problems raise
/// FormatError; states that parse but violate an invariant raise the library's own errors.
AnyState state_from_json(const Json& j);
/// Pure states are returned as their projector.
WMixedState mixed_from_json(const Json& j);

Json read_json_file(const std::filesystem::path& path);
AnyState read_state_file(const std::filesystem::path& path);

/// Content hash of the canonical serialization: "sha256:<hex>".
std::string fingerprint(const WMixedState& state);

} // namespace wmix::cli
