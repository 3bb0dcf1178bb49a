#include "wmix/cli/json_format.hpp"

#include <cmath>
#include <cstdio>

namespace wmix::cli {

namespace {

void write(const Json& v, std::string& out, int depth) {
	const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
	const std::string close_pad(static_cast<std::size_t>(2 * depth), ' ');
	switch (v.type()) {
	case Json::value_t::object: {
		if (v.empty()) {
			out += "{}";
			return;
		}
		out += "{\n";
		bool first = true;
		for (auto it = v.begin(); it != v.end(); ++it) {
			if (!first) out += ",\n";
			first = false;
			out += pad + Json(it.key()).dump() + ": ";
			write(it.value(), out, depth + 1);
		}
		out += "\n" + close_pad + "}";
		return;
	}
	case Json::value_t::array: {
		if (v.empty()) {
			out += "[]";
			return;
		}
		out += "[\n";
		bool first = true;
		for (const auto& item : v) {
			if (!first) out += ",\n";
			first = false;
			out += pad;
			write(item, out, depth + 1);
		}
		out += "\n" + close_pad + "]";
		return;
	}
	case Json::value_t::number_float:
		out += format_double(v.get<double>());
		return;
	default:
		out += v.dump();
		return;
	}
}

} // namespace

std::string format_double(double value) {
	if (!std::isfinite(value)) return "null";
	if (value == 0.0) return "0.0"; // no signed zeros in output
	char buf[40];
	std::snprintf(buf, sizeof buf, "%.17g", value);
	std::string s(buf);
	if (s.find_first_of(".eE") == std::string::npos) s += ".0";
	return s;
}

std::string dump(const Json& value) {
	std::string out;
	write(value, out, 0);
	out += '\n';
	return out;
}

} // namespace wmix::cli
