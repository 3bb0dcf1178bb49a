#include "wmix/cli/state_io.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <sstream>

namespace wmix::cli {

namespace {

const Json& field(const Json& j, const char* key) {
	if (!j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
	return j.at(key);
}

int int_field(const Json& j, const char* key) {
	const Json& v = field(j, key);
	if (!v.is_number_integer()) throw FormatError(std::string("field '") + key + "' must be an integer");
	return v.get<int>();
}

double number(const Json& v, const std::string& what) {
	if (!v.is_number()) throw FormatError(what + " must be a number");
	return v.get<double>();
}

std::vector<double> number_array(const Json& v, const std::string& what, std::size_t expected) {
	if (!v.is_array()) throw FormatError(what + " must be an array");
	if (v.size() != expected) {
		throw FormatError(what + " has " + std::to_string(v.size()) + " entries, expected " + std::to_string(expected));
	}
	std::vector<double> out;
	out.reserve(expected);
	for (const auto& x : v) out.push_back(number(x, what + " entry"));
	return out;
}

Eigen::MatrixXd number_matrix(const Json& v, const std::string& what, Eigen::Index k) {
	if (!v.is_array() || v.size() != static_cast<std::size_t>(k)) {
		throw FormatError(what + " must be a " + std::to_string(k) + "x" + std::to_string(k) + " array of rows");
	}
	Eigen::MatrixXd m(k, k);
	for (Eigen::Index i = 0; i < k; ++i) {
		const auto row = number_array(v[static_cast<std::size_t>(i)], what + " row", static_cast<std::size_t>(k));
		for (Eigen::Index j = 0; j < k; ++j) m(i, j) = row[static_cast<std::size_t>(j)];
	}
	return m;
}

SystemShape shape_of(const Json& j) {
	const int n = int_field(j, "n");
	const int d = j.contains("d") ? int_field(j, "d") : 2;
	return SystemShape(n, d);
}

} // namespace

Json to_json(const WMixedState& state) {
	const auto& c = state.coeff();
	Json re = Json::array();
	Json im = Json::array();
	for (Eigen::Index i = 0; i < c.rows(); ++i) {
		Json rr = Json::array();
		Json ri = Json::array();
		for (Eigen::Index j = 0; j < c.cols(); ++j) {
			rr.push_back(c(i, j).real());
			ri.push_back(c(i, j).imag());
		}
		re.push_back(std::move(rr));
		im.push_back(std::move(ri));
	}
	Json out;
	out["kind"] = "w_mixed";
	out["n"] = state.shape().n();
	out["d"] = state.shape().d();
	out["vacuum"] = state.vacuum_weight();
	out["coeff_re"] = std::move(re);
	out["coeff_im"] = std::move(im);
	return out;
}

Json to_json(const PureGeneralizedW& state) {
	Json re = Json::array();
	Json im = Json::array();
	for (const cplx& a : state.amplitudes()) {
		re.push_back(a.real());
		im.push_back(a.imag());
	}
	Json out;
	out["kind"] = "w_pure";
	out["n"] = state.shape().n();
	out["d"] = state.shape().d();
	out["amp_re"] = std::move(re);
	out["amp_im"] = std::move(im);
	return out;
}

Json to_json(const AnyState& state) {
	return std::visit([](const auto& s) { return to_json(s); }, state);
}

AnyState state_from_json(const Json& j) {
	if (!j.is_object()) throw FormatError("a state file holds a single JSON object");
	const Json& kind = field(j, "kind");
	if (!kind.is_string()) throw FormatError("field 'kind' must be a string");
	const SystemShape shape = shape_of(j);
	const auto k = static_cast<std::size_t>(shape.label_count());

	if (kind == "w_pure") {
		const auto re = number_array(field(j, "amp_re"), "amp_re", k);
		const auto im = j.contains("amp_im") ? number_array(j.at("amp_im"), "amp_im", k) : std::vector<double>(k, 0.0);
		Eigen::VectorXcd a(static_cast<Eigen::Index>(k));
		for (std::size_t i = 0; i < k; ++i) a(static_cast<Eigen::Index>(i)) = cplx(re[i], im[i]);
		return PureGeneralizedW(shape, a);
	}
	if (kind == "w_mixed") {
		const auto kk = static_cast<Eigen::Index>(k);
		const Eigen::MatrixXd re = number_matrix(field(j, "coeff_re"), "coeff_re", kk);
		const Eigen::MatrixXd im =
		    j.contains("coeff_im") ? number_matrix(j.at("coeff_im"), "coeff_im", kk) : Eigen::MatrixXd::Zero(kk, kk);
		const double vacuum = j.contains("vacuum") ? number(j.at("vacuum"), "vacuum") : 0.0;
		Eigen::MatrixXcd c(kk, kk);
		c.real() = re;
		c.imag() = im;
		return WMixedState(shape, vacuum, std::move(c));
	}
	throw FormatError("unknown state kind '" + kind.get<std::string>() + "'");
}

WMixedState mixed_from_json(const Json& j) {
	const AnyState s = state_from_json(j);
	if (const auto* pure = std::get_if<PureGeneralizedW>(&s)) return WMixedState::from_pure(*pure);
	return std::get<WMixedState>(s);
}

Json read_json_file(const std::filesystem::path& path) {
	std::ifstream in(path);
	if (!in) throw FormatError("cannot open '" + path.string() + "'");
	try {
		return Json::parse(in);
	} catch (const Json::parse_error& e) {
		throw FormatError("'" + path.string() + "' is not valid JSON: " + e.what());
	}
}

AnyState read_state_file(const std::filesystem::path& path) { return state_from_json(read_json_file(path)); }

std::string fingerprint(const WMixedState& state) {
	const std::string canonical = dump(to_json(state));
	std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
	unsigned int length = 0;
	if (EVP_Digest(canonical.data(), canonical.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
		throw Error("SHA-256 digest failed");
	}
	static constexpr char kHex[] = "0123456789abcdef";
	std::string out = "sha256:";
	for (unsigned int i = 0; i < length; ++i) {
		out += kHex[digest[i] >> 4];
		out += kHex[digest[i] & 0xF];
	}
	return out;
}

} // namespace wmix::cli
