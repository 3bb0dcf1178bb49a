#include "wmix/slocc.hpp"

#include "wmix/errors.hpp"

#include <cmath>
#include <string>

namespace wmix {

namespace {
constexpr double kProportionality = 1e-12;
}

std::vector<LocalFilter> build_filters(const PureGeneralizedW& state) {
	const SystemShape& shape = state.shape();
	const double root = std::sqrt(static_cast<double>(shape.label_count()));
	std::vector<LocalFilter> filters;
	filters.reserve(static_cast<std::size_t>(shape.n()));
	for (Party p = 1; p <= shape.n(); ++p) {
		LocalFilter f{p, Eigen::MatrixXcd::Identity(shape.d(), shape.d())};
		for (int level = 1; level <= shape.levels(); ++level) {
			const cplx a = state.amplitude({shape.position_of(p), level});
			if (std::abs(a) <= tol::kStructuralZero) {
				throw DegenerateInputError("amplitude at party " + std::to_string(p) + ", level " +
				                           std::to_string(level) +
				                           " vanishes; restrict the state to its support before filtering");
			}
			f.matrix(level, level) = 1.0 / (a * root);
		}
		filters.push_back(std::move(f));
	}
	return filters;
}

Eigen::VectorXcd uniform_dense_vector(const SystemShape& shape, std::uint64_t budget) {
	const Eigen::VectorXcd a =
	    Eigen::VectorXcd::Constant(shape.label_count(), 1.0 / std::sqrt(static_cast<double>(shape.label_count())));
	return dense_vector(PureGeneralizedW(shape, a), budget);
}

FilterResult apply_and_verify(const std::vector<LocalFilter>& filters, const PureGeneralizedW& state,
                              std::uint64_t budget) {
	const SystemShape& shape = state.shape();
	if (static_cast<int>(filters.size()) != shape.n()) throw ShapeError("need one filter per party");

	Eigen::VectorXcd psi = dense_vector(state, budget);
	const auto dim = static_cast<std::uint64_t>(psi.size());
	const auto d = static_cast<std::uint64_t>(shape.d());
	for (const LocalFilter& f : filters) {
		if (f.matrix.rows() != shape.d() || f.matrix.cols() != shape.d()) throw ShapeError("filter has wrong dimension");
		const std::uint64_t w = shape.digit_weight(f.party);
		Eigen::VectorXcd next = Eigen::VectorXcd::Zero(psi.size());
		for (std::uint64_t i = 0; i < dim; ++i) {
			const auto digit = static_cast<Eigen::Index>((i / w) % d);
			const std::uint64_t base = i - static_cast<std::uint64_t>(digit) * w;
			for (Eigen::Index out = 0; out < shape.d(); ++out) {
				next(static_cast<Eigen::Index>(base + static_cast<std::uint64_t>(out) * w)) +=
				    f.matrix(out, digit) * psi(static_cast<Eigen::Index>(i));
			}
		}
		psi = std::move(next);
	}

	const Eigen::VectorXcd target = uniform_dense_vector(shape, budget);
	FilterResult result;
	result.scale = target.dot(psi); // target^dagger psi; target has unit norm
	const double norm = psi.norm();
	result.relative_deviation = norm == 0.0 ? 1.0 : (psi - result.scale * target).norm() / norm;
	result.transformed = std::move(psi);
	if (!(result.relative_deviation <= kProportionality)) {
		throw ContractViolation("filtered state deviates from the uniform state by " +
		                        std::to_string(result.relative_deviation));
	}
	return result;
}

} // namespace wmix
