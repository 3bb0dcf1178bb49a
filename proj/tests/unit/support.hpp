#pragma once

#include "wmix/state.hpp"

#include <cmath>
#include <complex>
#include <initializer_list>
#include <vector>

namespace wmix::test {

inline bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

inline Eigen::VectorXcd vec(std::initializer_list<cplx> values) {
	Eigen::VectorXcd v(static_cast<Eigen::Index>(values.size()));
	Eigen::Index i = 0;
	for (cplx x : values) v(i++) = x;
	return v;
}

inline Eigen::MatrixXcd mat(std::initializer_list<std::initializer_list<cplx>> rows) {
	Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
	Eigen::Index i = 0;
	for (const auto& row : rows) {
		Eigen::Index j = 0;
		for (cplx x : row) m(i, j++) = x;
		++i;
	}
	return m;
}

inline WMixedState diagonal_state(std::vector<double> diag, int d = 2) {
	const int labels = static_cast<int>(diag.size());
	SystemShape shape(labels / (d - 1), d);
	Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(labels, labels);
	for (int i = 0; i < labels; ++i) c(i, i) = diag[static_cast<std::size_t>(i)];
	return WMixedState(shape, 0.0, c);
}

/// The half/half phase ensemble (1,1,1)/sqrt3 and (1,1,-1)/sqrt3, written out by hand.
inline WMixedState biseparable_mixture() {
	return WMixedState(SystemShape(3), 0.0, mat({{1, 1, 0}, {1, 1, 0}, {0, 0, 1}}) / 3.0);
}

inline WMixedState w_mixed(int n) {
	Eigen::MatrixXcd c = Eigen::MatrixXcd::Constant(n, n, 1.0 / n);
	return WMixedState(SystemShape(n), 0.0, c);
}

} // namespace wmix::test
