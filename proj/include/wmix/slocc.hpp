#pragma once

#include "wmix/dense.hpp"
#include "wmix/state.hpp"

#include <Eigen/Dense>

#include <vector>

namespace wmix {

/// Invertible diagonal local operator diag(1, 1/(a_{(m,1)} sqrt(K)), ..., 1/(a_{(m,d-1)} sqrt(K)))
/// with m the party's position and K = N(d-1). For qubits this is diag(1, 1/(a_m sqrt(N))).
struct LocalFilter {
	Party party = 1;
	Eigen::MatrixXcd matrix;
};

/// One filter per party, in party order. Throws DegenerateInputError when any amplitude
/// vanishes (|a| <= 1e-12): such a state is only SLOCC-equivalent to a W state on its support.
std::vector<LocalFilter> build_filters(const PureGeneralizedW& state);

struct FilterResult {
	Eigen::VectorXcd transformed;
	/// c such that transformed = c |W>, with |W> the uniform state over all labels.
	cplx scale;
	/// ||transformed - c |W>|| / ||transformed||
	double relative_deviation = 0.0;
};

/// Applies the tensor product of the filters to the dense state vector and checks that
/// the result is proportional to the uniform state within relative 1e-12 (ContractViolation otherwise).
FilterResult apply_and_verify(const std::vector<LocalFilter>& filters, const PureGeneralizedW& state,
                              std::uint64_t budget = kDefaultDenseBudget);

/// Dense vector of the uniform single-excitation state over all N(d-1) labels.
Eigen::VectorXcd uniform_dense_vector(const SystemShape& shape, std::uint64_t budget = kDefaultDenseBudget);

} // namespace wmix
