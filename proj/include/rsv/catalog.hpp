#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rsv/presentation.hpp"
#include "rsv/semigroup.hpp"

namespace rsv {

/// The cyclic semigroup of the given index and period: elements c, c^2, ...,
/// c^(index+period-1); when period is 1 the top power is an absorbing zero.
FiniteSemigroup cyclic(int index, int period);

/// Returns a pinned multiplication table by name. Accepted names:
///   A, B, C_lambda, C_rho, N3, D, K (needs n), F_lambda, F_rho,
///   W_lambda, W_rho, L2_1, R2_1, B2, L2, R2, Y2, N2, N2_1,
///   C (cyclic group, needs n), C2n (index 2, period n; needs n),
///   Crd (needs n = index and d = period), Gamma.
/// Every returned table passes the full associativity check.
FiniteSemigroup catalog(const std::string& name, std::optional<int> n = std::nullopt,
                        std::optional<int> d = std::nullopt);

/// Defining presentation for the names that have one (A, B, C_lambda, N3, D,
/// K, F_lambda, W_lambda, L2_1); used to cross-check the pinned tables.
Presentation presentation_for(const std::string& name, std::optional<int> n = std::nullopt);

const std::vector<std::string>& catalog_names();

}  // namespace rsv
