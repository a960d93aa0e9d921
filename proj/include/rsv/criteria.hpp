#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rsv/identity.hpp"
#include "rsv/word.hpp"

namespace rsv {

/// gcd of the occurrence counts of the interior of u (u with its first and
/// last positions removed). Undefined for single letters; 0 when l(u) = 2 or
/// when the head or tail letter also occurs in the interior.
struct InteriorGcd {
  bool defined;
  int value;
};

InteriorGcd interior_gcd(const Word& u);

/// Linear-time identity checkers for the small helper semigroups. Accepted
/// names: L2, R2, L2_1, R2_1, Y2, C/Cn (needs n), N2, N2_1, N3, C2n (needs n).
bool helper_criterion(std::string_view name, const Identity& id,
                      std::optional<int> n = std::nullopt);

/// The occurrence-graph test: equal contents, equal component partitions and
/// matching head/tail components.
bool b2_criterion(const Identity& id);

/// Polynomial checkers, one per indicator semigroup. Accepted names: A, B,
/// C_lambda, C_rho, D, K (needs n), F_lambda, F_rho, W_lambda, W_rho,
/// L2_1, R2_1, N3.
bool indicator_criterion(std::string_view name, const Identity& id,
                         std::optional<int> n = std::nullopt);

/// Routes a catalog name to the matching checker (Gamma shares W_lambda's).
bool criterion(std::string_view name, const Identity& id,
               std::optional<int> n = std::nullopt);

/// Names criterion() accepts, in report order.
const std::vector<std::string>& criterion_names();

}  // namespace rsv
