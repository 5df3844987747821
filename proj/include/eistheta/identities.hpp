#pragma once

// Exact truncated-series verification of the three-variable cubic theta
// identities. Each check returns one or more VerificationReport values and
// never throws for a valid (nonnegative) order; operand orders that cannot
// support the requested comparison surface as status contract_error.
//
// Notation: X(q,w,z^-3) is X under SubstitutionSpec::swap_cube_inverse(),
// a(q), b(q), c(q) are the z = w = 1 specializations (b = b_1, c = c_1).

#include <vector>

#include "eistheta/report.hpp"
#include "eistheta/theta.hpp"

namespace eistheta
{

/// One-variable displays are checked to at least this q-order.
inline constexpr Int kOneVariableMinOrder = 20;

/// a, b_k, c_k symmetries under z -> 1/z and w -> 1/w for k = 0, 1, 2.
VerificationReport check_lemma_symmetries(Int n, const ThetaSource &source = default_source());

/// b_1(q,1,w) = b_-1(q,1,w) and c_-1(q,z,1) = c_1(q,z,1), the aliases used to
/// identify the two-variable specializations.
VerificationReport check_specialization_aliases(Int n, const ThetaSource &source = default_source());

/// 3c_k^3 = a(q,w,z^-3)a(q)^2 + w^k b_1(q,w,z^-3)b(q)^2 + w^-k b_-1(q,w,z^-3)b(q)^2
///          + c_1(q,w,z^-3)c(q)^2 + c_-1(q,w,z^-3)c(q)^2.
VerificationReport check_theorem1(Int k, Int n, const ThetaSource &source = default_source());

/// k = 0 case written with a(q,z,w) on the left.
VerificationReport check_a_cubed(Int n, const ThetaSource &source = default_source());

/// [0] 2a^3 = b_1(q,w,z^-3)b(q)^2 + b_-1(q,w,z^-3)b(q)^2 + c_1^3 + c_2^3 at order n;
/// [1] a(q)^3 = b(q)^3 + c(q)^3 at order max(n, kOneVariableMinOrder).
std::vector<VerificationReport> check_corollary1(Int n, const ThetaSource &source = default_source());

/// 3c_k(q,z,w)c_k(q^2,z^2,w^2) = the Theorem 1 right side with a(q)^2, b(q)^2,
/// c(q)^2 replaced by a(q^2), b(q^2), c(q^2).
VerificationReport check_theorem2(Int k, Int n, const ThetaSource &source = default_source());

/// k = 0 case written with a(q,z,w)a(q^2,z^2,w^2) on the left.
VerificationReport check_a_cubed2(Int n, const ThetaSource &source = default_source());

/// [0] printed form  2a(q,z,w)a(q^2,z^2,w^2) = b_1(q,w,z^-3)b(q)^2 + b_-1(q,w,z^-3)b(q)^2 + c_1^3 + c_2^3
///     (recorded, not asserted);
/// [1] derived form  2a(q,z,w)a(q^2,z^2,w^2) = b_1(q,w,z^-3)b(q^2) + b_-1(q,w,z^-3)b(q^2)
///     + c_1(q,z,w)c_1(q^2,z^2,w^2) + c_2(q,z,w)c_2(q^2,z^2,w^2);
/// [2] a(q)a(q^2) = b(q)b(q^2) + c(q)c(q^2) at order max(n, kOneVariableMinOrder).
std::vector<VerificationReport> check_corollary2(Int n, const ThetaSource &source = default_source());

/// [0] a(q,z,1)^3 = b_1(q,1,z^3)b(q)^2 + c_1(q,z,1)^3;
/// [1] a(q,z,1)a(q^2,z^2,1) = b_1(q,1,z^3)b(q^2) + c_1(q,z,1)c_1(q^2,z^2,1).
std::vector<VerificationReport> check_hgb_special_cases(Int n, const ThetaSource &source = default_source());

/// The four double-sum oracles against the specialized lattice builders.
std::vector<VerificationReport> check_oracles(Int n, const ThetaSource &source = default_source());

/// Every check above, the series-level coset identities at order n and the
/// coset sweeps at norm bound min(n, 3), in a fixed order.
std::vector<VerificationReport> run_all(Int n, const ThetaSource &source = default_source());

} // namespace eistheta
