#pragma once

// Lattice enumeration in O = Z[w] and its shifts O + k/lambda, and assembly
// of the theta series
//
//   a(q,z,w)   = sum_{alpha in O}          q^|alpha|^2 z^T(alpha) w^T(alpha/lambda)
//   b_k(q,z,w) = sum_{alpha in O} chi(alpha)^k q^...   (same monomial)
//   c_k(q,z,w) = sum_{alpha in O + k/lambda}  q^...   (same monomial)
//
// together with the classical (m, n) double sums used as independent oracles.

#include <string_view>
#include <vector>

#include "eistheta/eisenstein.hpp"
#include "eistheta/series.hpp"

namespace eistheta
{

/// alpha = beta + shift_k / lambda with shift_k in {0, 1, 2}.
struct LatticePoint {
    EisInt beta;
    int shift_k{0};

    /// 3|alpha|^2 = 3|beta|^2 - 3k T(beta/lambda) + k^2.
    Int norm3() const;
    /// T(alpha); T(1/lambda) = 0 so this is T(beta).
    Int trace() const;
    /// 3 T(alpha/lambda) = 3 T(beta/lambda) - 2k, using 1/lambda^2 = -1/3.
    Int trace_div_lambda3() const;
    EisRat value() const;
    /// (3|alpha|^2, 3T(alpha), 3T(alpha/lambda)).
    Monomial monomial() const;

    friend bool operator==(const LatticePoint &, const LatticePoint &) = default;
};

/// All x + yw with norm <= n, ordered by (norm, x, y).
///
/// x^2 - xy + y^2 = (x - y/2)^2 + 3y^2/4, so |y| <= 2 sqrt(n/3), and by
/// symmetry the same bound holds for |x|.
std::vector<EisInt> enumerate_norm_le(Int n);

/// All points of O + (k mod 3)/lambda with |alpha|^2 <= n, ordered by
/// (norm, x, y) of beta.
std::vector<LatticePoint> enumerate_shifted(Int k, Int n);

/// Same, with the bound given on the thirds grid: 3|alpha|^2 <= norm3_bound.
std::vector<LatticePoint> enumerate_shifted_scaled(Int k, Int norm3_bound);

TriSeries build_a(Int n);
TriSeries build_b(Int k, Int n);
TriSeries build_c(Int k, Int n);

enum class OneVar { a, b, c };
enum class TwoVarOracle { a_z, a_w, b_w, c_z };

std::string_view to_string(TwoVarOracle which);

/// a(q) = a(q,1,1), b(q) = b_1(q,1,1), c(q) = c_1(q,1,1).
TriSeries build_one_var(OneVar which, Int n);

/// Classical double sums over (m, n) in Z^2 with Q = m^2 + mn + n^2:
///   a_z: sum q^Q z^(m-n)                            compare a(q,z,1)
///   a_w: sum q^Q w^n                                 compare a(q,1,w)
///   b_w: sum w^(m-n) q^Q w^n                         compare b_1(q,1,w)
///   c_z: sum q^((m+1/3)^2+(m+1/3)(n+1/3)+(n+1/3)^2) z^(m-n)   compare c_-1(q,z,1)
/// Computed without any of the lattice machinery above.
TriSeries oracle_two_variable(TwoVarOracle which, Int n);

/// Source of theta series for the verification layers. The default
/// implementation forwards to the lattice builders; tests substitute a
/// corrupted source to make sure the checks are not vacuous.
class ThetaSource
{
public:
    virtual ~ThetaSource() = default;

    virtual TriSeries a(Int n) const
    {
        return build_a(n);
    }
    virtual TriSeries b(Int k, Int n) const
    {
        return build_b(k, n);
    }
    virtual TriSeries c(Int k, Int n) const
    {
        return build_c(k, n);
    }

    TriSeries one_var(OneVar which, Int n) const;
};

const ThetaSource &default_source();

} // namespace eistheta
