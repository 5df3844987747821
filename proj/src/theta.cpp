#include "eistheta/theta.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace eistheta
{

namespace
{

Int isqrt(Int n)
{
    Int r = static_cast<Int>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) {
        --r;
    }
    while ((r + 1) * (r + 1) <= n) {
        ++r;
    }
    return r;
}

// Box half-width covering every x + yw of norm <= n, plus one unit of slack.
Int scan_radius(Int n)
{
    // |x|, |y| <= floor(2 sqrt(n/3)) = floor(sqrt(4n/3))
    return isqrt(4 * n / 3) + 1;
}

} // namespace

Int LatticePoint::norm3() const
{
    const Int k = shift_k;
    return 3 * norm(beta) - 3 * k * trace_div_lambda(beta) + k * k;
}

Int LatticePoint::trace() const
{
    return eistheta::trace(beta);
}

Int LatticePoint::trace_div_lambda3() const
{
    return 3 * trace_div_lambda(beta) - 2 * shift_k;
}

EisRat LatticePoint::value() const
{
    return EisRat(beta) + EisRat(EisInt::from_int(shift_k)) * EisRat::inv_lambda();
}

Monomial LatticePoint::monomial() const
{
    return Monomial{norm3(), 3 * trace(), trace_div_lambda3()};
}

std::vector<EisInt> enumerate_norm_le(Int n)
{
    std::vector<EisInt> out;
    if (n < 0) {
        return out;
    }
    const Int r = scan_radius(n);
    for (Int x = -r; x <= r; ++x) {
        for (Int y = -r; y <= r; ++y) {
            const EisInt a{x, y};
            if (norm(a) <= n) {
                out.push_back(a);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const EisInt &l, const EisInt &r) {
        return std::make_tuple(norm(l), l.x, l.y) < std::make_tuple(norm(r), r.x, r.y);
    });
    return out;
}

std::vector<LatticePoint> enumerate_shifted_scaled(Int k, Int norm3_bound)
{
    std::vector<LatticePoint> out;
    if (norm3_bound < 0) {
        return out;
    }
    const int shift = detail::mod3(k);
    // |beta| <= |alpha| + 2/sqrt(3), so |beta|^2 <= n + 4 sqrt(n) + 2 with
    // n = norm3_bound / 3 covers every candidate.
    const Int n = norm3_bound / 3 + 1;
    const Int beta_bound = n + 4 * (isqrt(n) + 1) + 2;
    const Int r = scan_radius(beta_bound);
    for (Int x = -r; x <= r; ++x) {
        for (Int y = -r; y <= r; ++y) {
            const LatticePoint p{EisInt{x, y}, shift};
            if (p.norm3() <= norm3_bound) {
                out.push_back(p);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const LatticePoint &l, const LatticePoint &r) {
        return std::make_tuple(l.norm3(), l.beta.x, l.beta.y) < std::make_tuple(r.norm3(), r.beta.x, r.beta.y);
    });
    return out;
}

std::vector<LatticePoint> enumerate_shifted(Int k, Int n)
{
    if (n < 0) {
        return {};
    }
    return enumerate_shifted_scaled(k, detail::checked_mul(3, n));
}

TriSeries build_a(Int n)
{
    return build_b(0, n);
}

TriSeries build_b(Int k, Int n)
{
    if (n < 0) {
        throw ContractError("build_b: negative order");
    }
    TriSeries s(3 * n);
    const Int e = detail::mod3(k);
    for (const EisInt &alpha : enumerate_norm_le(n)) {
        const Monomial m{3 * norm(alpha), 3 * trace(alpha), 3 * trace_div_lambda(alpha)};
        s.add_term(m, chi(alpha).pow(e).value());
    }
    return s;
}

TriSeries build_c(Int k, Int n)
{
    if (n < 0) {
        throw ContractError("build_c: negative order");
    }
    TriSeries s(3 * n);
    for (const LatticePoint &p : enumerate_shifted(k, n)) {
        s.add_term(p.monomial(), EisInt{1, 0});
    }
    return s;
}

TriSeries ThetaSource::one_var(OneVar which, Int n) const
{
    switch (which) {
        case OneVar::a:
            return ts_specialize(a(n), true, true);
        case OneVar::b:
            return ts_specialize(b(1, n), true, true);
        case OneVar::c:
            return ts_specialize(c(1, n), true, true);
    }
    throw ContractError("one_var: unknown series");
}

const ThetaSource &default_source()
{
    static const ThetaSource source;
    return source;
}

TriSeries build_one_var(OneVar which, Int n)
{
    return default_source().one_var(which, n);
}

std::string_view to_string(TwoVarOracle which)
{
    switch (which) {
        case TwoVarOracle::a_z:
            return "a_z";
        case TwoVarOracle::a_w:
            return "a_w";
        case TwoVarOracle::b_w:
            return "b_w";
        case TwoVarOracle::c_z:
            return "c_z";
    }
    return "?";
}

TriSeries oracle_two_variable(TwoVarOracle which, Int order)
{
    if (order < 0) {
        throw ContractError("oracle_two_variable: negative order");
    }
    TriSeries s(3 * order);
    // m^2 + mn + n^2 >= 3m^2/4 and likewise for the 1/3-shifted form, so
    // |m|, |n| <= 2 sqrt(order/3) + 1 suffices.
    const Int r = scan_radius(order) + 1;
    const EisInt one{1, 0};
    for (Int m = -r; m <= r; ++m) {
        for (Int n = -r; n <= r; ++n) {
            const Int q = m * m + m * n + n * n;
            switch (which) {
                case TwoVarOracle::a_z:
                    s.add_term(Monomial{3 * q, 3 * (m - n), 0}, one);
                    break;
                case TwoVarOracle::a_w:
                    s.add_term(Monomial{3 * q, 0, 3 * n}, one);
                    break;
                case TwoVarOracle::b_w:
                    s.add_term(Monomial{3 * q, 0, 3 * n}, UnitPower(m - n).value());
                    break;
                case TwoVarOracle::c_z:
                    // 3((m+1/3)^2 + (m+1/3)(n+1/3) + (n+1/3)^2) = 3Q + 3(m+n) + 1
                    s.add_term(Monomial{3 * q + 3 * (m + n) + 1, 3 * (m - n), 0}, one);
                    break;
            }
        }
    }
    return s;
}

} // namespace eistheta
