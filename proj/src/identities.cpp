#include "eistheta/identities.hpp"

#include <algorithm>
#include <functional>

#include "eistheta/coset.hpp"

namespace eistheta
{

namespace
{

const SubstitutionSpec kSwap = SubstitutionSpec::swap_cube_inverse();
const SubstitutionSpec kSquare = SubstitutionSpec::power(2);

Int half_order(Int n)
{
    return (n + 1) / 2;
}

TriSeries constant(Int n, Int c)
{
    return TriSeries::constant(3 * n, EisInt::from_int(c));
}

TriSeries cube(const TriSeries &s)
{
    return s * s * s;
}

VerificationReport guarded(const std::string &name, std::optional<int> k, Int n,
                           const std::function<VerificationReport()> &body)
{
    if (n < 0) {
        return contract_error_report(name, k, std::to_string(n), "negative order");
    }
    try {
        return body();
    } catch (const ContractError &e) {
        return contract_error_report(name, k, std::to_string(n), e.what());
    }
}

// Pair factors P_a, P_b, P_c stand for a(q)^2, b(q)^2, c(q)^2 in the cubic
// identities and for a(q^2), b(q^2), c(q^2) in the q^2 variants.
struct PairFactors {
    TriSeries a;
    TriSeries b;
    TriSeries c;
};

PairFactors squares(Int n, const ThetaSource &source)
{
    const TriSeries a = source.one_var(OneVar::a, n);
    const TriSeries b = source.one_var(OneVar::b, n);
    const TriSeries c = source.one_var(OneVar::c, n);
    return {a * a, b * b, c * c};
}

PairFactors q_squared(Int n, const ThetaSource &source)
{
    const Int h = half_order(n);
    return {ts_substitute(source.one_var(OneVar::a, h), kSquare), ts_substitute(source.one_var(OneVar::b, h), kSquare),
            ts_substitute(source.one_var(OneVar::c, h), kSquare)};
}

// a(q,w,z^-3)P_a + w^k b_1(q,w,z^-3)P_b + w^-k b_-1(q,w,z^-3)P_b
//   + c_1(q,w,z^-3)P_c + c_-1(q,w,z^-3)P_c
TriSeries theorem_rhs(int k, Int n, const PairFactors &p, const ThetaSource &source)
{
    return ts_substitute(source.a(n), kSwap) * p.a +
           ts_scale_unit(ts_substitute(source.b(1, n), kSwap) * p.b, UnitPower(k)) +
           ts_scale_unit(ts_substitute(source.b(-1, n), kSwap) * p.b, UnitPower(-k)) +
           ts_substitute(source.c(1, n), kSwap) * p.c + ts_substitute(source.c(-1, n), kSwap) * p.c;
}

// Substituted copy of x(order) evaluated at q^2 with z, w squared.
TriSeries at_square(const std::function<TriSeries(Int)> &x, Int n)
{
    return ts_substitute(x(half_order(n)), kSquare);
}

} // namespace

VerificationReport check_lemma_symmetries(Int n, const ThetaSource &source)
{
    return guarded("lemma_symmetries", std::nullopt, n, [&] {
        const auto inv_w = SubstitutionSpec::invert(false, true);
        const auto inv_zw = SubstitutionSpec::invert(true, true);
        const auto inv_z = SubstitutionSpec::invert(true, false);
        struct Chain {
            std::string label;
            TriSeries lhs;
            TriSeries rhs;
        };
        std::vector<Chain> chains;
        const TriSeries a = source.a(n);
        chains.push_back({"a = a(q,z,1/w)", a, ts_substitute(a, inv_w)});
        chains.push_back({"a = a(q,1/z,1/w)", a, ts_substitute(a, inv_zw)});
        chains.push_back({"a = a(q,1/z,w)", a, ts_substitute(a, inv_z)});
        for (int k = 0; k < 3; ++k) {
            const std::string ks = std::to_string(k);
            const std::string mks = std::to_string(detail::mod3(-k));
            const TriSeries b = source.b(k, n);
            const TriSeries b_neg = source.b(-k, n);
            chains.push_back({"b_" + ks + " = b_" + ks + "(q,z,1/w)", b, ts_substitute(b, inv_w)});
            chains.push_back({"b_" + ks + " = b_" + mks + "(q,1/z,1/w)", b, ts_substitute(b_neg, inv_zw)});
            chains.push_back({"b_" + ks + " = b_" + mks + "(q,1/z,w)", b, ts_substitute(b_neg, inv_z)});
            const TriSeries c = source.c(k, n);
            const TriSeries c_neg = source.c(-k, n);
            chains.push_back({"c_" + ks + " = c_" + mks + "(q,z,1/w)", c, ts_substitute(c_neg, inv_w)});
            chains.push_back({"c_" + ks + " = c_" + mks + "(q,1/z,1/w)", c, ts_substitute(c_neg, inv_zw)});
            chains.push_back({"c_" + ks + " = c_" + ks + "(q,1/z,w)", c, ts_substitute(c, inv_z)});
        }
        for (const auto &chain : chains) {
            VerificationReport r = compare_series("lemma_symmetries", std::nullopt, n, chain.lhs, chain.rhs);
            if (!r.ok()) {
                r.detail = chain.label + (r.detail.empty() ? "" : ": " + r.detail);
                return r;
            }
        }
        VerificationReport ok;
        ok.check = "lemma_symmetries";
        ok.bound_or_order = std::to_string(n);
        return ok;
    });
}

VerificationReport check_specialization_aliases(Int n, const ThetaSource &source)
{
    return guarded("specialization_aliases", std::nullopt, n, [&] {
        VerificationReport r = compare_series("specialization_aliases", std::nullopt, n,
                                              ts_specialize(source.b(1, n), true, false),
                                              ts_specialize(source.b(-1, n), true, false));
        if (!r.ok()) {
            r.detail = "b_1(q,1,w) = b_-1(q,1,w)";
            return r;
        }
        r = compare_series("specialization_aliases", std::nullopt, n, ts_specialize(source.c(-1, n), false, true),
                           ts_specialize(source.c(1, n), false, true));
        if (!r.ok()) {
            r.detail = "c_-1(q,z,1) = c_1(q,z,1)";
        }
        return r;
    });
}

VerificationReport check_theorem1(Int k, Int n, const ThetaSource &source)
{
    const int kk = detail::mod3(k);
    return guarded("theorem1", kk, n, [&] {
        const TriSeries lhs = constant(n, 3) * cube(source.c(kk, n));
        return compare_series("theorem1", kk, n, lhs, theorem_rhs(kk, n, squares(n, source), source));
    });
}

VerificationReport check_a_cubed(Int n, const ThetaSource &source)
{
    return guarded("a_cubed", std::nullopt, n, [&] {
        const TriSeries lhs = constant(n, 3) * cube(source.a(n));
        return compare_series("a_cubed", std::nullopt, n, lhs, theorem_rhs(0, n, squares(n, source), source));
    });
}

std::vector<VerificationReport> check_corollary1(Int n, const ThetaSource &source)
{
    std::vector<VerificationReport> out;
    out.push_back(guarded("corollary1_three_variable", std::nullopt, n, [&] {
        const PairFactors p = squares(n, source);
        const TriSeries lhs = constant(n, 2) * cube(source.a(n));
        const TriSeries rhs = ts_substitute(source.b(1, n), kSwap) * p.b + ts_substitute(source.b(-1, n), kSwap) * p.b +
                              cube(source.c(1, n)) + cube(source.c(2, n));
        return compare_series("corollary1_three_variable", std::nullopt, n, lhs, rhs);
    }));
    const Int m = std::max(n, kOneVariableMinOrder);
    out.push_back(guarded("corollary1_one_variable", std::nullopt, n < 0 ? n : m, [&] {
        const TriSeries lhs = cube(source.one_var(OneVar::a, m));
        const TriSeries rhs = cube(source.one_var(OneVar::b, m)) + cube(source.one_var(OneVar::c, m));
        return compare_series("corollary1_one_variable", std::nullopt, m, lhs, rhs);
    }));
    return out;
}

VerificationReport check_theorem2(Int k, Int n, const ThetaSource &source)
{
    const int kk = detail::mod3(k);
    return guarded("theorem2", kk, n, [&] {
        const TriSeries lhs =
            constant(n, 3) * source.c(kk, n) * at_square([&](Int h) { return source.c(kk, h); }, n);
        return compare_series("theorem2", kk, n, lhs, theorem_rhs(kk, n, q_squared(n, source), source));
    });
}

VerificationReport check_a_cubed2(Int n, const ThetaSource &source)
{
    return guarded("a_cubed2", std::nullopt, n, [&] {
        const TriSeries lhs = constant(n, 3) * source.a(n) * at_square([&](Int h) { return source.a(h); }, n);
        return compare_series("a_cubed2", std::nullopt, n, lhs, theorem_rhs(0, n, q_squared(n, source), source));
    });
}

std::vector<VerificationReport> check_corollary2(Int n, const ThetaSource &source)
{
    std::vector<VerificationReport> out;
    auto lhs = [&] {
        return constant(n, 2) * source.a(n) * at_square([&](Int h) { return source.a(h); }, n);
    };

    VerificationReport printed = guarded("corollary2_printed", std::nullopt, n, [&] {
        const PairFactors p = squares(n, source);
        const TriSeries rhs = ts_substitute(source.b(1, n), kSwap) * p.b + ts_substitute(source.b(-1, n), kSwap) * p.b +
                              cube(source.c(1, n)) + cube(source.c(2, n));
        return compare_series("corollary2_printed", std::nullopt, n, lhs(), rhs);
    });
    printed.asserted = false;
    out.push_back(printed);

    out.push_back(guarded("corollary2_derived", std::nullopt, n, [&] {
        const PairFactors p = q_squared(n, source);
        const TriSeries rhs = ts_substitute(source.b(1, n), kSwap) * p.b + ts_substitute(source.b(-1, n), kSwap) * p.b +
                              source.c(1, n) * at_square([&](Int h) { return source.c(1, h); }, n) +
                              source.c(2, n) * at_square([&](Int h) { return source.c(2, h); }, n);
        return compare_series("corollary2_derived", std::nullopt, n, lhs(), rhs);
    }));

    const Int m = std::max(n, kOneVariableMinOrder);
    out.push_back(guarded("corollary2_one_variable", std::nullopt, n < 0 ? n : m, [&] {
        auto one = [&](OneVar which) { return source.one_var(which, m); };
        auto one_sq = [&](OneVar which) { return at_square([&](Int h) { return source.one_var(which, h); }, m); };
        const TriSeries lhs1 = one(OneVar::a) * one_sq(OneVar::a);
        const TriSeries rhs1 = one(OneVar::b) * one_sq(OneVar::b) + one(OneVar::c) * one_sq(OneVar::c);
        return compare_series("corollary2_one_variable", std::nullopt, m, lhs1, rhs1);
    }));
    return out;
}

std::vector<VerificationReport> check_hgb_special_cases(Int n, const ThetaSource &source)
{
    const auto w_to_one = [](const TriSeries &s) { return ts_specialize(s, false, true); };
    const auto b_one_z3 = [&] { return ts_substitute(source.b(1, n), SubstitutionSpec::one_and_z_cubed()); };

    std::vector<VerificationReport> out;
    out.push_back(guarded("hgb_cubic", std::nullopt, n, [&] {
        const TriSeries b = source.one_var(OneVar::b, n);
        const TriSeries lhs = cube(w_to_one(source.a(n)));
        const TriSeries rhs = b_one_z3() * b * b + cube(w_to_one(source.c(1, n)));
        return compare_series("hgb_cubic", std::nullopt, n, lhs, rhs);
    }));
    out.push_back(guarded("hgb_quadratic", std::nullopt, n, [&] {
        const TriSeries lhs = w_to_one(source.a(n)) * at_square([&](Int h) { return w_to_one(source.a(h)); }, n);
        const TriSeries rhs =
            b_one_z3() * at_square([&](Int h) { return source.one_var(OneVar::b, h); }, n) +
            w_to_one(source.c(1, n)) * at_square([&](Int h) { return w_to_one(source.c(1, h)); }, n);
        return compare_series("hgb_quadratic", std::nullopt, n, lhs, rhs);
    }));
    return out;
}

std::vector<VerificationReport> check_oracles(Int n, const ThetaSource &source)
{
    struct Case {
        TwoVarOracle which;
        std::function<TriSeries()> builder;
    };
    const std::vector<Case> cases = {
        {TwoVarOracle::a_z, [&] { return ts_specialize(source.a(n), false, true); }},
        {TwoVarOracle::a_w, [&] { return ts_specialize(source.a(n), true, false); }},
        {TwoVarOracle::b_w, [&] { return ts_specialize(source.b(1, n), true, false); }},
        {TwoVarOracle::c_z, [&] { return ts_specialize(source.c(-1, n), false, true); }},
    };
    std::vector<VerificationReport> out;
    for (const auto &c : cases) {
        const std::string name = "oracle_" + std::string(to_string(c.which));
        out.push_back(guarded(name, std::nullopt, n, [&] {
            return compare_series(name, std::nullopt, n, c.builder(), oracle_two_variable(c.which, n));
        }));
    }
    return out;
}

std::vector<VerificationReport> run_all(Int n, const ThetaSource &source)
{
    std::vector<VerificationReport> out;
    auto append = [&out](std::vector<VerificationReport> rs) {
        out.insert(out.end(), std::make_move_iterator(rs.begin()), std::make_move_iterator(rs.end()));
    };

    out.push_back(check_lemma_symmetries(n, source));
    out.push_back(check_specialization_aliases(n, source));
    append(check_oracles(n, source));
    for (int k = 0; k < 3; ++k) {
        out.push_back(check_theorem1(k, n, source));
    }
    out.push_back(check_a_cubed(n, source));
    append(check_corollary1(n, source));
    for (int k = 0; k < 3; ++k) {
        out.push_back(check_theorem2(k, n, source));
    }
    out.push_back(check_a_cubed2(n, source));
    append(check_corollary2(n, source));
    append(check_hgb_special_cases(n, source));
    for (bool restrict_V : {false, true}) {
        for (int k = 0; k < 3; ++k) {
            append(check_coset_series(k, n, restrict_V, source));
        }
    }
    if (n >= 0) {
        append(run_coset_sweeps(Rational(std::min<Int>(n, 3))));
    } else {
        out.push_back(contract_error_report("coset_sweeps", std::nullopt, std::to_string(n), "negative bound"));
    }
    return out;
}

} // namespace eistheta
