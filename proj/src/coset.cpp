#include "eistheta/coset.hpp"

#include <array>
#include <functional>
#include <sstream>

namespace eistheta
{

namespace
{

const EisRat &lambda_rat()
{
    static const EisRat l(kLambda);
    return l;
}

std::array<EisRat, 3> coords(const Triple &t)
{
    return {t.a0, t.a1, t.a2};
}

nlohmann::ordered_json triple_json(const Triple &t)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const EisRat &a : coords(t)) {
        arr.push_back({{"re", a.num().x}, {"om", a.num().y}, {"den", a.den()}});
    }
    return arr;
}

Triple from_points(const LatticePoint &p0, const LatticePoint &p1, const LatticePoint &p2)
{
    return Triple{p0.value(), p1.value(), p2.value()};
}

// Calls fn(p0, p1, p2, norm3) for every (p0, p1, p2) in (O + k/lambda)^3 with
// total scaled norm <= norm3_bound; with restrict_V only p1 == p2.
void for_each_shifted_triple(
    int k, Int norm3_bound, bool restrict_V,
    const std::function<void(const LatticePoint &, const LatticePoint &, const LatticePoint &, Int)> &fn)
{
    const auto points = enumerate_shifted_scaled(k, norm3_bound);
    for (const auto &p0 : points) {
        const Int n0 = p0.norm3();
        if (n0 > norm3_bound) {
            break;
        }
        for (const auto &p1 : points) {
            const Int n1 = p1.norm3();
            if (restrict_V) {
                if (n0 + 2 * n1 > norm3_bound) {
                    break;
                }
                fn(p0, p1, p1, n0 + 2 * n1);
                continue;
            }
            if (n0 + n1 > norm3_bound) {
                break;
            }
            for (const auto &p2 : points) {
                const Int n2 = p2.norm3();
                if (n0 + n1 + n2 > norm3_bound) {
                    break;
                }
                fn(p0, p1, p2, n0 + n1 + n2);
            }
        }
    }
}

Int integral_or_throw(const Rational &r)
{
    if (r.denominator() != 1) {
        throw NotInLattice("phi: exponent off the thirds grid");
    }
    return r.numerator();
}

VerificationReport sweep_report(std::string check, const Rational &bound)
{
    VerificationReport r;
    r.check = std::move(check);
    r.bound_or_order = to_string(bound);
    return r;
}

void record_failure(VerificationReport &r, const Triple &t, std::string why)
{
    if (r.status == Status::ok) {
        r.status = Status::fail;
        r.counterexample = {{"triple", triple_json(t)}};
        r.detail = std::move(why);
    }
}

std::string label_string(const std::optional<CosetLabel> &l)
{
    if (!l) {
        return "outside Lambda";
    }
    std::ostringstream out;
    out << '(' << l->j << ',' << l->k << ')';
    return out.str();
}

} // namespace

Rational triple_norm(const Triple &t)
{
    return rat_norm(t.a0) + rat_norm(t.a1) + rat_norm(t.a2);
}

std::optional<CosetLabel> try_coset_of(const Triple &t)
{
    std::optional<int> shift;
    for (const EisRat &a : coords(t)) {
        const EisRat scaled = lambda_rat() * a;
        if (!scaled.is_integral()) {
            return std::nullopt;
        }
        const int r = residue_mod_lambda(scaled.num());
        if (shift && *shift != r) {
            return std::nullopt;
        }
        shift = r;
    }
    const EisRat sum = t.a0 + t.a1 + t.a2;
    if (!sum.is_integral()) {
        return std::nullopt;
    }
    return CosetLabel{residue_mod_lambda(sum.num()), *shift};
}

CosetLabel coset_of(const Triple &t)
{
    if (auto label = try_coset_of(t)) {
        return *label;
    }
    std::ostringstream msg;
    msg << "coset_of: (" << t.a0 << ", " << t.a1 << ", " << t.a2 << ") is not in Lambda";
    throw NotInLattice(msg.str());
}

bool in_coset(const Triple &t, CosetLabel label)
{
    const EisRat shift = EisRat(EisInt::from_int(label.k)) * EisRat::inv_lambda();
    EisInt sum{};
    for (const EisRat &a : coords(t)) {
        const EisRat beta = a - shift;
        if (!beta.is_integral()) {
            return false;
        }
        sum += beta.num();
    }
    // sum of alpha = sum of beta + 3k/lambda = sum of beta - k*lambda
    const EisInt alpha_sum = sum - EisInt::from_int(label.k) * kLambda;
    return residue_mod_lambda(alpha_sum) == label.j;
}

Monomial phi(const Triple &t)
{
    coset_of(t);
    const EisRat sum = t.a0 + t.a1 + t.a2;
    return Monomial{integral_or_throw(3 * triple_norm(t)), integral_or_throw(3 * rat_trace(sum)),
                    integral_or_throw(3 * rat_trace_div_lambda(sum))};
}

Triple apply(const Triple &t, Transform which)
{
    if (which == Transform::N) {
        const EisRat w(kOmega);
        return Triple{t.a0, w * t.a1, w * t.a2};
    }
    // M_{ic} = w^(ic) / lambda
    const auto in = coords(t);
    std::array<EisRat, 3> out{};
    for (int c = 0; c < 3; ++c) {
        EisRat acc;
        for (int i = 0; i < 3; ++i) {
            acc = acc + in[i] * EisRat(UnitPower(i * c).value());
        }
        out[c] = acc * EisRat::inv_lambda();
    }
    return Triple{out[0], out[1], out[2]};
}

std::vector<Triple> enumerate_lattice_triples(Int norm3_bound)
{
    std::vector<Triple> out;
    for (int k = 0; k < 3; ++k) {
        for_each_shifted_triple(k, norm3_bound, false,
                                [&](const LatticePoint &p0, const LatticePoint &p1, const LatticePoint &p2, Int) {
                                    out.push_back(from_points(p0, p1, p2));
                                });
    }
    return out;
}

Int norm3_bound_of(const Rational &bound)
{
    const Rational scaled = 3 * bound;
    // floor for possibly negative rationals
    Int f = scaled.numerator() / scaled.denominator();
    if (scaled.numerator() < 0 && scaled.numerator() % scaled.denominator() != 0) {
        --f;
    }
    return f;
}

VerificationReport verify_M_action(const Rational &bound)
{
    VerificationReport r = sweep_report("coset_M_action", bound);
    const auto triples = enumerate_lattice_triples(norm3_bound_of(bound));
    r.enumerated = triples.size();
    for (const Triple &t : triples) {
        const CosetLabel from = coset_of(t);
        const Triple image = apply(t, Transform::M);
        const auto to = try_coset_of(image);
        const CosetLabel expected = CosetLabel::make(-from.k, from.j);
        if (triple_norm(image) != triple_norm(t)) {
            record_failure(r, t, "M does not preserve the triple norm");
        } else if (!to || !(*to == expected)) {
            record_failure(r, t, "M maps " + label_string(from) + " to " + label_string(to));
        }
        if (!r.ok()) {
            break;
        }
    }
    return r;
}

VerificationReport verify_N_action(const Rational &bound)
{
    VerificationReport r = sweep_report("coset_N_action", bound);
    const auto triples = enumerate_lattice_triples(norm3_bound_of(bound));
    r.enumerated = triples.size();
    for (const Triple &t : triples) {
        const CosetLabel from = coset_of(t);
        const Triple image = apply(t, Transform::N);
        const auto to = try_coset_of(image);
        const CosetLabel expected = CosetLabel::make(from.j + from.k, from.k);
        if (triple_norm(image) != triple_norm(t)) {
            record_failure(r, t, "N does not preserve the triple norm");
        } else if (!(image.a0 == t.a0)) {
            record_failure(r, t, "N alters the first coordinate");
        } else if (!to || !(*to == expected)) {
            record_failure(r, t, "N maps " + label_string(from) + " to " + label_string(to));
        }
        if (!r.ok()) {
            break;
        }
    }
    return r;
}

VerificationReport verify_phi_pullback(const Rational &bound)
{
    VerificationReport r = sweep_report("coset_phi_pullback", bound);
    const auto triples = enumerate_lattice_triples(norm3_bound_of(bound));
    r.enumerated = triples.size();
    for (const Triple &t : triples) {
        const Triple beta = apply(t, Transform::M);
        const Monomial lhs = phi(t);
        const Rational q3 = 3 * triple_norm(beta);
        const Rational z3 = -9 * rat_trace_div_lambda(beta.a0);
        const Rational w3 = 3 * rat_trace(beta.a0);
        if (q3.denominator() != 1 || z3.denominator() != 1 || w3.denominator() != 1 ||
            !(lhs == Monomial{q3.numerator(), z3.numerator(), w3.numerator()})) {
            record_failure(r, t, "Phi(t) differs from q^|b|^2 z^(-3T(b0/lambda)) w^T(b0)");
            break;
        }
    }
    return r;
}

VerificationReport verify_V_stability(const Rational &bound)
{
    VerificationReport r = sweep_report("coset_V_stability", bound);
    std::size_t count = 0;
    for (const Triple &t : enumerate_lattice_triples(norm3_bound_of(bound))) {
        if (!(t.a1 == t.a2)) {
            continue;
        }
        ++count;
        const Triple m = apply(t, Transform::M);
        const Triple n = apply(t, Transform::N);
        if (!(m.a1 == m.a2)) {
            record_failure(r, t, "M image leaves V");
            break;
        }
        if (!(n.a1 == n.a2)) {
            record_failure(r, t, "N image leaves V");
            break;
        }
    }
    r.enumerated = count;
    return r;
}

VerificationReport verify_partition(const Rational &bound)
{
    VerificationReport r = sweep_report("coset_partition", bound);
    const auto triples = enumerate_lattice_triples(norm3_bound_of(bound));
    r.enumerated = triples.size();
    std::array<std::size_t, 9> counts{};
    for (const Triple &t : triples) {
        int hits = 0;
        CosetLabel hit{};
        for (int j = 0; j < 3; ++j) {
            for (int k = 0; k < 3; ++k) {
                if (in_coset(t, CosetLabel{j, k})) {
                    ++hits;
                    hit = CosetLabel{j, k};
                }
            }
        }
        const auto label = try_coset_of(t);
        if (hits != 1 || !label || !(*label == hit)) {
            record_failure(r, t, "triple lies in " + std::to_string(hits) + " cosets");
            break;
        }
        ++counts[3 * hit.j + hit.k];
    }
    if (r.ok()) {
        std::ostringstream out;
        out << "label counts (j,k):";
        for (int j = 0; j < 3; ++j) {
            for (int k = 0; k < 3; ++k) {
                out << " (" << j << ',' << k << ")=" << counts[3 * j + k];
            }
        }
        r.detail = out.str();
    }
    return r;
}

std::vector<VerificationReport> run_coset_sweeps(const Rational &bound)
{
    return {verify_partition(bound), verify_M_action(bound), verify_N_action(bound), verify_phi_pullback(bound),
            verify_V_stability(bound)};
}

TriSeries coset_sum(CosetLabel label, bool restrict_V, Int order)
{
    if (order < 0) {
        throw ContractError("coset_sum: negative order");
    }
    label = CosetLabel::make(label.j, label.k);
    TriSeries s(3 * order);
    const EisInt one{1, 0};
    for_each_shifted_triple(label.k, 3 * order, restrict_V,
                            [&](const LatticePoint &p0, const LatticePoint &p1, const LatticePoint &p2, Int n3) {
                                // the coordinate sum is sum(beta_i) - k*lambda = sum(beta_i) mod lambda
                                if (residue_mod_lambda(p0.beta + p1.beta + p2.beta) != label.j) {
                                    return;
                                }
                                s.add_term(Monomial{n3, -3 * p0.trace_div_lambda3(), 3 * p0.trace()}, one);
                            });
    return s;
}

TriSeries phi_sum(CosetLabel label, bool restrict_V, Int order)
{
    if (order < 0) {
        throw ContractError("phi_sum: negative order");
    }
    label = CosetLabel::make(label.j, label.k);
    TriSeries s(3 * order);
    const EisInt one{1, 0};
    for_each_shifted_triple(label.k, 3 * order, restrict_V,
                            [&](const LatticePoint &p0, const LatticePoint &p1, const LatticePoint &p2, Int) {
                                const Triple t = from_points(p0, p1, p2);
                                if (coset_of(t).j == label.j) {
                                    s.add_term(phi(t), one);
                                }
                            });
    return s;
}

std::vector<VerificationReport> check_coset_series(Int k, Int n, bool restrict_V, const ThetaSource &source)
{
    const int kk = detail::mod3(k);
    const std::string suffix = restrict_V ? "_v" : "";
    std::vector<VerificationReport> out;
    if (n < 0) {
        for (const char *name : {"coset_cube_phi", "coset_cube_pullback", "coset_first", "coset_rest"}) {
            out.push_back(contract_error_report(name + suffix, kk, std::to_string(n), "negative order"));
        }
        return out;
    }

    const Int half = (n + 1) / 2;
    const auto swap = SubstitutionSpec::swap_cube_inverse();
    const auto square = SubstitutionSpec::power(2);

    // Products over the second and third coordinates: squares of one-variable
    // series in general, q -> q^2 images on V.
    auto pair_factor = [&](OneVar which) {
        if (restrict_V) {
            return ts_substitute(source.one_var(which, half), square);
        }
        const TriSeries s = source.one_var(which, n);
        return s * s;
    };

    const TriSeries ck = source.c(kk, n);
    const TriSeries lhs =
        restrict_V ? ck * ts_substitute(source.c(kk, half), square) : ck * ck * ck;

    TriSeries by_phi(3 * n);
    TriSeries by_pullback(3 * n);
    for (int i = 0; i < 3; ++i) {
        by_phi = by_phi + phi_sum(CosetLabel::make(i, kk), restrict_V, n);
        by_pullback = by_pullback + coset_sum(CosetLabel::make(-kk, i), restrict_V, n);
    }
    out.push_back(compare_series("coset_cube_phi" + suffix, kk, n, lhs, by_phi));
    out.push_back(compare_series("coset_cube_pullback" + suffix, kk, n, lhs, by_pullback));

    const TriSeries three = TriSeries::constant(3 * n, EisInt{3, 0});
    const TriSeries first_lhs = three * coset_sum(CosetLabel::make(-kk, 0), restrict_V, n);
    const TriSeries a_pair = pair_factor(OneVar::a);
    const TriSeries b_pair = pair_factor(OneVar::b);
    const TriSeries first_rhs =
        ts_substitute(source.a(n), swap) * a_pair +
        ts_scale_unit(ts_substitute(source.b(1, n), swap) * b_pair, UnitPower(kk)) +
        ts_scale_unit(ts_substitute(source.b(-1, n), swap) * b_pair, UnitPower(-kk));
    out.push_back(compare_series("coset_first" + suffix, kk, n, first_lhs, first_rhs));

    // Independent of j, and a third of c_s(q,w,z^-3) times the pair factor.
    const TriSeries c_pair = pair_factor(OneVar::c);
    VerificationReport rest;
    rest.check = "coset_rest" + suffix;
    rest.k = kk;
    rest.bound_or_order = std::to_string(n);
    for (int s : {1, 2}) {
        const TriSeries rhs = ts_substitute(source.c(s, n), swap) * c_pair;
        for (int j = 0; j < 3 && rest.ok(); ++j) {
            const VerificationReport r =
                compare_series(rest.check, kk, n, three * coset_sum(CosetLabel::make(j, s), restrict_V, n), rhs);
            if (!r.ok()) {
                rest = r;
                rest.detail = "coset (" + std::to_string(j) + "," + std::to_string(s) + ")";
            }
        }
    }
    out.push_back(rest);
    return out;
}

} // namespace eistheta
