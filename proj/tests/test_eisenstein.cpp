#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "eistheta/eisenstein.hpp"

using namespace eistheta;

namespace
{

using cplx = std::complex<double>;

const cplx kW(-0.5, std::sqrt(3.0) / 2);
const cplx kL(0.0, std::sqrt(3.0));

cplx to_c(const EisInt &a)
{
    return double(a.x) + double(a.y) * kW;
}

cplx to_c(const EisRat &a)
{
    return to_c(a.num()) / double(a.den());
}

Int round_int(double v)
{
    return static_cast<Int>(std::llround(v));
}

// Exact test for lambda | a: a/lambda = a(-1-2w)/3 must have integral coordinates.
bool lambda_divides(const EisInt &a)
{
    const Int x = -a.x + 2 * a.y;
    const Int y = -2 * a.x + a.y;
    return x % 3 == 0 && y % 3 == 0;
}

struct Sampler {
    std::mt19937_64 rng{20240611};
    std::uniform_int_distribution<Int> coord{-50, 50};
    EisInt operator()()
    {
        return EisInt{coord(rng), coord(rng)};
    }
};

} // namespace

TEST_CASE("norm examples")
{
    CHECK(norm(EisInt{1, 0}) == 1);
    CHECK(norm(EisInt{0, 0}) == 0);
    CHECK(norm(EisInt{2, 1}) == round_int(std::norm(to_c(EisInt{2, 1}))));
    CHECK(norm(EisInt{2, 1}) == 3);
}

TEST_CASE("trace examples")
{
    CHECK(trace(EisInt{1, 0}) == 2);
    CHECK(trace(EisInt{0, 1}) == round_int(2 * to_c(EisInt{0, 1}).real()));
    CHECK(trace(EisInt{0, 1}) == -1);
    CHECK(trace(EisInt{1, 1}) == 1);
}

TEST_CASE("trace over lambda examples")
{
    auto oracle = [](const EisInt &a) { return round_int(2 * (to_c(a) / kL).real()); };
    CHECK(trace_div_lambda(EisInt{5, 0}) == 0);
    CHECK(trace_div_lambda(EisInt{0, 1}) == 1);
    CHECK(oracle(EisInt{0, 1}) == 1);
    CHECK(trace_div_lambda(EisInt{-1, -1}) == -1);
    CHECK(oracle(EisInt{-1, -1}) == -1);
}

TEST_CASE("chi examples")
{
    CHECK(chi(EisInt{0, 0}) == UnitPower(0));
    CHECK(chi(EisInt{1, 0}) == UnitPower(1));
    CHECK(chi(EisInt{1, 2}) == UnitPower(0));
    CHECK(lambda_divides(EisInt{1, 2}));
    // additive, not multiplicative
    CHECK(chi(EisInt{1, 0} * EisInt{1, 0}) != chi(EisInt{1, 0}) * chi(EisInt{1, 0}));
    CHECK(kLambda == EisInt{1, 2});
    // lambda = w - w^2
    CHECK(kOmega - kOmega * kOmega == kLambda);
}

TEST_CASE("multiplication matches complex arithmetic")
{
    Sampler sample;
    for (int i = 0; i < 2000; ++i) {
        const EisInt a = sample();
        const EisInt b = sample();
        const cplx p = to_c(a) * to_c(b);
        const EisInt prod = a * b;
        CHECK(std::abs(to_c(prod) - p) < 1e-6);
    }
    CHECK(kOmega * kOmega * kOmega == EisInt{1, 0});
}

TEST_CASE("arithmetic properties over a random sample")
{
    Sampler sample;
    for (int i = 0; i < 10000; ++i) {
        const EisInt a = sample();
        const EisInt b = sample();
        REQUIRE(norm(a * b) == norm(a) * norm(b));
        REQUIRE(trace(a + b) == trace(a) + trace(b));
        REQUIRE(chi(a + b) == chi(a) * chi(b));
        REQUIRE(chi(a * b).exponent() == detail::mod3(chi(a).exponent() * chi(b).exponent()));
        REQUIRE(trace(conj(a)) == trace(a));
        REQUIRE(trace_div_lambda(conj(a)) == -trace_div_lambda(a));
        REQUIRE(chi(conj(a)) == chi(a));
        REQUIRE(chi(-a) == chi(a).inverse());
        REQUIRE((chi(a) == UnitPower(0)) == lambda_divides(a));
        REQUIRE(norm(a) >= 0);
        REQUIRE((norm(a) == 0) == a.is_zero());
        REQUIRE(a * conj(a) == EisInt::from_int(norm(a)));
    }
}

TEST_CASE("trace over lambda agrees with the floating point oracle")
{
    Sampler sample;
    for (int i = 0; i < 2000; ++i) {
        const EisInt a = sample();
        REQUIRE(trace_div_lambda(a) == round_int(2 * (to_c(a) / kL).real()));
    }
}

TEST_CASE("unit powers")
{
    CHECK(UnitPower(1) * UnitPower(2) == UnitPower(0));
    CHECK(UnitPower(-1) == UnitPower(2));
    CHECK(UnitPower(2).pow(2) == UnitPower(1));
    CHECK(UnitPower(1).inverse() == UnitPower(2));
    CHECK(UnitPower(2).value() == kOmega * kOmega);
}

TEST_CASE("EisRat reduction and inverse of lambda")
{
    const EisRat r(EisInt{2, 4}, 6);
    CHECK(r.num() == EisInt{1, 2});
    CHECK(r.den() == 3);
    const EisRat neg(EisInt{1, 1}, -2);
    CHECK(neg.num() == EisInt{-1, -1});
    CHECK(neg.den() == 2);
    CHECK(EisRat(EisInt{}, 7).den() == 1);
    CHECK(EisRat(EisInt{3, 5}, 3).den() == 3);

    const EisRat inv = EisRat::inv_lambda();
    CHECK(inv * EisRat(kLambda) == EisRat(EisInt{1, 0}));
    CHECK(std::abs(to_c(inv) - 1.0 / kL) < 1e-12);
    CHECK_THROWS_AS(EisRat(EisInt{1, 0}, 0), std::domain_error);
}

TEST_CASE("rational norm, trace and trace over lambda")
{
    const EisRat inv = EisRat::inv_lambda();
    CHECK(rat_norm(inv) == Rational(1, 3));
    CHECK(rat_trace(inv) == Rational(0));
    CHECK(rat_trace_div_lambda(inv) == Rational(-2, 3));

    const EisRat w_inv = EisRat(kOmega) * inv;
    CHECK(rat_norm(w_inv) == Rational(1, 3));
    CHECK(rat_trace(w_inv) == Rational(1));
    CHECK(rat_trace_div_lambda(w_inv) == Rational(1, 3));

    const EisRat zero;
    CHECK(rat_norm(zero) == Rational(0));
    CHECK(rat_trace(zero) == Rational(0));
    CHECK(rat_trace_div_lambda(zero) == Rational(0));
}

TEST_CASE("EisRat closure agrees with complex arithmetic")
{
    Sampler sample;
    std::uniform_int_distribution<Int> den(1, 12);
    for (int i = 0; i < 2000; ++i) {
        const EisRat a(sample(), den(sample.rng));
        const EisRat b(sample(), den(sample.rng));
        REQUIRE(std::abs(to_c(a + b) - (to_c(a) + to_c(b))) < 1e-9);
        REQUIRE(std::abs(to_c(a - b) - (to_c(a) - to_c(b))) < 1e-9);
        REQUIRE(std::abs(to_c(a * b) - to_c(a) * to_c(b)) < 1e-6);
        REQUIRE(std::abs(to_c(conj(a)) - std::conj(to_c(a))) < 1e-9);
    }
}

TEST_CASE("embedding consistency and coset structure of rational invariants")
{
    Sampler sample;
    for (int i = 0; i < 5000; ++i) {
        const EisInt a = sample();
        const EisRat r(a);
        REQUIRE(rat_norm(r) == Rational(norm(a)));
        REQUIRE(rat_trace(r) == Rational(trace(a)));
        REQUIRE(rat_trace_div_lambda(r) == Rational(trace_div_lambda(a)));

        // alpha in O + k/lambda
        for (Int k = 0; k < 3; ++k) {
            const EisRat alpha = r + EisRat(EisInt::from_int(k)) * EisRat::inv_lambda();
            const Rational nrm = rat_norm(alpha) - Rational(k * k, 3);
            const Rational tdl = rat_trace_div_lambda(alpha) + Rational(2 * k, 3);
            REQUIRE(nrm.denominator() == 1);
            REQUIRE(rat_trace(alpha).denominator() == 1);
            REQUIRE(tdl.denominator() == 1);
        }
    }
}

TEST_CASE("overflow is reported, not wrapped")
{
    const EisInt big{Int(1) << 40, 0};
    CHECK_THROWS_AS(big * big, std::overflow_error);
}
