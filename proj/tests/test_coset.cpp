#include "doctest.h"

#include <set>

#include "eistheta/coset.hpp"

using namespace eistheta;

namespace
{

const EisRat kInv = EisRat::inv_lambda();
const EisRat kW = EisRat(kOmega);
const EisRat kOne = EisRat(EisInt{1, 0});

// Independent count of Lambda-triples with |t|^2 <= n3/3, by brute force over
// a box of each shifted coset (no use of the enumeration helpers).
std::size_t brute_triple_count(Int n3)
{
    std::size_t count = 0;
    for (Int k = 0; k < 3; ++k) {
        std::vector<Int> norms;
        for (Int x = -6; x <= 6; ++x) {
            for (Int y = -6; y <= 6; ++y) {
                const Rational nrm = rat_norm(EisRat(EisInt{x, y}) + EisRat(EisInt::from_int(k)) * kInv);
                if (3 * nrm <= n3) {
                    norms.push_back((3 * nrm).numerator());
                }
            }
        }
        for (Int a : norms) {
            for (Int b : norms) {
                for (Int c : norms) {
                    count += (a + b + c <= n3) ? 1 : 0;
                }
            }
        }
    }
    return count;
}

} // namespace

TEST_CASE("triple norm")
{
    CHECK(triple_norm(Triple{}) == Rational(0));
    CHECK(triple_norm(Triple{kInv, kInv, kInv}) == Rational(1));
    CHECK(triple_norm(Triple{kOne, kW, EisRat()}) == Rational(2));
}

TEST_CASE("phi")
{
    CHECK(phi(Triple{}) == Monomial{0, 0, 0});
    // sum 3/lambda = -lambda: T(-lambda) = 0, T(-1) = -2
    CHECK(phi(Triple{kInv, kInv, kInv}) == Monomial{3, 0, -6});
    CHECK(phi(Triple{kOne, kW, kW * kW}) == Monomial{9, 0, 0});
    CHECK_THROWS_AS(phi(Triple{kInv, EisRat(), EisRat()}), NotInLattice);
}

TEST_CASE("coset labels")
{
    CHECK(coset_of(Triple{}) == CosetLabel{0, 0});
    CHECK(coset_of(Triple{kInv, kInv, kInv}) == CosetLabel{0, 1});
    CHECK(coset_of(Triple{kOne, EisRat(), EisRat()}) == CosetLabel{1, 0});
    CHECK(CosetLabel::make(-1, 4) == CosetLabel{2, 1});

    CHECK_THROWS_AS(coset_of(Triple{kInv, EisRat(), EisRat()}), NotInLattice);
    CHECK_THROWS_AS(coset_of(Triple{EisRat(EisInt{1, 0}, 2), EisRat(), EisRat()}), NotInLattice);
    CHECK_FALSE(try_coset_of(Triple{kInv, kInv * EisRat(EisInt{2, 0}), kInv}).has_value());

    for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 3; ++k) {
            CHECK(in_coset(Triple{kInv, kInv, kInv}, CosetLabel{j, k}) == (j == 0 && k == 1));
        }
    }
}

TEST_CASE("apply M and N")
{
    CHECK(apply(Triple{}, Transform::M) == Triple{});
    const Triple ones{kOne, kOne, kOne};
    const Triple image = apply(ones, Transform::M);
    CHECK(image == Triple{EisRat(-kLambda), EisRat(), EisRat()});
    CHECK(image.a0 == EisRat(EisInt{3, 0}) * kInv);

    const Triple t{EisRat(EisInt{2, 1}), kInv, EisRat(EisInt{0, 5}, 3)};
    const Triple n = apply(t, Transform::N);
    CHECK(n.a0 == t.a0);
    CHECK(n.a1 == kW * t.a1);
    CHECK(n.a2 == kW * t.a2);

    // M^4 = identity (M^2 swaps the last two coordinates up to sign)
    Triple r = t;
    for (int i = 0; i < 4; ++i) {
        r = apply(r, Transform::M);
    }
    CHECK(r == t);
}

TEST_CASE("N action on a single point")
{
    // (1/lambda, w/lambda, w/lambda): coordinate sum (1 + 2w)/lambda = 1.
    const Triple t{kInv, kW * kInv, kW * kInv};
    CHECK(coset_of(t) == CosetLabel{1, 1});
    CHECK(coset_of(apply(t, Transform::N)) == CosetLabel{2, 1});
}

TEST_CASE("lattice triple enumeration")
{
    for (Int n3 : {0, 1, 3, 6, 9}) {
        const auto triples = enumerate_lattice_triples(n3);
        REQUIRE(triples.size() == brute_triple_count(n3));
        for (const auto &t : triples) {
            REQUIRE(3 * triple_norm(t) <= n3);
            REQUIRE(try_coset_of(t).has_value());
        }
    }
    CHECK(enumerate_lattice_triples(9).size() == 1063);
    CHECK(norm3_bound_of(Rational(3)) == 9);
    CHECK(norm3_bound_of(Rational(7, 6)) == 3);
    CHECK(norm3_bound_of(Rational(-1, 2)) == -2);
}

TEST_CASE("sweeps")
{
    for (const Rational bound : {Rational(0), Rational(1), Rational(2), Rational(3)}) {
        for (const auto &r : run_coset_sweeps(bound)) {
            INFO(r.check << " " << r.detail);
            CHECK(r.ok());
            CHECK(r.counterexample.is_null());
            CHECK(r.enumerated.has_value());
        }
    }
    const auto at_zero = verify_M_action(Rational(0));
    CHECK(at_zero.enumerated == std::size_t(1));
    CHECK(verify_V_stability(Rational(0)).enumerated == std::size_t(1));
    CHECK(verify_M_action(Rational(3)).enumerated == std::size_t(1063));
}

TEST_CASE("unitarity and V stability, pointwise")
{
    for (const auto &t : enumerate_lattice_triples(9)) {
        REQUIRE(triple_norm(apply(t, Transform::M)) == triple_norm(t));
        REQUIRE(triple_norm(apply(t, Transform::N)) == triple_norm(t));
    }
    const Triple v{kInv, kInv, kInv};
    const Triple mv = apply(v, Transform::M);
    CHECK(mv.a1 == mv.a2);
    const Triple u{kOne, kW, kW};
    CHECK(apply(u, Transform::N) == Triple{kOne, kW * kW, kW * kW});
}

TEST_CASE("phi pullback point")
{
    const Triple ones{kOne, kOne, kOne};
    const Triple beta = apply(ones, Transform::M);
    // T(1 + 1 + 1) = 6 = -3 T(-lambda / lambda)
    CHECK(phi(ones) == Monomial{9, 18, 0});
    CHECK(-9 * rat_trace_div_lambda(beta.a0) == Rational(18));
    CHECK(3 * rat_trace(beta.a0) == Rational(0));
}

TEST_CASE("coset sums")
{
    const TriSeries base = coset_sum(CosetLabel{0, 0}, false, 0);
    CHECK(base == TriSeries::constant(0, EisInt{1, 0}));
    CHECK(coset_sum(CosetLabel{1, 0}, false, 0).empty());
    CHECK(phi_sum(CosetLabel{0, 0}, true, 0) == TriSeries::constant(0, EisInt{1, 0}));

    // c_k^3 = sum over the three cosets Lambda_{-k, s}
    for (int k = 0; k < 3; ++k) {
        const TriSeries c = build_c(k, 5);
        TriSeries total(15);
        for (int s = 0; s < 3; ++s) {
            total = total + coset_sum(CosetLabel::make(-k, s), false, 5);
        }
        CHECK(total == c * c * c);
    }
    CHECK_THROWS_AS(coset_sum(CosetLabel{}, false, -1), ContractError);
}

TEST_CASE("series-level coset identities")
{
    for (bool restrict_V : {false, true}) {
        for (int k = 0; k < 3; ++k) {
            for (const auto &r : check_coset_series(k, 6, restrict_V)) {
                INFO(r.check << " k=" << k << " " << r.detail);
                CHECK(r.ok());
            }
        }
    }
    for (const auto &r : check_coset_series(1, -1, false)) {
        CHECK(r.status == Status::contract_error);
    }
}
