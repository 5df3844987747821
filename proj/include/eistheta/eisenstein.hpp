#pragma once

// Exact arithmetic in the Eisenstein integers Z[w] and the field Q(sqrt(-3)).
//
// Elements are stored in the basis (1, w) with w = exp(2 pi i / 3), so
// x + y*w. The prime above 3 is lambda = 1 + 2w = w - w^2 = sqrt(-3).

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>

#include <boost/rational.hpp>

namespace eistheta
{

using Int = std::int64_t;
using Rational = boost::rational<Int>;

namespace detail
{

// Checked primitives; every coordinate computation funnels through these.
inline Int checked_add(Int a, Int b)
{
    Int r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("eistheta: integer overflow in addition");
    }
    return r;
}

inline Int checked_sub(Int a, Int b)
{
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw std::overflow_error("eistheta: integer overflow in subtraction");
    }
    return r;
}

inline Int checked_mul(Int a, Int b)
{
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("eistheta: integer overflow in multiplication");
    }
    return r;
}

// Representative of a modulo 3 in {0, 1, 2}.
constexpr int mod3(Int a)
{
    const Int r = a % 3;
    return static_cast<int>(r < 0 ? r + 3 : r);
}

} // namespace detail

/// Element x + y*w of Z[w].
struct EisInt {
    Int x{0};
    Int y{0};

    constexpr EisInt() = default;
    constexpr EisInt(Int x_, Int y_) : x(x_), y(y_) {}
    static constexpr EisInt from_int(Int n)
    {
        return EisInt{n, 0};
    }

    constexpr bool is_zero() const
    {
        return x == 0 && y == 0;
    }

    friend constexpr bool operator==(const EisInt &, const EisInt &) = default;
    // Lexicographic on (x, y); only used for deterministic containers.
    friend constexpr auto operator<=>(const EisInt &, const EisInt &) = default;

    EisInt &operator+=(const EisInt &o)
    {
        x = detail::checked_add(x, o.x);
        y = detail::checked_add(y, o.y);
        return *this;
    }
    EisInt &operator-=(const EisInt &o)
    {
        x = detail::checked_sub(x, o.x);
        y = detail::checked_sub(y, o.y);
        return *this;
    }
    EisInt &operator*=(const EisInt &o);

    friend EisInt operator+(EisInt a, const EisInt &b)
    {
        return a += b;
    }
    friend EisInt operator-(EisInt a, const EisInt &b)
    {
        return a -= b;
    }
    friend EisInt operator*(EisInt a, const EisInt &b)
    {
        return a *= b;
    }
    friend EisInt operator-(const EisInt &a)
    {
        return EisInt{detail::checked_sub(0, a.x), detail::checked_sub(0, a.y)};
    }

    friend std::ostream &operator<<(std::ostream &os, const EisInt &a);
};

inline constexpr EisInt kOmega{0, 1};
inline constexpr EisInt kLambda{1, 2};

/// Complex conjugate; w maps to w^2 = -1 - w.
EisInt conj(const EisInt &a);

/// |a|^2 = x^2 - xy + y^2.
Int norm(const EisInt &a);

/// T(a) = a + conj(a) = 2x - y.
Int trace(const EisInt &a);

/// T(a / lambda). Since a - conj(a) = y*lambda and conj(lambda) = -lambda,
/// T(a/lambda) = (a - conj(a)) / lambda = y.
Int trace_div_lambda(const EisInt &a);

/// Residue of a modulo lambda, in {0, 1, 2}. Because w = 1 (mod lambda),
/// x + y*w is congruent to the rational integer x + y.
int residue_mod_lambda(const EisInt &a);

bool divisible_by_lambda(const EisInt &a);

/// w^a with a taken mod 3.
class UnitPower
{
public:
    constexpr UnitPower() = default;
    constexpr explicit UnitPower(Int a) : exp_(detail::mod3(a)) {}

    constexpr int exponent() const
    {
        return exp_;
    }
    constexpr UnitPower inverse() const
    {
        return UnitPower(-exp_);
    }
    constexpr UnitPower pow(Int k) const
    {
        return UnitPower(static_cast<Int>(exp_) * detail::mod3(k));
    }
    // 1, w or w^2 = -1 - w.
    EisInt value() const;

    friend constexpr UnitPower operator*(UnitPower a, UnitPower b)
    {
        return UnitPower(a.exp_ + b.exp_);
    }
    friend constexpr bool operator==(UnitPower, UnitPower) = default;

    friend std::ostream &operator<<(std::ostream &os, UnitPower u);

private:
    int exp_{0};
};

/// Cubic character: chi(a) = w^r where a = r (mod lambda).
/// chi(a) = w^0 exactly when lambda divides a. Additive in a, i.e.
/// chi(a + b) = chi(a) chi(b), but not multiplicative (chi(1) = w).
/// chi(conj a) = chi(a) and chi(-a) = chi(a)^-1.
UnitPower chi(const EisInt &a);

/// Element num / den of Q(sqrt(-3)), den > 0 and reduced: no rational prime
/// divides den together with both coordinates of num.
class EisRat
{
public:
    EisRat() = default;
    EisRat(const EisInt &num) : num_(num) {}
    EisRat(const EisInt &num, Int den);

    static EisRat inv_lambda();

    const EisInt &num() const
    {
        return num_;
    }
    Int den() const
    {
        return den_;
    }

    bool is_zero() const
    {
        return num_.is_zero();
    }
    bool is_integral() const
    {
        return den_ == 1;
    }

    friend bool operator==(const EisRat &, const EisRat &) = default;

    friend EisRat operator+(const EisRat &a, const EisRat &b);
    friend EisRat operator-(const EisRat &a, const EisRat &b);
    friend EisRat operator*(const EisRat &a, const EisRat &b);
    friend EisRat operator-(const EisRat &a)
    {
        return EisRat(-a.num_, a.den_);
    }

    friend std::ostream &operator<<(std::ostream &os, const EisRat &a);

private:
    EisInt num_{};
    Int den_{1};
};

EisRat conj(const EisRat &a);
Rational rat_norm(const EisRat &a);
Rational rat_trace(const EisRat &a);
Rational rat_trace_div_lambda(const EisRat &a);

} // namespace eistheta
