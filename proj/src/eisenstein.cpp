#include "eistheta/eisenstein.hpp"

#include <numeric>

namespace eistheta
{

using detail::checked_add;
using detail::checked_mul;
using detail::checked_sub;

EisInt &EisInt::operator*=(const EisInt &o)
{
    // w^2 = -1 - w
    const Int xx = checked_mul(x, o.x);
    const Int yy = checked_mul(y, o.y);
    const Int xy = checked_add(checked_mul(x, o.y), checked_mul(o.x, y));
    x = checked_sub(xx, yy);
    y = checked_sub(xy, yy);
    return *this;
}

std::ostream &operator<<(std::ostream &os, const EisInt &a)
{
    return os << '(' << a.x << ',' << a.y << ')';
}

EisInt conj(const EisInt &a)
{
    return EisInt{checked_sub(a.x, a.y), checked_sub(0, a.y)};
}

Int norm(const EisInt &a)
{
    return checked_add(checked_sub(checked_mul(a.x, a.x), checked_mul(a.x, a.y)), checked_mul(a.y, a.y));
}

Int trace(const EisInt &a)
{
    return checked_sub(checked_mul(2, a.x), a.y);
}

Int trace_div_lambda(const EisInt &a)
{
    return a.y;
}

int residue_mod_lambda(const EisInt &a)
{
    return detail::mod3(detail::mod3(a.x) + detail::mod3(a.y));
}

bool divisible_by_lambda(const EisInt &a)
{
    return residue_mod_lambda(a) == 0;
}

EisInt UnitPower::value() const
{
    switch (exp_) {
        case 0:
            return EisInt{1, 0};
        case 1:
            return EisInt{0, 1};
        default:
            return EisInt{-1, -1};
    }
}

std::ostream &operator<<(std::ostream &os, UnitPower u)
{
    return os << "w^" << u.exponent();
}

UnitPower chi(const EisInt &a)
{
    return UnitPower(residue_mod_lambda(a));
}

EisRat::EisRat(const EisInt &num, Int den) : num_(num), den_(den)
{
    if (den_ == 0) {
        throw std::domain_error("EisRat: zero denominator");
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = checked_sub(0, den_);
    }
    const Int g = std::gcd(std::gcd(num_.x, num_.y), den_);
    if (g > 1) {
        num_ = EisInt{num_.x / g, num_.y / g};
        den_ /= g;
    }
}

EisRat EisRat::inv_lambda()
{
    // lambda * (-1 - 2w) = -(1 + 2w)^2 = -(1 + 4w + 4w^2) = 3
    return EisRat(EisInt{-1, -2}, 3);
}

EisRat operator+(const EisRat &a, const EisRat &b)
{
    const Int g = std::gcd(a.den_, b.den_);
    const Int fa = b.den_ / g;
    const Int fb = a.den_ / g;
    const EisInt n = a.num_ * EisInt::from_int(fa) + b.num_ * EisInt::from_int(fb);
    return EisRat(n, checked_mul(a.den_, fa));
}

EisRat operator-(const EisRat &a, const EisRat &b)
{
    return a + (-b);
}

EisRat operator*(const EisRat &a, const EisRat &b)
{
    return EisRat(a.num_ * b.num_, checked_mul(a.den_, b.den_));
}

std::ostream &operator<<(std::ostream &os, const EisRat &a)
{
    os << a.num_;
    if (a.den_ != 1) {
        os << '/' << a.den_;
    }
    return os;
}

EisRat conj(const EisRat &a)
{
    return EisRat(conj(a.num()), a.den());
}

Rational rat_norm(const EisRat &a)
{
    return Rational(norm(a.num()), checked_mul(a.den(), a.den()));
}

Rational rat_trace(const EisRat &a)
{
    return Rational(trace(a.num()), a.den());
}

Rational rat_trace_div_lambda(const EisRat &a)
{
    return Rational(trace_div_lambda(a.num()), a.den());
}

} // namespace eistheta
