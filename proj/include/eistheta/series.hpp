#pragma once

// Truncated sparse Laurent series in q, z, w with Z[w] coefficients.
//
// All exponents live on the thirds grid and are stored multiplied by 3.
// A series carries a q-truncation order (also scaled by 3): it is exact for
// every monomial with q3 <= order3 and stores nothing above it.

#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "eistheta/eisenstein.hpp"

namespace eistheta
{

/// Raised when an operation would silently check or produce data beyond the
/// guaranteed truncation order, or receives an otherwise invalid argument.
class ContractError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

struct Monomial {
    Int q3{0};
    Int z3{0};
    Int w3{0};

    friend constexpr bool operator==(const Monomial &, const Monomial &) = default;
    friend constexpr auto operator<=>(const Monomial &, const Monomial &) = default;
    friend std::ostream &operator<<(std::ostream &os, const Monomial &m);
};

/// Image of a variable under a substitution: z^(z3/3) w^(w3/3).
struct VarImage {
    Int z3{0};
    Int w3{0};
};

/// (q, z, w) -> (q^d, image_z, image_w). q never appears in the images, so
/// a truncation at q-order N becomes a truncation at q-order d*N.
struct SubstitutionSpec {
    Int q_power{1};
    VarImage z_image{3, 0};
    VarImage w_image{0, 3};

    static SubstitutionSpec identity()
    {
        return {};
    }
    /// (q, z, w) -> (q, w, z^-3), the argument pattern a(q, w, z^-3).
    static SubstitutionSpec swap_cube_inverse()
    {
        return {1, {0, 3}, {-9, 0}};
    }
    /// (q, z, w) -> (q^d, z^d, w^d).
    static SubstitutionSpec power(Int d)
    {
        return {d, {3 * d, 0}, {0, 3 * d}};
    }
    static SubstitutionSpec invert(bool z, bool w)
    {
        return {1, {z ? -3 : 3, 0}, {0, w ? -3 : 3}};
    }
    /// (q, z, w) -> (q, 1, z^3), the argument pattern b(q, 1, z^3).
    static SubstitutionSpec one_and_z_cubed()
    {
        return {1, {0, 0}, {9, 0}};
    }
};

struct Difference {
    Monomial monomial;
    EisInt lhs;
    EisInt rhs;
};

class TriSeries
{
public:
    using TermMap = std::map<Monomial, EisInt>;

    TriSeries() = default;
    explicit TriSeries(Int order3);

    /// The constant series c with the given order.
    static TriSeries constant(Int order3, const EisInt &c);

    Int order3() const
    {
        return order3_;
    }
    const TermMap &terms() const
    {
        return terms_;
    }
    std::size_t size() const
    {
        return terms_.size();
    }
    bool empty() const
    {
        return terms_.empty();
    }

    /// Coefficient of m, zero when absent. Throws ContractError if m lies
    /// above the truncation order.
    EisInt coefficient(const Monomial &m) const;

    /// Accumulates c into the coefficient of m. Terms above the truncation
    /// order are discarded; zero results are purged.
    void add_term(const Monomial &m, const EisInt &c);

    friend bool operator==(const TriSeries &, const TriSeries &) = default;

private:
    Int order3_{0};
    TermMap terms_;
};

TriSeries ts_add(const TriSeries &s, const TriSeries &t);
TriSeries ts_sub(const TriSeries &s, const TriSeries &t);
TriSeries ts_neg(const TriSeries &s);
TriSeries ts_scale(const TriSeries &s, const EisInt &c);
TriSeries ts_scale_unit(const TriSeries &s, UnitPower u);

/// Truncated product. The result order is the smaller operand order. Since
/// every exponent of q is nonnegative, a product monomial with q3 <= order3
/// only draws on factor monomials with q3 <= order3, so the truncated
/// operands carry enough data.
TriSeries ts_mul(const TriSeries &s, const TriSeries &t);

/// Throws ContractError on q_power <= 0 or when an image exponent combination
/// leaves the thirds grid.
TriSeries ts_substitute(const TriSeries &s, const SubstitutionSpec &sub);

TriSeries ts_specialize(const TriSeries &s, bool set_z_to_one, bool set_w_to_one);

/// Restricts s to q3 <= order3 (order3 may not exceed s.order3()).
TriSeries ts_truncate(const TriSeries &s, Int order3);

/// Compares all monomials with q3 <= 3n. Returns the lexicographically least
/// difference, or nullopt when equal. Throws ContractError if 3n exceeds
/// either operand's order.
std::optional<Difference> ts_equal_to_order(const TriSeries &s, const TriSeries &t, Int n);

nlohmann::ordered_json ts_to_json(const TriSeries &s);
TriSeries ts_from_json(const nlohmann::ordered_json &j);

/// Canonical JSON text, terms sorted by (q3, z3, w3).
std::string ts_serialize(const TriSeries &s);
TriSeries ts_parse(const std::string &text);

/// q3,z3,w3,re,om rows under a header line.
std::string ts_serialize_csv(const TriSeries &s);

inline TriSeries operator+(const TriSeries &s, const TriSeries &t)
{
    return ts_add(s, t);
}
inline TriSeries operator-(const TriSeries &s, const TriSeries &t)
{
    return ts_sub(s, t);
}
inline TriSeries operator*(const TriSeries &s, const TriSeries &t)
{
    return ts_mul(s, t);
}

} // namespace eistheta
