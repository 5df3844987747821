#include "eistheta/series.hpp"

#include <algorithm>
#include <sstream>

namespace eistheta
{

std::ostream &operator<<(std::ostream &os, const Monomial &m)
{
    return os << '(' << m.q3 << ',' << m.z3 << ',' << m.w3 << ')';
}

TriSeries::TriSeries(Int order3) : order3_(order3)
{
    if (order3 < 0) {
        throw ContractError("TriSeries: negative truncation order");
    }
}

TriSeries TriSeries::constant(Int order3, const EisInt &c)
{
    TriSeries s(order3);
    s.add_term(Monomial{}, c);
    return s;
}

EisInt TriSeries::coefficient(const Monomial &m) const
{
    if (m.q3 > order3_) {
        throw ContractError("TriSeries: coefficient requested above truncation order");
    }
    const auto it = terms_.find(m);
    return it == terms_.end() ? EisInt{} : it->second;
}

void TriSeries::add_term(const Monomial &m, const EisInt &c)
{
    if (m.q3 < 0) {
        throw ContractError("TriSeries: negative q-exponent");
    }
    if (m.q3 > order3_ || c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

TriSeries ts_add(const TriSeries &s, const TriSeries &t)
{
    TriSeries r(std::min(s.order3(), t.order3()));
    for (const auto &[m, c] : s.terms()) {
        r.add_term(m, c);
    }
    for (const auto &[m, c] : t.terms()) {
        r.add_term(m, c);
    }
    return r;
}

TriSeries ts_neg(const TriSeries &s)
{
    TriSeries r(s.order3());
    for (const auto &[m, c] : s.terms()) {
        r.add_term(m, -c);
    }
    return r;
}

TriSeries ts_sub(const TriSeries &s, const TriSeries &t)
{
    return ts_add(s, ts_neg(t));
}

TriSeries ts_scale(const TriSeries &s, const EisInt &c)
{
    TriSeries r(s.order3());
    for (const auto &[m, v] : s.terms()) {
        r.add_term(m, v * c);
    }
    return r;
}

TriSeries ts_scale_unit(const TriSeries &s, UnitPower u)
{
    return ts_scale(s, u.value());
}

TriSeries ts_mul(const TriSeries &s, const TriSeries &t)
{
    TriSeries r(std::min(s.order3(), t.order3()));
    const Int limit = r.order3();
    for (const auto &[ms, cs] : s.terms()) {
        if (ms.q3 > limit) {
            break;
        }
        // terms are sorted by q3 first
        for (const auto &[mt, ct] : t.terms()) {
            const Int q3 = detail::checked_add(ms.q3, mt.q3);
            if (q3 > limit) {
                break;
            }
            r.add_term(Monomial{q3, detail::checked_add(ms.z3, mt.z3), detail::checked_add(ms.w3, mt.w3)}, cs * ct);
        }
    }
    return r;
}

namespace
{

Int thirds_combination(Int a3, Int image_a3, Int b3, Int image_b3)
{
    const Int sum = detail::checked_add(detail::checked_mul(a3, image_a3), detail::checked_mul(b3, image_b3));
    if (sum % 3 != 0) {
        throw ContractError("ts_substitute: image exponent leaves the thirds grid");
    }
    return sum / 3;
}

} // namespace

TriSeries ts_substitute(const TriSeries &s, const SubstitutionSpec &sub)
{
    if (sub.q_power <= 0) {
        throw ContractError("ts_substitute: q must map to a positive power of q");
    }
    TriSeries r(detail::checked_mul(s.order3(), sub.q_power));
    for (const auto &[m, c] : s.terms()) {
        const Monomial image{detail::checked_mul(m.q3, sub.q_power),
                             thirds_combination(m.z3, sub.z_image.z3, m.w3, sub.w_image.z3),
                             thirds_combination(m.z3, sub.z_image.w3, m.w3, sub.w_image.w3)};
        r.add_term(image, c);
    }
    return r;
}

TriSeries ts_specialize(const TriSeries &s, bool set_z_to_one, bool set_w_to_one)
{
    TriSeries r(s.order3());
    for (const auto &[m, c] : s.terms()) {
        r.add_term(Monomial{m.q3, set_z_to_one ? 0 : m.z3, set_w_to_one ? 0 : m.w3}, c);
    }
    return r;
}

TriSeries ts_truncate(const TriSeries &s, Int order3)
{
    if (order3 > s.order3()) {
        throw ContractError("ts_truncate: requested order exceeds the series order");
    }
    TriSeries r(order3);
    for (const auto &[m, c] : s.terms()) {
        if (m.q3 > order3) {
            break;
        }
        r.add_term(m, c);
    }
    return r;
}

std::optional<Difference> ts_equal_to_order(const TriSeries &s, const TriSeries &t, Int n)
{
    if (n < 0) {
        throw ContractError("ts_equal_to_order: negative order");
    }
    const Int limit = detail::checked_mul(3, n);
    if (limit > s.order3() || limit > t.order3()) {
        std::ostringstream msg;
        msg << "ts_equal_to_order: order3 " << limit << " exceeds operand orders (" << s.order3() << ", "
            << t.order3() << ")";
        throw ContractError(msg.str());
    }
    // Merge walk over the two sorted maps.
    auto is = s.terms().begin();
    auto it = t.terms().begin();
    const auto es = s.terms().end();
    const auto et = t.terms().end();
    while (true) {
        const bool s_live = is != es && is->first.q3 <= limit;
        const bool t_live = it != et && it->first.q3 <= limit;
        if (!s_live && !t_live) {
            return std::nullopt;
        }
        if (s_live && (!t_live || is->first < it->first)) {
            return Difference{is->first, is->second, EisInt{}};
        }
        if (t_live && (!s_live || it->first < is->first)) {
            return Difference{it->first, EisInt{}, it->second};
        }
        if (is->second != it->second) {
            return Difference{is->first, is->second, it->second};
        }
        ++is;
        ++it;
    }
}

nlohmann::ordered_json ts_to_json(const TriSeries &s)
{
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto &[m, c] : s.terms()) {
        terms.push_back({{"q3", m.q3}, {"z3", m.z3}, {"w3", m.w3}, {"re", c.x}, {"om", c.y}});
    }
    nlohmann::ordered_json j;
    j["order3"] = s.order3();
    j["terms"] = std::move(terms);
    return j;
}

TriSeries ts_from_json(const nlohmann::ordered_json &j)
{
    TriSeries s(j.at("order3").get<Int>());
    for (const auto &term : j.at("terms")) {
        const Monomial m{term.at("q3").get<Int>(), term.at("z3").get<Int>(), term.at("w3").get<Int>()};
        if (m.q3 > s.order3()) {
            throw ContractError("ts_from_json: term above the declared order");
        }
        s.add_term(m, EisInt{term.at("re").get<Int>(), term.at("om").get<Int>()});
    }
    return s;
}

std::string ts_serialize(const TriSeries &s)
{
    return ts_to_json(s).dump();
}

TriSeries ts_parse(const std::string &text)
{
    return ts_from_json(nlohmann::ordered_json::parse(text));
}

std::string ts_serialize_csv(const TriSeries &s)
{
    std::ostringstream out;
    out << "q3,z3,w3,re,om\n";
    for (const auto &[m, c] : s.terms()) {
        out << m.q3 << ',' << m.z3 << ',' << m.w3 << ',' << c.x << ',' << c.y << '\n';
    }
    return out.str();
}

} // namespace eistheta
