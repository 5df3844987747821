#include "eistheta/report.hpp"

#include <algorithm>
#include <sstream>

namespace eistheta
{

std::string_view to_string(Status s)
{
    switch (s) {
        case Status::ok:
            return "ok";
        case Status::fail:
            return "fail";
        case Status::contract_error:
            return "contract-error";
    }
    return "?";
}

std::string to_string(const Rational &r)
{
    std::ostringstream out;
    out << r.numerator();
    if (r.denominator() != 1) {
        out << '/' << r.denominator();
    }
    return out.str();
}

nlohmann::ordered_json to_json(const EisInt &c)
{
    return {{"re", c.x}, {"om", c.y}};
}

nlohmann::ordered_json to_json(const Difference &d)
{
    return {{"q3", d.monomial.q3},
            {"z3", d.monomial.z3},
            {"w3", d.monomial.w3},
            {"lhs", to_json(d.lhs)},
            {"rhs", to_json(d.rhs)}};
}

nlohmann::ordered_json to_json(const VerificationReport &r)
{
    nlohmann::ordered_json j;
    j["check"] = r.check;
    j["k"] = r.k ? nlohmann::ordered_json(*r.k) : nlohmann::ordered_json(nullptr);
    j["bound_or_order"] = r.bound_or_order;
    j["status"] = std::string(to_string(r.status));
    j["asserted"] = r.asserted;
    j["counterexample"] = r.counterexample;
    if (r.enumerated) {
        j["enumerated"] = *r.enumerated;
    }
    if (!r.detail.empty()) {
        j["detail"] = r.detail;
    }
    return j;
}

nlohmann::ordered_json to_json(const std::vector<VerificationReport> &reports)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto &r : reports) {
        arr.push_back(to_json(r));
    }
    return arr;
}

namespace
{

std::string csv_field(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + '"';
}

} // namespace

std::string reports_to_csv(const std::vector<VerificationReport> &reports)
{
    std::ostringstream out;
    out << "check,k,bound_or_order,status,asserted,detail\n";
    for (const auto &r : reports) {
        out << csv_field(r.check) << ',' << (r.k ? std::to_string(*r.k) : std::string()) << ','
            << csv_field(r.bound_or_order) << ',' << to_string(r.status) << ',' << (r.asserted ? "true" : "false")
            << ',' << csv_field(r.detail) << '\n';
    }
    return out.str();
}

VerificationReport compare_series(std::string check, std::optional<int> k, Int n, const TriSeries &lhs,
                                  const TriSeries &rhs)
{
    VerificationReport r;
    r.check = std::move(check);
    r.k = k;
    r.bound_or_order = std::to_string(n);
    try {
        if (const auto diff = ts_equal_to_order(lhs, rhs, n)) {
            r.status = Status::fail;
            r.counterexample = to_json(*diff);
        }
    } catch (const ContractError &e) {
        r.status = Status::contract_error;
        r.detail = e.what();
    }
    return r;
}

VerificationReport contract_error_report(std::string check, std::optional<int> k, std::string bound_or_order,
                                         std::string what)
{
    VerificationReport r;
    r.check = std::move(check);
    r.k = k;
    r.bound_or_order = std::move(bound_or_order);
    r.status = Status::contract_error;
    r.detail = std::move(what);
    return r;
}

bool all_asserted_ok(const std::vector<VerificationReport> &reports)
{
    return std::all_of(reports.begin(), reports.end(), [](const auto &r) { return !r.asserted || r.ok(); });
}

} // namespace eistheta
