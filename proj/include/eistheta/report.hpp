#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "eistheta/eisenstein.hpp"
#include "eistheta/series.hpp"

namespace eistheta
{

enum class Status { ok, fail, contract_error };

std::string_view to_string(Status s);

/// Outcome of one identity check or coset sweep. A report with status ok
/// never carries a counterexample.
struct VerificationReport {
    std::string check;
    std::optional<int> k;
    std::string bound_or_order;
    Status status{Status::ok};
    // Unasserted reports are recorded but never affect the overall verdict.
    bool asserted{true};
    nlohmann::ordered_json counterexample;
    std::string detail;
    std::optional<std::size_t> enumerated;

    bool ok() const
    {
        return status == Status::ok;
    }
};

std::string to_string(const Rational &r);

nlohmann::ordered_json to_json(const EisInt &c);
nlohmann::ordered_json to_json(const Difference &d);
nlohmann::ordered_json to_json(const VerificationReport &r);
nlohmann::ordered_json to_json(const std::vector<VerificationReport> &reports);

/// check,k,bound_or_order,status,asserted,detail
std::string reports_to_csv(const std::vector<VerificationReport> &reports);

/// Report for an exact series comparison at order n. Contract errors raised
/// while comparing are converted into status contract_error.
VerificationReport compare_series(std::string check, std::optional<int> k, Int n, const TriSeries &lhs,
                                  const TriSeries &rhs);

VerificationReport contract_error_report(std::string check, std::optional<int> k, std::string bound_or_order,
                                         std::string what);

/// True when every asserted report is ok.
bool all_asserted_ok(const std::vector<VerificationReport> &reports);

} // namespace eistheta
