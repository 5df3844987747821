#include "eistheta/cli.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "eistheta/coset.hpp"
#include "eistheta/identities.hpp"
#include "eistheta/theta.hpp"

namespace eistheta
{

namespace
{

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
    std::string series;
    std::string identity;
    bool all{false};
    std::optional<Int> k;
    Int order{6};
    std::string bound{"2"};
    std::string format{"json"};
    std::string out_path;
};

const std::map<std::string, std::function<TriSeries(Int)>> &series_table()
{
    static const std::map<std::string, std::function<TriSeries(Int)>> table = {
        {"a", [](Int n) { return build_a(n); }},
        {"b0", [](Int n) { return build_b(0, n); }},
        {"b1", [](Int n) { return build_b(1, n); }},
        {"b2", [](Int n) { return build_b(2, n); }},
        {"c0", [](Int n) { return build_c(0, n); }},
        {"c1", [](Int n) { return build_c(1, n); }},
        {"c2", [](Int n) { return build_c(2, n); }},
        {"a1var", [](Int n) { return build_one_var(OneVar::a, n); }},
        {"b1var", [](Int n) { return build_one_var(OneVar::b, n); }},
        {"c1var", [](Int n) { return build_one_var(OneVar::c, n); }},
    };
    return table;
}

Rational parse_rational(const std::string &text)
{
    const auto slash = text.find('/');
    std::size_t used = 0;
    const Int num = std::stoll(text.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? text.size() : slash)) {
        throw std::invalid_argument("bad rational");
    }
    if (slash == std::string::npos) {
        return Rational(num);
    }
    const std::string den_text = text.substr(slash + 1);
    const Int den = std::stoll(den_text, &used);
    if (used != den_text.size() || den <= 0) {
        throw std::invalid_argument("bad rational");
    }
    return Rational(num, den);
}

std::vector<VerificationReport> run_identity(const std::string &name, std::optional<Int> k, Int n)
{
    std::vector<VerificationReport> out;
    const std::vector<Int> ks = k ? std::vector<Int>{*k} : std::vector<Int>{0, 1, 2};
    auto append = [&out](std::vector<VerificationReport> rs) { out.insert(out.end(), rs.begin(), rs.end()); };
    if (name == "lemma") {
        out.push_back(check_lemma_symmetries(n));
    } else if (name == "aliases") {
        out.push_back(check_specialization_aliases(n));
    } else if (name == "oracle") {
        append(check_oracles(n));
    } else if (name == "thm1") {
        for (Int kk : ks) {
            out.push_back(check_theorem1(kk, n));
        }
    } else if (name == "acubed") {
        out.push_back(check_a_cubed(n));
    } else if (name == "cor1") {
        append(check_corollary1(n));
    } else if (name == "thm2") {
        for (Int kk : ks) {
            out.push_back(check_theorem2(kk, n));
        }
    } else if (name == "acubed2") {
        out.push_back(check_a_cubed2(n));
    } else if (name == "cor2") {
        append(check_corollary2(n));
    } else if (name == "hgb") {
        append(check_hgb_special_cases(n));
    } else if (name == "cosets") {
        for (bool restrict_V : {false, true}) {
            for (Int kk : ks) {
                append(check_coset_series(kk, n, restrict_V));
            }
        }
    } else {
        throw CLI::ValidationError("--identity", "unknown identity '" + name + "'");
    }
    return out;
}

int verdict(const std::vector<VerificationReport> &reports)
{
    int code = kExitOk;
    for (const auto &r : reports) {
        if (!r.asserted) {
            continue;
        }
        if (r.status == Status::contract_error) {
            return kExitUsage;
        }
        if (r.status == Status::fail) {
            code = kExitFailed;
        }
    }
    return code;
}

std::string render_reports(const std::vector<VerificationReport> &reports, const std::string &format)
{
    if (format == "csv") {
        return reports_to_csv(reports);
    }
    return to_json(reports).dump(2) + "\n";
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact verification of three-variable cubic theta series identities", "theta"};
    app.require_subcommand(1);
    RunConfig cfg;

    const std::vector<std::string> formats{"json", "csv"};
    auto add_output = [&](CLI::App *sub) {
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(formats));
        sub->add_option("--out", cfg.out_path, "Write to this file instead of standard output");
    };
    auto add_order = [&](CLI::App *sub) {
        sub->add_option("--order", cfg.order, "q-truncation order N")->check(CLI::NonNegativeNumber);
    };

    CLI::App *dump = app.add_subcommand("dump", "Print a theta series");
    dump->add_option("--series", cfg.series, "a, b0, b1, b2, c0, c1, c2, a1var, b1var or c1var")->required();
    add_order(dump);
    add_output(dump);

    CLI::App *verify = app.add_subcommand("verify", "Verify identities");
    verify->add_flag("--all", cfg.all, "Run every check (default when --identity is absent)");
    verify->add_option("--identity", cfg.identity,
                       "lemma, aliases, oracle, thm1, acubed, cor1, thm2, acubed2, cor2, hgb or cosets");
    verify->add_option("--k", cfg.k, "Shift k (reduced mod 3); all of 0, 1, 2 when absent");
    add_order(verify);
    add_output(verify);

    CLI::App *coset = app.add_subcommand("coset", "Run the coset lattice sweeps");
    coset->add_option("--bound", cfg.bound, "Triple norm bound, an integer or p/q");
    add_output(coset);

    CLI::App *oracle = app.add_subcommand("oracle", "Compare the lattice builders with the double-sum oracles");
    add_order(oracle);
    add_output(oracle);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    std::string text;
    int code = kExitOk;
    try {
        if (dump->parsed()) {
            const auto &table = series_table();
            const auto it = table.find(cfg.series);
            if (it == table.end()) {
                err << "theta: unknown series '" << cfg.series << "'\n";
                return kExitUsage;
            }
            const TriSeries s = it->second(cfg.order);
            text = cfg.format == "csv" ? ts_serialize_csv(s) : ts_serialize(s) + "\n";
        } else {
            std::vector<VerificationReport> reports;
            if (verify->parsed()) {
                if (cfg.all && !cfg.identity.empty()) {
                    err << "theta: --all and --identity are mutually exclusive\n";
                    return kExitUsage;
                }
                reports = cfg.identity.empty() ? run_all(cfg.order) : run_identity(cfg.identity, cfg.k, cfg.order);
            } else if (coset->parsed()) {
                Rational bound;
                try {
                    bound = parse_rational(cfg.bound);
                } catch (const std::exception &) {
                    err << "theta: --bound expects an integer or p/q, got '" << cfg.bound << "'\n";
                    return kExitUsage;
                }
                if (bound < 0) {
                    err << "theta: --bound must be nonnegative\n";
                    return kExitUsage;
                }
                reports = run_coset_sweeps(bound);
            } else {
                reports = check_oracles(cfg.order);
            }
            text = render_reports(reports, cfg.format);
            code = verdict(reports);
        }
    } catch (const CLI::ValidationError &e) {
        err << "theta: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error &e) {
        err << "theta: " << e.what() << "\n";
        return kExitUsage;
    }

    if (cfg.out_path.empty()) {
        out << text;
    } else {
        std::ofstream file(cfg.out_path, std::ios::binary);
        if (!file || !(file << text)) {
            err << "theta: cannot write '" << cfg.out_path << "'\n";
            return kExitUsage;
        }
    }
    return code;
}

} // namespace eistheta
