#include <qident/bijection.hpp>
#include <qident/identities.hpp>
#include <qident/partition.hpp>
#include <qident/qbinom.hpp>
#include <qident/selftest.hpp>
#include <qident/zseries.hpp>

#include "CLI11.hpp"
#include "json.hpp"

#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using namespace qident;

IdentityName parse_identity(const std::string& name) {
    auto id = identity_from_string(name);
    if (!id) throw std::invalid_argument("unknown identity: " + name);
    return *id;
}

Mutation parse_mutation(const std::string& name) {
    if (name.empty()) return Mutation::None;
    if (name == "new3-shift") return Mutation::New3Shift;
    if (name == "theta-tie") return Mutation::ThetaTie;
    throw std::invalid_argument("unknown mutation: " + name);
}

int run_verify(const std::string& identity, const SweepRanges& ranges,
               const std::string& format, const std::string& mutate) {
    const IdentityName id = parse_identity(identity);
    const auto reports = verify_sweep(id, ranges, parse_mutation(mutate));

    long passed = 0;
    const VerificationReport* first_failure = nullptr;
    for (const auto& report : reports) {
        if (report.pass)
            ++passed;
        else if (first_failure == nullptr)
            first_failure = &report;
    }

    if (format == "plain") {
        for (const auto& report : reports)
            std::cout << to_string(report.identity) << " m=" << report.point.m
                      << " n=" << report.point.n << " a=" << report.point.a << " "
                      << (report.pass ? "PASS" : "FAIL") << " lhs=" << report.lhs
                      << " rhs=" << report.rhs << "\n";
        std::cout << passed << "/" << reports.size() << " points pass\n";
    } else if (format == "json") {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& report : reports) {
            nlohmann::ordered_json row;
            row["identity"] = to_string(report.identity);
            row["m"] = report.point.m;
            row["n"] = report.point.n;
            row["a"] = report.point.a;
            row["lhs"] = report.lhs;
            row["rhs"] = report.rhs;
            row["pass"] = report.pass;
            rows.push_back(std::move(row));
        }
        std::cout << rows.dump(2) << "\n";
    } else {
        std::cout << "identity,m,n,a,lhs,rhs,pass\n";
        for (const auto& report : reports)
            std::cout << to_string(report.identity) << "," << report.point.m << ","
                      << report.point.n << "," << report.point.a << ",\"" << report.lhs
                      << "\",\"" << report.rhs << "\"," << (report.pass ? "true" : "false")
                      << "\n";
    }

    if (first_failure != nullptr) {
        std::cerr << "first failing point: " << to_string(first_failure->identity)
                  << " m=" << first_failure->point.m << " n=" << first_failure->point.n
                  << " a=" << first_failure->point.a << "\n";
        return 1;
    }
    return 0;
}

int run_expand(const std::vector<int>& qbinom, int dilation, const std::string& series_name,
               int m, int order) {
    const bool wants_qbinom = !qbinom.empty();
    const bool wants_series = !series_name.empty();
    if (wants_qbinom == wants_series)
        throw std::invalid_argument("expand: choose exactly one of --qbinom or --series");

    if (wants_qbinom) {
        std::cout << gauss_binomial_dilated(qbinom[0], qbinom[1], dilation) << "\n";
        return 0;
    }

    if (order < 0) throw std::invalid_argument("expand: --series requires --order");
    struct SeriesEntry {
        const char* name;
        PochSpec spec;
        bool invert;
    };
    const SeriesEntry table[] = {
        {"poch-z", {1, 1, 1, 0}, false},          {"poch-neg-z", {-1, 1, 1, 0}, false},
        {"inv-poch-z", {1, 1, 1, 0}, true},       {"inv-poch-z2", {1, 2, 2, 0}, true},
        {"inv-poch-z4", {1, 4, 4, 0}, true},      {"inv-poch-neg-z2", {-1, 2, 2, 0}, true},
    };
    for (const auto& entry : table) {
        if (series_name != entry.name) continue;
        PochSpec spec = entry.spec;
        spec.count = m + 1;
        ZSeries series = ZSeries::pochhammer(spec, order);
        if (entry.invert) series = series.inverse();
        std::cout << series.str() << "\n";
        return 0;
    }
    throw std::invalid_argument("expand: unknown series name: " + series_name);
}

int run_census(const std::string& set_name, int m, int n, bool members, bool with_signed) {
    IntPoly weight;
    IntPoly signed_weight;
    long count = 0;

    if (set_name == "A") {
        if (with_signed)
            throw std::invalid_argument("census: signed weight needs a pair family");
        for (const Partition& member : set_A(m, n)) {
            if (members) std::cout << member << "\n";
            ++count;
            weight += IntPoly::monomial(1, member.weight());
        }
    } else {
        std::vector<PartitionPair> family;
        long stride = 2;
        if (set_name == "B")
            family = set_B(m, n);
        else if (set_name == "U")
            family = set_U(m, n);
        else if (set_name == "V")
            family = set_V(m, n);
        else if (set_name == "T") {
            family = set_T(m, n);
            stride = 4;
        } else
            throw std::invalid_argument("census: unknown set: " + set_name);
        for (const PartitionPair& member : family) {
            if (members) std::cout << member << "\n";
            ++count;
            const long exponent = stride * member.first.weight() + member.second.weight();
            weight += IntPoly::monomial(1, exponent);
            signed_weight += IntPoly::monomial(member.first.length() % 2 == 0 ? 1 : -1, exponent);
        }
    }

    std::cout << "count=" << count << "\n";
    std::cout << "weight=" << weight << "\n";
    if (with_signed) std::cout << "signed-weight=" << signed_weight << "\n";
    return 0;
}

int run_trace(const std::string& map_name, const std::string& input, bool arrow) {
    if (map_name == "phi") {
        const Partition lambda = Partition::parse(input);
        const PartitionPair image = phi(lambda);
        if (arrow)
            std::cout << lambda << " --phi--> " << image << "\n";
        else
            std::cout << image << "\n";
        return 0;
    }
    if (map_name == "phi-inverse") {
        const PartitionPair pair = PartitionPair::parse(input);
        const Partition image = phi_inverse(pair);
        if (arrow)
            std::cout << pair << " --phi-inverse--> " << image << "\n";
        else
            std::cout << image << "\n";
        return 0;
    }
    const PartitionPair pair = PartitionPair::parse(input);
    const auto [image, action] = theta(pair);
    if (arrow)
        std::cout << pair << " --theta[" << to_string(action.branch) << "," << action.pivot
                  << "]--> " << image << "\n";
    else
        std::cout << image << " branch=" << to_string(action.branch) << " pivot=" << action.pivot
                  << "\n";
    return 0;
}

int run_selftest(bool quick, const std::string& mutate, const char* argv0) {
    SelftestOptions options;
    options.quick = quick;
    options.mutation = parse_mutation(mutate);
    options.cli_path = argv0;
    const auto results = run_all_suites(options);
    long passed = 0;
    for (const auto& result : results) {
        if (result.pass) ++passed;
        std::cout << format_suite_line(result) << "\n";
    }
    std::cout << passed << "/" << results.size() << " suites pass\n";
    return passed == static_cast<long>(results.size()) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verifier for Gaussian-binomial identities"};
    app.require_subcommand(1);

    auto* verify_cmd =
        app.add_subcommand("verify", "sweep one identity over a parameter grid");
    std::string identity;
    SweepRanges ranges;
    std::string format = "plain";
    std::string verify_mutate;
    verify_cmd->add_option("--identity", identity, "identity name (see README)")->required();
    verify_cmd->add_option("--m-max", ranges.m_max)->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--n-max", ranges.n_max)->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--a-max", ranges.a_max)->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--order", ranges.order)->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--format", format)
        ->check(CLI::IsMember({"plain", "json", "csv"}));
    verify_cmd->add_option("--mutate", verify_mutate, "deliberately broken variant")
        ->check(CLI::IsMember({"new3-shift", "theta-tie"}));

    auto* expand_cmd = app.add_subcommand("expand", "print an exact expansion");
    std::vector<int> qbinom;
    int dilation = 1;
    std::string series_name;
    int expand_m = 0;
    int expand_order = -1;
    expand_cmd->add_option("--qbinom", qbinom, "upper and lower index")->expected(2);
    expand_cmd->add_option("--dilation", dilation, "substitute q^r for q")
        ->check(CLI::PositiveNumber);
    expand_cmd->add_option("--series", series_name, "named z-series");
    expand_cmd->add_option("--m", expand_m)->check(CLI::NonNegativeNumber);
    expand_cmd->add_option("--order", expand_order)->check(CLI::NonNegativeNumber);

    auto* census_cmd = app.add_subcommand("census", "enumerate a partition family");
    std::string set_name;
    int census_m = 0;
    int census_n = 0;
    bool members = false;
    bool with_signed = false;
    census_cmd->add_option("--set", set_name, "family name: A, B, U, V, or T")->required();
    census_cmd->add_option("--m", census_m)->required()->check(CLI::NonNegativeNumber);
    census_cmd->add_option("--n", census_n)->required()->check(CLI::NonNegativeNumber);
    census_cmd->add_flag("--members", members, "list every member");
    census_cmd->add_flag("--signed", with_signed, "also print the sign-weighted sum");

    auto* trace_cmd = app.add_subcommand("trace", "apply one combinatorial map");
    std::string map_name;
    std::string input;
    bool arrow = false;
    trace_cmd->add_option("--map", map_name)
        ->required()
        ->check(CLI::IsMember({"phi", "phi-inverse", "theta"}));
    trace_cmd->add_option("--input", input)->required();
    trace_cmd->add_flag("--arrow", arrow, "print input and output together");

    auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance suites");
    bool quick = false;
    std::string selftest_mutate;
    selftest_cmd->add_flag("--quick", quick, "smaller parameter ranges");
    selftest_cmd->add_option("--mutate", selftest_mutate, "deliberately broken variant")
        ->check(CLI::IsMember({"new3-shift", "theta-tie"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& error) {
        app.exit(error);
        return 2;
    }

    try {
        if (app.got_subcommand(verify_cmd))
            return run_verify(identity, ranges, format, verify_mutate);
        if (app.got_subcommand(expand_cmd))
            return run_expand(qbinom, dilation, series_name, expand_m, expand_order);
        if (app.got_subcommand(census_cmd))
            return run_census(set_name, census_m, census_n, members, with_signed);
        if (app.got_subcommand(trace_cmd)) return run_trace(map_name, input, arrow);
        if (app.got_subcommand(selftest_cmd))
            return run_selftest(quick, selftest_mutate, argv[0]);
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 2;
    }
    return 2;
}
