// lrlab: Landau-Ramanujan constants for tau(n) divisibility and sums of two squares.

#include <cmath>
#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lrlab/lrlab.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace lrlab;

enum class Format { text, json, csv };

struct RunConfig {
    std::uint64_t prime_limit = 10'000'000;
    std::vector<double> hf_checkpoints{1e5, 1e6};
    double em_depth = 1.0;
    unsigned threads = 0;
    Format format = Format::text;
};

constexpr int kExitParse = 2;
constexpr int kExitCompute = 3;

json budget_json(const RealBudget& b) { return {{"value", rounded_number(b.value)}, {"budget", rounded_number(b.budget, 3)}}; }

json budget_json(const ComplexBudget& z) {
    return {{"re", rounded_number(z.value.real())},
            {"im", rounded_number(z.value.imag())},
            {"budget", rounded_number(z.budget, 3)}};
}

std::string checkpoint_label(double x) {
    const double e = std::log10(x);
    if (e == std::round(e)) return "1e" + std::to_string(static_cast<int>(e));
    return format_number(x);
}

json report_json(const ConstantReport& r) {
    json j;
    j["case"] = to_string(r.tag);
    j["tau"] = r.tau.str();
    j["delta"] = r.delta.str();
    j["B_f"] = budget_json(r.B_f);
    j["C2"] = budget_json(r.C2);
    j["C2_ramanujan"] = r.C2_ramanujan.str();
    json h = json::object();
    for (const auto& [x, v] : r.h_checkpoints) h[checkpoint_label(static_cast<double>(x))] = budget_json(v);
    j["H_f"] = h;
    j["first_order"] = r.first_order ? budget_json(*r.first_order) : json(nullptr);
    j["verdict"] = to_string(r.verdict);
    if (r.discrepancy) j["discrepancy"] = *r.discrepancy;
    return j;
}

void print_report_text(std::ostream& out, const ConstantReport& r) {
    out << "case          " << to_string(r.tag) << '\n';
    out << "tau           " << r.tau.str() << '\n';
    for (const auto& [x, v] : r.h_checkpoints)
        out << "H_f(" << checkpoint_label(static_cast<double>(x)) << ")     " << format_budget(v) << '\n';
    out << "B_f           " << format_budget(r.B_f) << '\n';
    out << "C2            " << format_budget(r.C2) << '\n';
    out << "C2_ramanujan  " << r.C2_ramanujan.str() << '\n';
    if (r.first_order) out << "first_order   " << format_budget(*r.first_order) << '\n';
    out << "verdict       " << to_string(r.verdict) << '\n';
    if (r.discrepancy) out << "note          " << *r.discrepancy << '\n';
}

void print_reports(std::ostream& out, const std::vector<ConstantReport>& rows, const RunConfig& cfg) {
    switch (cfg.format) {
    case Format::json: {
        json arr = json::array();
        for (const auto& r : rows) arr.push_back(report_json(r));
        out << json{{"rows", arr}}.dump(2) << '\n';
        break;
    }
    case Format::csv: {
        out << "case";
        for (double x : cfg.hf_checkpoints) out << ",H_" << checkpoint_label(x);
        out << ",B_f,B_f_budget,C2,C2_ramanujan,verdict\n";
        for (const auto& r : rows) {
            out << to_string(r.tag);
            for (double x : cfg.hf_checkpoints)
                out << ',' << format_number(r.h_checkpoints.at(static_cast<std::uint64_t>(x)).value);
            out << ',' << format_number(r.B_f.value) << ',' << format_number(r.B_f.budget, 3) << ','
                << format_number(r.C2.value) << ',' << r.C2_ramanujan.str() << ',' << to_string(r.verdict) << '\n';
        }
        break;
    }
    case Format::text:
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i) out << '\n';
            print_report_text(out, rows[i]);
        }
        break;
    }
}

void print_value(std::ostream& out, const RunConfig& cfg, const std::string& label, const json& fields,
                 const std::string& text_value, const std::vector<std::pair<std::string, std::string>>& csv) {
    switch (cfg.format) {
    case Format::json: out << fields.dump(2) << '\n'; break;
    case Format::csv: {
        std::string head, row;
        for (std::size_t i = 0; i < csv.size(); ++i) {
            head += (i ? "," : "") + csv[i].first;
            row += (i ? "," : "") + csv[i].second;
        }
        out << head << '\n' << row << '\n';
        break;
    }
    case Format::text: out << label << " = " << text_value << '\n'; break;
    }
}

int run_verify(Engine& engine, const std::string& which, const RunConfig& cfg) {
    const double cutoff = static_cast<double>(cfg.prime_limit);
    std::vector<CheckResult> checks;
    if (which == "all") {
        checks = verify_all(engine, cutoff);
    } else {
        checks = verify_case(engine, parse_case(which), cutoff);
    }
    bool all = true;
    for (const auto& c : checks) all = all && c.pass;
    if (cfg.format == Format::json) {
        json arr = json::array();
        for (const auto& c : checks) arr.push_back({{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        std::cout << json{{"checks", arr}, {"pass", all}}.dump(2) << '\n';
    } else if (cfg.format == Format::csv) {
        std::cout << "check,pass,detail\n";
        for (const auto& c : checks) std::cout << '"' << c.name << "\"," << (c.pass ? "PASS" : "FAIL") << ",\"" << c.detail << "\"\n";
    } else {
        for (const auto& c : checks) std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
        std::size_t failed = 0;
        for (const auto& c : checks) failed += !c.pass;
        std::cout << (all ? "ALL PASS" : "FAILED") << " (" << checks.size() - failed << '/' << checks.size() << ")\n";
    }
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Landau-Ramanujan constants for divisibility of Ramanujan's tau function"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--threads", cfg.threads, "Worker threads (0 = all cores)")->envname("LRLAB_THREADS");
    app.add_option("--prime-limit", cfg.prime_limit, "Prime enumeration limit and prime-sum cutoff")
        ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{4'000'000'000}));
    app.add_option("--em-depth", cfg.em_depth, "Euler-Maclaurin depth multiplier")->check(CLI::PositiveNumber);
    app.add_option("--hf-checkpoints", cfg.hf_checkpoints, "H_f evaluation points")->delimiter(',');

    std::vector<std::string> case_names;
    for (CaseTag t : kAllCases) case_names.push_back(to_string(t));

    auto* table = app.add_subcommand("table1", "Second-order constants for the six published cases");

    std::string case_name;
    auto* constant = app.add_subcommand("constant", "Report for one case");
    constant->add_option("--case", case_name, "Case tag")->required()->check(CLI::IsMember(case_names));

    std::uint32_t modulus = 0, residue = 0;
    std::int64_t index = 0;
    int derivative = 0;
    auto* lvalue = app.add_subcommand("lvalue", "L^(k)(1, chi) for chi(g) = exp(2 pi i j / phi(m))");
    lvalue->add_option("--modulus", modulus, "Modulus (4 or an odd prime)")->required();
    lvalue->add_option("--index", index, "Character index j")->required();
    lvalue->add_option("--derivative", derivative, "Derivative order k")->check(CLI::NonNegativeNumber);

    auto* gammak = app.add_subcommand("gammak", "Generalized Euler constant gamma_k(r, m)");
    gammak->add_option("--modulus", modulus, "Modulus m")->required()->check(CLI::PositiveNumber);
    gammak->add_option("--residue", residue, "Residue r (0 = multiples of m)")->required();
    gammak->add_option("--k", derivative, "Log power k")->check(CLI::NonNegativeNumber);

    double x = 0.0;
    auto* hf = app.add_subcommand("hf", "H_f(x) = sum_{n <= x} Lambda_f(n)/n - tau log x");
    hf->add_option("--case", case_name, "Case tag")->required()->check(CLI::IsMember(case_names));
    hf->add_option("--x", x, "Upper limit")->required();

    std::uint32_t limit = 0;
    std::optional<std::uint32_t> tau_modulus;
    auto* tau = app.add_subcommand("tau", "tau(n) exactly, or modulo q from the congruences");
    tau->add_option("--limit", limit, "Largest n")->required()->check(CLI::PositiveNumber);
    tau->add_option("--mod", tau_modulus, "Modulus q in {2,3,5,7,23,691}")->check(CLI::IsMember({2, 3, 5, 7, 23, 691}));

    std::uint64_t count_x = 0;
    auto* count = app.add_subcommand("count", "Number of n <= x with f(n) = 1");
    count->add_option("--case", case_name, "Case tag")->required()->check(CLI::IsMember(case_names));
    count->add_option("--x", count_x, "Upper limit")->required()->check(CLI::PositiveNumber);

    std::string verify_which = "all";
    auto* verify = app.add_subcommand("verify", "Check computed values against their targets");
    std::vector<std::string> verify_names = case_names;
    verify_names.push_back("all");
    verify->add_option("--case", verify_which, "Case tag or 'all'")->check(CLI::IsMember(verify_names));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kExitParse;
    }
    cfg.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;

    try {
        Engine engine({cfg.prime_limit, cfg.em_depth, cfg.threads});
        const double cutoff = static_cast<double>(cfg.prime_limit);

        if (*table) {
            print_reports(std::cout, table1(engine, cutoff, cfg.hf_checkpoints), cfg);
        } else if (*constant) {
            print_reports(std::cout, {second_order_constant(engine, parse_case(case_name), cutoff, cfg.hf_checkpoints)}, cfg);
        } else if (*lvalue) {
            if (!is_supported_character_modulus(modulus))
                throw InvalidArgument("lvalue: modulus must be 4 or an odd prime");
            const auto chi = generator_character(modulus, default_generator(modulus), index);
            const ComplexBudget v = engine.lseries().l_derivative(chi, derivative);
            json j{{"modulus", modulus}, {"generator", chi.generator()}, {"index", chi.index()}, {"derivative", derivative},
                   {"value", budget_json(v)}};
            print_value(std::cout, cfg, "L^(" + std::to_string(derivative) + ")(1, chi)", j, format_budget(v),
                        {{"modulus", std::to_string(modulus)},
                         {"index", std::to_string(chi.index())},
                         {"derivative", std::to_string(derivative)},
                         {"re", format_number(v.value.real())},
                         {"im", format_number(v.value.imag())},
                         {"budget", format_number(v.budget, 3)}});
        } else if (*gammak) {
            const RealBudget v = gamma_k(residue, modulus, derivative, cfg.em_depth);
            json j{{"modulus", modulus}, {"residue", residue}, {"k", derivative}, {"value", budget_json(v)}};
            print_value(std::cout, cfg, "gamma_" + std::to_string(derivative) + "(" + std::to_string(residue) + ", " +
                                            std::to_string(modulus) + ")",
                        j, format_budget(v),
                        {{"modulus", std::to_string(modulus)},
                         {"residue", std::to_string(residue)},
                         {"k", std::to_string(derivative)},
                         {"value", format_number(v.value)},
                         {"budget", format_number(v.budget, 3)}});
        } else if (*hf) {
            const RealBudget v = h_f(case_spec(parse_case(case_name)), x, engine.primes());
            json j{{"case", case_name}, {"x", x}, {"H_f", budget_json(v)}};
            print_value(std::cout, cfg, "H_f(" + format_number(x) + ")", j, format_budget(v),
                        {{"case", case_name},
                         {"x", format_number(x)},
                         {"H_f", format_number(v.value)},
                         {"budget", format_number(v.budget, 3)}});
        } else if (*tau) {
            std::vector<std::string> values(limit + 1);
            if (tau_modulus) {
                const auto t = tau_mod(*tau_modulus, limit);
                for (std::uint32_t n = 1; n <= limit; ++n) values[n] = std::to_string(t[n]);
            } else {
                const TauWindow t = tau_exact(limit);
                for (std::uint32_t n = 1; n <= limit; ++n) values[n] = t(n).str();
            }
            if (cfg.format == Format::json) {
                json arr = json::array();
                for (std::uint32_t n = 1; n <= limit; ++n) arr.push_back({{"n", n}, {"tau", values[n]}});
                json j{{"modulus", tau_modulus ? json(*tau_modulus) : json(nullptr)}, {"values", arr}};
                std::cout << j.dump(2) << '\n';
            } else {
                if (cfg.format == Format::csv) std::cout << "n,tau\n";
                const char sep = cfg.format == Format::csv ? ',' : ' ';
                for (std::uint32_t n = 1; n <= limit; ++n) std::cout << n << sep << values[n] << '\n';
            }
        } else if (*count) {
            const CaseSpec spec = case_spec(parse_case(case_name));
            std::uint64_t n = 0;
            if (spec.tag == CaseTag::q2) {
                n = odd_tau_count(count_x);
            } else {
                n = count_f(spec, count_x, sieve_primes(std::max<std::uint64_t>(count_x, 2)));
            }
            if (cfg.format == Format::text) {
                std::cout << n << '\n';
            } else {
                json j{{"case", case_name}, {"x", count_x}, {"count", n}};
                print_value(std::cout, cfg, "count", j, std::to_string(n),
                            {{"case", case_name}, {"x", std::to_string(count_x)}, {"count", std::to_string(n)}});
            }
        } else if (*verify) {
            return run_verify(engine, verify_which, cfg);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCompute;
    }
    return 0;
}
