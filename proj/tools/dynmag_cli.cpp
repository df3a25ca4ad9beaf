#include <dynmag.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace dynmag;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { text, json, latex };

Style style_of(Format f) { return f == Format::latex ? Style::latex : Style::text; }

std::string render_lieperm(const LiePermutation& ip) {
    std::string out;
    for (const auto& b : ip.blocks()) {
        out += "(";
        for (std::size_t i = 0; i < b.size(); ++i) out += (i ? "," : "") + std::to_string(b[i]);
        out += ")";
    }
    return out.empty() ? "()" : out;
}

std::string cmd_mu(int n, const std::string& name, std::optional<int> pivot, Format fmt) {
    const auto c = parse_construction(name);
    if (!c) throw UsageError("unknown construction '" + name + "'");
    if (pivot && *c != Construction::dynkin) throw UsageError("--pivot applies to the dynkin construction only");
    if (pivot && (*pivot < 1 || *pivot > n)) throw UsageError("--pivot must lie in 1..n");
    const LiePolynomial value = pivot ? mu_dynkin(n, *pivot) : mu(n, *c);
    if (fmt == Format::json) return to_json(value).dump() + "\n";
    return render(value, style_of(fmt)) + "\n";
}

std::string cmd_coeffs(CoeffKind kind, int max, Format fmt) {
    const auto m = static_cast<std::size_t>(max);
    const CoeffSeries s = kind == CoeffKind::beta ? beta_coefficients(m)
                          : kind == CoeffKind::beta_tilde ? beta_tilde_coefficients(m)
                                                          : alpha_coefficients(m, m);
    if (fmt == Format::json) return to_json(s).dump() + "\n";
    return render(s, style_of(fmt));
}

std::string cmd_bch(int order, Format fmt) {
    const auto series = bch_series(order);
    const VariableNames names{"X", "Y"};
    if (fmt == Format::json) {
        Json out = Json::array();
        for (const auto& p : series) out.push_back(to_json(p));
        return out.dump() + "\n";
    }
    std::string out;
    for (const auto& p : series) out += render(p, style_of(fmt), names) + "\n";
    return out;
}

std::string cmd_pbw(int d, int k, Format fmt) {
    const auto alg = NilpotentAlgebra::free_nilpotent(d, k);
    if (fmt == Format::json) return structure_constants_json(alg).dump(2) + "\n";
    std::ostringstream os;
    const Style style = style_of(fmt);
    for (std::size_t i = 0; i < alg.dim(); ++i) os << "e" << i + 1 << " = " << render(alg.basis()[i], style) << "\n";
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t j = i + 1; j < alg.dim(); ++j) {
            const auto& v = alg.bracket(static_cast<int>(i), static_cast<int>(j));
            if (v.is_zero()) continue;
            SymTensor<int> as_sum;
            for (const auto& [idx, c] : v) as_sum.add({idx}, c);
            os << "[e" << i + 1 << ",e" << j + 1 << "] = "
               << render<int>(as_sum, style, [](const int& idx) { return "e" + std::to_string(idx + 1); }) << "\n";
        }
    return os.str();
}

std::string cmd_lieperm(int n, bool decompose, Format fmt) {
    if (!decompose) {
        const auto perms = enumerate_lie_permutations(n);
        if (fmt == Format::json) {
            Json out = Json::array();
            for (const auto& ip : perms) out.push_back(ip.blocks());
            return out.dump() + "\n";
        }
        std::string out;
        for (const auto& ip : perms) out += render_lieperm(ip) + "\n";
        return out;
    }
    const auto dec = decompose_word_rewriting(n);
    if (fmt == Format::json) {
        Json out = Json::array();
        for (const auto& [ip, c] : dec) out.push_back(Json{{"coeff", to_json(c)}, {"term", ip.blocks()}});
        return out.dump() + "\n";
    }
    std::string out;
    for (const auto& [ip, c] : dec) out += render_scalar(c, style_of(fmt)) + " " + render_lieperm(ip) + "\n";
    return out;
}

std::pair<std::string, bool> cmd_verify(const std::string& suite, const VerifyConfig& cfg, Format fmt) {
    std::vector<SuiteResult> results;
    if (suite == "all") {
        results = run_all_suites(cfg);
    } else if (auto r = run_suite(suite, cfg)) {
        results.push_back(std::move(*r));
    } else {
        throw UsageError("unknown suite '" + suite + "'");
    }
    bool pass = true;
    Json suites = Json::array();
    std::ostringstream text;
    for (const auto& s : results) {
        pass = pass && s.pass();
        Json reports = Json::array();
        for (const auto& r : s.reports) {
            reports.push_back(to_json(r));
            text << (r.pass ? "PASS " : "FAIL ") << s.suite << ": " << r.name << " (" << r.checked << " checked";
            if (r.witness) text << ", first failure " << *r.witness;
            text << ")\n";
        }
        suites.push_back(Json{{"suite", s.suite}, {"pass", s.pass()}, {"reports", reports}});
    }
    if (fmt == Format::json) return {Json{{"pass", pass}, {"suites", suites}}.dump(2) + "\n", pass};
    return {text.str(), pass};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dynkin-Magnus commutators, BCH coefficients and symmetric PBW checks"};
    app.require_subcommand(1);

    std::string format_name = "text";
    std::string output;
    const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"latex", Format::latex}};
    auto add_io = [&](CLI::App* sub, const std::string& default_format) {
        sub->add_option("--format", format_name, "text, json or latex")
            ->check(CLI::IsMember({"text", "json", "latex"}))
            ->default_str(default_format);
        sub->add_option("-o,--output", output, "write to this file instead of stdout");
    };

    int n = 0;
    std::string construction = "dynkin";
    std::optional<int> pivot;
    auto* mu_cmd = app.add_subcommand("mu", "print mu_n(X1,...,Xn)");
    mu_cmd->add_option("--n", n, "degree")->required()->check(CLI::PositiveNumber);
    mu_cmd->add_option("--construction", construction, "magnus-L, magnus-R, magnus-C, lieperm or dynkin")
        ->check(CLI::IsMember({"magnus-L", "magnus-R", "magnus-C", "lieperm", "dynkin"}));
    mu_cmd->add_option("--pivot", pivot, "pivot variable for the dynkin form");
    add_io(mu_cmd, "text");

    bool beta = false, beta_tilde = false, alpha = false;
    int max = 5;
    auto* coeffs_cmd = app.add_subcommand("coeffs", "print the beta, beta-tilde or alpha coefficients");
    auto* beta_flag = coeffs_cmd->add_flag("--beta", beta, "beta_0..beta_max");
    auto* tilde_flag = coeffs_cmd->add_flag("--beta-tilde", beta_tilde, "beta-tilde_0..beta-tilde_max");
    auto* alpha_flag = coeffs_cmd->add_flag("--alpha", alpha, "alpha_{s,r} for s,r <= max");
    beta_flag->excludes(tilde_flag)->excludes(alpha_flag);
    tilde_flag->excludes(alpha_flag);
    coeffs_cmd->add_option("--max", max, "largest index")->check(CLI::NonNegativeNumber);
    add_io(coeffs_cmd, "text");

    int order = 0;
    auto* bch_cmd = app.add_subcommand("bch", "print BCH_1..BCH_order in X, Y");
    bch_cmd->add_option("--order", order, "highest degree")->required()->check(CLI::PositiveNumber);
    add_io(bch_cmd, "text");

    VerifyConfig cfg;
    std::string suite = "all";
    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    verify_cmd->add_option("--suite", suite, "mu-identities, cross-construction, oracle, coshuffle, pbw, associativity, denominators or all")
        ->check(CLI::IsMember({"mu-identities", "cross-construction", "oracle", "coshuffle", "pbw", "associativity", "denominators", "all"}));
    verify_cmd->add_option("--max-n", cfg.max_n, "largest n for the mu suites")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--oracle-max", cfg.oracle_max, "largest n for the log-exp oracle")->check(CLI::Range(1, 5));
    verify_cmd->add_option("--d", cfg.d, "generators of the nilpotent algebra")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--k", cfg.k, "nilpotency of the algebra")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--degree", cfg.degree, "tensor degree for the PBW checks")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--assoc-degree", cfg.assoc_degree, "total degree of associativity triples")->check(CLI::Range(3, 64));
    verify_cmd->add_option("--denominators-k", cfg.denominators_k, "degree bound of the denominator audit")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seed", cfg.seed, "seed for randomized sweeps");
    verify_cmd->add_option("--cases", cfg.cases, "randomized cases")->check(CLI::PositiveNumber);
    add_io(verify_cmd, "json");

    int d = 2, k = 3;
    auto* pbw_cmd = app.add_subcommand("pbw", "export structure constants of the free nilpotent algebra");
    pbw_cmd->add_option("--d", d, "generators")->check(CLI::PositiveNumber);
    pbw_cmd->add_option("--k", k, "nilpotency")->check(CLI::PositiveNumber);
    add_io(pbw_cmd, "json");

    bool decompose = false;
    auto* lieperm_cmd = app.add_subcommand("lieperm", "enumerate Lie-permutations of 1..n");
    lieperm_cmd->add_option("--n", n, "size")->required()->check(CLI::NonNegativeNumber);
    lieperm_cmd->add_flag("--decompose", decompose, "expand X1...Xn over the Lie-permutation products");
    add_io(lieperm_cmd, "text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto* sub = app.get_subcommands().front();
    if (sub->count("--format") == 0) format_name = sub == verify_cmd || sub == pbw_cmd ? "json" : "text";
    const Format fmt = formats.at(format_name);

    std::string out;
    int status = 0;
    try {
        if (sub == mu_cmd) {
            out = cmd_mu(n, construction, pivot, fmt);
        } else if (sub == coeffs_cmd) {
            out = cmd_coeffs(alpha ? CoeffKind::alpha : beta_tilde ? CoeffKind::beta_tilde : CoeffKind::beta, max, fmt);
        } else if (sub == bch_cmd) {
            out = cmd_bch(order, fmt);
        } else if (sub == verify_cmd) {
            auto [text, pass] = cmd_verify(suite, cfg, fmt);
            out = std::move(text);
            status = pass ? 0 : 1;
        } else if (sub == pbw_cmd) {
            out = cmd_pbw(d, k, fmt);
        } else if (sub == lieperm_cmd) {
            out = cmd_lieperm(n, decompose, fmt);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (output.empty()) {
        std::cout << out;
    } else {
        std::ofstream file(output, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot write " << output << "\n";
            return 2;
        }
        file << out;
    }
    return status;
}
