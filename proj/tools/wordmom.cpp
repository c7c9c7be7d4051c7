// wordmom: exact and Monte Carlo calculator for Haar-unitary word moments.
//
// Subcommands: moment, mc, wg, engel, limit, check, chars.
// Exit codes: 0 success, 1 computational failure (term budget), 2 usage error.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wordmom/bounds.hpp"
#include "wordmom/characters.hpp"
#include "wordmom/checks.hpp"
#include "wordmom/config.hpp"
#include "wordmom/engel.hpp"
#include "wordmom/engine.hpp"
#include "wordmom/moments.hpp"
#include "wordmom/montecarlo.hpp"
#include "wordmom/weingarten.hpp"
#include "wordmom/word.hpp"

using json = nlohmann::ordered_json;
using namespace wordmom;

namespace {

struct GlobalOpts {
    double budget = 1e8;
    int threads = 0;
    std::uint64_t seed = 12345;
    std::string format = "json";
};

RunConfig make_config(const GlobalOpts& g) {
    RunConfig cfg;
    cfg.term_budget = g.budget;
    cfg.threads = g.threads;
    cfg.seed = g.seed;
    return cfg;
}

void add_global_flags(CLI::App* cmd, GlobalOpts& g) {
    cmd->add_option("--budget", g.budget, "Term budget for exact enumeration (>= 1e4)")
        ->check(CLI::Range(1e4, 1e18));
    cmd->add_option("--threads", g.threads,
                    "Worker threads (0 = WORDMOM_THREADS env or hardware)");
    cmd->add_option("--seed", g.seed, "Master RNG seed");
    cmd->add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "plain"}));
}

RepSelector parse_rep(const std::string& text) {
    auto colon = text.find(':');
    std::string kind = text.substr(0, colon);
    if (kind == "wedge" || kind == "sym") {
        if (colon == std::string::npos)
            throw CLI::ValidationError("--rep", "expected wedge:M or sym:M");
        int m = std::stoi(text.substr(colon + 1));
        if (m < 1) throw CLI::ValidationError("--rep", "M must be positive");
        return kind == "wedge" ? RepSelector::wedge(m) : RepSelector::sym(m);
    }
    if (kind == "lambda") {
        // lambda:[3,1,1]
        std::string body = text.substr(colon + 1);
        if (body.size() < 2 || body.front() != '[' || body.back() != ']')
            throw CLI::ValidationError("--rep", "expected lambda:[p1,p2,...]");
        std::vector<int> parts;
        std::string inner = body.substr(1, body.size() - 2);
        size_t pos = 0;
        while (pos < inner.size()) {
            size_t next = inner.find(',', pos);
            if (next == std::string::npos) next = inner.size();
            parts.push_back(std::stoi(inner.substr(pos, next - pos)));
            pos = next + 1;
        }
        return RepSelector::of(Partition(parts));
    }
    throw CLI::ValidationError("--rep", "expected wedge:M, sym:M, or lambda:[...]");
}

// Total engine term count behind a first/second moment request; mirrors the
// power-sum expansion the moments module performs.
double moment_term_count(const Word& w, const RepSelector& rep, int d, int order) {
    Word reduced = cyclic_reduce(w);
    auto expansion = power_sum_expansion(rep.to_partition());
    auto words_for = [&](const Partition& mu) {
        std::vector<Word> ws;
        for (int part : mu.parts()) ws.push_back(reduced.power(part));
        return ws;
    };
    double total = 0.0;
    if (order == 1) {
        for (const auto& [mu, coef] : expansion)
            total += build_problem(words_for(mu), d).term_count();
    } else {
        Word inv = reduced.inverse();
        for (const auto& [mu, cmu] : expansion)
            for (const auto& [mu2, cmu2] : expansion) {
                std::vector<Word> ws = words_for(mu);
                for (int part : mu2.parts()) ws.push_back(inv.power(part));
                total += build_problem(ws, d).term_count();
            }
    }
    return total;
}

Statistic mc_statistic_for(const RepSelector& rep, int order) {
    if (order == 1) {
        if (rep.kind == RepSelector::Wedge) return {Statistic::WedgeTrace, rep.m, {}};
        if (rep.kind == RepSelector::Sym) return {Statistic::SymTrace, rep.m, {}};
    } else {
        if (rep.kind == RepSelector::Wedge) return {Statistic::CmAbs2, rep.m, {}};
        if (rep.kind == RepSelector::Sym) return {Statistic::SymAbs2, rep.m, {}};
        return {Statistic::RhoAbs2, rep.to_partition().size(), rep.to_partition()};
    }
    throw CLI::ValidationError("--method",
                               "mc estimation of first moments supports wedge/sym only");
}

json mc_json(const EmpiricalMoment& em) {
    return json{{"mean", {em.mean.real(), em.mean.imag()}},
                {"stderr", em.stderr_},
                {"n", em.n}};
}

int cmd_moment(const GlobalOpts& g, const std::string& word_expr, const std::string& rep_text,
               int d, int order, const std::string& method, long long samples) {
    RunConfig cfg = make_config(g);
    Word w = parse_word(word_expr);
    if (w.empty()) throw CLI::ValidationError("--word", "word must be nontrivial");
    RepSelector rep = parse_rep(rep_text);
    json out;
    if (method == "exact" || method == "both") {
        auto start = std::chrono::steady_clock::now();
        Rational value = order == 1 ? first_moment(w, rep, d, cfg)
                                    : second_moment(w, rep, d, cfg);
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        out["value"] = to_string(value);
        out["terms"] = moment_term_count(w, rep, d, order);
        out["elapsed_ms"] = elapsed;
    }
    if (method == "mc" || method == "both") {
        Statistic stat = mc_statistic_for(rep, order);
        out["mc"] = mc_json(empirical_moment(w, stat, d, samples, g.seed, cfg));
    }
    if (g.format == "plain") {
        if (out.contains("value")) std::cout << "value " << out["value"].get<std::string>() << "\n";
        if (out.contains("mc"))
            std::cout << "mc_mean " << out["mc"]["mean"][0].get<double>() << " "
                      << out["mc"]["mean"][1].get<double>() << " stderr "
                      << out["mc"]["stderr"].get<double>() << "\n";
    } else {
        std::cout << out.dump() << "\n";
    }
    return 0;
}

int cmd_mc(const GlobalOpts& g, const std::string& word_expr, const std::string& stat_text,
           int d, long long samples) {
    RunConfig cfg = make_config(g);
    Word w = parse_word(word_expr);
    auto colon = stat_text.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("--stat", "expected cm:M, cm2:M, or sym2:M");
    std::string kind = stat_text.substr(0, colon);
    int m = std::stoi(stat_text.substr(colon + 1));
    if (m < 1) throw CLI::ValidationError("--stat", "M must be positive");
    Statistic stat;
    if (kind == "cm")
        stat = {Statistic::Cm, m, {}};
    else if (kind == "cm2")
        stat = {Statistic::CmAbs2, m, {}};
    else if (kind == "sym2")
        stat = {Statistic::SymAbs2, m, {}};
    else
        throw CLI::ValidationError("--stat", "expected cm:M, cm2:M, or sym2:M");
    EmpiricalMoment em = empirical_moment(w, stat, d, samples, g.seed, cfg);
    if (g.format == "plain")
        std::cout << "mean " << em.mean.real() << " " << em.mean.imag() << " stderr "
                  << em.stderr_ << " n " << em.n << "\n";
    else
        std::cout << mc_json(em).dump() << "\n";
    return 0;
}

int cmd_wg(const GlobalOpts& g, int n, int d) {
    const WeingartenTable& wg = WeingartenTable::get(n, d);
    if (g.format == "csv") {
        std::cout << "cycle_type,value\n";
        for (size_t i = 0; i < wg.cycle_types().size(); ++i)
            std::cout << "\"" << wg.cycle_types()[i].to_json() << "\","
                      << to_string(wg.value_at(static_cast<int>(i))) << "\n";
        return 0;
    }
    json values = json::object();
    for (size_t i = 0; i < wg.cycle_types().size(); ++i)
        values[wg.cycle_types()[i].to_json()] = to_string(wg.value_at(static_cast<int>(i)));
    std::cout << json{{"n", n}, {"d", d}, {"values", values}}.dump() << "\n";
    return 0;
}

int cmd_engel(const GlobalOpts& g, int m, int d, bool count_z) {
    RunConfig cfg = make_config(g);
    json out{{"m", m}, {"d", d}};
    if (count_z) {
        out["z_count"] = z_count(m, d, cfg).get_str();
        out["z_bound"] = z_bound(m, d).get_str();
    } else {
        Rational v = engel_direct(m, d, cfg);
        out["wedge_trace"] = to_string(v);           // E(tr wedge^m [[X,Y],Y])
        out["cm"] = to_string(m % 2 ? -v : v);       // E(c_m) = (-1)^m * trace
    }
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_limit(const GlobalOpts& g, int m, int p) {
    LimitPolynomial poly = limit_polynomial(m, p);
    if (g.format == "csv") {
        std::cout << "exponents,coefficient,radicand\n";
        for (const auto& t : poly.terms) {
            std::cout << "\"[";
            for (size_t j = 0; j < t.exponents.size(); ++j)
                std::cout << t.exponents[j] << (j + 1 < t.exponents.size() ? "," : "");
            std::cout << "]\"," << to_string(t.coefficient) << "," << t.radicand.get_str()
                      << "\n";
        }
        return 0;
    }
    json terms = json::array();
    for (const auto& t : poly.terms)
        terms.push_back(json{{"exponents", t.exponents},
                             {"coefficient", to_string(t.coefficient)},
                             {"radicand", t.radicand.get_str()}});
    std::cout << json{{"m", m}, {"p", p}, {"terms", terms}}.dump() << "\n";
    return 0;
}

int cmd_chars(const GlobalOpts& g, int n) {
    const CharacterTable& table = CharacterTable::get(n);
    const auto& parts = table.partitions();
    if (g.format == "json") {
        json rows = json::object();
        for (size_t i = 0; i < parts.size(); ++i) {
            json row = json::object();
            for (size_t j = 0; j < parts.size(); ++j)
                row[parts[j].to_json()] = table.value_at(static_cast<int>(i),
                                                         static_cast<int>(j));
            rows[parts[i].to_json()] = row;
        }
        std::cout << json{{"n", n}, {"table", rows}}.dump() << "\n";
        return 0;
    }
    // CSV (default for tabular output): rows lambda, columns mu.
    std::cout << "lambda";
    for (const auto& mu : parts) std::cout << ",\"" << mu.to_json() << "\"";
    std::cout << "\n";
    for (size_t i = 0; i < parts.size(); ++i) {
        std::cout << "\"" << parts[i].to_json() << "\"";
        for (size_t j = 0; j < parts.size(); ++j)
            std::cout << "," << table.value_at(static_cast<int>(i), static_cast<int>(j));
        std::cout << "\n";
    }
    return 0;
}

int cmd_check(const GlobalOpts& g, const std::string& suite) {
    RunConfig cfg = make_config(g);
    auto results = checks::run_suite(suite, cfg, &std::cerr);
    bool all_passed = true;
    if (g.format == "csv") {
        std::cout << "id,name,passed,cases_checked,cases_skipped\n";
        for (const auto& r : results) {
            std::cout << r.id << ",\"" << r.name << "\"," << (r.passed ? "pass" : "FAIL")
                      << "," << r.cases_checked << "," << r.cases_skipped << "\n";
            all_passed = all_passed && r.passed;
        }
    } else if (g.format == "json") {
        json arr = json::array();
        for (const auto& r : results) {
            arr.push_back(json{{"id", r.id},
                               {"name", r.name},
                               {"passed", r.passed},
                               {"cases_checked", r.cases_checked},
                               {"cases_skipped", r.cases_skipped},
                               {"details", r.details}});
            all_passed = all_passed && r.passed;
        }
        std::cout << arr.dump() << "\n";
    } else {
        for (const auto& r : results) {
            std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << ": "
                      << r.name << " (" << r.cases_checked << " cases, " << r.cases_skipped
                      << " skipped)\n";
            for (const auto& dline : r.details) std::cout << "  " << dline << "\n";
            all_passed = all_passed && r.passed;
        }
    }
    return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Haar-unitary word-moment calculator"};
    app.require_subcommand(1);
    GlobalOpts g;

    // moment
    std::string word_expr, rep_text = "wedge:1", method = "exact";
    int dim = 2, order = 2;
    long long samples = 100000;
    auto* moment = app.add_subcommand("moment", "Exact (or MC) moment of a word map");
    moment->add_option("--word", word_expr, "Word expression, e.g. \"[x,y]\"")->required();
    moment->add_option("--rep", rep_text, "wedge:M | sym:M | lambda:[p1,p2,...]");
    moment->add_option("--dim", dim, "Unitary group dimension d")->required()
        ->check(CLI::PositiveNumber);
    moment->add_option("--order", order, "1 = first moment, 2 = second moment")
        ->check(CLI::IsMember({1, 2}));
    moment->add_option("--method", method, "exact | mc | both")
        ->check(CLI::IsMember({"exact", "mc", "both"}));
    moment->add_option("--samples", samples, "MC sample count")->check(CLI::PositiveNumber);
    add_global_flags(moment, g);

    // mc
    std::string stat_text = "cm2:1";
    auto* mc = app.add_subcommand("mc", "Monte Carlo estimate of a spectral statistic");
    mc->add_option("--word", word_expr, "Word expression")->required();
    mc->add_option("--stat", stat_text, "cm:M | cm2:M | sym2:M");
    mc->add_option("--dim", dim, "Dimension d")->required()->check(CLI::PositiveNumber);
    mc->add_option("--samples", samples, "Sample count")->check(CLI::PositiveNumber);
    add_global_flags(mc, g);

    // wg
    int wg_n = 1;
    auto* wg = app.add_subcommand("wg", "Weingarten function table on S_n");
    wg->add_option("--n", wg_n, "Symmetric group degree")->required()
        ->check(CLI::PositiveNumber);
    wg->add_option("--dim", dim, "Dimension d")->required()->check(CLI::PositiveNumber);
    add_global_flags(wg, g);

    // engel
    int engel_m = 1;
    bool count_z = false;
    auto* engel = app.add_subcommand("engel", "Direct Engel-word pipeline");
    engel->add_option("--m", engel_m, "Exterior power order")->required()
        ->check(CLI::PositiveNumber);
    engel->add_option("--dim", dim, "Dimension d")->required()->check(CLI::PositiveNumber);
    engel->add_flag("--count-z", count_z, "Report |Z| and its bound instead of the moment");
    add_global_flags(engel, g);

    // limit
    int limit_m = 1, limit_p = 1;
    auto* limit = app.add_subcommand("limit", "Large-d limit polynomial of tr wedge^m");
    limit->add_option("--m", limit_m, "Exterior power order")->required()
        ->check(CLI::PositiveNumber);
    limit->add_option("--p", limit_p, "Maximal power p(w)")->required()
        ->check(CLI::PositiveNumber);
    add_global_flags(limit, g);

    // check
    std::string suite = "all";
    auto* check = app.add_subcommand("check", "Run the verification suites");
    check->add_option("--suite", suite, "all | bounds | 1..12");
    add_global_flags(check, g);

    // chars
    int chars_n = 1;
    auto* chars = app.add_subcommand("chars", "Character table of S_n (CSV by default)");
    chars->add_option("--n", chars_n, "Symmetric group degree")->required()
        ->check(CLI::Range(1, 10));
    add_global_flags(chars, g);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exit 0; any parse failure exits 2
    }

    try {
        if (moment->parsed())
            return cmd_moment(g, word_expr, rep_text, dim, order, method, samples);
        if (mc->parsed()) return cmd_mc(g, word_expr, stat_text, dim, samples);
        if (wg->parsed()) return cmd_wg(g, wg_n, dim);
        if (engel->parsed()) return cmd_engel(g, engel_m, dim, count_z);
        if (limit->parsed()) return cmd_limit(g, limit_m, limit_p);
        if (check->parsed()) return cmd_check(g, suite);
        if (chars->parsed()) {
            if (chars->count("--format") == 0) g.format = "csv";  // CSV is the chars default
            return cmd_chars(g, chars_n);
        }
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 1;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
