#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "glws/harish_chandra.hpp"
#include "glws/json_io.hpp"
#include "glws/sign_function.hpp"
#include "glws/uea.hpp"
#include "glws/weight_system.hpp"

namespace {

using namespace glws;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitParseError = 2;
constexpr int kExitInternalError = 3;

struct MnPair {
    int m = 0;
    int n = 0;
};

MnPair parse_mn(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("expected M,N but got '" + text + "'");
    MnPair out;
    try {
        out.m = std::stoi(text.substr(0, comma));
        out.n = std::stoi(text.substr(comma + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("expected M,N but got '" + text + "'");
    }
    if (out.m < 0 || out.n < 0) throw std::invalid_argument("signature must be nonnegative");
    return out;
}

std::vector<Permutation> symmetric_group(int k) {
    std::vector<int> images(k);
    for (int i = 0; i < k; ++i) images[i] = i;
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_images0(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

int cmd_eval(const std::string& perm_text, const std::string& diagram_text,
             std::optional<int> declared_k, std::optional<MnPair> mn, const std::string& format,
             const std::string& cache_path) {
    GlWeightSystem w;
    if (!cache_path.empty()) w.load_cache(cache_path);

    Polynomial value;
    if (!perm_text.empty()) {
        value = w.evaluate(parse_permutation(perm_text, declared_k));
    } else {
        value = w.evaluate(parse_chord_diagram(diagram_text));
    }
    if (mn) value = substitute_c0(value, Rational(mn->m - mn->n));

    if (format == "json")
        std::cout << polynomial_to_json(value).dump() << "\n";
    else
        std::cout << value.to_string() << "\n";

    if (!cache_path.empty()) w.append_cache(cache_path);
    return kExitOk;
}

int cmd_table(int k_max, const std::string& format, const std::string& cache_path) {
    GlWeightSystem w;
    if (!cache_path.empty()) w.load_cache(cache_path);

    Json rows = Json::array();
    for (int k = 1; k <= k_max; ++k) {
        for (const Permutation& sigma : symmetric_group(k)) {
            SignFunction f = SignFunction::of(sigma);
            Polynomial value = w.evaluate(sigma);
            if (format == "json") {
                rows.push_back(Json{{"k", k},
                                    {"sigma", sigma.images()},
                                    {"cycles", sigma.to_cycle_string()},
                                    {"sign", sign_function_to_json(f)},
                                    {"value", value.to_string()},
                                    {"value_terms", polynomial_to_json(value)}});
            } else {
                std::cout << k << "\t" << sigma.to_cycle_string() << "\t" << f.to_string()
                          << "\t" << value.to_string() << "\n";
            }
        }
    }
    if (format == "json") std::cout << rows.dump() << "\n";

    if (!cache_path.empty()) w.append_cache(cache_path);
    return kExitOk;
}

int cmd_oracle(int k_max, const std::vector<std::string>& mn_texts, long budget,
               const std::string& cache_path) {
    std::vector<MnPair> signatures;
    for (const auto& t : mn_texts) signatures.push_back(parse_mn(t));
    if (signatures.empty()) signatures = {{1, 1}, {2, 1}};

    GlWeightSystem w;
    if (!cache_path.empty()) w.load_cache(cache_path);

    long passed = 0, failed = 0, skipped = 0;
    for (const MnPair& mn : signatures) {
        CasimirEvaluator evaluator(GlSignature{mn.m, mn.n});
        for (int k = 0; k <= k_max; ++k) {
            for (const Permutation& sigma : symmetric_group(k)) {
                std::string label = "k=" + std::to_string(k) + " [" +
                                    sigma.to_one_line_string() + "] gl(" +
                                    std::to_string(mn.m) + "|" + std::to_string(mn.n) + ")";
                try {
                    UEAElement direct = brute_force_weight(sigma, GlSignature{mn.m, mn.n}, budget);
                    UEAElement via_recurrence = evaluator.evaluate(w.evaluate(sigma));
                    if (direct == via_recurrence) {
                        ++passed;
                        std::cout << "PASS " << label << "\n";
                    } else {
                        ++failed;
                        std::cout << "FAIL " << label << "\n";
                    }
                } catch (const BudgetExceeded& e) {
                    ++skipped;
                    std::cout << "SKIP " << label << " (" << e.what() << ")\n";
                }
            }
        }
    }
    std::cout << "oracle summary: " << passed << " passed, " << failed << " failed, " << skipped
              << " skipped\n";
    if (!cache_path.empty()) w.append_cache(cache_path);
    return failed == 0 ? kExitOk : kExitFailure;
}

int cmd_hc(const MnPair& mn, int order, const std::string& format) {
    const auto shifts = hc_shifts(mn.m, mn.n);
    const auto images = casimir_hc_images(mn.m, mn.n, order);

    if (format == "json") {
        Json out;
        out["m"] = mn.m;
        out["n"] = mn.n;
        Json shift_json = Json::array();
        for (const auto& r : shifts) shift_json.push_back(rational_to_string(r));
        out["shifts"] = shift_json;
        Json phis = Json::array();
        for (int k = 0; k <= order; ++k)
            phis.push_back(Json{{"k", k},
                                {"phi", images[k].to_string(x_name)},
                                {"supersymmetric", is_supersymmetric(images[k], mn.m, mn.n)}});
        out["casimir_images"] = phis;
        if (mn.m == 1 && mn.n == 1) {
            Json higher = Json::array();
            for (int k = 1; k <= order; ++k)
                higher.push_back(
                    Json{{"k", k}, {"in_c1_c2", gl11_casimir_in_c1_c2(k).to_string()}});
            out["gl11_casimirs_in_c1_c2"] = higher;
        }
        std::cout << out.dump() << "\n";
        return kExitOk;
    }

    std::cout << "gl(" << mn.m << "|" << mn.n << ") shifts r = [";
    for (std::size_t i = 0; i < shifts.size(); ++i)
        std::cout << (i ? ", " : "") << rational_to_string(shifts[i]);
    std::cout << "]\n";
    std::cout << "series: " << casimir_generating_series(mn.m, mn.n, order).to_string() << "\n";
    for (int k = 0; k <= order; ++k) {
        std::cout << "phi(C" << k << ") = " << images[k].to_string(x_name)
                  << (is_supersymmetric(images[k], mn.m, mn.n) ? "  [supersymmetric]"
                                                               : "  [NOT supersymmetric]")
                  << "\n";
    }
    if (mn.m == 1 && mn.n == 1) {
        for (int k = 1; k <= order; ++k)
            std::cout << "C" << k << " = " << gl11_casimir_in_c1_c2(k).to_string() << "\n";
    }
    return kExitOk;
}

int cmd_cache_info(const std::string& cache_path, int validate) {
    GlWeightSystem w;
    std::size_t loaded = w.load_cache(cache_path);
    std::ifstream in(cache_path);
    int max_k = 0;
    std::vector<std::vector<int>> keys;
    std::string line;
    while (in && std::getline(in, line)) {
        if (line.empty()) continue;
        Json record = Json::parse(line);
        auto key = record.at("key").get<std::vector<int>>();
        max_k = std::max(max_k, static_cast<int>(key.size()));
        keys.push_back(std::move(key));
    }
    std::cout << "cache " << cache_path << ": " << keys.size() << " records, " << loaded
              << " distinct, max k = " << max_k << "\n";

    if (validate > 0 && !keys.empty()) {
        GlWeightSystem fresh;
        int checked = 0, bad = 0;
        std::size_t step = std::max<std::size_t>(1, keys.size() / validate);
        for (std::size_t i = 0; i < keys.size() && checked < validate; i += step) {
            Permutation sigma = Permutation::from_images(keys[i]);
            Polynomial cached = w.evaluate(sigma);  // served from the loaded cache
            Polynomial recomputed = fresh.evaluate(sigma);
            ++checked;
            if (cached != recomputed) {
                ++bad;
                std::cout << "MISMATCH [" << sigma.to_one_line_string() << "]\n";
            }
        }
        std::cout << "validated " << checked << " entries, " << bad << " mismatches\n";
        if (bad > 0) return kExitFailure;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"universal GL weight system on permutations and chord diagrams"};
    app.require_subcommand(1);

    std::string perm_text, diagram_text, format = "text", cache_path, mn_text;
    int k_max = 4, order = 8, validate = 0, declared_k_value = 0;
    long budget = kDefaultBruteForceBudget;
    std::vector<std::string> mn_texts;

    auto* eval = app.add_subcommand("eval", "evaluate the weight system");
    auto* eval_perm = eval->add_option("--perm", perm_text, "permutation, cycle or one-line");
    auto* eval_diagram = eval->add_option("--diagram", diagram_text, "chord diagram [[1,2],...]");
    eval_perm->excludes(eval_diagram);
    auto* k_opt = eval->add_option("--k", declared_k_value, "ground set size for cycle input");
    eval->add_option("--mn", mn_text, "substitute m-n for C0");
    eval->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    eval->add_option("--cache", cache_path, "memo cache file");

    auto* table = app.add_subcommand("table", "values and sign functions for all of S_k");
    table->add_option("--kmax", k_max, "largest k")->check(CLI::Range(0, 6));
    table->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    table->add_option("--cache", cache_path, "memo cache file");

    auto* oracle = app.add_subcommand("oracle", "compare the recurrence against U(gl(m|n))");
    oracle->add_option("--kmax", k_max, "largest k")->check(CLI::Range(0, 6));
    oracle->add_option("--mn", mn_texts, "signature M,N (repeatable)");
    oracle->add_option("--budget", budget, "largest allowed (m+n)^k")->check(CLI::PositiveNumber);
    oracle->add_option("--cache", cache_path, "memo cache file");

    auto* hc = app.add_subcommand("hc", "Harish-Chandra images of the Casimir elements");
    hc->add_option("--mn", mn_text, "signature M,N")->required();
    hc->add_option("--order", order, "largest Casimir index")->check(CLI::Range(0, 16));
    hc->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

    auto* cache_info = app.add_subcommand("cache-info", "inspect a memo cache file");
    cache_info->add_option("--cache", cache_path, "memo cache file")->required();
    cache_info->add_option("--validate", validate, "recompute this many entries");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParseError;
    }

    try {
        std::optional<int> declared_k;
        if (*k_opt) declared_k = declared_k_value;
        if (eval->parsed()) {
            if (perm_text.empty() && diagram_text.empty()) {
                std::cerr << "eval needs --perm or --diagram\n";
                return kExitParseError;
            }
            std::optional<MnPair> mn;
            if (!mn_text.empty()) mn = parse_mn(mn_text);
            return cmd_eval(perm_text, diagram_text, declared_k, mn, format, cache_path);
        }
        if (table->parsed()) return cmd_table(k_max, format, cache_path);
        if (oracle->parsed()) return cmd_oracle(k_max, mn_texts, budget, cache_path);
        if (hc->parsed()) return cmd_hc(parse_mn(mn_text), order, format);
        if (cache_info->parsed()) return cmd_cache_info(cache_path, validate);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const glws::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternalError;
    }
    return kExitOk;
}
