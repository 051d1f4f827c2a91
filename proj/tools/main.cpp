// Command-line surface for the exact substitution-tiling workbench.
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tilecoh/report.hpp"

using namespace tilecoh;

namespace {

// Exit codes: 0 success, 2 malformed input, 3 non-primitive substitution,
// 4 internal invariant failure, 5 patch is not a legal factor.
constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitNonPrimitive = 3;
constexpr int kExitInternal = 4;
constexpr int kExitIllegalPatch = 5;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file '" + path + "'", 0, 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Substitution load_substitution(const std::string& path) {
    return parse_substitution(read_file(path));
}

// A patch is either whitespace-separated letter names or, for single-character
// alphabets, a plain string of letters ("aababb").
Word parse_patch(const Substitution& s, const std::string& text) {
    std::istringstream ss(text);
    std::vector<std::string> tokens;
    for (std::string t; ss >> t;) tokens.push_back(t);
    if (tokens.empty()) throw parse_error("empty patch", 0, 0);
    Word w;
    if (tokens.size() == 1 && s.letter(tokens[0]) < 0) {
        for (char c : tokens[0]) {
            int l = s.letter(std::string(1, c));
            if (l < 0)
                throw parse_error("unknown letter '" + std::string(1, c) + "'",
                                  0, 0);
            w.push_back(l);
        }
        return w;
    }
    for (const auto& t : tokens) {
        int l = s.letter(t);
        if (l < 0) throw parse_error("unknown letter '" + t + "'", 0, 0);
        w.push_back(l);
    }
    return w;
}

bool is_legal_factor(const Substitution& s, const Word& w) {
    auto f = factors(s, static_cast<int>(w.size()));
    return f.count(w) > 0;
}

void require_primitive(const Substitution& s) {
    if (!is_primitive(s).primitive)
        throw error("substitution is not primitive");  // mapped to exit 3
}

struct NotPrimitive {};

void emit(const json& j, const std::string& out_path) {
    std::string text = j.dump(2);
    text.push_back('\n');
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        out << text;
    }
}

IntPoly parse_coeff_list(const std::string& text) {
    std::vector<Int> coeffs;
    std::string item;
    std::istringstream ss(text);
    while (std::getline(ss, item, ',')) coeffs.push_back(Int(item));
    return IntPoly(std::move(coeffs));
}

json substitution_json(const Substitution& s) {
    json out;
    out["alphabet"] = s.alphabet;
    json rules = json::object();
    for (int l = 0; l < s.size(); ++l)
        rules[s.alphabet[l]] = s.word_str(s.rules[l]);
    out["rules"] = rules;
    out["matrix"] = matrix_json(substitution_matrix(s));
    out["proper"] = is_proper(s);
    PrimitivityResult pr = is_primitive(s);
    out["primitive"] = pr.primitive;
    if (pr.primitive) out["primitivity_witness_power"] = pr.witness_power;
    switch (periodicity_screen(s)) {
        case PeriodicityVerdict::periodic: out["periodicity"] = "periodic"; break;
        case PeriodicityVerdict::aperiodic_evidence:
            out["periodicity"] = "aperiodic-evidence";
            break;
        default: out["periodicity"] = "inconclusive";
    }
    return out;
}

struct CommonFlags {
    std::string out;
    std::uint64_t seed = 20240817;
    int collar_radius = 1;
    int max_patch_len = 3;
    int samples = 2000;
    std::string return_length;  // comma-separated integer coefficients in lambda
};

AlgebraicNumber resolve_return_length(const CommonFlags& flags,
                                      const Substitution& s,
                                      const PerronData& pd) {
    if (flags.return_length.empty()) return default_return_length(s, pd);
    IntPoly p = parse_coeff_list(flags.return_length);
    AlgebraicNumber l = AlgebraicNumber::eval_poly(
        p, AlgebraicNumber::generator(pd.field));
    if (l.sgn() <= 0) throw parse_error("return length must be positive", 0, 0);
    return l;
}

SampleConfig sample_config(const CommonFlags& flags) {
    SampleConfig cfg;
    cfg.seed = flags.seed;
    cfg.num_windows = flags.samples;
    cfg.min_word_len = 200000;
    cfg.max_window_len = 20000;
    return cfg;
}

int cmd_analyze(const std::string& path, const CommonFlags& flags) {
    Substitution s = load_substitution(path);
    require_primitive(s);
    int radius = std::max(flags.collar_radius, flags.max_patch_len);
    CohomologyPresentation pres = make_presentation(s, radius);
    const PerronData& pd = pres.perron;
    auto cf = collared_frequencies(pres.bs, pd);
    AlgebraicNumber l_def = resolve_return_length(flags, s, pd);

    json rep;
    rep["command"] = "analyze";
    rep["seed"] = flags.seed;
    rep["substitution"] = substitution_json(s);
    rep["perron"] = perron_json(s, pd);
    rep["cohomology"] = cohomology_json(pres);

    json regularity;
    ControlPatchSet controls = find_control_patches(pres, radius);
    json control_list = json::array();
    for (const auto& p : controls.patches)
        control_list.push_back(word_json(s, p));
    regularity["controls"] = control_list;
    json certs = json::array();
    for (const auto& p : controls.patches) {
        RatVector c = solve_coefficients(p, controls, pres);
        certs.push_back(certificate_json(
            s, verify_certificate(p, c, controls, s, sample_config(flags),
                                  2 * radius)));
    }
    regularity["certificates"] = certs;
    rep["regularity"] = regularity;

    json freq = json::array();
    for (int len = 1; len <= flags.max_patch_len; ++len) {
        for (const auto& p : factors(s, len)) {
            json entry;
            entry["patch"] = word_json(s, p);
            AlgebraicNumber f = patch_frequency(p, pres.bs, cf);
            entry["frequency"] = algebraic_json(f);
            if (pres.witness) {
                entry["closed_form"] = frequency_form_json(
                    frequency_decompose(f, l_def, pres.witness->d, pd.q));
            }
            freq.push_back(entry);
        }
    }
    rep["frequencies"] = freq;
    rep["convergence"] = json::array();  // populated by the convergence command
    emit(rep, flags.out);
    return kExitOk;
}

int cmd_regularity(const std::string& path, const std::string& patch_text,
                   const std::vector<std::string>& control_texts,
                   const CommonFlags& flags) {
    Substitution s = load_substitution(path);
    require_primitive(s);
    Word patch = parse_patch(s, patch_text);
    if (!is_legal_factor(s, patch)) {
        std::cerr << "error: patch '" << s.word_str(patch)
                  << "' is not a legal factor\n";
        return kExitIllegalPatch;
    }
    int radius = std::max<int>(flags.collar_radius,
                               static_cast<int>(patch.size()));
    std::vector<Word> control_words;
    for (const auto& t : control_texts) {
        Word c = parse_patch(s, t);
        if (!is_legal_factor(s, c)) {
            std::cerr << "error: control '" << s.word_str(c)
                      << "' is not a legal factor\n";
            return kExitIllegalPatch;
        }
        radius = std::max<int>(radius, static_cast<int>(c.size()));
        control_words.push_back(std::move(c));
    }
    CohomologyPresentation pres = make_presentation(s, radius);
    ControlPatchSet controls = control_words.empty()
                                   ? find_control_patches(pres, radius)
                                   : make_control_set(pres, control_words);
    RatVector c = solve_coefficients(patch, controls, pres);
    RegularityCertificate cert = verify_certificate(
        patch, c, controls, s, sample_config(flags), 2 * radius);
    SupertileReport sup = exact_on_supertiles(patch, c, controls, s, 3, 5, 3);

    json rep;
    rep["command"] = "regularity";
    rep["seed"] = flags.seed;
    rep["patch"] = word_json(s, patch);
    json control_list = json::array();
    for (const auto& p : controls.patches)
        control_list.push_back(word_json(s, p));
    rep["controls"] = control_list;
    rep["coefficients"] = ratvec_json(c);
    rep["certificate"] = certificate_json(s, cert);
    rep["exact_on_supertiles"] = sup.all_zero;
    rep["supertile_violations"] = sup.violations;
    emit(rep, flags.out);
    return kExitOk;
}

bool matrix_primitive(const IntMatrix& m) {
    int n = m.rows();
    IntMatrix p = IntMatrix::identity(n);
    int bound = (n - 1) * (n - 1) + 1;
    for (int i = 0; i < bound; ++i) {
        p = p * m;
        if (p.all_positive()) return true;
    }
    return false;
}

int cmd_matrix_mode(const std::string& path, int dim, const std::string& q_text,
                    const std::string& r_text, const std::string& out) {
    json input = json::parse(read_file(path));
    if (!input.contains("matrix"))
        throw parse_error("matrix JSON must contain a \"matrix\" key", 0, 0);
    auto rows = input["matrix"];
    int n = static_cast<int>(rows.size());
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw parse_error("matrix is not square", 0, 0);
        for (int j = 0; j < n; ++j) {
            long long v = rows[i][j].get<long long>();
            if (v < 0) throw parse_error("matrix entries must be nonnegative", 0, 0);
            m.at(i, j) = v;
        }
    }
    if (input.contains("dim")) dim = input["dim"].get<int>();

    json rep;
    rep["command"] = "matrix-mode";
    rep["matrix"] = matrix_json(m);
    rep["dim"] = dim;
    bool prim = matrix_primitive(m);
    rep["primitive"] = prim;
    if (prim) {
        PerronRoot root = perron_root(m);
        rep["lambda"] = algebraic_json(root.lambda);
        rep["lambda_minpoly"] = poly_json(root.q);
        IntPoly cp = charpoly(m);
        rep["charpoly"] = poly_json(cp);
        RatInterval l2 = second_modulus_interval(cp, root.field->root_interval());
        rep["second_modulus_interval"] =
            json::array({rat_json(l2.lo), rat_json(l2.hi)});
        double lam = root.lambda.approx();
        double mid = (to_double(l2.lo) + to_double(l2.hi)) / 2;
        double gamma = mid <= 1e-12
                           ? 1.0 / dim
                           : std::min(1.0 / dim,
                                      1.0 - std::log(mid) / std::log(lam));
        {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.15g", gamma);
            rep["gamma"] = buf;
        }
        // Normalized PF eigenvectors (entries sum to one).
        auto norm = [&](std::vector<AlgebraicNumber> v) {
            AlgebraicNumber total = AlgebraicNumber::zero(root.field);
            for (const auto& e : v) total = total + e;
            json out_v = json::array();
            for (auto& e : v) out_v.push_back(algebraic_json(e / total));
            return out_v;
        };
        rep["right_eigenvector"] = norm(eigenvector_for(m, root.lambda));
        rep["left_eigenvector"] =
            norm(eigenvector_for(m.transpose(), root.lambda));
    }
    if (!q_text.empty() && !r_text.empty()) {
        IntPoly q = parse_coeff_list(q_text);
        IntPoly r = parse_coeff_list(r_text);
        rep["resultant"] = int_json(resultant(q, r));
        BezoutWitness wit = reduced_resultant(q, r);
        rep["reduced_resultant"] = int_json(wit.d);
        rep["bezout_q"] = poly_json(wit.q_mul);
        rep["bezout_r"] = poly_json(wit.r_mul);
    }
    emit(rep, out);
    return kExitOk;
}

int cmd_convergence(const std::string& path, const std::string& patch_text,
                    const std::vector<double>& scales, const std::string& csv,
                    const CommonFlags& flags) {
    Substitution s = load_substitution(path);
    require_primitive(s);
    Word patch = parse_patch(s, patch_text);
    if (!is_legal_factor(s, patch)) {
        std::cerr << "error: patch '" << s.word_str(patch)
                  << "' is not a legal factor\n";
        return kExitIllegalPatch;
    }
    if (scales.size() < 8) {
        std::cerr << "error: need at least 8 window scales\n";
        return kExitParse;
    }
    PerronData pd = perron_data(s);
    BlockSystem bs = collar(s, static_cast<int>(patch.size()));
    auto cf = collared_frequencies(bs, pd);
    AlgebraicNumber f = patch_frequency(patch, bs, cf);
    ConvergenceReport conv =
        convergence_experiment(patch, s, pd, f, scales, flags.seed);

    json rep;
    rep["command"] = "convergence";
    rep["frequency"] = algebraic_json(f);
    rep["report"] = convergence_json(s, conv);
    emit(rep, flags.out);
    if (!csv.empty()) {
        std::ofstream out(csv);
        out << "V,sup_deviation\n";
        char buf[80];
        for (size_t i = 0; i < conv.sizes.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.15g,%.15g\n", conv.sizes[i],
                          conv.deviations[i]);
            out << buf;
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic workbench for one-dimensional substitution "
                 "tiling spaces"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string spec_path, patch_text, csv_path, q_text, r_text;
    std::vector<std::string> control_texts;
    std::vector<double> scales;
    int dim = 1;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", flags.out, "Write the JSON report here");
        cmd->add_option("--seed", flags.seed, "RNG seed (recorded in output)");
        cmd->add_option("--collar-radius", flags.collar_radius,
                        "Collar radius for the cell complex");
        cmd->add_option("--max-patch-len", flags.max_patch_len,
                        "Longest patch to tabulate");
        cmd->add_option("--return-length", flags.return_length,
                        "Return length L as comma-separated integer "
                        "coefficients in the stretching factor");
        cmd->add_option("--samples", flags.samples,
                        "Random windows per certificate");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "Full pipeline report");
    analyze->add_option("spec", spec_path, "Substitution rule file")->required();
    add_common(analyze);

    CLI::App* regularity =
        app.add_subcommand("regularity", "Exact regularity certificate");
    regularity->add_option("spec", spec_path)->required();
    regularity->add_option("--patch", patch_text, "Patch to certify")->required();
    regularity->add_option("--controls", control_texts,
                           "Explicit control patches");
    add_common(regularity);

    CLI::App* matrix =
        app.add_subcommand("matrix-mode", "Matrix-only Perron analysis");
    matrix->add_option("matrix", spec_path, "JSON file {\"matrix\":[[...]]}")
        ->required();
    matrix->add_option("--dim", dim, "Spatial dimension for gamma");
    matrix->add_option("--q", q_text, "Polynomial q, comma-separated coefficients");
    matrix->add_option("--r", r_text, "Polynomial r, comma-separated coefficients");
    matrix->add_option("--out", flags.out, "Write the JSON report here");

    CLI::App* convergence =
        app.add_subcommand("convergence", "Empirical frequency convergence");
    convergence->add_option("spec", spec_path)->required();
    convergence->add_option("--patch", patch_text)->required();
    convergence->add_option("--scales", scales, "Window volumes (at least 8)")
        ->required();
    convergence->add_option("--csv", csv_path, "Also write a CSV table here");
    add_common(convergence);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(spec_path, flags);
        if (regularity->parsed())
            return cmd_regularity(spec_path, patch_text, control_texts, flags);
        if (matrix->parsed())
            return cmd_matrix_mode(spec_path, dim, q_text, r_text, flags.out);
        if (convergence->parsed())
            return cmd_convergence(spec_path, patch_text, scales, csv_path,
                                   flags);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const error& e) {
        std::string msg = e.what();
        std::cerr << "error: " << msg << "\n";
        if (msg.find("not primitive") != std::string::npos)
            return kExitNonPrimitive;
        return kExitInternal;
    }
    return kExitParse;
}
