#include "cosets/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cosets/codes.hpp"
#include "cosets/errors.hpp"
#include "cosets/experiments.hpp"
#include "cosets/fourier.hpp"
#include "cosets/macwilliams.hpp"

namespace cosets::cli {

namespace {

using nlohmann::json;

struct FamilyOptions {
    std::string family;
    unsigned r = 0;
    unsigned t = 0;
    std::size_t n = 0;
    std::size_t k = 0;
    std::uint64_t seed = 0;
    std::string input_path;  // read a serialized code instead
};

void add_family_flags(CLI::App* cmd, FamilyOptions& opt) {
    cmd->add_option("--family", opt.family,
                    "simplex|hamming|bch|ext-hadamard|ext-dual-bch|random");
    cmd->add_option("--r", opt.r, "extension degree (simplex/hamming/bch families)");
    cmd->add_option("--t", opt.t, "designed error count t (bch families)");
    cmd->add_option("--n", opt.n, "block length (random family)");
    cmd->add_option("--k", opt.k, "dimension (random family)");
    cmd->add_option("--seed", opt.seed, "seed (random family)");
    cmd->add_option("--in", opt.input_path, "read a code in text format instead of --family");
}

LinearCode build_code(const FamilyOptions& opt) {
    if (!opt.input_path.empty()) {
        std::ifstream in(opt.input_path);
        if (!in) throw std::invalid_argument("cannot open code file: " + opt.input_path);
        return LinearCode::from_text(in);
    }
    if (opt.family == "simplex") return simplex_code(opt.r);
    if (opt.family == "hamming") return hamming_code(opt.r);
    if (opt.family == "bch") return bch_code(opt.t, opt.r);
    if (opt.family == "ext-hadamard") return extended_bilateral_code(hamming_code(opt.r));
    if (opt.family == "ext-dual-bch") return extended_bilateral_code(bch_code(opt.t, opt.r));
    if (opt.family == "random") return random_linear_code(opt.n, opt.k, opt.seed);
    throw CLI::ValidationError("--family", "unknown family '" + opt.family + "'");
}

std::string describe(const FamilyOptions& opt) {
    if (!opt.input_path.empty()) return "file:" + opt.input_path;
    std::ostringstream s;
    s << opt.family;
    if (opt.r) s << " r=" << opt.r;
    if (opt.t) s << " t=" << opt.t;
    if (opt.family == "random")
        s << " n=" << opt.n << " k=" << opt.k << " seed=" << opt.seed;
    return s.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write to " + path);
    out << content;
}

json run_config_json(const FamilyOptions& opt, const std::string& subcommand) {
    json j;
    j["subcommand"] = subcommand;
    if (!opt.input_path.empty())
        j["input"] = opt.input_path;
    else
        j["family"] = opt.family;
    if (opt.r) j["r"] = opt.r;
    if (opt.t) j["t"] = opt.t;
    if (opt.family == "random") {
        j["n"] = opt.n;
        j["k"] = opt.k;
        j["seed"] = opt.seed;
    }
    return j;
}

// verify-bounds: feasibility + objective bounds of the constructed h over
// a c-grid, the LP sandwich on small instances, and the spectrum-side
// mean-square bound for the code. Throws verification_error on the first
// violated inequality.
json verify_bounds(const LinearCode& Q, std::size_t grid, bool with_lp) {
    const std::size_t n = Q.length();
    const WeightDistribution spectrum = weight_distribution(Q);
    WeightEnumerator dual = macwilliams_transform(
        WeightEnumerator::from_distribution(spectrum), BigInt(1) << Q.dimension());
    const BilateralProfile profile = bilateral_profile(dual);
    if (profile.d_bilateral < 3)
        throw std::invalid_argument("code has dual bilateral distance " +
                                    std::to_string(profile.d_bilateral) +
                                    " < 3; no bounds to verify");
    const unsigned t = static_cast<unsigned>((profile.d_bilateral - 1) / 2);
    const unsigned d = 2 * t + 1;
    const BoundSet bounds = theorem_bounds(n, t);

    json points = json::array();
    for (std::size_t i = 0; i < grid; ++i) {
        const double c = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(grid - 1);
        json point;
        point["c"] = c;
        for (HVariant variant : {HVariant::PartA, HVariant::PartB}) {
            const HPolynomial h = construct_h(n, t, c, variant);
            const auto [feasible, slack] = check_h_feasibility(h, c, n);
            const double objective = expected_under_binomial(h, n);
            const double bound = variant == HVariant::PartA ? bounds.mse_small : bounds.mse_large;
            const char* key = variant == HVariant::PartA ? "partA" : "partB";
            point[key] = {{"case",
                           h.h_case == HCase::TaylorPos   ? "taylor_pos"
                           : h.h_case == HCase::TaylorNeg ? "taylor_neg"
                                                          : "central"},
                          {"feasible", feasible},
                          {"worstSlack", slack},
                          {"eBinH", objective},
                          {"bound", bound}};
            if (!feasible)
                throw verification_error("constructed h infeasible at c=" + std::to_string(c));
            if (objective > bound + 1e-12)
                throw verification_error("E_Bin h exceeds its bound at c=" + std::to_string(c));
        }
        const double mse = mse_rhs(spectrum, c);
        point["mse"] = mse;
        if (mse > std::min(bounds.mse_small, bounds.mse_large) + 1e-12)
            throw verification_error("mean-square value exceeds the bound at c=" +
                                     std::to_string(c));
        if (with_lp && n <= 64) {
            const LPResult lp = solve_dual_lp(n, d, c);
            if (lp.status == LpStatus::Optimal) {
                point["lpValue"] = lp.value;
                if (mse > lp.value + 1e-7)
                    throw verification_error("LP value below the spectrum mean square at c=" +
                                             std::to_string(c));
            }
        }
        points.push_back(point);
    }

    json j;
    j["n"] = n;
    j["t"] = t;
    j["d_bilateral_dual"] = profile.d_bilateral;
    j["boundA"] = bounds.mse_small;
    j["boundB"] = bounds.mse_large;
    j["linf_certificate"] = linf_certificate(spectrum, std::max<std::size_t>(64, grid));
    j["grid"] = points;
    return j;
}

json mse_identity(const LinearCode& Q, std::size_t grid, int threads) {
    const WeightDistribution spectrum = weight_distribution(Q);
    json points = json::array();
    double worst = 0;
    for (std::size_t i = 0; i < grid; ++i) {
        const double c = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(grid - 1);
        const double rhs = mse_rhs(spectrum, c);
        const double lhs = mse_lhs_exhaustive(Q, c, threads);
        worst = std::max(worst, std::abs(lhs - rhs));
        points.push_back({{"c", c}, {"lhs", lhs}, {"rhs", rhs}});
        if (std::abs(lhs - rhs) > 1e-9)
            throw verification_error("mean-square identity violated at c=" + std::to_string(c) +
                                     ": |lhs-rhs| = " + std::to_string(std::abs(lhs - rhs)));
    }
    json j;
    j["n"] = Q.length();
    j["k"] = Q.dimension();
    j["max_abs_difference"] = worst;
    j["grid"] = points;
    return j;
}

}  // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"coset-spectra: exact weight spectra of binary linear codes and their cosets,\n"
                 "dual enumerators, and closed-form / LP bound verification"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    int threads = 1;
    app.add_option("--threads", threads, "worker cap; results are identical for any value")
        ->capture_default_str();

    FamilyOptions fam;
    std::string out_path;
    std::uint64_t budget = kEnumerationBudget;

    auto* construct = app.add_subcommand("construct", "emit a code in text format");
    add_family_flags(construct, fam);
    construct->add_option("-o,--out", out_path, "output path (default stdout)");

    auto* spectrum_cmd = app.add_subcommand("spectrum", "exact weight distribution as CSV");
    add_family_flags(spectrum_cmd, fam);
    std::string shift_bits;
    spectrum_cmd->add_option("--shift", shift_bits, "translate by this 0/1 word first");
    spectrum_cmd->add_option("--budget", budget, "enumeration budget (codewords)");
    spectrum_cmd->add_option("-o,--out", out_path, "output path (default stdout)");

    auto* mac = app.add_subcommand("macwilliams", "dual weight enumerator and bilateral profile");
    add_family_flags(mac, fam);
    mac->add_option("-o,--out", out_path, "output path (default stdout)");

    auto* coset = app.add_subcommand("coset-avg", "average coset distance to the binomial");
    add_family_flags(coset, fam);
    std::string mode_name = "exact";
    std::uint64_t samples = 10000, mc_seed = 1;
    std::string per_coset_path;
    coset->add_option("--mode", mode_name, "exact|mc")->capture_default_str();
    coset->add_option("--samples", samples, "Monte Carlo samples")->capture_default_str();
    coset->add_option("--mc-seed", mc_seed, "Monte Carlo seed")->capture_default_str();
    coset->add_option("--dump-per-coset", per_coset_path, "write per-coset metrics CSV here");
    coset->add_option("-o,--out", out_path, "output path (default stdout)");

    auto* verify = app.add_subcommand("verify-bounds", "check construction feasibility and bounds");
    add_family_flags(verify, fam);
    std::size_t grid = 201;
    bool no_lp = false;
    verify->add_option("--grid", grid, "number of c grid points")->capture_default_str();
    verify->add_flag("--no-lp", no_lp, "skip the LP sandwich");
    verify->add_option("-o,--out", out_path, "output path (default stdout)");

    auto* mse = app.add_subcommand("mse-identity", "exhaustive vs spectrum-side mean square error");
    add_family_flags(mse, fam);
    std::size_t mse_grid = 65;
    mse->add_option("--grid", mse_grid, "number of c grid points")->capture_default_str();
    mse->add_option("-o,--out", out_path, "output path (default stdout)");

    auto* ensemble = app.add_subcommand("ensemble", "random-ensemble mean squared L2 distance");
    std::size_t ens_n = 20;
    std::uint64_t ens_N = 1024, trials = 300, exp_seed = 1;
    ensemble->add_option("--n", ens_n, "block length")->capture_default_str();
    ensemble->add_option("--N", ens_N, "code size (power of 2)")->capture_default_str();
    ensemble->add_option("--trials", trials, "number of random codes")->capture_default_str();
    ensemble->add_option("--seed", exp_seed, "seed")->capture_default_str();
    ensemble->add_option("-o,--out", out_path, "output path (default stdout)");

    auto* gv = app.add_subcommand("gv-check", "fraction of random codes with good dual distance");
    std::size_t gv_n = 64;
    double gv_c = 3.0;
    std::uint64_t gv_trials = 50, gv_seed = 1;
    gv->add_option("--n", gv_n, "block length")->capture_default_str();
    gv->add_option("--c", gv_c, "size exponent: codes of size ~ n^c")->capture_default_str();
    gv->add_option("--trials", gv_trials, "number of random codes")->capture_default_str();
    gv->add_option("--seed", gv_seed, "seed")->capture_default_str();
    gv->add_option("-o,--out", out_path, "output path (default stdout)");

    app.failure_message(CLI::FailureMessage::help);
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (construct->parsed()) {
            write_output(out_path, build_code(fam).to_text());
        } else if (spectrum_cmd->parsed()) {
            const LinearCode code = build_code(fam);
            std::optional<BitVector> shift;
            if (!shift_bits.empty()) shift = BitVector::from_string(shift_bits);
            write_output(out_path, weight_distribution(code, shift, budget).to_csv());
        } else if (mac->parsed()) {
            const LinearCode code = build_code(fam);
            const WeightDistribution spec = weight_distribution(code);
            WeightEnumerator dual = macwilliams_transform(
                WeightEnumerator::from_distribution(spec), BigInt(1) << code.dimension());
            json j = run_config_json(fam, "macwilliams");
            j["n"] = code.length();
            j["k"] = code.dimension();
            json a = json::array();
            for (const auto& v : dual.A) a.push_back(v.str());
            j["dual_enumerator"] = a;
            j["dual_profile"] = json::parse(bilateral_profile(dual).to_json());
            write_output(out_path, j.dump(2));
        } else if (coset->parsed()) {
            const LinearCode code = build_code(fam);
            CosetAverageMode mode;
            mode.monte_carlo = mode_name == "mc";
            if (!mode.monte_carlo && mode_name != "exact")
                throw CLI::ValidationError("--mode", "must be exact or mc");
            mode.samples = samples;
            mode.seed = mc_seed;
            mode.threads = threads;
            CosetAverageReport report = coset_average(code, mode, !per_coset_path.empty());
            report.code_descriptor = describe(fam);
            if (!per_coset_path.empty()) {
                std::ostringstream csv;
                csv << "index,l1,linf,l2sq\n";
                for (std::size_t i = 0; i < report.per_coset.size(); ++i)
                    csv << i << ',' << report.per_coset[i].l1 << ',' << report.per_coset[i].linf
                        << ',' << report.per_coset[i].l2sq << '\n';
                write_output(per_coset_path, csv.str());
                report.per_coset.clear();
            }
            json j = json::parse(report.to_json());
            j["config"] = run_config_json(fam, "coset-avg");
            j["config"]["mode"] = mode_name;
            j["config"]["threads"] = threads;
            if (mode.monte_carlo) {
                j["config"]["samples"] = samples;
                j["config"]["mc_seed"] = mc_seed;
            }
            write_output(out_path, j.dump(2));
        } else if (verify->parsed()) {
            json j = verify_bounds(build_code(fam), grid, !no_lp);
            j["config"] = run_config_json(fam, "verify-bounds");
            j["config"]["grid"] = grid;
            write_output(out_path, j.dump(2));
        } else if (mse->parsed()) {
            json j = mse_identity(build_code(fam), mse_grid, threads);
            j["config"] = run_config_json(fam, "mse-identity");
            j["config"]["grid"] = mse_grid;
            write_output(out_path, j.dump(2));
        } else if (ensemble->parsed()) {
            GammaReport report = ensemble_gamma(ens_n, ens_N, trials, exp_seed, threads);
            json j = json::parse(report.to_json());
            j["config"] = {{"subcommand", "ensemble"}, {"n", ens_n},       {"N", ens_N},
                           {"trials", trials},         {"seed", exp_seed}, {"threads", threads}};
            write_output(out_path, j.dump(2));
        } else if (gv->parsed()) {
            const double fraction = gv_fraction(gv_n, gv_c, gv_trials, gv_seed, threads);
            json j;
            j["fraction"] = fraction;
            j["required_distance"] =
                gv_c <= 1.0 ? 0 : static_cast<std::size_t>(std::ceil(gv_c)) - 1;
            j["config"] = {{"subcommand", "gv-check"}, {"n", gv_n},        {"c", gv_c},
                           {"trials", gv_trials},      {"seed", gv_seed},  {"threads", threads}};
            write_output(out_path, j.dump(2));
        }
    } catch (const verification_error& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

int run(int argc, char** argv) {
    std::vector<std::string> args;
    args.reserve(static_cast<std::size_t>(argc) - 1);
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args);
}

}  // namespace cosets::cli
