// infolab: finite-alphabet information-theory workbench.
//
// Subcommands: measure, types, fit, game, dpi. Exit codes: 0 success,
// 1 input error, 2 verification or convergence failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "infolab/dpi.hpp"
#include "infolab/errors.hpp"
#include "infolab/io.hpp"
#include "infolab/measures.hpp"
#include "infolab/mle.hpp"
#include "infolab/scoring.hpp"
#include "infolab/types_lab.hpp"

namespace {

using infolab::json;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitVerificationFailure = 2;

struct GlobalOptions {
    std::string base = "nats";
    std::uint64_t seed = 0;
    std::string output = "text"; // text | json | csv
    std::size_t cap = infolab::kDefaultEnumerationCap;

    infolab::LogBase log_base() const {
        return base == "bits" ? infolab::LogBase::bits : infolab::LogBase::nats;
    }
};

// JSON-safe number: infinities become the strings "inf" / "-inf".
json json_number(double v) {
    if (std::isinf(v)) return v > 0 ? json("inf") : json("-inf");
    return json(v);
}

std::string fixed6(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string full_precision(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------
// measure

int cmd_measure(const GlobalOptions& opts, const std::string& which,
                const std::vector<std::string>& files) {
    auto need_files = [&](std::size_t n) {
        if (files.size() != n)
            infolab::fail(infolab::ErrorCode::bad_input,
                          which + " expects " + std::to_string(n) + " input file(s)");
    };
    infolab::LogBase base = opts.log_base();
    double value = 0.0;
    bool infinite = false;

    if (which == "entropy") {
        need_files(1);
        value = infolab::entropy(infolab::read_distribution(files[0]), base);
    } else if (which == "kl") {
        need_files(2);
        auto d = infolab::kl_divergence(infolab::read_distribution(files[0]),
                                        infolab::read_distribution(files[1]), base);
        infinite = d.is_infinite();
        value = d.to_double();
    } else if (which == "mi") {
        need_files(1);
        value = infolab::mutual_information(infolab::read_joint(files[0]),
                                            infolab::MiMethod::definition, base);
    } else if (which == "cond_entropy") {
        need_files(1);
        value = infolab::conditional_entropy(infolab::read_joint(files[0]), base);
    } else if (which == "cond_mi") {
        need_files(1);
        value = infolab::conditional_mutual_information(infolab::read_triple(files[0]), base);
    } else {
        infolab::fail(infolab::ErrorCode::bad_input, "unknown measure '" + which + "'");
    }

    if (opts.output == "json") {
        json out;
        out["measure"] = which;
        out["base"] = opts.base;
        out["value"] = infinite ? json("inf") : json_number(value);
        emit_json(out);
    } else {
        std::cout << fixed6(infinite ? std::numeric_limits<double>::infinity() : value) << " "
                  << opts.base << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// types

int cmd_types(const GlobalOptions& opts, const std::string& q_file, std::int64_t n,
              const std::string& p_file, bool rate) {
    infolab::Distribution q = infolab::read_distribution(q_file);

    if (rate) {
        if (p_file.empty())
            infolab::fail(infolab::ErrorCode::bad_input, "--rate needs --p <distribution file>");
        infolab::Distribution p = infolab::read_distribution(p_file);
        std::vector<std::int64_t> ns = {n, 10 * n, 100 * n};
        auto rows = infolab::surprise_rate_convergence(p, q, ns, opts.cap);
        bool ok = true;
        for (const auto& r : rows)
            if (!(std::abs(r.rate - r.type_divergence) <= r.gap_bound + 1e-9)) ok = false;

        if (opts.output == "json") {
            json out;
            out["command"] = "types_rate";
            out["rows"] = json::array();
            for (const auto& r : rows) {
                json row;
                row["n"] = r.n;
                row["rate"] = json_number(r.rate);
                row["type_divergence"] = json_number(r.type_divergence);
                row["target_divergence"] = json_number(r.target_divergence);
                row["gap_bound"] = json_number(r.gap_bound);
                out["rows"].push_back(std::move(row));
            }
            out["all_within_bound"] = ok;
            emit_json(out);
        } else if (opts.output == "csv") {
            std::cout << "n,rate,type_divergence,target_divergence,gap_bound\n";
            for (const auto& r : rows)
                std::cout << r.n << "," << full_precision(r.rate) << ","
                          << full_precision(r.type_divergence) << ","
                          << full_precision(r.target_divergence) << ","
                          << full_precision(r.gap_bound) << "\n";
        } else {
            std::cout << "      n        rate   d(type,q)      d(p,q)   gap bound\n";
            for (const auto& r : rows)
                std::printf("%7lld %11s %11s %11s %11s\n", static_cast<long long>(r.n),
                            fixed6(r.rate).c_str(), fixed6(r.type_divergence).c_str(),
                            fixed6(r.target_divergence).c_str(), fixed6(r.gap_bound).c_str());
        }
        return ok ? kExitOk : kExitVerificationFailure;
    }

    if (opts.output == "csv") {
        std::cout << "type_counts,exact_log_prob,lower,upper,holds\n";
        bool all_hold = true;
        infolab::for_each_type(n, q.alphabet(), opts.cap, [&](const infolab::EmpiricalType& t) {
            auto r = infolab::chernoff_sandwich(t, q);
            all_hold = all_hold && r.holds;
            std::string counts;
            for (std::size_t i = 0; i < r.counts.size(); ++i) {
                if (i) counts += '|';
                counts += std::to_string(r.counts[i]);
            }
            std::cout << counts << "," << full_precision(r.exact_log_prob) << ","
                      << full_precision(r.lower_log_bound) << ","
                      << full_precision(r.upper_log_bound) << "," << (r.holds ? "1" : "0")
                      << "\n";
        });
        return all_hold ? kExitOk : kExitVerificationFailure;
    }

    auto summary = infolab::verify_chernoff(n, q, opts.cap);
    if (opts.output == "json") {
        json out;
        out["command"] = "types";
        out["n"] = summary.n;
        out["alphabet_size"] = summary.alphabet_size;
        out["types_checked"] = summary.types_checked;
        out["types_holding"] = summary.types_holding;
        out["all_hold"] = summary.all_hold;
        out["max_slack"] = json_number(summary.max_slack);
        out["total_probability"] = json_number(summary.total_probability);
        emit_json(out);
    } else {
        std::cout << summary.types_checked << " types checked, "
                  << (summary.all_hold ? "all bounds hold"
                                       : std::to_string(summary.types_checked -
                                                        summary.types_holding) +
                                             " violations")
                  << "\n";
        std::cout << "max slack " << fixed6(summary.max_slack) << ", total probability "
                  << fixed6(summary.total_probability) << "\n";
    }
    return summary.all_hold ? kExitOk : kExitVerificationFailure;
}

// ---------------------------------------------------------------------------
// fit

json fit_result_to_json(const infolab::ParametricFamily& family, const infolab::FitResult& r) {
    json out;
    out["mode"] = infolab::fit_mode_name(r.mode);
    out["theta_star"] = r.theta_star;
    out["objective_value"] = json_number(r.objective_value);
    out["iterations"] = r.iterations;
    out["converged"] = r.converged;
    out["fitted_distribution"] = infolab::to_json(family.evaluate(r.theta_star));
    return out;
}

int cmd_fit(const GlobalOptions& opts, const std::string& family_name,
            const std::string& data_file, const std::string& mode_str) {
    auto samples = infolab::read_samples(data_file);
    if (samples.empty()) infolab::fail(infolab::ErrorCode::empty_sample, "data file is empty");

    // Alphabet = sorted distinct labels in the file.
    std::set<std::string> labels(samples.begin(), samples.end());
    infolab::Alphabet alphabet(std::vector<std::string>(labels.begin(), labels.end()));

    if (family_name != "categorical" && family_name != "tilt")
        infolab::fail(infolab::ErrorCode::bad_input,
                      "unknown family '" + family_name + "' (try categorical or tilt)");
    infolab::ParametricFamily family = family_name == "categorical"
                                           ? infolab::categorical_family(alphabet)
                                           : infolab::exponential_tilt_family(alphabet);

    std::vector<infolab::FitResult> results;
    if (mode_str == "both" || mode_str == "max_likelihood")
        results.push_back(infolab::fit(family, samples, infolab::FitMode::max_likelihood));
    if (mode_str == "both" || mode_str == "min_divergence")
        results.push_back(infolab::fit(family, samples, infolab::FitMode::min_divergence));
    if (results.empty())
        infolab::fail(infolab::ErrorCode::bad_input, "unknown mode '" + mode_str + "'");

    double max_delta = 0.0;
    if (results.size() == 2)
        for (std::size_t i = 0; i < results[0].theta_star.size(); ++i)
            max_delta = std::max(max_delta, std::abs(results[0].theta_star[i] -
                                                     results[1].theta_star[i]));

    bool all_converged = true;
    for (const auto& r : results) all_converged = all_converged && r.converged;

    if (opts.output == "json") {
        json out;
        out["family"] = family.name;
        out["alphabet"] = alphabet.labels();
        out["results"] = json::array();
        for (const auto& r : results) out["results"].push_back(fit_result_to_json(family, r));
        if (results.size() == 2) out["max_theta_delta"] = json_number(max_delta);
        emit_json(out);
    } else {
        for (const auto& r : results) {
            std::cout << infolab::fit_mode_name(r.mode) << ": theta* = (";
            for (std::size_t i = 0; i < r.theta_star.size(); ++i)
                std::cout << (i ? ", " : "") << fixed6(r.theta_star[i]);
            std::cout << "), objective " << fixed6(r.objective_value) << ", "
                      << r.iterations << " iterations"
                      << (r.converged ? "" : " (not converged)") << "\n";
        }
        if (results.size() == 2)
            std::cout << "max |theta_ML - theta_KL| = " << fixed6(max_delta) << "\n";
    }
    return all_converged ? kExitOk : kExitVerificationFailure;
}

// ---------------------------------------------------------------------------
// game

json game_record_to_json(const infolab::GameRecord& record, const std::string& strategy,
                         double scale, const std::string& base, bool detail) {
    json out;
    out["game"] = "prediction";
    out["strategy"] = strategy;
    out["rounds"] = record.rounds;
    out["seed"] = record.seed;
    out["base"] = base;
    out["average_loss"] = json_number(record.average_loss * scale);
    out["infinite_rounds"] = record.infinite_rounds;
    if (detail) {
        json rounds = json::array();
        for (const auto& r : record.per_round) {
            json jr;
            jr["outcome"] = r.outcome;
            if (!r.side_info.empty()) jr["side_info"] = r.side_info;
            jr["prediction"] = r.prediction;
            jr["loss"] = json_number(r.loss * scale);
            rounds.push_back(std::move(jr));
        }
        out["per_round"] = std::move(rounds);
    }
    return out;
}

int cmd_game(const GlobalOptions& opts, const std::string& input_file,
             const std::string& strategy, std::int64_t rounds, bool detail) {
    json spec = infolab::read_json_file(input_file);
    double scale = infolab::base_scale(opts.log_base());

    auto stubborn_file = [&]() -> std::string {
        if (strategy.rfind("stubborn:", 0) != 0)
            infolab::fail(infolab::ErrorCode::bad_input,
                          "unknown strategy '" + strategy +
                              "' (optimal, uniform, or stubborn:<file>)");
        return strategy.substr(9);
    };

    infolab::GameRecord record;
    if (spec.contains("alphabet")) {
        infolab::Distribution deck = infolab::distribution_from_json(spec);
        infolab::Distribution prediction =
            strategy == "optimal"   ? deck
            : strategy == "uniform" ? infolab::uniform(deck.alphabet())
                                    : infolab::read_distribution(stubborn_file());
        record = infolab::play_game(deck, prediction, rounds, opts.seed);
    } else {
        infolab::JointDistribution joint = infolab::joint_from_json(spec);
        std::function<infolab::Distribution(const std::string&)> strat;
        if (strategy == "optimal") {
            strat = infolab::conditional_strategy(joint);
        } else if (strategy == "uniform") {
            infolab::Distribution u = infolab::uniform(joint.x_alphabet());
            strat = [u](const std::string&) { return u; };
        } else {
            infolab::Distribution fixed = infolab::read_distribution(stubborn_file());
            strat = [fixed](const std::string&) { return fixed; };
        }
        record = infolab::play_game_with_side_info(joint, strat, rounds, opts.seed);
    }

    if (opts.output == "json") {
        emit_json(game_record_to_json(record, strategy, scale, opts.base, detail));
    } else {
        std::cout << "rounds " << record.rounds << ", seed " << record.seed << ", strategy "
                  << strategy << "\n";
        std::cout << "average loss " << fixed6(record.average_loss * scale) << " " << opts.base;
        if (record.infinite_rounds > 0)
            std::cout << " (" << record.infinite_rounds << " infinite rounds)";
        std::cout << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// dpi

json dpi_report_to_json(const infolab::DpiReport& r, const std::string& base) {
    json out;
    out["base"] = base;
    out["i_xy"] = json_number(r.i_xy);
    out["i_xz"] = json_number(r.i_xz);
    out["i_x_yz"] = json_number(r.i_x_yz);
    out["i_xy_given_z"] = json_number(r.i_xy_given_z);
    out["i_xz_given_y"] = json_number(r.i_xz_given_y);
    out["markov_certified"] = r.markov_certified;
    out["dpi_holds"] = r.dpi_holds;
    out["chain_identity_residual"] = json_number(r.chain_identity_residual);
    return out;
}

void print_dpi_report_text(const infolab::DpiReport& r, const std::string& base) {
    std::cout << "I(X,Y) = " << fixed6(r.i_xy) << " " << base << "\n"
              << "I(X,Z) = " << fixed6(r.i_xz) << " " << base << "\n"
              << "I(X,(Y,Z)) = " << fixed6(r.i_x_yz) << " " << base << "\n"
              << "I(X,Y|Z) = " << fixed6(r.i_xy_given_z) << " " << base << "\n"
              << "I(X,Z|Y) = " << fixed6(r.i_xz_given_y) << " " << base << "\n"
              << "markov certified: " << (r.markov_certified ? "yes" : "no")
              << ", dpi holds: " << (r.dpi_holds ? "yes" : "no")
              << ", chain residual " << fixed6(r.chain_identity_residual) << "\n";
}

int cmd_dpi(const GlobalOptions& opts, const std::vector<std::string>& files, bool gallery,
            const std::string& particles_file, int steps) {
    infolab::LogBase base = opts.log_base();

    if (gallery) {
        auto triples = infolab::conditional_mi_sign_gallery();
        if (opts.output == "json") {
            json out = json::array();
            for (const auto& [name, triple] : triples) {
                json entry;
                entry["name"] = name;
                entry["triple"] = infolab::to_json(triple);
                entry["report"] = dpi_report_to_json(infolab::analyze(triple, base), opts.base);
                out.push_back(std::move(entry));
            }
            emit_json(out);
        } else {
            for (const auto& [name, triple] : triples) {
                std::cout << "--- " << name << " ---\n";
                print_dpi_report_text(infolab::analyze(triple, base), opts.base);
            }
        }
        return kExitOk;
    }

    if (!particles_file.empty()) {
        json cfg = infolab::read_json_file(particles_file);
        if (!cfg.contains("joint") || !cfg.contains("gx") || !cfg.contains("gy"))
            infolab::fail(infolab::ErrorCode::bad_input,
                          "particles config needs 'joint', 'gx', and 'gy'");
        auto joint = infolab::joint_from_json(cfg["joint"]);
        auto gx = infolab::channel_from_json(cfg["gx"]);
        auto gy = infolab::channel_from_json(cfg["gy"]);
        auto sequence = infolab::particle_demo(joint, gx, gy, steps, base);
        bool nonincreasing = true;
        for (std::size_t t = 1; t < sequence.size(); ++t)
            if (sequence[t] > sequence[t - 1] + 1e-10) nonincreasing = false;
        if (opts.output == "json") {
            json out;
            out["command"] = "particles";
            out["base"] = opts.base;
            out["steps"] = steps;
            json seq = json::array();
            for (double v : sequence) seq.push_back(json_number(v));
            out["mi_sequence"] = std::move(seq);
            out["nonincreasing"] = nonincreasing;
            emit_json(out);
        } else {
            for (std::size_t t = 0; t < sequence.size(); ++t)
                std::cout << "t=" << t << "  I(X,Y) = " << fixed6(sequence[t]) << " " << opts.base
                          << "\n";
            std::cout << (nonincreasing ? "nonincreasing" : "MONOTONICITY VIOLATED") << "\n";
        }
        return nonincreasing ? kExitOk : kExitVerificationFailure;
    }

    if (files.size() != 2)
        infolab::fail(infolab::ErrorCode::bad_input,
                      "dpi expects <joint file> <channel file> (or --gallery / --particles)");
    auto joint = infolab::read_joint(files[0]);
    auto channel = infolab::read_channel(files[1]);
    auto report = infolab::analyze(infolab::triple_from_markov(joint, channel), base);
    if (opts.output == "json")
        emit_json(dpi_report_to_json(report, opts.base));
    else
        print_dpi_report_text(report, opts.base);
    return report.dpi_holds ? kExitOk : kExitVerificationFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"infolab: finite-alphabet information-theory workbench"};
    app.require_subcommand(1);

    GlobalOptions opts;
    app.add_option("--base", opts.base, "log base for reported values")
        ->check(CLI::IsMember({"nats", "bits"}))
        ->capture_default_str();
    app.add_option("--seed", opts.seed, "seed for stochastic commands")->capture_default_str();
    app.add_option("--output", opts.output, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--cap", opts.cap, "type enumeration cap")->capture_default_str();

    // measure
    auto* measure = app.add_subcommand("measure", "entropy / divergence / information of files");
    measure->fallthrough();
    std::string measure_name;
    std::vector<std::string> measure_files;
    measure->add_option("name", measure_name, "entropy|kl|mi|cond_entropy|cond_mi")->required();
    measure->add_option("files", measure_files, "input JSON files");

    // types
    auto* types = app.add_subcommand("types", "method-of-types Chernoff verification");
    types->fallthrough();
    std::string types_q;
    std::int64_t types_n = 0;
    std::string types_p;
    bool types_rate = false;
    types->add_option("q", types_q, "belief distribution JSON")->required();
    types->add_option("--n", types_n, "number of draws")->required();
    types->add_option("--p", types_p, "true distribution JSON (for --rate)");
    types->add_flag("--rate", types_rate, "surprise-rate table at n, 10n, 100n");

    // fit
    auto* fit = app.add_subcommand("fit", "maximum-likelihood / minimum-divergence fit");
    fit->fallthrough();
    std::string fit_family, fit_data, fit_mode = "both";
    fit->add_option("family", fit_family, "categorical|tilt")->required();
    fit->add_option("data", fit_data, "CSV sample file, one label per line")->required();
    fit->add_option("--mode", fit_mode, "max_likelihood|min_divergence|both")
        ->check(CLI::IsMember({"max_likelihood", "min_divergence", "both"}))
        ->capture_default_str();

    // game
    auto* game = app.add_subcommand("game", "Bayesian prediction game simulation");
    game->fallthrough();
    std::string game_file, game_strategy = "optimal";
    std::int64_t game_rounds = 1000;
    bool game_detail = false;
    game->add_option("input", game_file, "deck distribution or joint JSON")->required();
    game->add_option("--strategy", game_strategy, "optimal|uniform|stubborn:<file>")
        ->capture_default_str();
    game->add_option("--rounds", game_rounds, "number of rounds")->capture_default_str();
    game->add_flag("--detail", game_detail, "include per-round records in JSON output");

    // dpi
    auto* dpi = app.add_subcommand("dpi", "data processing inequality lab");
    dpi->fallthrough();
    std::vector<std::string> dpi_files;
    bool dpi_gallery = false;
    std::string dpi_particles;
    int dpi_steps = 5;
    dpi->add_option("files", dpi_files, "joint JSON and channel JSON");
    dpi->add_flag("--gallery", dpi_gallery, "conditional-MI sign gallery");
    dpi->add_option("--particles", dpi_particles, "two-particle dynamics config JSON");
    dpi->add_option("--steps", dpi_steps, "time steps for --particles")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (measure->parsed()) return cmd_measure(opts, measure_name, measure_files);
        if (types->parsed()) return cmd_types(opts, types_q, types_n, types_p, types_rate);
        if (fit->parsed()) return cmd_fit(opts, fit_family, fit_data, fit_mode);
        if (game->parsed()) return cmd_game(opts, game_file, game_strategy, game_rounds,
                                            game_detail);
        if (dpi->parsed()) return cmd_dpi(opts, dpi_files, dpi_gallery, dpi_particles, dpi_steps);
    } catch (const infolab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
