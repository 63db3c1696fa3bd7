#include "evotrans/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <ostream>
#include <sstream>

#include "evotrans/image_io.hpp"

namespace evotrans::cli {

namespace fs = std::filesystem;

namespace {

std::string fmt_g(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Expands a flat key=value config file into long-option tokens. '#' starts a
// comment; values may be quoted. Keys mirror the long flag names.
std::vector<std::string> config_tokens(const std::string& path) {
    const std::vector<uint8_t> bytes = read_file(path);
    std::istringstream in(std::string(bytes.begin(), bytes.end()));
    std::vector<std::string> tokens;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw UsageError(path + ":" + std::to_string(lineno) +
                             ": expected key=value");
        }
        const std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (value.size() >= 2 && (value.front() == '"' || value.front() == '\'') &&
            value.back() == value.front()) {
            value = value.substr(1, value.size() - 2);
        }
        if (key.empty()) {
            throw UsageError(path + ":" + std::to_string(lineno) + ": empty key");
        }
        if (key == "config") {
            throw UsageError(path + ": config files cannot nest");
        }
        tokens.push_back("--" + key + "=" + value);
    }
    return tokens;
}

// Pulls --config flags out of the argument list and splices the file's
// tokens in right after the subcommand, so explicit command-line flags
// (parsed last, take-last policy) win over file values.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
    std::vector<std::string> cleaned;
    std::vector<std::string> injected;
    for (std::size_t i = 0; i < args.size(); ++i) {
        std::string path;
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) throw UsageError("--config needs a file path");
            path = args[++i];
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
        } else {
            cleaned.push_back(args[i]);
            continue;
        }
        const auto tokens = config_tokens(path);
        injected.insert(injected.end(), tokens.begin(), tokens.end());
    }
    if (injected.empty()) return cleaned;
    if (cleaned.empty() || cleaned.front().rfind('-', 0) == 0) {
        throw UsageError("--config requires a subcommand");
    }
    cleaned.insert(cleaned.begin() + 1, injected.begin(), injected.end());
    return cleaned;
}

std::string all_scheme_names() {
    std::string s;
    for (const Scheme sc : kAllSchemes) {
        if (!s.empty()) s += ", ";
        s += scheme_name(sc);
    }
    return s;
}

Scheme scheme_from_flag(const std::string& name) {
    const auto s = parse_scheme(name);
    if (!s) {
        throw UsageError("unknown scheme '" + name + "' for --scheme (valid: " +
                         all_scheme_names() + ")");
    }
    return *s;
}

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(csv);
    while (std::getline(in, item, ',')) out.push_back(item);
    return out;
}

template <typename T, typename Parse>
std::vector<T> parse_list(const std::string& csv, const char* flag, Parse parse) {
    std::vector<T> out;
    for (const std::string& item : split_list(csv)) {
        try {
            std::size_t used = 0;
            T v = parse(item, used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError(std::string(flag) + ": cannot parse '" + item + "'");
        }
    }
    if (out.empty()) throw UsageError(std::string(flag) + ": empty list");
    return out;
}

std::vector<double> parse_doubles(const std::string& csv, const char* flag) {
    return parse_list<double>(csv, flag, [](const std::string& s, std::size_t& used) {
        return std::stod(s, &used);
    });
}

std::vector<int64_t> parse_int64s(const std::string& csv, const char* flag) {
    return parse_list<int64_t>(csv, flag, [](const std::string& s, std::size_t& used) {
        return static_cast<int64_t>(std::stoll(s, &used));
    });
}

void ensure_outdir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw IoError("cannot create output directory " + dir + ": " + ec.message());
    }
}

void write_text(const std::string& path, const std::string& text) {
    write_file(path, std::vector<uint8_t>(text.begin(), text.end()));
}

std::string metrics_csv(const RunMetrics& metrics) {
    std::ostringstream s;
    s << "generation,fitness,k,flips_st,flips_ts,accepted\n";
    for (const MetricsRecord& r : metrics.records) {
        s << r.generation << ',' << r.fitness << ',' << r.missing << ','
          << r.flips_to_target << ',' << r.flips_to_start << ','
          << (r.accepted ? 1 : 0) << '\n';
    }
    return s.str();
}

std::string milestone_filename(double fraction, uint64_t generation) {
    return "milestone_" + fmt_g(fraction * 100.0) + "_gen" +
           std::to_string(generation) + ".png";
}

std::string frame_filename(uint64_t generation) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "frame_%08llu.png",
                  static_cast<unsigned long long>(generation));
    return buf;
}

// ---------------------------------------------------------------------------
// transition
// ---------------------------------------------------------------------------

int run_transition(Invocation& inv, std::ostream& out, std::ostream& err) {
    TransitionOptions& t = inv.transition;
    const Image start = decode_image(t.start_path);
    const Image target = decode_image(t.target_path);
    ensure_outdir(t.out_dir);

    if (!inv.seed_given) inv.seed = entropy_seed();
    t.run.seed = inv.seed;
    out << "seed: " << inv.seed << "\n";

    const Scheme scheme = t.run.op.scheme;
    const bool unbounded = t.run.max_generations && *t.run.max_generations == 0;
    if (scheme == Scheme::PureBiasedWalk && !unbounded) {
        err << "warning: the biased walk can stall behind high-contrast "
               "boundaries (gambler's-ruin regime) and may exhaust the "
               "generation budget before completing; raise --max-generations "
               "or pass 0 to run unbounded\n";
    }

    const bool animate = !t.animate_path.empty();
    std::map<uint64_t, Image> anim_frames;
    std::vector<std::string> written;
    const FrameSink sink = [&](uint64_t gen, const Image& frame,
                               std::optional<double> fraction) {
        const std::string name =
            fraction ? milestone_filename(*fraction, gen) : frame_filename(gen);
        write_png((fs::path(t.out_dir) / name).string(), frame);
        written.push_back(name);
        if (animate) anim_frames.emplace(gen, frame);
    };

    const RunResult result = evotrans::run(start, target, t.run, sink);

    write_text((fs::path(t.out_dir) / "metrics.csv").string(),
               metrics_csv(result.metrics));

    if (animate) {
        anim_frames.emplace(0, start);  // the initial composite equals S
        anim_frames.emplace(result.generations, result.final_state.compose());
        std::vector<Image> ordered;
        ordered.reserve(anim_frames.size());
        for (auto& [gen, img] : anim_frames) ordered.push_back(std::move(img));
        write_apng(t.animate_path, ordered,
                   static_cast<uint16_t>(t.delay_ms), 1000);
    }

    const int64_t total = result.final_state.pixel_count();
    out << "scheme: " << scheme_name(scheme) << "\n"
        << "size: " << result.final_state.cols() << "x"
        << result.final_state.rows() << " (" << total << " pixels)\n"
        << "generations: " << result.generations
        << (result.completed ? " (completed)" : " (budget reached)") << "\n"
        << "fitness: " << result.final_state.count_target() << "/" << total
        << "\n";
    for (const auto& [fraction, frame] : result.milestone_frames) {
        out << "milestone " << fmt_g(fraction * 100.0) << "% at generation "
            << frame.generation << " -> "
            << milestone_filename(fraction, frame.generation) << "\n";
    }
    out << "metrics: " << (fs::path(t.out_dir) / "metrics.csv").string() << "\n";
    if (animate) out << "animation: " << t.animate_path << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// benches
// ---------------------------------------------------------------------------

int run_bench_runtime(Invocation& inv, std::ostream& out) {
    BenchRuntimeOptions& b = inv.bench_runtime;
    ensure_outdir(b.out_dir);
    if (!inv.seed_given) inv.seed = entropy_seed();
    out << "seed: " << inv.seed << "\n";

    for (const Scheme scheme : b.schemes) {
        const ScalingReport report = measure_runtime_scaling(
            scheme, b.asym, b.sizes, b.trials, inv.seed, b.threads);
        std::ostringstream csv;
        csv << "n,mean_generations,ci_low,ci_high\n";
        for (const SizeStats& s : report.sizes) {
            csv << s.pixels << ',' << fmt_g(s.generations.mean) << ','
                << fmt_g(s.generations.ci_low) << ',' << fmt_g(s.generations.ci_high)
                << '\n';
        }
        const std::string path =
            (fs::path(b.out_dir) /
             ("scaling_" + std::string(scheme_name(scheme)) + ".csv"))
                .string();
        write_text(path, csv.str());

        out << "scheme " << scheme_name(scheme) << " (" << b.trials
            << " trials/size):\n";
        for (const SizeStats& s : report.sizes) {
            out << "  n=" << s.pixels << ": mean " << fmt_g(s.generations.mean)
                << " generations [" << fmt_g(s.generations.ci_low) << ", "
                << fmt_g(s.generations.ci_high) << "]";
            if (scheme == Scheme::Standard) {
                const double nlogn = static_cast<double>(s.pixels) *
                                     std::log(static_cast<double>(s.pixels));
                out << "  mean/(n ln n) = " << fmt_g(s.generations.mean / nlogn);
            }
            out << "\n";
        }
        out << "  log-log slope " << fmt_g(report.fit.slope) << " ["
            << fmt_g(report.fit.ci_low) << ", " << fmt_g(report.fit.ci_high)
            << "]\n"
            << "  report: " << path << "\n";
    }
    return kExitOk;
}

int run_bench_drift(Invocation& inv, std::ostream& out) {
    BenchDriftOptions& b = inv.bench_drift;
    ensure_outdir(b.out_dir);
    if (!inv.seed_given) inv.seed = entropy_seed();
    out << "seed: " << inv.seed << "\n";

    std::ostringstream csv;
    csv << "scheme,fraction,missing,trials,mean_drift,ci_low,ci_high\n";
    out << "scheme " << scheme_name(b.scheme) << ", " << b.pixels << " pixels, "
        << b.trials << " trials per fraction:\n";
    for (std::size_t i = 0; i < b.fractions.size(); ++i) {
        const DriftEstimate est =
            measure_drift(b.scheme, b.asym, b.pixels, b.fractions[i],
                          b.trials, derive_stream_seed(inv.seed, i), b.threads);
        csv << scheme_name(b.scheme) << ',' << fmt_g(est.fraction) << ','
            << est.missing << ',' << est.trials << ',' << fmt_g(est.drift.mean)
            << ',' << fmt_g(est.drift.ci_low) << ',' << fmt_g(est.drift.ci_high)
            << '\n';
        out << "  fraction " << fmt_g(est.fraction) << " (k=" << est.missing
            << " missing): drift " << fmt_g(est.drift.mean) << " ["
            << fmt_g(est.drift.ci_low) << ", " << fmt_g(est.drift.ci_high)
            << "]\n";
    }
    const std::string path = (fs::path(b.out_dir) / "drift.csv").string();
    write_text(path, csv.str());
    out << "  report: " << path << "\n";
    return kExitOk;
}

int run_bench_cover(Invocation& inv, std::ostream& out) {
    BenchCoverOptions& b = inv.bench_cover;
    ensure_outdir(b.out_dir);
    if (!inv.seed_given) inv.seed = entropy_seed();
    out << "seed: " << inv.seed << "\n";

    std::ostringstream csv;
    csv << "n,trials,mean_steps,ci_low,ci_high,bound_ln,bound_log2\n";
    for (std::size_t i = 0; i < b.sides.size(); ++i) {
        const CoverTimeEstimate est = measure_cover_time(
            b.sides[i], b.trials, derive_stream_seed(inv.seed, i), b.threads);
        csv << est.side << ',' << est.trials << ',' << fmt_g(est.steps.mean) << ','
            << fmt_g(est.steps.ci_low) << ',' << fmt_g(est.steps.ci_high) << ','
            << fmt_g(est.bound_ln) << ',' << fmt_g(est.bound_log2) << '\n';
        out << "  " << est.side << "x" << est.side << " torus: mean "
            << fmt_g(est.steps.mean) << " steps [" << fmt_g(est.steps.ci_low)
            << ", " << fmt_g(est.steps.ci_high) << "]; 4n^2 log^2(n)/pi bound: "
            << fmt_g(est.bound_ln) << " (ln), " << fmt_g(est.bound_log2)
            << " (log2)\n";
    }
    const std::string path = (fs::path(b.out_dir) / "cover.csv").string();
    write_text(path, csv.str());
    out << "  report: " << path << "\n";
    return kExitOk;
}

}  // namespace

// ---------------------------------------------------------------------------
// parsing
// ---------------------------------------------------------------------------

Invocation parse_and_validate(const std::vector<std::string>& raw_args) {
    Invocation inv;
    const std::vector<std::string> args = expand_config(raw_args);

    CLI::App app{"evotrans: evolutionary image transitions and theory benches"};
    app.require_subcommand(1);
    // Config-file tokens are injected ahead of explicit flags; take-last
    // makes the explicit ones win.
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    std::string config_path;  // consumed by expand_config; registered for help

    // transition -----------------------------------------------------------
    TransitionOptions& t = inv.transition;
    std::string scheme_flag = "asym";
    std::string milestones_flag;
    std::string frame_policy_flag = "milestones";
    std::string walk_start_flag;
    uint64_t max_gens = 0;
    int64_t frame_every = 1;

    CLI::App* tr = app.add_subcommand(
        "transition", "Evolve a start image into a target image");
    tr->add_option("--config", config_path,
                   "Flat key=value file mirroring the long flags; "
                   "command-line values win");
    tr->add_option("--start,-s", t.start_path, "Start image (PNG/PPM/PGM)")
        ->required();
    tr->add_option("--target,-t", t.target_path, "Target image, same size")
        ->required();
    tr->add_option("--out,-o", t.out_dir, "Output directory")->required();
    tr->add_option("--scheme", scheme_flag,
                   "Process: " + all_scheme_names())
        ->capture_default_str();
    tr->add_option("--cs", t.run.op.asym.c_s,
                   "Expected start-side flips per step is cs/2 (default 100)");
    tr->add_option("--ct", t.run.op.asym.c_t,
                   "Expected target-side flips per step is ct/2 (default 50)");
    tr->add_option("--t-max", t.run.op.t_max,
                   "Walk steps per walk mutation (default 100 for ea-*-walk, "
                   "2000 for asym-*-walk)");
    tr->add_option("--tau", t.run.op.tau,
                   "Walk cadence in generations for asym-*-walk")
        ->capture_default_str();
    tr->add_option("--seed", inv.seed, "RNG seed (default: system entropy)");
    tr->add_option("--max-generations", max_gens,
                   "Composite-step budget; 0 = unbounded (default 10*m*n)");
    tr->add_option("--milestones", milestones_flag,
                   "Captured fractions (default 0.125,0.375,0.625,0.875)");
    tr->add_flag("--snap-final", t.run.snap_final,
                 "Finish the last <ct/2 pixels in one step when the budget "
                 "expires");
    tr->add_option("--frame-policy", frame_policy_flag,
                   "Extra frames: milestones | every | all")
        ->capture_default_str();
    tr->add_option("--frame-every", frame_every,
                   "Generation cadence for --frame-policy every");
    tr->add_option("--animate", t.animate_path,
                   "Assemble captured frames into an animated PNG");
    tr->add_option("--delay-ms", t.delay_ms, "Animation frame delay")
        ->capture_default_str();
    tr->add_option("--walk-start", walk_start_flag,
                   "Fixed 'row,col' (1-based) start for the pure walks "
                   "(default: uniformly random)");

    // bench-runtime ----------------------------------------------------------
    BenchRuntimeOptions& br = inv.bench_runtime;
    std::string br_schemes_flag = "asym,standard";
    std::string br_sizes_flag;
    CLI::App* rb = app.add_subcommand(
        "bench-runtime", "Mean generations to completion vs problem size");
    rb->add_option("--config", config_path,
                   "Flat key=value file mirroring the long flags");
    rb->add_option("--out,-o", br.out_dir, "Output directory")->required();
    rb->add_option("--schemes", br_schemes_flag, "Subset of: asym,standard")
        ->capture_default_str();
    rb->add_option("--sizes", br_sizes_flag,
                   "Pixel counts, perfect squares (default 1024,4096,16384)");
    rb->add_option("--trials", br.trials, "Trials per size (>= 30)")
        ->capture_default_str();
    rb->add_option("--cs", br.asym.c_s, "Asym c_s")->capture_default_str();
    rb->add_option("--ct", br.asym.c_t, "Asym c_t")->capture_default_str();
    rb->add_option("--seed", inv.seed, "Master seed (default: system entropy)");
    rb->add_option("--threads", br.threads, "Worker threads (0 = auto)")
        ->capture_default_str();

    // bench-drift ------------------------------------------------------------
    BenchDriftOptions& bd = inv.bench_drift;
    std::string bd_scheme_flag = "asym";
    std::string bd_fractions_flag;
    CLI::App* db = app.add_subcommand(
        "bench-drift", "One-step accepted fitness gain at fixed completion");
    db->add_option("--config", config_path,
                   "Flat key=value file mirroring the long flags");
    db->add_option("--out,-o", bd.out_dir, "Output directory")->required();
    db->add_option("--scheme", bd_scheme_flag, "asym or standard")
        ->capture_default_str();
    db->add_option("--size", bd.pixels, "Pixels in the synthetic pair")
        ->capture_default_str();
    db->add_option("--fractions", bd_fractions_flag,
                   "Completion fractions (default 0.5,0.9)");
    db->add_option("--trials", bd.trials, "Monte-Carlo trials per fraction")
        ->capture_default_str();
    db->add_option("--cs", bd.asym.c_s, "Asym c_s")->capture_default_str();
    db->add_option("--ct", bd.asym.c_t, "Asym c_t")->capture_default_str();
    db->add_option("--seed", inv.seed, "Master seed (default: system entropy)");
    db->add_option("--threads", bd.threads, "Worker threads (0 = auto)")
        ->capture_default_str();

    // bench-cover ------------------------------------------------------------
    BenchCoverOptions& bc = inv.bench_cover;
    std::string bc_sides_flag;
    CLI::App* cb = app.add_subcommand(
        "bench-cover", "Uniform-walk cover time of the n x n torus");
    cb->add_option("--config", config_path,
                   "Flat key=value file mirroring the long flags");
    cb->add_option("--out,-o", bc.out_dir, "Output directory")->required();
    cb->add_option("--sizes", bc_sides_flag, "Torus sides (default 8,16,32)");
    cb->add_option("--trials", bc.trials, "Trials per size")
        ->capture_default_str();
    cb->add_option("--seed", inv.seed, "Master seed (default: system entropy)");
    cb->add_option("--threads", bc.threads, "Worker threads (0 = auto)")
        ->capture_default_str();

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("evotrans");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        const auto subs = app.get_subcommands();
        inv.help_text = subs.size() == 1 ? subs[0]->help() : app.help();
        return inv;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    if (tr->parsed()) {
        inv.command = Command::Transition;
        inv.seed_given = tr->count("--seed") > 0;

        t.run.op.scheme = scheme_from_flag(scheme_flag);
        const Scheme scheme = t.run.op.scheme;
        if (!tr->count("--cs")) t.run.op.asym.c_s = 100.0;
        if (!tr->count("--ct")) t.run.op.asym.c_t = 50.0;
        if (!tr->count("--t-max")) {
            t.run.op.t_max = scheme == Scheme::EAUniformWalk ||
                                     scheme == Scheme::EABiasedWalk
                                 ? 100
                                 : 2000;
        }
        if (scheme_has_asym(scheme) &&
            (t.run.op.asym.c_s < 1.0 || t.run.op.asym.c_t < 1.0)) {
            throw UsageError("--cs and --ct must be at least 1");
        }
        if (scheme_has_walk_mutation(scheme) && t.run.op.t_max < 1) {
            throw UsageError("--t-max must be positive for scheme " +
                             std::string(scheme_name(scheme)));
        }
        if (t.run.op.tau < 1) throw UsageError("--tau must be at least 1");
        if (tr->count("--max-generations")) t.run.max_generations = max_gens;
        if (tr->count("--milestones")) {
            t.run.milestones = parse_doubles(milestones_flag, "--milestones");
            double prev = 0.0;
            for (const double f : t.run.milestones) {
                if (f <= prev || f > 1.0) {
                    throw UsageError(
                        "--milestones must be strictly increasing in (0, 1]");
                }
                prev = f;
            }
        }
        if (frame_policy_flag == "milestones") {
            t.run.frame_policy = FramePolicy::MilestonesOnly;
        } else if (frame_policy_flag == "every") {
            t.run.frame_policy = FramePolicy::EveryK;
        } else if (frame_policy_flag == "all") {
            t.run.frame_policy = FramePolicy::All;
        } else {
            throw UsageError("--frame-policy must be milestones, every or all");
        }
        if (frame_every < 1) throw UsageError("--frame-every must be at least 1");
        if (t.delay_ms > 65535) {
            throw UsageError("--delay-ms must fit the animation delay field (<= 65535)");
        }
        t.run.frame_every = static_cast<uint64_t>(frame_every);
        if (!walk_start_flag.empty()) {
            const auto rc = parse_int64s(walk_start_flag, "--walk-start");
            if (rc.size() != 2 || rc[0] < 1 || rc[1] < 1) {
                throw UsageError("--walk-start expects 'row,col', 1-based");
            }
            t.run.walk_start = Position{static_cast<int32_t>(rc[0] - 1),
                                        static_cast<int32_t>(rc[1] - 1)};
        }
    } else if (rb->parsed()) {
        inv.command = Command::BenchRuntime;
        inv.seed_given = rb->count("--seed") > 0;
        br.schemes.clear();
        for (const std::string& name : split_list(br_schemes_flag)) {
            const Scheme s = scheme_from_flag(name);
            if (s != Scheme::Asym && s != Scheme::Standard) {
                throw UsageError("--schemes supports asym and standard only");
            }
            br.schemes.push_back(s);
        }
        if (rb->count("--sizes")) br.sizes = parse_int64s(br_sizes_flag, "--sizes");
        if (br.trials < 1) throw UsageError("--trials must be positive");
    } else if (db->parsed()) {
        inv.command = Command::BenchDrift;
        inv.seed_given = db->count("--seed") > 0;
        bd.scheme = scheme_from_flag(bd_scheme_flag);
        if (bd.scheme != Scheme::Asym && bd.scheme != Scheme::Standard) {
            throw UsageError("--scheme must be asym or standard for bench-drift");
        }
        if (db->count("--fractions")) {
            bd.fractions = parse_doubles(bd_fractions_flag, "--fractions");
        }
        if (bd.trials < 1) throw UsageError("--trials must be positive");
    } else if (cb->parsed()) {
        inv.command = Command::BenchCover;
        inv.seed_given = cb->count("--seed") > 0;
        if (cb->count("--sizes")) {
            bc.sides.clear();
            for (const int64_t s : parse_int64s(bc_sides_flag, "--sizes")) {
                bc.sides.push_back(static_cast<int32_t>(s));
            }
        }
        if (bc.trials < 1) throw UsageError("--trials must be positive");
    }
    return inv;
}

int execute(Invocation& inv, std::ostream& out, std::ostream& err) {
    switch (inv.command) {
        case Command::Transition: return run_transition(inv, out, err);
        case Command::BenchRuntime: return run_bench_runtime(inv, out);
        case Command::BenchDrift: return run_bench_drift(inv, out);
        case Command::BenchCover: return run_bench_cover(inv, out);
        case Command::None: break;
    }
    return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    try {
        Invocation inv = parse_and_validate(args);
        if (!inv.help_text.empty()) {
            out << inv.help_text;
            return kExitOk;
        }
        return execute(inv, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ConfigError& e) {
        err << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const IoError& e) {
        err << "io error: " << e.what() << "\n";
        return kExitIo;
    }
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    args.reserve(argc > 0 ? argc - 1 : 0);
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

}  // namespace evotrans::cli
