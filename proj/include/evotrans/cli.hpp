#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "evotrans/empirics.hpp"
#include "evotrans/engine.hpp"

namespace evotrans::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitValidation = 4;

enum class Command { None, Transition, BenchRuntime, BenchDrift, BenchCover };

struct TransitionOptions {
    std::string start_path;
    std::string target_path;
    std::string out_dir;
    RunConfig run;
    std::string animate_path;  // empty: no animation
    uint32_t delay_ms = 40;
};

struct BenchRuntimeOptions {
    std::string out_dir;
    std::vector<Scheme> schemes{Scheme::Asym, Scheme::Standard};
    std::vector<int64_t> sizes{1024, 4096, 16384};
    int trials = 30;
    AsymmetricParams asym{1.0, 1.0};
    int threads = 0;
};

struct BenchDriftOptions {
    std::string out_dir;
    Scheme scheme = Scheme::Asym;
    int64_t pixels = 6400;
    std::vector<double> fractions{0.5, 0.9};
    int64_t trials = 100000;
    AsymmetricParams asym{1.0, 1.0};
    int threads = 0;
};

struct BenchCoverOptions {
    std::string out_dir;
    std::vector<int32_t> sides{8, 16, 32};
    int trials = 100;
    int threads = 0;
};

struct Invocation {
    Command command = Command::None;
    uint64_t seed = 0;
    bool seed_given = false;
    std::string help_text;  // non-empty: print and exit 0

    TransitionOptions transition;
    BenchRuntimeOptions bench_runtime;
    BenchDriftOptions bench_drift;
    BenchCoverOptions bench_cover;
};

// Parses argv (without the program name) into a fully validated invocation,
// with scheme presets applied to flags the user left unset. Throws
// UsageError for malformed input and ConfigError for well-formed but invalid
// values.
Invocation parse_and_validate(const std::vector<std::string>& args);

// Runs a validated invocation; returns an exit code and may throw the same
// errors the library throws.
int execute(Invocation& inv, std::ostream& out, std::ostream& err);

// Full entry point: parse, execute, map errors to exit codes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace evotrans::cli
