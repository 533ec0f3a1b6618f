#pragma once

#include "pfzero/errors.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pfzero::cli {

inline constexpr int kSchemaVersion = 1;

inline constexpr double kDefaultRho = 0.1;
inline constexpr const char* kDefaultDomain = "disc:0.5,0,0.3";

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,      // bad flags, unparsable input, invalid geometry
    kExitDegenerate = 2, // mathematical degeneracy of the input
    kExitNumeric = 3,    // numeric failure
};

/// Exactly one exit code per error kind.
int exit_code(ErrorKind kind) noexcept;

struct Job {
    std::string command;
    std::string hamiltonian;
    // decompose
    std::string omega_p = "0", omega_q = "0";
    // scalar-ode, count-zeros
    int component = 0;
    std::string mu; // comma-separated polynomials in t
    // count-zeros
    std::string domain;
    std::string rho;
    std::string rays = "auto";
    std::string mode = "bound";
    double tol = 1e-6;
    bool relaxed_bounds = false;
    int cycle = 0;
    // verify
    std::string samples;
    int count = 20;
    double t_min = -1, t_max = 1;
    double threshold = 1e-6;
    // periods
    std::string path;
    std::string seed;
    int samples_per_segment = 1;
    // bounds
    int degree = 0;
    double c = 1, c_p = 1;
    int order = 1;
    std::string height = "1";
    int params = 0;
};

struct Output {
    int status = kExitOk;
    std::string body;                 // JSON (or CSV for periods)
    std::vector<std::string> notices; // loud defaults, for stderr
};

/// Runs one job; errors become an error document and an exit status.
Output run(const Job& job);

} // namespace pfzero::cli
