#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace equidist::cli {

inline constexpr const char* kVersionTag = "equidist 0.1.0";

/// Resolved run configuration; every emitted artifact embeds it so the run
/// can be reproduced from the artifact alone.
struct RunConfig {
    std::string command;
    std::string kind;
    std::string f_name = "sawtooth";
    std::string op = "info";
    std::string x_text;
    std::string points_path;
    std::string psi_path;
    std::string out_path;
    std::string format = "json";
    std::string exponent = "3/2";
    std::vector<std::string> set_tokens;
    std::vector<double> coeffs;
    std::vector<std::size_t> Ns;
    std::vector<int> block;
    std::string m_text = "1", n_text = "1";
    std::uint64_t seed = 0;
    std::uint64_t theta = 2;
    std::uint64_t max_element = 0;
    std::size_t N = 0, M = 0, K = 0, J = 8, H = 1;
    long long h = 1;
    double alpha = 1.0, eps = 0.1, C = 1.0;
    int base = 10;
    std::size_t grid = std::size_t(1) << 18;
    bool exact_mode = false;
    std::size_t iters = 200, restarts = 8;
    unsigned workers = 0;
};

/// All precondition violations at once (empty means OK).
std::vector<std::string> validate(const RunConfig& cfg);

/// Parse argv (without the program name), run, and emit the artifact.
/// Exit codes: 0 success, 2 usage error, 1 numeric/validation/I-O failure
/// (with a structured JSON error on the error stream).
int dispatch(const std::vector<std::string>& argv);

}  // namespace equidist::cli
