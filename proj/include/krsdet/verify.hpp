#pragma once

#include <string>
#include <vector>

namespace krsdet {

/// Bounds for the verification suites; 0 picks the suite's default.
struct VerifyBounds {
    int max_m = 0;
    int max_n = 0;
    int max_degree = 0;
    int max_seq_len = 0;
    unsigned long long seed = 42;
};

struct VerifyFailure {
    std::string name;
    std::string detail;
};

struct VerifyReport {
    std::string suite;
    long long cases = 0;
    std::vector<VerifyFailure> failures;
    double elapsed_seconds = 0;
    bool passed() const { return failures.empty(); }
};

/// Suites: krs, greene, groebner, symbolic, powers, products, straight,
/// paths, hilbert, rees.
std::vector<std::string> verify_suite_names();

VerifyReport run_suite(const std::string& suite, const VerifyBounds& bounds);

/// Runs one suite or, for "all", every suite concurrently; reports are
/// merged in suite-name order.
std::vector<VerifyReport> run_suites(const std::string& suite_or_all,
                                     const VerifyBounds& bounds);

}  // namespace krsdet
