#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "monoclif/json_io.hpp"
#include "monoclif/prng.hpp"

namespace monoclif {

struct VerifyCase {
    std::string name;
    std::string parameters;
    std::string lhs;
    std::string rhs;
    bool equal = false;
    double elapsed_ms = 0.0;
};

struct VerifyReport {
    std::string suite;
    std::vector<VerifyCase> cases;

    int passed() const;
    int failed() const;
    bool all_passed() const { return failed() == 0; }
};

struct VerifyOptions {
    std::vector<int> ms{2, 3};
    int max_degree = 6;
    int kernel_K = 6;
    std::uint64_t seed = 0;
};

/// Runs one of the named identity suites: core | hermite | bargmann |
/// kernels | all. Cases are generated deterministically from the seed and
/// evaluated in parallel; the report order is fixed.
VerifyReport run_suite(const std::string& suite, const VerifyOptions& opts);

/// The fourteen acceptance criteria with their contract-fixed parameter
/// grids. index is 1-based.
VerifyReport run_acceptance_criterion(int index, std::uint64_t seed = 0);
int acceptance_criteria_count();
std::string acceptance_criterion_title(int index);

Json to_json(const VerifyReport& report);

// Seeded generators shared by the suites and the unit tests.
std::vector<Monomial> enumerate_monomials(int m, int degree);
MultiVector random_multivector(Rng& rng, int m, int max_blades, bool allow_imaginary = true);
CliffPoly random_homogeneous(Rng& rng, int m, int k, VarRole role = VarRole::X,
                             bool allow_imaginary = true);
CliffPoly random_monogenic(Rng& rng, int m, int k);
CliffPoly random_harmonic(Rng& rng, int m, int k);

/// Exactly orthonormal rational frame pairs (t, s) for plane waves, built
/// from coordinate axes and Pythagorean rotations.
std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>> orthonormal_frames(
    int m, std::size_t count);

} // namespace monoclif
