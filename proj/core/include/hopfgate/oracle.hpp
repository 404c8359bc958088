#pragma once

#include "hopfgate/matrix.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hopfgate {

enum class ClassMode { Q, Q0, Fixed };

/// Deterministic sampling plan for one side of a product: the pair
/// (seed, trial index) fully determines the sample, independent of platform
/// and thread count.
struct SampleSpec {
    SignPattern pattern;  // Q / Q0 modes
    RationalMatrix fixed; // Fixed mode
    ClassMode mode = ClassMode::Q;
    uint64_t seed = 0;
    double mag_min = 1e-3, mag_max = 1e3;

    static SampleSpec of_matrix(RationalMatrix m);
    static SampleSpec of_class(SignPattern p, ClassMode mode, uint64_t seed);
};

/// Magnitudes are log-uniform over [mag_min, mag_max], rationalized to
/// denominators dividing 2^20; Q0 mode independently zeroes each nonzero
/// position with probability 0.2.
RationalMatrix sample_member(const SampleSpec& spec, uint64_t index);

std::vector<std::complex<double>> numeric_spectrum(const RationalMatrix& m);

enum class Claim {
    ProductP0,
    CompoundP0,
    CompoundNonsingular,
    NonrealAvoidsLeft,
    Semistable,
    DetCompoundPositive,
};

std::string claim_name(Claim c);
std::optional<Claim> claim_from_name(const std::string& s);

enum class OracleStatus { AllPassed, Counterexample, Error };

struct OracleVerdict {
    Claim claim = Claim::ProductP0;
    OracleStatus status = OracleStatus::AllPassed;
    int64_t trials_run = 0;
    int64_t counterexample_index = -1;
    std::string violated;
    std::optional<RationalMatrix> a_sample, b_sample;
    double wall_time_s = 0;
};

/// Evaluate the claim on sampled (A, B) pairs; exact checks for minor-based
/// claims, numeric spectra for stability claims. Stops at the lowest-index
/// counterexample; with threads > 1 the merge is still deterministic.
/// threads = 0 reads HOPFGATE_THREADS (default 1).
OracleVerdict verify_claim(Claim claim, const SampleSpec& aspec, const SampleSpec& bspec,
                           int64_t trials, int threads = 0);

/// Enumerate every grid member of both classes instead of sampling.
/// Guarded at 10^6 combinations.
OracleVerdict exhaustive_small(Claim claim, const SignPattern& apat, const SignPattern& bpat,
                               const std::vector<Rational>& grid);

int hopfgate_thread_cap();

} // namespace hopfgate
