#include "hopfgate/oracle.hpp"

#include "hopfgate/compounds.hpp"
#include "hopfgate/exact_linalg.hpp"

#include <Eigen/Dense>

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <thread>

namespace hopfgate {

namespace {

constexpr double kTol = 1e-9;

uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Platform-independent uniform in [0,1).
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed, uint64_t index) {
        state = seed ^ 0x6a09e667f3bcc908ULL;
        splitmix64(state);
        state ^= index * 0x9e3779b97f4a7c15ULL;
        splitmix64(state);
    }
    double uniform() { return (double)(splitmix64(state) >> 11) * 0x1p-53; }
};

} // namespace

SampleSpec SampleSpec::of_matrix(RationalMatrix m) {
    SampleSpec s;
    s.fixed = std::move(m);
    s.mode = ClassMode::Fixed;
    return s;
}

SampleSpec SampleSpec::of_class(SignPattern p, ClassMode mode, uint64_t seed) {
    SampleSpec s;
    s.pattern = std::move(p);
    s.mode = mode;
    s.seed = seed;
    return s;
}

RationalMatrix sample_member(const SampleSpec& spec, uint64_t index) {
    if (spec.mode == ClassMode::Fixed) return spec.fixed;
    Rng rng(spec.seed, index);
    double lo = std::log(spec.mag_min), hi = std::log(spec.mag_max);
    RationalMatrix m(spec.pattern.rows(), spec.pattern.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            int s = spec.pattern(i, j);
            if (s == 0) continue;
            double drop = rng.uniform();
            double mag = std::exp(lo + (hi - lo) * rng.uniform());
            if (spec.mode == ClassMode::Q0 && drop < 0.2) continue;
            m(i, j) = s * rationalize(mag);
        }
    return m;
}

std::vector<std::complex<double>> numeric_spectrum(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("spectrum of non-square matrix");
    Eigen::MatrixXd x(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) x(i, j) = m(i, j).get_d();
    Eigen::EigenSolver<Eigen::MatrixXd> solver(x, false);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed to converge");
    std::vector<std::complex<double>> out;
    out.reserve(m.rows());
    for (int i = 0; i < m.rows(); ++i) out.push_back(solver.eigenvalues()[i]);
    return out;
}

std::string claim_name(Claim c) {
    switch (c) {
        case Claim::ProductP0: return "product-p0";
        case Claim::CompoundP0: return "compound-p0";
        case Claim::CompoundNonsingular: return "compound-nonsingular";
        case Claim::NonrealAvoidsLeft: return "nonreal-avoids-left";
        case Claim::Semistable: return "semistable";
        case Claim::DetCompoundPositive: return "det-compound-positive";
    }
    return "?";
}

std::optional<Claim> claim_from_name(const std::string& s) {
    for (Claim c : {Claim::ProductP0, Claim::CompoundP0, Claim::CompoundNonsingular,
                    Claim::NonrealAvoidsLeft, Claim::Semistable, Claim::DetCompoundPositive})
        if (claim_name(c) == s) return c;
    return std::nullopt;
}

namespace {

// Empty string means the claim held for this sample.
std::string check_claim(Claim claim, const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix prod = a * b;
    switch (claim) {
        case Claim::ProductP0: {
            PMinorVerdict v = is_p0(prod);
            if (!v.holds) return "negative principal minor of the product";
            return {};
        }
        case Claim::CompoundP0: {
            PMinorVerdict v = is_p0(additive_compound_2(prod));
            if (!v.holds) return "negative principal minor of the second additive compound";
            return {};
        }
        case Claim::CompoundNonsingular: {
            if (det(additive_compound_2(prod)) == 0) return "singular second additive compound";
            return {};
        }
        case Claim::DetCompoundPositive: {
            if (det(additive_compound_2(prod)) <= 0) return "non-positive compound determinant";
            return {};
        }
        case Claim::NonrealAvoidsLeft: {
            for (const auto& ev : numeric_spectrum(prod))
                if (std::abs(ev.imag()) > kTol && ev.real() < -kTol)
                    return "nonreal eigenvalue in the open left half-plane";
            return {};
        }
        case Claim::Semistable: {
            for (const auto& ev : numeric_spectrum(prod))
                if (ev.real() < -kTol) return "eigenvalue with negative real part";
            return {};
        }
    }
    return "unknown claim";
}

} // namespace

int hopfgate_thread_cap() {
    const char* env = std::getenv("HOPFGATE_THREADS");
    if (!env) return 1;
    int v = std::atoi(env);
    return v > 0 ? v : 1;
}

OracleVerdict verify_claim(Claim claim, const SampleSpec& aspec, const SampleSpec& bspec,
                           int64_t trials, int threads) {
    auto t0 = std::chrono::steady_clock::now();
    if (threads <= 0) threads = hopfgate_thread_cap();
    threads = (int)std::min<int64_t>(threads, std::max<int64_t>(trials, 1));

    std::atomic<int64_t> lowest{trials};
    std::mutex m;
    std::string violated;
    std::optional<RationalMatrix> ca, cb;
    bool errored = false;
    std::string error_text;

    auto worker = [&](int w) {
        for (int64_t i = w; i < trials; i += threads) {
            if (i >= lowest.load(std::memory_order_relaxed)) continue;
            try {
                RationalMatrix a = sample_member(aspec, (uint64_t)i);
                RationalMatrix b = sample_member(bspec, (uint64_t)i);
                std::string why = check_claim(claim, a, b);
                if (!why.empty()) {
                    std::lock_guard<std::mutex> lk(m);
                    if (i < lowest.load()) {
                        lowest.store(i);
                        violated = why;
                        ca = std::move(a);
                        cb = std::move(b);
                    }
                }
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lk(m);
                errored = true;
                error_text = e.what();
                lowest.store(-1); // stop everyone
                return;
            }
        }
    };

    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w) pool.emplace_back(worker, w);
        for (auto& t : pool) t.join();
    }

    OracleVerdict v;
    v.claim = claim;
    v.trials_run = trials;
    if (errored) {
        v.status = OracleStatus::Error;
        v.violated = error_text;
    } else if (lowest.load() < trials) {
        v.status = OracleStatus::Counterexample;
        v.counterexample_index = lowest.load();
        v.trials_run = lowest.load() + 1;
        v.violated = violated;
        v.a_sample = std::move(ca);
        v.b_sample = std::move(cb);
    }
    v.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return v;
}

OracleVerdict exhaustive_small(Claim claim, const SignPattern& apat, const SignPattern& bpat,
                               const std::vector<Rational>& grid) {
    auto t0 = std::chrono::steady_clock::now();
    if (grid.empty()) throw std::invalid_argument("empty magnitude grid");
    std::vector<std::pair<bool, std::pair<int, int>>> slots; // (is_a, (i,j))
    for (int i = 0; i < apat.rows(); ++i)
        for (int j = 0; j < apat.cols(); ++j)
            if (apat(i, j) != 0) slots.push_back({true, {i, j}});
    for (int i = 0; i < bpat.rows(); ++i)
        for (int j = 0; j < bpat.cols(); ++j)
            if (bpat(i, j) != 0) slots.push_back({false, {i, j}});

    double total = std::pow((double)grid.size(), (double)slots.size());
    if (total > 1e6) throw SizeLimitError("exhaustive grid exceeds 10^6 combinations");

    std::vector<size_t> odo(slots.size(), 0);
    OracleVerdict v;
    v.claim = claim;
    int64_t index = 0;
    while (true) {
        RationalMatrix a = apat.unit_member(), b = bpat.unit_member();
        for (size_t s = 0; s < slots.size(); ++s) {
            auto [is_a, ij] = slots[s];
            RationalMatrix& m = is_a ? a : b;
            m(ij.first, ij.second) = m(ij.first, ij.second) * grid[odo[s]];
        }
        ++index;
        std::string why = check_claim(claim, a, b);
        if (!why.empty()) {
            v.status = OracleStatus::Counterexample;
            v.counterexample_index = index - 1;
            v.trials_run = index;
            v.violated = why;
            v.a_sample = std::move(a);
            v.b_sample = std::move(b);
            break;
        }
        size_t s = 0;
        while (s < slots.size() && ++odo[s] == grid.size()) odo[s++] = 0;
        if (s == slots.size()) {
            v.trials_run = index;
            break;
        }
    }
    v.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return v;
}

} // namespace hopfgate
