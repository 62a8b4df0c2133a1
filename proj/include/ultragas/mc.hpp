#ifndef ULTRAGAS_MC_HPP
#define ULTRAGAS_MC_HPP

#include <cstdint>
#include <vector>

#include "ultragas/cylinder.hpp"
#include "ultragas/multicomponent.hpp"
#include "ultragas/padic_sample.hpp"

namespace ultragas {

/// RNG contract: sample i draws from a splitmix64 stream whose state is
/// seeded by mix64(seed ^ mix64(i + 1)). Estimates are therefore identical
/// for any thread count, not just for a fixed one.
inline constexpr const char* kRngId = "splitmix64/stream-v1";

uint64_t stream_seed(uint64_t seed, uint64_t index);

struct Estimate {
    double mean = 0.0;
    double std_error = 0.0;
    long n_samples = 0;
    long capped_valuations = 0;
};

/// One state: N independent Haar-uniform points of o at digit depth L.
std::vector<PAdicSample> sample_state(int q, int N, int L, uint64_t rng_seed);

/// prod over pairs of q^(-beta v), v capped at L with capped pairs counted.
double boltzmann_weight(const std::vector<PAdicSample>& state, int q, double beta,
                        long& capped_pairs);

/// Plain-expectation estimate of Z(N, o, beta) under uniform sampling.
/// The _serial variants are the reference implementations; the defaults
/// run the same block layout under OpenMP and produce identical output.
Estimate estimate_Z(int q, int N, double beta, int L, long n_samples, uint64_t seed,
                    int threads = 0);
Estimate estimate_Z_serial(int q, int N, double beta, int L, long n_samples, uint64_t seed);

/// Ratio estimator E[1_event w]/E[w] with delta-method standard error.
Estimate estimate_event_prob(int q, int N, double beta, const CylinderEvent& event, int L,
                             long n_samples, uint64_t seed, int threads = 0);
Estimate estimate_event_prob_serial(int q, int N, double beta, const CylinderEvent& event,
                                    int L, long n_samples, uint64_t seed);

/// Multi-species partition function estimate (uniform sampling, weight
/// u^multi_energy_exponent with capped pair valuations).
Estimate estimate_multi_Z(int q, const ChargeProfile& profile, const std::vector<long>& counts,
                          double beta, int L, long n_samples, uint64_t seed, int threads = 0);
Estimate estimate_multi_Z_serial(int q, const ChargeProfile& profile,
                                 const std::vector<long>& counts, double beta, int L,
                                 long n_samples, uint64_t seed);

/// Relative bias bound from valuation capping: q^(-beta L) per capped pair.
double cap_bias_bound(const Estimate& e, int q, double beta, int L, long pair_count);

} // namespace ultragas

#endif
