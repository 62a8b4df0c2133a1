#include "ultragas/mc.hpp"

#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ultragas {

namespace {

constexpr long kBlock = 4096;

inline uint64_t mix64(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

struct SplitMix {
    uint64_t state;
    uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // unbiased bounded draw by rejection
    uint32_t below(uint32_t bound) {
        uint64_t lim = UINT64_MAX - UINT64_MAX % bound;
        uint64_t x;
        do {
            x = next();
        } while (x >= lim);
        return static_cast<uint32_t>(x % bound);
    }
};

inline double powi(double base, long e) {
    double r = 1.0, b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

void fill_state(std::vector<PAdicSample>& state, int q, int N, int L, uint64_t rng_seed) {
    SplitMix rng{rng_seed};
    state.resize(static_cast<size_t>(N));
    for (int i = 0; i < N; ++i) {
        auto& d = state[static_cast<size_t>(i)].digits;
        d.resize(static_cast<size_t>(L));
        for (int k = 0; k < L; ++k)
            d[static_cast<size_t>(k)] = static_cast<uint8_t>(rng.below(static_cast<uint32_t>(q)));
    }
}

// Accumulated per-sample moments. Reduction is per fixed-size block in
// index order, which pins the floating-point result independently of the
// thread count.
struct Moments {
    double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    long capped = 0;
    void merge(const Moments& o) {
        sx += o.sx;
        sy += o.sy;
        sxx += o.sxx;
        syy += o.syy;
        sxy += o.sxy;
        capped += o.capped;
    }
};

template <typename PerSample>
Moments run_blocks(long n_samples, uint64_t seed, int threads, bool parallel,
                   const PerSample& fn) {
    const long nblocks = (n_samples + kBlock - 1) / kBlock;
    std::vector<Moments> partial(static_cast<size_t>(nblocks));
    auto do_block = [&](long b) {
        Moments m;
        const long lo = b * kBlock;
        const long hi = std::min(n_samples, lo + kBlock);
        for (long i = lo; i < hi; ++i) {
            double x, y;
            long capped = 0;
            fn(stream_seed(seed, static_cast<uint64_t>(i)), x, y, capped);
            m.sx += x;
            m.sy += y;
            m.sxx += x * x;
            m.syy += y * y;
            m.sxy += x * y;
            m.capped += capped;
        }
        partial[static_cast<size_t>(b)] = m;
    };
    if (parallel) {
#ifdef _OPENMP
        if (threads > 0) {
#pragma omp parallel for schedule(dynamic) num_threads(threads)
            for (long b = 0; b < nblocks; ++b) do_block(b);
        } else {
#pragma omp parallel for schedule(dynamic)
            for (long b = 0; b < nblocks; ++b) do_block(b);
        }
#else
        for (long b = 0; b < nblocks; ++b) do_block(b);
#endif
    } else {
        for (long b = 0; b < nblocks; ++b) do_block(b);
    }
    Moments total;
    for (const auto& m : partial) total.merge(m);
    return total;
}

Estimate mean_estimate(const Moments& m, long n) {
    Estimate e;
    e.n_samples = n;
    e.capped_valuations = m.capped;
    e.mean = m.sy / static_cast<double>(n);
    if (n > 1) {
        double var = (m.syy - static_cast<double>(n) * e.mean * e.mean) /
                     static_cast<double>(n - 1);
        e.std_error = std::sqrt(std::max(0.0, var) / static_cast<double>(n));
    }
    return e;
}

Estimate ratio_estimate(const Moments& m, long n) {
    Estimate e;
    e.n_samples = n;
    e.capped_valuations = m.capped;
    const double ybar = m.sy / static_cast<double>(n);
    const double xbar = m.sx / static_cast<double>(n);
    const double R = xbar / ybar;
    e.mean = R;
    if (n > 1) {
        double sxx = (m.sxx - n * xbar * xbar) / static_cast<double>(n - 1);
        double syy = (m.syy - n * ybar * ybar) / static_cast<double>(n - 1);
        double sxy = (m.sxy - n * xbar * ybar) / static_cast<double>(n - 1);
        double v = (sxx - 2.0 * R * sxy + R * R * syy) / (ybar * ybar);
        e.std_error = std::sqrt(std::max(0.0, v) / static_cast<double>(n));
    }
    return e;
}

void check_args(int q, int N, double beta, int L, long n_samples) {
    if (q < 2) throw std::invalid_argument("mc: q must be >= 2");
    if (N < 0) throw std::invalid_argument("mc: N must be >= 0");
    if (beta < 0) throw std::invalid_argument("mc: beta must be >= 0");
    if (L < 1) throw std::invalid_argument("mc: precision L must be >= 1");
    if (n_samples < 1) throw std::invalid_argument("mc: need at least one sample");
}

bool state_in_event(const std::vector<PAdicSample>& state, const CylinderEvent& event) {
    for (size_t b = 0; b < event.family.size(); ++b) {
        const auto& digits = event.family[b].digits();
        long count = 0;
        for (const auto& s : state) {
            bool in = s.digits.size() >= digits.size();
            for (size_t k = 0; in && k < digits.size(); ++k)
                in = s.digits[k] == static_cast<uint8_t>(digits[k]);
            if (in) ++count;
        }
        if (count != event.occupancy[b]) return false;
    }
    return true;
}

} // namespace

uint64_t stream_seed(uint64_t seed, uint64_t index) {
    return mix64(seed ^ mix64(index + 1));
}

std::vector<PAdicSample> sample_state(int q, int N, int L, uint64_t rng_seed) {
    check_args(q, N, 0.0, L, 1);
    std::vector<PAdicSample> state;
    fill_state(state, q, N, L, rng_seed);
    return state;
}

double boltzmann_weight(const std::vector<PAdicSample>& state, int q, double beta,
                        long& capped_pairs) {
    long k = 0;
    const int L = state.empty() ? 0 : static_cast<int>(state[0].digits.size());
    for (size_t i = 0; i < state.size(); ++i)
        for (size_t j = i + 1; j < state.size(); ++j) {
            int v = valuation_capped(state[i], state[j]);
            if (v >= L) ++capped_pairs;
            k += v;
        }
    return powi(std::pow(static_cast<double>(q), -beta), k);
}

namespace {

Estimate estimate_Z_impl(int q, int N, double beta, int L, long n_samples, uint64_t seed,
                         int threads, bool parallel) {
    check_args(q, N, beta, L, n_samples);
    const double base = std::pow(static_cast<double>(q), -beta);
    Moments m = run_blocks(n_samples, seed, threads, parallel,
                           [&](uint64_t s, double& x, double& y, long& capped) {
                               std::vector<PAdicSample> state;
                               fill_state(state, q, N, L, s);
                               long k = 0;
                               for (int i = 0; i < N; ++i)
                                   for (int j = i + 1; j < N; ++j) {
                                       int v = valuation_capped(state[static_cast<size_t>(i)],
                                                                state[static_cast<size_t>(j)]);
                                       if (v >= L) ++capped;
                                       k += v;
                                   }
                               y = powi(base, k);
                               x = 0.0;
                           });
    return mean_estimate(m, n_samples);
}

Estimate estimate_event_prob_impl(int q, int N, double beta, const CylinderEvent& event, int L,
                                  long n_samples, uint64_t seed, int threads, bool parallel) {
    check_args(q, N, beta, L, n_samples);
    for (size_t b = 0; b < event.family.size(); ++b)
        if (event.family[b].q() != q)
            throw std::invalid_argument("estimate_event_prob: event q mismatch");
    const double base = std::pow(static_cast<double>(q), -beta);
    Moments m = run_blocks(n_samples, seed, threads, parallel,
                           [&](uint64_t s, double& x, double& y, long& capped) {
                               std::vector<PAdicSample> state;
                               fill_state(state, q, N, L, s);
                               long k = 0;
                               for (int i = 0; i < N; ++i)
                                   for (int j = i + 1; j < N; ++j) {
                                       int v = valuation_capped(state[static_cast<size_t>(i)],
                                                                state[static_cast<size_t>(j)]);
                                       if (v >= L) ++capped;
                                       k += v;
                                   }
                               y = powi(base, k);
                               x = state_in_event(state, event) ? y : 0.0;
                           });
    return ratio_estimate(m, n_samples);
}

Estimate estimate_multi_Z_impl(int q, const ChargeProfile& profile,
                               const std::vector<long>& counts, double beta, int L,
                               long n_samples, uint64_t seed, int threads, bool parallel) {
    if (counts.size() != profile.species())
        throw std::invalid_argument("estimate_multi_Z: one count per species");
    long total = 0;
    for (long c : counts) total += c;
    check_args(q, static_cast<int>(total), beta, L, n_samples);
    const double base = std::pow(static_cast<double>(q), -beta);
    const size_t M = profile.species();
    Moments m = run_blocks(
        n_samples, seed, threads, parallel,
        [&](uint64_t s, double& x, double& y, long& capped) {
            std::vector<PAdicSample> flat;
            fill_state(flat, q, static_cast<int>(total), L, s);
            // species boundaries partition the flat state in order
            long k = 0;
            size_t off_l = 0;
            for (size_t l = 0; l < M; ++l) {
                long Q2 = static_cast<long>(profile.charges[l]) * profile.charges[l];
                for (long i = 0; i < counts[l]; ++i)
                    for (long j = i + 1; j < counts[l]; ++j) {
                        int v = valuation_capped(flat[off_l + static_cast<size_t>(i)],
                                                 flat[off_l + static_cast<size_t>(j)]);
                        if (v >= L) ++capped;
                        k += Q2 * v;
                    }
                size_t off_m = off_l + static_cast<size_t>(counts[l]);
                for (size_t mm = l + 1; mm < M; ++mm) {
                    long QQ = static_cast<long>(profile.charges[l]) * profile.charges[mm];
                    for (long i = 0; i < counts[l]; ++i)
                        for (long j = 0; j < counts[mm]; ++j) {
                            int v = valuation_capped(flat[off_l + static_cast<size_t>(i)],
                                                     flat[off_m + static_cast<size_t>(j)]);
                            if (v >= L) ++capped;
                            k += QQ * v;
                        }
                    off_m += static_cast<size_t>(counts[mm]);
                }
                off_l += static_cast<size_t>(counts[l]);
            }
            y = powi(base, k);
            x = 0.0;
        });
    return mean_estimate(m, n_samples);
}

} // namespace

Estimate estimate_Z(int q, int N, double beta, int L, long n_samples, uint64_t seed,
                    int threads) {
    return estimate_Z_impl(q, N, beta, L, n_samples, seed, threads, true);
}

Estimate estimate_Z_serial(int q, int N, double beta, int L, long n_samples, uint64_t seed) {
    return estimate_Z_impl(q, N, beta, L, n_samples, seed, 0, false);
}

Estimate estimate_event_prob(int q, int N, double beta, const CylinderEvent& event, int L,
                             long n_samples, uint64_t seed, int threads) {
    return estimate_event_prob_impl(q, N, beta, event, L, n_samples, seed, threads, true);
}

Estimate estimate_event_prob_serial(int q, int N, double beta, const CylinderEvent& event,
                                    int L, long n_samples, uint64_t seed) {
    return estimate_event_prob_impl(q, N, beta, event, L, n_samples, seed, 0, false);
}

Estimate estimate_multi_Z(int q, const ChargeProfile& profile, const std::vector<long>& counts,
                          double beta, int L, long n_samples, uint64_t seed, int threads) {
    return estimate_multi_Z_impl(q, profile, counts, beta, L, n_samples, seed, threads, true);
}

Estimate estimate_multi_Z_serial(int q, const ChargeProfile& profile,
                                 const std::vector<long>& counts, double beta, int L,
                                 long n_samples, uint64_t seed) {
    return estimate_multi_Z_impl(q, profile, counts, beta, L, n_samples, seed, 0, false);
}

double cap_bias_bound(const Estimate& e, int q, double beta, int L, long pair_count) {
    if (e.n_samples <= 0) return 0.0;
    double rate = static_cast<double>(e.capped_valuations) /
                  (static_cast<double>(e.n_samples) * std::max<long>(pair_count, 1));
    return std::pow(static_cast<double>(q), -beta * L) * static_cast<double>(pair_count) * rate;
}

} // namespace ultragas
