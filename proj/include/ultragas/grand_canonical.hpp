#ifndef ULTRAGAS_GRAND_CANONICAL_HPP
#define ULTRAGAS_GRAND_CANONICAL_HPP

#include "ultragas/canonical.hpp"
#include "ultragas/star_series.hpp"

namespace ultragas {

/// Exponential generating series Z(t, pi^ell o, beta) truncated at dmax:
/// coefficient N is u^(ell*C(N,2)) q^(-ell*N) Z(N, o, beta) / N!.
StarSeries gc_Z(CanonicalTable& table, int ell, int dmax);

/// Z(t, o, beta) = Z(t, m, beta)^q under the ordinary series product.
bool verify_gcz(CanonicalTable& table, int dmax);

/// Functional equation alpha(t) = (overline alpha(t/q))^q.
bool verify_functional_equation(CanonicalTable& table, int dmax);

/// Z(t, pi^ell o, beta) = Z(t, pi^(ell+1) o, beta)^(star^ell q).
bool verify_thm4(CanonicalTable& table, int ell, int dmax);

/// Occupancy law P{N_o = N} = Z(N, o, beta) t^N / (N! Z(t, o, beta)) at an
/// exact point (t0, u0), truncated at nmax with a certified tail bound.
struct OccupancyPmf {
    std::vector<BigRat> weights;  // unnormalized terms Z(N)(u0) t0^N / N!
    BigRat normalization;         // their sum (truncated Z)
    BigRat tail_bound;            // bound on the discarded tail of Z
};

OccupancyPmf occupancy_pmf(CanonicalTable& table, const BigRat& t0, const BigRat& u0,
                           int nmax);

/// Exact upper bound on sum_{N>nmax} t0^N/N! (requires t0 < nmax + 2).
BigRat exp_tail_bound(const BigRat& t0, int nmax);

} // namespace ultragas

#endif
