#ifndef ULTRAGAS_MULTICOMPONENT_HPP
#define ULTRAGAS_MULTICOMPONENT_HPP

#include <map>
#include <vector>

#include "ultragas/canonical.hpp"
#include "ultragas/padic_sample.hpp"

namespace ultragas {

/// Allowed species charges: distinct positive integers.
struct ChargeProfile {
    std::vector<int> charges;
    explicit ChargeProfile(std::vector<int> q);
    size_t species() const { return charges.size(); }
};

/// Total interaction exponent of a multi-species state at common digit
/// precision: the Boltzmann weight is u^k. Throws when a pair coincides to
/// full depth (valuation indistinguishable from infinity).
long multi_energy_exponent(const ChargeProfile& profile,
                           const std::vector<std::vector<PAdicSample>>& positions);

/// Quadratic charge form E(n) = sum Q_m^2 C(n_m,2) + sum_{l<m} Q_l Q_m n_l n_m
/// that scales one contraction level.
long charge_pair_exponent(const ChargeProfile& profile, const std::vector<long>& counts);

/// Memoized multi-species canonical partition functions Z(N, o, beta),
/// assembled from coset additivity and the contraction scaling, solved the
/// same way as the single-species recursion. Guarded at 12 total particles.
class MultiTable {
public:
    MultiTable(int q, ChargeProfile profile);

    int q() const { return q_; }
    const ChargeProfile& profile() const { return profile_; }

    const RationalFunction& Z(const std::vector<long>& counts);

private:
    RationalFunction compute(const std::vector<long>& counts);
    int q_;
    ChargeProfile profile_;
    std::map<std::vector<long>, RationalFunction> memo_;
};

/// Truncated multivariate series in t_1..t_M with RationalFunction
/// coefficients, truncated by total degree.
class MultiSeries {
public:
    MultiSeries(int q, size_t species, int dmax);

    int q() const { return q_; }
    int dmax() const { return dmax_; }
    size_t species() const { return species_; }
    const RationalFunction& coeff(const std::vector<long>& idx) const;
    void set_coeff(const std::vector<long>& idx, RationalFunction v);

    friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);
    friend bool operator==(const MultiSeries& a, const MultiSeries& b);
    friend bool operator!=(const MultiSeries& a, const MultiSeries& b) { return !(a == b); }

private:
    int q_;
    size_t species_;
    int dmax_;
    std::map<std::vector<long>, RationalFunction> c_;  // indices with sum <= dmax
    static const RationalFunction zero_;
};

/// Grand canonical multi-species series for o or m, truncated by total degree.
MultiSeries multi_gc_series(MultiTable& table, bool maximal_ideal, int dmax);

/// Z(t, o, beta) = Z(t, m, beta)^q on truncated multivariate series.
bool verify_multi_qpower(int q, const ChargeProfile& profile, int dmax);

} // namespace ultragas

#endif
