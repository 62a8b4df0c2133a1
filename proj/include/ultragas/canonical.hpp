#ifndef ULTRAGAS_CANONICAL_HPP
#define ULTRAGAS_CANONICAL_HPP

#include <span>
#include <vector>

#include "ultragas/rational_function.hpp"

namespace ultragas {

/// Memoized table of canonical partition functions Z(N, o, beta) for fixed
/// residue size q, each held as a rational function in u = q^(-beta).
/// Built bottom-up; entries are immutable once computed, so a fully built
/// table is safe to share across threads.
class CanonicalTable {
public:
    explicit CanonicalTable(int q);

    int q() const { return q_; }
    int computed_up_to() const { return static_cast<int>(z_.size()) - 1; }

    /// Z(N, o, beta); computes and memoizes everything up to N.
    const RationalFunction& Z(int N);

    /// Z(N, B, beta) for a ball of radius exponent r:
    /// u^(r*C(N,2)) * q^(-rN) * Z(N, o, beta).
    RationalFunction Z_ball(int N, int r);

    /// Exact probabilities p_0..p_kmax that the total energy equals
    /// k * log q under uniform placement of N particles.
    std::vector<BigRat> energy_distribution(int N, int kmax);

    /// Cauchy-style quadratic identity among Z(0..N); holds exactly for a
    /// correct table.
    bool verify_quad_rec(int N);

    /// First real pole of the continuation sits at u^N = q^2: the reduced
    /// denominator of Z(N) shares a root with u^N - q^2.
    bool abscissa_check(int N);

private:
    RationalFunction compute(int N) const;
    int q_;
    std::vector<RationalFunction> z_;
};

/// Residual of the quadratic identity at N over an arbitrary coefficient
/// table z[0..N]; the zero function iff the identity holds.
RationalFunction quad_rec_residual(int q, std::span<const RationalFunction> z, int N);

} // namespace ultragas

#endif
