#include "ultragas/grand_canonical.hpp"

#include <stdexcept>
#include <string>

namespace ultragas {

StarSeries gc_Z(CanonicalTable& table, int ell, int dmax) {
    if (ell < 0) throw std::invalid_argument("gc_Z: ell must be >= 0");
    StarSeries s(table.q(), dmax);
    for (int N = 0; N <= dmax; ++N) {
        RationalFunction c = table.Z_ball(N, ell) * RationalFunction(BigRat(1) / factorial_rat(N));
        s.set_coeff(N, std::move(c));
    }
    return s;
}

bool verify_gcz(CanonicalTable& table, int dmax) {
    if (dmax < 1) throw std::invalid_argument("verify_gcz: dmax must be >= 1");
    StarSeries whole = gc_Z(table, 0, dmax);
    StarSeries maximal = gc_Z(table, 1, dmax);
    return star_pow(maximal, table.q(), 0) == whole;
}

bool verify_functional_equation(CanonicalTable& table, int dmax) {
    if (dmax < 0) throw std::invalid_argument("verify_functional_equation: dmax must be >= 0");
    StarSeries whole = gc_Z(table, 0, dmax);
    StarSeries twisted = overline(substitute_t_scale(whole, BigRat(1, table.q())), 1);
    return star_pow(twisted, table.q(), 0) == whole;
}

bool verify_thm4(CanonicalTable& table, int ell, int dmax) {
    if (ell < 0) throw std::invalid_argument("verify_thm4: ell must be >= 0");
    StarSeries lhs = gc_Z(table, ell, dmax);
    StarSeries rhs = star_pow(gc_Z(table, ell + 1, dmax), table.q(), ell);
    return lhs == rhs;
}

BigRat exp_tail_bound(const BigRat& t0, int nmax) {
    // sum_{N>n} t^N/N! <= t^(n+1)/(n+1)! * 1/(1 - t/(n+2)) for t < n+2
    if (t0 < BigRat(0)) throw std::invalid_argument("exp_tail_bound: t0 must be >= 0");
    BigRat bound_den = BigRat(1) - t0 / BigRat(nmax + 2);
    if (bound_den.sign() <= 0)
        throw std::domain_error("exp_tail_bound: need t0 < nmax + 2");
    return t0.pow(nmax + 1) / factorial_rat(nmax + 1) / bound_den;
}

OccupancyPmf occupancy_pmf(CanonicalTable& table, const BigRat& t0, const BigRat& u0,
                           int nmax) {
    if (t0.sign() < 0) throw std::invalid_argument("occupancy_pmf: t0 must be >= 0");
    if (u0 < BigRat(0) || u0 > BigRat(1))
        throw std::invalid_argument("occupancy_pmf: u0 must lie in [0, 1]");
    if (nmax < 0) throw std::invalid_argument("occupancy_pmf: nmax must be >= 0");

    // Coefficients Z(N)(u0) lie in [0,1], so the discarded tail of Z is at
    // most the exp tail; Z itself is >= 1, which certifies the 1e-12 gate.
    const BigRat tol(1, 1000000000000L);
    BigRat tail;
    bool ok = false;
    try {
        tail = exp_tail_bound(t0, nmax);
        ok = tail < tol;
    } catch (const std::domain_error&) {
        ok = false;
    }
    if (!ok) {
        int need = nmax + 1;
        while (true) {
            try {
                if (exp_tail_bound(t0, need) < tol) break;
            } catch (const std::domain_error&) {
            }
            ++need;
        }
        throw std::domain_error("occupancy_pmf: tail bound not met at nmax=" +
                                std::to_string(nmax) + "; need nmax >= " + std::to_string(need));
    }

    OccupancyPmf out;
    out.tail_bound = tail;
    out.normalization = BigRat(0);
    BigRat tn(1);
    for (int N = 0; N <= nmax; ++N) {
        BigRat w = table.Z(N).eval(u0) * tn / factorial_rat(N);
        out.normalization += w;
        out.weights.push_back(std::move(w));
        tn *= t0;
    }
    return out;
}

} // namespace ultragas
