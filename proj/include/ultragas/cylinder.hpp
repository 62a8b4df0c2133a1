#ifndef ULTRAGAS_CYLINDER_HPP
#define ULTRAGAS_CYLINDER_HPP

#include <vector>

#include "ultragas/canonical.hpp"
#include "ultragas/star_series.hpp"
#include "ultragas/ultrametric.hpp"

namespace ultragas {

/// Conjunction event {N_B = n}: each ball of a pairwise disjoint family
/// holds exactly its prescribed particle count.
struct CylinderEvent {
    BallFamily family;
    std::vector<long> occupancy;

    CylinderEvent() = default;
    CylinderEvent(BallFamily f, std::vector<long> n);
    long total() const;
};

/// Thrown when a complement enumeration would exceed the composition guard.
class enumeration_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// P_N{N_B = n} for a family covering o with occupancies summing to N
/// (complete-family product formula; exact).
RationalFunction prob_canonical_full(CanonicalTable& table, int N, const CylinderEvent& event);

/// P_N{N_B = n} for occupancies summing to at most N: completes the family
/// with the minimal complement and sums the full formula over weak
/// compositions of the remaining particles.
RationalFunction prob_canonical(CanonicalTable& table, int N, const CylinderEvent& event);

/// Conditional independence across a ball B given {N_B = n}: the product
/// identity and the restriction identity both hold exactly.
bool conditional_factorization_check(CanonicalTable& table, int N, const Ball& B, long n,
                                     const CylinderEvent& inner, const CylinderEvent& outer);

/// Grand canonical generating series Z(t, {N_B = n}, beta), truncated at
/// dmax, by coset-tree descent (level-1 overline and t -> t/q per level).
StarSeries gc_cylinder_gf(CanonicalTable& table, const CylinderEvent& event, int dmax);

/// Grand canonical probability of the event at exact (t0, u0) with a
/// certified truncation error.
struct CylinderProb {
    BigRat value;        // truncated ratio Z(t0, A)/Z(t0, o)
    double value_d;
    double error_bound;  // certified bound on |true - value|
    int dmax_used;
};

CylinderProb gc_cylinder_prob(CanonicalTable& table, const CylinderEvent& event,
                              const BigRat& t0, const BigRat& u0, double tolerance);

} // namespace ultragas

#endif
