#include "ultragas/cylinder.hpp"

#include <functional>
#include <stdexcept>
#include <string>

namespace ultragas {

namespace {

// Weak compositions of n into k parts.
void for_each_composition(long n, size_t k, const std::function<void(const std::vector<long>&)>& visit) {
    std::vector<long> parts(k, 0);
    if (k == 0) {
        if (n == 0) visit(parts);
        return;
    }
    std::function<void(size_t, long)> rec = [&](size_t idx, long left) {
        if (idx + 1 == k) {
            parts[idx] = left;
            visit(parts);
            return;
        }
        for (long v = 0; v <= left; ++v) {
            parts[idx] = v;
            rec(idx + 1, left - v);
        }
    };
    rec(0, n);
}

mpz_class composition_count(long n, size_t k) {
    if (k == 0) return n == 0 ? 1 : 0;
    return binomial_z(n + static_cast<long>(k) - 1, static_cast<long>(k) - 1);
}

CylinderEvent extend_event(const CylinderEvent& base, const BallFamily& extra,
                           const std::vector<long>& extra_counts) {
    std::vector<Ball> balls = base.family.balls();
    balls.insert(balls.end(), extra.balls().begin(), extra.balls().end());
    std::vector<long> counts = base.occupancy;
    counts.insert(counts.end(), extra_counts.begin(), extra_counts.end());
    return CylinderEvent(BallFamily(std::move(balls)), std::move(counts));
}

} // namespace

CylinderEvent::CylinderEvent(BallFamily f, std::vector<long> n)
    : family(std::move(f)), occupancy(std::move(n)) {
    if (family.size() != occupancy.size())
        throw std::invalid_argument("CylinderEvent: one count per ball required");
    for (long c : occupancy)
        if (c < 0) throw std::invalid_argument("CylinderEvent: negative occupancy");
}

long CylinderEvent::total() const {
    long t = 0;
    for (long c : occupancy) t += c;
    return t;
}

RationalFunction prob_canonical_full(CanonicalTable& table, int N, const CylinderEvent& event) {
    if (event.total() != N)
        throw std::invalid_argument("prob_canonical_full: occupancies must sum to N");
    if (event.family.empty() ||
        !complement(event.family, Ball::whole(table.q())).empty())
        throw std::invalid_argument("prob_canonical_full: family must cover o");

    const auto& balls = event.family.balls();
    const auto& n = event.occupancy;
    long uexp = 0;
    BigRat scalar = factorial_rat(N);
    RationalFunction zprod(1);
    for (size_t k = 0; k < balls.size(); ++k) {
        for (size_t l = k + 1; l < balls.size(); ++l) {
            auto e = ball_distance(balls[k], balls[l]);
            uexp += static_cast<long>(*e) * n[k] * n[l];
        }
        long r = balls[k].radius_exp();
        uexp += r * choose2(n[k]);
        scalar /= BigRat(table.q()).pow(r * n[k]) * factorial_rat(n[k]);
        if (n[k] >= 2) zprod = zprod * table.Z(static_cast<int>(n[k]));
    }
    RationalFunction res = RationalFunction(scalar) * zprod;
    if (uexp > 0) res = res * RationalFunction::upow(static_cast<int>(uexp));
    return res / table.Z(N);
}

RationalFunction prob_canonical(CanonicalTable& table, int N, const CylinderEvent& event) {
    long held = event.total();
    if (held > N)
        throw std::invalid_argument("prob_canonical: occupancies exceed N");
    BallFamily rest = complement(event.family, Ball::whole(table.q()));
    long free_particles = N - held;
    if (rest.empty())
        return free_particles == 0 ? prob_canonical_full(table, N, event) : RationalFunction();

    mpz_class combos = composition_count(free_particles, rest.size());
    if (combos > 10000000)
        throw enumeration_limit_error("prob_canonical: " + combos.get_str() +
                                      " complement compositions exceed the 1e7 guard");
    RationalFunction acc;
    for_each_composition(free_particles, rest.size(), [&](const std::vector<long>& ell) {
        acc += prob_canonical_full(table, N, extend_event(event, rest, ell));
    });
    return acc;
}

namespace {

CylinderEvent descend_event(const CylinderEvent& e, int levels) {
    std::vector<Ball> balls;
    balls.reserve(e.family.size());
    for (const auto& b : e.family.balls()) {
        Ball cur = b;
        for (int i = 0; i < levels; ++i) cur = descend(cur);
        balls.push_back(std::move(cur));
    }
    return CylinderEvent(BallFamily(std::move(balls)), e.occupancy);
}

// P(inner event AND {N_B = n}), inner balls inside B; extra constraints may
// ride along untouched.
RationalFunction joint_with_count(CanonicalTable& table, int N, const Ball& B, long n,
                                  const CylinderEvent& inner, const CylinderEvent& extra) {
    long inner_held = inner.total();
    if (inner_held > n) return RationalFunction();
    BallFamily gaps = complement(inner.family, B);
    CylinderEvent base = extend_event(inner, extra.family, extra.occupancy);
    if (gaps.empty()) {
        if (inner_held != n) return RationalFunction();
        return prob_canonical(table, N, base);
    }
    RationalFunction acc;
    for_each_composition(n - inner_held, gaps.size(), [&](const std::vector<long>& ell) {
        acc += prob_canonical(table, N, extend_event(base, gaps, ell));
    });
    return acc;
}

} // namespace

bool conditional_factorization_check(CanonicalTable& table, int N, const Ball& B, long n,
                                     const CylinderEvent& inner, const CylinderEvent& outer) {
    if (n < 0 || n > N)
        throw std::invalid_argument("conditional_factorization_check: n out of range");
    for (const auto& b : inner.family.balls())
        if (!B.contains(b))
            throw std::invalid_argument("conditional_factorization_check: inner ball outside B");
    for (const auto& b : outer.family.balls())
        if (!disjoint(B, b))
            throw std::invalid_argument("conditional_factorization_check: outer ball meets B");

    CylinderEvent none;
    CylinderEvent just_count(BallFamily({B}), {n});
    RationalFunction joint_in = joint_with_count(table, N, B, n, inner, none);
    RationalFunction joint_both = joint_with_count(table, N, B, n, inner, outer);
    RationalFunction count_only = prob_canonical(table, N, just_count);
    RationalFunction joint_out =
        prob_canonical(table, N, extend_event(just_count, outer.family, outer.occupancy));

    // conditional independence across the boundary of B
    if (joint_both * count_only != joint_in * joint_out) return false;

    // restriction: the n particles in B follow the canonical law on B, which
    // descends to the canonical law on o
    RationalFunction restricted =
        prob_canonical(table, static_cast<int>(n), descend_event(inner, B.radius_exp()));
    return joint_in == count_only * restricted;
}

StarSeries gc_cylinder_gf(CanonicalTable& table, const CylinderEvent& event, int dmax) {
    const int q = table.q();
    if (event.family.empty()) return gc_Z(table, 0, dmax);
    for (size_t i = 0; i < event.family.size(); ++i) {
        if (event.family[i].radius_exp() == 0) {
            // disjointness forces the family to be {o}: the event {N_o = n}
            StarSeries s(q, dmax);
            long n = event.occupancy[i];
            if (n <= dmax)
                s.set_coeff(static_cast<int>(n),
                            table.Z(static_cast<int>(n)) *
                                RationalFunction(BigRat(1) / factorial_rat(n)));
            return s;
        }
    }
    StarSeries res = StarSeries::unit(q, dmax);
    for (int j = 0; j < q; ++j) {
        std::vector<Ball> balls;
        std::vector<long> counts;
        for (size_t i = 0; i < event.family.size(); ++i) {
            if (event.family[i].digits()[0] == j) {
                balls.push_back(descend(event.family[i]));
                counts.push_back(event.occupancy[i]);
            }
        }
        StarSeries g = gc_cylinder_gf(table, CylinderEvent(BallFamily(std::move(balls)),
                                                           std::move(counts)), dmax);
        res = star_mul(res, overline(substitute_t_scale(g, BigRat(1, q)), 1), 0);
    }
    return res;
}

CylinderProb gc_cylinder_prob(CanonicalTable& table, const CylinderEvent& event,
                              const BigRat& t0, const BigRat& u0, double tolerance) {
    if (t0.sign() < 0) throw std::invalid_argument("gc_cylinder_prob: t0 must be >= 0");
    if (u0 < BigRat(0) || u0 > BigRat(1))
        throw std::invalid_argument("gc_cylinder_prob: u0 must lie in [0, 1]");
    if (tolerance <= 0) throw std::invalid_argument("gc_cylinder_prob: tolerance must be > 0");

    const BigRat tol(mpq_class(tolerance));
    constexpr int kDmaxCap = 80;
    int dmax = static_cast<int>(event.total()) + 4;
    while (true) {
        StarSeries gf = gc_cylinder_gf(table, event, dmax);
        BigRat num(0), den(0), tn(1);
        for (int N = 0; N <= dmax; ++N) {
            num += gf.coeff(N).eval(u0) * tn;
            den += table.Z(N).eval(u0) * tn / factorial_rat(N);
            tn *= t0;
        }
        BigRat tail = exp_tail_bound(t0, dmax);
        BigRat value = num / den;
        BigRat lower = num / (den + tail);
        BigRat upper = (num + tail) / den;
        BigRat err = upper - value;
        if (value - lower > err) err = value - lower;
        if (err <= tol) {
            CylinderProb out;
            out.value = value;
            out.value_d = value.to_double();
            out.error_bound = err.to_double() * (1.0 + 1e-12);
            out.dmax_used = dmax;
            return out;
        }
        if (dmax >= kDmaxCap)
            throw std::domain_error(
                "gc_cylinder_prob: tolerance unattainable at dmax <= " +
                std::to_string(kDmaxCap));
        dmax = std::min(kDmaxCap, dmax + 8);
    }
}

} // namespace ultragas
