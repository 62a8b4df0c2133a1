#include "ultragas/canonical.hpp"

#include <functional>
#include <stdexcept>

namespace ultragas {

namespace {

// Weak compositions of N into q labeled parts, grouped by the multiset of
// nonzero parts: visit(parts, arrangements) where arrangements counts the
// compositions realizing that multiset.
void for_each_partition(int N, int q, const std::function<void(const std::vector<int>&, const mpz_class&)>& visit) {
    std::vector<int> parts;
    std::function<void(int, int, int)> rec = [&](int left, int max_part, int slots) {
        if (left == 0) {
            mpz_class arr = 1;  // q! / ((q-k)! * prod multiplicities!)
            int k = static_cast<int>(parts.size());
            for (int i = 0; i < k; ++i) arr *= q - i;
            int run = 1;
            for (size_t i = 1; i < parts.size(); ++i) {
                if (parts[i] == parts[i - 1]) {
                    ++run;
                    arr /= run;
                } else {
                    run = 1;
                }
            }
            visit(parts, arr);
            return;
        }
        if (slots == 0) return;
        for (int p = std::min(left, max_part); p >= 1; --p) {
            parts.push_back(p);
            rec(left - p, p, slots - 1);
            parts.pop_back();
        }
    };
    rec(N, N, q);
}

} // namespace

CanonicalTable::CanonicalTable(int q) : q_(q) {
    if (q < 2) throw std::invalid_argument("CanonicalTable: q must be >= 2");
    z_.push_back(RationalFunction(1));  // Z(0) = 1
    z_.push_back(RationalFunction(1));  // Z(1) = 1
}

const RationalFunction& CanonicalTable::Z(int N) {
    if (N < 0) throw std::invalid_argument("CanonicalTable: N must be >= 0");
    while (computed_up_to() < N) z_.push_back(compute(computed_up_to() + 1));
    return z_[static_cast<size_t>(N)];
}

RationalFunction CanonicalTable::compute(int N) const {
    // Z(N) = N!/(q^N - q u^C(N,2)) * sum' over occupancy vectors of
    // prod_r u^C(n_r,2) Z(n_r)/n_r!, the sum excluding the q single-coset
    // vectors. Compositions sharing a multiset of parts contribute equal
    // terms, so they are enumerated once with an arrangement count.
    RationalFunction acc;
    for_each_partition(N, q_, [&](const std::vector<int>& parts, const mpz_class& arr) {
        if (parts.size() == 1 && parts[0] == N) return;  // excluded by sum'
        RationalFunction term{BigRat(arr)};
        long upow_total = 0;
        BigRat fact(1);
        for (int p : parts) {
            upow_total += choose2(p);
            fact *= factorial_rat(p);
            if (p >= 2) term = term * z_[static_cast<size_t>(p)];
        }
        term = term * RationalFunction(factorial_rat(N) / fact);
        if (upow_total > 0)
            term = term * RationalFunction::upow(static_cast<int>(upow_total));
        acc += term;
    });
    BigRat qN = BigRat(q_).pow(N);
    UPoly denom = UPoly(qN) - UPoly::monomial(BigRat(q_), static_cast<int>(choose2(N)));
    return acc / RationalFunction(denom, UPoly(BigRat(1)));
}

RationalFunction CanonicalTable::Z_ball(int N, int r) {
    if (r < 0) throw std::invalid_argument("Z_ball: radius exponent must be >= 0");
    if (r == 0) return Z(N);
    RationalFunction scale = RationalFunction::upow(static_cast<int>(r * choose2(N)));
    return scale * RationalFunction(BigRat(1) / BigRat(q_).pow(static_cast<long>(r) * N)) * Z(N);
}

std::vector<BigRat> CanonicalTable::energy_distribution(int N, int kmax) {
    std::vector<BigRat> p = Z(N).taylor(kmax);
    // The tail coefficients are probabilities of a discrete law, so the
    // series at u = 1 must resum to exactly 1.
    if (Z(N).eval(BigRat(1)) != BigRat(1))
        throw std::logic_error("energy_distribution: R_N(1) != 1");
    return p;
}

RationalFunction quad_rec_residual(int q, std::span<const RationalFunction> z, int N) {
    if (N < 1 || static_cast<int>(z.size()) <= N)
        throw std::invalid_argument("quad_rec_residual: need z[0..N]");
    RationalFunction acc;
    for (int n = 0; 2 * n <= N; ++n) {
        // terms n and N-n share the product Z(n)Z(N-n); fold them together
        RationalFunction prod = z[static_cast<size_t>(n)] * z[static_cast<size_t>(N - n)];
        BigRat fact = factorial_rat(n) * factorial_rat(N - n);
        RationalFunction coef =
            RationalFunction(BigRat(N - (q + 1) * n) / (fact * BigRat(q).pow(n))) *
            RationalFunction::upow(static_cast<int>(choose2(n)));
        if (2 * n != N) {
            int m = N - n;
            coef += RationalFunction(BigRat(N - (q + 1) * m) / (fact * BigRat(q).pow(m))) *
                    RationalFunction::upow(static_cast<int>(choose2(m)));
        }
        acc += coef * prod;
    }
    return acc;
}

bool CanonicalTable::verify_quad_rec(int N) {
    if (N < 1) throw std::invalid_argument("verify_quad_rec: N must be >= 1");
    Z(N);
    return quad_rec_residual(q_, std::span<const RationalFunction>(z_.data(), z_.size()), N)
        .is_zero();
}

bool CanonicalTable::abscissa_check(int N) {
    if (N < 2) throw std::invalid_argument("abscissa_check: N must be >= 2");
    UPoly g = UPoly::monomial(BigRat(1), N) - UPoly(BigRat(q_) * BigRat(q_));
    return rf_has_root_in_common(Z(N).den(), g);
}

} // namespace ultragas
