#include "ultragas/star_series.hpp"

#include <stdexcept>

namespace ultragas {

namespace {

void require_compatible(const StarSeries& a, const StarSeries& b) {
    if (a.q() != b.q())
        throw std::invalid_argument("StarSeries: mismatched q");
    if (a.dmax() != b.dmax())
        throw std::invalid_argument("StarSeries: mismatched truncation degree");
}

} // namespace

StarSeries::StarSeries(int q, int dmax) : q_(q), dmax_(dmax) {
    if (q < 2) throw std::invalid_argument("StarSeries: q must be >= 2");
    if (dmax < 0) throw std::invalid_argument("StarSeries: dmax must be >= 0");
    c_.assign(static_cast<size_t>(dmax) + 1, RationalFunction());
}

StarSeries StarSeries::unit(int q, int dmax) {
    StarSeries s(q, dmax);
    s.c_[0] = RationalFunction(1);
    return s;
}

const RationalFunction& StarSeries::coeff(int n) const {
    if (n < 0 || n > dmax_) throw std::out_of_range("StarSeries: coefficient index");
    return c_[static_cast<size_t>(n)];
}

void StarSeries::set_coeff(int n, RationalFunction v) {
    if (n < 0 || n > dmax_) throw std::out_of_range("StarSeries: coefficient index");
    c_[static_cast<size_t>(n)] = std::move(v);
}

StarSeries operator+(const StarSeries& a, const StarSeries& b) {
    require_compatible(a, b);
    StarSeries r(a.q_, a.dmax_);
    for (int n = 0; n <= a.dmax_; ++n) r.c_[n] = a.c_[n] + b.c_[n];
    return r;
}

StarSeries operator-(const StarSeries& a, const StarSeries& b) {
    require_compatible(a, b);
    StarSeries r(a.q_, a.dmax_);
    for (int n = 0; n <= a.dmax_; ++n) r.c_[n] = a.c_[n] - b.c_[n];
    return r;
}

bool operator==(const StarSeries& a, const StarSeries& b) {
    return a.q_ == b.q_ && a.dmax_ == b.dmax_ && a.c_ == b.c_;
}

StarSeries star_mul(const StarSeries& a, const StarSeries& b, int level) {
    require_compatible(a, b);
    const int d = a.dmax();
    StarSeries r(a.q(), d);
    for (int n = 0; n <= d; ++n) {
        if (a.coeff(n).is_zero()) continue;
        for (int m = 0; m + n <= d; ++m) {
            if (b.coeff(m).is_zero()) continue;
            RationalFunction term = a.coeff(n) * b.coeff(m);
            if (level != 0 && n > 0 && m > 0)
                term = term * RationalFunction::upow(level * n * m);
            r.set_coeff(n + m, r.coeff(n + m) + term);
        }
    }
    return r;
}

StarSeries star_pow(const StarSeries& a, long J, int level) {
    if (J < 0) throw std::invalid_argument("star_pow: negative exponent");
    StarSeries r = StarSeries::unit(a.q(), a.dmax());
    for (long j = 0; j < J; ++j) r = star_mul(r, a, level);
    return r;
}

StarSeries overline(const StarSeries& a, int level) {
    StarSeries r(a.q(), a.dmax());
    for (int n = 0; n <= a.dmax(); ++n) {
        long e = static_cast<long>(level) * choose2(n);
        r.set_coeff(n, e == 0 ? a.coeff(n)
                              : a.coeff(n) * RationalFunction::upow(static_cast<int>(e)));
    }
    return r;
}

StarSeries underline(const StarSeries& a, int level) {
    return overline(a, -level);
}

StarSeries substitute_t_scale(const StarSeries& a, const BigRat& factor) {
    StarSeries r(a.q(), a.dmax());
    BigRat f(1);
    for (int n = 0; n <= a.dmax(); ++n) {
        r.set_coeff(n, a.coeff(n) * RationalFunction(f));
        f *= factor;
    }
    return r;
}

bool convolution_identity_check(const StarSeries& a, const StarSeries& b, int level) {
    StarSeries lhs = star_mul(overline(a, level), overline(b, level), level);
    StarSeries rhs = overline(star_mul(a, b, 0), level);
    return lhs == rhs;
}

} // namespace ultragas
