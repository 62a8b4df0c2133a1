#ifndef ULTRAGAS_STAR_SERIES_HPP
#define ULTRAGAS_STAR_SERIES_HPP

#include <vector>

#include "ultragas/rational_function.hpp"

namespace ultragas {

/// Truncated power series in the fugacity t with RationalFunction
/// coefficients, index N holding the coefficient of t^N. All operations
/// preserve the truncation degree dmax; binary operations require equal
/// q and dmax.
class StarSeries {
public:
    StarSeries(int q, int dmax);
    static StarSeries unit(int q, int dmax);

    int q() const { return q_; }
    int dmax() const { return dmax_; }
    const RationalFunction& coeff(int n) const;
    void set_coeff(int n, RationalFunction v);
    const std::vector<RationalFunction>& coeffs() const { return c_; }

    friend StarSeries operator+(const StarSeries& a, const StarSeries& b);
    friend StarSeries operator-(const StarSeries& a, const StarSeries& b);
    friend bool operator==(const StarSeries& a, const StarSeries& b);
    friend bool operator!=(const StarSeries& a, const StarSeries& b) { return !(a == b); }

private:
    int q_;
    int dmax_;
    std::vector<RationalFunction> c_;
};

/// Level-l star product: coefficient of t^k is sum over n+m=k of
/// u^(l*n*m) a_n b_m. Level 0 is the ordinary series product.
StarSeries star_mul(const StarSeries& a, const StarSeries& b, int level);

/// J-fold star product; J = 0 gives the unity series.
StarSeries star_pow(const StarSeries& a, long J, int level);

/// Diagonal twist: coefficient n multiplied by u^(+-l*C(n,2)).
StarSeries overline(const StarSeries& a, int level);
StarSeries underline(const StarSeries& a, int level);

/// t -> factor * t: coefficient N multiplied by factor^N.
StarSeries substitute_t_scale(const StarSeries& a, const BigRat& factor);

/// overline(a) * overline(b) under star equals overline of the ordinary
/// product, exactly up to dmax.
bool convolution_identity_check(const StarSeries& a, const StarSeries& b, int level);

} // namespace ultragas

#endif
