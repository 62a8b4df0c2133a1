#ifndef ULTRAGAS_UPOLY_HPP
#define ULTRAGAS_UPOLY_HPP

#include <vector>

#include "ultragas/rational.hpp"

namespace ultragas {

/// Dense univariate polynomial in u with exact rational coefficients,
/// index k holding the coefficient of u^k. The zero polynomial is the
/// empty coefficient sequence; otherwise the trailing coefficient is
/// nonzero.
class UPoly {
public:
    UPoly() = default;
    UPoly(const BigRat& c) { if (!c.is_zero()) c_.push_back(c); }
    UPoly(long c) : UPoly(BigRat(c)) {}
    explicit UPoly(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UPoly monomial(const BigRat& c, int k);
    static UPoly upow(int k) { return monomial(BigRat(1), k); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<BigRat>& coeffs() const { return c_; }
    BigRat coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : BigRat(0);
    }
    const BigRat& leading() const;

    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    friend UPoly operator+(UPoly a, const UPoly& b) { a += b; return a; }
    friend UPoly operator-(UPoly a, const UPoly& b) { a -= b; return a; }
    UPoly operator-() const;
    friend UPoly operator*(const UPoly& a, const UPoly& b);

    UPoly scaled(const BigRat& s) const;
    UPoly mul_upow(int k) const;

    BigRat eval(const BigRat& x) const;
    mpf_class eval_mpf(const mpf_class& x) const;

    /// Exact Euclidean division; throws on zero divisor.
    static void divrem(const UPoly& a, const UPoly& b, UPoly& quot, UPoly& rem);
    /// True iff b divides a exactly.
    static bool divides(const UPoly& b, const UPoly& a);

    /// Polynomial gcd, returned as a primitive integer polynomial with
    /// positive leading coefficient (modular algorithm; exact).
    static UPoly gcd(const UPoly& a, const UPoly& b);

    /// Content c such that (*this)/c has coprime integer coefficients;
    /// sign follows the leading coefficient. Zero polynomial has content 0.
    BigRat content() const;

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<BigRat> c_;
};

} // namespace ultragas

#endif
