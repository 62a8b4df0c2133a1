#ifndef ULTRAGAS_RATIONAL_FUNCTION_HPP
#define ULTRAGAS_RATIONAL_FUNCTION_HPP

#include <vector>

#include "ultragas/upoly.hpp"

namespace ultragas {

/// Reduced ratio of two UPoly in the indeterminate u = q^(-beta).
/// Canonical form: gcd(num, den) = 1, den a primitive integer polynomial
/// with positive leading coefficient. Equality is field-wise comparison.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(BigRat(1)) {}
    RationalFunction(const BigRat& c) : num_(c), den_(BigRat(1)) {}
    RationalFunction(long c) : num_(BigRat(c)), den_(BigRat(1)) {}
    RationalFunction(UPoly num, UPoly den);

    /// u^k for any integer k; negative powers land in the denominator.
    static RationalFunction upow(int k);

    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

    /// Exact value at u0; throws std::domain_error at a pole.
    BigRat eval(const BigRat& u0) const;
    /// Floating evaluation at an mpf point (callers convert at the boundary).
    mpf_class eval_mpf(const mpf_class& u0) const;
    double eval_double(double u0) const;

    /// First K+1 Taylor coefficients at u = 0; throws if den(0) = 0.
    std::vector<BigRat> taylor(int K) const;

private:
    void reduce_content();
    UPoly num_, den_;
};

/// True iff gcd(f_den, g) has positive degree (shared root over the
/// algebraic closure).
bool rf_has_root_in_common(const UPoly& f_den, const UPoly& g);

} // namespace ultragas

#endif
