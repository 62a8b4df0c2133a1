#ifndef ULTRAGAS_RATIONAL_HPP
#define ULTRAGAS_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <utility>

namespace ultragas {

/// Exact arbitrary-precision rational, backed by GMP. Kept canonical at all
/// times: denominator > 0 and gcd(|num|, den) == 1.
class BigRat {
public:
    BigRat() : v_(0) {}
    BigRat(long n) : v_(static_cast<signed long>(n)) {}
    BigRat(int n) : v_(static_cast<signed long>(n)) {}

    BigRat(long num, long den) {
        if (den == 0) throw std::domain_error("BigRat: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    BigRat(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw std::domain_error("BigRat: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    explicit BigRat(const mpz_class& n) : v_(n) {}

    explicit BigRat(mpq_class v) : v_(std::move(v)) {
        if (v_.get_den() == 0) throw std::domain_error("BigRat: zero denominator");
        v_.canonicalize();
    }

    /// Parses "num/den" or a bare integer, base 10.
    static BigRat from_string(const std::string& s) {
        auto slash = s.find('/');
        mpz_class num, den;
        try {
            if (slash == std::string::npos) {
                num = mpz_class(s);
                den = 1;
            } else {
                num = mpz_class(s.substr(0, slash));
                den = mpz_class(s.substr(slash + 1));
            }
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("BigRat: unparseable value '" + s + "'");
        }
        return BigRat(num, den);
    }

    /// Serialized as "num/den" with an explicit denominator, base 10.
    std::string str() const {
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    double to_double() const { return v_.get_d(); }
    const mpq_class& raw() const { return v_; }

    BigRat operator-() const { return BigRat(mpq_class(-v_), already_canonical{}); }

    BigRat& operator+=(const BigRat& o) { v_ += o.v_; return *this; }
    BigRat& operator-=(const BigRat& o) { v_ -= o.v_; return *this; }
    BigRat& operator*=(const BigRat& o) { v_ *= o.v_; return *this; }
    BigRat& operator/=(const BigRat& o) {
        if (o.is_zero()) throw std::domain_error("BigRat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend BigRat operator+(BigRat a, const BigRat& b) { a += b; return a; }
    friend BigRat operator-(BigRat a, const BigRat& b) { a -= b; return a; }
    friend BigRat operator*(BigRat a, const BigRat& b) { a *= b; return a; }
    friend BigRat operator/(BigRat a, const BigRat& b) { a /= b; return a; }

    friend bool operator==(const BigRat& a, const BigRat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const BigRat& a, const BigRat& b) { return a.v_ != b.v_; }
    friend bool operator<(const BigRat& a, const BigRat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const BigRat& a, const BigRat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const BigRat& a, const BigRat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const BigRat& a, const BigRat& b) { return a.v_ >= b.v_; }

    /// Exact integer power, negative exponents allowed for nonzero values.
    BigRat pow(long e) const {
        if (e == 0) return BigRat(1);
        if (v_ == 0 && e < 0) throw std::domain_error("BigRat: 0^negative");
        mpz_class num, den;
        unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
        mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), ae);
        mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), ae);
        if (e < 0) std::swap(num, den);
        return BigRat(num, den);
    }

private:
    struct already_canonical {};
    BigRat(mpq_class v, already_canonical) : v_(std::move(v)) {}
    mpq_class v_;
};

inline BigRat factorial_rat(long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return BigRat(f);
}

inline mpz_class binomial_z(long n, long k) {
    if (k < 0 || k > n) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

/// n choose 2, the pair count that drives every energy exponent.
inline long choose2(long n) { return n * (n - 1) / 2; }

} // namespace ultragas

#endif
