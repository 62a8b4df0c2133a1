#include "ultragas/rational_function.hpp"

#include <stdexcept>

namespace ultragas {

namespace {

UPoly exact_quot(const UPoly& a, const UPoly& b) {
    UPoly q, r;
    UPoly::divrem(a, b, q, r);
    return q;
}

} // namespace

void RationalFunction::reduce_content() {
    if (num_.is_zero()) {
        den_ = UPoly(BigRat(1));
        return;
    }
    BigRat s = den_.content();
    den_ = den_.scaled(BigRat(1) / s);
    num_ = num_.scaled(BigRat(1) / s);
}

RationalFunction::RationalFunction(UPoly num, UPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    UPoly g = UPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = exact_quot(num_, g);
        den_ = exact_quot(den_, g);
    }
    reduce_content();
}

RationalFunction RationalFunction::upow(int k) {
    RationalFunction r;
    if (k >= 0) {
        r.num_ = UPoly::upow(k);
        r.den_ = UPoly(BigRat(1));
    } else {
        r.num_ = UPoly(BigRat(1));
        r.den_ = UPoly::upow(-k);
    }
    return r;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    RationalFunction r;
    UPoly g = UPoly::gcd(a.den_, b.den_);
    if (g.degree() == 0) {
        r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
        r.den_ = a.den_ * b.den_;
    } else {
        UPoly bd = exact_quot(a.den_, g);
        UPoly dd = exact_quot(b.den_, g);
        UPoly t = a.num_ * dd + b.num_ * bd;
        // gcd(t, full denominator) divides g, so one small gcd suffices
        UPoly h = UPoly::gcd(t, g);
        if (h.degree() > 0) {
            t = exact_quot(t, h);
            g = exact_quot(g, h);
        }
        r.num_ = std::move(t);
        r.den_ = g * bd * dd;
    }
    r.reduce_content();
    return r;
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return RationalFunction();
    RationalFunction r;
    UPoly g1 = UPoly::gcd(a.num_, b.den_);
    UPoly g2 = UPoly::gcd(b.num_, a.den_);
    const UPoly an = g1.degree() > 0 ? exact_quot(a.num_, g1) : a.num_;
    const UPoly bd = g1.degree() > 0 ? exact_quot(b.den_, g1) : b.den_;
    const UPoly bn = g2.degree() > 0 ? exact_quot(b.num_, g2) : b.num_;
    const UPoly ad = g2.degree() > 0 ? exact_quot(a.den_, g2) : a.den_;
    r.num_ = an * bn;
    r.den_ = ad * bd;
    r.reduce_content();
    return r;
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("RationalFunction: division by zero");
    if (a.is_zero()) return RationalFunction();
    RationalFunction inv;
    inv.num_ = b.den_;
    inv.den_ = b.num_;
    inv.reduce_content();
    return a * inv;
}

BigRat RationalFunction::eval(const BigRat& u0) const {
    BigRat d = den_.eval(u0);
    if (d.is_zero()) throw std::domain_error("RationalFunction: evaluation at a pole");
    return num_.eval(u0) / d;
}

mpf_class RationalFunction::eval_mpf(const mpf_class& u0) const {
    mpf_class d = den_.eval_mpf(u0);
    if (d == 0) throw std::domain_error("RationalFunction: evaluation at a pole");
    return num_.eval_mpf(u0) / d;
}

double RationalFunction::eval_double(double u0) const {
    mpf_class x(u0, 256);
    return eval_mpf(x).get_d();
}

std::vector<BigRat> RationalFunction::taylor(int K) const {
    if (K < 0) throw std::invalid_argument("RationalFunction: taylor(K < 0)");
    BigRat d0 = den_.coeff(0);
    if (d0.is_zero()) throw std::domain_error("RationalFunction: pole at u = 0");
    std::vector<BigRat> out(static_cast<size_t>(K) + 1, BigRat(0));
    for (int k = 0; k <= K; ++k) {
        BigRat s = num_.coeff(k);
        for (int j = 1; j <= k; ++j) s -= den_.coeff(j) * out[static_cast<size_t>(k - j)];
        out[static_cast<size_t>(k)] = s / d0;
    }
    return out;
}

bool rf_has_root_in_common(const UPoly& f_den, const UPoly& g) {
    if (f_den.is_zero() || g.is_zero())
        throw std::invalid_argument("rf_has_root_in_common: zero input");
    return UPoly::gcd(f_den, g).degree() > 0;
}

} // namespace ultragas
