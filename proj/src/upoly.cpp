#include "ultragas/upoly.hpp"

#include <cstdint>
#include <mutex>
#include <stdexcept>

namespace ultragas {

UPoly UPoly::monomial(const BigRat& c, int k) {
    if (k < 0) throw std::invalid_argument("UPoly: negative exponent");
    if (c.is_zero()) return UPoly();
    std::vector<BigRat> v(static_cast<size_t>(k) + 1, BigRat(0));
    v.back() = c;
    UPoly p;
    p.c_ = std::move(v);
    return p;
}

const BigRat& UPoly::leading() const {
    if (c_.empty()) throw std::domain_error("UPoly: leading() of zero polynomial");
    return c_.back();
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigRat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigRat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UPoly UPoly::operator-() const {
    UPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    // Multiply over the integers: mpz products avoid per-step mpq
    // canonicalization in the inner loop.
    BigRat ca = a.content(), cb = b.content();
    std::vector<mpz_class> za(a.c_.size()), zb(b.c_.size());
    for (size_t i = 0; i < a.c_.size(); ++i) za[i] = (a.c_[i] / ca).numerator();
    for (size_t i = 0; i < b.c_.size(); ++i) zb[i] = (b.c_[i] / cb).numerator();
    std::vector<mpz_class> zc(za.size() + zb.size() - 1, mpz_class(0));
    for (size_t i = 0; i < za.size(); ++i) {
        if (za[i] == 0) continue;
        for (size_t j = 0; j < zb.size(); ++j) {
            if (zb[j] == 0) continue;
            mpz_addmul(zc[i + j].get_mpz_t(), za[i].get_mpz_t(), zb[j].get_mpz_t());
        }
    }
    BigRat s = ca * cb;
    std::vector<BigRat> out(zc.size());
    for (size_t i = 0; i < zc.size(); ++i) out[i] = BigRat(zc[i]) * s;
    return UPoly(std::move(out));
}

UPoly UPoly::scaled(const BigRat& s) const {
    if (s.is_zero()) return UPoly();
    UPoly r(*this);
    for (auto& c : r.c_) c *= s;
    return r;
}

UPoly UPoly::mul_upow(int k) const {
    if (k < 0) throw std::invalid_argument("UPoly: negative shift");
    if (is_zero() || k == 0) return *this;
    UPoly r;
    r.c_.assign(static_cast<size_t>(k), BigRat(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

BigRat UPoly::eval(const BigRat& x) const {
    BigRat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

mpf_class UPoly::eval_mpf(const mpf_class& x) const {
    mpf_class acc(0, x.get_prec());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + mpf_class(it->raw(), x.get_prec());
    return acc;
}

void UPoly::divrem(const UPoly& a, const UPoly& b, UPoly& quot, UPoly& rem) {
    if (b.is_zero()) throw std::domain_error("UPoly: division by zero polynomial");
    rem = a;
    quot = UPoly();
    if (a.degree() < b.degree()) return;
    quot.c_.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, BigRat(0));
    const BigRat& lb = b.leading();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        BigRat t = rem.leading() / lb;
        quot.c_[static_cast<size_t>(shift)] = t;
        for (size_t i = 0; i < b.c_.size(); ++i)
            rem.c_[static_cast<size_t>(shift) + i] -= t * b.c_[i];
        rem.trim();
    }
    quot.trim();
}

BigRat UPoly::content() const {
    if (is_zero()) return BigRat(0);
    mpz_class g = 0, l = 1;
    for (const auto& c : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.numerator().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
    }
    BigRat r(g, l);
    return leading().sign() < 0 ? -r : r;
}

// ---------------------------------------------------------------------------
// Modular gcd: Euclid mod 62-bit primes, CRT lift, trial-division certificate.
// ---------------------------------------------------------------------------
namespace {

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline uint64_t invmod(uint64_t a, uint64_t p) { return powmod(a, p - 2, p); }

using ModPoly = std::vector<uint64_t>;  // dense, index = exponent

void trim_mod(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod b in Z_p[u], in place on a
void rem_mod(ModPoly& a, const ModPoly& b, uint64_t p) {
    uint64_t inv_lb = invmod(b.back(), p);
    while (a.size() >= b.size()) {
        uint64_t t = mulmod(a.back(), inv_lb, p);
        size_t shift = a.size() - b.size();
        if (t != 0) {
            for (size_t i = 0; i < b.size(); ++i) {
                uint64_t sub = mulmod(t, b[i], p);
                uint64_t& ai = a[shift + i];
                ai = (ai >= sub) ? ai - sub : ai + p - sub;
            }
        } else {
            a.pop_back();
            trim_mod(a);
            continue;
        }
        a.pop_back();
        trim_mod(a);
    }
}

ModPoly gcd_mod(ModPoly a, ModPoly b, uint64_t p) {
    trim_mod(a);
    trim_mod(b);
    while (!b.empty()) {
        rem_mod(a, b, p);
        std::swap(a, b);
    }
    if (!a.empty()) {
        uint64_t inv = invmod(a.back(), p);
        for (auto& c : a) c = mulmod(c, inv, p);
    }
    return a;
}

const uint64_t* prime_pool(size_t need) {
    static std::vector<uint64_t> primes;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    if (primes.size() < need) {
        mpz_class p = primes.empty() ? mpz_class(uint64_t(1) << 62) : mpz_class(primes.back());
        while (primes.size() < need) {
            mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
            primes.push_back(p.get_ui());
        }
    }
    return primes.data();
}

// Integer image of a rational polynomial: coefficients scaled to coprime
// integers, sign of the input preserved.
std::vector<mpz_class> primitive_int(const UPoly& f) {
    BigRat c = f.content();
    std::vector<mpz_class> out(f.coeffs().size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = (f.coeffs()[i] / c).numerator();
    return out;
}

UPoly from_int(const std::vector<mpz_class>& z) {
    std::vector<BigRat> v(z.size());
    for (size_t i = 0; i < z.size(); ++i) v[i] = BigRat(z[i]);
    return UPoly(std::move(v));
}

// Exact division test in Z[u] for primitive divisor; early abort on failure.
bool divides_int(const std::vector<mpz_class>& divisor, std::vector<mpz_class> f) {
    while (f.size() >= divisor.size()) {
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), f.back().get_mpz_t(),
                    divisor.back().get_mpz_t());
        if (r != 0) return false;
        size_t shift = f.size() - divisor.size();
        for (size_t i = 0; i < divisor.size(); ++i)
            mpz_submul(f[shift + i].get_mpz_t(), q.get_mpz_t(), divisor[i].get_mpz_t());
        if (f.back() != 0) return false;
        f.pop_back();
        while (!f.empty() && f.back() == 0) f.pop_back();
    }
    return f.empty();
}

void make_primitive(std::vector<mpz_class>& z) {
    mpz_class g = 0;
    for (const auto& c : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (z.back() < 0) g = -g;
    if (g != 0 && g != 1)
        for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

} // namespace

UPoly UPoly::gcd(const UPoly& A, const UPoly& B) {
    if (A.is_zero() && B.is_zero()) return UPoly();
    if (A.is_zero() || B.is_zero()) {
        auto z = primitive_int(A.is_zero() ? B : A);
        make_primitive(z);
        return from_int(z);
    }
    std::vector<mpz_class> f = primitive_int(A);
    std::vector<mpz_class> g = primitive_int(B);
    if (f.size() == 1 || g.size() == 1) return UPoly(BigRat(1));
    if (f.size() < g.size()) std::swap(f, g);

    mpz_class gamma;
    mpz_gcd(gamma.get_mpz_t(), f.back().get_mpz_t(), g.back().get_mpz_t());

    constexpr size_t kMaxPrimes = 2048;
    std::vector<mpz_class> lifted;   // symmetric residues of gamma * monic gcd
    mpz_class modulus = 0;
    size_t best_deg = SIZE_MAX;

    for (size_t pi = 0; pi < kMaxPrimes; ++pi) {
        uint64_t p = prime_pool(pi + 1)[pi];
        if (mpz_fdiv_ui(f.back().get_mpz_t(), p) == 0 ||
            mpz_fdiv_ui(g.back().get_mpz_t(), p) == 0)
            continue;
        ModPoly fp(f.size()), gp(g.size());
        for (size_t i = 0; i < f.size(); ++i) fp[i] = mpz_fdiv_ui(f[i].get_mpz_t(), p);
        for (size_t i = 0; i < g.size(); ++i) gp[i] = mpz_fdiv_ui(g[i].get_mpz_t(), p);
        ModPoly hp = gcd_mod(std::move(fp), std::move(gp), p);
        if (hp.size() == 1) return UPoly(BigRat(1));  // deg mod p >= deg gcd
        uint64_t gm = mpz_fdiv_ui(gamma.get_mpz_t(), p);
        for (auto& c : hp) c = mulmod(c, gm, p);

        size_t d = hp.size() - 1;
        if (d > best_deg) continue;  // unlucky prime
        bool stable = false;
        if (d < best_deg) {
            best_deg = d;
            modulus = p;
            lifted.assign(hp.size(), 0);
            mpz_class half_p = mpz_class(p) / 2;
            for (size_t i = 0; i < hp.size(); ++i) {
                lifted[i] = hp[i];
                if (lifted[i] > half_p) lifted[i] -= p;
            }
        } else {
            // CRT combine with symmetric lift
            mpz_class newmod = modulus * p, half = newmod / 2;
            uint64_t minv = invmod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
            stable = true;
            for (size_t i = 0; i < lifted.size(); ++i) {
                uint64_t cur = mpz_fdiv_ui(lifted[i].get_mpz_t(), p);
                uint64_t want = hp[i];
                uint64_t diff = (want >= cur) ? want - cur : want + p - cur;
                uint64_t t = mulmod(diff, minv, p);
                if (t != 0) {
                    lifted[i] += modulus * t;
                    if (lifted[i] > half) lifted[i] -= newmod;
                    stable = false;
                }
            }
            modulus = newmod;
        }
        if (stable || pi == 0 || modulus == p) {
            std::vector<mpz_class> cand = lifted;
            make_primitive(cand);
            if (divides_int(cand, f) && divides_int(cand, g)) return from_int(cand);
        }
    }
    // Unreachable in practice; monic Euclid over Q as a guaranteed fallback.
    UPoly a = from_int(f), b = from_int(g), q, r;
    while (!b.is_zero()) {
        UPoly::divrem(a, b, q, r);
        a = b;
        b = r;
    }
    auto z = primitive_int(a);
    make_primitive(z);
    return from_int(z);
}

bool UPoly::divides(const UPoly& b, const UPoly& a) {
    if (b.is_zero()) return a.is_zero();
    if (a.is_zero()) return true;
    if (a.degree() < b.degree()) return false;
    auto zb = primitive_int(b);
    make_primitive(zb);
    return divides_int(zb, primitive_int(a));
}

} // namespace ultragas
