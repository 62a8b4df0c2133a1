#include "doctest.h"

#include <random>

#include "ultragas/rational_function.hpp"

using namespace ultragas;

namespace {

RationalFunction rf(std::vector<long> num, std::vector<long> den) {
    auto mk = [](const std::vector<long>& v) {
        std::vector<BigRat> c;
        c.reserve(v.size());
        for (long x : v) c.emplace_back(x);
        return UPoly(std::move(c));
    };
    return RationalFunction(mk(num), mk(den));
}

std::mt19937 rng(20240917);

BigRat random_rat() {
    std::uniform_int_distribution<long> num(-6, 6), den(1, 5);
    return BigRat(num(rng), den(rng));
}

UPoly random_poly(int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    int d = deg(rng);
    std::vector<BigRat> c(static_cast<size_t>(d) + 1);
    for (auto& x : c) x = random_rat();
    return UPoly(std::move(c));
}

RationalFunction random_rf(int max_deg) {
    UPoly den;
    do {
        den = random_poly(max_deg);
    } while (den.is_zero());
    return RationalFunction(random_poly(max_deg), den);
}

} // namespace

TEST_CASE("BigRat canonical form and serialization") {
    CHECK(BigRat(2, 4) == BigRat(1, 2));
    CHECK(BigRat(3, -6) == BigRat(-1, 2));
    CHECK(BigRat(3, -6).denominator() == 2);
    CHECK(BigRat(0, 7).str() == "0/1");
    CHECK(BigRat(3, 4).str() == "3/4");
    CHECK(BigRat::from_string("3/4") == BigRat(3, 4));
    CHECK(BigRat::from_string("-12") == BigRat(-12));
    CHECK_THROWS_AS(BigRat(1, 0), std::domain_error);
    CHECK_THROWS_AS(BigRat(1) / BigRat(0), std::domain_error);
    CHECK_THROWS_AS(BigRat::from_string("x/y"), std::invalid_argument);
    CHECK(BigRat(2, 3).pow(-2) == BigRat(9, 4));
}

TEST_CASE("UPoly arithmetic and division") {
    UPoly a({{BigRat(1), BigRat(2), BigRat(1)}});  // 1 + 2u + u^2
    UPoly b({{BigRat(1), BigRat(1)}});             // 1 + u
    CHECK(a.degree() == 2);
    CHECK((b * b) == a);
    UPoly q, r;
    UPoly::divrem(a, b, q, r);
    CHECK(q == b);
    CHECK(r.is_zero());
    CHECK_THROWS_AS(UPoly::divrem(a, UPoly(), q, r), std::domain_error);
    CHECK(UPoly(BigRat(0)).is_zero());
    CHECK(UPoly().degree() == -1);
    // trailing-zero trim
    CHECK(UPoly({{BigRat(1), BigRat(0)}}).degree() == 0);
}

TEST_CASE("polynomial gcd: spec pole-check cases") {
    // den = 3 - u, g = u^2 - 9: share the root u = 3
    UPoly den({{BigRat(3), BigRat(-1)}});
    UPoly g2({{BigRat(-9), BigRat(0), BigRat(1)}});
    CHECK(rf_has_root_in_common(den, g2));
    // den = 3 - u, g = u^3 - 9: coprime
    UPoly g3({{BigRat(-9), BigRat(0), BigRat(0), BigRat(1)}});
    CHECK_FALSE(rf_has_root_in_common(den, g3));
    // gcd(f, f) of positive degree
    CHECK(rf_has_root_in_common(den, den));
    CHECK_THROWS_AS(rf_has_root_in_common(UPoly(), den), std::invalid_argument);
}

TEST_CASE("polynomial gcd on randomized products") {
    for (int iter = 0; iter < 60; ++iter) {
        UPoly a = random_poly(4), b = random_poly(4), h = random_poly(3);
        if (a.is_zero() || b.is_zero() || h.is_zero()) continue;
        UPoly g = UPoly::gcd(a * h, b * h);
        // h divides the gcd of (ah, bh)
        CHECK(UPoly::divides(h, g));
        CHECK(UPoly::divides(g, a * h));
        CHECK(UPoly::divides(g, b * h));
        CHECK(g.leading() > BigRat(0));
    }
}

TEST_CASE("RationalFunction identities from the operation contracts") {
    RationalFunction x = rf({0, 1}, {1});
    CHECK(RationalFunction() + x == x);
    // (q-1)/(q-u) + 0, q = 3
    RationalFunction z2 = rf({2}, {3, -1});
    CHECK(z2 + RationalFunction() == z2);
    // 1/(1-u) + (-u)/(1-u) = 1
    CHECK(rf({1}, {1, -1}) + rf({0, -1}, {1, -1}) == RationalFunction(1));
    CHECK(x * RationalFunction(1) == x);
    // (q-u)(q-1)/(q-u) = q-1
    CHECK(rf({3, -1}, {1}) * z2 == RationalFunction(2));
    CHECK_THROWS_AS(RationalFunction(1) / RationalFunction(), std::domain_error);
}

TEST_CASE("RationalFunction evaluation") {
    RationalFunction z2 = rf({2}, {3, -1});  // (q-1)/(q-u) at q=3
    CHECK(z2.eval(BigRat(1)) == BigRat(1));
    CHECK(z2.eval(BigRat(1, 3)) == BigRat(3, 4));
    CHECK(z2.eval(BigRat(0)) == BigRat(2, 3));
    CHECK_THROWS_AS(z2.eval(BigRat(3)), std::domain_error);
}

TEST_CASE("taylor expansion: geometric series and constants") {
    RationalFunction geo = rf({1}, {1, -1});
    auto c = geo.taylor(3);
    REQUIRE(c.size() == 4);
    for (const auto& v : c) CHECK(v == BigRat(1));
    auto k = RationalFunction(BigRat(5, 7)).taylor(4);
    CHECK(k[0] == BigRat(5, 7));
    for (size_t i = 1; i < k.size(); ++i) CHECK(k[i].is_zero());
    CHECK_THROWS_AS(rf({1}, {0, 1}).taylor(2), std::domain_error);
}

TEST_CASE("taylor expansion matches the digit-agreement oracle") {
    // Oracle: for two independent uniform elements of Z_3 at depth 4, the
    // probability that exactly the first k digits agree is found by
    // exhaustive enumeration of all 3^4 x 3^4 digit pairs.
    const int q = 3, depth = 4;
    long total = 1;
    for (int i = 0; i < 2 * depth; ++i) total *= q;
    std::vector<long> hits(static_cast<size_t>(depth), 0);
    for (long a = 0; a < 81; ++a)
        for (long b = 0; b < 81; ++b) {
            long x = a, y = b;
            int k = 0;
            while (k < depth && x % q == y % q) {
                ++k;
                x /= q;
                y /= q;
            }
            if (k < depth) ++hits[static_cast<size_t>(k)];
        }
    RationalFunction z2 = rf({2}, {3, -1});
    auto got = z2.taylor(2);
    for (int k = 0; k <= 2; ++k)
        CHECK(got[static_cast<size_t>(k)] == BigRat(hits[static_cast<size_t>(k)], total));
    CHECK(got[0] == BigRat(2, 3));
    CHECK(got[1] == BigRat(2, 9));
    CHECK(got[2] == BigRat(2, 27));
}

TEST_CASE("taylor remainder starts at degree K+1") {
    for (int iter = 0; iter < 20; ++iter) {
        RationalFunction f = random_rf(3);
        if (f.den().coeff(0).is_zero()) continue;
        const int K = 4;
        auto c = f.taylor(K);
        std::vector<BigRat> cc(c.begin(), c.end());
        RationalFunction approx(UPoly(std::move(cc)), UPoly(BigRat(1)));
        RationalFunction rem = f - approx;
        if (rem.is_zero()) continue;
        auto tail = rem.taylor(K);
        for (const auto& v : tail) CHECK(v.is_zero());
    }
}

TEST_CASE("canonical form is idempotent and scale-invariant") {
    for (int iter = 0; iter < 40; ++iter) {
        RationalFunction f = random_rf(4);
        UPoly h = random_poly(3);
        if (h.is_zero()) continue;
        RationalFunction g(f.num() * h, f.den() * h);
        CHECK(f == g);
        RationalFunction again(f.num(), f.den());
        CHECK(again == f);
        CHECK(f.den().leading() > BigRat(0));
        CHECK(f.den().content() == BigRat(1));
    }
}

TEST_CASE("ring axioms hold exactly on random triples") {
    for (int iter = 0; iter < 25; ++iter) {
        RationalFunction a = random_rf(3), b = random_rf(3), c = random_rf(3);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == RationalFunction());
        if (!c.is_zero()) CHECK((a / c) * c == a);
    }
}

TEST_CASE("negative powers of u are cleared into num/den") {
    RationalFunction um3 = RationalFunction::upow(-3);
    CHECK(um3.num() == UPoly(BigRat(1)));
    CHECK(um3.den() == UPoly::upow(3));
    CHECK(RationalFunction::upow(3) * um3 == RationalFunction(1));
}
