#include "doctest.h"

#include <cmath>
#include <numeric>
#include <vector>

#include "cmhecke/arith.hpp"

using namespace cmhecke;

namespace {

// Euler-criterion route, independent of the reciprocity loop in kronecker()
long long pow_mod(long long a, long long e, long long m) {
    long long r = 1 % m;
    a %= m;
    if (a < 0) a += m;
    while (e) {
        if (e & 1) r = (__int128)r * a % m;
        a = (__int128)a * a % m;
        e >>= 1;
    }
    return r;
}

int legendre(long long a, long long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    return pow_mod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

int slow_kronecker(long long a, long long n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int s = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) s = -s;
    }
    for (const auto& f : factorize(n)) {
        int component;
        if (f.p == 2) {
            if (a % 2 == 0) return 0;
            long long m = ((a % 8) + 8) % 8;
            component = (m == 1 || m == 7) ? 1 : -1;
        } else {
            component = legendre(a, f.p);
        }
        for (int e = 0; e < f.e; ++e) s *= component;
        if (s == 0) return 0;
    }
    return s;
}

struct Rng {
    unsigned long long s = 0x2545F4914F6CDD1Dull;
    long long next(long long lo, long long hi) {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return lo + (long long)(s % (unsigned long long)(hi - lo + 1));
    }
};

}  // namespace

TEST_CASE("kronecker fixed values") {
    CHECK(kronecker(2, 7) == 1);
    CHECK(kronecker(2, 5) == -1);
    CHECK(kronecker(-20, 3) == 1);
    for (long long a : {-7LL, -1LL, 0LL, 1LL, 2LL, 15LL}) CHECK(kronecker(a, 1) == 1);
    CHECK(kronecker(1, 0) == 1);
    CHECK(kronecker(-1, 0) == 1);
    CHECK(kronecker(2, 0) == 0);
    CHECK(kronecker(0, 5) == 0);
    CHECK(kronecker(4, 2) == 0);
    CHECK(kronecker(-7, -1) == -1);
    CHECK(kronecker(7, -1) == 1);
}

TEST_CASE("kronecker agrees with the Euler-criterion oracle") {
    for (long long a = -200; a <= 200; ++a)
        for (long long n = -200; n <= 200; ++n) {
            CAPTURE(a);
            CAPTURE(n);
            CHECK(kronecker(a, n) == slow_kronecker(a, n));
        }
}

TEST_CASE("kronecker is completely multiplicative in both arguments") {
    // nonzero entries; a zero next to a negative companion trips over the
    // (0/-1) = 1 convention and is pinned by the fixed-value cases instead
    for (long long a = -40; a <= 40; ++a)
        for (long long b = -40; b <= 40; ++b) {
            if (a == 0 || b == 0) continue;
            for (long long n : {-15LL, -8LL, -3LL, -1LL, 1LL, 2LL, 9LL, 15LL, 21LL, 32LL})
                CHECK(kronecker(a * b, n) == kronecker(a, n) * kronecker(b, n));
        }
    Rng rng;
    for (int i = 0; i < 20000; ++i) {
        long long a = rng.next(1, 200) * (rng.next(0, 1) ? 1 : -1);
        long long b = rng.next(1, 200) * (rng.next(0, 1) ? 1 : -1);
        long long m = rng.next(1, 200) * (rng.next(0, 1) ? 1 : -1);
        long long n = rng.next(1, 200) * (rng.next(0, 1) ? 1 : -1);
        CHECK(kronecker(a * b, n) == kronecker(a, n) * kronecker(b, n));
        CHECK(kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n));
    }
}

TEST_CASE("factorize") {
    auto f84 = factorize(84);
    REQUIRE(f84.size() == 3);
    CHECK(f84[0].p == 2);
    CHECK(f84[0].e == 2);
    CHECK(f84[1].p == 3);
    CHECK(f84[1].e == 1);
    CHECK(f84[2].p == 7);
    CHECK(f84[2].e == 1);
    CHECK(factorize(1).empty());
    auto f20 = factorize(20);
    REQUIRE(f20.size() == 2);
    CHECK(f20[0].p == 2);
    CHECK(f20[0].e == 2);
    CHECK(f20[1].p == 5);
    CHECK(f20[1].e == 1);
    for (long long n = 1; n <= 2000; ++n) {
        long long prod = 1;
        long long prev = 0;
        for (const auto& f : factorize(n)) {
            CHECK(f.p > prev);
            prev = f.p;
            for (int e = 0; e < f.e; ++e) prod *= f.p;
        }
        CHECK(prod == n);
    }
}

TEST_CASE("fundamental discriminant test") {
    for (long long D : {3LL, 4LL, 7LL, 8LL, 11LL, 15LL, 20LL, 24LL, 40LL, 84LL, 148LL})
        CHECK(is_fundamental(D));
    for (long long D : {1LL, 2LL, 5LL, 9LL, 12LL, 16LL, 18LL, 21LL, 25LL, 28LL, 32LL, 45LL, 48LL, 60LL})
        CHECK(!is_fundamental(D));
}

TEST_CASE("reduced forms and class numbers") {
    auto f20 = reduced_forms(20);
    REQUIRE(f20.size() == 2);
    CHECK(f20[0].a == 1);
    CHECK(f20[0].b == 0);
    CHECK(f20[0].c == 5);
    CHECK(f20[1].a == 2);
    CHECK(f20[1].b == 2);
    CHECK(f20[1].c == 3);

    auto f4 = reduced_forms(4);
    REQUIRE(f4.size() == 1);
    CHECK(f4[0].a == 1);
    CHECK(f4[0].b == 0);
    CHECK(f4[0].c == 1);

    CHECK(reduced_forms(23).size() == 3);

    CHECK_THROWS_AS(reduced_forms(12), NotFundamentalError);
    CHECK_THROWS_AS(reduced_forms(16), NotFundamentalError);
    CHECK_THROWS_AS(reduced_forms(21), NotFundamentalError);

    for (long long D = 3; D <= 500; ++D) {
        if (!is_fundamental(D)) continue;
        bool principal = false;
        for (const auto& f : reduced_forms(D)) {
            CHECK(f.is_reduced());
            CHECK(f.discriminant() == -D);
            if (D % 4 == 0 && f.a == 1 && f.b == 0 && f.c == D / 4) principal = true;
            if (D % 4 == 3 && f.a == 1 && f.b == 1 && f.c == (D + 1) / 4) principal = true;
        }
        CHECK(principal);
    }
}

TEST_CASE("ideal_count basics and multiplicativity") {
    for (long long D : {7LL, 20LL, 40LL, 84LL}) CHECK(ideal_count(1, D) == 1);
    CHECK(ideal_count(3, 20) == 2);
    CHECK(ideal_count(2, 20) == 1);
    Rng rng;
    for (int i = 0; i < 2000; ++i) {
        long long m = rng.next(1, 1000), n = rng.next(1, 1000);
        if (std::gcd(m, n) != 1) continue;
        CHECK(ideal_count(m * n, 20) == ideal_count(m, 20) * ideal_count(n, 20));
        CHECK(ideal_count(m * n, 84) == ideal_count(m, 84) * ideal_count(n, 84));
    }
}

TEST_CASE("ideal_count equals half the form representation count") {
    const long long nmax = 2000;
    for (long long D : {20LL, 84LL}) {
        std::vector<long long> reps(nmax + 1, 0);
        for (const auto& f : reduced_forms(D)) {
            // 4aQ = (2ax + by)^2 + D y^2 bounds both coordinates
            long long ylim = (long long)std::floor(std::sqrt(4.0 * double(f.a) * nmax / double(D))) + 1;
            long long xlim = (long long)std::floor(std::sqrt(4.0 * double(f.c) * nmax / double(D))) + 1;
            for (long long y = -ylim; y <= ylim; ++y)
                for (long long x = -xlim; x <= xlim; ++x) {
                    long long v = f.a * x * x + f.b * x * y + f.c * y * y;
                    if (v >= 1 && v <= nmax) ++reps[v];
                }
        }
        for (long long n = 1; n <= nmax; ++n) {
            CAPTURE(D);
            CAPTURE(n);
            CHECK(reps[n] == 2 * ideal_count(n, D));
        }
    }
}
