#include "cmhecke/arith.hpp"

#include <algorithm>
#include <cstdlib>

namespace cmhecke {

int kronecker(long long a, long long n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int s = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) s = -s;
    }
    int v2 = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++v2;
    }
    if (v2 > 0) {
        if (a % 2 == 0) return 0;
        long long am8 = ((a % 8) + 8) % 8;
        if ((v2 & 1) && (am8 == 3 || am8 == 5)) s = -s;
    }
    // n odd > 0: Jacobi via reciprocity
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long long nm8 = n % 8;
            if (nm8 == 3 || nm8 == 5) s = -s;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) s = -s;
        a %= n;
    }
    return n == 1 ? s : 0;
}

std::vector<PrimeFactor> factorize(long long n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    std::vector<PrimeFactor> out;
    for (long long p = 2; p * p <= n; p == 2 ? p = 3 : p += 2) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

namespace {

bool squarefree(long long n) {
    for (long long p = 2; p * p <= n; p == 2 ? p = 3 : p += 2) {
        if (n % (p * p) == 0) return false;
    }
    return true;
}

}  // namespace

bool is_fundamental(long long D) {
    if (D < 3) return false;
    if (D % 4 == 3) return squarefree(D);
    if (D % 4 == 0) {
        long long m = D / 4;
        return (m % 4 == 1 || m % 4 == 2) && squarefree(m);
    }
    return false;
}

bool QuadraticForm::is_reduced() const {
    if (a <= 0) return false;
    long long ab = std::llabs(b);
    if (!(ab <= a && a <= c)) return false;
    if ((ab == a || a == c) && b < 0) return false;
    return true;
}

std::vector<QuadraticForm> reduced_forms(long long D) {
    if (!is_fundamental(D)) throw NotFundamentalError(D);
    std::vector<QuadraticForm> out;
    // |b| <= a <= sqrt(D/3) for reduced forms of discriminant -D
    for (long long a = 1; 3 * a * a <= D; ++a) {
        for (long long b = -a + 1; b <= a; ++b) {
            long long num = b * b + D;
            if (num % (4 * a)) continue;
            long long c = num / (4 * a);
            if (c < a) continue;
            if (b < 0 && (b == -a || a == c)) continue;  // excluded by reduction
            out.push_back({a, b, c});
        }
    }
    std::sort(out.begin(), out.end(), [](const QuadraticForm& f, const QuadraticForm& g) {
        if (f.a != g.a) return f.a < g.a;
        if (f.b != g.b) return f.b < g.b;
        return f.c < g.c;
    });
    return out;
}

long long ideal_count(long long n, long long D) {
    if (!is_fundamental(D)) throw NotFundamentalError(D);
    if (n < 1) throw std::invalid_argument("ideal_count: n must be positive");
    long long total = 0;
    for (long long m = 1; m * m <= n; ++m) {
        if (n % m) continue;
        total += kronecker(-D, m);
        long long q = n / m;
        if (q != m) total += kronecker(-D, q);
    }
    return total;
}

}  // namespace cmhecke
