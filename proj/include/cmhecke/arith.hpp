#pragma once

#include <vector>

#include "cmhecke/errors.hpp"

namespace cmhecke {

struct PrimeFactor {
    long long p;
    int e;
};

// Kronecker symbol (a/n), total on all integer pairs with the usual
// conventions: (a/0) = 1 iff a = +-1, (a/2) = 0 for even a and otherwise
// determined by a mod 8, (a/-1) = sign(a) with (0/-1) = 1.
int kronecker(long long a, long long n);

// Trial division, ascending primes. Intended range n <= 10^12.
std::vector<PrimeFactor> factorize(long long n);

// True iff -D is a fundamental discriminant: -D = 1 mod 4 squarefree, or
// -D = 4m with m squarefree and m = 2, 3 mod 4.
bool is_fundamental(long long D);

// Positive definite binary quadratic form a x^2 + b xy + c y^2.
struct QuadraticForm {
    long long a, b, c;
    long long discriminant() const { return b * b - 4 * a * c; }
    bool is_reduced() const;
};

// The complete set of reduced forms of discriminant -D, sorted by (a, b, c).
// Its length is the class number h(-D). Throws NotFundamentalError.
std::vector<QuadraticForm> reduced_forms(long long D);

// Number of integral ideals of norm n in Q(sqrt(-D)): sum over m | n of
// kronecker(-D, m). Throws NotFundamentalError.
long long ideal_count(long long n, long long D);

}  // namespace cmhecke
