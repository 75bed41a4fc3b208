#pragma once

#include <complex>

#include "cmhecke/characters.hpp"
#include "cmhecke/lfun.hpp"

namespace cmhecke {

// Exact element q0 + q1 i + q2 sqrt(-d) + q3 i sqrt(-d) of Q(i, sqrt(-d)).
struct Rational {
    long long num = 0;
    long long den = 1;
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct CosetValue {
    Rational q0, q1, q2, q3;
    std::complex<double> to_complex(long long d) const;
    // exact |value|^2 as a rational (num, den)
    Rational abs_squared(long long d) const;
};

// Root number of a simplest character: (2/D) for odd D, (2/d) when 4||D,
// eps(1 + sqrt(-d)) when 8||D. Requires D > 4.
int root_number(const CharacterSpec& spec);

// chi(alpha0^{-1} p_2) = W (1 - eps_2(sqrt(-d))) alpha0^{-1} with
// alpha0 = 1 + sqrt(-d); exact coordinates over the denominator 1 + d.
// 4||D only.
CosetValue chi_p2_value(const CharacterSpec& spec);

// Local root number W(kappa_2, psi_2) for the standard additive character:
// i when 4||D; i kappa_2(2) or kappa_2(2) when 8||D according to the sign of
// kappa_2(-1). WrongCaseError for odd D.
Mu12 local_root_number_kappa2(const FieldData& K);

// Independent sign check: solves the identity
// L~(s, [p_2], chi) = 2^s W G_odd(i / (2 sqrt(D)), s) for W at s = s0 >= 3,
// requiring the ratio to land within 1e-4 of +-1. 4||D only.
int numeric_root_check(const CharacterSpec& spec, double s0, const NumericsConfig& cfg);

}  // namespace cmhecke
