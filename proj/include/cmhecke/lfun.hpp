#pragma once

#include <optional>
#include <string>

#include "cmhecke/characters.hpp"

namespace cmhecke {

// Working precision is IEEE double (15+ significant digits). Every series is
// truncated so that the dropped tail is provably below target_abs_error.
struct NumericsConfig {
    double target_abs_error = 1e-10;
    long long max_terms = 200'000'000;
};

// theta(t) = h + 2 sum_{n>=1} a(n) e^{-2 pi n t / sqrt(D)} with a(n) the
// number of integral ideals of norm n. Satisfies theta(1/t) = t theta(t) and
// decreases to h as t -> infinity.
double theta(double t, const FieldData& K, const NumericsConfig& cfg);

// G(z, s) = sum_{n>0, m in Z} (-D/n) (m D conj(z) + n) |m D z + n|^{-2s}
// evaluated on the imaginary axis at z = i t / sqrt(D), where it is real.
// Direct summation needs s >= 3; s = 1 is served through the theta identity
// sqrt(D)/pi G(i t / sqrt(D), 1) = theta(t). Other s throw DomainError.
double eisenstein(double t, double s, const FieldData& K, const NumericsConfig& cfg);

// The odd-m part G(z, s) - G(2z, s), same calling conventions.
double eisenstein_odd(double t, double s, const FieldData& K, const NumericsConfig& cfg);

// Ideal classes entering the two-class combination.
enum class ClassSlot { Principal, P2 };

// L~(s, C, chi) = L(s, C, chi) + L(s, C, chi') summed over integral ideals in
// the class by direct lattice summation, using eval_epsilon for the principal
// class and eval_epsilon_p2_coset together with chi_p2_value for the class of
// p_2. Real-valued; 4||D only; s >= 3.
double partial_l_combined(double s, ClassSlot cls, const CharacterSpec& spec,
                          const NumericsConfig& cfg);

// Central value of the two-class combination:
// (2 pi / sqrt(D)) (1 + W) (theta(1/2) - theta(1)).
// Exactly 0.0 when W = -1 (the integer factor 1 + W vanishes).
double central_value(const CharacterSpec& spec, const NumericsConfig& cfg);

// Coefficient of the derivative series supported on u^2 + v^2 d with u > 0
// odd and v > 0 even: sum of eps(u + v sqrt(-d)) 2u. Real (the contributing
// eps values are +-1).
double series_coeff_a(long long n, const CharacterSpec& spec);

// Companion coefficient with u, v > 0 both odd: sum of (-D/u) 2u. Vanishes
// unless n = 2 mod 4.
double series_coeff_b(long long n, const FieldData& K);

// f(x) = Gamma(0, x)/x = E1(x)/x. Series minus log for x <= 1, continued
// fraction above; returns 0 once e^{-x} underflows.
double e1_over_x(double x);

struct DerivativeTerms {
    double R = 0, C1 = 0, C2 = 0;
    double LambdaPrime1 = 0;  // = 4 (R + C1 - C2)
};

// The three series of the central-derivative formula; requires W = -1
// (WrongSignError otherwise) and 4||D.
DerivativeTerms central_derivative(const CharacterSpec& spec, const NumericsConfig& cfg);

struct CentralReport {
    long long D = 0;
    std::string spec_id;
    int W = 0;
    double L1 = 0;
    double Lambda1 = 0;
    std::optional<double> LambdaPrime1;
    double R = 0, C1 = 0, C2 = 0;
    int ord = 0;  // = (1 - W)/2
    bool bounds_ok = true;
};

// Checks the derivative lower bounds: R > .5235B - .8458B^{3/4} - .3951B^{1/2},
// |C1| <= 2.789e-7 B (1%, slack), |C2| <= .0851 B, and, when B >= 42 sqrt(2),
// Lambda'(1)/4 >= .4385B - .8458B^{3/4} - .3951B^{1/2}. Returns false with a
// diagnostic naming each failed inequality.
bool derivative_bounds_ok(const FieldData& K, const CentralReport& report,
                          std::string* diagnostic = nullptr);

// Full report for one simplest character with 4||D: W, L(1), Lambda'(1) when
// W = -1, the series terms, the vanishing order (1 - W)/2, and the bound
// check.
CentralReport vanishing_order(const CharacterSpec& spec, const NumericsConfig& cfg);

}  // namespace cmhecke
