#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "cmhecke/field.hpp"

namespace cmhecke {

// Element of the group of 12th roots of unity, stored as the exponent k of
// e^{2 pi i k / 12}. All character values live here; complex numbers only
// materialize at the analytic layer.
struct Mu12 {
    int k = 0;

    static Mu12 of(int e) { return Mu12{((e % 12) + 12) % 12}; }
    static Mu12 one() { return Mu12{0}; }
    static Mu12 minus_one() { return Mu12{6}; }
    static Mu12 i() { return Mu12{3}; }
    static Mu12 minus_i() { return Mu12{9}; }
    static Mu12 from_sign(int s);  // +1 -> 1, -1 -> -1

    Mu12 operator*(Mu12 o) const { return of(k + o.k); }
    bool operator==(const Mu12&) const = default;
    Mu12 pow(long long e) const;
    Mu12 conj() const { return of(-k); }
    int order() const;
    bool is_real() const { return k == 0 || k == 6; }
    int sign() const;  // +-1; only valid for real values
    std::complex<double> value() const;
    double real2() const;  // value + conj(value) = 2 cos(pi k / 6), exact table
};

// Element x + y sqrt(-d) of Z[sqrt(-d)] (basis Sqrt, 4 | D) or
// x + y (1 + sqrt(-D))/2 (basis Half, odd D).
enum class IntegerBasis { Sqrt, Half };

struct AlgebraicInteger {
    long long x = 0, y = 0;
    IntegerBasis basis = IntegerBasis::Sqrt;
};

AlgebraicInteger make_integer(const FieldData& K, long long x, long long y);
long long norm(const AlgebraicInteger& b, const FieldData& K);
AlgebraicInteger mul(const AlgebraicInteger& a, const AlgebraicInteger& b, const FieldData& K);
AlgebraicInteger neg(const AlgebraicInteger& a);

// One local component of a finite-order character supported on ramified
// primes. The twist index parametrizes the local sets: trivial twist 0 is the
// distinguished component entering the simplest characters.
enum class LocalKind {
    Eps0,       // p not dividing 6: the unique quadratic component
    Eps3,       // p = 3: twist in {-1, 0, 1}
    Eps2Eight,  // p = 2, 8||D: sign +-1, twist in {0, 1}
    Eps2Four,   // p = 2, 4||D: sign +-1, twist in {-1, 0, 1, 2}
};

struct LocalCharacter {
    long long p = 0;
    LocalKind kind = LocalKind::Eps0;
    int sign = 0;   // +-1 for the p = 2 kinds, 0 otherwise
    int twist = 0;
    int conductor_index = 1;
    int order = 2;
};

// A finite-part character eps = prod eps_p with conductor supported on the
// ramified primes. eps2_on_sqrt_md records the normalization eps_2(sqrt(-d))
// = +-i when 4||D; the two simplest characters of an even discriminant are
// complex conjugates of each other.
struct CharacterSpec {
    FieldData field;
    std::vector<LocalCharacter> locals;  // one per prime dividing D, ascending p
    Mu12 eps2_on_sqrt_md;                // only meaningful when 4||D
    int order = 2;                       // lcm of local orders
    std::string id;

    const LocalCharacter* local_at(long long p) const;
    bool all_twists_trivial() const;
};

// 2-adic Hilbert symbol (a, b)_2 for nonzero integers.
int hilbert2(long long a, long long b);

// kappa_2(x) = (x, -D)_2, the local quadratic character attached to K at 2.
int kappa2(long long x, long long D);

// The full local set E_p for p | D. Sizes: 1 (p not dividing 6), 3 (p = 3),
// 4 (p = 2 with 8||D), 8 (p = 2 with 4||D). Throws InvalidPrimeError.
std::vector<LocalCharacter> local_characters(const FieldData& K, long long p);

// The simplest characters: prod eps_p^0 for odd D, the two sign branches of
// eps_2 times prod eps_p^0 for even D > 4. Throws SpecialDiscriminantError
// for D in {3, 4}.
std::vector<CharacterSpec> simplest_characters(const FieldData& K);

// eps(beta) for beta coprime to D. Only simplest specs (all twists trivial)
// are evaluable. Throws NotCoprimeError when gcd(N(beta), D) > 1.
Mu12 eval_epsilon(const CharacterSpec& spec, const AlgebraicInteger& beta);

// eps on beta = alpha0 (a + b (1 - sqrt(-d))/2) with alpha0 = 1 + sqrt(-d),
// the generators of the ideals in the class of p_2 (4||D only, b odd).
Mu12 eval_epsilon_p2_coset(const CharacterSpec& spec, long long a, long long b);

// Conductor exponent e_p per ramified prime.
std::map<long long, int> conductor_exponents(const CharacterSpec& spec);

}  // namespace cmhecke
