#include "cmhecke/characters.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace cmhecke {

namespace {

constexpr double kSqrt3over2 = 0.86602540378443864676;

long long mod_pos(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

Mu12 Mu12::from_sign(int s) {
    if (s != 1 && s != -1) throw std::invalid_argument("Mu12::from_sign expects +-1");
    return s == 1 ? one() : minus_one();
}

Mu12 Mu12::pow(long long e) const {
    return of(static_cast<int>(mod_pos(static_cast<long long>(k) * (e % 12), 12)));
}

int Mu12::order() const {
    return 12 / std::gcd(k, 12);
}

int Mu12::sign() const {
    if (!is_real()) throw std::logic_error("Mu12::sign on a non-real value");
    return k == 0 ? 1 : -1;
}

std::complex<double> Mu12::value() const {
    static const std::array<double, 12> co = {1, kSqrt3over2, 0.5,  0, -0.5, -kSqrt3over2,
                                              -1, -kSqrt3over2, -0.5, 0, 0.5, kSqrt3over2};
    return {co[static_cast<size_t>(k)], co[static_cast<size_t>(mod_pos(k - 3, 12))]};
}

double Mu12::real2() const {
    static const std::array<double, 12> two_cos = {2,  2 * kSqrt3over2,  1,  0, -1, -2 * kSqrt3over2,
                                                   -2, -2 * kSqrt3over2, -1, 0, 1,  2 * kSqrt3over2};
    return two_cos[static_cast<size_t>(k)];
}

AlgebraicInteger make_integer(const FieldData& K, long long x, long long y) {
    IntegerBasis b = (K.D % 2) ? IntegerBasis::Half : IntegerBasis::Sqrt;
    return {x, y, b};
}

long long norm(const AlgebraicInteger& b, const FieldData& K) {
    if (b.basis == IntegerBasis::Sqrt) {
        return b.x * b.x + b.y * b.y * *K.d;
    }
    return b.x * b.x + b.x * b.y + b.y * b.y * ((1 + K.D) / 4);
}

AlgebraicInteger mul(const AlgebraicInteger& a, const AlgebraicInteger& b, const FieldData& K) {
    if (a.basis != b.basis) throw WrongCaseError("mul: mixed integral bases");
    if (a.basis == IntegerBasis::Sqrt) {
        long long d = *K.d;
        return {a.x * b.x - d * a.y * b.y, a.x * b.y + a.y * b.x, IntegerBasis::Sqrt};
    }
    // omega = (1 + sqrt(-D))/2 satisfies omega^2 = omega - (1 + D)/4
    long long q = (1 + K.D) / 4;
    return {a.x * b.x - q * a.y * b.y, a.x * b.y + a.y * b.x + a.y * b.y, IntegerBasis::Half};
}

AlgebraicInteger neg(const AlgebraicInteger& a) {
    return {-a.x, -a.y, a.basis};
}

const LocalCharacter* CharacterSpec::local_at(long long p) const {
    for (const auto& l : locals)
        if (l.p == p) return &l;
    return nullptr;
}

bool CharacterSpec::all_twists_trivial() const {
    return std::all_of(locals.begin(), locals.end(),
                       [](const LocalCharacter& l) { return l.twist == 0; });
}

int hilbert2(long long a, long long b) {
    if (a == 0 || b == 0) throw std::invalid_argument("hilbert2: zero argument");
    int alpha = 0, beta = 0;
    while (a % 2 == 0) {
        a /= 2;
        ++alpha;
    }
    while (b % 2 == 0) {
        b /= 2;
        ++beta;
    }
    auto eps = [](long long u) { return mod_pos(u, 4) == 3; };       // (u-1)/2 mod 2
    auto omega = [](long long u) {                                    // (u^2-1)/8 mod 2
        long long m = mod_pos(u, 8);
        return m == 3 || m == 5;
    };
    int e = (eps(a) && eps(b)) ? 1 : 0;
    if (alpha % 2 && omega(b)) e ^= 1;
    if (beta % 2 && omega(a)) e ^= 1;
    return e ? -1 : 1;
}

int kappa2(long long x, long long D) {
    return hilbert2(x, -D);
}

std::vector<LocalCharacter> local_characters(const FieldData& K, long long p) {
    if (K.D % p != 0) throw InvalidPrimeError(p, K.D);
    std::vector<LocalCharacter> out;
    if (p == 2) {
        if (K.two_case == Ramification2::Eight) {
            for (int sign : {+1, -1})
                out.push_back({2, LocalKind::Eps2Eight, sign, 0, 5, 2});
            for (int sign : {+1, -1})
                out.push_back({2, LocalKind::Eps2Eight, sign, 1, 5, 4});
        } else {
            for (int sign : {+1, -1})
                for (int twist : {0, 2, 1, -1}) {
                    int index = twist == 0 ? 3 : (twist == 2 ? 5 : 7);
                    out.push_back({2, LocalKind::Eps2Four, sign, twist, index, 4});
                }
        }
    } else if (p == 3) {
        out.push_back({3, LocalKind::Eps3, 0, 0, 1, 2});
        out.push_back({3, LocalKind::Eps3, 0, 1, 2, 6});
        out.push_back({3, LocalKind::Eps3, 0, -1, 2, 6});
    } else {
        out.push_back({p, LocalKind::Eps0, 0, 0, 1, 2});
    }
    return out;
}

std::vector<CharacterSpec> simplest_characters(const FieldData& K) {
    if (K.special) throw SpecialDiscriminantError(K.D);
    std::vector<CharacterSpec> out;
    auto base_locals = [&](int sign2) {
        std::vector<LocalCharacter> ls;
        for (long long p : K.prime_divisors) {
            for (const auto& l : local_characters(K, p)) {
                if (l.twist != 0) continue;
                if (p == 2 && l.sign != sign2) continue;
                ls.push_back(l);
            }
        }
        return ls;
    };
    if (K.D % 2) {
        CharacterSpec s;
        s.field = K;
        s.locals = base_locals(0);
        s.id = "eps0";
        s.order = 2;
        out.push_back(std::move(s));
    } else {
        for (int sign : {+1, -1}) {
            CharacterSpec s;
            s.field = K;
            s.locals = base_locals(sign);
            s.eps2_on_sqrt_md = (sign == 1) ? Mu12::i() : Mu12::minus_i();
            s.id = sign == 1 ? "eps2+" : "eps2-";
            s.order = (K.two_case == Ramification2::FourExact) ? 4 : 2;
            out.push_back(std::move(s));
        }
    }
    return out;
}

namespace {

// inverse of 2 mod odd D
long long inv2_mod(long long D) {
    return (D + 1) / 2;
}

Mu12 eval_odd_case(const CharacterSpec& spec, const AlgebraicInteger& beta) {
    const long long D = spec.field.D;
    // reduce beta = x + y (1 + sqrt(-D))/2 modulo sqrt(-D) to the rational
    // residue x + y/2 in (Z/D)*
    long long t = mod_pos(beta.x + mod_pos(beta.y, D) * inv2_mod(D), D);
    return Mu12::from_sign(kronecker(-D, t));
}

Mu12 eval_four_exact(const CharacterSpec& spec, const AlgebraicInteger& beta) {
    const long long D = spec.field.D;
    const long long d = *spec.field.d;
    const long long n = beta.x, m = beta.y;
    Mu12 v;
    if (mod_pos(m, 2) == 0) {
        int base = kronecker(-D, n);
        v = Mu12::from_sign(mod_pos(m, 4) == 0 ? base : -base);
    } else {
        int base = kronecker(-1, m) * kronecker(n, d);
        int s = (mod_pos(n, 4) == 0) ? base : -base;
        v = Mu12::i() * Mu12::from_sign(s);
    }
    if (spec.eps2_on_sqrt_md == Mu12::minus_i()) v = v.conj();
    return v;
}

// Residue class of x + y sqrt(-d) in Z[sqrt(-d)] / (8, 4 sqrt(-d)), the
// quotient cutting out p_2^5 when 8||D.
struct Res8 {
    long long x, y;  // x mod 8, y mod 4
    bool operator==(const Res8&) const = default;
};

Res8 reduce8(long long x, long long y) {
    return {mod_pos(x, 8), mod_pos(y, 4)};
}

Res8 mul8(const Res8& a, const Res8& b, long long d) {
    return reduce8(a.x * b.x - d * a.y * b.y, a.x * b.y + a.y * b.x);
}

Mu12 eval_eight(const CharacterSpec& spec, const AlgebraicInteger& beta) {
    const FieldData& K = spec.field;
    const long long d = *K.d;
    int value_sign = 1;
    // odd local components: beta mod p_p is the rational residue x mod p
    for (long long p : K.prime_divisors) {
        if (p == 2) continue;
        value_sign *= kronecker(mod_pos(beta.x, p), p);
    }
    // eps_2 by decomposing beta over the generators -1, 3, 1 + sqrt(-d) of
    // (O_2 / p_2^5)*, a group of order 16
    const int k_m1 = kappa2(-1, K.D);
    const int k_3 = kappa2(3, K.D);
    const int s = spec.local_at(2)->sign;
    const Res8 target = reduce8(beta.x, beta.y);
    const Res8 g1 = reduce8(-1, 0), g2 = reduce8(3, 0), g3 = reduce8(1, 1);
    Res8 e1 = reduce8(1, 0);
    for (int j = 0; j < 2; ++j, e1 = mul8(e1, g1, d)) {
        Res8 e2 = e1;
        for (int k = 0; k < 2; ++k, e2 = mul8(e2, g2, d)) {
            Res8 e3 = e2;
            for (int l = 0; l < 4; ++l, e3 = mul8(e3, g3, d)) {
                if (e3 == target) {
                    int v2 = 1;
                    if (j) v2 *= k_m1;
                    if (k) v2 *= k_3;
                    if (l % 2) v2 *= s;
                    return Mu12::from_sign(v2 * value_sign);
                }
            }
        }
    }
    throw std::logic_error("eval_epsilon: unit not matched in (O_2/p_2^5)*");
}

}  // namespace

Mu12 eval_epsilon(const CharacterSpec& spec, const AlgebraicInteger& beta) {
    const FieldData& K = spec.field;
    if (!spec.all_twists_trivial())
        throw WrongCaseError("eval_epsilon: twisted local components are not evaluable");
    IntegerBasis want = (K.D % 2) ? IntegerBasis::Half : IntegerBasis::Sqrt;
    if (beta.basis != want) throw WrongCaseError("eval_epsilon: wrong integral basis for D");
    long long N = norm(beta, K);
    if (N == 0 || std::gcd(N, K.D) != 1)
        throw NotCoprimeError("eval_epsilon: N(beta) = " + std::to_string(N) +
                              " shares a factor with D = " + std::to_string(K.D));
    switch (K.two_case) {
        case Ramification2::Odd: return eval_odd_case(spec, beta);
        case Ramification2::FourExact: return eval_four_exact(spec, beta);
        case Ramification2::Eight: return eval_eight(spec, beta);
    }
    throw std::logic_error("unreachable");
}

Mu12 eval_epsilon_p2_coset(const CharacterSpec& spec, long long a, long long b) {
    const FieldData& K = spec.field;
    if (K.two_case != Ramification2::FourExact)
        throw WrongCaseError("eval_epsilon_p2_coset requires 4||D");
    if (!spec.all_twists_trivial())
        throw WrongCaseError("eval_epsilon_p2_coset: twisted local components are not evaluable");
    const long long d = *K.d;
    // beta = a + (1+d)b/2 + a sqrt(-d); N(beta) = (1+d)((2a+b)^2 + b^2 d)/4
    long long r = a + (1 + d) / 2 * b;
    long long N = r * r + a * a * d;
    if (N == 0 || std::gcd(N, K.D) != 1)
        throw NotCoprimeError("eval_epsilon_p2_coset: beta not coprime to D");
    long long n = 2 * a + b;
    Mu12 v;
    if (mod_pos(a, 2) == 0) {
        v = Mu12::from_sign(kronecker(-K.D, n));
    } else {
        v = Mu12::i() * Mu12::from_sign(kronecker(-K.D, n));
    }
    if (spec.eps2_on_sqrt_md == Mu12::minus_i()) v = v.conj();
    return v;
}

std::map<long long, int> conductor_exponents(const CharacterSpec& spec) {
    std::map<long long, int> out;
    for (const auto& l : spec.locals) out[l.p] = l.conductor_index;
    return out;
}

}  // namespace cmhecke
