#include "cmhecke/dimension.hpp"

#include <numeric>

namespace cmhecke {

bool image_constraint_ok(const EpsilonProfile& p) {
    int bound;
    if (std::gcd<long long, long long>(p.D, 6) == 1)
        bound = 2;
    else if (p.D % 3 != 0)
        bound = 4;
    else if (p.D % 2 != 0)
        bound = 6;
    else
        bound = 12;
    return bound % p.image_exponent == 0;
}

DimensionVerdict classify_dimension(const EpsilonProfile& p, long long h) {
    (void)h;  // the verdict encodes dim as a multiple of h
    if (p.D <= 4) throw SpecialDiscriminantError(p.D);
    if (!image_constraint_ok(p)) return {DimensionTag::ExceedsHUnknown, false};
    switch (p.order) {
        case 2:
            return {DimensionTag::EqualsH, true};
        case 4: {
            if (!p.val2) throw MissingValueError("classify_dimension: eps(2 a^2) required for order 4");
            bool eq = (p.D % 4 == 0) && p.D != 8 && p.val2->order() == 4;
            return {eq ? DimensionTag::EqualsH : DimensionTag::TwiceH, false};
        }
        case 6: {
            if (!p.val3) throw MissingValueError("classify_dimension: eps(3 a^2) required for order 6");
            int o = p.val3->order();
            bool eq = (p.D % 3 == 0) && (o == 2 || o == 6);
            return {eq ? DimensionTag::EqualsH : DimensionTag::TwiceH, false};
        }
        case 12: {
            if (!p.val2) throw MissingValueError("classify_dimension: eps(2 a^2) required for order 12");
            int o = p.val2->order();
            bool eq = (p.D % 12 == 0) && (o == 4 || o == 12);
            return {eq ? DimensionTag::EqualsH : DimensionTag::TwiceH, false};
        }
        default:
            throw std::invalid_argument("classify_dimension: order must be 2, 4, 6, or 12");
    }
}

DimensionVerdict classify_simplest(const CharacterSpec& spec) {
    if (spec.field.D <= 4) throw SpecialDiscriminantError(spec.field.D);
    const LocalCharacter* two = spec.local_at(2);
    if (two && (two->twist == 1 || two->twist == -1) && two->kind != LocalKind::Eps2Eight) {
        // the order-4 twist at 2: dim stays h exactly when d = 1 mod 8
        bool eq = (*spec.field.d % 8) == 1;
        return {eq ? DimensionTag::EqualsH : DimensionTag::TwiceH, false};
    }
    if (two && two->kind == LocalKind::Eps2Eight && two->twist != 0) {
        // d = 2 mod 4 can never be 1 mod 8
        return {DimensionTag::TwiceH, false};
    }
    int order = 1;
    for (const auto& l : spec.locals) order = std::lcm(order, l.order);
    return {DimensionTag::EqualsH, order <= 2};
}

namespace {

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

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long p = 2; p * p <= n; p == 2 ? p = 3 : p += 2)
        if (n % p == 0) return false;
    return true;
}

bool is_generator(long long g, long long p) {
    if (std::gcd(g, p) != 1) return false;
    for (const auto& f : factorize(p - 1))
        if (pow_mod(g, (p - 1) / f.p, p) == 1) return false;
    return true;
}

long long discrete_log(long long g, long long x, long long p) {
    long long cur = 1;
    x = ((x % p) + p) % p;
    for (long long k = 0; k < p - 1; ++k) {
        if (cur == x) return k;
        cur = (__int128)cur * g % p;
    }
    throw std::logic_error("discrete_log: target not in <g>");
}

}  // namespace

EpsilonProfile profile_from_split_primes(long long D, SplitExampleKind kind,
                                         const std::vector<std::pair<long long, long long>>& primes) {
    int N = kind == SplitExampleKind::SurjectiveMu4 ? 4
            : kind == SplitExampleKind::SurjectiveMu6 ? 6
                                                      : 12;
    if (primes.empty()) throw BadPrimeError("profile_from_split_primes: need at least one prime");
    Mu12 zeta = Mu12::of(12 / N);
    Mu12 at_m1 = Mu12::one(), at_2 = Mu12::one(), at_3 = Mu12::one();
    std::vector<long long> seen;
    for (auto [p, g] : primes) {
        if (!is_prime(p)) throw BadPrimeError(std::to_string(p) + " is not prime");
        if (std::find(seen.begin(), seen.end(), p) != seen.end())
            throw BadPrimeError("repeated prime " + std::to_string(p));
        seen.push_back(p);
        if ((p - 1) % N != 0)
            throw BadPrimeError(std::to_string(p) + " admits no surjection onto mu_" + std::to_string(N));
        bool congruent = (kind == SplitExampleKind::SurjectiveMu4 && p % 4 == 1) ||
                         (kind == SplitExampleKind::SurjectiveMu6 && p % 2 == 1 && p % 3 == 1) ||
                         (kind == SplitExampleKind::SurjectiveMu12 && p % 12 == 1);
        if (!congruent) throw BadPrimeError(std::to_string(p) + " fails the congruence condition");
        if (kronecker(-D, p) == -1)
            throw BadPrimeError(std::to_string(p) + " is inert in Q(sqrt(-" + std::to_string(D) + "))");
        if (!is_generator(g, p))
            throw BadPrimeError(std::to_string(g) + " does not generate (Z/" + std::to_string(p) + ")*");
        at_m1 = at_m1 * zeta.pow(((p - 1) / 2) % N);
        at_2 = at_2 * zeta.pow(discrete_log(g, 2, p) % N);
        at_3 = at_3 * zeta.pow(discrete_log(g, 3, p) % N);
    }
    if (!(at_m1 == Mu12::minus_one()))
        throw NotOddError("profile_from_split_primes: eps(-1) != -1 for this prime selection");
    EpsilonProfile prof;
    prof.order = N;
    prof.D = D;
    prof.val2 = at_2;
    prof.val3 = at_3;
    prof.image_exponent = N;
    return prof;
}

}  // namespace cmhecke
