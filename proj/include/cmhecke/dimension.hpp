#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cmhecke/characters.hpp"

namespace cmhecke {

// The data the dimension criterion depends on: the order of eps, the values
// eps(2 a^2) and eps(3 a^2) at auxiliary elements coprime to the conductor,
// and the smallest N with Im(eps) inside mu_N.
struct EpsilonProfile {
    int order = 2;          // in {2, 4, 6, 12}
    long long D = 0;
    std::optional<Mu12> val2;
    std::optional<Mu12> val3;
    int image_exponent = 2;
};

enum class DimensionTag { EqualsH, TwiceH, ExceedsHUnknown };

struct DimensionVerdict {
    DimensionTag tag = DimensionTag::EqualsH;
    bool scalar_restriction = false;  // dim = h via a CM elliptic curve over the Hilbert class field
};

// Image bound by the divisibility of D: mu_2 if gcd(6,D)=1, mu_4 if 3 does
// not divide D, mu_6 if D odd, mu_12 if 6 | D.
bool image_constraint_ok(const EpsilonProfile& profile);

// dim A(chi) in {h, 2h} from the profile; ExceedsHUnknown when the image
// bound fails (the dimension then exceeds h but is not determined here).
DimensionVerdict classify_dimension(const EpsilonProfile& profile, long long h);

// Verdict for a simplest spec, or a simplest spec whose p = 2 component was
// replaced by an order-4 twist: then dim = h iff d = D/4 = 1 mod 8.
DimensionVerdict classify_simplest(const CharacterSpec& spec);

// Constructions from surjective characters on split/ramified primes:
// mu_4 needs p = 1 mod 4, mu_6 needs odd p = 1 mod 3, mu_12 needs p = 1 mod 12.
enum class SplitExampleKind { SurjectiveMu4, SurjectiveMu6, SurjectiveMu12 };

// Builds eps = prod eps_p with eps_p(generator) a primitive root of unity of
// the requested order, and derives the profile (val2 = eps(2), val3 = eps(3))
// by discrete logarithms. Throws BadPrimeError on congruence/splitting/
// generator failures and NotOddError when eps(-1) != -1.
EpsilonProfile profile_from_split_primes(long long D, SplitExampleKind kind,
                                         const std::vector<std::pair<long long, long long>>& primes);

}  // namespace cmhecke
