#include "cmhecke/field.hpp"

#include <cmath>

namespace cmhecke {

const char* case_name(Ramification2 c) {
    switch (c) {
        case Ramification2::Odd: return "odd";
        case Ramification2::FourExact: return "4||D";
        case Ramification2::Eight: return "8||D";
    }
    return "?";
}

FieldData build_field(long long D) {
    if (!is_fundamental(D)) throw NotFundamentalError(D);
    FieldData K;
    K.D = D;
    if (D % 2) {
        K.two_case = Ramification2::Odd;
        K.B = static_cast<double>(D);
    } else {
        long long d = D / 4;
        K.d = d;
        if (d % 2) {
            K.two_case = Ramification2::FourExact;
            K.B = std::sqrt(2.0) * static_cast<double>(D);
        } else {
            K.two_case = Ramification2::Eight;
            K.B = 2.0 * static_cast<double>(D);
        }
    }
    for (const auto& f : factorize(D)) K.prime_divisors.push_back(f.p);
    K.genus_rank = static_cast<int>(K.prime_divisors.size()) - 1;
    K.h = static_cast<long long>(reduced_forms(D).size());
    K.unit_count = 2;
    K.special = (D == 3 || D == 4);
    return K;
}

int simplest_count(const FieldData& K) {
    return (K.D % 2 != 0 || K.D == 4) ? 1 : 2;
}

}  // namespace cmhecke
