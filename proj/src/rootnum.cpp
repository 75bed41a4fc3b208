#include "cmhecke/rootnum.hpp"

#include <cmath>
#include <numeric>

namespace cmhecke {

std::complex<double> CosetValue::to_complex(long long d) const {
    double rd = std::sqrt(static_cast<double>(d));
    // sqrt(-d) = i sqrt(d) under the fixed embedding
    return {q0.to_double() - q3.to_double() * rd, q1.to_double() + q2.to_double() * rd};
}

Rational CosetValue::abs_squared(long long d) const {
    // with r = sqrt(d): |v|^2 = (q0 - q3 r)^2 + (q1 + q2 r)^2
    //                        = q0^2 + q1^2 + d (q2^2 + q3^2) + 2 r (q1 q2 - q0 q3)
    if (q1.num * q2.num != q0.num * q3.num)
        throw std::logic_error("CosetValue::abs_squared: |value|^2 is irrational");
    long long den = q0.den;
    long long num = q0.num * q0.num + q1.num * q1.num + d * (q2.num * q2.num + q3.num * q3.num);
    long long g = std::gcd(num, den * den);
    return {num / g, den * den / g};
}

int root_number(const CharacterSpec& spec) {
    const FieldData& K = spec.field;
    if (K.special) throw SpecialDiscriminantError(K.D);
    switch (K.two_case) {
        case Ramification2::Odd:
            return kronecker(2, K.D);
        case Ramification2::FourExact:
            return kronecker(2, *K.d);
        case Ramification2::Eight:
            return eval_epsilon(spec, make_integer(K, 1, 1)).sign();
    }
    throw std::logic_error("unreachable");
}

CosetValue chi_p2_value(const CharacterSpec& spec) {
    const FieldData& K = spec.field;
    if (K.two_case != Ramification2::FourExact)
        throw WrongCaseError("chi_p2_value requires 4||D");
    const long long d = *K.d;
    const long long W = root_number(spec);
    const long long den = 1 + d;
    // W (1 -+ i)(1 - sqrt(-d)) / (1 + d), the sign following eps_2(sqrt(-d))
    long long s = (spec.eps2_on_sqrt_md == Mu12::i()) ? 1 : -1;
    CosetValue v;
    v.q0 = {W, den};
    v.q1 = {-s * W, den};
    v.q2 = {-W, den};
    v.q3 = {s * W, den};
    return v;
}

Mu12 local_root_number_kappa2(const FieldData& K) {
    switch (K.two_case) {
        case Ramification2::Odd:
            throw WrongCaseError("local_root_number_kappa2: 2 is unramified for odd D");
        case Ramification2::FourExact:
            return Mu12::i();
        case Ramification2::Eight: {
            Mu12 k2 = Mu12::from_sign(kappa2(2, K.D));
            return kappa2(-1, K.D) == -1 ? Mu12::i() * k2 : k2;
        }
    }
    throw std::logic_error("unreachable");
}

int numeric_root_check(const CharacterSpec& spec, double s0, const NumericsConfig& cfg) {
    const FieldData& K = spec.field;
    if (K.two_case != Ramification2::FourExact)
        throw WrongCaseError("numeric_root_check requires 4||D");
    if (s0 < 3.0) throw DomainError("numeric_root_check: need s0 >= 3 for absolute convergence");
    double lattice = partial_l_combined(s0, ClassSlot::P2, spec, cfg);
    double eis = std::pow(2.0, s0) * eisenstein_odd(0.5, s0, K, cfg);
    double ratio = lattice / eis;
    if (std::fabs(std::fabs(ratio) - 1.0) > 1e-4)
        throw ConvergenceError("numeric_root_check: ratio " + std::to_string(ratio) +
                               " is not within 1e-4 of +-1");
    return ratio > 0 ? 1 : -1;
}

}  // namespace cmhecke
