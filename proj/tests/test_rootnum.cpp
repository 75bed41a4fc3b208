#include "doctest.h"

#include <cmath>

#include "cmhecke/rootnum.hpp"

using namespace cmhecke;

TEST_CASE("closed-form root numbers") {
    CHECK(root_number(simplest_characters(build_field(7)).front()) == 1);
    CHECK(root_number(simplest_characters(build_field(20)).front()) == -1);
    CHECK(root_number(simplest_characters(build_field(52)).front()) == -1);
    CHECK(root_number(simplest_characters(build_field(68)).front()) == 1);
    // 4||D: both sign branches share the root number (2/d)
    for (long long D : {20LL, 52LL, 68LL, 84LL}) {
        auto specs = simplest_characters(build_field(D));
        CHECK(root_number(specs[0]) == kronecker(2, D / 4));
        CHECK(root_number(specs[0]) == root_number(specs[1]));
    }
    // 8||D: the two branches are labelled by eps(1 + sqrt(-d)) = +-1
    auto s40 = simplest_characters(build_field(40));
    CHECK(root_number(s40[0]) == 1);
    CHECK(root_number(s40[1]) == -1);
    auto s24 = simplest_characters(build_field(24));
    CHECK(root_number(s24[0]) + root_number(s24[1]) == 0);
    // odd D: (2/D)
    for (long long D : {7LL, 11LL, 15LL, 23LL})
        CHECK(root_number(simplest_characters(build_field(D)).front()) == kronecker(2, D));
}

TEST_CASE("chi on the p_2 class coset") {
    FieldData K20 = build_field(20);
    auto specs = simplest_characters(K20);
    CosetValue v = chi_p2_value(specs[0]);
    // -(1 - i)(1 - sqrt(-5))/6
    CHECK(v.q0.num == -1);
    CHECK(v.q1.num == 1);
    CHECK(v.q2.num == 1);
    CHECK(v.q3.num == -1);
    CHECK(v.q0.den == 6);
    Rational n2 = v.abs_squared(5);
    CHECK(n2.num == 1);
    CHECK(n2.den == 3);  // 2/(1+d) = 2/6

    CosetValue w = chi_p2_value(specs[1]);
    CHECK(w.q0.num == v.q0.num);
    CHECK(w.q2.num == v.q2.num);
    CHECK(w.q1.num == -v.q1.num);
    CHECK(w.q3.num == -v.q3.num);

    for (long long D : {52LL, 68LL, 84LL}) {
        auto s = simplest_characters(build_field(D)).front();
        Rational r = chi_p2_value(s).abs_squared(D / 4);
        long long d = D / 4;
        CHECK(r.num * (1 + d) == 2 * r.den);
        double mod2 = std::norm(chi_p2_value(s).to_complex(d));
        CHECK(mod2 == doctest::Approx(2.0 / double(1 + d)).epsilon(1e-14));
    }
    CHECK_THROWS_AS(chi_p2_value(simplest_characters(build_field(40)).front()), WrongCaseError);
}

TEST_CASE("local root number of kappa_2") {
    CHECK(local_root_number_kappa2(build_field(20)) == Mu12::i());
    CHECK(local_root_number_kappa2(build_field(68)) == Mu12::i());
    // D = 40: kappa_2(-1) = -1 and kappa_2(2) = -1, so i kappa_2(2) = -i
    CHECK(local_root_number_kappa2(build_field(40)) == Mu12::minus_i());
    // D = 24: kappa_2(-1) = +1 and kappa_2(2) = -1
    CHECK(local_root_number_kappa2(build_field(24)) == Mu12::minus_one());
    CHECK_THROWS_AS(local_root_number_kappa2(build_field(7)), WrongCaseError);
}

TEST_CASE("numeric root check agrees with the closed form") {
    NumericsConfig cfg;
    cfg.target_abs_error = 1e-9;
    for (long long D : {20LL, 52LL, 68LL}) {
        for (const auto& spec : simplest_characters(build_field(D))) {
            CAPTURE(D);
            CHECK(numeric_root_check(spec, 3.0, cfg) == root_number(spec));
        }
    }
    auto spec = simplest_characters(build_field(20)).front();
    CHECK_THROWS_AS(numeric_root_check(spec, 2.0, cfg), DomainError);
    CHECK_THROWS_AS(numeric_root_check(simplest_characters(build_field(40)).front(), 3.0, cfg),
                    WrongCaseError);
}
