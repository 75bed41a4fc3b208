#include "doctest.h"

#include <cmath>

#include "cmhecke/field.hpp"

using namespace cmhecke;

TEST_CASE("build_field on the worked discriminants") {
    FieldData K20 = build_field(20);
    CHECK(K20.two_case == Ramification2::FourExact);
    CHECK(*K20.d == 5);
    CHECK(K20.h == 2);
    CHECK(K20.genus_rank == 1);
    CHECK(K20.B == doctest::Approx(std::sqrt(2.0) * 20).epsilon(1e-15));
    CHECK(K20.prime_divisors == std::vector<long long>{2, 5});
    CHECK(!K20.special);

    FieldData K7 = build_field(7);
    CHECK(K7.two_case == Ramification2::Odd);
    CHECK(!K7.d.has_value());
    CHECK(K7.h == 1);
    CHECK(K7.genus_rank == 0);
    CHECK(K7.B == 7.0);

    FieldData K84 = build_field(84);
    CHECK(K84.two_case == Ramification2::FourExact);
    CHECK(*K84.d == 21);
    CHECK(K84.genus_rank == 2);
    CHECK(K84.h == 4);

    FieldData K40 = build_field(40);
    CHECK(K40.two_case == Ramification2::Eight);
    CHECK(*K40.d == 10);
    CHECK(K40.B == 80.0);

    CHECK_THROWS_AS(build_field(21), NotFundamentalError);
    CHECK_THROWS_AS(build_field(12), NotFundamentalError);

    CHECK(build_field(3).special);
    CHECK(build_field(4).special);
    CHECK(!build_field(8).special);
}

TEST_CASE("genus rank divides the class group and B matches the case") {
    for (long long D = 3; D <= 500; ++D) {
        if (!is_fundamental(D)) continue;
        FieldData K = build_field(D);
        CAPTURE(D);
        CHECK(K.h % (1LL << K.genus_rank) == 0);
        double ratio = K.B / double(D);
        switch (K.two_case) {
            case Ramification2::Odd: CHECK(ratio == 1.0); break;
            case Ramification2::FourExact:
                CHECK(ratio == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
                break;
            case Ramification2::Eight: CHECK(ratio == 2.0); break;
        }
        CHECK(K.unit_count == 2);
        // deterministic rebuild
        FieldData K2 = build_field(D);
        CHECK(K2.h == K.h);
        CHECK(K2.B == K.B);
    }
}

TEST_CASE("simplest_count") {
    CHECK(simplest_count(build_field(7)) == 1);
    CHECK(simplest_count(build_field(20)) == 2);
    CHECK(simplest_count(build_field(4)) == 1);
    CHECK(simplest_count(build_field(3)) == 1);
    CHECK(simplest_count(build_field(8)) == 2);
    CHECK(simplest_count(build_field(40)) == 2);
}
