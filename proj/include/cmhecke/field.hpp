#pragma once

#include <optional>
#include <vector>

#include "cmhecke/arith.hpp"

namespace cmhecke {

// 2-adic ramification pattern of the discriminant.
enum class Ramification2 { Odd, FourExact, Eight };  // 2 does not divide D / 4||D / 8||D

const char* case_name(Ramification2 c);

// Per-field constants for K = Q(sqrt(-D)) with fundamental discriminant -D.
struct FieldData {
    long long D = 0;
    Ramification2 two_case = Ramification2::Odd;
    std::optional<long long> d;             // D/4 when 4 | D
    long long h = 0;                        // class number, from form enumeration
    int genus_rank = 0;                     // r with 2^r = order of the genus class group
    double B = 0;                           // D, sqrt(2) D, or 2D by two_case
    std::vector<long long> prime_divisors;  // primes dividing D, ascending
    int unit_count = 2;
    bool special = false;                   // D in {3, 4}: unit group bigger than {+-1}
};

// Throws NotFundamentalError when -D fails the fundamental test.
FieldData build_field(long long D);

// Number of simplest Hecke characters: 1 for odd D or D = 4, 2 for even D > 4.
int simplest_count(const FieldData& K);

}  // namespace cmhecke
