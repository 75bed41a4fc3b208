#include <iostream>

#include "cmhecke/verify.hpp"

int main() {
    cmhecke::VerifyOptions opt;
    return cmhecke::run_verification(opt, std::cout);
}
