#include "cmhecke/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>

#include "cmhecke/dimension.hpp"
#include "cmhecke/report.hpp"
#include "cmhecke/rootnum.hpp"

namespace cmhecke {

namespace {

struct CheckContext {
    std::ostringstream detail;
    int failures = 0;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            ++failures;
            if (detail.tellp() > 0) detail << "; ";
            detail << what;
        }
    }
};

std::vector<long long> fundamental_range(long long lo, long long hi) {
    std::vector<long long> out;
    for (long long D = lo; D <= hi; ++D)
        if (is_fundamental(D)) out.push_back(D);
    return out;
}

std::vector<long long> four_exact_range(long long hi) {
    std::vector<long long> out;
    for (long long D = 5; D <= hi; ++D)
        if (is_fundamental(D) && D % 4 == 0 && (D / 4) % 2 == 1) out.push_back(D);
    return out;
}

struct Xorshift {
    unsigned long long s = 0x9E3779B97F4A7C15ull;
    unsigned long long next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    long long in_range(long long lo, long long hi) {  // inclusive
        return lo + static_cast<long long>(next() % static_cast<unsigned long long>(hi - lo + 1));
    }
};

// -------- criterion bodies --------

void crit_vanishing_order(CheckContext& c, const NumericsConfig& cfg, double margin) {
    auto t0 = std::chrono::steady_clock::now();
    for (long long D : four_exact_range(200)) {
        for (const auto& spec : simplest_characters(build_field(D))) {
            CentralReport rep = vanishing_order(spec, cfg);
            c.require(rep.ord == (1 - rep.W) / 2, "ord != (1-W)/2 at D=" + std::to_string(D));
            if (rep.W == 1) {
                c.require(rep.L1 > margin, "L(1) not positive at D=" + std::to_string(D));
                c.require(!rep.LambdaPrime1.has_value(),
                          "unexpected derivative at D=" + std::to_string(D));
            } else {
                c.require(rep.L1 == 0.0, "L(1) not exactly 0 at D=" + std::to_string(D));
                c.require(rep.LambdaPrime1.value_or(0) > margin,
                          "Lambda'(1) not positive at D=" + std::to_string(D));
            }
        }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.require(secs <= 60.0, "runtime " + std::to_string(secs) + "s exceeds 60s");
}

void crit_d20(CheckContext& c, const NumericsConfig& cfg, double margin) {
    FieldData K = build_field(20);
    for (const auto& spec : simplest_characters(K)) {
        c.require(root_number(spec) == kronecker(2, 5), "W(20) != (2/5)");
        CentralReport rep = vanishing_order(spec, cfg);
        c.require(rep.W == -1, "W(20) != -1");
        c.require(rep.LambdaPrime1.value_or(0) > margin, "Lambda'(1) at D=20 not positive");
    }
}

void crit_bounds(CheckContext& c, const NumericsConfig& cfg) {
    for (long long D : four_exact_range(200)) {
        FieldData K = build_field(D);
        const auto spec = simplest_characters(K).front();
        if (root_number(spec) != -1) continue;
        CentralReport rep = vanishing_order(spec, cfg);
        std::string diag;
        if (!derivative_bounds_ok(K, rep, &diag)) {
            while (!diag.empty() && (diag.back() == ' ' || diag.back() == ';')) diag.pop_back();
            c.require(false, "D=" + std::to_string(D) + ": " + diag);
        }
    }
}

void crit_partial_l(CheckContext& c, const NumericsConfig& cfg, double tol) {
    auto t0 = std::chrono::steady_clock::now();
    for (long long D : {20LL, 52LL, 68LL}) {
        FieldData K = build_field(D);
        double g1 = eisenstein(1.0, 3.0, K, cfg);
        double g2 = eisenstein(2.0, 3.0, K, cfg);
        double godd_half = eisenstein_odd(0.5, 3.0, K, cfg);
        for (const auto& spec : simplest_characters(K)) {
            double principal = partial_l_combined(3.0, ClassSlot::Principal, spec, cfg);
            double p2 = partial_l_combined(3.0, ClassSlot::P2, spec, cfg);
            int W = root_number(spec);
            c.require(std::fabs(principal - (4.0 * g2 - 2.0 * g1)) < tol,
                      "principal-class mismatch at D=" + std::to_string(D));
            c.require(std::fabs(p2 - 8.0 * W * godd_half) < tol,
                      "p2-class mismatch at D=" + std::to_string(D));
        }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.require(secs <= 60.0, "runtime " + std::to_string(secs) + "s exceeds 60s");
}

void crit_theta(CheckContext& c, const NumericsConfig& cfg_in, double tol) {
    NumericsConfig cfg = cfg_in;
    cfg.target_abs_error = std::min(cfg.target_abs_error, tol / 10.0);
    const double ts[] = {1.0 / 3, 0.5, 1.0, 2.0, 3.0};
    for (long long D : {20LL, 52LL, 68LL, 84LL, 148LL}) {
        FieldData K = build_field(D);
        for (double t : ts) {
            double lhs = theta(1.0 / t, K, cfg);
            double rhs = t * theta(t, K, cfg);
            c.require(std::fabs(lhs - rhs) < tol,
                      "functional equation off at D=" + std::to_string(D) + ", t=" + std::to_string(t));
        }
        c.require(std::fabs(theta(100.0, K, cfg) - static_cast<double>(K.h)) < 1e-10,
                  "theta(100) != h at D=" + std::to_string(D));
        c.require(theta(0.5, K, cfg) - theta(1.0, K, cfg) > 0,
                  "theta(1/2) - theta(1) not positive at D=" + std::to_string(D));
        double prev = theta(0.25, K, cfg);
        for (double t = 0.5; t <= 4.01; t += 0.25) {
            double cur = theta(t, K, cfg);
            c.require(cur < prev, "theta not decreasing at D=" + std::to_string(D));
            prev = cur;
        }
    }
}

void crit_root_number(CheckContext& c, const NumericsConfig& cfg) {
    for (long long D : four_exact_range(200)) {
        for (const auto& spec : simplest_characters(build_field(D))) {
            int w_formula = root_number(spec);
            int w_numeric = numeric_root_check(spec, 3.0, cfg);
            c.require(w_formula == w_numeric, "sign mismatch at D=" + std::to_string(D));
        }
    }
}

void crit_characters(CheckContext& c) {
    // counts for every fundamental D <= 300
    for (long long D : fundamental_range(3, 300)) {
        FieldData K = build_field(D);
        if (K.special) {
            bool threw = false;
            try {
                simplest_characters(K);
            } catch (const SpecialDiscriminantError&) {
                threw = true;
            }
            c.require(threw, "special D=" + std::to_string(D) + " not rejected");
            continue;
        }
        c.require(static_cast<int>(simplest_characters(K).size()) == simplest_count(K),
                  "character count off at D=" + std::to_string(D));
    }
    // local set sizes
    {
        FieldData K84 = build_field(84);
        c.require(local_characters(K84, 7).size() == 1, "|E_7| != 1 at D=84");
        c.require(local_characters(K84, 3).size() == 3, "|E_3| != 3 at D=84");
        c.require(local_characters(K84, 2).size() == 8, "|E_2| != 8 at D=84");
        c.require(local_characters(build_field(40), 2).size() == 4, "|E_2| != 4 at D=40");
    }
    // conductor exponents
    auto expect_conductor = [&](long long D, std::map<long long, int> want) {
        for (const auto& spec : simplest_characters(build_field(D)))
            c.require(conductor_exponents(spec) == want,
                      "conductor exponents off at D=" + std::to_string(D));
    };
    expect_conductor(7, {{7, 1}});
    expect_conductor(20, {{2, 3}, {5, 1}});
    expect_conductor(24, {{2, 5}, {3, 1}});
    expect_conductor(40, {{2, 5}, {5, 1}});
    expect_conductor(84, {{2, 3}, {3, 1}, {7, 1}});

    Xorshift rng;
    for (long long D : {7LL, 15LL, 20LL, 24LL, 40LL, 52LL, 68LL, 84LL}) {
        FieldData K = build_field(D);
        auto specs = simplest_characters(K);
        // rational restriction
        for (const auto& spec : specs)
            for (long long n = 1; n <= 1000; ++n) {
                if (std::gcd(n, D) != 1) continue;
                Mu12 got = eval_epsilon(spec, make_integer(K, n, 0));
                c.require(got == Mu12::from_sign(kronecker(-D, n)),
                          "rational restriction off at D=" + std::to_string(D));
            }
        // oddness and multiplicativity on random coprime elements
        auto random_coprime = [&]() {
            while (true) {
                AlgebraicInteger b = make_integer(K, rng.in_range(-40, 40), rng.in_range(-40, 40));
                long long N = norm(b, K);
                if (N != 0 && std::gcd(N, D) == 1) return b;
            }
        };
        for (const auto& spec : specs) {
            for (int it = 0; it < 500; ++it) {
                AlgebraicInteger b1 = random_coprime(), b2 = random_coprime();
                Mu12 v1 = eval_epsilon(spec, b1), v2 = eval_epsilon(spec, b2);
                c.require(eval_epsilon(spec, neg(b1)) == Mu12::minus_one() * v1,
                          "oddness fails at D=" + std::to_string(D));
                c.require(eval_epsilon(spec, mul(b1, b2, K)) == v1 * v2,
                          "multiplicativity fails at D=" + std::to_string(D));
            }
            c.require(spec.order == ((K.two_case == Ramification2::FourExact) ? 4 : 2),
                      "order off at D=" + std::to_string(D));
        }
        // conjugate pair for 4||D
        if (K.two_case == Ramification2::FourExact) {
            for (int it = 0; it < 100; ++it) {
                AlgebraicInteger b = random_coprime();
                c.require(eval_epsilon(specs[1], b) == eval_epsilon(specs[0], b).conj(),
                          "conjugate-pair relation fails at D=" + std::to_string(D));
            }
        }
    }
}

void crit_dimension(CheckContext& c) {
    // the dimension table on a synthesized grid, all orders x all unit values
    // x D divisibility patterns
    auto expected = [](long long D, int order, Mu12 v2, Mu12 v3) {
        int bound = std::gcd(D, 6LL) == 1 ? 2 : (D % 3 != 0 ? 4 : (D % 2 != 0 ? 6 : 12));
        if (bound % order != 0) return DimensionTag::ExceedsHUnknown;
        if (order == 2) return DimensionTag::EqualsH;
        if (order == 4)
            return (D % 4 == 0 && D != 8 && v2.order() == 4) ? DimensionTag::EqualsH
                                                             : DimensionTag::TwiceH;
        if (order == 6)
            return (D % 3 == 0 && (v3.order() == 2 || v3.order() == 6)) ? DimensionTag::EqualsH
                                                                        : DimensionTag::TwiceH;
        return (D % 12 == 0 && (v2.order() == 4 || v2.order() == 12)) ? DimensionTag::EqualsH
                                                                      : DimensionTag::TwiceH;
    };
    for (long long D : {7LL, 8LL, 11LL, 15LL, 20LL, 24LL, 35LL, 51LL, 84LL, 132LL}) {
        long long h = build_field(D).h;
        for (int order : {2, 4, 6, 12})
            for (int k2 = 0; k2 < 12; ++k2)
                for (int k3 = 0; k3 < 12; ++k3) {
                    EpsilonProfile p;
                    p.order = order;
                    p.D = D;
                    p.val2 = Mu12::of(k2);
                    p.val3 = Mu12::of(k3);
                    p.image_exponent = order;
                    DimensionVerdict v = classify_dimension(p, h);
                    c.require(v.tag == expected(D, order, Mu12::of(k2), Mu12::of(k3)),
                              "grid mismatch at D=" + std::to_string(D) +
                                  " order=" + std::to_string(order));
                    c.require(v.scalar_restriction == (v.tag == DimensionTag::EqualsH && order <= 2),
                              "scalar-restriction flag off at D=" + std::to_string(D));
                }
    }
    // every simplest character keeps the minimal dimension
    for (long long D : fundamental_range(5, 300))
        for (const auto& spec : simplest_characters(build_field(D)))
            c.require(classify_simplest(spec).tag == DimensionTag::EqualsH,
                      "simplest not of minimal dimension at D=" + std::to_string(D));
    // order-4 twist at 2: D = 20 flips to 2h, D = 68 stays at h
    auto twisted = [](long long D) {
        FieldData K = build_field(D);
        CharacterSpec spec = simplest_characters(K).front();
        for (auto& l : spec.locals)
            if (l.p == 2)
                for (const auto& cand : local_characters(K, 2))
                    if (cand.sign == l.sign && cand.twist == 1) l = cand;
        return classify_simplest(spec);
    };
    c.require(twisted(20).tag == DimensionTag::TwiceH, "twist at D=20 should give 2h");
    c.require(twisted(68).tag == DimensionTag::EqualsH, "twist at D=68 should keep h");
}

void crit_ideal_count(CheckContext& c) {
    const long long nmax = 10000;
    for (long long D : {20LL, 52LL, 68LL, 84LL}) {
        std::vector<long long> reps(nmax + 1, 0);
        for (const auto& f : reduced_forms(D)) {
            long long ylim = static_cast<long long>(std::floor(std::sqrt(4.0 * f.a * nmax / D))) + 1;
            long long xlim = static_cast<long long>(std::floor(std::sqrt(4.0 * f.c * nmax / D))) + 1;
            for (long long y = -ylim; y <= ylim; ++y)
                for (long long x = -xlim; x <= xlim; ++x) {
                    long long v = f.a * x * x + f.b * x * y + f.c * y * y;
                    if (v >= 1 && v <= nmax) ++reps[v];
                }
        }
        for (long long n = 1; n <= nmax; ++n)
            if (reps[n] != 2 * ideal_count(n, D)) {
                c.require(false, "representation count mismatch at D=" + std::to_string(D) +
                                     ", n=" + std::to_string(n));
                break;
            }
    }
    c.require(reduced_forms(20).size() == 2, "h(20) != 2");
    c.require(reduced_forms(23).size() == 3, "h(23) != 3");
    c.require(reduced_forms(4).size() == 1, "h(4) != 1");
}

}  // namespace

std::vector<std::string> verification_names() {
    return {"vanishing-order", "d20-derivative", "derivative-bounds", "partial-l", "theta",
            "root-number",     "characters",     "dimension",         "ideal-count"};
}

int run_verification(const VerifyOptions& opt, std::ostream& out) {
    NumericsConfig cfg;
    cfg.max_terms = opt.max_terms;
    auto tol = [&](double t) { return std::max(t, opt.tol_floor); };

    NumericsConfig cfg10 = cfg;  // default 1e-10 target
    NumericsConfig cfg9 = cfg;
    cfg9.target_abs_error = tol(1e-9);
    cfg10.target_abs_error = tol(1e-10);

    struct Criterion {
        std::string name;
        std::function<void(CheckContext&)> body;
    };
    std::vector<Criterion> criteria = {
        {"vanishing-order", [&](CheckContext& c) { crit_vanishing_order(c, cfg10, tol(1e-6)); }},
        {"d20-derivative", [&](CheckContext& c) { crit_d20(c, cfg10, tol(1e-6)); }},
        {"derivative-bounds", [&](CheckContext& c) { crit_bounds(c, cfg10); }},
        {"partial-l", [&](CheckContext& c) { crit_partial_l(c, cfg9, tol(1e-7)); }},
        {"theta", [&](CheckContext& c) { crit_theta(c, cfg10, tol(1e-12)); }},
        {"root-number", [&](CheckContext& c) { crit_root_number(c, cfg10); }},
        {"characters", [&](CheckContext& c) { crit_characters(c); }},
        {"dimension", [&](CheckContext& c) { crit_dimension(c); }},
        {"ideal-count", [&](CheckContext& c) { crit_ideal_count(c); }},
    };

    int exit_code = 0;
    bool matched = false;
    for (const auto& crit : criteria) {
        if (!opt.only.empty() && opt.only != crit.name) continue;
        matched = true;
        CheckContext c;
        try {
            crit.body(c);
        } catch (const std::exception& e) {
            c.require(false, std::string("exception: ") + e.what());
        }
        if (c.failures == 0) {
            out << "[PASS] " << crit.name << "\n";
        } else {
            out << "[FAIL] " << crit.name << ": " << c.detail.str() << "\n";
            exit_code = 1;
        }
    }
    if (!opt.only.empty() && !matched) {
        out << "unknown criterion '" << opt.only << "'\n";
        return 1;
    }
    return exit_code;
}

}  // namespace cmhecke
