#include "cmhecke/lfun.hpp"

#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "cmhecke/rootnum.hpp"

namespace cmhecke {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;
constexpr double kEulerGamma = 0.57721566490153286060651209008;

long long isqrt_exact(long long n) {
    // returns r with r*r == n, or -1
    if (n < 0) return -1;
    long long r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(n))));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r * r == n ? r : -1;
}

// sum_{n>N} n x^n = x^{N+1} ((N+1) - N x) / (1-x)^2 for 0 < x < 1
double weighted_geometric_tail(long long N, double x) {
    double u = 1.0 - x;
    return std::pow(x, static_cast<double>(N + 1)) * ((N + 1) - static_cast<double>(N) * x) / (u * u);
}

// smallest N with sum_{n>N} n (n^2+A)^{-s} <= (N^2+A)^{1-s}/(2(s-1)) below
// budget; the integral bound needs the summand decreasing on [N, inf), i.e.
// N^2 >= A/(2s-1)
long long inner_length(double A, double s, double budget) {
    double nsq = std::pow(2.0 * (s - 1.0) * budget, -1.0 / (s - 1.0)) - A;
    long long N = nsq > 1 ? static_cast<long long>(std::ceil(std::sqrt(nsq))) : 1;
    long long guard = static_cast<long long>(std::ceil(std::sqrt(A / (2.0 * s - 1.0))));
    return std::max({N, guard, static_cast<long long>(2)});
}

// sum over m > M of (X m^2)^{1-s}/(2(s-1)) + (X m^2)^{1/2-s}, bounding each
// slice sum_{n>=1} n (n^2 + X m^2)^{-s} by integral plus maximal term
double outer_tail(double M, double X, double s) {
    double t1 = std::pow(X, 1.0 - s) / (2.0 * (s - 1.0)) * std::pow(M, 3.0 - 2.0 * s) / (2.0 * s - 3.0);
    double t2 = std::pow(X, 0.5 - s) * std::pow(M, 2.0 - 2.0 * s) / (2.0 * s - 2.0);
    return t1 + t2;
}

void check_terms(long long terms, const NumericsConfig& cfg, const char* who) {
    if (terms > cfg.max_terms)
        throw ConvergenceError(std::string(who) + ": max_terms exceeded before the tail bound was met");
}

double eisenstein_direct(double t, double s, const FieldData& K, const NumericsConfig& cfg,
                         bool odd_m_only) {
    const double X = t * t * static_cast<double>(K.D);
    const double eps = cfg.target_abs_error;
    long long M = 2;
    while (2.0 * outer_tail(static_cast<double>(M), X, s) > 0.5 * eps) M *= 2;
    const double slice_budget = 0.25 * eps / static_cast<double>(M + 1);

    long long N0 = 0;
    if (!odd_m_only) {
        N0 = static_cast<long long>(
            std::ceil(std::pow(0.25 * eps * (2.0 * s - 2.0), -1.0 / (2.0 * s - 2.0))));
        N0 = std::max<long long>(N0, 2);
    }
    std::vector<long long> Nm(static_cast<size_t>(M) + 1, 0);
    long long Nmax = N0, terms = 0;
    for (long long m = 1; m <= M; ++m) {
        if (odd_m_only && m % 2 == 0) continue;
        Nm[static_cast<size_t>(m)] =
            inner_length(X * static_cast<double>(m) * static_cast<double>(m), s, slice_budget / 2.0);
        Nmax = std::max(Nmax, Nm[static_cast<size_t>(m)]);
        terms += Nm[static_cast<size_t>(m)];
    }
    check_terms(terms + N0, cfg, "eisenstein");

    std::vector<int> chi(static_cast<size_t>(Nmax) + 1, 0);
    for (long long n = 1; n <= Nmax; ++n) chi[static_cast<size_t>(n)] = kronecker(-K.D, n);

    double sum = 0.0;
    for (long long n = 1; n <= N0; ++n) {
        if (!chi[static_cast<size_t>(n)]) continue;
        sum += chi[static_cast<size_t>(n)] * std::pow(static_cast<double>(n), 1.0 - 2.0 * s);
    }
    for (long long m = 1; m <= M; ++m) {
        if (odd_m_only && m % 2 == 0) continue;
        const double A = X * static_cast<double>(m) * static_cast<double>(m);
        double slice = 0.0;
        for (long long n = 1; n <= Nm[static_cast<size_t>(m)]; ++n) {
            int c = chi[static_cast<size_t>(n)];
            if (!c) continue;
            double nn = static_cast<double>(n);
            slice += c * nn * std::pow(nn * nn + A, -s);
        }
        sum += 2.0 * slice;
    }
    return sum;
}

}  // namespace

double theta(double t, const FieldData& K, const NumericsConfig& cfg) {
    if (t <= 0) throw DomainError("theta: t must be positive");
    const double q = 2.0 * kPi * t / std::sqrt(static_cast<double>(K.D));
    const double x = std::exp(-q);
    // dropped mass <= 2 sum_{n>N} n x^n since a(n) <= d(n) <= n
    long long N = 4;
    while (2.0 * weighted_geometric_tail(N, x) > cfg.target_abs_error) {
        N *= 2;
        check_terms(N, cfg, "theta");
    }
    std::vector<long long> a(static_cast<size_t>(N) + 1, 0);
    for (long long m = 1; m <= N; ++m) {
        int c = kronecker(-K.D, m);
        if (!c) continue;
        for (long long n = m; n <= N; n += m) a[static_cast<size_t>(n)] += c;
    }
    double sum = 0.0;
    for (long long n = N; n >= 1; --n) {
        if (!a[static_cast<size_t>(n)]) continue;
        sum += 2.0 * static_cast<double>(a[static_cast<size_t>(n)]) * std::exp(-q * static_cast<double>(n));
    }
    return static_cast<double>(K.h) + sum;
}

double eisenstein(double t, double s, const FieldData& K, const NumericsConfig& cfg) {
    if (t <= 0) throw DomainError("eisenstein: t must be positive");
    if (s == 1.0) return kPi / std::sqrt(static_cast<double>(K.D)) * theta(t, K, cfg);
    if (s < 3.0)
        throw DomainError("eisenstein: direct summation needs s >= 3 (s = 1 goes through theta)");
    return eisenstein_direct(t, s, K, cfg, false);
}

double eisenstein_odd(double t, double s, const FieldData& K, const NumericsConfig& cfg) {
    if (t <= 0) throw DomainError("eisenstein_odd: t must be positive");
    if (s == 1.0)
        return kPi / std::sqrt(static_cast<double>(K.D)) * (theta(t, K, cfg) - theta(2.0 * t, K, cfg));
    if (s < 3.0)
        throw DomainError("eisenstein_odd: direct summation needs s >= 3 (s = 1 goes through theta)");
    return eisenstein_direct(t, s, K, cfg, true);
}

namespace {

// L~(s, [O_K], chi): ideals (u + v sqrt(-d)) with v = 0, u > 0 and v > 0,
// u in Z; conjugate generators pair up so each ideal contributes
// (eps + eps^{-1})(beta) * 2u * N^{-s} on the real axis.
double principal_lattice_sum(double s, const CharacterSpec& spec, const NumericsConfig& cfg) {
    const FieldData& K = spec.field;
    const long long d = *K.d;
    const double eps = cfg.target_abs_error;

    long long V = 2;
    while (4.0 * outer_tail(static_cast<double>(V / 2), 4.0 * static_cast<double>(d), s) > 0.5 * eps)
        V *= 2;
    const double slice_budget = 0.25 * eps / static_cast<double>(V / 2 + 1);

    // v = 0 slice: 2 sum_{u > N} u^{1-2s} <= 2 N^{2-2s}/(2s-2)
    long long N0 = static_cast<long long>(
        std::ceil(std::pow(0.125 * eps * (2.0 * s - 2.0), -1.0 / (2.0 * s - 2.0))));
    N0 = std::max<long long>(N0, 2);

    long long terms = 0;
    double sum = 0.0;
    for (long long u = 1; u <= N0; u += 2) {
        ++terms;
        if (std::gcd(u, K.D) != 1) continue;
        Mu12 e = eval_epsilon(spec, AlgebraicInteger{u, 0, IntegerBasis::Sqrt});
        sum += e.real2() * std::pow(static_cast<double>(u), 1.0 - 2.0 * s);
    }
    for (long long v = 2; v <= V; v += 2) {
        const double A = static_cast<double>(v) * static_cast<double>(v) * static_cast<double>(d);
        // |weight| <= 4u on these slices
        long long Nv = inner_length(A, s, slice_budget / 4.0);
        check_terms(terms += Nv, cfg, "partial_l_combined");
        double slice = 0.0;
        for (long long u = 1; u <= Nv; u += 2) {
            long long nrm = u * u + v * v * d;
            if (std::gcd(nrm, K.D) != 1) continue;
            Mu12 e = eval_epsilon(spec, AlgebraicInteger{u, v, IntegerBasis::Sqrt});
            double w = e.real2();
            if (w == 0.0) continue;
            slice += w * 2.0 * static_cast<double>(u) * std::pow(static_cast<double>(nrm), -s);
        }
        sum += slice;
    }
    return sum;
}

// sum over b > M of C [(b^2 d)^{1-s} + (b^2 d)^{1/2-s}]
double p2_outer_tail(double M, double d, double s, double C) {
    double t1 = std::pow(d, 1.0 - s) * std::pow(M, 3.0 - 2.0 * s) / (2.0 * s - 3.0);
    double t2 = std::pow(d, 0.5 - s) * std::pow(M, 2.0 - 2.0 * s) / (2.0 * s - 2.0);
    return C * (t1 + t2);
}

// L~(s, [p_2], chi): ideals beta alpha0^{-1} p_2 with beta = alpha0 (a + b
// (1 - sqrt(-d))/2), b > 0 odd, a in Z; norm (n^2 + b^2 d)/2 with n = 2a + b.
double p2_lattice_sum(double s, const CharacterSpec& spec, const NumericsConfig& cfg) {
    const FieldData& K = spec.field;
    const long long d = *K.d;
    const double eps = cfg.target_abs_error;
    const double rd = std::sqrt(static_cast<double>(d));

    const std::complex<double> zp = chi_p2_value(spec).to_complex(d);
    CharacterSpec conj_spec = spec;
    conj_spec.eps2_on_sqrt_md = spec.eps2_on_sqrt_md.conj();
    const std::complex<double> zc = chi_p2_value(conj_spec).to_complex(d);

    // per ideal |chi + chi'| <= 2 sqrt(N), so a +-n pair contributes at most
    // 4 ((k^2 + b^2 d)/2)^{1/2-s} = C (k^2 + b^2 d)^{1/2-s}
    const double C = 4.0 * std::pow(2.0, s - 0.5);
    long long M = 1;
    while (p2_outer_tail(static_cast<double>(M), static_cast<double>(d), s, C) > 0.5 * eps) M *= 2;
    const double slice_budget = 0.5 * eps / static_cast<double>(M / 2 + 2);

    std::complex<double> sum = 0.0;
    long long terms = 0;
    for (long long b = 1; b <= M; b += 2) {
        const double A = static_cast<double>(b) * static_cast<double>(b) * static_cast<double>(d);
        // k-tail: C sum_{k>N} (k^2+A)^{1/2-s} <= C (N^2+A)^{3/2-s}/(2s-3)
        double nsq = std::pow(slice_budget * (2.0 * s - 3.0) / C, -1.0 / (s - 1.5)) - A;
        long long Nb = nsq > 1 ? static_cast<long long>(std::ceil(std::sqrt(nsq))) : 1;
        Nb = std::max<long long>(Nb, 2);
        check_terms(terms += Nb, cfg, "partial_l_combined");
        for (long long k = 1; k <= Nb; k += 2) {
            if (std::gcd(k, d) != 1) continue;
            for (long long n : {k, -k}) {
                long long a = (n - b) / 2;
                Mu12 e = eval_epsilon_p2_coset(spec, a, b);
                std::complex<double> ev = e.value();
                std::complex<double> beta(static_cast<double>(a) + 0.5 * static_cast<double>(1 + d) * static_cast<double>(b),
                                          static_cast<double>(a) * rd);
                double nrm = 0.5 * static_cast<double>(n * n + b * b * d);
                sum += (ev * zp + std::conj(ev) * zc) * beta * std::pow(nrm, -s);
            }
        }
    }
    return sum.real();
}

}  // namespace

double partial_l_combined(double s, ClassSlot cls, const CharacterSpec& spec,
                          const NumericsConfig& cfg) {
    const FieldData& K = spec.field;
    if (K.two_case != Ramification2::FourExact)
        throw WrongCaseError("partial_l_combined requires 4||D");
    if (K.special) throw SpecialDiscriminantError(K.D);
    if (s < 3.0) throw DomainError("partial_l_combined: need s >= 3 for absolute convergence");
    return cls == ClassSlot::Principal ? principal_lattice_sum(s, spec, cfg)
                                       : p2_lattice_sum(s, spec, cfg);
}

double central_value(const CharacterSpec& spec, const NumericsConfig& cfg) {
    const FieldData& K = spec.field;
    if (K.two_case != Ramification2::FourExact) throw WrongCaseError("central_value requires 4||D");
    if (K.special) throw SpecialDiscriminantError(K.D);
    int W = root_number(spec);
    if (W == -1) return 0.0;  // integer factor 1 + W vanishes; no numerics involved
    NumericsConfig sub = cfg;
    sub.target_abs_error = cfg.target_abs_error / 8.0;
    double gap = theta(0.5, K, sub) - theta(1.0, K, sub);
    return 2.0 * kPi / std::sqrt(static_cast<double>(K.D)) * (1 + W) * gap;
}

double series_coeff_a(long long n, const CharacterSpec& spec) {
    const FieldData& K = spec.field;
    if (K.two_case != Ramification2::FourExact) throw WrongCaseError("series_coeff_a requires 4||D");
    const long long d = *K.d;
    long long total = 0;
    for (long long v = 2; v * v * d < n; v += 2) {
        long long u = isqrt_exact(n - v * v * d);
        if (u <= 0 || u % 2 == 0) continue;
        if (std::gcd(u * u + v * v * d, K.D) != 1) continue;
        Mu12 e = eval_epsilon(spec, AlgebraicInteger{u, v, IntegerBasis::Sqrt});
        total += e.sign() * 2 * u;
    }
    return static_cast<double>(total);
}

double series_coeff_b(long long n, const FieldData& K) {
    if (K.two_case != Ramification2::FourExact) throw WrongCaseError("series_coeff_b requires 4||D");
    const long long d = *K.d;
    long long total = 0;
    for (long long v = 1; v * v * d < n; v += 2) {
        long long u = isqrt_exact(n - v * v * d);
        if (u <= 0 || u % 2 == 0) continue;
        total += kronecker(-K.D, u) * 2 * u;
    }
    return static_cast<double>(total);
}

double e1_over_x(double x) {
    if (x <= 0) throw DomainError("e1_over_x: x must be positive");
    if (x > 745.0) return 0.0;  // e^{-x} underflows
    double e1;
    if (x <= 1.0) {
        // E1(x) = -gamma - ln x + sum_{k>=1} (-1)^{k+1} x^k / (k k!)
        double pw = 1.0, sum = 0.0;
        for (int k = 1; k <= 40; ++k) {
            pw *= x / k;
            double add = pw / k;
            sum += (k & 1) ? add : -add;
            if (add < 1e-18) break;
        }
        e1 = -kEulerGamma - std::log(x) + sum;
    } else {
        // continued fraction for Gamma(0, x), modified Lentz
        const double tiny = 1e-300;
        double b = x + 1.0;
        double c = 1.0 / tiny;
        double dd = 1.0 / b;
        double h = dd;
        for (int i = 1; i <= 400; ++i) {
            double an = -static_cast<double>(i) * static_cast<double>(i);
            b += 2.0;
            dd = an * dd + b;
            if (std::fabs(dd) < tiny) dd = tiny;
            c = b + an / c;
            if (std::fabs(c) < tiny) c = tiny;
            dd = 1.0 / dd;
            double del = dd * c;
            h *= del;
            if (std::fabs(del - 1.0) < 1e-17) break;
        }
        e1 = std::exp(-x) * h;
    }
    return e1 / x;
}

namespace {

// sum_{u > U} u e^{-c u^2} <= sum_{u > U} u rho^u with rho = e^{-c U}
double quadratic_exp_tail(long long U, double c) {
    return weighted_geometric_tail(U, std::exp(-c * static_cast<double>(U)));
}

}  // namespace

DerivativeTerms central_derivative(const CharacterSpec& spec, const NumericsConfig& cfg) {
    const FieldData& K = spec.field;
    if (K.two_case != Ramification2::FourExact)
        throw WrongCaseError("central_derivative requires 4||D");
    if (K.special) throw SpecialDiscriminantError(K.D);
    if (root_number(spec) != -1)
        throw WrongSignError("central_derivative: the derivative formula needs W = -1");
    const long long D = K.D, d = *K.d;
    const double B = K.B;
    const double eps = cfg.target_abs_error;
    DerivativeTerms out;

    // R: tail over n > N is (B / 2 pi N) rho^{N+1}/(1-rho), rho = e^{-2 pi N / B},
    // using f(x) <= e^{-x}/x (valid here since 2 pi N^2 / B >= 1)
    {
        long long N = std::max<long long>(2, static_cast<long long>(std::ceil(std::sqrt(B / (2.0 * kPi)))));
        while (true) {
            double rho = std::exp(-2.0 * kPi * static_cast<double>(N) / B);
            double tail = B / (2.0 * kPi * static_cast<double>(N)) *
                          std::pow(rho, static_cast<double>(N + 1)) / (1.0 - rho);
            if (tail <= eps) break;
            ++N;
        }
        for (long long n = 1; n <= N; ++n) {
            int c = kronecker(-D, n);
            if (!c) continue;
            out.R += c * static_cast<double>(n) *
                     e1_over_x(2.0 * kPi * static_cast<double>(n) * static_cast<double>(n) / B);
        }
    }

    // C1 and C2 by direct (u, v) enumeration; for arguments x >= 1,
    // f(x) <= e^{-x}/x <= e^{-x} splits the double tail into two geometric ones.
    auto c_series = [&](bool v_even, double scale) {
        const double cu = scale / B;          // coefficient of u^2 in the exponent
        const double cv = scale * static_cast<double>(d) / B;  // of v^2
        // sum_u u e^{-cu u^2} <= B/(2 scale) + sqrt(B)
        const double Su = B / (2.0 * scale) + std::sqrt(B);
        long long V = std::max<long long>(v_even ? 2 : 1,
                                          static_cast<long long>(std::ceil(std::sqrt(B / scale / static_cast<double>(d)))));
        while (true) {
            double rho = std::exp(-cv * static_cast<double>(V));
            double tail = 2.0 * Su * std::pow(rho, static_cast<double>(V + 1)) / (1.0 - rho);
            if (tail <= 0.5 * eps) break;
            ++V;
        }
        const double slice_budget = 0.5 * eps / static_cast<double>(V + 1);
        double total = 0.0;
        for (long long v = v_even ? 2 : 1; v <= V; v += 2) {
            double ev = std::exp(-cv * static_cast<double>(v) * static_cast<double>(v));
            long long U = std::max<long long>(2, static_cast<long long>(std::ceil(std::sqrt(B / scale))));
            while (2.0 * ev * quadratic_exp_tail(U, cu) > slice_budget) ++U;
            for (long long u = 1; u <= U; u += 2) {
                if (std::gcd(u, d) != 1) continue;
                long long n = u * u + v * v * d;
                double f = e1_over_x(scale * static_cast<double>(n) / B);
                if (f == 0.0) continue;
                if (v_even) {
                    Mu12 e = eval_epsilon(spec, AlgebraicInteger{u, v, IntegerBasis::Sqrt});
                    total += e.sign() * 2.0 * static_cast<double>(u) * f;
                } else {
                    total += kronecker(-D, u) * 2.0 * static_cast<double>(u) * f;
                }
            }
        }
        return total;
    };
    out.C1 = c_series(true, 2.0 * kPi);
    out.C2 = c_series(false, kPi);
    out.LambdaPrime1 = 4.0 * (out.R + out.C1 - out.C2);
    return out;
}

bool derivative_bounds_ok(const FieldData& K, const CentralReport& rep, std::string* diagnostic) {
    const double B = K.B;
    const double B34 = std::pow(B, 0.75), B12 = std::sqrt(B);
    std::string msg;
    bool ok = true;
    if (!(rep.R > 0.5235 * B - 0.8458 * B34 - 0.3951 * B12)) {
        ok = false;
        msg += "R <= .5235B - .8458B^(3/4) - .3951B^(1/2); ";
    }
    if (!(std::fabs(rep.C1) <= 2.789e-7 * B * 1.01)) {
        ok = false;
        msg += "|C1| > 2.789e-7 B (1% slack); ";
    }
    if (!(std::fabs(rep.C2) <= 0.0851 * B)) {
        ok = false;
        msg += "|C2| > .0851 B; ";
    }
    if (B >= 42.0 * std::sqrt(2.0)) {
        double lp = rep.LambdaPrime1.value_or(0.0);
        if (!(lp / 4.0 >= 0.4385 * B - 0.8458 * B34 - 0.3951 * B12)) {
            ok = false;
            msg += "Lambda'(1)/4 < .4385B - .8458B^(3/4) - .3951B^(1/2); ";
        }
    }
    if (diagnostic) *diagnostic = msg;
    return ok;
}

CentralReport vanishing_order(const CharacterSpec& spec, const NumericsConfig& cfg) {
    const FieldData& K = spec.field;
    if (K.two_case != Ramification2::FourExact)
        throw WrongCaseError("vanishing_order requires 4||D");
    if (K.special) throw SpecialDiscriminantError(K.D);
    CentralReport rep;
    rep.D = K.D;
    rep.spec_id = spec.id;
    rep.W = root_number(spec);
    rep.ord = (1 - rep.W) / 2;
    rep.L1 = central_value(spec, cfg);
    rep.Lambda1 = K.B / (2.0 * kPi) * rep.L1;  // Gamma(1) = 1
    if (rep.W == -1) {
        DerivativeTerms t = central_derivative(spec, cfg);
        rep.R = t.R;
        rep.C1 = t.C1;
        rep.C2 = t.C2;
        rep.LambdaPrime1 = t.LambdaPrime1;
        rep.bounds_ok = derivative_bounds_ok(K, rep, nullptr);
    }
    return rep;
}

}  // namespace cmhecke
