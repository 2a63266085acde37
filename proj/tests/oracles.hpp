#pragma once

// Reference computations used by the test suites. Each oracle takes a
// different route than the library code it checks.

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace oracles {

// Coefficients of prod_{n>=1}(1 - q^n) up to degree T, via Euler's
// pentagonal number theorem: sum_k (-1)^k q^{k(3k-1)/2}.
inline std::vector<long long> euler_product(int T) {
    std::vector<long long> c(static_cast<std::size_t>(T) + 1, 0);
    c[0] = 1;
    c.assign(static_cast<std::size_t>(T) + 1, 0);
    for (long long k = -T; k <= T; ++k) {
        long long e = k * (3 * k - 1) / 2;
        if (e < 0 || e > T) continue;
        c[static_cast<std::size_t>(e)] += (k % 2 == 0) ? 1 : -1;
    }
    return c;
}

inline std::vector<long long> convolve_truncated(const std::vector<long long>& x,
                                                 const std::vector<long long>& y, int T) {
    std::vector<long long> out(static_cast<std::size_t>(T) + 1, 0);
    for (int i = 0; i <= T && i < static_cast<int>(x.size()); ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; i + j <= T && j < static_cast<int>(y.size()); ++j) {
            out[i + j] += x[i] * y[j];
        }
    }
    return out;
}

// q * prod(1-q^n)^2 * prod(1-q^{11n})^2 up to q^T, assembled from the
// pentagonal series by convolution.
inline std::vector<long long> eta_square_11(int T) {
    auto e1 = euler_product(T);
    auto e1sq = convolve_truncated(e1, e1, T);
    std::vector<long long> e11(static_cast<std::size_t>(T) + 1, 0);
    for (int n = 0; 11 * n <= T && n < static_cast<int>(e1.size()); ++n) e11[11 * n] = e1[n];
    auto e11sq = convolve_truncated(e11, e11, T);
    auto prod = convolve_truncated(e1sq, e11sq, T);
    std::vector<long long> out(static_cast<std::size_t>(T) + 1, 0);
    for (int n = 1; n <= T; ++n) out[n] = prod[n - 1];
    return out;
}

inline long long sigma1(long long n) {
    long long s = 0;
    for (long long d = 1; d <= n; ++d)
        if (n % d == 0) s += d;
    return s;
}

// --- exact polynomial iterated integrals on a line segment ---

using CPoly = std::vector<std::complex<double>>;  // coefficients, ascending

inline CPoly poly_mul(const CPoly& x, const CPoly& y) {
    CPoly out(x.size() + y.size() - 1, {0.0, 0.0});
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
    return out;
}

inline CPoly poly_antiderivative(const CPoly& x) {
    CPoly out(x.size() + 1, {0.0, 0.0});
    for (std::size_t i = 0; i < x.size(); ++i) out[i + 1] = x[i] / double(i + 1);
    return out;
}

inline std::complex<double> poly_eval(const CPoly& x, std::complex<double> t) {
    std::complex<double> v = 0.0;
    for (std::size_t i = x.size(); i-- > 0;) v = v * t + x[i];
    return v;
}

inline CPoly poly_conj(const CPoly& x) {
    CPoly out = x;
    for (auto& c : out) c = std::conj(c);
    return out;
}

// p(z0 + t*dz) as a polynomial in t.
inline CPoly poly_compose_linear(const CPoly& p, std::complex<double> z0, std::complex<double> dz) {
    CPoly out{{0.0, 0.0}};
    CPoly lin{z0, dz};
    CPoly pw{{1.0, 0.0}};
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i > 0) pw = poly_mul(pw, lin);
        CPoly term = pw;
        for (auto& c : term) c *= p[i];
        if (term.size() > out.size()) out.resize(term.size(), {0.0, 0.0});
        for (std::size_t j = 0; j < term.size(); ++j) out[j] += term[j];
    }
    return out;
}

// Iterated integral of polynomial letters along the segment z0 -> z1 by
// symbolic antidifferentiation of the cumulative recurrence. Each letter is
// (coefficients of p(z), orientation) with orientation +1 for p(z)dz and
// -1 for conj(p(z))dzbar.
inline std::complex<double> polynomial_word_line_integral(
    std::complex<double> z0, std::complex<double> z1,
    const std::vector<std::pair<CPoly, int>>& letters) {
    const std::complex<double> dz = z1 - z0;
    CPoly running{{1.0, 0.0}};
    for (const auto& [p, orient] : letters) {
        CPoly f = poly_compose_linear(p, z0, dz);
        for (auto& c : f) c *= dz;
        if (orient < 0) f = poly_conj(f);
        running = poly_antiderivative(poly_mul(running, f));
    }
    return poly_eval(running, 1.0);
}

} // namespace oracles
