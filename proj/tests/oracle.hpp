#pragma once

// Independent reference implementations used as test oracles. Nothing here
// calls into the library except for plain data types.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#ifndef CONECERT_DATA_DIR
#define CONECERT_DATA_DIR "data"
#endif

namespace oracle {

using cplx = std::complex<long double>;

inline std::string data_path(const std::string& rel) { return std::string(CONECERT_DATA_DIR) + "/" + rel; }

/// All complex roots of sum c[i] x^i (low degree first) by Aberth iteration.
inline std::vector<cplx> roots(const std::vector<long double>& c) {
    std::vector<long double> a = c;
    while (!a.empty() && a.back() == 0) a.pop_back();
    const int n = static_cast<int>(a.size()) - 1;
    std::vector<cplx> z;
    if (n < 1) return z;
    long double bound = 0;
    for (int i = 0; i < n; ++i) bound = std::max(bound, std::fabs(a[i] / a[n]));
    bound += 1;
    for (int k = 0; k < n; ++k)
        z.push_back(std::polar(bound * 0.7L, 2 * M_PIl * (k + 0.25L) / n));
    auto eval = [&](cplx x, cplx& dp) {
        cplx p = a[n];
        dp = 0;
        for (int i = n - 1; i >= 0; --i) {
            dp = dp * x + p;
            p = p * x + a[i];
        }
        return p;
    };
    for (int it = 0; it < 2000; ++it) {
        long double moved = 0;
        for (int k = 0; k < n; ++k) {
            cplx dp;
            cplx p = eval(z[k], dp);
            if (p == cplx(0)) continue;
            cplx ratio = p / dp;
            cplx sum = 0;
            for (int j = 0; j < n; ++j)
                if (j != k) sum += 1.0L / (z[k] - z[j]);
            cplx step = ratio / (1.0L - ratio * sum);
            z[k] -= step;
            moved = std::max(moved, std::abs(step));
        }
        if (moved < 1e-17L) break;
    }
    return z;
}

inline long double to_ld(const mpq_class& q) {
    // mpq_get_d loses range for huge values; go through mpf
    mpf_class f(q, 256);
    return static_cast<long double>(f.get_d());
}

/// p_d(n) u_{n+d} = sum_{i<d} p_i(n) u_{n+i}, each p_i low degree first.
inline std::vector<mpq_class> terms(const std::vector<std::vector<mpq_class>>& p, std::vector<mpq_class> u,
                                    std::size_t count) {
    const std::size_t d = p.size() - 1;
    auto ev = [](const std::vector<mpq_class>& c, long n) {
        mpq_class acc = 0, pw = 1;
        for (const auto& x : c) {
            acc += x * pw;
            pw *= n;
        }
        return acc;
    };
    u.resize(std::min(u.size(), std::max(count, d)));
    while (u.size() < count) {
        const long n = static_cast<long>(u.size() - d);
        mpq_class s = 0;
        for (std::size_t i = 0; i < d; ++i) s += ev(p[i], n) * u[n + i];
        u.push_back(s / ev(p[d], n));
    }
    u.resize(count);
    return u;
}

/// Deterministic generator for property tests.
inline std::mt19937_64& rng() {
    static std::mt19937_64 g(20241015);
    return g;
}

inline long rand_int(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline mpq_class rand_rational(long num_range, long den_max) {
    mpq_class q(rand_int(-num_range, num_range), rand_int(1, den_max));
    q.canonicalize();
    return q;
}

/// Rational point on the unit circle from t: ((1-t^2)/(1+t^2), 2t/(1+t^2)).
inline std::pair<mpq_class, mpq_class> circle_point(const mpq_class& t) {
    mpq_class den = 1 + t * t;
    return {(1 - t * t) / den, 2 * t / den};
}

}  // namespace oracle
