#include "conecert/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace conecert {

namespace {

// Power of two strictly above every root modulus.
Rational dyadic_root_bound(const UniPoly& f) {
    Rational b = cauchy_root_bound(f);
    Rational r(1);
    while (r <= b) r *= 2;
    return r;
}

void isolate_real(const UniPoly& f, const SturmSequence& s, const Rational& a, const Rational& b, int count,
                  std::vector<AlgebraicNumber>& out) {
    if (count == 0) return;
    if (count == 1) {
        if (f.sign_at(b) == 0) {
            out.push_back(AlgebraicNumber::real_root(f, b, b));
            return;
        }
        if (f.sign_at(a) != 0) {
            out.push_back(AlgebraicNumber::real_root(f, a, b));
            return;
        }
    }
    Rational m = (a + b) / 2;
    int left = s.count_half_open(a, m);
    isolate_real(f, s, a, m, left, out);
    isolate_real(f, s, m, b, count - left, out);
}

std::vector<Box> isolate_upper(const UniPoly& f, int n_upper) {
    std::vector<Box> found;
    if (n_upper == 0) return found;
    Rational bound = dyadic_root_bound(f);
    Rational delta = bound / 2;
    Box start;
    while (true) {
        start = Box{Rational(-bound), bound, delta, bound};
        auto c = count_roots_in_box(f, start);
        if (!c) {
            delta = delta * 3 / 4;
            continue;
        }
        if (*c == n_upper) break;
        delta /= 2;
    }
    static const Rational fractions[] = {Rational(1, 2), Rational(7, 16), Rational(9, 16),
                                         Rational(3, 8), Rational(5, 8), Rational(13, 32)};
    std::vector<std::pair<Box, int>> stack{{start, n_upper}};
    while (!stack.empty()) {
        auto [b, count] = stack.back();
        stack.pop_back();
        if (count == 1) {
            found.push_back(b);
            continue;
        }
        bool done = false;
        for (const auto& fr : fractions) {
            Rational xm = b.x0 + fr * (b.x1 - b.x0);
            Rational ym = b.y0 + fr * (b.y1 - b.y0);
            Box kids[4] = {{b.x0, xm, b.y0, ym}, {xm, b.x1, b.y0, ym}, {b.x0, xm, ym, b.y1}, {xm, b.x1, ym, b.y1}};
            int counts[4];
            bool ok = true;
            int sum = 0;
            for (int i = 0; i < 3 && ok; ++i) {
                auto c = count_roots_in_box(f, kids[i]);
                if (!c) ok = false;
                else {
                    counts[i] = *c;
                    sum += *c;
                }
            }
            if (!ok) continue;
            counts[3] = count - sum;
            // push in reverse so that lower-left boxes are handled first
            for (int i = 3; i >= 0; --i) {
                if (counts[i] > 0) stack.emplace_back(kids[i], counts[i]);
            }
            done = true;
            break;
        }
        if (!done) throw std::logic_error("isolate_roots: no admissible subdivision");
    }
    return found;
}

bool real_less(const AlgebraicNumber& x, const AlgebraicNumber& y) {
    Rational eps(1);
    while (true) {
        RatInterval a = x.refine_real(eps), b = y.refine_real(eps);
        if (a.hi < b.lo) return true;
        if (b.hi < a.lo) return false;
        if (a.is_point() && b.is_point()) return false;
        eps /= 16;
    }
}

}  // namespace

RootSet isolate_roots(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
    RootSet reals, complexes;
    for (const auto& [f, mult] : squarefree_decomposition(p)) {
        SturmSequence s(f);
        Rational bound = dyadic_root_bound(f);
        int n_real = s.count_half_open(Rational(-bound), bound);
        std::vector<AlgebraicNumber> rr;
        isolate_real(f, s, Rational(-bound), bound, n_real, rr);
        for (auto& r : rr) reals.push_back({r, mult});
        int n_upper = (f.degree() - n_real) / 2;
        for (const Box& b : isolate_upper(f, n_upper)) {
            AlgebraicNumber z = AlgebraicNumber::complex_root(f, b);
            complexes.push_back({z, mult});
            complexes.push_back({z.conj(), mult});
        }
    }
    std::stable_sort(reals.begin(), reals.end(),
                     [](const Root& a, const Root& b) { return real_less(a.value, b.value); });
    reals.insert(reals.end(), complexes.begin(), complexes.end());
    return reals;
}

int count_real_roots(const UniPoly& p) { return SturmSequence(p).count_all(); }

UniPoly product_roots_poly(const UniPoly& p_in) {
    UniPoly p = p_in.monic();
    const int n = p.degree();
    if (n < 1) return UniPoly::constant(1);
    const int big_n = n * n;
    // elementary symmetric functions of the roots of p
    std::vector<Rational> e(static_cast<std::size_t>(n + 1), Rational(0));
    for (int k = 0; k <= n; ++k) {
        Rational a = p.coeff(static_cast<std::size_t>(n - k));
        e[static_cast<std::size_t>(k)] = (k % 2 == 0) ? a : Rational(-a);
    }
    auto e_at = [&](int k) { return k <= n ? e[static_cast<std::size_t>(k)] : Rational(0); };
    std::vector<Rational> s(static_cast<std::size_t>(big_n + 1), Rational(0));
    for (int k = 1; k <= big_n; ++k) {
        Rational acc(0);
        for (int i = 1; i < k; ++i) {
            if (i > n) break;
            Rational t = e_at(i) * s[static_cast<std::size_t>(k - i)];
            acc += (i % 2 == 1) ? t : Rational(-t);
        }
        if (k <= n) {
            Rational t = e_at(k) * k;
            acc += (k % 2 == 1) ? t : Rational(-t);
        }
        s[static_cast<std::size_t>(k)] = acc;
    }
    // power sums of all pairwise products, then back to elementary functions
    std::vector<Rational> ps(static_cast<std::size_t>(big_n + 1));
    for (int k = 1; k <= big_n; ++k) ps[static_cast<std::size_t>(k)] = s[static_cast<std::size_t>(k)] * s[static_cast<std::size_t>(k)];
    std::vector<Rational> E(static_cast<std::size_t>(big_n + 1), Rational(0));
    E[0] = 1;
    for (int k = 1; k <= big_n; ++k) {
        Rational acc(0);
        for (int i = 1; i <= k; ++i) {
            Rational t = E[static_cast<std::size_t>(k - i)] * ps[static_cast<std::size_t>(i)];
            acc += (i % 2 == 1) ? t : Rational(-t);
        }
        E[static_cast<std::size_t>(k)] = acc / k;
    }
    std::vector<Rational> c(static_cast<std::size_t>(big_n + 1));
    for (int k = 0; k <= big_n; ++k) {
        Rational v = E[static_cast<std::size_t>(k)];
        c[static_cast<std::size_t>(big_n - k)] = (k % 2 == 0) ? v : Rational(-v);
    }
    return UniPoly(std::move(c));
}

Ordering compare_moduli(const AlgebraicNumber& x, const AlgebraicNumber& y) {
    if (same_number(x, y)) return Ordering::Equal;
    if (!x.is_real() && same_number(x.conj(), y)) return Ordering::Equal;
    std::optional<SturmSequence> combined;
    Rational eps(1, 256);
    for (int round = 0;; ++round) {
        RatInterval a = norm2_enclosure(x, eps), b = norm2_enclosure(y, eps);
        if (a.hi < b.lo) return Ordering::Less;
        if (b.hi < a.lo) return Ordering::Greater;
        if (round >= 2) {
            if (!combined) {
                UniPoly q = product_roots_poly(x.defpoly());
                if (!(x.defpoly() == y.defpoly())) q *= product_roots_poly(y.defpoly());
                combined.emplace(q);
            }
            Rational lo = std::min(a.lo, b.lo), hi = std::max(a.hi, b.hi);
            if (combined->count_closed(lo, hi) == 1) return Ordering::Equal;
        }
        eps = eps * eps;
    }
}

Integer positivity_threshold(const UniPoly& p) {
    if (p.is_zero() || p.lc() <= 0)
        throw std::domain_error("positivity_threshold: leading coefficient is not positive");
    bool nonneg = std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const Rational& c) { return c >= 0; });
    if (nonneg) return p.coeff(0) > 0 ? Integer(0) : Integer(1);
    SturmSequence s(p);
    Integer top = ceil_of(cauchy_root_bound(p));
    Integer lo = 0, hi = top;
    if (s.count_closed(Rational(0), Rational(top)) == 0) {
        hi = 0;
    } else {
        // invariant: roots in [lo, top], none in [hi, top]
        while (hi - lo > 1) {
            Integer mid = (lo + hi) / 2;
            if (s.count_closed(Rational(mid), Rational(top)) == 0)
                hi = mid;
            else
                lo = mid;
        }
    }
    Integer n = hi;
    while (n > 0 && p.eval(Rational(n - 1)) > 0) n -= 1;
    return n;
}

}  // namespace conecert
