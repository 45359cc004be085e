#include "conecert/algebraic.hpp"

#include <cmath>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace conecert {

struct AlgebraicNumber::State {
    std::mutex mu;
    UniPoly p;
    bool real = true;
    bool point = false;
    QComplex value;     // valid when point
    Rational lo, hi;    // real, not point: unique root in (lo, hi), sign change
    Box box;            // complex, not point
    int exact = 0;      // 0 unknown, 1 known not (Gaussian) rational, 2 exact
};

namespace {

// Smallest k with 2^k >= t (t > 0), up to one extra bit.
unsigned bits_for(const Rational& t) {
    Integer c = ceil_of(t);
    if (c < 1) return 0;
    return static_cast<unsigned>(mpz_sizeinbase(c.get_mpz_t(), 2));
}

Rational pow2_neg(unsigned k) {
    Integer d = Integer(1) << k;
    return Rational(Integer(1), d);
}

Rational round_dyadic(const Rational& q, unsigned k) {
    Integer scale = Integer(1) << k;
    Integer n = floor_of(q * Rational(scale) + Rational(1, 2));
    Rational r(n, scale);
    r.canonicalize();
    return r;
}

Integer primitive_lc(const UniPoly& p) {
    Integer l = p.primitive().lc().get_num();
    return abs(l);
}

void set_point(AlgebraicNumber::State& s, const QComplex& v) {
    s.point = true;
    s.value = v;
    s.exact = 2;
    if (s.real) {
        s.lo = v.re;
        s.hi = v.re;
    } else {
        s.box = Box{v.re, v.re, v.im, v.im};
    }
}

void refine_real_step(AlgebraicNumber::State& s) {
    const UniPoly& p = s.p;
    Rational w = s.hi - s.lo;
    Rational m = (s.lo + s.hi) / 2;
    int slo = p.sign_at(s.lo);
    UniPoly dp = p.derivative();
    Rational dv = dp.eval(m);
    if (dv != 0) {
        Rational z = m - p.eval(m) / dv;
        unsigned k = bits_for(Rational(256) / w);
        Rational r = pow2_neg(k);
        z = round_dyadic(z, k + 2);
        if (z - r > s.lo && z + r < s.hi) {
            int a = p.sign_at(z - r), b = p.sign_at(z + r);
            if (a == 0) {
                set_point(s, QComplex(Rational(z - r)));
                return;
            }
            if (b == 0) {
                set_point(s, QComplex(Rational(z + r)));
                return;
            }
            if (a != b) {
                s.lo = z - r;
                s.hi = z + r;
                return;
            }
        }
    }
    int sm = p.sign_at(m);
    if (sm == 0) {
        set_point(s, QComplex(m));
    } else if (sm == slo) {
        s.lo = m;
    } else {
        s.hi = m;
    }
}

bool box_inside(const Box& inner, const Box& outer) {
    return outer.x0 <= inner.x0 && inner.x1 <= outer.x1 && outer.y0 <= inner.y0 && inner.y1 <= outer.y1;
}

void refine_complex_step(AlgebraicNumber::State& s) {
    const UniPoly& p = s.p;
    const Box b = s.box;
    Rational w = b.width();
    QComplex m((b.x0 + b.x1) / 2, (b.y0 + b.y1) / 2);
    QComplex dv = p.derivative().eval(m);
    if (!dv.is_zero()) {
        QComplex z = m - p.eval(m) / dv;
        unsigned k = bits_for(Rational(256) / w);
        Rational r = pow2_neg(k);
        z = QComplex(round_dyadic(z.re, k + 2), round_dyadic(z.im, k + 2));
        Box nb{z.re - r, z.re + r, z.im - r, z.im + r};
        if (box_inside(nb, b)) {
            auto c = count_roots_in_box(p, nb);
            if (c && *c == 1) {
                s.box = nb;
                return;
            }
        }
    }
    static const Rational fractions[] = {Rational(1, 2), Rational(7, 16), Rational(9, 16),
                                         Rational(3, 8), Rational(5, 8), Rational(13, 32)};
    for (const auto& f : fractions) {
        Rational xm = b.x0 + f * (b.x1 - b.x0);
        Rational ym = b.y0 + f * (b.y1 - b.y0);
        Box kids[4] = {{b.x0, xm, b.y0, ym}, {xm, b.x1, b.y0, ym}, {b.x0, xm, ym, b.y1}, {xm, b.x1, ym, b.y1}};
        bool failed = false;
        for (int i = 0; i < 3; ++i) {
            auto c = count_roots_in_box(p, kids[i]);
            if (!c) {
                failed = true;
                break;
            }
            if (*c == 1) {
                s.box = kids[i];
                return;
            }
        }
        if (!failed) {
            s.box = kids[3];
            return;
        }
    }
    throw std::logic_error("complex refinement: no admissible subdivision");
}

Rational current_width(const AlgebraicNumber::State& s) {
    if (s.point) return Rational(0);
    if (s.real) return s.hi - s.lo;
    return s.box.width();
}

void refine_locked(AlgebraicNumber::State& s, const Rational& eps) {
    while (!s.point && current_width(s) > eps) {
        if (s.real)
            refine_real_step(s);
        else
            refine_complex_step(s);
    }
}

ComplexInterval enclosure_locked(const AlgebraicNumber::State& s) {
    if (s.point) return ComplexInterval(s.value);
    if (s.real) return {RatInterval(s.lo, s.hi), RatInterval(Rational(0))};
    return s.box.as_interval();
}

// Decide whether the root is a (Gaussian) rational; sets the point if so.
void decide_exact_locked(AlgebraicNumber::State& s) {
    if (s.exact != 0) return;
    if (s.point) {
        s.exact = 2;
        return;
    }
    Integer l = primitive_lc(s.p);
    if (s.real) {
        refine_locked(s, Rational(Integer(1), Integer(2 * l * l)));
        if (s.point) return;
        Rational q = simplest_between(s.lo, s.hi);
        if (s.p.eval(q) == 0)
            set_point(s, QComplex(q));
        else
            s.exact = 1;
        return;
    }
    refine_locked(s, Rational(Integer(1), Integer(16 * l * l)));
    if (s.point) return;
    QComplex z(simplest_between(s.box.x0, s.box.x1), simplest_between(s.box.y0, s.box.y1));
    if (s.p.eval(z).is_zero())
        set_point(s, z);
    else
        s.exact = 1;
}

}  // namespace

AlgebraicNumber::AlgebraicNumber() : AlgebraicNumber(rational(Rational(0))) {}

AlgebraicNumber AlgebraicNumber::rational(const Rational& q) {
    auto s = std::make_shared<State>();
    s->p = UniPoly({Rational(-q), Rational(1)});
    s->real = true;
    set_point(*s, QComplex(q));
    return AlgebraicNumber(std::move(s));
}

AlgebraicNumber AlgebraicNumber::gaussian(const QComplex& z) {
    if (z.im == 0) return rational(z.re);
    auto s = std::make_shared<State>();
    s->p = UniPoly({z.norm2(), Rational(-2 * z.re), Rational(1)});
    s->real = false;
    set_point(*s, z);
    return AlgebraicNumber(std::move(s));
}

AlgebraicNumber AlgebraicNumber::real_root(const UniPoly& p, const Rational& lo, const Rational& hi) {
    if (p.degree() < 1) throw std::invalid_argument("real_root: constant defining polynomial");
    auto s = std::make_shared<State>();
    s->p = p.monic();
    s->real = true;
    if (p.degree() == 1) {
        Rational r = -p.coeff(0) / p.coeff(1);
        if (r < lo || r > hi) throw std::invalid_argument("real_root: root outside the interval");
        set_point(*s, QComplex(r));
    } else if (lo == hi) {
        if (p.eval(lo) != 0) throw std::invalid_argument("real_root: point is not a root");
        set_point(*s, QComplex(lo));
    } else {
        int a = p.sign_at(lo), b = p.sign_at(hi);
        if (a == 0 || b == 0 || a == b) throw std::invalid_argument("real_root: no sign change on interval");
        s->lo = lo;
        s->hi = hi;
    }
    return AlgebraicNumber(std::move(s));
}

AlgebraicNumber AlgebraicNumber::complex_root(const UniPoly& p, const Box& box) {
    if (box.y0 <= 0 && box.y1 >= 0) throw std::invalid_argument("complex_root: box meets the real axis");
    auto s = std::make_shared<State>();
    s->p = p.monic();
    s->real = false;
    s->box = box;
    return AlgebraicNumber(std::move(s));
}

const UniPoly& AlgebraicNumber::defpoly() const { return state_->p; }
bool AlgebraicNumber::is_real() const { return state_->real; }

bool AlgebraicNumber::is_point() const {
    std::lock_guard<std::mutex> lock(state_->mu);
    return state_->point;
}

std::optional<Rational> AlgebraicNumber::to_rational() const {
    if (!state_->real) return std::nullopt;
    std::lock_guard<std::mutex> lock(state_->mu);
    decide_exact_locked(*state_);
    if (state_->point) return state_->value.re;
    return std::nullopt;
}

std::optional<QComplex> AlgebraicNumber::to_gaussian() const {
    std::lock_guard<std::mutex> lock(state_->mu);
    decide_exact_locked(*state_);
    if (state_->point) return state_->value;
    return std::nullopt;
}

ComplexInterval AlgebraicNumber::enclosure() const {
    std::lock_guard<std::mutex> lock(state_->mu);
    return enclosure_locked(*state_);
}

ComplexInterval AlgebraicNumber::refine(const Rational& eps) const {
    if (eps <= 0) throw std::invalid_argument("refine: eps must be positive");
    std::lock_guard<std::mutex> lock(state_->mu);
    refine_locked(*state_, eps);
    return enclosure_locked(*state_);
}

RatInterval AlgebraicNumber::refine_real(const Rational& eps) const {
    if (!state_->real) throw std::logic_error("refine_real on a non-real number");
    return refine(eps).re;
}

AlgebraicNumber AlgebraicNumber::conj() const {
    if (state_->real) return *this;
    std::lock_guard<std::mutex> lock(state_->mu);
    auto s = std::make_shared<State>();
    s->p = state_->p;
    s->real = false;
    s->exact = state_->exact;
    if (state_->point) {
        set_point(*s, state_->value.conj());
    } else {
        s->box = state_->box.mirrored();
    }
    return AlgebraicNumber(std::move(s));
}

int AlgebraicNumber::sign() const {
    if (!state_->real) throw std::logic_error("sign of a non-real number");
    std::lock_guard<std::mutex> lock(state_->mu);
    State& s = *state_;
    if (s.point) return conecert::sign(s.value.re);
    if (s.p.eval(Rational(0)) == 0 && s.lo < 0 && s.hi > 0) {
        set_point(s, QComplex(Rational(0)));
        return 0;
    }
    while (s.lo < 0 && s.hi > 0) refine_real_step(s);
    if (s.point) return conecert::sign(s.value.re);
    return s.lo >= 0 ? 1 : -1;
}

int AlgebraicNumber::imag_sign() const {
    if (state_->real) return 0;
    std::lock_guard<std::mutex> lock(state_->mu);
    if (state_->point) return conecert::sign(state_->value.im);
    return state_->box.y0 > 0 ? 1 : -1;
}

double AlgebraicNumber::approx_re() const {
    ComplexInterval e = refine(Rational(1, Integer(1) << 60));
    return to_double(e.re.midpoint());
}

double AlgebraicNumber::approx_im() const {
    ComplexInterval e = refine(Rational(1, Integer(1) << 60));
    return to_double(e.im.midpoint());
}

std::string AlgebraicNumber::to_string(unsigned digits) const {
    std::ostringstream os;
    os << std::setprecision(static_cast<int>(digits)) << approx_re();
    if (!is_real()) {
        double im = approx_im();
        os << (im < 0 ? " - " : " + ") << std::setprecision(static_cast<int>(digits)) << std::fabs(im) << "i";
    }
    return os.str();
}

namespace {

bool regions_disjoint(const ComplexInterval& a, const ComplexInterval& b) {
    return a.re.hi < b.re.lo || b.re.hi < a.re.lo || a.im.hi < b.im.lo || b.im.hi < a.im.lo;
}

// Whether x (unique root of its defpoly in its region) is a root of g | defpoly.
bool is_root_of(const AlgebraicNumber& x, const UniPoly& g) {
    ComplexInterval e = x.enclosure();
    if (x.is_point()) {
        return g.eval(QComplex(e.re.lo, e.im.lo)).is_zero();
    }
    if (x.is_real()) return SturmSequence(g).count_closed(e.re.lo, e.re.hi) >= 1;
    auto c = count_roots_in_box(g, Box{e.re.lo, e.re.hi, e.im.lo, e.im.hi});
    if (!c) throw std::logic_error("isolating box boundary contains a root");
    return *c >= 1;
}

}  // namespace

bool same_number(const AlgebraicNumber& x, const AlgebraicNumber& y) {
    if (x.state_ == y.state_) return true;
    if (x.is_real() != y.is_real()) return false;
    if (x.is_point() && y.is_point()) {
        ComplexInterval a = x.enclosure(), b = y.enclosure();
        return a.re.lo == b.re.lo && a.im.lo == b.im.lo;
    }
    UniPoly g = gcd(x.defpoly(), y.defpoly());
    if (g.degree() < 1) return false;
    if (!is_root_of(x, g) || !is_root_of(y, g)) return false;
    Rational eps(1);
    while (true) {
        ComplexInterval a = x.refine(eps), b = y.refine(eps);
        if (regions_disjoint(a, b)) return false;
        Rational re_lo = std::min(a.re.lo, b.re.lo), re_hi = std::max(a.re.hi, b.re.hi);
        if (x.is_real()) {
            if (SturmSequence(g).count_closed(re_lo, re_hi) == 1) return true;
        } else {
            Rational im_lo = std::min(a.im.lo, b.im.lo), im_hi = std::max(a.im.hi, b.im.hi);
            auto c = count_roots_in_box(g, Box{re_lo, re_hi, im_lo, im_hi});
            if (c && *c == 1) return true;
        }
        eps /= 16;
    }
}

RatInterval norm2_enclosure(const AlgebraicNumber& x, const Rational& eps) {
    Rational e = eps;
    while (true) {
        RatInterval n = x.refine(e).norm2();
        if (n.width() <= eps) return n;
        e /= 4;
    }
}

bool vanishes_at(const UniPoly& q, const AlgebraicNumber& x) {
    UniPoly r = q % x.defpoly();
    if (r.is_zero()) return true;
    if (x.is_point()) {
        ComplexInterval e = x.enclosure();
        return r.eval(QComplex(e.re.lo, e.im.lo)).is_zero();
    }
    UniPoly g = gcd(r, x.defpoly());
    return g.degree() >= 1 && is_root_of(x, g);
}

int sign_at(const UniPoly& q, const AlgebraicNumber& x) {
    if (!x.is_real()) throw std::domain_error("sign_at: non-real algebraic number");
    if (vanishes_at(q, x)) return 0;
    Rational eps(1, 64);
    while (true) {
        RatInterval v = q.eval(x.refine_real(eps));
        if (v.positive()) return 1;
        if (v.negative()) return -1;
        eps /= 256;
    }
}

ComplexInterval eval_enclosure(const UniPoly& q, const AlgebraicNumber& x, const Rational& eps) {
    if (q.degree() <= 0) return ComplexInterval(QComplex(q.coeff(0)));
    Rational e = eps;
    while (true) {
        ComplexInterval v;
        if (x.is_real()) {
            v = ComplexInterval(q.eval(x.refine_real(e)), RatInterval(Rational(0)));
        } else {
            v = q.eval(x.refine(e));
        }
        if (v.width() <= eps) return v;
        e /= 16;
    }
}

}  // namespace conecert
