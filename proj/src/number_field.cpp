#include "conecert/number_field.hpp"

#include <algorithm>
#include <stdexcept>

namespace conecert {

NumberField::NumberField(std::string name, UniPoly modulus, AlgebraicNumber theta, std::vector<unsigned> orders)
    : name_(std::move(name)), modulus_(std::move(modulus)), theta_(std::move(theta)), orders_(std::move(orders)) {}

// Fields are built once and never destroyed.
struct FieldFactory {
    static const NumberField* make(const std::string& name, const UniPoly& mu, const AlgebraicNumber& theta,
                                   std::vector<unsigned> orders) {
        return new NumberField(name, mu, theta, std::move(orders));
    }
};

namespace {

const NumberField& field_q() {
    static const NumberField* f =
        FieldFactory::make("Q", UniPoly({Rational(0), Rational(1)}), AlgebraicNumber::rational(Rational(0)), {1, 2});
    return *f;
}

const NumberField& field_sqrt2() {
    static const NumberField* f = FieldFactory::make(
        "Q(sqrt2)", UniPoly({Rational(-2), Rational(0), Rational(1)}),
        AlgebraicNumber::real_root(UniPoly({Rational(-2), Rational(0), Rational(1)}), Rational(1), Rational(2)),
        {1, 2, 4});
    return *f;
}

const NumberField& field_sqrt3() {
    static const NumberField* f = FieldFactory::make(
        "Q(sqrt3)", UniPoly({Rational(-3), Rational(0), Rational(1)}),
        AlgebraicNumber::real_root(UniPoly({Rational(-3), Rational(0), Rational(1)}), Rational(1), Rational(2)),
        {1, 2, 3, 6});
    return *f;
}

const NumberField& field_theta8() {
    static const UniPoly mu({Rational(2), Rational(0), Rational(-4), Rational(0), Rational(1)});
    static const NumberField* f = FieldFactory::make(
        "Q(2cos(pi/8))", mu, AlgebraicNumber::real_root(mu, Rational(9, 5), Rational(19, 10)), {1, 2, 4, 8});
    return *f;
}

const NumberField& field_theta12() {
    static const UniPoly mu({Rational(1), Rational(0), Rational(-4), Rational(0), Rational(1)});
    static const NumberField* f = FieldFactory::make(
        "Q(2cos(pi/12))", mu, AlgebraicNumber::real_root(mu, Rational(19, 10), Rational(2)), {1, 2, 3, 4, 6, 12});
    return *f;
}

UniPoly theta_poly(std::initializer_list<Rational> c) { return UniPoly(c); }

}  // namespace

const NumberField& NumberField::rationals() { return field_q(); }

const NumberField* NumberField::for_orders(const std::vector<unsigned>& orders) {
    bool n2 = false, n3 = false, n8 = false, n12 = false;
    for (unsigned s : orders) {
        switch (s) {
            case 1:
            case 2: break;
            case 3:
            case 6: n3 = true; break;
            case 4: n2 = true; break;
            case 8: n8 = true; break;
            case 12: n12 = true; break;
            default: return nullptr;
        }
    }
    if (n8) return (n3 || n12) ? nullptr : &field_theta8();
    if (n12 || (n2 && n3)) return &field_theta12();
    if (n2) return &field_sqrt2();
    if (n3) return &field_sqrt3();
    return &field_q();
}

bool NumberField::supports(unsigned s) const {
    return std::find(orders_.begin(), orders_.end(), s) != orders_.end();
}

UniPoly NumberField::cos_pi_over(unsigned s) const {
    if (!supports(s)) throw std::invalid_argument("cos(pi/s) not in " + name_);
    const Rational h(1, 2);
    if (s == 1) return UniPoly::constant(-1);
    if (s == 2) return UniPoly();
    if (s == 3) return UniPoly::constant(h);
    if (this == &field_sqrt2()) return theta_poly({0, h});  // s == 4
    if (this == &field_sqrt3()) return theta_poly({0, h});  // s == 6
    if (this == &field_theta8()) {
        if (s == 4) return theta_poly({-1, 0, h});
        return theta_poly({0, h});  // s == 8
    }
    // theta12: sqrt3 = theta^2 - 2, sqrt2 = theta^3 - 3 theta
    if (s == 4) return theta_poly({0, Rational(-3, 2), 0, h});
    if (s == 6) return theta_poly({-1, 0, h});
    return theta_poly({0, h});  // s == 12
}

UniPoly NumberField::sin_pi_over(unsigned s) const {
    if (!supports(s)) throw std::invalid_argument("sin(pi/s) not in " + name_);
    const Rational h(1, 2);
    if (s == 1) return UniPoly();
    if (s == 2) return UniPoly::constant(1);
    if (s == 4) return cos_pi_over(4);
    if (this == &field_sqrt3()) return s == 3 ? theta_poly({0, h}) : UniPoly::constant(h);
    if (this == &field_theta8()) {
        // sin(pi/8) = sqrt2 / (4 cos(pi/8)) = (theta^2 - 2) / (2 theta)
        FieldElem num(*this, theta_poly({-2, 0, 1}));
        FieldElem den(*this, theta_poly({0, 2}));
        return (num / den).poly();
    }
    if (s == 3) return theta_poly({-1, 0, h});
    if (s == 6) return UniPoly::constant(h);
    // sin(pi/12) = 1 / (2 theta)
    FieldElem den(*this, theta_poly({0, 2}));
    return den.inverse().poly();
}

FieldElem::FieldElem(const NumberField& f, UniPoly v) : field_(&f), v_(std::move(v)) {
    if (v_.degree() >= f.degree()) v_ = v_ % f.modulus();
}

std::optional<Rational> FieldElem::as_rational() const {
    if (v_.degree() <= 0) return v_.coeff(0);
    return std::nullopt;
}

int FieldElem::sign() const {
    if (v_.is_zero()) return 0;
    if (v_.degree() == 0) return conecert::sign(v_.coeff(0));
    Rational eps(1, 1024);
    while (true) {
        RatInterval iv = v_.eval(field_->theta().refine_real(eps));
        if (iv.positive()) return 1;
        if (iv.negative()) return -1;
        eps /= 1024;
    }
}

RatInterval FieldElem::enclosure(const Rational& eps) const {
    if (v_.degree() <= 0) return RatInterval(v_.coeff(0));
    Rational e = eps;
    while (true) {
        RatInterval iv = v_.eval(field_->theta().refine_real(e));
        if (iv.width() <= eps) return iv;
        e /= 16;
    }
}

double FieldElem::approx() const { return to_double(enclosure(Rational(1, Integer(1) << 60)).midpoint()); }

namespace {

const NumberField& common_field(const FieldElem& a, const FieldElem& b) {
    if (&a.field() == &b.field()) return a.field();
    if (b.poly().degree() <= 0) return a.field();
    if (a.poly().degree() <= 0) return b.field();
    throw std::logic_error("arithmetic between different number fields");
}

}  // namespace

FieldElem FieldElem::operator-() const { return FieldElem(*field_, -v_); }

FieldElem& FieldElem::operator+=(const FieldElem& o) {
    field_ = &common_field(*this, o);
    v_ += o.v_;
    return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
    field_ = &common_field(*this, o);
    v_ -= o.v_;
    return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
    field_ = &common_field(*this, o);
    v_ *= o.v_;
    if (v_.degree() >= field_->degree()) v_ = v_ % field_->modulus();
    return *this;
}

FieldElem& FieldElem::operator*=(const Rational& c) {
    v_ *= c;
    return *this;
}

FieldElem FieldElem::inverse() const {
    if (v_.is_zero()) throw std::domain_error("inverse of zero field element");
    if (v_.degree() == 0) return FieldElem(*field_, Rational(Rational(1) / v_.coeff(0)));
    XGcd r = xgcd(v_, field_->modulus());
    if (r.g.degree() != 0) throw std::logic_error("field modulus is not irreducible");
    return FieldElem(*field_, r.s);
}

FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
FieldElem operator*(FieldElem a, const Rational& c) { return a *= c; }
FieldElem operator*(const Rational& c, FieldElem a) { return a *= c; }
FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }
bool operator<(const FieldElem& a, const FieldElem& b) { return (a - b).sign() < 0; }
bool operator==(const FieldElem& a, const FieldElem& b) { return (a - b).is_zero(); }

std::pair<FieldElem, FieldElem> root_of_unity(const NumberField& f, unsigned s, int k) {
    const int period = 2 * static_cast<int>(s);
    k %= period;
    if (k < 0) k += period;
    FieldElem c(f, f.cos_pi_over(s)), sn(f, f.sin_pi_over(s));
    FieldElem re(f, Rational(1)), im(f, Rational(0));
    for (int i = 0; i < k; ++i) {
        FieldElem nre = re * c - im * sn;
        FieldElem nim = re * sn + im * c;
        re = std::move(nre);
        im = std::move(nim);
    }
    return {re, im};
}

PolygonFacets polygon_facets(const NumberField& f, unsigned s) {
    if (s < 2) throw std::invalid_argument("polygon_facets requires s >= 2");
    PolygonFacets out;
    FieldElem c(f, f.cos_pi_over(s)), sn(f, f.sin_pi_over(s));
    FieldElem one(f, Rational(1));
    out.one_plus_cos = one + c;
    // 1 + omega^-1 = (1 + c) - i sn
    FieldElem br = out.one_plus_cos, bi = -sn;
    for (unsigned m = 0; m < 2 * s; ++m) {
        auto [wr, wi] = root_of_unity(f, s, -static_cast<int>(m));
        out.kappa.emplace_back(wr * br - wi * bi, wr * bi + wi * br);
    }
    return out;
}

FieldElem ps_norm(const Rational& re, const Rational& im, unsigned s) {
    if (s == 0) throw std::invalid_argument("ps_norm: s must be positive");
    if (s == 1) {
        if (im != 0) throw std::domain_error("ps_norm: s = 1 requires a real argument");
        return FieldElem(NumberField::rationals(), abs_of(re));
    }
    const NumberField* f = NumberField::for_orders({s});
    if (f == nullptr) throw std::invalid_argument("ps_norm: unsupported order");
    PolygonFacets pf = polygon_facets(*f, s);
    std::optional<FieldElem> best;
    for (const auto& [kr, ki] : pf.kappa) {
        FieldElem v = kr * re - ki * im;  // Re(kappa * z)
        if (!best || *best < v) best = v;
    }
    return *best / pf.one_plus_cos;
}

RatInterval ps_norm_enclosure(const ComplexInterval& z, unsigned s, const Rational& eps) {
    if (s == 1) {
        if (!(z.im.is_point() && z.im.lo == 0)) throw std::domain_error("ps_norm: s = 1 requires a real argument");
        return {z.re.mig(), z.re.mag()};
    }
    const NumberField* f = NumberField::for_orders({s});
    if (f == nullptr) throw std::invalid_argument("ps_norm: unsupported order");
    PolygonFacets pf = polygon_facets(*f, s);
    RatInterval denom = pf.one_plus_cos.enclosure(eps);
    std::optional<RatInterval> best;
    for (const auto& [kr, ki] : pf.kappa) {
        RatInterval v = (kr.enclosure(eps) * z.re - ki.enclosure(eps) * z.im) / denom;
        if (!best)
            best = v;
        else
            best = RatInterval(std::max(best->lo, v.lo), std::max(best->hi, v.hi));
    }
    return *best;
}

}  // namespace conecert
