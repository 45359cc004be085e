#include "conecert/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace conecert {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, unsigned degree) {
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatInterval UniPoly::eval(const RatInterval& x) const {
    if (x.is_point()) return RatInterval(eval(x.lo));
    // Horner in interval arithmetic; also evaluate the expansion around the
    // midpoint and keep the tighter of the two enclosures.
    RatInterval acc(Rational(0));
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + RatInterval(*it);
    Rational m = x.midpoint();
    UniPoly centered = shift(m);
    RatInterval dx(x.lo - m, x.hi - m);
    RatInterval acc2(Rational(0));
    for (auto it = centered.coeffs_.rbegin(); it != centered.coeffs_.rend(); ++it)
        acc2 = acc2 * dx + RatInterval(*it);
    return {std::max(acc.lo, acc2.lo), std::min(acc.hi, acc2.hi)};
}

QComplex UniPoly::eval(const QComplex& z) const {
    QComplex acc(Rational(0));
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + QComplex(*it);
    return acc;
}

ComplexInterval UniPoly::eval(const ComplexInterval& z) const {
    ComplexInterval acc(QComplex(Rational(0)));
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * z + ComplexInterval(QComplex(*it));
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
    return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    UniPoly r = *this;
    Rational inv = Rational(1) / lc();
    for (auto& c : r.coeffs_) c *= inv;
    return r;
}

UniPoly UniPoly::primitive() const {
    if (is_zero()) return *this;
    Integer l(1), g(0);
    for (const auto& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Rational> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        Rational s = c * Rational(l);
        v.push_back(s);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num_mpz_t());
    }
    for (auto& c : v) c /= Rational(g);
    return UniPoly(std::move(v));
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
    UniPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= inner;
        acc += constant(*it);
    }
    return acc;
}

UniPoly UniPoly::shift(const Rational& a) const {
    // Taylor shift by repeated synthetic division.
    std::vector<Rational> c = coeffs_;
    const std::size_t n = c.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = n - 1; j > i; --j) c[j - 1] += a * c[j];
    }
    return UniPoly(std::move(c));
}

UniPoly UniPoly::scale_argument(const Rational& c) const {
    std::vector<Rational> v = coeffs_;
    Rational p(1);
    for (auto& x : v) {
        x *= p;
        p *= c;
    }
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(r);
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Rational a = abs_of(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || a != 1) {
            os << conecert::to_string(a);
            if (i > 0) os << '*';
        }
        if (i >= 1) os << var;
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {UniPoly(), a};
    std::vector<Rational> r = a.coeffs();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    const std::size_t dq = r.size() - 1 - db;
    std::vector<Rational> q(dq + 1, Rational(0));
    Rational inv = Rational(1) / b.lc();
    for (std::size_t k = dq + 1; k-- > 0;) {
        Rational c = r[k + db] * inv;
        q[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) r[k + j] -= c * b.coeffs()[j];
    }
    r.resize(db);
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }
UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = (x % y).primitive();
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

XGcd xgcd(const UniPoly& a, const UniPoly& b) {
    UniPoly r0 = a, r1 = b;
    UniPoly s0 = UniPoly::constant(1), s1;
    UniPoly t0, t1 = UniPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UniPoly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        UniPoly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Rational inv = Rational(1) / r0.lc();
    return {r0 * inv, s0 * inv, t0 * inv};
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_constant()) return p.is_zero() ? p : UniPoly::constant(1);
    return (p / gcd(p, p.derivative())).monic();
}

std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& p) {
    std::vector<std::pair<UniPoly, unsigned>> out;
    if (p.degree() < 1) return out;
    UniPoly f = p.monic();
    UniPoly fp = f.derivative();
    UniPoly a = gcd(f, fp);
    UniPoly b = f / a;
    UniPoly c = fp / a;
    UniPoly d = c - b.derivative();
    unsigned i = 1;
    while (b.degree() >= 1) {
        UniPoly ai = gcd(b, d);
        b = b / ai;
        c = d / ai;
        d = c - b.derivative();
        if (ai.degree() >= 1) out.emplace_back(ai.monic(), i);
        ++i;
    }
    return out;
}

Rational cauchy_root_bound(const UniPoly& p) {
    if (p.degree() < 1) return Rational(0);
    Rational m(0);
    Rational l = abs_of(p.lc());
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs_of(p.coeff(static_cast<std::size_t>(i))) / l));
    return m + 1;
}

namespace {

int count_variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

int sign_at_pos_inf(const UniPoly& p) { return sign(p.lc()); }
int sign_at_neg_inf(const UniPoly& p) { return p.degree() % 2 == 0 ? sign(p.lc()) : -sign(p.lc()); }

// Signed remainder sequence a, b, -rem(a, b), ... scaled by positive
// constants to keep coefficient growth in check.
std::vector<UniPoly> signed_remainders(const UniPoly& a, const UniPoly& b) {
    std::vector<UniPoly> seq;
    seq.push_back(a);
    if (b.is_zero()) return seq;
    seq.push_back(b);
    while (true) {
        UniPoly r = seq[seq.size() - 2] % seq.back();
        if (r.is_zero()) break;
        r = -r;
        r *= Rational(1) / abs_of(r.lc());
        seq.push_back(std::move(r));
    }
    return seq;
}

int variations(const std::vector<UniPoly>& seq, const Rational& x) {
    std::vector<int> s;
    s.reserve(seq.size());
    for (const auto& p : seq) s.push_back(p.sign_at(x));
    return count_variations(s);
}

}  // namespace

SturmSequence::SturmSequence(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("Sturm sequence of the zero polynomial");
    UniPoly sf = squarefree_part(p);
    seq_ = signed_remainders(sf, sf.derivative());
}

int SturmSequence::variations_at(const Rational& x) const { return variations(seq_, x); }

int SturmSequence::variations_at_pos_inf() const {
    std::vector<int> s;
    for (const auto& p : seq_) s.push_back(sign_at_pos_inf(p));
    return count_variations(s);
}

int SturmSequence::variations_at_neg_inf() const {
    std::vector<int> s;
    for (const auto& p : seq_) s.push_back(sign_at_neg_inf(p));
    return count_variations(s);
}

int SturmSequence::count_half_open(const Rational& a, const Rational& b) const {
    if (b <= a) return 0;
    return variations_at(a) - variations_at(b);
}

int SturmSequence::count_closed(const Rational& a, const Rational& b) const {
    if (b < a) return 0;
    int at_a = base().sign_at(a) == 0 ? 1 : 0;
    return count_half_open(a, b) + at_a;
}

int cauchy_index(const UniPoly& p, const UniPoly& q, const Rational& a, const Rational& b) {
    if (p.sign_at(a) == 0 || p.sign_at(b) == 0)
        throw std::invalid_argument("cauchy_index: denominator vanishes at an endpoint");
    if (q.is_zero()) return 0;
    auto seq = signed_remainders(p, q);
    return variations(seq, a) - variations(seq, b);
}

std::pair<UniPoly, UniPoly> restrict_to_segment(const UniPoly& p, const QComplex& z0, const QComplex& z1) {
    UniPoly X({z0.re, Rational(z1.re - z0.re)});
    UniPoly Y({z0.im, Rational(z1.im - z0.im)});
    UniPoly R, I;
    for (int k = p.degree(); k >= 0; --k) {
        UniPoly nr = R * X - I * Y + UniPoly::constant(p.coeff(static_cast<std::size_t>(k)));
        UniPoly ni = R * Y + I * X;
        R = std::move(nr);
        I = std::move(ni);
    }
    return {R, I};
}

std::optional<int> count_roots_in_box(const UniPoly& p, const Box& box) {
    if (p.is_zero()) throw std::invalid_argument("count_roots_in_box: zero polynomial");
    if (p.degree() == 0) return 0;
    const QComplex corners[4] = {
        {box.x0, box.y0}, {box.x1, box.y0}, {box.x1, box.y1}, {box.x0, box.y1}};
    QComplex values[4];
    for (int k = 0; k < 4; ++k) {
        values[k] = p.eval(corners[k]);
        if (values[k].is_zero()) return std::nullopt;
    }
    std::pair<UniPoly, UniPoly> edges[4];
    for (int k = 0; k < 4; ++k) {
        edges[k] = restrict_to_segment(p, corners[k], corners[(k + 1) % 4]);
        UniPoly g = gcd(edges[k].first, edges[k].second);
        if (g.degree() >= 1 && SturmSequence(g).count_closed(Rational(0), Rational(1)) > 0)
            return std::nullopt;
    }
    // Rotate p by a Gaussian unit multiple so the imaginary part is nonzero at
    // every corner; the Cauchy index needs that at the segment endpoints.
    static const QComplex multipliers[] = {
        {Rational(1), Rational(0)}, {Rational(0), Rational(1)}, {Rational(1), Rational(1)},
        {Rational(1), Rational(-1)}, {Rational(2), Rational(1)}, {Rational(1), Rational(2)},
        {Rational(2), Rational(-1)}, {Rational(1), Rational(-2)}, {Rational(3), Rational(1)},
        {Rational(1), Rational(3)}};
    const QComplex* mu = nullptr;
    for (const auto& m : multipliers) {
        bool ok = true;
        for (const auto& v : values) {
            if ((m * v).im == 0) {
                ok = false;
                break;
            }
        }
        if (ok) {
            mu = &m;
            break;
        }
    }
    if (mu == nullptr) throw std::logic_error("count_roots_in_box: no admissible rotation");
    int total = 0;
    for (auto& [re, im] : edges) {
        UniPoly r2 = re * mu->re - im * mu->im;
        UniPoly i2 = re * mu->im + im * mu->re;
        total += cauchy_index(i2, r2, Rational(0), Rational(1));
    }
    if (total % 2 != 0) throw std::logic_error("count_roots_in_box: odd winding sum");
    return total / 2;
}

}  // namespace conecert
