#include "conecert/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace conecert {

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
    MultiPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw std::out_of_range("MultiPoly::variable");
    MultiPoly p(nvars);
    Exponents e(nvars, 0);
    e[index] = 1;
    p.add_term(e, Rational(1));
    return p;
}

Rational MultiPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned MultiPoly::degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

unsigned MultiPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
        unsigned s = 0;
        for (unsigned x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (e.size() != nvars_) throw std::invalid_argument("MultiPoly: exponent length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (o.nvars_ != nvars_) throw std::invalid_argument("MultiPoly: variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (o.nvars_ != nvars_) throw std::invalid_argument("MultiPoly: variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("MultiPoly: variable count mismatch");
    MultiPoly r(a.nvars_);
    MultiPoly::Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
    if (point.size() != nvars_) throw std::invalid_argument("MultiPoly::eval: wrong point size");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] > 0) t *= pow(point[i], e[i]);
        }
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::reduce_square(std::size_t var, const MultiPoly& replacement) const {
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponents base = e;
        unsigned k = e[var];
        base[var] = k % 2;
        MultiPoly term(nvars_);
        term.add_term(base, c);
        for (unsigned i = 0; i < k / 2; ++i) term = term * replacement;
        out += term;
    }
    // the replacement itself may reintroduce var^2
    if (out.degree_in(var) >= 2) return out.reduce_square(var, replacement);
    return out;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::size_t var) const {
    std::vector<MultiPoly> out(degree_in(var) + 1, MultiPoly(nvars_));
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        f[var] = 0;
        out[e[var]].add_term(f, c);
    }
    return out;
}

MultiPoly MultiPoly::substitute(std::size_t var, const Rational& value) const {
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        f[var] = 0;
        out.add_term(f, c * pow(value, e[var]));
    }
    return out;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        Rational a = abs_of(c);
        bool any = false;
        std::ostringstream mono;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (any) mono << '*';
            mono << (i < names.size() ? names[i] : "x" + std::to_string(i));
            if (e[i] > 1) mono << '^' << e[i];
            any = true;
        }
        if (!any) {
            os << conecert::to_string(a);
        } else {
            if (a != 1) os << conecert::to_string(a) << '*';
            os << mono.str();
        }
    }
    return os.str();
}

Rational box_lower_bound(const MultiPoly& p) {
    Rational bound(0);
    for (const auto& [e, c] : p.terms()) {
        bool is_constant = std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
        if (is_constant) {
            bound += c;
            continue;
        }
        bool all_even = std::all_of(e.begin(), e.end(), [](unsigned x) { return x % 2 == 0; });
        if (all_even)
            bound += std::min(Rational(0), c);
        else
            bound -= abs_of(c);
    }
    return bound;
}

Rational box_lower_bound(const std::vector<std::vector<Rational>>& c) {
    MultiPoly p(2);
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = 0; j < c[i].size(); ++j)
            p.add_term({static_cast<unsigned>(i), static_cast<unsigned>(j)}, c[i][j]);
    }
    return box_lower_bound(p);
}

}  // namespace conecert
