#include "conecert/rational.hpp"

#include <cctype>

namespace conecert {

namespace {

bool is_integer_literal(std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

Integer parse_integer(std::string_view s) {
    if (!is_integer_literal(s)) throw ParseError("malformed integer '" + std::string(s) + "'");
    std::string t(s);
    if (t[0] == '+') t.erase(0, 1);
    return Integer(t, 10);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto s = trim(text);
    if (s.empty()) throw ParseError("empty rational");
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(trim(s.substr(0, slash)));
        Integer den = parse_integer(trim(s.substr(slash + 1)));
        if (den == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ipart = s.substr(0, dot);
        std::string_view fpart = s.substr(dot + 1);
        bool negative = !ipart.empty() && ipart[0] == '-';
        if (!ipart.empty() && (ipart[0] == '-' || ipart[0] == '+')) ipart.remove_prefix(1);
        if (ipart.empty()) ipart = "0";
        if (fpart.empty() || !is_integer_literal(fpart) || fpart[0] == '-' || fpart[0] == '+')
            throw ParseError("malformed decimal '" + std::string(s) + "'");
        Integer whole = parse_integer(ipart);
        Integer frac = parse_integer(fpart);
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, fpart.size());
        Rational q(whole * scale + frac, scale);
        q.canonicalize();
        return negative ? Rational(-q) : q;
    }
    return Rational(parse_integer(s));
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Integer floor_of(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil_of(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Rational pow(const Rational& base, unsigned exponent) {
    Rational result(1);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
    result = Rational(num, den);
    result.canonicalize();
    return result;
}

Rational simplest_between(const Rational& lo_in, const Rational& hi_in) {
    if (lo_in > hi_in) throw std::invalid_argument("simplest_between: empty interval");
    if (lo_in <= 0 && hi_in >= 0) return Rational(0);
    if (hi_in < 0) return Rational(-simplest_between(-hi_in, -lo_in));
    // Continued-fraction descent on 0 < lo <= hi.
    Rational lo = lo_in, hi = hi_in;
    Integer fl = floor_of(lo);
    if (Rational(fl) == lo) return lo;
    if (Rational(fl + 1) <= hi) return Rational(fl + 1);
    // fl < lo <= hi < fl + 1
    Rational inner = simplest_between(Rational(1) / (hi - fl), Rational(1) / (lo - fl));
    Rational r = Rational(fl) + Rational(1) / inner;
    r.canonicalize();
    return r;
}

namespace {

// floor(sqrt(q * 4^bits)) / 2^bits and the matching ceiling.
std::pair<Rational, Rational> sqrt_bounds(const Rational& q, unsigned bits) {
    if (q < 0) throw std::domain_error("sqrt of negative rational");
    Integer scale = Integer(1) << (2 * bits);
    Rational scaled = q * Rational(scale);
    Integer fl = floor_of(scaled);
    Integer root;
    mpz_sqrt(root.get_mpz_t(), fl.get_mpz_t());
    Integer denom = Integer(1) << bits;
    Rational lower(root, denom);
    lower.canonicalize();
    Integer up = root;
    if (Rational(up * up) != scaled) up += 1;
    Rational upper(up, denom);
    upper.canonicalize();
    return {lower, upper};
}

}  // namespace

Rational sqrt_lower(const Rational& q, unsigned bits) { return sqrt_bounds(q, bits).first; }
Rational sqrt_upper(const Rational& q, unsigned bits) { return sqrt_bounds(q, bits).second; }

Rational decimal_eps(unsigned digits) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, digits);
    Rational r(1, p);
    r.canonicalize();
    return r;
}

double to_double(const Rational& q) { return q.get_d(); }

Integer binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace conecert
