#include "conecert/cone.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace conecert {

std::string to_string(ConeKind k) { return k == ConeKind::Vandergraft ? "vandergraft" : "polyhedral"; }

std::string to_string(PositivityMode m) { return m == PositivityMode::FullOrthant ? "full" : "last"; }

ConeKind parse_cone_kind(const std::string& s) {
    if (s == "vandergraft") return ConeKind::Vandergraft;
    if (s == "polyhedral") return ConeKind::Polyhedral;
    throw std::invalid_argument("unknown cone kind '" + s + "'");
}

PositivityMode parse_positivity_mode(const std::string& s) {
    if (s == "full") return PositivityMode::FullOrthant;
    if (s == "last") return PositivityMode::LastCoordinate;
    throw std::invalid_argument("unknown positivity mode '" + s + "'");
}

std::size_t Cone::real_slots() const {
    return static_cast<std::size_t>(std::count_if(slots.begin(), slots.end(), [](const Slot& s) { return !s.complex; }));
}

std::size_t Cone::complex_slots() const { return slots.size() - real_slots(); }

namespace {

bool valid_polygon_order(unsigned s) { return s == 2 || s == 3 || s == 4 || s == 6 || s == 8 || s == 12; }

std::vector<Slot> slot_layout(const RationalBasis& b) {
    std::vector<Slot> out;
    std::size_t coord = 1;
    for (std::size_t j = 1; j < b.dim(); ++j) {
        const int p = j < b.conj.size() ? b.conj[j] : -1;
        if (p < 0) {
            out.push_back(Slot{false, j, coord, 1});
            coord += 1;
        } else if (static_cast<std::size_t>(p) > j) {
            out.push_back(Slot{true, j, coord, 0});
            coord += 2;
        }
    }
    return out;
}

}  // namespace

std::size_t slot_count(const RationalBasis& b) { return slot_layout(b).size(); }

std::vector<unsigned> slot_orders(const RationalBasis& b, const std::vector<unsigned>& root_orders) {
    std::vector<unsigned> out;
    for (const Slot& s : slot_layout(b)) {
        if (!s.complex) {
            out.push_back(1);
            continue;
        }
        const int r = s.column < b.root.size() ? b.root[s.column] : -1;
        if (r < 0 || static_cast<std::size_t>(r) >= root_orders.size())
            throw std::invalid_argument("slot_orders: unknown eigenvalue for column " + std::to_string(s.column + 1));
        out.push_back(root_orders[static_cast<std::size_t>(r)]);
    }
    return out;
}

void Cone::prepare() {
    if (beta <= 0) throw std::invalid_argument("cone: beta must be positive");
    R = real_form(basis);
    if (determinant(R) == 0) throw std::invalid_argument("cone: basis is singular");
    Rinv = inverse(R);
    slots = slot_layout(basis);
    if (orders.size() != slots.size())
        throw std::invalid_argument("cone: expected " + std::to_string(slots.size()) + " norm orders, got " +
                                    std::to_string(orders.size()));
    std::vector<unsigned> polygon;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (!slots[i].complex) {
            if (orders[i] != 1) throw std::invalid_argument("cone: real slots use norm order 1");
        } else if (kind == ConeKind::Polyhedral) {
            if (!valid_polygon_order(orders[i]))
                throw std::invalid_argument("cone: unsupported polygon order " + std::to_string(orders[i]));
            polygon.push_back(orders[i]);
        } else if (orders[i] != 0) {
            throw std::invalid_argument("cone: Vandergraft pairs use norm order 0");
        }
        slots[i].order = orders[i];
    }
    field = NumberField::for_orders(polygon);
    if (field == nullptr) throw std::invalid_argument("cone: unsupported combination of polygon orders");
}

Cone make_cone(ConeKind kind, PositivityMode mode, RationalBasis basis, std::vector<unsigned> orders,
               const Rational& eps) {
    Cone c;
    c.kind = kind;
    c.mode = mode;
    c.basis = std::move(basis);
    c.orders = std::move(orders);
    c.eps = eps;
    c.prepare();
    return c;
}

Cone with_beta(const Cone& c, const Rational& beta) {
    if (beta <= 0) throw std::invalid_argument("with_beta: beta must be positive");
    Cone out = c;
    const Rational f = beta / c.beta;
    for (auto& z : out.basis.cols[0]) z = QComplex(z.re * f, z.im * f);
    out.beta = beta;
    out.prepare();
    return out;
}

std::vector<LinearConstraint> linear_constraints(const Cone& c) {
    const NumberField& f = *c.field;
    const std::size_t d = c.dim();
    auto zero_row = [&] { return std::vector<FieldElem>(d, FieldElem(f, Rational(0))); };
    std::vector<LinearConstraint> out;
    {
        auto row = zero_row();
        row[0] = FieldElem(f, Rational(1));
        out.push_back({"a11", row});
    }
    for (const Slot& s : c.slots) {
        const std::string col = std::to_string(s.column + 1);
        if (!s.complex) {
            for (int sg : {-1, 1}) {
                auto row = zero_row();
                row[0] = FieldElem(f, Rational(1));
                row[s.coord] = FieldElem(f, Rational(sg));
                out.push_back({std::string("a11") + (sg < 0 ? "-" : "+") + "a" + col, row});
            }
        } else if (c.kind == ConeKind::Polyhedral) {
            PolygonFacets pf = polygon_facets(f, s.order);
            for (std::size_t m = 0; m < pf.kappa.size(); ++m) {
                auto row = zero_row();
                row[0] = pf.one_plus_cos;
                row[s.coord] = pf.kappa[m].first * Rational(-1, 2);
                row[s.coord + 1] = pf.kappa[m].second * Rational(-1, 2);
                out.push_back({"facet(a" + col + "," + std::to_string(m) + ")", row});
            }
        }
    }
    return out;
}

Vec coordinates(const Cone& c, const Vec& w) {
    if (w.size() != c.dim()) throw std::invalid_argument("coordinates: dimension mismatch");
    return c.Rinv * w;
}

namespace {

FieldElem dot(const std::vector<FieldElem>& row, const Vec& a) {
    FieldElem acc = row.empty() ? FieldElem() : FieldElem(row[0].field(), Rational(0));
    for (std::size_t i = 0; i < row.size(); ++i)
        if (a[i] != 0 && !row[i].is_zero()) acc += row[i] * a[i];
    return acc;
}

// sign-based predicate over all defining inequalities; strict selects > 0
bool satisfies(const Cone& c, const Vec& w, bool strict) {
    Vec a = coordinates(c, w);
    auto ok = [strict](int sg) { return strict ? sg > 0 : sg >= 0; };
    for (const auto& lc : linear_constraints(c))
        if (!ok(dot(lc.coef, a).sign())) return false;
    if (c.kind == ConeKind::Vandergraft) {
        for (const Slot& s : c.slots) {
            if (!s.complex) continue;
            const Rational& x = a[s.coord];
            const Rational& y = a[s.coord + 1];
            if (!ok(sign(Rational(a[0] * a[0] - (x * x + y * y) / 4)))) return false;
        }
    }
    return true;
}

std::vector<std::vector<std::pair<FieldElem, FieldElem>>> polygon_choices(const Cone& c) {
    std::vector<std::vector<std::pair<FieldElem, FieldElem>>> out;
    for (const Slot& s : c.slots) {
        std::vector<std::pair<FieldElem, FieldElem>> ch;
        if (s.complex) {
            for (int k = 0; k < 2 * static_cast<int>(s.order); ++k) {
                auto [cs, sn] = root_of_unity(*c.field, s.order, k);
                ch.emplace_back(cs * Rational(2), sn * Rational(-2));
            }
        }
        out.push_back(std::move(ch));
    }
    return out;
}

}  // namespace

bool membership(const Cone& c, const Vec& w) { return satisfies(c, w, false); }

bool in_interior(const Cone& c, const Vec& w) { return satisfies(c, w, true); }

Integer generator_count(const Cone& c) {
    Integer n = 1;
    for (const Slot& s : c.slots) n *= s.complex ? Integer(2 * s.order) : Integer(2);
    return n;
}

std::vector<std::vector<FieldElem>> generator_coordinates(const Cone& c, std::size_t limit) {
    if (c.kind != ConeKind::Polyhedral) throw std::logic_error("generator_coordinates: polyhedral cones only");
    if (generator_count(c) > limit) throw std::length_error("too many extremal generators");
    const NumberField& f = *c.field;
    auto choices = polygon_choices(c);
    std::vector<std::vector<FieldElem>> out;
    std::vector<FieldElem> cur(c.dim(), FieldElem(f, Rational(0)));
    cur[0] = FieldElem(f, Rational(1));
    // mixed-radix enumeration over the slots
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == c.slots.size()) {
            out.push_back(cur);
            return;
        }
        const Slot& s = c.slots[k];
        if (!s.complex) {
            for (int sg : {1, -1}) {
                cur[s.coord] = FieldElem(f, Rational(sg));
                rec(k + 1);
            }
        } else {
            for (const auto& [x, y] : choices[k]) {
                cur[s.coord] = x;
                cur[s.coord + 1] = y;
                rec(k + 1);
            }
        }
    };
    rec(0);
    return out;
}

FieldElem min_over_generators(const Cone& c, const std::vector<FieldElem>& h) {
    auto choices = polygon_choices(c);
    FieldElem total = h[0];
    for (std::size_t k = 0; k < c.slots.size(); ++k) {
        const Slot& s = c.slots[k];
        if (!s.complex) {
            const FieldElem& v = h[s.coord];
            total += v.sign() >= 0 ? -v : v;
            continue;
        }
        std::optional<FieldElem> best;
        for (const auto& [x, y] : choices[k]) {
            FieldElem v = h[s.coord] * x + h[s.coord + 1] * y;
            if (!best || v < *best) best = std::move(v);
        }
        total += *best;
    }
    return total;
}

std::vector<std::string> parameter_names(const Cone& c) {
    std::vector<std::string> names;
    for (const Slot& s : c.slots) {
        const std::string col = std::to_string(s.column + 1);
        if (!s.complex) {
            names.push_back("e" + col);
        } else {
            names.push_back("a" + col);
            names.push_back("b" + col);
        }
    }
    return names;
}

std::vector<MultiPoly> symbolic_generator(const Cone& c) {
    const std::size_t nv = parameter_names(c).size();
    std::vector<MultiPoly> g(c.dim(), MultiPoly(nv));
    g[0] = MultiPoly::constant(nv, Rational(1));
    std::size_t v = 0;
    for (const Slot& s : c.slots) {
        if (!s.complex) {
            g[s.coord] = MultiPoly::variable(nv, v++);
        } else {
            g[s.coord] = MultiPoly::variable(nv, v++) * Rational(2);
            g[s.coord + 1] = MultiPoly::variable(nv, v++) * Rational(-2);
        }
    }
    return g;
}

MultiPoly reduce_parameters(const Cone& c, const MultiPoly& p) {
    const std::size_t nv = p.nvars();
    MultiPoly out = p;
    std::size_t v = 0;
    for (const Slot& s : c.slots) {
        if (!s.complex) {
            out = out.reduce_square(v++, MultiPoly::constant(nv, Rational(1)));
        } else {
            const std::size_t va = v++, vb = v++;
            MultiPoly a = MultiPoly::variable(nv, va);
            out = out.reduce_square(vb, MultiPoly::constant(nv, Rational(1)) - a * a);
        }
    }
    return out;
}

ExtremalSet extremal_vectors(const Cone& c, std::size_t limit) {
    ExtremalSet e;
    e.kind = c.kind;
    const std::size_t d = c.dim();
    if (c.kind == ConeKind::Polyhedral) {
        e.count = generator_count(c);
        e.coords = generator_coordinates(c, limit);
        for (const auto& co : e.coords) {
            std::vector<FieldElem> w(d, FieldElem(*c.field, Rational(0)));
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    if (c.R(i, j) != 0) w[i] += co[j] * c.R(i, j);
            e.vectors.push_back(std::move(w));
        }
        return e;
    }
    e.count = 0;
    e.parameters = parameter_names(c);
    auto g = symbolic_generator(c);
    const std::size_t nv = e.parameters.size();
    for (std::size_t i = 0; i < d; ++i) {
        MultiPoly w(nv);
        for (std::size_t j = 0; j < d; ++j)
            if (c.R(i, j) != 0) w += g[j] * c.R(i, j);
        e.symbolic.push_back(std::move(w));
    }
    return e;
}

namespace {

std::vector<std::size_t> constrained_rows(const Cone& c) {
    std::vector<std::size_t> rows;
    if (c.mode == PositivityMode::LastCoordinate) {
        rows.push_back(c.dim() - 1);
    } else {
        for (std::size_t i = 0; i < c.dim(); ++i) rows.push_back(i);
    }
    return rows;
}

// Lower bound over the generators of sum_j h_j c_j with h rational, h_0 excluded.
FieldElem slot_minimum(const Cone& c, const Vec& h) {
    const NumberField& f = *c.field;
    if (c.kind == ConeKind::Polyhedral) {
        std::vector<FieldElem> hf;
        for (const auto& x : h) hf.emplace_back(f, x);
        hf[0] = FieldElem(f, Rational(0));
        return min_over_generators(c, hf);
    }
    // Vandergraft: the circle is enclosed in the box; ranges are [-1, 1]
    Rational total(0);
    for (const Slot& s : c.slots) {
        if (!s.complex) {
            total -= abs_of(h[s.coord]);
        } else {
            total -= 2 * (abs_of(h[s.coord]) + abs_of(h[s.coord + 1]));
        }
    }
    return FieldElem(f, total);
}

}  // namespace

bool positivity_holds(const Cone& c) {
    for (std::size_t i : constrained_rows(c)) {
        Vec h = c.R.row(i);
        FieldElem m = slot_minimum(c, h) + FieldElem(*c.field, h[0]);
        if (m.sign() < 0) return false;
    }
    return true;
}

Cone rescale_positive(const Cone& draft, int min_exp, int max_exp) {
    if (draft.slots.empty()) {
        if (!positivity_holds(draft)) throw RescaleFailure("the dominant direction is not in the required orthant");
        return draft;
    }
    struct Need {
        Rational v1;
        FieldElem rest;
    };
    std::vector<Need> needs;
    for (std::size_t i : constrained_rows(draft)) {
        Vec h = draft.R.row(i);
        needs.push_back({h[0], slot_minimum(draft, h)});
    }
    auto ok = [&](const Rational& factor) {
        for (const auto& n : needs)
            if ((n.rest + FieldElem(*draft.field, n.v1 * factor)).sign() < 0) return false;
        return true;
    };
    for (int k = min_exp; k <= max_exp; ++k) {
        Rational factor = k >= 0 ? Rational(Integer(1) << k) : Rational(1, Integer(1) << -k);
        if (!ok(factor)) continue;
        Cone out = with_beta(draft, draft.beta * factor);
        if (!positivity_holds(out)) break;
        return out;
    }
    throw RescaleFailure("no power-of-two rescaling of the dominant column makes the cone positive");
}

bool check_contraction(const Cone& c, const Matrix& a) {
    const Matrix m = c.Rinv * a * c.R;
    const std::size_t d = c.dim();
    if (c.kind == ConeKind::Polyhedral) {
        for (const auto& lc : linear_constraints(c)) {
            std::vector<FieldElem> h(d, FieldElem(*c.field, Rational(0)));
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t i = 0; i < d; ++i)
                    if (m(i, j) != 0 && !lc.coef[i].is_zero()) h[j] += lc.coef[i] * m(i, j);
            if (min_over_generators(c, h).sign() <= 0) return false;
        }
        return true;
    }
    auto g = symbolic_generator(c);
    const std::size_t nv = parameter_names(c).size();
    std::vector<MultiPoly> y(d, MultiPoly(nv));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (m(i, j) != 0) y[i] += g[j] * m(i, j);
    for (const auto& lc : linear_constraints(c)) {
        MultiPoly p(nv);
        for (std::size_t i = 0; i < d; ++i)
            if (!lc.coef[i].is_zero()) p += y[i] * *lc.coef[i].as_rational();
        if (box_lower_bound(reduce_parameters(c, p)) <= 0) return false;
    }
    for (const Slot& s : c.slots) {
        if (!s.complex) continue;
        MultiPoly q = y[0] * y[0] - (y[s.coord] * y[s.coord] + y[s.coord + 1] * y[s.coord + 1]) * Rational(1, 4);
        if (box_lower_bound(reduce_parameters(c, q)) <= 0) return false;
    }
    return true;
}

std::variant<std::vector<unsigned>, NoPolyhedral> select_norm_orders(const SpectralData& s, unsigned s_max) {
    if (s.dominance != Dominance::UniqueSimplePositive) return NoPolyhedral{"no unique simple positive dominant eigenvalue"};
    const AlgebraicNumber& l1 = s.dominant();
    const Rational floor_eps(1, Integer(1) << 120);

    auto certified = [&](const AlgebraicNumber& x, unsigned ord) {
        for (Rational eps(1, 64); eps >= floor_eps; eps /= 256) {
            RatInterval lam = l1.refine_real(eps);
            RatInterval nrm = ps_norm_enclosure(x.refine(eps), ord, eps);
            if (nrm.hi < lam.lo) return true;
            if (nrm.lo >= lam.hi) return false;
        }
        return false;
    };

    std::vector<unsigned> orders(s.roots.size(), 1);
    for (std::size_t i = 1; i < s.roots.size(); ++i) {
        const AlgebraicNumber& x = s.roots[i].value;
        if (x.is_real() || x.imag_sign() < 0) continue;
        unsigned chosen = 0;
        for (unsigned ord : {2u, 3u, 4u, 6u, 8u, 12u}) {
            if (ord > s_max) break;
            if (certified(x, ord)) {
                chosen = ord;
                break;
            }
        }
        if (chosen == 0)
            return NoPolyhedral{"eigenvalue " + x.to_string() + " needs a polygon order above " + std::to_string(s_max)};
        orders[i] = chosen;
        orders[static_cast<std::size_t>(s.conjugate_of(i))] = chosen;
    }

    auto complex_orders = [&] {
        std::vector<unsigned> v;
        for (std::size_t i = 1; i < s.roots.size(); ++i)
            if (!s.roots[i].value.is_real()) v.push_back(orders[i]);
        return v;
    };
    if (NumberField::for_orders(complex_orders()) == nullptr) {
        // 8 does not share a field with 3, 6 or 12; try the 24-gon field instead
        for (std::size_t i = 1; i < s.roots.size(); ++i) {
            if (orders[i] != 8) continue;
            if (s_max < 12 || !certified(s.roots[i].value, 12))
                return NoPolyhedral{"unsupported combination of polygon orders"};
            orders[i] = 12;
        }
        if (NumberField::for_orders(complex_orders()) == nullptr)
            return NoPolyhedral{"unsupported combination of polygon orders"};
    }
    return orders;
}

}  // namespace conecert
