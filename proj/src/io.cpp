#include "conecert/io.hpp"

#include <fstream>
#include <sstream>

namespace conecert {

Json rational_json(const Rational& q) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return Json(q.get_num().get_si());
    return Json(to_string(q));
}

Rational rational_from_json(const Json& j, const std::string& where) {
    try {
        if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
        if (j.is_string()) return parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
        throw FormatError(where + ": " + e.what());
    }
    throw FormatError(where + ": expected an integer or a rational string");
}

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw FormatError(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw FormatError(where + "." + key + ": missing");
    return *it;
}

const Json& array_field(const Json& j, const char* key, const std::string& where) {
    const Json& a = field(j, key, where);
    if (!a.is_array()) throw FormatError(where + "." + key + ": expected an array");
    return a;
}

Json integer_json(const Integer& z) {
    if (z.fits_slong_p()) return Json(z.get_si());
    return Json(z.get_str());
}

Integer integer_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    throw FormatError(where + ": expected an integer");
}

Json poly_json(const UniPoly& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(rational_json(c));
    return a;
}

UniPoly poly_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer() || j.is_string()) return UniPoly::constant(rational_from_json(j, where));
    if (!j.is_array()) throw FormatError(where + ": expected a coefficient list");
    std::vector<Rational> c;
    for (std::size_t i = 0; i < j.size(); ++i) c.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return UniPoly(std::move(c));
}

Json vec_json(const Vec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(rational_json(x));
    return a;
}

Vec vec_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) throw FormatError(where + ": expected an array");
    Vec v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return v;
}

std::string name_of(const Json& j) {
    auto it = j.find("name");
    return it != j.end() && it->is_string() ? it->get<std::string>() : std::string();
}

Recurrence recurrence_from_json(const Json& j) {
    const std::string w = "recurrence";
    const Json& cs = array_field(j, "coefficients", w);
    std::vector<UniPoly> coeffs;
    for (std::size_t i = 0; i < cs.size(); ++i)
        coeffs.push_back(poly_from_json(cs[i], w + ".coefficients[" + std::to_string(i) + "]"));
    if (coeffs.size() < 2) throw FormatError(w + ".coefficients: need at least two polynomials");
    if (auto it = j.find("order"); it != j.end()) {
        if (!it->is_number_unsigned() || it->get<std::size_t>() + 1 != coeffs.size())
            throw FormatError(w + ".order: does not match the number of coefficients");
    }
    Vec init = vec_from_json(array_field(j, "initial", w), w + ".initial");
    std::string form = "eq1";
    if (auto it = j.find("form"); it != j.end()) {
        if (!it->is_string()) throw FormatError(w + ".form: expected a string");
        form = it->get<std::string>();
    }
    Recurrence r;
    if (form == "eq1") {
        r.name = name_of(j);
        r.coeffs = std::move(coeffs);
        r.initial = std::move(init);
    } else if (form == "homogeneous") {
        r = from_homogeneous(name_of(j), coeffs, std::move(init));
    } else {
        throw FormatError(w + ".form: expected \"eq1\" or \"homogeneous\"");
    }
    try {
        r.validate();
    } catch (const std::invalid_argument& e) {
        throw FormatError(w + ": " + e.what());
    }
    return r;
}

MatrixRecurrence matrix_from_json(const Json& j) {
    const std::string w = "recurrence";
    MatrixRecurrence m;
    m.name = name_of(j);
    const Json& rows = array_field(j, "numerators", w);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::string wi = w + ".numerators[" + std::to_string(i) + "]";
        if (!rows[i].is_array() || rows[i].size() != rows.size()) throw FormatError(wi + ": expected a square matrix");
        std::vector<UniPoly> row;
        for (std::size_t k = 0; k < rows[i].size(); ++k)
            row.push_back(poly_from_json(rows[i][k], wi + "[" + std::to_string(k) + "]"));
        m.A.num.push_back(std::move(row));
    }
    if (m.A.num.empty()) throw FormatError(w + ".numerators: empty matrix");
    m.A.den = poly_from_json(field(j, "denominator", w), w + ".denominator");
    if (m.A.den.is_zero()) throw FormatError(w + ".denominator: zero polynomial");
    m.U0 = vec_from_json(array_field(j, "initial", w), w + ".initial");
    if (m.U0.size() != m.A.num.size()) throw FormatError(w + ".initial: expected " + std::to_string(m.A.num.size()) + " values");
    return m;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError(path + ": cannot open");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json parse_file(const std::string& path) {
    try {
        return Json::parse(read_file(path));
    } catch (const Json::parse_error& e) {
        throw FormatError(path + ": " + e.what());
    }
}

}  // namespace

Json to_json(const Recurrence& r) {
    Json j;
    j["type"] = "scalar";
    j["name"] = r.name;
    j["order"] = r.order();
    j["form"] = "eq1";
    Json cs = Json::array();
    for (const auto& p : r.coeffs) cs.push_back(poly_json(p));
    j["coefficients"] = cs;
    j["initial"] = vec_json(r.initial);
    return j;
}

Json to_json(const MatrixRecurrence& m) {
    Json j;
    j["type"] = "matrix";
    j["name"] = m.name;
    Json rows = Json::array();
    for (const auto& row : m.A.num) {
        Json r = Json::array();
        for (const auto& p : row) r.push_back(poly_json(p));
        rows.push_back(r);
    }
    j["numerators"] = rows;
    j["denominator"] = poly_json(m.A.den);
    j["initial"] = vec_json(m.U0);
    return j;
}

Problem problem_from_json(const Json& j) {
    if (!j.is_object()) throw FormatError("recurrence: expected an object");
    Problem p;
    std::string type = "scalar";
    if (auto it = j.find("type"); it != j.end()) {
        if (!it->is_string()) throw FormatError("recurrence.type: expected a string");
        type = it->get<std::string>();
    }
    if (type == "scalar") {
        p.scalar = true;
        p.recurrence = recurrence_from_json(j);
    } else if (type == "matrix") {
        p.scalar = false;
        p.matrix = matrix_from_json(j);
    } else {
        throw FormatError("recurrence.type: expected \"scalar\" or \"matrix\"");
    }
    return p;
}

Json to_json(const Problem& p) { return p.scalar ? to_json(p.recurrence) : to_json(p.matrix); }

Problem load_problem(const std::string& path) { return problem_from_json(parse_file(path)); }

Json to_json(const Cone& c) {
    Json j;
    j["kind"] = to_string(c.kind);
    j["mode"] = to_string(c.mode);
    j["beta"] = rational_json(c.beta);
    j["beta_applied"] = true;
    j["eps"] = rational_json(c.eps);
    j["digits"] = c.basis.digits;
    j["norm_orders"] = c.orders;
    j["conj"] = c.basis.conj;
    j["root"] = c.basis.root;
    Json cols = Json::array();
    for (const auto& col : c.basis.cols) {
        Json cj = Json::array();
        for (const auto& z : col) cj.push_back(Json::array({rational_json(z.re), rational_json(z.im)}));
        cols.push_back(cj);
    }
    j["basis"] = cols;
    return j;
}

Cone cone_from_json(const Json& j) {
    const std::string w = "cone";
    Cone c;
    try {
        c.kind = parse_cone_kind(field(j, "kind", w).get<std::string>());
        c.mode = parse_positivity_mode(field(j, "mode", w).get<std::string>());
        if (!field(j, "beta_applied", w).get<bool>()) throw FormatError(w + ".beta_applied: must be true");
        c.orders = field(j, "norm_orders", w).get<std::vector<unsigned>>();
        c.basis.conj = field(j, "conj", w).get<std::vector<int>>();
        c.basis.root = field(j, "root", w).get<std::vector<int>>();
        c.basis.digits = field(j, "digits", w).get<unsigned>();
    } catch (const Json::exception& e) {
        throw FormatError(w + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw FormatError(w + ": " + e.what());
    }
    c.beta = rational_from_json(field(j, "beta", w), w + ".beta");
    c.eps = rational_from_json(field(j, "eps", w), w + ".eps");
    const Json& cols = array_field(j, "basis", w);
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const std::string wk = w + ".basis[" + std::to_string(k) + "]";
        if (!cols[k].is_array()) throw FormatError(wk + ": expected a column");
        std::vector<QComplex> col;
        for (std::size_t i = 0; i < cols[k].size(); ++i) {
            const Json& z = cols[k][i];
            const std::string wi = wk + "[" + std::to_string(i) + "]";
            if (!z.is_array() || z.size() != 2) throw FormatError(wi + ": expected [re, im]");
            col.emplace_back(rational_from_json(z[0], wi + ".re"), rational_from_json(z[1], wi + ".im"));
        }
        c.basis.cols.push_back(std::move(col));
    }
    if (c.basis.conj.size() != c.basis.cols.size()) throw FormatError(w + ".conj: one entry per column expected");
    try {
        c.prepare();
    } catch (const std::exception&) {
        // left for the checker to reject
    }
    return c;
}

Json to_json(const Certificate& c) {
    Json j;
    j["version"] = c.version;
    j["recurrence"] = c.scalar ? to_json(c.recurrence) : to_json(c.matrix);
    j["shift"] = c.shift;
    j["cone"] = to_json(c.cone);
    j["stability_index"] = integer_json(c.stability_index);
    j["m0"] = integer_json(c.m0);
    j["entry_index"] = integer_json(c.entry_index);
    Json pre = Json::array();
    if (c.scalar) {
        for (const auto& q : c.prefix) pre.push_back(to_string(q));
    } else {
        for (const auto& v : c.vector_prefix) {
            Json vj = Json::array();
            for (const auto& q : v) vj.push_back(to_string(q));
            pre.push_back(vj);
        }
    }
    j["prefix"] = pre;
    return j;
}

Certificate certificate_from_json(const Json& j) {
    const std::string w = "certificate";
    Certificate c;
    const Json& v = field(j, "version", w);
    if (!v.is_string()) throw FormatError(w + ".version: expected a string");
    c.version = v.get<std::string>();
    Problem p = problem_from_json(field(j, "recurrence", w));
    c.scalar = p.scalar;
    c.recurrence = std::move(p.recurrence);
    c.matrix = std::move(p.matrix);
    const Json& sh = field(j, "shift", w);
    if (!sh.is_number_unsigned()) throw FormatError(w + ".shift: expected a nonnegative integer");
    c.shift = sh.get<unsigned>();
    c.cone = cone_from_json(field(j, "cone", w));
    c.stability_index = integer_from_json(field(j, "stability_index", w), w + ".stability_index");
    c.m0 = integer_from_json(field(j, "m0", w), w + ".m0");
    c.entry_index = integer_from_json(field(j, "entry_index", w), w + ".entry_index");
    const Json& pre = array_field(j, "prefix", w);
    for (std::size_t i = 0; i < pre.size(); ++i) {
        const std::string wi = w + ".prefix[" + std::to_string(i) + "]";
        if (c.scalar) {
            c.prefix.push_back(rational_from_json(pre[i], wi));
        } else {
            c.vector_prefix.push_back(vec_from_json(pre[i], wi));
        }
    }
    return c;
}

Certificate load_certificate(const std::string& path) { return certificate_from_json(parse_file(path)); }

Json to_json(const StabilityWitness& w) {
    Json j;
    j["m"] = integer_json(w.m);
    j["m0"] = integer_json(w.m0);
    Json bs = Json::array();
    for (const auto& b : w.bounds) {
        Json bj;
        bj["label"] = b.label;
        bj["bound"] = poly_json(b.bound);
        bj["threshold"] = integer_json(b.threshold);
        bs.push_back(bj);
    }
    j["bounds"] = bs;
    return j;
}

Json to_json(const Verdict& v) {
    Json j;
    j["verdict"] = verdict_name(v);
    if (const auto* p = std::get_if<Positive>(&v)) {
        j["entry_index"] = integer_json(p->certificate.entry_index);
        j["stability_index"] = integer_json(p->certificate.stability_index);
        j["cone"] = to_string(p->certificate.cone.kind);
        j["digits"] = p->digits;
        j["beta"] = to_string(p->certificate.cone.beta);
        j["norm_orders"] = p->certificate.cone.orders;
    } else if (const auto* n = std::get_if<NonPositive>(&v)) {
        j["index"] = integer_json(n->index);
        j["coordinate"] = n->coordinate;
        j["value"] = to_string(n->value);
    } else if (const auto* i = std::get_if<Inconclusive>(&v)) {
        j["reason"] = to_string(i->reason);
        j["detail"] = i->detail;
    } else if (const auto* u = std::get_if<Unsupported>(&v)) {
        j["reason"] = to_string(u->reason);
        j["detail"] = u->detail;
    }
    return j;
}

}  // namespace conecert
