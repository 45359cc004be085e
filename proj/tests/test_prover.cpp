#include "conecert/prover.hpp"
#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <functional>

using namespace conecert;

namespace {

std::vector<std::string> corpus(const std::string& dir) {
    std::vector<std::string> out;
    for (const auto& e : std::filesystem::directory_iterator(oracle::data_path(dir)))
        if (e.path().extension() == ".json") out.push_back(e.path().string());
    std::sort(out.begin(), out.end());
    return out;
}

Verdict prove(const Problem& p, const ProveOptions& o = {}) {
    return p.scalar ? prove_scalar(p.recurrence, o) : prove_matrix(p.matrix, o);
}

Json jr(const Rational& q) { return rational_json(q); }
Rational rj(const Json& j) { return rational_from_json(j, "test"); }

using Mutation = std::pair<std::string, std::function<void(Json&)>>;

// Each mutation turns a valid certificate into an invalid one.
std::vector<Mutation> mutations(const Json& cert) {
    const bool scalar = cert["recurrence"]["type"] == "scalar";
    const std::size_t plen = cert["prefix"].size();
    const std::size_t d = cert["cone"]["basis"].size();
    std::vector<Mutation> ms;
    auto bump = [](Json& x, long by) { x = jr(rj(x) + by); };
    ms.push_back({"version", [](Json& c) { c["version"] = "conecert-cert/0"; }});
    ms.push_back({"shift+1", [](Json& c) { c["shift"] = c["shift"].get<unsigned>() + 1; }});
    ms.push_back({"stability-1", [&](Json& c) { bump(c["stability_index"], -1); }});
    ms.push_back({"m0-1", [&](Json& c) { bump(c["m0"], -1); }});
    ms.push_back({"entry-1", [&](Json& c) { bump(c["entry_index"], -1); }});
    ms.push_back({"entry+1", [&](Json& c) { bump(c["entry_index"], 1); }});
    ms.push_back({"entry<stability", [&](Json& c) { c["stability_index"] = jr(rj(c["entry_index"]) + 1); }});
    ms.push_back({"entry negative", [](Json& c) { c["entry_index"] = -1; }});
    ms.push_back({"stability not a number", [](Json& c) { c["stability_index"] = "x"; }});
    ms.push_back({"prefix pop", [](Json& c) { c["prefix"].erase(c["prefix"].size() - 1); }});
    ms.push_back({"no cone", [](Json& c) { c.erase("cone"); }});
    ms.push_back({"cone kind", [](Json& c) { c["cone"]["kind"] = "round"; }});
    ms.push_back({"beta not applied", [](Json& c) { c["cone"]["beta_applied"] = false; }});
    ms.push_back({"negated dominant column", [](Json& c) {
                      for (auto& z : c["cone"]["basis"][0]) {
                          z[0] = jr(-rj(z[0]));
                          z[1] = jr(-rj(z[1]));
                      }
                  }});
    ms.push_back({"dropped column", [](Json& c) {
                      c["cone"]["basis"].erase(c["cone"]["basis"].size() - 1);
                      c["cone"]["conj"].erase(c["cone"]["conj"].size() - 1);
                      c["cone"]["root"].erase(c["cone"]["root"].size() - 1);
                  }});
    if (d >= 2) {
        ms.push_back({"swapped columns", [](Json& c) { std::swap(c["cone"]["basis"][0], c["cone"]["basis"][1]); }});
        ms.push_back({"conj damaged", [](Json& c) { c["cone"]["conj"][0] = 1; }});
    }
    if (scalar) {
        ms.push_back({"prefix[0]+1", [&](Json& c) { bump(c["prefix"][0], 1); }});
        ms.push_back({"prefix[mid]+1", [&, plen](Json& c) { bump(c["prefix"][plen / 2], 1); }});
        ms.push_back({"prefix[last]*2+1", [&, plen](Json& c) {
                          auto& x = c["prefix"][plen - 1];
                          x = jr(2 * rj(x) + 1);
                      }});
        ms.push_back({"prefix push", [](Json& c) { c["prefix"].push_back("1"); }});
        ms.push_back({"prefix garbage", [](Json& c) { c["prefix"][0] = "abc"; }});
        ms.push_back({"initial[0]+1", [&](Json& c) {
                          bump(c["recurrence"]["initial"][0], 1);
                      }});
        ms.push_back({"negated leading coefficient", [](Json& c) {
                          auto& lead = c["recurrence"]["coefficients"].back();
                          for (auto& x : lead) x = jr(-rj(x));
                      }});
        ms.push_back({"order mismatch", [](Json& c) { c["recurrence"]["order"] = c["recurrence"]["order"].get<int>() + 1; }});
    } else {
        ms.push_back({"vector prefix[0][0]+1", [&](Json& c) { bump(c["prefix"][0][0], 1); }});
        ms.push_back({"vector prefix last", [&, plen](Json& c) { bump(c["prefix"][plen - 1][0], 3); }});
        ms.push_back({"initial[0]+1", [&](Json& c) { bump(c["recurrence"]["initial"][0], 1); }});
        ms.push_back({"negated numerators", [](Json& c) {
                          for (auto& row : c["recurrence"]["numerators"])
                              for (auto& p : row)
                                  for (auto& x : p) x = jr(-rj(x));
                      }});
        ms.push_back({"zero denominator", [](Json& c) { c["recurrence"]["denominator"] = Json::array({0}); }});
    }
    return ms;
}

// Rejected means: the certificate no longer parses, or the checker refuses it.
bool rejected(const Json& j, std::string& why) {
    try {
        Certificate c = certificate_from_json(j);
        CheckResult r = check_certificate(c);
        why = r.reason;
        return !r.ok;
    } catch (const FormatError& e) {
        why = e.what();
        return true;
    }
}

}  // namespace

TEST(Prover, CorpusVerdicts) {
    for (const char* dir : {"pfinite", "cfinite", "matrix"}) {
        for (const auto& path : corpus(dir)) {
            if (path.find("u_n") != std::string::npos) continue;  // covered by the acceptance run
            Problem p = load_problem(path);
            Verdict v = prove(p);
            ASSERT_TRUE(std::holds_alternative<Positive>(v)) << path << ": " << verdict_name(v);
            EXPECT_EQ(exit_code(v), 0);
            EXPECT_TRUE(check_certificate(std::get<Positive>(v).certificate)) << path;
        }
    }
    auto reason = [](const char* rel) {
        Verdict v = prove(load_problem(oracle::data_path(rel)));
        EXPECT_EQ(exit_code(v), 2);
        return std::get<Unsupported>(v).reason;
    };
    EXPECT_EQ(reason("unsupported/not_poincare.json"), UnsupportedReason::NotPoincare);
    EXPECT_EQ(reason("unsupported/two_dominant.json"), UnsupportedReason::NoUniqueSimpleDominant);
    Verdict neg = prove(load_problem(oracle::data_path("unsupported/negative_dominant.json")));
    ASSERT_TRUE(std::holds_alternative<NonPositive>(neg));
    EXPECT_EQ(std::get<NonPositive>(neg).index, 1);
    EXPECT_EQ(std::get<NonPositive>(neg).value, -2);
    EXPECT_EQ(exit_code(neg), 1);
}

// Oracle: 2000 exact terms of every bundled Positive scalar sequence are >= 0
// and the certificate prefix agrees with them.
TEST(Prover, SoundAgainstOracle) {
    for (const char* dir : {"pfinite", "cfinite"}) {
        for (const auto& path : corpus(dir)) {
            if (path.find("u_n") != std::string::npos) continue;
            Recurrence r = load_problem(path).recurrence;
            auto u = fixtures::oracle_terms(r, 2000);
            for (std::size_t i = 0; i < u.size(); ++i) ASSERT_GE(u[i], 0) << path << " term " << i;
            Verdict v = prove_scalar(r);
            const auto& cert = std::get<Positive>(v).certificate;
            for (std::size_t i = 0; i < cert.prefix.size(); ++i) ASSERT_EQ(cert.prefix[i], u[i]) << path << " term " << i;
        }
    }
}

// A sign flip of one initial value: NonPositive with an index where the oracle
// sees the first negative term, or Positive with 2000 nonnegative oracle terms.
TEST(Prover, SignFlips) {
    for (const char* rel : {"pfinite/example3.json", "pfinite/apery.json", "cfinite/fibonacci.json",
                            "cfinite/perrin.json", "cfinite/rotation_drift.json"}) {
        Recurrence base = fixtures::load_scalar(rel);
        for (std::size_t k = 0; k < base.initial.size(); ++k) {
            Recurrence r = base;
            if (r.initial[k] == 0) continue;
            r.initial[k] = -r.initial[k];
            auto u = fixtures::oracle_terms(r, 2000);
            Verdict v = prove_scalar(r);
            if (auto* np = std::get_if<NonPositive>(&v)) {
                std::size_t first = 0;
                while (first < u.size() && u[first] >= 0) ++first;
                ASSERT_EQ(np->index, first) << rel << " flip " << k;
                ASSERT_EQ(np->value, u[first]);
            } else {
                ASSERT_TRUE(std::holds_alternative<Positive>(v)) << rel << " flip " << k << ": " << verdict_name(v);
                for (const auto& x : u) ASSERT_GE(x, 0);
            }
        }
    }
}

TEST(Prover, ZeroSequence) {
    Recurrence r;
    r.name = "zero";
    r.coeffs = {UniPoly{1}, UniPoly{1}, UniPoly{1}};
    r.initial = {0, 0};
    Verdict v = prove_scalar(r);
    EXPECT_FALSE(std::holds_alternative<NonPositive>(v)) << verdict_name(v);
    if (auto* p = std::get_if<Positive>(&v)) EXPECT_TRUE(check_certificate(p->certificate));
}

TEST(Prover, IterationCap) {
    Recurrence r = fixtures::load_scalar("pfinite/f_n.json");
    ProveOptions o;
    o.max_iter = 3;
    Verdict v = prove_scalar(r, o);
    ASSERT_TRUE(std::holds_alternative<Inconclusive>(v)) << verdict_name(v);
    EXPECT_EQ(std::get<Inconclusive>(v).reason, InconclusiveReason::IterationCapReached);
}

TEST(Prover, ForcedConeKinds) {
    Recurrence r = fixtures::load_scalar("pfinite/grz4.json");
    for (ConeKind kind : {ConeKind::Vandergraft, ConeKind::Polyhedral}) {
        ProveOptions o;
        o.kind = kind;
        Verdict v = prove_scalar(r, o);
        ASSERT_TRUE(std::holds_alternative<Positive>(v));
        const auto& p = std::get<Positive>(v);
        EXPECT_EQ(p.certificate.cone.kind, kind);
        EXPECT_LE(p.certificate.entry_index, 10);
        EXPECT_TRUE(check_certificate(p.certificate));
    }
}

TEST(Prover, Deterministic) {
    Recurrence r = fixtures::load_scalar("pfinite/example3.json");
    Json a = to_json(prove_scalar(r)), b = to_json(prove_scalar(r));
    EXPECT_EQ(a.dump(), b.dump());
}

TEST(Prover, MatrixPaths) {
    Problem p = load_problem(oracle::data_path("matrix/perturbed_2x2.json"));
    Verdict v = prove_matrix(p.matrix);
    ASSERT_TRUE(std::holds_alternative<Positive>(v));
    const auto& cert = std::get<Positive>(v).certificate;
    EXPECT_FALSE(cert.scalar);
    EXPECT_EQ(cert.cone.mode, PositivityMode::FullOrthant);
    EXPECT_TRUE(check_certificate(cert));
    auto vs = iterate(p.matrix, 50);
    for (const auto& x : vs)
        for (const auto& c : x) ASSERT_GE(c, 0);

    MatrixRecurrence m = p.matrix;
    m.U0 = {1, -1};
    Verdict nv = prove_matrix(m);
    ASSERT_TRUE(std::holds_alternative<NonPositive>(nv)) << verdict_name(nv);
    EXPECT_EQ(std::get<NonPositive>(nv).index, 0);
    EXPECT_EQ(std::get<NonPositive>(nv).coordinate, 1u);
}

// Property: certificates survive a JSON round trip and every mutation is rejected.
TEST(ProverProperty, RoundTripAndMutations) {
    std::vector<std::string> paths;
    for (const char* dir : {"pfinite", "cfinite", "matrix"})
        for (const auto& p : corpus(dir))
            if (p.find("u_n") == std::string::npos) paths.push_back(p);
    std::size_t total = 0;
    for (const auto& path : paths) {
        Verdict v = prove(load_problem(path));
        const Certificate& cert = std::get<Positive>(v).certificate;
        Json j = to_json(cert);
        Certificate back = certificate_from_json(Json::parse(j.dump()));
        ASSERT_EQ(to_json(back).dump(), j.dump()) << path;
        ASSERT_TRUE(check_certificate(back)) << path << ": " << check_certificate(back).reason;
        auto ms = mutations(j);
        ASSERT_GE(ms.size(), 20u) << path;
        for (const auto& [name, apply] : ms) {
            Json bad = j;
            apply(bad);
            ASSERT_NE(bad.dump(), j.dump()) << path << " " << name;
            std::string why;
            EXPECT_TRUE(rejected(bad, why)) << path << ": mutation '" << name << "' accepted";
            ++total;
        }
    }
    EXPECT_GE(total, 20u * paths.size());
}
