// Command-line front end: prove, check, bench, dump.

#include "conecert/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

namespace fs = std::filesystem;
using namespace conecert;

namespace {

constexpr int kUsageError = 3;

Verdict run_problem(const Problem& p, const ProveOptions& o) {
    return p.scalar ? prove_scalar(p.recurrence, o) : prove_matrix(p.matrix, o);
}

void print_basis(std::ostream& os, const Cone& c) {
    const std::size_t d = c.dim();
    std::vector<std::vector<std::string>> cells(d, std::vector<std::string>(d));
    std::size_t width = 1;
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i) {
            const QComplex& z = c.basis.cols[j][i];
            std::string s = to_string(z.re);
            if (z.im != 0) s += (z.im > 0 ? "+" : "-") + to_string(abs_of(z.im)) + "i";
            width = std::max(width, s.size());
            cells[i][j] = std::move(s);
        }
    }
    for (const auto& row : cells) {
        os << "  ";
        for (const auto& s : row) os << std::string(width + 2 - s.size(), ' ') << s;
        os << "\n";
    }
}

void print_verdict(std::ostream& os, const Verdict& v) {
    os << "verdict: " << verdict_name(v) << "\n";
    if (const auto* p = std::get_if<Positive>(&v)) {
        const Certificate& c = p->certificate;
        os << "entry index: " << c.entry_index << "\n";
        os << "stability index: " << c.stability_index << " (denominator threshold " << c.m0 << ")\n";
        os << "cone: " << to_string(c.cone.kind) << ", mode " << to_string(c.cone.mode) << ", beta "
           << to_string(c.cone.beta) << ", " << p->digits << " digits";
        if (!c.cone.orders.empty()) {
            os << ", norm orders";
            for (unsigned s : c.cone.orders) os << " " << s;
        }
        os << "\n";
        if (c.shift > 0) os << "normalization shift: " << c.shift << "\n";
        os << "basis (columns):\n";
        print_basis(os, c.cone);
    } else if (const auto* n = std::get_if<NonPositive>(&v)) {
        os << "negative at index " << n->index;
        if (n->coordinate > 0) os << " (coordinate " << n->coordinate + 1 << ")";
        os << ": " << to_string(n->value) << "\n";
    } else if (const auto* i = std::get_if<Inconclusive>(&v)) {
        os << "reason: " << to_string(i->reason) << (i->detail.empty() ? "" : " (" + i->detail + ")") << "\n";
    } else if (const auto* u = std::get_if<Unsupported>(&v)) {
        os << "reason: " << to_string(u->reason) << (u->detail.empty() ? "" : " (" + u->detail + ")") << "\n";
    }
}

bool write_json(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) return false;
    out << j.dump(1) << "\n";
    return static_cast<bool>(out);
}

struct ProveArgs {
    std::string file;
    std::string cone = "auto";
    std::string mode;
    std::size_t max_iter = 100000;
    unsigned max_digits = 60;
    std::string cert;
    bool json = false;
};

ProveOptions options_from(const std::string& cone, const std::string& mode, std::size_t max_iter, unsigned max_digits) {
    ProveOptions o;
    if (cone != "auto") o.kind = parse_cone_kind(cone);
    if (!mode.empty()) o.mode = parse_positivity_mode(mode);
    o.max_iter = max_iter;
    o.max_digits = max_digits;
    return o;
}

int cmd_prove(const ProveArgs& a) {
    Problem p;
    try {
        p = load_problem(a.file);
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
    Verdict v = run_problem(p, options_from(a.cone, a.mode, a.max_iter, a.max_digits));
    if (a.json) {
        std::cout << to_json(v).dump(1) << "\n";
    } else {
        std::cout << "problem: " << (p.name().empty() ? a.file : p.name()) << " (order " << p.order() << ")\n";
        print_verdict(std::cout, v);
    }
    if (!a.cert.empty()) {
        if (const auto* pos = std::get_if<Positive>(&v)) {
            if (!write_json(a.cert, to_json(pos->certificate))) {
                std::cerr << "error: cannot write " << a.cert << "\n";
                return kUsageError;
            }
        }
    }
    return exit_code(v);
}

int cmd_check(const std::string& file) {
    Certificate c;
    try {
        c = load_certificate(file);
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
    CheckResult r = check_certificate(c);
    if (r) {
        std::cout << "certificate valid\n";
        return 0;
    }
    std::cout << "certificate rejected: " << r.reason << "\n";
    return 1;
}

struct BenchRow {
    std::string file;
    std::string name;
    std::size_t order = 0;
    std::string verdict;
    std::string entry, stability, cone;
    long long ms = 0;
    bool cert_ok = true;
};

int cmd_bench(const std::string& dir, unsigned jobs, const std::string& csv, const std::string& cert_dir,
              std::size_t max_iter) {
    std::vector<fs::path> files;
    std::error_code ec;
    for (auto it = fs::recursive_directory_iterator(dir, ec); !ec && it != fs::recursive_directory_iterator(); ++it)
        if (it->is_regular_file() && it->path().extension() == ".json") files.push_back(it->path());
    if (ec) {
        std::cerr << "error: " << dir << ": " << ec.message() << "\n";
        return kUsageError;
    }
    std::sort(files.begin(), files.end());
    if (!cert_dir.empty()) fs::create_directories(cert_dir);

    std::vector<BenchRow> rows(files.size());
    std::atomic<std::size_t> next{0};
    std::mutex err_mu;
    auto worker = [&] {
        for (std::size_t k = next++; k < files.size(); k = next++) {
            BenchRow& row = rows[k];
            row.file = files[k].string();
            try {
                Problem p = load_problem(row.file);
                row.name = p.name().empty() ? files[k].stem().string() : p.name();
                row.order = p.order();
                ProveOptions o;
                o.max_iter = max_iter;
                auto t0 = std::chrono::steady_clock::now();
                Verdict v = run_problem(p, o);
                row.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
                             .count();
                row.verdict = verdict_name(v);
                if (const auto* pos = std::get_if<Positive>(&v)) {
                    row.entry = pos->certificate.entry_index.get_str();
                    row.stability = pos->certificate.stability_index.get_str();
                    row.cone = to_string(pos->certificate.cone.kind);
                    row.cert_ok = check_certificate(pos->certificate).ok;
                    if (!cert_dir.empty())
                        write_json((fs::path(cert_dir) / (files[k].stem().string() + ".cert.json")).string(),
                                   to_json(pos->certificate));
                }
            } catch (const std::exception& e) {
                row.verdict = "Error";
                std::lock_guard<std::mutex> lock(err_mu);
                std::cerr << row.file << ": " << e.what() << "\n";
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < std::max(1u, jobs); ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::ostringstream out;
    out << "name,order,verdict,entry_index,stability_index,cone,ms\n";
    for (const auto& r : rows)
        out << r.name << "," << r.order << "," << r.verdict << "," << r.entry << "," << r.stability << "," << r.cone
            << "," << r.ms << "\n";
    if (csv.empty()) {
        std::cout << out.str();
    } else {
        std::ofstream f(csv);
        f << out.str();
    }
    std::map<std::string, int> counts;
    int rejected = 0;
    for (const auto& r : rows) {
        ++counts[r.verdict];
        if (!r.cert_ok) ++rejected;
    }
    std::cerr << rows.size() << " problems:";
    for (const auto& [k, n] : counts) std::cerr << " " << k << "=" << n;
    std::cerr << "; certificates rejected: " << rejected << "\n";
    return rejected == 0 ? 0 : 1;
}

int cmd_dump(const std::string& file, std::size_t count, const std::string& out_path) {
    Problem p;
    try {
        p = load_problem(file);
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
    std::ofstream f;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
        f.open(out_path);
        if (!f) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return kUsageError;
        }
        os = &f;
    }
    try {
        if (p.scalar) {
            *os << "n,u\n";
            auto u = terms(p.recurrence, count);
            for (std::size_t i = 0; i < u.size(); ++i) *os << i << "," << to_string(u[i]) << "\n";
        } else {
            *os << "n";
            for (std::size_t k = 0; k < p.matrix.dim(); ++k) *os << ",u" << k;
            *os << "\n";
            auto us = iterate(p.matrix, count == 0 ? 0 : count - 1);
            for (std::size_t i = 0; i < std::min(count, us.size()); ++i) {
                *os << i;
                for (const auto& x : us[i]) *os << "," << to_string(x);
                *os << "\n";
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Positivity prover for P-finite and C-finite recurrences"};
    app.require_subcommand(1);

    ProveArgs pa;
    auto* prove = app.add_subcommand("prove", "Prove positivity of a recurrence");
    prove->add_option("file", pa.file, "Recurrence JSON file")->required()->check(CLI::ExistingFile);
    prove->add_option("--cone", pa.cone, "Cone construction")->check(CLI::IsMember({"auto", "polyhedral", "vandergraft"}));
    prove->add_option("--mode", pa.mode, "Positivity mode")->check(CLI::IsMember({"last", "full"}));
    prove->add_option("--max-iter", pa.max_iter, "Iteration cap");
    prove->add_option("--max-digits", pa.max_digits, "Largest basis precision in decimal digits")
        ->check(CLI::PositiveNumber);
    prove->add_option("--cert", pa.cert, "Write the certificate to this file");
    prove->add_flag("--json", pa.json, "Print the verdict as JSON");

    std::string check_file;
    auto* check = app.add_subcommand("check", "Verify a certificate");
    check->add_option("cert", check_file, "Certificate JSON file")->required()->check(CLI::ExistingFile);

    std::string bench_dir, bench_csv, bench_certs;
    unsigned jobs = 1;
    std::size_t bench_iter = 100000;
    auto* bench = app.add_subcommand("bench", "Run every recurrence file below a directory");
    bench->add_option("dir", bench_dir, "Corpus directory")->required()->check(CLI::ExistingDirectory);
    bench->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    bench->add_option("--csv", bench_csv, "Write the report to this file");
    bench->add_option("--cert-dir", bench_certs, "Store certificates of positive problems here");
    bench->add_option("--max-iter", bench_iter, "Iteration cap");

    std::string dump_file, dump_out;
    std::size_t dump_terms = 100;
    auto* dump = app.add_subcommand("dump", "Write exact terms as CSV");
    dump->add_option("file", dump_file, "Recurrence JSON file")->required()->check(CLI::ExistingFile);
    dump->add_option("--terms", dump_terms, "Number of terms");
    dump->add_option("--out", dump_out, "Output CSV (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kUsageError;
    }

    try {
        if (*prove) return cmd_prove(pa);
        if (*check) return cmd_check(check_file);
        if (*bench) return cmd_bench(bench_dir, jobs, bench_csv, bench_certs, bench_iter);
        if (*dump) return cmd_dump(dump_file, dump_terms, dump_out);
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return kUsageError;
}
