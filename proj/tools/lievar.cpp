// Command-line front end: invariants, table, verify, compare, hasse.
#include <CLI11.hpp>

#include "lievar/hasse.hpp"
#include "lievar/paper_tables.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

using namespace lievar;

namespace {

constexpr int EXIT_OK = 0;
constexpr int EXIT_CHECK_FAILED = 1;
constexpr int EXIT_USAGE = 2;
constexpr int EXIT_PARSE = 3;

Binding parse_params(const std::vector<std::string>& params) {
    Binding b;
    for (const auto& p : params) {
        size_t eq = p.find('=');
        if (eq == std::string::npos)
            throw unknown_label_error("--param needs name=value, got '" + p + "'");
        b[p.substr(0, eq)] = p.substr(eq + 1);
    }
    return b;
}

std::string fingerprint_row(const Fingerprint& fp) {
    std::ostringstream os;
    for (int j = 0; j <= fp.n; ++j) os << (j ? " " : "") << fp.h[static_cast<size_t>(j)];
    os << " |";
    for (int j = 1; j <= fp.n; ++j) os << " " << fp.b[static_cast<size_t>(j)];
    os << " | " << fp.nil_class << " " << fp.solv_class << " " << fp.orbit_dim;
    return os.str();
}

/// Deterministic fan-out: evaluates jobs on `jobs` workers, results joined
/// in input order.
template <class T>
std::vector<T> run_jobs(std::vector<std::function<T()>> work, int jobs) {
    std::vector<T> results(work.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < work.size(); ++i) results[i] = work[i]();
        return results;
    }
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= work.size()) return;
            results[i] = work[i]();
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return results;
}

int cmd_invariants(const std::string& label, const Binding& binding) {
    const Catalog& cat = Catalog::builtin();
    const Fingerprint& fp = cat.fingerprint_of(label, binding);
    std::cout << fingerprint_row(fp) << "\n";
    return EXIT_OK;
}

const Dim7Row* expected_dim7_row(const std::string& name, const Binding& binding) {
    std::string bs = binding_str(binding);
    for (const auto& row : dim7_table())
        if (name == row.label && bs == row.binding) return &row;
    return nullptr;
}

int cmd_table(const std::string& setname, bool check, int jobs) {
    const Catalog& cat = Catalog::builtin();
    const AlgebraSet& set = find_set(setname);
    std::vector<std::function<std::string()>> work;
    for (const auto& row : set.rows)
        work.push_back([&cat, &row]() {
            const Fingerprint& fp = cat.fingerprint_of(row.label, row.binding);
            return row.display + "\t" + fingerprint_row(fp);
        });
    std::vector<std::string> lines = run_jobs(std::move(work), jobs);
    std::cout << "#algebra\th0..hn | b1..bn | n s dimO\n";
    for (const auto& l : lines) std::cout << l << "\n";

    if (!check) return EXIT_OK;
    int bad = 0;
    if (setname == "dim7-class56") {
        for (const auto& row : set.rows) {
            const Fingerprint& fp = cat.fingerprint_of(row.label, row.binding);
            const Dim7Row* exp = expected_dim7_row(cat.get(row.label).name, row.binding);
            if (!exp) {
                std::cerr << "no expected row for " << row.display << "\n";
                ++bad;
                continue;
            }
            bool ok = fp.nil_class == exp->nil && fp.solv_class == exp->solv &&
                      fp.orbit_dim == exp->orbit;
            for (int j = 0; j <= 7; ++j)
                ok = ok && fp.h[static_cast<size_t>(j)] == exp->h[static_cast<size_t>(j)];
            for (int j = 1; j <= 7; ++j)
                ok = ok && fp.b[static_cast<size_t>(j)] == exp->b[static_cast<size_t>(j) - 1];
            if (!ok) {
                std::cerr << "MISMATCH " << row.display << "\n";
                ++bad;
            }
        }
    } else if (const std::vector<DerivedRow>* exp = derived_table(setname)) {
        for (const auto& row : set.rows) {
            const Fingerprint& fp = cat.fingerprint_of(row.label, row.binding);
            const DerivedRow* er = nullptr;
            for (const auto& r : *exp)
                if (row.display == r.display) er = &r;
            if (!er) {
                std::cerr << "no expected row for " << row.display << "\n";
                ++bad;
                continue;
            }
            std::vector<int> h(fp.h), b(fp.b);
            bool ok = h == er->h && b == er->b && fp.nil_class == er->nil &&
                      fp.solv_class == er->solv && fp.orbit_dim == er->orbit;
            if (!ok) {
                std::cerr << "MISMATCH " << row.display << "\n";
                ++bad;
            }
        }
    } else {
        std::cerr << "no expected table is embedded for set " << setname << "\n";
        return EXIT_USAGE;
    }
    if (bad) {
        std::cerr << bad << " rows differ from the expected table\n";
        return EXIT_CHECK_FAILED;
    }
    std::cerr << "all " << set.rows.size() << " rows match the expected table\n";
    return EXIT_OK;
}

int cmd_verify(const std::vector<std::string>& paths, bool all, int jobs) {
    const Catalog& cat = Catalog::builtin();
    std::vector<Certificate> certs;
    if (all)
        for (const auto& c : CertStore::builtin().all()) certs.push_back(c);
    for (const auto& p : paths) {
        std::ifstream in(p);
        if (!in) {
            std::cerr << "cannot open " << p << "\n";
            return EXIT_USAGE;
        }
        std::stringstream ss;
        ss << in.rdbuf();
        Certificate c = parse_certificate(ss.str());
        c.id = std::filesystem::path(p).stem().string();
        certs.push_back(std::move(c));
    }
    if (certs.empty()) {
        std::cerr << "nothing to verify; pass certificate files or --all\n";
        return EXIT_USAGE;
    }
    std::vector<std::function<VerifyResult()>> work;
    for (const auto& c : certs)
        work.push_back([&cat, &c]() { return verify_certificate(c, cat); });
    std::vector<VerifyResult> results = run_jobs(std::move(work), jobs);
    int failures = 0;
    for (size_t i = 0; i < certs.size(); ++i) {
        const auto& c = certs[i];
        std::cout << (results[i].ok ? "OK  " : "FAIL") << "  " << c.id << "  "
                  << cat.node_id(c.source, c.source_binding) << " -> "
                  << cat.node_id(c.target, c.target_binding);
        if (!results[i].ok) std::cout << "  (" << results[i].message << ")";
        std::cout << "\n";
        if (!results[i].ok) ++failures;
    }
    return failures ? EXIT_CHECK_FAILED : EXIT_OK;
}

int cmd_compare(const std::string& src, const std::string& dst, const Binding& sb,
                const Binding& db) {
    Comparator cmp(Catalog::builtin(), CertStore::builtin());
    CompareResult r = cmp.compare(src, sb, dst, db);
    switch (r.verdict) {
    case CompareResult::Degenerates: std::cout << "DEGENERATES " << r.evidence << "\n"; break;
    case CompareResult::Obstructed: std::cout << "OBSTRUCTED " << r.evidence << "\n"; break;
    case CompareResult::Unknown: std::cout << "UNKNOWN\n"; break;
    }
    return EXIT_OK;
}

int cmd_hasse(const std::string& setname, bool reduce, bool show_unknown,
              const std::string& out_path, const std::string& tsv_path) {
    // family rows carry no certificates; when an instantiated variant of
    // the set exists, the diagram is built on it
    std::string resolved = setname;
    for (const auto& s : builtin_sets())
        if (s.name == setname + "-essential") resolved = s.name;
    const AlgebraSet& set = find_set(resolved);
    Comparator cmp(Catalog::builtin(), CertStore::builtin());
    DegenerationGraph g = build_graph(set, cmp);
    if (reduce) g = transitive_reduction(g);
    std::string dot = emit_dot(g, show_unknown);
    if (out_path.empty()) {
        std::cout << dot;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write " << out_path << "\n";
            return EXIT_USAGE;
        }
        out << dot;
    }
    if (!tsv_path.empty()) {
        std::ofstream out(tsv_path);
        if (!out) {
            std::cerr << "cannot write " << tsv_path << "\n";
            return EXIT_USAGE;
        }
        out << emit_tsv(g);
    }
    return EXIT_OK;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact degeneration toolkit for low-dimensional Lie algebra laws"};
    app.require_subcommand(1);
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;

    std::string label, src, dst, setname, out_path, tsv_path;
    std::vector<std::string> params, dst_params, paths;
    bool check = false, all = false, reduce = false, show_unknown = false;

    CLI::App* inv = app.add_subcommand("invariants", "fingerprint of one algebra");
    inv->add_option("label", label)->required();
    inv->add_option("--param", params, "parameter binding name=value");

    CLI::App* table = app.add_subcommand("table", "invariant table of an algebra set");
    table->add_option("set", setname)->required();
    table->add_flag("--check", check, "diff against the embedded published values");
    table->add_option("--jobs", jobs, "worker threads");

    CLI::App* verify = app.add_subcommand("verify", "verify degeneration certificates");
    verify->add_option("paths", paths, "certificate files");
    verify->add_flag("--all", all, "verify the shipped corpus");
    verify->add_option("--jobs", jobs, "worker threads");

    CLI::App* cm = app.add_subcommand("compare", "degeneration verdict for a pair");
    cm->add_option("src", src)->required();
    cm->add_option("dst", dst)->required();
    cm->add_option("--param", params, "source parameter binding name=value");
    cm->add_option("--target-param", dst_params, "target parameter binding");

    CLI::App* hasse = app.add_subcommand("hasse", "degeneration diagram of a set");
    hasse->add_option("set", setname)->required();
    hasse->add_flag("--reduce", reduce, "transitive reduction");
    hasse->add_flag("--show-unknown", show_unknown, "render unknown pairs dashed");
    hasse->add_option("-o,--out", out_path, "DOT output file (default stdout)");
    hasse->add_option("--tsv", tsv_path, "adjacency TSV output file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (inv->parsed()) return cmd_invariants(label, parse_params(params));
        if (table->parsed()) return cmd_table(setname, check, jobs);
        if (verify->parsed()) return cmd_verify(paths, all, jobs);
        if (cm->parsed())
            return cmd_compare(src, dst, parse_params(params), parse_params(dst_params));
        if (hasse->parsed()) return cmd_hasse(setname, reduce, show_unknown, out_path, tsv_path);
    } catch (const unknown_label_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const parse_error& e) {
        std::cerr << "parse error";
        if (e.line) std::cerr << " at line " << e.line;
        std::cerr << ": " << e.what() << "\n";
        return EXIT_PARSE;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_CHECK_FAILED;
    }
    return EXIT_USAGE;
}
