// Acceptance suite: one criterion per section, one PASS/FAIL line each.
// Exit status is nonzero when any criterion fails.
#include "lievar/hasse.hpp"
#include "lievar/paper_tables.hpp"

#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace lievar;

namespace {

int g_failures = 0;
std::ostringstream g_detail;

void report(int number, const std::string& title, bool ok, const std::string& note = "") {
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << title;
    if (!note.empty()) std::cout << "  [" << note << "]";
    std::cout << std::endl;
    if (!ok) ++g_failures;
}

struct Checker {
    bool ok = true;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            g_detail << "    " << what << "\n";
        }
    }
};

Binding parse_binding(const char* text) {
    Binding b;
    std::string s(text);
    std::istringstream is(s);
    std::string piece;
    while (std::getline(is, piece, ',')) {
        size_t eq = piece.find('=');
        if (eq != std::string::npos) b[piece.substr(0, eq)] = piece.substr(eq + 1);
    }
    return b;
}

const Catalog& cat() {
    static Catalog c = Catalog::load(std::string(LIEVAR_TEST_DATA_DIR) + "/catalog");
    return c;
}

const CertStore& certs() {
    static CertStore s = CertStore::load(std::string(LIEVAR_TEST_DATA_DIR) + "/certs");
    return s;
}

const Comparator& comparator() {
    static Comparator cmp(cat(), certs());
    return cmp;
}

// 1. all 36 rows of the published dim-7 invariant table, exactly
void criterion1() {
    auto start = std::chrono::steady_clock::now();
    Checker c;
    for (const auto& row : dim7_table()) {
        Binding b = parse_binding(row.binding);
        const Fingerprint& fp = cat().fingerprint_of(row.label, b);
        bool match = fp.nil_class == row.nil && fp.solv_class == row.solv &&
                     fp.orbit_dim == row.orbit;
        for (int j = 0; j <= 7; ++j)
            match = match && fp.h[static_cast<size_t>(j)] == row.h[static_cast<size_t>(j)];
        for (int j = 1; j <= 7; ++j)
            match = match && fp.b[static_cast<size_t>(j)] == row.b[static_cast<size_t>(j) - 1];
        c.require(match, std::string("row ") + row.label + "(" + row.binding + ") differs");
    }
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream note;
    note << "36 rows incl. generic, -2, 1-w bindings; " << secs << "s";
    report(1, "invariant table reproduction", c.ok, note.str());
}

// 2. spot adjoint cocycle dimensions
void criterion2() {
    Checker c;
    auto z = [&](const char* label, int j) {
        return std::visit([&](const auto& L) { return adjoint_cocycle_dim(L, j); },
                          cat().instantiate(label));
    };
    c.require(z("g8", 3) == 113, "z3(g8) != 113");
    c.require(z("gF", 3) == 114, "z3(gF) != 114");
    c.require(z("g3", 3) == 114, "z3(g3) != 114");
    c.require(z("g4", 3) == 115, "z3(g4) != 115");
    c.require(z("gH", 2) == 49, "z2(gH) != 49");
    c.require(z("gC", 2) == 48, "z2(gC) != 48");
    report(2, "spot cocycle dimensions", c.ok);
}

// 3. the certificate corpus for the dim-7 proofs verifies exactly
void criterion3() {
    Checker c;
    const char* ids[] = {"gF_to_gE",  "gF_to_gC",  "gF_to_gD",  "gF_to_g13", "gE_to_gD",
                         "gE_to_gB",  "gE_to_gA",  "gE_to_g19", "gE_to_g20", "gE_to_g21",
                         "gE_to_g28", "gE_to_g29", "gE_to_g30", "gE_to_g31", "gC_to_g22",
                         "gC_to_g25", "g10_to_g24"};
    for (const char* id : ids) {
        const Certificate* ct = certs().find(id);
        if (!ct) {
            c.require(false, std::string("certificate ") + id + " missing");
            continue;
        }
        VerifyResult r = verify_certificate(*ct, cat());
        c.require(r.ok, std::string(id) + ": " + r.message);
    }
    report(3, "seven-dimensional certificate corpus verifies", c.ok,
           "17 matrices, g29 with its change of basis, g31 via the corrected diagonal");
}

// 4. the four proposition tables, cell by cell
void criterion4() {
    Checker c;
    const Comparator& cmp = comparator();
    int tracked_unknown = 0, degenerate_cells = 0;
    for (const auto& cell : dim7_prop_cells()) {
        Binding sb = parse_binding(cell.src_binding);
        std::string sym(cell.symbol);
        std::string where = std::string(cell.src) + "(" + cell.src_binding + ") -> " + cell.dst;
        if (sym == "ch") {
            CompareResult r = cmp.compare(cell.src, sb, cell.dst, {});
            c.require(r.verdict != CompareResult::Obstructed,
                      where + ": classified degeneration reported obstructed (" + r.evidence + ")");
            if (r.verdict == CompareResult::Degenerates)
                ++degenerate_cells;
            else
                ++tracked_unknown; // expected-degenerates without a shipped matrix
            continue;
        }
        if (sym == "B" || sym == "z") {
            if (std::string(cell.src) == cell.dst) continue; // diagonal cell: trivial only
            CompareResult r = cmp.compare(cell.src, sb, cell.dst, {});
            c.require(r.verdict != CompareResult::Degenerates,
                      where + ": must never become a degeneration");
            continue;
        }
        if (sym == "I") {
            auto kind_of = [&](const std::string& label, const Binding& b) {
                AlgebraVariant v = cat().instantiate(label, b);
                return ideal_property_R(std::get<LieAlgebra<Rat>>(v)).kind;
            };
            c.require(kind_of(cell.src, sb) == IdealRKind::Witness,
                      where + ": source lost its flag ideal");
            c.require(kind_of(cell.dst, {}) == IdealRKind::None,
                      where + ": target admits a flag ideal");
            continue;
        }
        // named inequality cells: the battery must report exactly that
        // violation (possibly among others)
        const Fingerprint& fs = cat().fingerprint_of(cell.src, sb);
        const Fingerprint& fd = cat().fingerprint_of(cell.dst, {});
        ObstructionReport rep = obstruction_battery(fs, fd);
        std::string crit = sym == "h0" ? "h0" : sym; // table labels match report ids
        c.require(rep.has(crit), where + ": battery misses " + sym);
    }
    std::ostringstream note;
    note << degenerate_cells << " checkmark cells certified, " << tracked_unknown
         << " tracked unknown-expected-degenerates";
    report(4, "obstruction cells of the four proposition tables", c.ok, note.str());
}

// 5. structural identities on every catalog algebra
void criterion5() {
    Checker c;
    for (const CatalogEntry* e : cat().entries()) {
        Binding b;
        if (!e->params.empty()) {
            auto samples = cat().generic_samples(*e, {}, 1);
            b = samples.front();
        }
        AlgebraVariant v = cat().instantiate(e->name, b);
        std::visit(
            [&](const auto& L) {
                int n = L.dim();
                for (Module kind : {Module::Trivial, Module::Adjoint})
                    for (int j = 0; j + 1 <= n; ++j) {
                        auto d1 = coboundary_matrix(L, j + 1, kind);
                        auto d0 = coboundary_matrix(L, j, kind);
                        c.require((d1 * d0).is_zero(), e->name + ": d o d != 0");
                    }
                Fingerprint fp = fingerprint(L);
                int eh = 0, eb = 0;
                for (int j = 0; j <= n; ++j) {
                    int s = (j % 2 == 0) ? 1 : -1;
                    eh += s * fp.h[static_cast<size_t>(j)];
                    eb += s * fp.b[static_cast<size_t>(j)];
                }
                c.require(eh == 0 && (n == 0 || eb == 0), e->name + ": euler sums");
                c.require(fp.h[0] == fp.dim_center, e->name + ": h0 != dim Z");
                if (n >= 1)
                    c.require(fp.b[1] == n - fp.dim_derived, e->name + ": b1 != n - dim [g,g]");
                c.require(fp.orbit_dim == n * n - fp.z[1], e->name + ": orbit dim");
                c.require(fp.h[1] == fp.der_dim - (n - fp.dim_center),
                          e->name + ": h1 identity");
            },
            v);
    }
    report(5, "structural identities on every catalog algebra", c.ok,
           std::to_string(cat().entries().size()) + " entries");
}

// 6. the universal degeneration to the abelian algebra
void criterion6() {
    Checker c;
    std::vector<const CatalogEntry*> entries = cat().entries();
    std::mt19937_64 rng(20260809);
    int done = 0;
    std::set<std::string> seen;
    while (done < 10) {
        const CatalogEntry* e = entries[rng() % entries.size()];
        if (e->dim == 0 || !seen.insert(e->name).second) continue;
        Binding b;
        if (!e->params.empty()) b = cat().generic_samples(*e, {}, 1).front();
        AlgebraVariant v = cat().instantiate(e->name, b);
        bool ok = false;
        // g_t = t^-1 I, handed to the verifier as g^-1 = t I
        if (auto* Lr = std::get_if<LieAlgebra<Rat>>(&v)) {
            Matrix<RatFunc<Rat>> ginv(Lr->dim(), Lr->dim());
            for (int i = 0; i < Lr->dim(); ++i) ginv.at(i, i) = RatFunc<Rat>::variable();
            ok = psg_limit(*Lr, ginv, true) == abelian<Rat>(Lr->dim());
        } else if (auto* Lq = std::get_if<LieAlgebra<QuadExt>>(&v)) {
            Matrix<RatFunc<QuadExt>> ginv(Lq->dim(), Lq->dim());
            for (int i = 0; i < Lq->dim(); ++i) ginv.at(i, i) = RatFunc<QuadExt>::variable();
            ok = psg_limit(*Lq, ginv, true) == abelian<QuadExt>(Lq->dim());
        }
        c.require(ok, e->name + ": scaling curve does not reach the abelian law");
        ++done;
    }
    report(6, "universal abelian degeneration on 10 random algebras", c.ok);
}

// 7. five-dimensional and six-dimensional filiform diagrams
void criterion7() {
    Checker c;
    const Comparator& cmp = comparator();

    auto check_diagram = [&](const char* setname,
                             const std::vector<DiagramEdge>& printed,
                             const std::set<std::pair<std::string, std::string>>& battery_gaps) {
        DegenerationGraph g = build_graph(find_set(setname), cmp);
        // every printed arrow is certified by a verified-certificate edge
        for (const auto& e : printed) {
            int i = g.index_of(cat().node_id(e.src, parse_binding(e.src_binding)));
            int j = g.index_of(cat().node_id(e.dst, parse_binding(e.dst_binding)));
            c.require(i >= 0 && j >= 0 && g.pairs.at({i, j}).status == CompareResult::Degenerates,
                      std::string(setname) + ": printed arrow " + e.src + " -> " + e.dst +
                          " not certified");
        }
        // reachability matches the printed closure exactly
        std::map<std::string, std::set<std::string>> adj;
        for (const auto& e : printed)
            adj[cat().node_id(e.src, parse_binding(e.src_binding))].insert(
                cat().node_id(e.dst, parse_binding(e.dst_binding)));
        for (const auto& a : g.nodes)
            for (const auto& b : g.nodes) {
                if (a.id == b.id) continue;
                std::set<std::string> seen{a.id};
                std::vector<std::string> work{a.id};
                while (!work.empty()) {
                    std::string cur = work.back();
                    work.pop_back();
                    for (const auto& nxt : adj[cur])
                        if (seen.insert(nxt).second) work.push_back(nxt);
                }
                bool printed_reach = seen.count(b.id) > 0;
                bool computed = g.reachable(g.index_of(a.id), g.index_of(b.id));
                c.require(printed_reach == computed,
                          std::string(setname) + ": reachability differs at " + a.id + " -> " +
                              b.id);
                if (!printed_reach) {
                    const PairInfo& info = g.pairs.at({g.index_of(a.id), g.index_of(b.id)});
                    c.require(info.status != CompareResult::Degenerates,
                              std::string(setname) + ": spurious degeneration " + a.id + " -> " +
                                  b.id);
                    bool gap = battery_gaps.count({a.id, b.id}) > 0;
                    if (info.status == CompareResult::Unknown)
                        c.require(gap, std::string(setname) + ": unexpected battery gap " + a.id +
                                           " -> " + b.id);
                    else
                        c.require(!gap, std::string(setname) + ": " + a.id + " -> " + b.id +
                                            " expected to stay outside the battery");
                }
            }
    };

    // the three non-degenerations from the filiform five-dimensional chain
    // hold by a 2-form rank argument that the recorded invariant battery
    // does not capture; they are pinned here as the only undecided pairs
    check_diagram("N5", n5_diagram_edges(),
                  {{"g5_5", "g5_4"}, {"g5_5", "g5_3"}, {"g5_5", "g5_1"}});
    check_diagram("N6-filiform", n6f_diagram_edges(), {});
    report(7, "five- and six-dimensional diagram reproduction", c.ok,
           "29 + 9 reachable pairs; 3 pinned battery gaps in dimension five");
}

// 8. three- and four-dimensional reproductions with the trace invariants
void criterion8() {
    Checker c;
    const Comparator& cmp = comparator();

    // orbit-closure rows in dimension three; the family row is tested at
    // two specialized values
    std::vector<std::pair<std::string, Binding>> l3_nodes = {
        {"sl2", {}}, {"r3", {}},    {"r3a", {{"a", "1/2"}}}, {"r3a", {{"a", "2"}}},
        {"r3_m1", {}}, {"r3_1", {}}, {"r2_c1", {}},           {"n3", {}},
        {"c3", {}},
    };
    auto closure_of = [&](const std::string& label) -> const ClosureRow* {
        for (const auto& row : l3_closure_table())
            if (label == row.label) return &row;
        return nullptr;
    };
    for (const auto& [src, sb] : l3_nodes) {
        const ClosureRow* row = closure_of(src);
        if (!row) continue;
        std::set<std::string> boundary(row->boundary.begin(), row->boundary.end());
        for (const auto& [dst, db] : l3_nodes) {
            if (src == dst || dst == "r3a") continue;
            CompareResult r = cmp.compare(src, sb, dst, db);
            std::string where = src + "(" + binding_str(sb) + ") -> " + dst;
            if (boundary.count(dst)) {
                c.require(r.verdict == CompareResult::Degenerates,
                          where + ": closure member not certified");
            } else {
                c.require(r.verdict != CompareResult::Degenerates, where + ": not in the closure");
                if (r.verdict == CompareResult::Unknown) {
                    // the battery is silent exactly where the invariant
                    // tuples coincide (family members against r3 and
                    // against r3_1); the trace quotients separate those
                    // orbits
                    bool allowed = (src == "r3a" && (dst == "r3_1" || dst == "r3")) ||
                                   (src == "r3" && dst == "r3_1");
                    c.require(allowed, where + ": unexpected battery gap");
                    if (allowed) {
                        LieAlgebra<Rat> S = cat().rational(src, sb);
                        LieAlgebra<Rat> D = cat().rational(dst, db);
                        std::mt19937_64 rng(7);
                        auto cs = c_invariant(S, 1, 1, 8, rng);
                        auto cd = c_invariant(D, 1, 1, 8, rng);
                        c.require(cs && cd && !(*cs == *cd),
                                  where + ": trace quotient does not separate");
                    }
                }
            }
        }
    }
    // the printed r3 row omits r3_1; the certified curve realizes it, so the
    // corrected closure is asserted above (see the closure table note)

    // the essential four-dimensional arrows, one certificate each
    const char* l4_ids[] = {
        "l4_g4_35_to_n4",    "l4_n4_to_n3c1",    "l4_n3c1_to_c4",  "l4_g4_31_to_g2_3",
        "l4_g2_3_to_n3c1",   "l4_g4_00_to_r2c2", "l4_r2c2_to_n3c1", "l4_g2_1_to_g1",
        "l4_g1_to_c4",       "l4_g5_1_to_g3",    "l4_g3_to_g2_2",  "l4_g5_2_to_g4_23",
        "l4_sl2c1_to_g5_m1", "l4_r2r2_to_g4_30", "l4_r2r2_to_g5_0"};
    for (const char* id : l4_ids) {
        const Certificate* ct = certs().find(id);
        if (!ct) {
            c.require(false, std::string(id) + " missing");
            continue;
        }
        VerifyResult r = verify_certificate(*ct, cat());
        c.require(r.ok, std::string(id) + ": " + r.message);
    }
    // and the reduced diagram consists exactly of those arrows
    DegenerationGraph l4 = transitive_reduction(build_graph(find_set("L4-essential"), cmp));
    c.require(static_cast<int>(l4.edges.size()) == 15,
              "reduced four-dimensional diagram has " + std::to_string(l4.edges.size()) +
                  " arrows, expected 15");

    // trace quotients on r_{3,alpha} + C: closed form for all i, j <= 3
    std::mt19937_64 arng(99);
    for (int trial = 0; trial < 10; ++trial) {
        Rat alpha(static_cast<long>(arng() % 39) + 2, 1 + static_cast<long>(arng() % 7));
        LieAlgebra<Rat> L = cat().rational("r3a_c1", {{"a", alpha.str()}});
        std::mt19937_64 rng(500 + trial);
        auto c11 = c_invariant(L, 1, 1, 6, rng);
        c.require(c11.has_value() &&
                      *c11 == Rat(1) + Rat(2) * alpha / (Rat(1) + alpha * alpha),
                  "c11 closed form at alpha = " + alpha.str());
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) {
                auto cij = c_invariant(L, i, j, 6, rng);
                Rat expect = Rat(1) + (alpha.pow(i) + alpha.pow(j)) /
                                          (Rat(1) + alpha.pow(i + j));
                c.require(cij.has_value() && *cij == expect,
                          "c_ij closed form at alpha = " + alpha.str());
            }
    }
    report(8, "low-dimensional closures, essential arrows, trace quotients", c.ok,
           "15 essential certificates; family-to-r3(1) separated by c11");
}

// 9. action and fingerprint invariance, randomized with a fixed seed
void criterion9() {
    Checker c;
    std::mt19937_64 rng(424242);
    auto random_invertible = [&](int n) {
        while (true) {
            Matrix<Rat> g(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    g.at(i, j) = Rat(static_cast<long>(rng() % 7) - 3);
            try {
                inverse(g);
                return g;
            } catch (const singular_matrix_error&) {
            }
        }
    };
    const char* small_labels[] = {"n3", "r3_m1", "sl2", "n4", "r2_r2", "g5_4", "g5_6", "n3_c2"};

    int trials = 0;
    // action property: (gh) . mu = g . (h . mu)
    for (int t = 0; t < 60; ++t, ++trials) {
        const char* label = small_labels[rng() % 8];
        LieAlgebra<Rat> L = cat().rational(label);
        Matrix<Rat> g = random_invertible(L.dim());
        Matrix<Rat> h = random_invertible(L.dim());
        c.require(apply_base_change(apply_base_change(L, h), g) ==
                      apply_base_change(L, g * h),
                  std::string("action property on ") + label);
    }
    // fingerprint invariance under base change
    for (int t = 0; t < 40; ++t, ++trials) {
        const char* label = small_labels[rng() % 8];
        LieAlgebra<Rat> L = cat().rational(label);
        Matrix<Rat> g = random_invertible(L.dim());
        c.require(fingerprint(apply_base_change(L, g)) == fingerprint(L),
                  std::string("fingerprint invariance on ") + label);
    }
    // every verified certificate is consistent with the battery
    for (const auto& [id, result] : comparator().verifications()) {
        if (!result.ok) continue;
        const Certificate* ct = certs().find(id);
        const Fingerprint& fs = cat().fingerprint_of(ct->source, ct->source_binding);
        const Fingerprint& fd = cat().fingerprint_of(ct->target, ct->target_binding);
        c.require(!obstruction_battery(fs, fd).obstructed(),
                  id + ": certified degeneration contradicts the battery");
        // limits of certified curves satisfy Jacobi by construction; the
        // verifier asserts it, re-checked here through re-verification
        c.require(verify_certificate(*ct, cat()).ok, id + ": reverification failed");
    }
    report(9, "action and fingerprint invariance", c.ok,
           std::to_string(trials) + " randomized trials, fixed seed");
}

} // namespace

int main() {
    auto start = std::chrono::steady_clock::now();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (g_failures) {
        std::cout << "---- failure detail ----\n" << g_detail.str();
        std::cout << g_failures << " criteria FAILED (" << secs << "s)\n";
        return 1;
    }
    std::cout << "all 9 criteria passed (" << secs << "s)\n";
    return 0;
}
