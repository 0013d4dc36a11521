#include <doctest.h>

#include "lievar/hasse.hpp"
#include "lievar/paper_tables.hpp"

#include <set>

using namespace lievar;

namespace {

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

} // namespace

TEST_CASE("certificate files round-trip and verify") {
    const Certificate* c = certs().find("gF_to_gC");
    REQUIRE(c != nullptr);
    CHECK(c->matrix_is_inverse);
    Certificate reparsed = parse_certificate(serialize_certificate(*c));
    CHECK(reparsed.source == c->source);
    CHECK(reparsed.entries == c->entries);
    CHECK(serialize_certificate(reparsed) == serialize_certificate(*c));

    CHECK(verify_certificate(*c, cat()).ok);

    // a certificate whose curve has a pole at 0 fails with the reason
    Certificate bad = *c;
    for (int i = 0; i < 7; ++i) bad.entries[static_cast<size_t>(i)][static_cast<size_t>(i)] = "t^-1";
    VerifyResult r = verify_certificate(bad, cat());
    CHECK(!r.ok);
    CHECK(r.message.find("limit does not exist") != std::string::npos);

    // wrong target reported with the first differing constant
    Certificate wrong = *c;
    wrong.target = "gE";
    VerifyResult r2 = verify_certificate(wrong, cat());
    CHECK(!r2.ok);
    CHECK(r2.message.find("differs") != std::string::npos);

    CHECK_THROWS_AS(parse_certificate("source: a\nmatrix: q\n"), parse_error);
}

TEST_CASE("compare pipeline matches the classified verdicts") {
    const Comparator& cmp = comparator();
    CHECK(cmp.compare("g7", {}, "g9", {}).verdict == CompareResult::Obstructed);
    CHECK(cmp.compare("g7", {}, "g9", {}).report.has("h5"));

    CompareResult fc = cmp.compare("gF", {}, "gC", {});
    CHECK(fc.verdict == CompareResult::Degenerates);
    CHECK(fc.evidence == "cert:gF_to_gC");

    // transitivity through verified certificates
    CHECK(cmp.compare("gF", {}, "g29", {}).verdict == CompareResult::Degenerates);
    CHECK(cmp.compare("gF", {}, "gA", {}).verdict == CompareResult::Degenerates);

    // out-of-scope arguments stay unknown rather than guessing
    CHECK(cmp.compare("gI", {{"a", "5"}}, "gC", {}).verdict == CompareResult::Unknown);

    // reflexive pairs are trivial degenerations
    CHECK(cmp.compare("gF", {}, "gF", {}).verdict == CompareResult::Degenerates);
}

TEST_CASE("graph construction, reduction, and emitters") {
    const Comparator& cmp = comparator();

    // single node
    AlgebraSet single{"single", "", {{"n3", {}, "n3"}}};
    DegenerationGraph g1 = build_graph(single, cmp);
    CHECK(g1.nodes.size() == 1);
    CHECK(g1.edges.empty());
    CHECK(emit_dot(g1).find("digraph") == 0);

    // the four-dimensional nilpotent chain reduces to two arrows
    DegenerationGraph n4g = build_graph(find_set("N4"), cmp);
    CHECK(n4g.edges.size() == 3); // with the transitive edge
    DegenerationGraph n4r = transitive_reduction(n4g);
    CHECK(n4r.edges.size() == 2);
    for (size_t i = 0; i < n4g.nodes.size(); ++i)
        for (size_t j = 0; j < n4g.nodes.size(); ++j)
            CHECK(n4g.reachable(static_cast<int>(i), static_cast<int>(j)) ==
                  n4r.reachable(static_cast<int>(i), static_cast<int>(j)));

    // a synthetic triangle drops the composite edge
    DegenerationGraph tri;
    tri.nodes = {{"a", "a", {}, "a", 3}, {"b", "b", {}, "b", 2}, {"c", "c", {}, "c", 1}};
    tri.edges = {{0, 1, "ab"}, {1, 2, "bc"}, {0, 2, "ac"}};
    DegenerationGraph trir = transitive_reduction(tri);
    CHECK(trir.edges.size() == 2);

    // deterministic output
    DegenerationGraph n5 = build_graph(find_set("N5"), cmp);
    CHECK(n5.nodes.size() == 9);
    CHECK(emit_dot(n5) == emit_dot(n5));
    std::string tsv = emit_tsv(n5);
    CHECK(tsv.find("#src\tdst\tstatus\tevidence") == 0);

    // every edge strictly decreases the orbit dimension
    for (const auto& e : n5.edges)
        CHECK(n5.nodes[static_cast<size_t>(e.src)].orbit_dim >
              n5.nodes[static_cast<size_t>(e.dst)].orbit_dim);
}

TEST_CASE("five-dimensional reachability equals the printed diagram closure") {
    const Comparator& cmp = comparator();
    DegenerationGraph g = build_graph(find_set("N5"), cmp);

    // closure of the printed arrows, enumerated independently
    std::map<std::string, std::set<std::string>> adj;
    for (const auto& e : n5_diagram_edges()) adj[e.src].insert(e.dst);
    auto reach_printed = [&](const std::string& from, const std::string& to) {
        std::set<std::string> seen{from};
        std::vector<std::string> work{from};
        while (!work.empty()) {
            std::string cur = work.back();
            work.pop_back();
            for (const auto& nxt : adj[cur])
                if (seen.insert(nxt).second) work.push_back(nxt);
        }
        return from != to && seen.count(to) > 0;
    };

    int printed_pairs = 0;
    for (const auto& a : g.nodes)
        for (const auto& b : g.nodes) {
            if (a.id == b.id) continue;
            bool printed = reach_printed(a.id, b.id);
            bool computed = g.reachable(g.index_of(a.id), g.index_of(b.id));
            INFO(a.id, " -> ", b.id);
            CHECK(printed == computed);
            if (printed) ++printed_pairs;
        }
    CHECK(printed_pairs == 29);
    CHECK(g.reachable_pair_count() == 29);

    // the top orbit generates the whole variety: it reaches every node
    int top = g.index_of("g5_6");
    for (size_t j = 0; j < g.nodes.size(); ++j)
        CHECK(g.reachable(top, static_cast<int>(j)));

    // nothing degenerates onto the rigid top
    for (size_t i = 0; i < g.nodes.size(); ++i)
        if (static_cast<int>(i) != top) CHECK(!g.reachable(static_cast<int>(i), top));
}

TEST_CASE("six-dimensional filiform diagram is fully decided") {
    const Comparator& cmp = comparator();
    DegenerationGraph g = build_graph(find_set("N6-filiform"), cmp);
    CHECK(g.nodes.size() == 5);
    CHECK(g.reachable_pair_count() == 9);
    int top = g.index_of("g6E");
    for (size_t j = 0; j < g.nodes.size(); ++j)
        CHECK(g.reachable(top, static_cast<int>(j)));
    for (const auto& [key, info] : g.pairs)
        CHECK(info.status != CompareResult::Unknown);
}
