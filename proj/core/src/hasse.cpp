#include "lievar/hasse.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace lievar {

namespace {

std::pair<std::string, Binding> split_node_id(const std::string& id) {
    size_t paren = id.find('(');
    if (paren == std::string::npos) return {id, {}};
    std::string label = id.substr(0, paren);
    Binding b;
    std::string inner = id.substr(paren + 1, id.rfind(')') - paren - 1);
    std::istringstream is(inner);
    std::string piece;
    while (std::getline(is, piece, ',')) {
        size_t eq = piece.find('=');
        if (eq != std::string::npos) b[piece.substr(0, eq)] = piece.substr(eq + 1);
    }
    return {label, b};
}

} // namespace

Comparator::Comparator(const Catalog& catalog, const CertStore& store)
    : catalog_(catalog), store_(store) {}

const std::map<std::string, VerifyResult>& Comparator::verifications() const {
    ensure_edges();
    return verify_cache_;
}

void Comparator::ensure_edges() const {
    if (edges_ready_) return;
    for (const auto& c : store_.all()) {
        VerifyResult r = verify_certificate(c, catalog_);
        verify_cache_[c.id] = r;
        if (r.ok)
            edges_.emplace_back(catalog_.node_id(c.source, c.source_binding),
                                catalog_.node_id(c.target, c.target_binding));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    edges_ready_ = true;
}

const std::vector<std::pair<std::string, std::string>>& Comparator::verified_edges() const {
    ensure_edges();
    return edges_;
}

std::vector<std::string> Comparator::reach(const std::string& from, bool forward) const {
    ensure_edges();
    std::vector<std::string> out;
    std::set<std::string> seen{from};
    std::queue<std::string> work;
    work.push(from);
    while (!work.empty()) {
        std::string cur = work.front();
        work.pop();
        for (const auto& [a, b] : edges_) {
            const std::string& s = forward ? a : b;
            const std::string& d = forward ? b : a;
            if (s != cur || seen.count(d)) continue;
            seen.insert(d);
            out.push_back(d);
            work.push(d);
        }
    }
    return out;
}

int Comparator::ideal_kind(const std::string& label, const Binding& binding) const {
    std::string id = catalog_.node_id(label, binding);
    auto it = ideal_cache_.find(id);
    if (it != ideal_cache_.end()) return it->second;
    int kind = static_cast<int>(IdealRKind::Undecided);
    try {
        AlgebraVariant v = catalog_.instantiate(label, binding);
        if (auto* r = std::get_if<LieAlgebra<Rat>>(&v))
            kind = static_cast<int>(ideal_property_R(*r).kind);
        else if (auto* q = std::get_if<LieAlgebra<QuadExt>>(&v))
            kind = static_cast<int>(ideal_property_R(*q).kind);
    } catch (const arithmetic_error&) {
        // parametric algebra: leave undecided
    }
    ideal_cache_[id] = kind;
    return kind;
}

const Fingerprint* Comparator::quotient_fp(const std::string& label,
                                           const Binding& binding) const {
    std::string id = catalog_.node_id(label, binding);
    auto it = quotient_fp_cache_.find(id);
    if (it != quotient_fp_cache_.end()) return &it->second;
    const CatalogEntry& e = catalog_.get(label);
    auto one = [&](const Binding& b) {
        AlgebraVariant v = catalog_.instantiate(label, b);
        return std::visit([](const auto& L) { return fingerprint(L.central_quotient()); }, v);
    };
    try {
        std::vector<Binding> samples = catalog_.generic_samples(e, binding);
        Fingerprint fp;
        if (samples.empty()) {
            fp = one(binding);
        } else {
            std::vector<Fingerprint> fps;
            for (const auto& b : samples) fps.push_back(one(b));
            fp = merge_generic(fps);
        }
        return &quotient_fp_cache_.emplace(id, std::move(fp)).first->second;
    } catch (const arithmetic_error&) {
        return nullptr;
    }
}

CompareResult Comparator::direct_obstruction(const std::string& sl, const Binding& sb,
                                             const std::string& dl, const Binding& db) const {
    CompareResult out;
    const Fingerprint& fs = catalog_.fingerprint_of(sl, sb);
    const Fingerprint& fd = catalog_.fingerprint_of(dl, db);
    if (fs.n != fd.n) {
        out.verdict = CompareResult::Obstructed;
        out.evidence = "dimension mismatch";
        return out;
    }

    ObstructionReport rep = obstruction_battery(fs, fd, /*strict=*/true);
    if (rep.obstructed()) {
        out.verdict = CompareResult::Obstructed;
        out.evidence = rep.violations.front().criterion + " " + rep.violations.front().relation;
        out.report = std::move(rep);
        return out;
    }

    // central-quotient rule for nilpotent pairs
    if (fs.nilpotent && fd.nilpotent) {
        int d = fd.dim_center - fs.dim_center;
        if (d < 0) {
            out.verdict = CompareResult::Obstructed;
            out.evidence = "center dimension decreases";
            return out;
        }
        const Fingerprint* qs = quotient_fp(sl, sb);
        const Fingerprint* qd = quotient_fp(dl, db);
        if (qs && qd) {
            Fingerprint padded = *qd;
            if (d > 0) {
                // recompute the padded quotient exactly rather than shifting
                AlgebraVariant v = catalog_.instantiate(dl, db);
                padded = std::visit(
                    [&](const auto& L) {
                        return fingerprint(L.central_quotient().direct_sum_abelian(d));
                    },
                    v);
            }
            ObstructionReport qrep = obstruction_battery(*qs, padded, /*strict=*/false);
            if (qrep.obstructed()) {
                out.verdict = CompareResult::Obstructed;
                out.evidence = "central quotient: " + qrep.violations.front().criterion + " " +
                               qrep.violations.front().relation;
                out.report = std::move(qrep);
                return out;
            }
        }
    }

    // closed-set rule: a codimension-1 ideal with [I,[I,I]] = 0 passes to
    // every degeneration
    int ks = ideal_kind(sl, sb), kd = ideal_kind(dl, db);
    bool src_has = ks == static_cast<int>(IdealRKind::Witness) ||
                   ks == static_cast<int>(IdealRKind::ExistsOnly);
    bool dst_none = kd == static_cast<int>(IdealRKind::None);
    if (src_has && dst_none) {
        out.verdict = CompareResult::Obstructed;
        out.evidence = "ideal: source admits a flag ideal, target does not";
        return out;
    }

    out.verdict = CompareResult::Unknown;
    return out;
}

CompareResult Comparator::compare(const std::string& src_label, const Binding& src_binding,
                                  const std::string& dst_label,
                                  const Binding& dst_binding) const {
    CompareResult out;
    std::string sid = catalog_.node_id(src_label, src_binding);
    std::string did = catalog_.node_id(dst_label, dst_binding);
    if (sid == did) {
        out.verdict = CompareResult::Degenerates;
        out.evidence = "trivial (identity)";
        return out;
    }

    // verified certificates, closed under transitivity
    ensure_edges();
    {
        std::set<std::string> seen{sid};
        std::queue<std::pair<std::string, std::string>> work;
        work.push({sid, ""});
        while (!work.empty()) {
            auto [cur, path] = work.front();
            work.pop();
            for (const auto& c : store_.all()) {
                if (!verify_cache_.at(c.id).ok) continue;
                if (catalog_.node_id(c.source, c.source_binding) != cur) continue;
                std::string nxt = catalog_.node_id(c.target, c.target_binding);
                std::string npath = path.empty() ? c.id : path + "," + c.id;
                if (nxt == did) {
                    out.verdict = CompareResult::Degenerates;
                    out.evidence = "cert:" + npath;
                    return out;
                }
                if (seen.insert(nxt).second) work.push({nxt, npath});
            }
        }
    }

    // direct and propagated obstructions through verified edges
    std::vector<std::pair<std::string, Binding>> sources{{src_label, src_binding}};
    for (const auto& anc : reach(sid, /*forward=*/false))
        sources.push_back(split_node_id(anc));
    std::vector<std::pair<std::string, Binding>> targets{{dst_label, dst_binding}};
    for (const auto& desc : reach(did, /*forward=*/true))
        targets.push_back(split_node_id(desc));

    for (const auto& [xl, xb] : sources)
        for (const auto& [yl, yb] : targets) {
            CompareResult r = direct_obstruction(xl, xb, yl, yb);
            if (r.verdict == CompareResult::Obstructed) {
                std::string xid = catalog_.node_id(xl, xb);
                std::string yid = catalog_.node_id(yl, yb);
                if (xid != sid || yid != did)
                    r.evidence += " (propagated through " + xid + " -> " + yid + ")";
                return r;
            }
        }

    out.verdict = CompareResult::Unknown;
    return out;
}

int DegenerationGraph::index_of(const std::string& id) const {
    for (size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].id == id) return static_cast<int>(i);
    return -1;
}

bool DegenerationGraph::reachable(int src, int dst) const {
    if (src == dst) return true;
    std::vector<bool> seen(nodes.size(), false);
    std::queue<int> work;
    work.push(src);
    seen[static_cast<size_t>(src)] = true;
    while (!work.empty()) {
        int cur = work.front();
        work.pop();
        for (const auto& e : edges) {
            if (e.src != cur || seen[static_cast<size_t>(e.dst)]) continue;
            if (e.dst == dst) return true;
            seen[static_cast<size_t>(e.dst)] = true;
            work.push(e.dst);
        }
    }
    return false;
}

int DegenerationGraph::reachable_pair_count() const {
    int count = 0;
    for (size_t i = 0; i < nodes.size(); ++i)
        for (size_t j = 0; j < nodes.size(); ++j)
            if (i != j && reachable(static_cast<int>(i), static_cast<int>(j))) ++count;
    return count;
}

DegenerationGraph build_graph(const AlgebraSet& set, const Comparator& cmp) {
    const Catalog& catalog = cmp.catalog();
    DegenerationGraph g;
    for (const auto& row : set.rows) {
        GraphNode n;
        n.id = catalog.node_id(row.label, row.binding);
        n.label = row.label;
        n.binding = row.binding;
        n.display = row.display.empty() ? n.id : row.display;
        n.orbit_dim = catalog.fingerprint_of(row.label, row.binding).orbit_dim;
        g.nodes.push_back(std::move(n));
    }
    for (size_t i = 0; i < g.nodes.size(); ++i)
        for (size_t j = 0; j < g.nodes.size(); ++j) {
            if (i == j) continue;
            const GraphNode& a = g.nodes[i];
            const GraphNode& b = g.nodes[j];
            CompareResult r = cmp.compare(a.label, a.binding, b.label, b.binding);
            PairInfo info;
            info.status = r.verdict;
            info.evidence = r.evidence;
            if (r.verdict == CompareResult::Degenerates) {
                if (a.orbit_dim <= b.orbit_dim)
                    throw arithmetic_error("degeneration " + a.id + " -> " + b.id +
                                           " does not decrease the orbit dimension");
                g.edges.push_back({static_cast<int>(i), static_cast<int>(j), r.evidence});
            }
            g.pairs[{static_cast<int>(i), static_cast<int>(j)}] = std::move(info);
        }
    return g;
}

DegenerationGraph transitive_reduction(const DegenerationGraph& g) {
    // acyclicity was enforced while building: every edge strictly drops
    // the orbit dimension.  An edge is redundant iff the target stays
    // reachable without it.
    DegenerationGraph out = g;
    std::vector<GraphEdge> kept;
    for (size_t k = 0; k < g.edges.size(); ++k) {
        DegenerationGraph test = g;
        test.edges.clear();
        for (size_t m = 0; m < g.edges.size(); ++m)
            if (m != k) test.edges.push_back(g.edges[m]);
        if (!test.reachable(g.edges[k].src, g.edges[k].dst)) kept.push_back(g.edges[k]);
    }
    out.edges = kept;
    return out;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"') out += '\\';
        out += c;
    }
    return out;
}

} // namespace

std::string emit_dot(const DegenerationGraph& g, bool show_unknown) {
    std::ostringstream os;
    os << "digraph degenerations {\n";
    os << "  // edges are verified certificates (with transitivity);\n";
    os << "  // the graph is a lower bound on the degeneration order\n";
    os << "  rankdir=TB;\n  node [shape=box];\n";
    std::vector<int> levels;
    for (const auto& n : g.nodes)
        if (std::find(levels.begin(), levels.end(), n.orbit_dim) == levels.end())
            levels.push_back(n.orbit_dim);
    std::sort(levels.rbegin(), levels.rend());
    for (int lv : levels) {
        os << "  { rank=same;";
        std::vector<std::string> ids;
        for (const auto& n : g.nodes)
            if (n.orbit_dim == lv) ids.push_back(n.id);
        std::sort(ids.begin(), ids.end());
        for (const auto& id : ids) os << " \"" << dot_escape(id) << "\";";
        os << " }\n";
    }
    std::vector<std::string> node_lines;
    for (const auto& n : g.nodes) {
        std::ostringstream ln;
        ln << "  \"" << dot_escape(n.id) << "\" [label=\"" << dot_escape(n.display) << "\\ndim O = "
           << n.orbit_dim << "\"];\n";
        node_lines.push_back(ln.str());
    }
    std::sort(node_lines.begin(), node_lines.end());
    for (const auto& l : node_lines) os << l;

    std::vector<std::string> edge_lines;
    for (const auto& e : g.edges) {
        std::ostringstream ln;
        ln << "  \"" << dot_escape(g.nodes[static_cast<size_t>(e.src)].id) << "\" -> \""
           << dot_escape(g.nodes[static_cast<size_t>(e.dst)].id) << "\" [label=\""
           << dot_escape(e.evidence) << "\"];\n";
        edge_lines.push_back(ln.str());
    }
    std::sort(edge_lines.begin(), edge_lines.end());
    for (const auto& l : edge_lines) os << l;

    if (show_unknown) {
        std::vector<std::string> unknown_lines;
        for (const auto& [key, info] : g.pairs) {
            if (info.status != CompareResult::Unknown) continue;
            std::ostringstream ln;
            ln << "  \"" << dot_escape(g.nodes[static_cast<size_t>(key.first)].id) << "\" -> \""
               << dot_escape(g.nodes[static_cast<size_t>(key.second)].id)
               << "\" [style=dashed, color=gray];\n";
            unknown_lines.push_back(ln.str());
        }
        std::sort(unknown_lines.begin(), unknown_lines.end());
        for (const auto& l : unknown_lines) os << l;
    }
    os << "}\n";
    return os.str();
}

std::string emit_tsv(const DegenerationGraph& g) {
    std::ostringstream os;
    os << "#src\tdst\tstatus\tevidence\n";
    for (const auto& [key, info] : g.pairs) {
        os << g.nodes[static_cast<size_t>(key.first)].id << "\t"
           << g.nodes[static_cast<size_t>(key.second)].id << "\t";
        switch (info.status) {
        case CompareResult::Degenerates: os << "degenerates"; break;
        case CompareResult::Obstructed: os << "obstructed"; break;
        case CompareResult::Unknown: os << "unknown"; break;
        }
        os << "\t" << info.evidence << "\n";
    }
    return os.str();
}

} // namespace lievar
