#ifndef LIEVAR_HASSE_HPP
#define LIEVAR_HASSE_HPP

#include "lievar/certificate.hpp"

namespace lievar {

/// Tri-state answer for an ordered pair of laws.
struct CompareResult {
    enum Verdict { Degenerates, Obstructed, Unknown } verdict = Unknown;
    std::string evidence; // certificate chain, violated criterion, or note
    ObstructionReport report;
};

/// Cached per-catalog comparison engine: certificate reachability first,
/// then the invariant battery, the central-quotient rule, the
/// codimension-1 ideal rule, and contrapositive propagation through
/// verified edges.
class Comparator {
public:
    Comparator(const Catalog& catalog, const CertStore& store);

    CompareResult compare(const std::string& src_label, const Binding& src_binding,
                          const std::string& dst_label, const Binding& dst_binding) const;

    /// Verified certificate edges (after lazily checking the corpus).
    const std::vector<std::pair<std::string, std::string>>& verified_edges() const;
    const Catalog& catalog() const { return catalog_; }
    const CertStore& store() const { return store_; }
    /// Verification outcome of every certificate in the store.
    const std::map<std::string, VerifyResult>& verifications() const;

private:
    struct NodeData;
    const Catalog& catalog_;
    const CertStore& store_;
    mutable std::map<std::string, VerifyResult> verify_cache_;
    mutable std::vector<std::pair<std::string, std::string>> edges_;
    mutable bool edges_ready_ = false;
    mutable std::map<std::string, int> ideal_cache_; // node id -> IdealRKind
    mutable std::map<std::string, Fingerprint> quotient_fp_cache_;

    void ensure_edges() const;
    std::vector<std::string> reach(const std::string& from, bool forward) const;
    int ideal_kind(const std::string& label, const Binding& binding) const;
    const Fingerprint* quotient_fp(const std::string& label, const Binding& binding) const;
    CompareResult direct_obstruction(const std::string& sl, const Binding& sb,
                                     const std::string& dl, const Binding& db) const;
};

struct GraphNode {
    std::string id; // catalog node id (label + binding)
    std::string label;
    Binding binding;
    std::string display;
    int orbit_dim = 0;
};

struct GraphEdge {
    int src = 0, dst = 0;  // node indices
    std::string evidence;  // certificate id or via-chain
};

struct PairInfo {
    CompareResult::Verdict status = CompareResult::Unknown;
    std::string evidence;
};

/// The degeneration order restricted to one algebra set: verified edges,
/// obstructed non-edges, unknowns.  Edges always point to strictly smaller
/// orbit dimension and the graph is acyclic.
struct DegenerationGraph {
    std::vector<GraphNode> nodes;
    std::vector<GraphEdge> edges;
    std::map<std::pair<int, int>, PairInfo> pairs; // ordered pairs of distinct nodes

    int index_of(const std::string& id) const;
    bool reachable(int src, int dst) const;
    int reachable_pair_count() const; // ordered pairs with src != dst
};

DegenerationGraph build_graph(const AlgebraSet& set, const Comparator& cmp);
DegenerationGraph transitive_reduction(const DegenerationGraph& g);
std::string emit_dot(const DegenerationGraph& g, bool show_unknown = false);
std::string emit_tsv(const DegenerationGraph& g);

} // namespace lievar

#endif
