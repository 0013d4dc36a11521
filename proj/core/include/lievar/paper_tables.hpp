#ifndef LIEVAR_PAPER_TABLES_HPP
#define LIEVAR_PAPER_TABLES_HPP

#include "lievar/catalog.hpp"

#include <array>

namespace lievar {

/// Published invariant-table row for one seven-dimensional algebra:
/// adjoint cohomology (h_0..h_7), trivial cohomology (b_1..b_7),
/// nilpotency and solvability class, orbit dimension.
struct Dim7Row {
    const char* label;
    const char* binding;  // "", "a=-2", "a=1-w"
    std::array<int, 8> h;
    std::array<int, 7> b;
    int nil;
    int solv;
    int orbit;
};

const std::vector<Dim7Row>& dim7_table();

/// One cell of the four degeneration propositions: the stated reason why
/// src does not degenerate to dst ("ch" marks a degeneration).
struct PropCell {
    const char* src;
    const char* src_binding;
    const char* dst;
    const char* symbol; // "ch", "B", "I", "z", "z2", "z3", "h0".."h6", "b3", "n", "s"
};

const std::vector<PropCell>& dim7_prop_cells();

/// Printed classification diagrams used for reproduction: edges of the
/// Hasse diagrams in dimensions 5 and 6, the essential arrows in low
/// dimensions, and the orbit-closure lists in dimension 3.
struct DiagramEdge {
    const char* src;
    const char* src_binding;
    const char* dst;
    const char* dst_binding;
};

const std::vector<DiagramEdge>& n5_diagram_edges();
const std::vector<DiagramEdge>& n6f_diagram_edges();
const std::vector<DiagramEdge>& l4_essential_edges();

struct ClosureRow {
    const char* label;          // orbit representative
    std::vector<const char*> boundary; // non-trivial members of its closure
};

const std::vector<ClosureRow>& l3_closure_table();

/// Frozen expected rows for the reproduction sets whose values are not
/// published as tables: computed once with this library and pinned.
struct DerivedRow {
    const char* display; // must match the set row caption
    std::vector<int> h;  // h_0..h_n
    std::vector<int> b;  // b_0..b_n
    int nil;             // -1 when not nilpotent
    int solv;            // -1 when not solvable
    int orbit;
};

/// Derived tables keyed by set name (N5, N6-filiform, N4, N3, L3, L4).
const std::vector<DerivedRow>* derived_table(const std::string& set_name);

} // namespace lievar

#endif
