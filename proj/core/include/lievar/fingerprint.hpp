#ifndef LIEVAR_FINGERPRINT_HPP
#define LIEVAR_FINGERPRINT_HPP

#include "lievar/cohomology.hpp"

#include <sstream>

namespace lievar {

/// The complete tuple of degeneration invariants of one algebra.
struct Fingerprint {
    int n = 0;
    std::vector<int> lower_central; // dims of g^1 >= g^2 >= ...
    std::vector<int> derived;       // dims of g >= [g,g] >= [[g,g],[g,g]] >= ...
    std::vector<int> upper_central; // dims of Z^1 <= Z^2 <= ...
    std::vector<int> h;             // dim H^j(g,g), j = 0..n
    std::vector<int> b;             // dim H^j(g,k), j = 0..n  (b[0] = 1)
    std::vector<int> z;             // dim Z^j(g,g), j = 0..n
    int dim_derived = 0;            // dim [g,g]
    int dim_center = 0;             // dim Z(g)
    bool nilpotent = false;
    bool solvable = false;
    int nil_class = -1;  // -1 when not nilpotent
    int solv_class = -1; // -1 when not solvable
    int der_dim = 0;     // dim Der(g) = z[1]
    int orbit_dim = 0;   // n^2 - der_dim

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;

    std::string str() const {
        std::ostringstream os;
        auto vec = [&](const std::vector<int>& v) {
            os << "(";
            for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
            os << ")";
        };
        os << "n=" << n << " h=";
        vec(h);
        os << " b=";
        vec(b);
        os << " z=";
        vec(z);
        os << " lcs=";
        vec(lower_central);
        os << " ucs=";
        vec(upper_central);
        os << " nil=" << nil_class << " solv=" << solv_class << " dimO=" << orbit_dim;
        return os.str();
    }
};

template <class F>
Fingerprint fingerprint(const LieAlgebra<F>& L) {
    Fingerprint fp;
    fp.n = L.dim();
    for (const auto& s : L.lower_central_series()) fp.lower_central.push_back(s.dim());
    for (const auto& s : L.derived_series()) fp.derived.push_back(s.dim());
    auto ucs = L.upper_central_series();
    for (size_t i = 1; i < ucs.size(); ++i) fp.upper_central.push_back(ucs[i].dim());
    fp.nilpotent = fp.lower_central.back() == 0;
    fp.solvable = fp.derived.back() == 0;
    if (fp.nilpotent) fp.nil_class = static_cast<int>(fp.lower_central.size()) - 1;
    if (fp.solvable) fp.solv_class = static_cast<int>(fp.derived.size()) - 1;
    // not the second series term: for perfect algebras the series
    // stabilizes at the top immediately
    fp.dim_derived = L.derived_subalgebra().dim();
    fp.dim_center = fp.upper_central.empty() ? 0 : fp.upper_central[0];

    CohomologyProfile adj = cohomology_profile(L, Module::Adjoint);
    CohomologyProfile triv = cohomology_profile(L, Module::Trivial);
    fp.h = adj.h;
    fp.z = adj.z;
    fp.b = triv.h;
    fp.der_dim = fp.n > 0 ? fp.z[1] : 0;
    fp.orbit_dim = fp.n * fp.n - fp.der_dim;
    return fp;
}

/// Multi-specialization policy for parametric algebras: fingerprints of
/// several random specializations, merged by majority.  A generic value is
/// hit by all but finitely many samples, so an unstable vote means the
/// sampling brushed a special locus.
inline Fingerprint merge_generic(const std::vector<Fingerprint>& samples) {
    if (samples.empty()) throw arithmetic_error("no specialization samples");
    int best = -1, best_count = 0;
    for (size_t i = 0; i < samples.size(); ++i) {
        int count = 0;
        for (const auto& o : samples)
            if (o == samples[i]) ++count;
        if (count > best_count) {
            best_count = count;
            best = static_cast<int>(i);
        }
    }
    if (best_count * 2 <= static_cast<int>(samples.size()))
        throw arithmetic_error("unstable generic fingerprint: no specialization majority");
    return samples[static_cast<size_t>(best)];
}

} // namespace lievar

#endif
