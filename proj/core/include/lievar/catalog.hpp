#ifndef LIEVAR_CATALOG_HPP
#define LIEVAR_CATALOG_HPP

#include "lievar/expr.hpp"
#include "lievar/fingerprint.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <variant>
#include <vector>

namespace lievar {

struct unknown_label_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BracketTerm {
    Expr::Ptr coef;
    std::string coef_text; // original token, preserved for round-trips
    int target;            // 0-based basis index
};

struct BracketLine {
    int i, j; // 0-based, i < j as stored
    std::vector<BracketTerm> terms;
};

struct ParamSpec {
    std::string name;
    std::vector<std::string> excluded; // value expressions
};

/// One catalog algebra: label, aliases, structure constants as coefficient
/// expressions, parameter domains, flags.
struct CatalogEntry {
    std::string name;
    std::vector<std::string> aliases;
    int dim = 0;
    std::string field = "rational"; // or "quadext"
    std::vector<ParamSpec> params;
    bool type1 = false;    // basis satisfies [x_i,x_j] = 0 for i+j > dim
    bool excluded = false; // catalogued but outside the degeneration study
    std::vector<std::string> notes;
    std::vector<BracketLine> brackets;

    const ParamSpec* param(const std::string& n) const {
        for (const auto& p : params)
            if (p.name == n) return &p;
        return nullptr;
    }
};

/// Parses one algebra file; parse_error carries 1-based line/column.
CatalogEntry parse_algebra(const std::string& text);
std::string serialize_algebra(const CatalogEntry& e);

/// Parameter bindings as value-expression texts, e.g. {{"a", "-2"}}.
using Binding = std::map<std::string, std::string>;

std::string binding_str(const Binding& b);

using AlgebraVariant = std::variant<LieAlgebra<Rat>, LieAlgebra<QuadExt>,
                                    LieAlgebra<RatFunc<Rat>>, LieAlgebra<RatFunc<QuadExt>>>;

inline Fingerprint fingerprint_of(const AlgebraVariant& v) {
    return std::visit([](const auto& L) { return fingerprint(L); }, v);
}

class Catalog {
public:
    /// Loads every *.alg file under dir.
    static Catalog load(const std::string& dir);
    /// LIEVAR_CATALOG env var when set, else the compiled-in data dir.
    static std::string default_dir();
    static const Catalog& builtin();

    const CatalogEntry* find(const std::string& label) const;
    const CatalogEntry& get(const std::string& label) const;
    std::vector<const CatalogEntry*> entries() const;

    /// Specializes an entry.  All parameters bound (or none present) gives
    /// a concrete algebra over Q or Q(w); exactly one unbound parameter
    /// gives a rational-function algebra in that parameter.  Bindings at
    /// excluded values are flagged through `warnings`, not rejected.
    AlgebraVariant instantiate(const std::string& label, const Binding& binding = {},
                               std::vector<std::string>* warnings = nullptr) const;

    LieAlgebra<Rat> rational(const std::string& label, const Binding& binding = {}) const;

    /// Fingerprint with caching; unbound parameters are handled by the
    /// multi-specialization policy (deterministic random samples off the
    /// excluded values, majority merge).
    const Fingerprint& fingerprint_of(const std::string& label, const Binding& binding = {}) const;

    /// Deterministic sample bindings for the unbound parameters of an
    /// entry (empty when the entry has none unbound).
    std::vector<Binding> generic_samples(const CatalogEntry& e, const Binding& binding,
                                         int count = 7) const;

    std::string node_id(const std::string& label, const Binding& binding = {}) const;

private:
    std::map<std::string, CatalogEntry> by_name_;
    std::map<std::string, std::string> alias_of_;
    // behind a pointer so the catalog stays movable
    std::unique_ptr<std::mutex> fp_mutex_ = std::make_unique<std::mutex>();
    mutable std::map<std::string, Fingerprint> fp_cache_;
};

/// A named list of catalog rows (label + binding), e.g. the classification
/// tables reproduced by the table and hasse commands.
struct SetRow {
    std::string label;
    Binding binding;     // empty on generic rows
    std::string display; // row caption
};

struct AlgebraSet {
    std::string name;
    std::string description;
    std::vector<SetRow> rows;
};

const std::vector<AlgebraSet>& builtin_sets();
const AlgebraSet& find_set(const std::string& name);

} // namespace lievar

#endif
