#include "lievar/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#ifndef LIEVAR_SOURCE_DATA_DIR
#define LIEVAR_SOURCE_DATA_DIR "data"
#endif

namespace lievar {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// "a (exclude: 0, 1), b" -> ParamSpecs
std::vector<ParamSpec> parse_params(const std::string& body, int line) {
    std::vector<ParamSpec> out;
    size_t pos = 0;
    while (pos < body.size()) {
        size_t next = body.find(',', pos);
        // commas inside an exclude list belong to the list
        size_t paren = body.find('(', pos);
        if (paren != std::string::npos && next != std::string::npos && paren < next) {
            size_t close = body.find(')', paren);
            if (close == std::string::npos) throw parse_error("unterminated exclude list", line, 1);
            next = body.find(',', close);
        }
        std::string piece = strip(body.substr(pos, next == std::string::npos ? next : next - pos));
        pos = next == std::string::npos ? body.size() : next + 1;
        if (piece.empty()) continue;
        ParamSpec p;
        size_t op = piece.find('(');
        if (op == std::string::npos) {
            p.name = strip(piece);
        } else {
            p.name = strip(piece.substr(0, op));
            size_t close = piece.find(')', op);
            if (close == std::string::npos) throw parse_error("unterminated exclude list", line, 1);
            std::string inner = piece.substr(op + 1, close - op - 1);
            size_t colon = inner.find(':');
            if (colon == std::string::npos || strip(inner.substr(0, colon)) != "exclude")
                throw parse_error("expected 'exclude:' in parameter domain", line, 1);
            std::istringstream vs(inner.substr(colon + 1));
            std::string v;
            while (std::getline(vs, v, ',')) {
                v = strip(v);
                if (!v.empty()) p.excluded.push_back(v);
            }
        }
        if (p.name.empty()) throw parse_error("empty parameter name", line, 1);
        out.push_back(std::move(p));
    }
    return out;
}

int parse_basis_index(const std::string& tok, int dim, int line) {
    if (tok.size() < 2 || tok[0] != 'x')
        throw parse_error("expected basis vector 'x<k>', got '" + tok + "'", line, 1);
    int k = 0;
    for (size_t i = 1; i < tok.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(tok[i])))
            throw parse_error("bad basis index in '" + tok + "'", line, 1);
        k = k * 10 + (tok[i] - '0');
    }
    if (k < 1 || k > dim) throw parse_error("basis index out of range in '" + tok + "'", line, 1);
    return k - 1;
}

} // namespace

CatalogEntry parse_algebra(const std::string& text) {
    CatalogEntry e;
    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    std::map<std::pair<int, int>, int> seen; // (i,j) -> line
    bool have_dim = false;
    while (std::getline(is, raw)) {
        ++lineno;
        std::string line = strip(raw);
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = strip(line.substr(0, hash));
        if (line.empty()) continue;

        if (line.rfind("bracket", 0) == 0) {
            if (!have_dim) throw parse_error("bracket before dim:", lineno, 1);
            size_t eq = line.find('=');
            if (eq == std::string::npos) throw parse_error("bracket line without '='", lineno, 1);
            auto head = split_ws(line.substr(7, eq - 7));
            if (head.size() != 2) throw parse_error("expected 'bracket i j ='", lineno, 1);
            int i = std::atoi(head[0].c_str()), j = std::atoi(head[1].c_str());
            if (i < 1 || j < 1 || i > e.dim || j > e.dim)
                throw parse_error("bracket index out of range", lineno, 1);
            if (i == j) throw parse_error("bracket of a vector with itself", lineno, 1);
            BracketLine bl;
            bool flipped = i > j;
            bl.i = std::min(i, j) - 1;
            bl.j = std::max(i, j) - 1;
            auto key = std::make_pair(bl.i, bl.j);
            if (seen.count(key))
                throw parse_error("brackets for this pair already given on line " +
                                      std::to_string(seen[key]),
                                  lineno, 1);
            seen[key] = lineno;

            auto toks = split_ws(line.substr(eq + 1));
            if (toks.empty()) throw parse_error("empty bracket right-hand side", lineno, 1);
            size_t p = 0;
            int sign = 1;
            bool first = true;
            while (p < toks.size()) {
                if (!first) {
                    if (toks[p] == "+")
                        sign = 1;
                    else if (toks[p] == "-")
                        sign = -1;
                    else
                        throw parse_error("expected '+' or '-' between bracket terms", lineno, 1);
                    ++p;
                }
                first = false;
                if (p + 1 >= toks.size())
                    throw parse_error("bracket term needs '<coef> x<k>'", lineno, 1);
                BracketTerm term;
                term.coef_text = (sign < 0 ? "-" : "") + toks[p];
                if (flipped) term.coef_text = "-(" + term.coef_text + ")";
                try {
                    term.coef = Expr::parse(term.coef_text);
                } catch (const parse_error& pe) {
                    throw parse_error(std::string("bad coefficient: ") + pe.what(), lineno,
                                      pe.column);
                }
                term.target = parse_basis_index(toks[p + 1], e.dim, lineno);
                bl.terms.push_back(std::move(term));
                p += 2;
                sign = 1;
            }
            e.brackets.push_back(std::move(bl));
            continue;
        }

        size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw parse_error("expected 'key: value' or bracket line", lineno, 1);
        std::string key = strip(line.substr(0, colon));
        std::string val = strip(line.substr(colon + 1));
        if (key == "name")
            e.name = val;
        else if (key == "alias")
            e.aliases.push_back(val);
        else if (key == "dim") {
            e.dim = std::atoi(val.c_str());
            if (e.dim < 0 || e.dim > 12) throw parse_error("unreasonable dimension", lineno, 1);
            have_dim = true;
        } else if (key == "field") {
            if (val != "rational" && val != "quadext")
                throw parse_error("field must be rational or quadext", lineno, 1);
            e.field = val;
        } else if (key == "params")
            e.params = parse_params(val, lineno);
        else if (key == "flags") {
            for (const auto& f : split_ws(val)) {
                if (f == "type1")
                    e.type1 = true;
                else if (f == "excluded")
                    e.excluded = true;
                else
                    throw parse_error("unknown flag '" + f + "'", lineno, 1);
            }
        } else if (key == "note")
            e.notes.push_back(val);
        else
            throw parse_error("unknown key '" + key + "'", lineno, 1);
    }
    if (e.name.empty()) throw parse_error("algebra file without name:", 1, 1);
    if (!have_dim) throw parse_error("algebra file without dim:", 1, 1);
    return e;
}

std::string serialize_algebra(const CatalogEntry& e) {
    std::ostringstream os;
    os << "name: " << e.name << "\n";
    for (const auto& a : e.aliases) os << "alias: " << a << "\n";
    os << "dim: " << e.dim << "\n";
    if (e.field != "rational") os << "field: " << e.field << "\n";
    if (!e.params.empty()) {
        os << "params: ";
        for (size_t i = 0; i < e.params.size(); ++i) {
            if (i) os << ", ";
            os << e.params[i].name;
            if (!e.params[i].excluded.empty()) {
                os << " (exclude:";
                for (size_t k = 0; k < e.params[i].excluded.size(); ++k)
                    os << (k ? ", " : " ") << e.params[i].excluded[k];
                os << ")";
            }
        }
        os << "\n";
    }
    if (e.type1 || e.excluded) {
        os << "flags:";
        if (e.type1) os << " type1";
        if (e.excluded) os << " excluded";
        os << "\n";
    }
    for (const auto& n : e.notes) os << "note: " << n << "\n";
    for (const auto& b : e.brackets) {
        os << "bracket " << b.i + 1 << " " << b.j + 1 << " =";
        for (size_t t = 0; t < b.terms.size(); ++t) {
            std::string c = b.terms[t].coef_text;
            if (t && !c.empty() && c[0] == '-')
                os << " - " << c.substr(1);
            else if (t)
                os << " + " << c;
            else
                os << " " << c;
            os << " x" << b.terms[t].target + 1;
        }
        os << "\n";
    }
    return os.str();
}

std::string binding_str(const Binding& b) {
    std::string out;
    for (const auto& [k, v] : b) {
        if (!out.empty()) out += ",";
        out += k + "=" + v;
    }
    return out;
}

std::string Catalog::default_dir() {
    if (const char* env = std::getenv("LIEVAR_CATALOG")) return env;
    return std::string(LIEVAR_SOURCE_DATA_DIR) + "/catalog";
}

Catalog Catalog::load(const std::string& dir) {
    Catalog c;
    namespace fs = std::filesystem;
    if (!fs::exists(dir)) throw std::runtime_error("catalog directory not found: " + dir);
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().extension() == ".alg") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
        std::ifstream in(f);
        std::stringstream ss;
        ss << in.rdbuf();
        CatalogEntry e;
        try {
            e = parse_algebra(ss.str());
        } catch (const parse_error& pe) {
            throw std::runtime_error(f.string() + ":" + std::to_string(pe.line) + ": " + pe.what());
        }
        if (c.by_name_.count(e.name))
            throw std::runtime_error("duplicate catalog label " + e.name + " in " + f.string());
        for (const auto& a : e.aliases) c.alias_of_[a] = e.name;
        c.by_name_.emplace(e.name, std::move(e));
    }
    return c;
}

const Catalog& Catalog::builtin() {
    static Catalog c = Catalog::load(Catalog::default_dir());
    return c;
}

const CatalogEntry* Catalog::find(const std::string& label) const {
    auto it = by_name_.find(label);
    if (it != by_name_.end()) return &it->second;
    auto al = alias_of_.find(label);
    if (al != alias_of_.end()) return &by_name_.at(al->second);
    return nullptr;
}

const CatalogEntry& Catalog::get(const std::string& label) const {
    const CatalogEntry* e = find(label);
    if (!e) throw unknown_label_error("unknown algebra label: " + label);
    return *e;
}

std::vector<const CatalogEntry*> Catalog::entries() const {
    std::vector<const CatalogEntry*> out;
    out.reserve(by_name_.size());
    for (const auto& [k, v] : by_name_) out.push_back(&v);
    return out;
}

namespace {

bool mentions_omega(const std::string& expr_text) {
    auto probe = Expr::parse(expr_text);
    try {
        probe->eval<Rat>({});
        return false;
    } catch (const arithmetic_error&) {
    }
    try {
        probe->eval<QuadExt>({});
        return true; // evaluates once w is available
    } catch (const arithmetic_error&) {
        return false;
    }
}

template <class F>
LieAlgebra<F> build(const CatalogEntry& e, const std::map<std::string, F>& env,
                    const std::string& label) {
    LieAlgebra<F> L(e.dim, label);
    for (const auto& b : e.brackets)
        for (const auto& t : b.terms) L.add_c(b.i, b.j, t.target, t.coef->template eval<F>(env));
    return L;
}

} // namespace

AlgebraVariant Catalog::instantiate(const std::string& label, const Binding& binding,
                                    std::vector<std::string>* warnings) const {
    const CatalogEntry& e = get(label);
    std::vector<std::string> unbound;
    bool quad = e.field == "quadext";
    for (const auto& p : e.params) {
        auto it = binding.find(p.name);
        if (it == binding.end()) {
            unbound.push_back(p.name);
            continue;
        }
        if (mentions_omega(it->second)) quad = true;
        for (const auto& ex : p.excluded) {
            bool same = false;
            try {
                same = Expr::parse(it->second)->eval<QuadExt>({}) ==
                       Expr::parse(ex)->eval<QuadExt>({});
            } catch (const arithmetic_error&) {
            }
            if (same && warnings)
                warnings->push_back(e.name + ": parameter " + p.name + " = " + it->second +
                                    " is an excluded value of this family");
        }
    }
    for (const auto& [k, v] : binding)
        if (!e.param(k)) throw unknown_label_error(e.name + " has no parameter " + k);

    std::string id = node_id(label, binding);
    if (unbound.size() > 1)
        throw arithmetic_error(e.name + ": more than one unbound parameter; bind or sample them");

    if (unbound.empty()) {
        if (!quad) {
            std::map<std::string, Rat> env;
            for (const auto& [k, v] : binding) env.emplace(k, Expr::parse(v)->eval<Rat>({}));
            return build<Rat>(e, env, id);
        }
        std::map<std::string, QuadExt> env;
        for (const auto& [k, v] : binding) env.emplace(k, Expr::parse(v)->eval<QuadExt>({}));
        return build<QuadExt>(e, env, id);
    }

    if (!quad) {
        std::map<std::string, RatFunc<Rat>> env;
        env.emplace(unbound[0], RatFunc<Rat>::variable());
        for (const auto& [k, v] : binding)
            env.emplace(k, RatFunc<Rat>(Expr::parse(v)->eval<Rat>({})));
        return build<RatFunc<Rat>>(e, env, id);
    }
    std::map<std::string, RatFunc<QuadExt>> env;
    env.emplace(unbound[0], RatFunc<QuadExt>::variable());
    for (const auto& [k, v] : binding)
        env.emplace(k, RatFunc<QuadExt>(Expr::parse(v)->eval<QuadExt>({})));
    return build<RatFunc<QuadExt>>(e, env, id);
}

LieAlgebra<Rat> Catalog::rational(const std::string& label, const Binding& binding) const {
    AlgebraVariant v = instantiate(label, binding);
    if (auto* p = std::get_if<LieAlgebra<Rat>>(&v)) return *p;
    throw arithmetic_error(label + ": not an algebra over the rationals");
}

std::string Catalog::node_id(const std::string& label, const Binding& binding) const {
    const CatalogEntry& e = get(label); // resolve aliases
    if (binding.empty()) return e.name;
    return e.name + "(" + binding_str(binding) + ")";
}

std::vector<Binding> Catalog::generic_samples(const CatalogEntry& e, const Binding& binding,
                                              int count) const {
    std::vector<std::string> unbound;
    for (const auto& p : e.params)
        if (!binding.count(p.name)) unbound.push_back(p.name);
    if (unbound.empty()) return {};

    // deterministic sample points, clear of every excluded value
    std::vector<Binding> out;
    unsigned long state = 0x9e3779b97f4a7c15ull;
    for (char ch : e.name) state = state * 131 + static_cast<unsigned long>(ch);
    auto next = [&]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        long num = static_cast<long>((state >> 33) % 211) + 5;
        long den = static_cast<long>((state >> 17) % 7) + 1;
        return Rat(num, den);
    };
    for (int s = 0; s < count; ++s) {
        Binding b = binding;
        for (const auto& name : unbound) {
            Rat v = next();
            const ParamSpec* p = e.param(name);
            bool clash = true;
            while (clash) {
                clash = false;
                if (p)
                    for (const auto& ex : p->excluded) {
                        try {
                            if (Expr::parse(ex)->eval<QuadExt>({}) == QuadExt(v)) clash = true;
                        } catch (const arithmetic_error&) {
                        }
                    }
                if (clash) v = next();
            }
            b[name] = v.str();
        }
        out.push_back(std::move(b));
    }
    return out;
}

const Fingerprint& Catalog::fingerprint_of(const std::string& label,
                                           const Binding& binding) const {
    std::string id = node_id(label, binding);
    {
        std::lock_guard<std::mutex> lock(*fp_mutex_);
        auto it = fp_cache_.find(id);
        if (it != fp_cache_.end()) return it->second;
    }
    // computed outside the lock; map references stay valid across inserts

    const CatalogEntry& e = get(label);
    std::vector<Binding> samples = generic_samples(e, binding);
    Fingerprint fp;
    if (samples.empty()) {
        fp = lievar::fingerprint_of(instantiate(label, binding));
    } else {
        std::vector<Fingerprint> fps;
        fps.reserve(samples.size());
        for (const auto& b : samples) fps.push_back(lievar::fingerprint_of(instantiate(label, b)));
        fp = merge_generic(fps);
    }
    std::lock_guard<std::mutex> lock(*fp_mutex_);
    return fp_cache_.emplace(std::move(id), std::move(fp)).first->second;
}

} // namespace lievar
