#include "lievar/certificate.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#ifndef LIEVAR_SOURCE_DATA_DIR
#define LIEVAR_SOURCE_DATA_DIR "data"
#endif

namespace lievar {

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// "gF" or "l4g4 (a=3, b=5)"
void parse_labelled(const std::string& text, std::string& label, Binding& binding, int line) {
    size_t paren = text.find('(');
    if (paren == std::string::npos) {
        label = strip(text);
        return;
    }
    label = strip(text.substr(0, paren));
    size_t close = text.rfind(')');
    if (close == std::string::npos || close < paren)
        throw parse_error("unterminated parameter binding", line, 1);
    std::istringstream bs(text.substr(paren + 1, close - paren - 1));
    std::string piece;
    while (std::getline(bs, piece, ',')) {
        piece = strip(piece);
        if (piece.empty()) continue;
        size_t eq = piece.find('=');
        if (eq == std::string::npos)
            throw parse_error("parameter binding needs name=value", line, 1);
        binding[strip(piece.substr(0, eq))] = strip(piece.substr(eq + 1));
    }
    if (label.empty()) throw parse_error("empty label", line, 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

} // namespace

Certificate parse_certificate(const std::string& text) {
    Certificate c;
    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    enum { Header, MatrixRows, PostisoRows } state = Header;
    std::vector<std::vector<std::string>>* rows = nullptr;
    while (std::getline(is, raw)) {
        ++lineno;
        std::string line = strip(raw);
        if (!line.empty() && line[0] == '#') continue;
        if (line.empty()) continue;

        if (state == Header) {
            size_t colon = line.find(':');
            if (colon == std::string::npos)
                throw parse_error("expected 'key: value' in certificate header", lineno, 1);
            std::string key = strip(line.substr(0, colon));
            std::string val = strip(line.substr(colon + 1));
            if (key == "source")
                parse_labelled(val, c.source, c.source_binding, lineno);
            else if (key == "target")
                parse_labelled(val, c.target, c.target_binding, lineno);
            else if (key == "matrix") {
                if (val == "g")
                    c.matrix_is_inverse = false;
                else if (val == "g_inverse")
                    c.matrix_is_inverse = true;
                else
                    throw parse_error("matrix must be g or g_inverse", lineno, 1);
                state = MatrixRows;
                rows = &c.entries;
            } else if (key == "note")
                c.notes.push_back(val);
            else if (key == "origin") {
                if (val != "published" && val != "derived")
                    throw parse_error("origin must be published or derived", lineno, 1);
                c.origin = val;
            } else
                throw parse_error("unknown certificate key '" + key + "'", lineno, 1);
            continue;
        }

        if (line == "postiso:") {
            if (state != MatrixRows || static_cast<int>(c.entries.size()) != c.dim ||
                c.dim == 0)
                throw parse_error("postiso: before the matrix is complete", lineno, 1);
            state = PostisoRows;
            rows = &c.postiso;
            continue;
        }

        std::vector<std::string> toks = split_ws(line);
        if (rows->empty()) {
            if (state == MatrixRows) c.dim = static_cast<int>(toks.size());
        }
        if (static_cast<int>(toks.size()) != c.dim)
            throw parse_error("matrix row with " + std::to_string(toks.size()) +
                                  " entries, expected " + std::to_string(c.dim),
                              lineno, 1);
        for (const auto& t : toks) {
            try {
                Expr::parse(t);
            } catch (const parse_error& pe) {
                throw parse_error("bad matrix entry '" + t + "': " + pe.what(), lineno,
                                  pe.column);
            }
        }
        rows->push_back(std::move(toks));
        if (static_cast<int>(rows->size()) > c.dim)
            throw parse_error("too many matrix rows", lineno, 1);
    }
    if (c.source.empty() || c.target.empty())
        throw parse_error("certificate needs source: and target:", 1, 1);
    if (static_cast<int>(c.entries.size()) != c.dim || c.dim == 0)
        throw parse_error("certificate matrix incomplete", 1, 1);
    if (!c.postiso.empty() && static_cast<int>(c.postiso.size()) != c.dim)
        throw parse_error("postiso block incomplete", 1, 1);
    return c;
}

std::string serialize_certificate(const Certificate& c) {
    std::ostringstream os;
    os << "source: " << c.source;
    if (!c.source_binding.empty()) os << " (" << binding_str(c.source_binding) << ")";
    os << "\n";
    os << "target: " << c.target;
    if (!c.target_binding.empty()) os << " (" << binding_str(c.target_binding) << ")";
    os << "\n";
    if (!c.origin.empty()) os << "origin: " << c.origin << "\n";
    for (const auto& n : c.notes) os << "note: " << n << "\n";
    os << "matrix: " << (c.matrix_is_inverse ? "g_inverse" : "g") << "\n";
    for (const auto& row : c.entries) {
        for (size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
        os << "\n";
    }
    if (!c.postiso.empty()) {
        os << "postiso:\n";
        for (const auto& row : c.postiso) {
            for (size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
            os << "\n";
        }
    }
    return os.str();
}

namespace {

template <class B>
VerifyResult verify_over(const LieAlgebra<B>& src, const LieAlgebra<B>& dst,
                         const Certificate& c) {
    using R = RatFunc<B>;
    if (src.dim() != c.dim || dst.dim() != c.dim)
        return {false, "matrix dimension differs from the algebras"};
    Matrix<R> g(c.dim, c.dim);
    std::map<std::string, R> env{{"t", R::variable()}};
    for (int i = 0; i < c.dim; ++i)
        for (int j = 0; j < c.dim; ++j)
            g.at(i, j) = Expr::parse(c.entries[static_cast<size_t>(i)][static_cast<size_t>(j)])
                             ->template eval<R>(env);
    LieAlgebra<B> limit(c.dim);
    try {
        limit = psg_limit(src, g, c.matrix_is_inverse);
    } catch (const limit_does_not_exist_error& e) {
        std::ostringstream os;
        os << "limit does not exist:";
        for (const auto& p : e.poles)
            os << " [" << p.i + 1 << "," << p.j + 1 << "]->" << p.k + 1 << " order " << p.order;
        return {false, os.str()};
    } catch (const singular_matrix_error&) {
        return {false, "certificate matrix is singular over the function field"};
    }
    if (c.has_postiso()) {
        Matrix<B> p(c.dim, c.dim);
        for (int i = 0; i < c.dim; ++i)
            for (int j = 0; j < c.dim; ++j)
                p.at(i, j) =
                    Expr::parse(c.postiso[static_cast<size_t>(i)][static_cast<size_t>(j)])
                        ->template eval<B>({});
        try {
            limit = apply_base_change(limit, p);
        } catch (const singular_matrix_error&) {
            return {false, "post-limit change of basis is singular"};
        }
    }
    if (auto diff = limit.first_difference(dst)) {
        std::ostringstream os;
        os << "limit differs from target at [" << (*diff)[0] + 1 << "," << (*diff)[1] + 1
           << "]->" << (*diff)[2] + 1;
        return {false, os.str()};
    }
    return {true, "OK"};
}

} // namespace

VerifyResult verify_certificate(const Certificate& c, const Catalog& catalog) {
    AlgebraVariant src, dst;
    try {
        src = catalog.instantiate(c.source, c.source_binding);
        dst = catalog.instantiate(c.target, c.target_binding);
    } catch (const unknown_label_error& e) {
        return {false, e.what()};
    }
    if (std::holds_alternative<LieAlgebra<Rat>>(src) &&
        std::holds_alternative<LieAlgebra<Rat>>(dst))
        return verify_over(std::get<LieAlgebra<Rat>>(src), std::get<LieAlgebra<Rat>>(dst), c);
    if (std::holds_alternative<LieAlgebra<QuadExt>>(src) ||
        std::holds_alternative<LieAlgebra<QuadExt>>(dst)) {
        auto lift = [](const AlgebraVariant& v) -> LieAlgebra<QuadExt> {
            if (auto* q = std::get_if<LieAlgebra<QuadExt>>(&v)) return *q;
            if (auto* r = std::get_if<LieAlgebra<Rat>>(&v))
                return r->map_scalars<QuadExt>();
            throw arithmetic_error("certificate over a parametric algebra");
        };
        return verify_over(lift(src), lift(dst), c);
    }
    return {false, "certificates need fully specialized endpoint algebras"};
}

std::string CertStore::default_dir() {
    if (const char* env = std::getenv("LIEVAR_CERTS")) return env;
    return std::string(LIEVAR_SOURCE_DATA_DIR) + "/certs";
}

CertStore CertStore::load(const std::string& dir) {
    CertStore s;
    namespace fs = std::filesystem;
    if (!fs::exists(dir)) throw std::runtime_error("certificate directory not found: " + dir);
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().extension() == ".cert") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
        std::ifstream in(f);
        std::stringstream ss;
        ss << in.rdbuf();
        try {
            Certificate c = parse_certificate(ss.str());
            c.id = f.stem().string();
            s.certs_.push_back(std::move(c));
        } catch (const parse_error& pe) {
            throw std::runtime_error(f.string() + ":" + std::to_string(pe.line) + ": " +
                                     pe.what());
        }
    }
    return s;
}

const CertStore& CertStore::builtin() {
    static CertStore s = CertStore::load(CertStore::default_dir());
    return s;
}

const Certificate* CertStore::find(const std::string& id) const {
    for (const auto& c : certs_)
        if (c.id == id) return &c;
    return nullptr;
}

} // namespace lievar
