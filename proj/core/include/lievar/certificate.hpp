#ifndef LIEVAR_CERTIFICATE_HPP
#define LIEVAR_CERTIFICATE_HPP

#include "lievar/catalog.hpp"
#include "lievar/degeneration.hpp"

namespace lievar {

/// A one-parameter-subgroup degeneration certificate: the base-change
/// matrix over the rational function field in t (stored as g or g^-1),
/// with an optional change of basis over the base field applied after the
/// limit.
struct Certificate {
    std::string id; // file stem
    std::string source;
    Binding source_binding;
    std::string target;
    Binding target_binding;
    bool matrix_is_inverse = true; // "matrix: g_inverse" (the common shape) or "matrix: g"
    int dim = 0;
    std::vector<std::vector<std::string>> entries; // n x n scalar expressions in t
    std::vector<std::vector<std::string>> postiso; // optional n x n over the base field
    std::vector<std::string> notes;
    std::string origin; // "published" or "derived"

    bool has_postiso() const { return !postiso.empty(); }
};

Certificate parse_certificate(const std::string& text);
std::string serialize_certificate(const Certificate& c);

struct VerifyResult {
    bool ok = false;
    std::string message;
};

/// Computes the limit of the certificate's curve applied to the source and
/// compares exactly with the target's structure constants (after the
/// optional post-limit change of basis).
VerifyResult verify_certificate(const Certificate& c, const Catalog& catalog);

class CertStore {
public:
    static CertStore load(const std::string& dir); // reads *.cert
    static std::string default_dir();
    static const CertStore& builtin();

    const std::vector<Certificate>& all() const { return certs_; }
    const Certificate* find(const std::string& id) const;

private:
    std::vector<Certificate> certs_;
};

} // namespace lievar

#endif
