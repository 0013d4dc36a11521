#include "lievar/battery.hpp"

#include <sstream>

namespace lievar {

std::string ObstructionReport::str() const {
    if (violations.empty()) return "passed";
    std::ostringstream os;
    for (size_t i = 0; i < violations.size(); ++i) {
        if (i) os << "; ";
        os << violations[i].criterion << ": " << violations[i].relation;
    }
    return os.str();
}

namespace {

void check(ObstructionReport& rep, bool ok, const std::string& criterion, long s, long d,
           const char* rel) {
    if (ok) return;
    std::ostringstream os;
    os << s << " " << rel << " " << d << " fails";
    rep.violations.push_back({criterion, s, d, os.str()});
}

int padded(const std::vector<int>& v, size_t j) {
    if (v.empty()) return 0;
    return j < v.size() ? v[j] : v.back();
}

} // namespace

ObstructionReport obstruction_battery(const Fingerprint& src, const Fingerprint& dst,
                                      bool strict) {
    if (src.n != dst.n) throw arithmetic_error("obstruction battery: dimension mismatch");
    ObstructionReport rep;
    const int n = src.n;

    // identical invariant tuples cannot exclude a trivial degeneration
    if (strict && src == dst) return rep;

    if (strict) {
        check(rep, src.orbit_dim > dst.orbit_dim, "orbit", src.orbit_dim, dst.orbit_dim, ">");
        check(rep, src.der_dim < dst.der_dim, "der", src.der_dim, dst.der_dim, "<");
    } else {
        check(rep, src.orbit_dim >= dst.orbit_dim, "orbit", src.orbit_dim, dst.orbit_dim, ">=");
        check(rep, src.der_dim <= dst.der_dim, "der", src.der_dim, dst.der_dim, "<=");
    }

    check(rep, dst.dim_derived <= src.dim_derived, "derived", src.dim_derived, dst.dim_derived,
          ">=");
    check(rep, src.dim_center <= dst.dim_center, "center", src.dim_center, dst.dim_center, "<=");

    size_t levels = std::max(src.upper_central.size(), dst.upper_central.size());
    for (size_t j = 0; j < levels; ++j)
        check(rep, padded(src.upper_central, j) <= padded(dst.upper_central, j),
              "Z" + std::to_string(j + 1), padded(src.upper_central, j),
              padded(dst.upper_central, j), "<=");

    for (int j = 0; j <= n; ++j)
        check(rep, src.z[static_cast<size_t>(j)] <= dst.z[static_cast<size_t>(j)],
              "z" + std::to_string(j), src.z[static_cast<size_t>(j)],
              dst.z[static_cast<size_t>(j)], "<=");
    for (int j = 0; j <= n; ++j)
        check(rep, src.h[static_cast<size_t>(j)] <= dst.h[static_cast<size_t>(j)],
              "h" + std::to_string(j), src.h[static_cast<size_t>(j)],
              dst.h[static_cast<size_t>(j)], "<=");
    for (int j = 0; j <= n; ++j)
        check(rep, src.b[static_cast<size_t>(j)] <= dst.b[static_cast<size_t>(j)],
              "b" + std::to_string(j), src.b[static_cast<size_t>(j)],
              dst.b[static_cast<size_t>(j)], "<=");

    if (src.nilpotent && dst.nilpotent)
        check(rep, src.nil_class >= dst.nil_class, "n", src.nil_class, dst.nil_class, ">=");
    if (src.solvable && dst.solvable)
        check(rep, src.solv_class >= dst.solv_class, "s", src.solv_class, dst.solv_class, ">=");

    return rep;
}

} // namespace lievar
