#ifndef LIEVAR_BATTERY_HPP
#define LIEVAR_BATTERY_HPP

#include "lievar/fingerprint.hpp"

#include <string>
#include <vector>

namespace lievar {

/// One violated necessary condition for src ->deg dst, exactly as
/// evaluated.
struct Violation {
    std::string criterion; // "orbit", "der", "derived", "center", "Z2", "z3", "h5", "b3", "n", "s"
    long src_value = 0;
    long dst_value = 0;
    std::string relation; // the inequality that failed, human-readable
};

struct ObstructionReport {
    std::vector<Violation> violations;
    bool obstructed() const { return !violations.empty(); }
    bool has(const std::string& criterion) const {
        for (const auto& v : violations)
            if (v.criterion == criterion) return true;
        return false;
    }
    std::string str() const;
};

/// Runs every necessary-condition inequality for a degeneration
/// src ->deg dst on the two invariant tuples.  In strict mode the orbit
/// dimension must strictly decrease and the derivation dimension strictly
/// increase (non-trivial degeneration); the relaxed mode admits equality
/// and is used for the central-quotient rule, where the induced
/// degeneration may be trivial.
ObstructionReport obstruction_battery(const Fingerprint& src, const Fingerprint& dst,
                                      bool strict = true);

} // namespace lievar

#endif
