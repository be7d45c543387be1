#pragma once

#include <compare>
#include <string>
#include <vector>

#include "jetlct/errors.hpp"

namespace jetlct {

/// A jet coordinate: `base` is the 1-based index i of the underlying affine
/// coordinate, `level` the jet order j. Level 0 is the coordinate itself.
struct JetVariable {
    int base = 1;
    int level = 0;

    /// Level-major comparison, matching the canonical variable sequence
    /// x1 < x2 < ... < xn < x1_1 < x2_1 < ...
    friend constexpr auto operator<=>(const JetVariable& a, const JetVariable& b) {
        if (auto c = a.level <=> b.level; c != 0) return c;
        return a.base <=> b.base;
    }
    friend constexpr bool operator==(const JetVariable&, const JetVariable&) = default;
};

/// Canonical variable name: "x3" at level 0, "x3_2" at level 2.
inline std::string name(JetVariable v) {
    std::string s = "x" + std::to_string(v.base);
    if (v.level > 0) s += "_" + std::to_string(v.level);
    return s;
}

/// Rectangular set of jet variables: bases 1..n at levels lo_level..hi_level.
/// An empty range (hi_level < lo_level) is a valid 0-variable ambient.
struct VarSet {
    int n = 0;
    int lo_level = 0;
    int hi_level = 0;

    int levels() const { return hi_level < lo_level ? 0 : hi_level - lo_level + 1; }
    int size() const { return n * levels(); }

    bool contains(JetVariable v) const {
        return v.base >= 1 && v.base <= n && v.level >= lo_level && v.level <= hi_level;
    }

    /// Position of v in the level-major sequence.
    int index_of(JetVariable v) const { return (v.level - lo_level) * n + (v.base - 1); }

    JetVariable var_at(int idx) const {
        return JetVariable{idx % n + 1, lo_level + idx / n};
    }

    /// All variables, ascending.
    std::vector<JetVariable> sequence() const {
        std::vector<JetVariable> vs;
        vs.reserve(static_cast<std::size_t>(size()));
        for (int l = lo_level; l <= hi_level; ++l)
            for (int b = 1; b <= n; ++b) vs.push_back(JetVariable{b, l});
        return vs;
    }

    friend bool operator==(const VarSet&, const VarSet&) = default;
};

/// Smallest rectangular set containing both operands. Base counts must agree.
inline VarSet merge(const VarSet& a, const VarSet& b) {
    if (a.size() == 0) return b;
    if (b.size() == 0) return a;
    if (a.n != b.n)
        throw DomainError("ambient mismatch: " + std::to_string(a.n) + " vs " +
                          std::to_string(b.n) + " base variables");
    return VarSet{a.n, a.lo_level < b.lo_level ? a.lo_level : b.lo_level,
                  a.hi_level > b.hi_level ? a.hi_level : b.hi_level};
}

}  // namespace jetlct
