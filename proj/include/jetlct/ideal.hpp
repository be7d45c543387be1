#pragma once

#include <utility>
#include <vector>

#include "jetlct/polynomial.hpp"

namespace jetlct {

/// A generator list over a declared ambient variable set. Zero generators are
/// dropped on construction; every generator must lie in the ambient ring.
struct Ideal {
    std::vector<Polynomial> generators;
    VarSet ambient;

    Ideal() = default;

    Ideal(std::vector<Polynomial> gens, VarSet amb) : ambient(amb) {
        generators.reserve(gens.size());
        for (auto& g : gens) {
            if (g.is_zero()) continue;
            generators.push_back(g.with_ambient(amb));
        }
    }

    static Ideal zero(VarSet amb) { return Ideal({}, amb); }

    bool is_zero_ideal() const { return generators.empty(); }
};

}  // namespace jetlct
