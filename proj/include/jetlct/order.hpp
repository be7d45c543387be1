#pragma once

#include <string>
#include <vector>

#include "jetlct/errors.hpp"
#include "jetlct/jet_variable.hpp"
#include "jetlct/monomial.hpp"

namespace jetlct {

/// A monomial order: grevlex or lex over an explicit ascending variable
/// sequence (the last variable in the sequence is the largest).
struct MonomialOrder {
    enum class Kind { grevlex, lex };

    Kind kind = Kind::grevlex;
    std::vector<JetVariable> sequence;

    static MonomialOrder grevlex_for(const VarSet& vs) {
        return MonomialOrder{Kind::grevlex, vs.sequence()};
    }
    static MonomialOrder lex_for(const VarSet& vs) {
        return MonomialOrder{Kind::lex, vs.sequence()};
    }

    /// Strict comparison: returns true when a < b.
    bool less(const Monomial& a, const Monomial& b) const {
        if (kind == Kind::grevlex) {
            int da = a.total_degree(), db = b.total_degree();
            if (da != db) return da < db;
            // Equal degrees: scan from the smallest variable; at the first
            // difference, the monomial with the larger exponent is smaller.
            for (const JetVariable& v : sequence) {
                int ea = a.exponent(v), eb = b.exponent(v);
                if (ea != eb) return ea > eb;
            }
            return false;
        }
        // lex: scan from the largest variable; larger exponent wins.
        for (auto it = sequence.rbegin(); it != sequence.rend(); ++it) {
            int ea = a.exponent(*it), eb = b.exponent(*it);
            if (ea != eb) return ea < eb;
        }
        return false;
    }

    std::string kind_name() const { return kind == Kind::grevlex ? "grevlex" : "lex"; }
};

inline MonomialOrder::Kind order_kind_from_name(const std::string& s) {
    if (s == "grevlex") return MonomialOrder::Kind::grevlex;
    if (s == "lex") return MonomialOrder::Kind::lex;
    throw DomainError("unknown monomial order: " + s);
}

}  // namespace jetlct
