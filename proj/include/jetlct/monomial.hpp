#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "jetlct/jet_variable.hpp"

namespace jetlct {

/// Sparse power product over jet variables. Exponents are strictly positive;
/// factors are kept sorted by variable, so equal monomials compare equal
/// structurally. The empty product is the monomial 1.
class Monomial {
public:
    using Factor = std::pair<JetVariable, int>;

    Monomial() = default;

    explicit Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
        std::sort(factors_.begin(), factors_.end(),
                  [](const Factor& a, const Factor& b) { return a.first < b.first; });
        std::size_t w = 0;
        for (std::size_t r = 0; r < factors_.size(); ++r) {
            if (factors_[r].second == 0) continue;
            if (w > 0 && factors_[w - 1].first == factors_[r].first)
                factors_[w - 1].second += factors_[r].second;
            else
                factors_[w++] = factors_[r];
        }
        factors_.resize(w);
        std::erase_if(factors_, [](const Factor& f) { return f.second == 0; });
    }

    static Monomial one() { return Monomial{}; }

    static Monomial variable(JetVariable v, int exp = 1) {
        Monomial m;
        if (exp != 0) m.factors_.push_back({v, exp});
        return m;
    }

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }

    int exponent(JetVariable v) const {
        for (const auto& [w, e] : factors_)
            if (w == v) return e;
        return 0;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [v, e] : factors_) d += e;
        return d;
    }

    /// Sum of level * exponent over all factors.
    int jet_weight() const {
        int w = 0;
        for (const auto& [v, e] : factors_) w += v.level * e;
        return w;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        r.factors_.reserve(a.factors_.size() + b.factors_.size());
        auto i = a.factors_.begin(), j = b.factors_.begin();
        while (i != a.factors_.end() && j != b.factors_.end()) {
            if (i->first < j->first)
                r.factors_.push_back(*i++);
            else if (j->first < i->first)
                r.factors_.push_back(*j++);
            else {
                r.factors_.push_back({i->first, i->second + j->second});
                ++i, ++j;
            }
        }
        r.factors_.insert(r.factors_.end(), i, a.factors_.end());
        r.factors_.insert(r.factors_.end(), j, b.factors_.end());
        return r;
    }

    bool divides(const Monomial& other) const {
        for (const auto& [v, e] : factors_)
            if (other.exponent(v) < e) return false;
        return true;
    }

    /// Replaces the exponent of v (removing the factor when exp == 0).
    Monomial with_exponent(JetVariable v, int exp) const {
        Monomial r = *this;
        auto it = std::find_if(r.factors_.begin(), r.factors_.end(),
                               [&](const Factor& f) { return f.first == v; });
        if (it != r.factors_.end()) {
            if (exp == 0)
                r.factors_.erase(it);
            else
                it->second = exp;
        } else if (exp != 0) {
            r.factors_.push_back({v, exp});
            std::sort(r.factors_.begin(), r.factors_.end(),
                      [](const Factor& a, const Factor& b) { return a.first < b.first; });
        }
        return r;
    }

    /// Structural ordering; used as a map key, not as the monomial order.
    friend auto operator<=>(const Monomial& a, const Monomial& b) {
        return a.factors_ <=> b.factors_;
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Factor> factors_;
};

}  // namespace jetlct
