#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jetlct/errors.hpp"
#include "jetlct/monomial.hpp"
#include "jetlct/order.hpp"
#include "jetlct/rational.hpp"

namespace jetlct {

/// Sparse multivariate polynomial with exact rational coefficients over a
/// declared rectangular set of jet variables. Always canonical: no zero
/// coefficients are stored, monomials are distinct. Immutable in use; all
/// operations return new values.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    Polynomial() = default;
    explicit Polynomial(VarSet ambient) : ambient_(ambient) {}

    static Polynomial zero(VarSet ambient) { return Polynomial(ambient); }

    static Polynomial constant(Rational c, VarSet ambient) {
        Polynomial p(ambient);
        if (c != 0) p.terms_.emplace(Monomial::one(), std::move(c));
        return p;
    }

    static Polynomial variable(JetVariable v, VarSet ambient) {
        if (!ambient.contains(v))
            throw DomainError("variable " + name(v) + " outside the ambient ring");
        Polynomial p(ambient);
        p.terms_.emplace(Monomial::variable(v), Rational(1));
        return p;
    }

    static Polynomial term(Rational c, Monomial m, VarSet ambient) {
        Polynomial p(ambient);
        if (c != 0) {
            for (const auto& [v, e] : m.factors())
                if (!ambient.contains(v))
                    throw DomainError("variable " + name(v) + " outside the ambient ring");
            p.terms_.emplace(std::move(m), std::move(c));
        }
        return p;
    }

    const VarSet& ambient() const { return ambient_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Total degree; -1 for the zero polynomial.
    int total_degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }

    /// All monomials share the same total degree (vacuously true for 0).
    bool is_homogeneous() const {
        int d = -1;
        for (const auto& [m, c] : terms_) {
            if (d < 0)
                d = m.total_degree();
            else if (m.total_degree() != d)
                return false;
        }
        return true;
    }

    int max_jet_weight() const {
        int w = 0;
        for (const auto& [m, c] : terms_) w = std::max(w, m.jet_weight());
        return w;
    }

    /// All monomials share the same jet weight (vacuously true for 0).
    bool has_pure_jet_weight() const {
        int w = -1;
        for (const auto& [m, c] : terms_) {
            if (w < 0)
                w = m.jet_weight();
            else if (m.jet_weight() != w)
                return false;
        }
        return true;
    }

    /// Highest jet level actually occurring; -1 when no variable occurs.
    int max_level_used() const {
        int l = -1;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m.factors()) l = std::max(l, v.level);
        return l;
    }

    bool uses_only_level(int level) const {
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m.factors())
                if (v.level != level) return false;
        return true;
    }

    Polynomial with_ambient(VarSet ambient) const {
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m.factors())
                if (!ambient.contains(v))
                    throw DomainError("variable " + name(v) + " outside the ambient ring");
        Polynomial p = *this;
        p.ambient_ = ambient;
        return p;
    }

    friend Polynomial operator-(const Polynomial& a) {
        Polynomial r = a;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        Polynomial r(merge(a.ambient_, b.ambient_));
        r.terms_ = a.terms_;
        for (const auto& [m, c] : b.terms_) {
            auto [it, inserted] = r.terms_.try_emplace(m, c);
            if (!inserted) {
                it->second += c;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r(merge(a.ambient_, b.ambient_));
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Rational c = ca * cb;
                Monomial m = ma * mb;
                auto [it, inserted] = r.terms_.try_emplace(std::move(m), c);
                if (!inserted) {
                    it->second += c;
                    if (it->second == 0) r.terms_.erase(it);
                }
            }
        return r;
    }

    friend Polynomial operator*(const Rational& c, const Polynomial& a) {
        Polynomial r(a.ambient_);
        if (c == 0) return r;
        r.terms_ = a.terms_;
        for (auto& [m, cc] : r.terms_) cc *= c;
        return r;
    }

    Polynomial pow(int e) const {
        if (e < 0) throw DomainError("negative exponent");
        Polynomial r = constant(1, ambient_);
        Polynomial base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.terms_ == b.terms_;
    }

private:
    VarSet ambient_{};
    TermMap terms_;
};

/// Formal partial derivative with respect to v.
inline Polynomial partial_derivative(const Polynomial& f, JetVariable v) {
    if (!f.ambient().contains(v))
        throw DomainError("variable " + name(v) + " outside the ambient ring");
    Polynomial r = Polynomial::zero(f.ambient());
    for (const auto& [m, c] : f.terms()) {
        int e = m.exponent(v);
        if (e == 0) continue;
        r = r + Polynomial::term(c * e, m.with_exponent(v, e - 1), f.ambient());
    }
    return r;
}

/// Simultaneous substitution of polynomials for variables. Variables without
/// an image are left in place.
inline Polynomial substitute(const Polynomial& f,
                             const std::map<JetVariable, Polynomial>& images,
                             VarSet result_ambient) {
    Polynomial r = Polynomial::zero(result_ambient);
    for (const auto& [m, c] : f.terms()) {
        Polynomial t = Polynomial::constant(c, result_ambient);
        for (const auto& [v, e] : m.factors()) {
            auto it = images.find(v);
            if (it == images.end())
                t = t * Polynomial::variable(v, result_ambient).pow(e);
            else
                t = t * it->second.pow(e);
        }
        r = r + t;
    }
    return r;
}

/// Evaluates a level-0 polynomial at a rational point of length n.
inline Rational evaluate(const Polynomial& f, const std::vector<Rational>& point) {
    if (static_cast<int>(point.size()) != f.ambient().n)
        throw DomainError("point length " + std::to_string(point.size()) +
                          " does not match ambient dimension " +
                          std::to_string(f.ambient().n));
    Rational total = 0;
    for (const auto& [m, c] : f.terms()) {
        Rational t = c;
        for (const auto& [v, e] : m.factors()) {
            if (v.level != 0) throw DomainError("evaluate requires a level-0 polynomial");
            Rational p = 1;
            for (int k = 0; k < e; ++k) p *= point[static_cast<std::size_t>(v.base - 1)];
            t *= p;
        }
        total += t;
    }
    return total;
}

/// F(X + a) for a level-0 polynomial; its constant term is F(a).
inline Polynomial translate(const Polynomial& f, const std::vector<Rational>& a) {
    if (static_cast<int>(a.size()) != f.ambient().n)
        throw DomainError("translation vector length " + std::to_string(a.size()) +
                          " does not match ambient dimension " +
                          std::to_string(f.ambient().n));
    if (f.max_level_used() > 0)
        throw DomainError("translate requires a level-0 polynomial");
    std::map<JetVariable, Polynomial> images;
    for (int i = 1; i <= f.ambient().n; ++i) {
        JetVariable v{i, 0};
        images.emplace(v, Polynomial::variable(v, f.ambient()) +
                              Polynomial::constant(a[static_cast<std::size_t>(i - 1)],
                                                   f.ambient()));
    }
    return substitute(f, images, f.ambient());
}

/// F(A * X) for an n-by-n rational matrix A acting on the level-0 coordinates:
/// x_i is replaced by the linear form sum_j A[i][j] * x_j.
inline Polynomial compose_linear(const Polynomial& f,
                                 const std::vector<std::vector<Rational>>& a) {
    int n = f.ambient().n;
    if (static_cast<int>(a.size()) != n)
        throw DomainError("matrix size does not match ambient dimension");
    std::map<JetVariable, Polynomial> images;
    for (int i = 1; i <= n; ++i) {
        const auto& row = a[static_cast<std::size_t>(i - 1)];
        if (static_cast<int>(row.size()) != n)
            throw DomainError("matrix size does not match ambient dimension");
        Polynomial form = Polynomial::zero(f.ambient());
        for (int j = 1; j <= n; ++j)
            form = form + row[static_cast<std::size_t>(j - 1)] *
                              Polynomial::variable(JetVariable{j, 0}, f.ambient());
        images.emplace(JetVariable{i, 0}, std::move(form));
    }
    return substitute(f, images, f.ambient());
}

/// Decomposes a homogeneous degree-d level-0 polynomial along one axis:
/// F = sum_{i=0}^{d} piece[i] * x_axis^(d-i), with piece[i] homogeneous of
/// degree i and free of x_axis. Returned as a vector indexed by i.
inline std::vector<Polynomial> graded_pieces(const Polynomial& f, int axis) {
    if (f.is_zero()) throw DomainError("graded_pieces requires a nonzero polynomial");
    if (!f.is_homogeneous() || f.max_level_used() > 0)
        throw DomainError("graded_pieces requires a homogeneous level-0 polynomial");
    if (axis < 1 || axis > f.ambient().n)
        throw DomainError("axis index out of range");
    int d = f.total_degree();
    std::vector<Polynomial> pieces(static_cast<std::size_t>(d) + 1,
                                   Polynomial::zero(f.ambient()));
    JetVariable xv{axis, 0};
    for (const auto& [m, c] : f.terms()) {
        int e = m.exponent(xv);
        int i = d - e;
        pieces[static_cast<std::size_t>(i)] =
            pieces[static_cast<std::size_t>(i)] +
            Polynomial::term(c, m.with_exponent(xv, 0), f.ambient());
    }
    return pieces;
}

/// Renders in the CLI grammar: terms descending under `order`, explicit '*',
/// '^' for powers, rationals as p/q. A leading negative coefficient is kept
/// numeric so the output re-parses.
inline std::string render(const Polynomial& f, const MonomialOrder& order) {
    if (f.is_zero()) return "0";
    std::vector<const std::pair<const Monomial, Rational>*> ts;
    ts.reserve(f.term_count());
    for (const auto& t : f.terms()) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [&](auto* a, auto* b) {
        return order.less(b->first, a->first);
    });

    auto mono_str = [](const Monomial& m) {
        std::string s;
        for (const auto& [v, e] : m.factors()) {
            if (!s.empty()) s += "*";
            s += name(v);
            if (e != 1) s += "^" + std::to_string(e);
        }
        return s;
    };

    std::string out;
    bool first = true;
    for (auto* t : ts) {
        const auto& [m, c] = *t;
        Rational mag = c < 0 ? Rational(-c) : c;
        std::string ms = mono_str(m);
        std::string body;
        if (ms.empty())
            body = to_string(mag);
        else if (mag == 1)
            body = ms;
        else
            body = to_string(mag) + "*" + ms;
        if (first) {
            if (c < 0) {
                // No unary minus in the grammar: fold the sign into the number.
                out += ms.empty() ? to_string(Rational(c))
                                  : to_string(Rational(-mag)) + "*" + ms;
            } else {
                out += body;
            }
            first = false;
        } else {
            out += (c < 0 ? " - " : " + ") + body;
        }
    }
    return out;
}

inline std::string render(const Polynomial& f) {
    return render(f, MonomialOrder::grevlex_for(f.ambient()));
}

}  // namespace jetlct
