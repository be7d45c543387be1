#pragma once

#include <map>
#include <string>
#include <vector>

#include "jetlct/ideal.hpp"
#include "jetlct/polynomial.hpp"

namespace jetlct {

/// Image of g under the derivation sending each x_i^(j) to x_i^(j+1).
/// Satisfies the Leibniz rule exactly; the ambient's top level grows by one.
inline Polynomial derivation(const Polynomial& g) {
    VarSet amb = g.ambient();
    VarSet out{amb.n, amb.lo_level, amb.hi_level + 1};
    Polynomial r = Polynomial::zero(out);
    for (const auto& [m, c] : g.terms()) {
        for (const auto& [v, e] : m.factors()) {
            Monomial shifted =
                m.with_exponent(v, e - 1) * Monomial::variable(JetVariable{v.base, v.level + 1});
            r = r + Polynomial::term(c * e, shifted, out);
        }
    }
    return r;
}

namespace detail {
inline void require_base_input(const Polynomial& f, const char* op) {
    if (f.is_zero()) throw DomainError(std::string(op) + " requires a nonzero polynomial");
    if (f.max_level_used() > 0)
        throw DomainError(std::string(op) + " requires a level-0 polynomial");
}
}  // namespace detail

/// The iterated-derivation generators (F, DF, ..., D^m F), indexed by order.
/// D^p(F) only reaches level p, so every generator fits in the m-level ring.
inline std::vector<Polynomial> jet_equations(const Polynomial& f, int m) {
    detail::require_base_input(f, "jet_equations");
    if (m < 0) throw DomainError("jet level must be nonnegative");
    VarSet amb{f.ambient().n, 0, m};
    std::vector<Polynomial> gens;
    gens.reserve(static_cast<std::size_t>(m) + 1);
    Polynomial g = f;
    for (int p = 0; p <= m; ++p) {
        if (p > 0) g = derivation(g);
        gens.push_back(g.with_ambient(amb));
    }
    return gens;
}

/// Defining ideal of the m-jet scheme of {F = 0}: (F, DF, ..., D^m F) in the
/// (m+1)*n-variable ring.
inline Ideal jet_ideal(const Polynomial& f, int m) {
    return Ideal(jet_equations(f, m), VarSet{f.ambient().n, 0, m});
}

/// Coefficients of t^0..t^m in F(sum_j x_i^(j) t^j): the truncated-arc
/// generators G_0..G_m, indexed by the t-power. Substituting
/// x_i^(j) -> j! * x_i^(j) into D^p(F)/p! yields G_p exactly.
inline std::vector<Polynomial> taylor_coefficients(const Polynomial& f, int m) {
    detail::require_base_input(f, "taylor_coefficients");
    if (m < 0) throw DomainError("jet level must be nonnegative");
    VarSet amb{f.ambient().n, 0, m};
    using Series = std::vector<Polynomial>;  // index = t-power, size m+1
    auto series_mul = [&](const Series& a, const Series& b) {
        Series c(static_cast<std::size_t>(m) + 1, Polynomial::zero(amb));
        for (int i = 0; i <= m; ++i) {
            if (a[static_cast<std::size_t>(i)].is_zero()) continue;
            for (int j = 0; i + j <= m; ++j)
                c[static_cast<std::size_t>(i + j)] =
                    c[static_cast<std::size_t>(i + j)] +
                    a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
        }
        return c;
    };

    Series acc(static_cast<std::size_t>(m) + 1, Polynomial::zero(amb));
    for (const auto& [mono, c] : f.terms()) {
        Series t(static_cast<std::size_t>(m) + 1, Polynomial::zero(amb));
        t[0] = Polynomial::constant(c, amb);
        for (const auto& [v, e] : mono.factors()) {
            Series arc(static_cast<std::size_t>(m) + 1, Polynomial::zero(amb));
            for (int j = 0; j <= m; ++j)
                arc[static_cast<std::size_t>(j)] =
                    Polynomial::variable(JetVariable{v.base, j}, amb);
            for (int k = 0; k < e; ++k) t = series_mul(t, arc);
        }
        for (int p = 0; p <= m; ++p)
            acc[static_cast<std::size_t>(p)] =
                acc[static_cast<std::size_t>(p)] + t[static_cast<std::size_t>(p)];
    }
    return acc;
}

/// Same ideal as jet_ideal (unit rescaling of variables identifies the two
/// generator families); the coefficients stay factorial-free.
inline Ideal taylor_jet_generators(const Polynomial& f, int m) {
    return Ideal(taylor_coefficients(f, m), VarSet{f.ambient().n, 0, m});
}

/// Which generator family to specialize when forming fiber ideals.
enum class JetGeneratorFamily { derivation, taylor };

/// Jet ideal with the level-0 variables pinned to the coordinates of x; its
/// variety is the truncation-map fiber over x. Requires F(x) = 0: over a point
/// off the hypersurface the fiber is empty by definition, which is not the
/// same thing as a nonempty specialization of dimension -1.
inline Ideal fiber_ideal_at(const Polynomial& f, int m, const std::vector<Rational>& x,
                            JetGeneratorFamily family = JetGeneratorFamily::derivation) {
    detail::require_base_input(f, "fiber_ideal_at");
    if (m < 0) throw DomainError("jet level must be nonnegative");
    if (evaluate(f, x) != 0)
        throw DomainError("point is not on the hypersurface (F(x) != 0)");
    int n = f.ambient().n;
    VarSet full{n, 0, m};
    VarSet fiber_amb{n, 1, m};  // level 0 eliminated
    std::map<JetVariable, Polynomial> images;
    for (int i = 1; i <= n; ++i)
        images.emplace(JetVariable{i, 0},
                       Polynomial::constant(x[static_cast<std::size_t>(i - 1)], fiber_amb));
    std::vector<Polynomial> gens = family == JetGeneratorFamily::derivation
                                       ? jet_equations(f, m)
                                       : taylor_coefficients(f, m);
    std::vector<Polynomial> out;
    out.reserve(gens.size());
    for (const auto& g : gens) out.push_back(substitute(g, images, fiber_amb));
    return Ideal(std::move(out), fiber_amb);
}

}  // namespace jetlct
