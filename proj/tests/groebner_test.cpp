#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "jetlct/groebner.hpp"
#include "jetlct/jets.hpp"
#include "jetlct/parse.hpp"

using namespace jetlct;

namespace {

Ideal ideal_of(std::vector<std::string> exprs, int n, int hi_level = 0) {
    VarSet amb{n, 0, hi_level};
    std::vector<Polynomial> gens;
    for (const auto& e : exprs) gens.push_back(parse_poly(e, n).with_ambient(amb));
    return Ideal(std::move(gens), amb);
}

// Textbook reducer, independent of the engine: repeatedly cancel the leading
// term against the first basis element whose lead divides it, with plain
// rational arithmetic.
Polynomial naive_reduce(Polynomial f, const std::vector<Polynomial>& basis,
                        const MonomialOrder& order) {
    auto leading = [&](const Polynomial& p) {
        const Monomial* best = nullptr;
        for (const auto& [m, c] : p.terms())
            if (!best || order.less(*best, m)) best = &m;
        return *best;
    };
    Polynomial rem = Polynomial::zero(f.ambient());
    while (!f.is_zero()) {
        Monomial lt = leading(f);
        Rational lc = f.coefficient(lt);
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            Monomial gl = leading(g);
            if (!gl.divides(lt)) continue;
            Monomial u = Monomial::one();
            for (const auto& [v, e] : lt.factors()) {
                int q = e - gl.exponent(v);
                if (q > 0) u = u * Monomial::variable(v, q);
            }
            Rational scale = lc / g.coefficient(gl);
            f = f - scale * (Polynomial::term(1, u, f.ambient()) * g);
            reduced = true;
            break;
        }
        if (!reduced) {
            Polynomial t = Polynomial::term(lc, lt, f.ambient());
            rem = rem + t;
            f = f - t;
        }
    }
    return rem;
}

Polynomial spoly_naive(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    auto leading = [&](const Polynomial& p) {
        const Monomial* best = nullptr;
        for (const auto& [m, c] : p.terms())
            if (!best || order.less(*best, m)) best = &m;
        return *best;
    };
    Monomial lf = leading(f), lg = leading(g);
    std::vector<Monomial::Factor> fs;
    for (const auto& [v, e] : lf.factors()) fs.push_back({v, std::max(e, lg.exponent(v))});
    for (const auto& [v, e] : lg.factors())
        if (lf.exponent(v) == 0) fs.push_back({v, e});
    Monomial lcm = Monomial(fs);
    auto cof = [&](const Monomial& lead) {
        std::vector<Monomial::Factor> q;
        for (const auto& [v, e] : lcm.factors()) {
            int d = e - lead.exponent(v);
            if (d > 0) q.push_back({v, d});
        }
        return Monomial(q);
    };
    Polynomial uf = Polynomial::term(Rational(1) / f.coefficient(lf), cof(lf), f.ambient());
    Polynomial ug = Polynomial::term(Rational(1) / g.coefficient(lg), cof(lg), g.ambient());
    return uf * f - ug * g;
}

}  // namespace

TEST_CASE("basis of simple ideals") {
    GroebnerBasis b1 = groebner_basis(ideal_of({"x1"}, 2));
    REQUIRE(b1.basis.size() == 1);
    CHECK(b1.basis[0] == parse_poly("x1", 2));

    GroebnerBasis b0 = groebner_basis(Ideal::zero(VarSet{3, 0, 0}));
    CHECK(b0.basis.empty());

    GroebnerBasis bu = groebner_basis(ideal_of({"x1 - 1", "x1"}, 1));
    CHECK(bu.contains_unit());
    CHECK(krull_dimension(bu) == -1);
}

TEST_CASE("reduced basis for a plane-curve pair") {
    // Expected basis computed by running Buchberger by hand; the reduction
    // property is asserted independently below.
    GroebnerBasis b = groebner_basis(ideal_of({"x1^2 + x2^2", "x1*x2"}, 2));
    REQUIRE(b.basis.size() == 3);
    CHECK(b.basis[0] == parse_poly("x1*x2", 2));
    CHECK(b.basis[1] == parse_poly("x2^2 + x1^2", 2));
    CHECK(b.basis[2] == parse_poly("x1^3", 2));
    CHECK(krull_dimension(b) == 0);
}

TEST_CASE("every S-polynomial reduces to zero, checked independently") {
    std::vector<Ideal> corpus = {
        ideal_of({"x1^2 + x2^2", "x1*x2"}, 2),
        ideal_of({"x1^2 - x2", "x2^2 - x1"}, 2),
        ideal_of({"x1*x2 - 1", "x1^2 + x2^2 - 4"}, 2),
        ideal_of({"x1 + x2 + x3", "x1*x2 + x2*x3 + x1*x3", "x1*x2*x3 - 1"}, 3),
        jet_ideal(parse_poly("x1*x2", 2), 2),
        jet_ideal(parse_poly("x1^2 + x2^3", 2), 2),
    };
    for (const auto& ideal : corpus) {
        GroebnerBasis b = groebner_basis(ideal);
        for (std::size_t i = 0; i < b.basis.size(); ++i)
            for (std::size_t j = i + 1; j < b.basis.size(); ++j) {
                Polynomial s = spoly_naive(b.basis[i], b.basis[j], b.order);
                CHECK(naive_reduce(s, b.basis, b.order).is_zero());
            }
        // The basis generates the same ideal: every input generator reduces
        // to zero against it.
        for (const auto& g : ideal.generators)
            CHECK(naive_reduce(g, b.basis, b.order).is_zero());
        // Reduced form: monic leads, no lead divides another basis monomial.
        for (const auto& g : b.basis) {
            const Monomial* lead = nullptr;
            for (const auto& [m, c] : g.terms())
                if (!lead || b.order.less(*lead, m)) lead = &m;
            CHECK(g.coefficient(*lead) == 1);
            for (const auto& h : b.basis) {
                if (&h == &g) continue;
                const Monomial* hl = nullptr;
                for (const auto& [m, c] : h.terms())
                    if (!hl || b.order.less(*hl, m)) hl = &m;
                for (const auto& [m, c] : g.terms()) CHECK(!hl->divides(m));
            }
        }
    }
}

TEST_CASE("ideal membership via normal form") {
    GroebnerBasis b = groebner_basis(ideal_of({"x1"}, 2));
    CHECK(ideal_membership(parse_poly("x1", 2), b));
    CHECK(!ideal_membership(parse_poly("x2", 2), b));

    Ideal jets2 = jet_ideal(parse_poly("x1^2*x2 + x2^3", 2), 2);
    GroebnerBasis bj = groebner_basis(jets2);
    for (const auto& g : jets2.generators) CHECK(ideal_membership(g, bj));
    CHECK(!ideal_membership(parse_poly("x1", 2).with_ambient(jets2.ambient), bj));
}

TEST_CASE("krull dimension basics") {
    CHECK(krull_dimension(Ideal::zero(VarSet{3, 0, 0})) == 3);
    CHECK(krull_dimension(ideal_of({"1"}, 2)) == -1);
    CHECK(krull_dimension(ideal_of({"x1"}, 2)) == 1);
    CHECK(krull_dimension(ideal_of({"x1", "x2"}, 2)) == 0);
    CHECK(krull_dimension(jet_ideal(parse_poly("x1*x2", 2), 1)) == 2);
}

TEST_CASE("dimension is order independent") {
    std::vector<Ideal> corpus;
    corpus.push_back(ideal_of({"x1^2 + x2^2", "x1*x2"}, 2));
    corpus.push_back(ideal_of({"x1*x2"}, 2));
    corpus.push_back(ideal_of({"x1^2 - x2"}, 2));
    corpus.push_back(ideal_of({"x1*x2 - x3^2", "x1^2 - x2*x3"}, 3));
    corpus.push_back(ideal_of({"x1^3 - x2^2"}, 2));
    corpus.push_back(ideal_of({"x1^2*x2 - 1"}, 2));
    corpus.push_back(ideal_of({"x1 + x2 + x3", "x1*x2 + x2*x3 + x1*x3"}, 3));
    corpus.push_back(ideal_of({"x1^2", "x2^2"}, 2));
    corpus.push_back(ideal_of({"x1^4 - x2", "x3^2 - x1"}, 3));
    corpus.push_back(ideal_of({"x2^2 - x1^3 - x1"}, 2));
    corpus.push_back(Ideal::zero(VarSet{2, 0, 0}));
    corpus.push_back(ideal_of({"x1^2 + 1"}, 1));
    corpus.push_back(ideal_of({"x1*x3", "x2*x3"}, 3));
    corpus.push_back(ideal_of({"x1^2 - 2*x1 + 1"}, 1));
    corpus.push_back(ideal_of({"x1^2 + x2^2 + x3^2"}, 3));
    corpus.push_back(ideal_of({"x1*x2 - 1"}, 2));
    corpus.push_back(ideal_of({"x1^3 + x2^3 + x3^3"}, 3));
    corpus.push_back(jet_ideal(parse_poly("x1^2", 1), 1));
    corpus.push_back(jet_ideal(parse_poly("x1^2", 1), 3));
    corpus.push_back(jet_ideal(parse_poly("x1*x2", 2), 1));
    corpus.push_back(jet_ideal(parse_poly("x1^2 + x2^2", 2), 2));
    corpus.push_back(jet_ideal(parse_poly("x1^3 + x2^3", 2), 2));
    for (const auto& ideal : corpus) {
        int dg = krull_dimension(groebner_basis(ideal, MonomialOrder::grevlex_for(ideal.ambient)));
        int dl = krull_dimension(groebner_basis(ideal, MonomialOrder::lex_for(ideal.ambient)));
        CHECK(dg == dl);
    }
}

TEST_CASE("monomial ideal dimension agrees with exhaustive subset search") {
    std::mt19937 rng(1001);
    std::uniform_int_distribution<int> nvars_dist(1, 6);
    std::uniform_int_distribution<int> ngens_dist(0, 6);
    std::uniform_int_distribution<int> expo(0, 2);
    for (int it = 0; it < 40; ++it) {
        int n = nvars_dist(rng);
        VarSet amb{n, 0, 0};
        std::vector<Polynomial> gens;
        int k = ngens_dist(rng);
        for (int g = 0; g < k; ++g) {
            std::vector<Monomial::Factor> fs;
            for (int i = 1; i <= n; ++i) {
                int e = expo(rng);
                if (e > 0) fs.push_back({JetVariable{i, 0}, e});
            }
            Monomial m(fs);
            if (m.is_one()) continue;  // keep the ideal proper
            gens.push_back(Polynomial::term(1, m, amb));
        }
        Ideal ideal(gens, amb);
        int fast = krull_dimension(ideal);

        // Exhaustive: largest S with no generator supported inside S.
        int best = -1;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            bool independent = true;
            for (const auto& g : ideal.generators) {
                const Monomial& m = g.terms().begin()->first;
                bool inside = true;
                for (const auto& [v, e] : m.factors())
                    if (!(mask >> (v.base - 1) & 1)) {
                        inside = false;
                        break;
                    }
                if (inside) {
                    independent = false;
                    break;
                }
            }
            if (independent) best = std::max(best, std::popcount(mask));
        }
        CHECK(fast == best);
    }
}

TEST_CASE("budget exhaustion is reported, not silently wrong") {
    GroebnerConfig tiny;
    tiny.max_steps = 3;
    Ideal hard = jet_ideal(parse_poly("x1^3 + x2^3", 2), 3);
    CHECK_THROWS_AS(groebner_basis(hard, tiny), BudgetExceeded);
    try {
        groebner_basis(hard, tiny);
    } catch (const BudgetExceeded& e) {
        CHECK(e.steps_done >= 3);
    }
}

TEST_CASE("variable cap is enforced") {
    GroebnerConfig cfg;
    cfg.variable_cap = 4;
    Ideal wide = jet_ideal(parse_poly("x1*x2", 2), 2);  // 6 variables
    CHECK_THROWS_AS(groebner_basis(wide, cfg), CapExceeded);
}

TEST_CASE("deterministic output for fixed input and order") {
    Ideal ideal = jet_ideal(parse_poly("x1^2 + x2^3", 2), 2);
    GroebnerBasis a = groebner_basis(ideal);
    GroebnerBasis b = groebner_basis(ideal);
    REQUIRE(a.basis.size() == b.basis.size());
    for (std::size_t i = 0; i < a.basis.size(); ++i) CHECK(a.basis[i] == b.basis[i]);
}
