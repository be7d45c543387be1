#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <unordered_set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "jetlct/errors.hpp"
#include "jetlct/ideal.hpp"
#include "jetlct/order.hpp"
#include "jetlct/polynomial.hpp"

namespace jetlct {

struct GroebnerConfig {
    std::uint64_t max_steps = 1'000'000;  // single-term reduction steps per basis
    std::optional<std::chrono::milliseconds> timeout;
    int variable_cap = 40;
};

struct GroebnerStats {
    std::uint64_t reduction_steps = 0;
    std::size_t pairs_processed = 0;
};

/// Reduced Gröbner basis: monic elements, fully tail-reduced, sorted by
/// ascending leading monomial. Deterministic for fixed input and order.
struct GroebnerBasis {
    std::vector<Polynomial> basis;
    MonomialOrder order;
    bool reduced = true;
    GroebnerStats stats;

    bool contains_unit() const {
        return basis.size() == 1 && !basis[0].is_zero() &&
               basis[0].terms().begin()->first.is_one();
    }
};

namespace gb {

constexpr int kPackedMax = 64;

struct Mono {
    std::array<std::uint8_t, kPackedMax> e{};
    std::int32_t deg = 0;
};

inline bool mono_equal(const Mono& a, const Mono& b, int n) {
    if (a.deg != b.deg) return false;
    for (int i = 0; i < n; ++i)
        if (a.e[i] != b.e[i]) return false;
    return true;
}

/// +1 if a > b, -1 if a < b, 0 if equal.
inline int mono_cmp(const Mono& a, const Mono& b, MonomialOrder::Kind kind, int n) {
    if (kind == MonomialOrder::Kind::grevlex) {
        if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
        for (int i = 0; i < n; ++i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
        return 0;
    }
    for (int i = n - 1; i >= 0; --i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
    return 0;
}

inline bool mono_divides(const Mono& a, const Mono& b, int n) {
    if (a.deg > b.deg) return false;
    for (int i = 0; i < n; ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

inline Mono mono_mul(const Mono& a, const Mono& b, int n) {
    Mono r;
    for (int i = 0; i < n; ++i) {
        int s = a.e[i] + b.e[i];
        if (s > 255) throw CapExceeded("monomial exponent overflow");
        r.e[i] = static_cast<std::uint8_t>(s);
    }
    r.deg = a.deg + b.deg;
    return r;
}

/// b / a, assuming divisibility.
inline Mono mono_quot(const Mono& b, const Mono& a, int n) {
    Mono r;
    for (int i = 0; i < n; ++i) r.e[i] = static_cast<std::uint8_t>(b.e[i] - a.e[i]);
    r.deg = b.deg - a.deg;
    return r;
}

inline Mono mono_lcm(const Mono& a, const Mono& b, int n) {
    Mono r;
    int d = 0;
    for (int i = 0; i < n; ++i) {
        r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
        d += r.e[i];
    }
    r.deg = d;
    return r;
}

inline std::uint64_t support_mask(const Mono& a, int n) {
    std::uint64_t m = 0;
    for (int i = 0; i < n; ++i)
        if (a.e[i]) m |= std::uint64_t{1} << i;
    return m;
}

/// Engine polynomial: terms descending under the active order, exact rational
/// coefficients. Basis elements are kept monic, which bounds coefficient
/// growth during reduction to the intrinsic normalized sizes.
struct Poly {
    std::vector<Mono> ms;
    std::vector<Rational> cs;

    bool empty() const { return ms.empty(); }
    std::size_t size() const { return ms.size(); }
};

inline void make_monic(Poly& f) {
    if (f.empty() || f.cs[0] == 1) return;
    Rational lead = f.cs[0];
    f.cs[0] = 1;
    for (std::size_t t = 1; t < f.cs.size(); ++t) f.cs[t] /= lead;
}

/// r = f - c*(u*g), merging the two sorted term lists. With monic g and
/// c = lc(f), this cancels the leading term of f exactly.
inline Poly sub_mul(const Poly& f, const Rational& c, const Poly& g, const Mono& u,
                    MonomialOrder::Kind kind, int n) {
    Poly r;
    r.ms.reserve(f.size() + g.size());
    r.cs.reserve(f.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < f.size() || j < g.size()) {
        if (j >= g.size()) {
            r.ms.push_back(f.ms[i]);
            r.cs.push_back(f.cs[i]);
            ++i;
            continue;
        }
        Mono gm = mono_mul(g.ms[j], u, n);
        if (i >= f.size()) {
            r.ms.push_back(gm);
            r.cs.push_back(-c * g.cs[j]);
            ++j;
            continue;
        }
        int cmp = mono_cmp(f.ms[i], gm, kind, n);
        if (cmp > 0) {
            r.ms.push_back(f.ms[i]);
            r.cs.push_back(f.cs[i]);
            ++i;
        } else if (cmp < 0) {
            r.ms.push_back(gm);
            r.cs.push_back(-c * g.cs[j]);
            ++j;
        } else {
            Rational v = f.cs[i] - c * g.cs[j];
            if (v != 0) {
                r.ms.push_back(f.ms[i]);
                r.cs.push_back(std::move(v));
            }
            ++i, ++j;
        }
    }
    return r;
}

class Engine {
public:
    Engine(MonomialOrder order, GroebnerConfig config)
        : order_(std::move(order)), config_(config), nvars_(static_cast<int>(order_.sequence.size())) {
        if (nvars_ > config_.variable_cap)
            throw CapExceeded("ambient has " + std::to_string(nvars_) +
                              " variables, above the cap of " +
                              std::to_string(config_.variable_cap));
        if (nvars_ > kPackedMax) throw CapExceeded("ambient exceeds the packed monomial limit");
        for (std::size_t i = 0; i < order_.sequence.size(); ++i)
            var_index_[key_of(order_.sequence[i])] = static_cast<int>(i);
        if (config_.timeout)
            deadline_ = std::chrono::steady_clock::now() + *config_.timeout;
    }

    const MonomialOrder& order() const { return order_; }
    int nvars() const { return nvars_; }
    std::uint64_t steps() const { return steps_; }

    Poly to_engine(const Polynomial& p) const {
        Poly r;
        if (p.is_zero()) return r;
        std::vector<std::pair<Mono, Rational>> ts;
        ts.reserve(p.term_count());
        for (const auto& [m, c] : p.terms()) {
            Mono em;
            int deg = 0;
            for (const auto& [v, e] : m.factors()) {
                auto it = var_index_.find(key_of(v));
                if (it == var_index_.end())
                    throw DomainError("variable " + name(v) + " not in the monomial order");
                if (e > 255) throw CapExceeded("monomial exponent overflow");
                em.e[it->second] = static_cast<std::uint8_t>(e);
                deg += e;
            }
            em.deg = deg;
            ts.emplace_back(em, c);
        }
        std::sort(ts.begin(), ts.end(), [&](const auto& x, const auto& y) {
            return mono_cmp(x.first, y.first, order_.kind, nvars_) > 0;
        });
        for (auto& [m, c] : ts) {
            r.ms.push_back(m);
            r.cs.push_back(std::move(c));
        }
        return r;
    }

    Polynomial to_friendly(const Poly& p, const VarSet& ambient) const {
        Polynomial out = Polynomial::zero(ambient);
        for (std::size_t t = 0; t < p.size(); ++t) {
            std::vector<Monomial::Factor> fs;
            for (int i = 0; i < nvars_; ++i)
                if (p.ms[t].e[i])
                    fs.push_back({order_.sequence[static_cast<std::size_t>(i)],
                                  static_cast<int>(p.ms[t].e[i])});
            out = out + Polynomial::term(p.cs[t], Monomial(std::move(fs)), ambient);
        }
        return out;
    }

    /// Full normal form of f against `reducers` (which must be monic): the
    /// unique remainder none of whose terms is divisible by a reducer lead.
    Poly normal_form(Poly f, const std::vector<Poly>& reducers) {
        Poly rem;
        while (!f.empty()) {
            int g = find_reducer(f.ms[0], reducers);
            if (g < 0) {
                rem.ms.push_back(f.ms[0]);
                rem.cs.push_back(std::move(f.cs[0]));
                f.ms.erase(f.ms.begin());
                f.cs.erase(f.cs.begin());
                continue;
            }
            tick();
            const Poly& red = reducers[static_cast<std::size_t>(g)];
            Mono u = mono_quot(f.ms[0], red.ms[0], nvars_);
            f = sub_mul(f, f.cs[0], red, u, order_.kind, nvars_);
        }
        return rem;
    }

    /// Buchberger with normal (minimal lcm-degree) selection and the product
    /// and chain criteria. Throws BudgetExceeded when the step or time budget
    /// runs out.
    std::vector<Poly> buchberger(std::vector<Poly> input, GroebnerStats& stats) {
        basis_.clear();
        queue_.clear();
        pending_.clear();
        std::sort(input.begin(), input.end(), [&](const Poly& x, const Poly& y) {
            if (x.empty() || y.empty()) return y.empty() && !x.empty();
            return mono_cmp(x.ms[0], y.ms[0], order_.kind, nvars_) < 0;
        });
        for (auto& p : input) {
            if (p.empty()) continue;
            add_element(std::move(p));
        }
        while (!queue_.empty()) {
            auto it = queue_.begin();
            Pair pr = *it;
            queue_.erase(it);
            pending_.erase(pack_ij(pr.i, pr.j));
            ++stats.pairs_processed;
            const Mono& li = basis_[static_cast<std::size_t>(pr.i)].ms[0];
            const Mono& lj = basis_[static_cast<std::size_t>(pr.j)].ms[0];
            // Product criterion: coprime leading monomials.
            if (pr.lcm.deg == li.deg + lj.deg &&
                mono_equal(pr.lcm, mono_mul(li, lj, nvars_), nvars_))
                continue;
            if (chain_criterion(pr)) continue;
            Poly s = spoly(basis_[static_cast<std::size_t>(pr.i)],
                           basis_[static_cast<std::size_t>(pr.j)]);
            Poly r = normal_form(std::move(s), basis_);
            if (!r.empty()) add_element(std::move(r));
        }
        stats.reduction_steps = steps_;
        return minimal_reduced();
    }

private:
    struct Pair {
        std::int32_t deg;
        Mono lcm;
        std::int32_t i, j;  // i < j
    };

    struct PairLess {
        const Engine* eng;
        bool operator()(const Pair& a, const Pair& b) const {
            if (a.deg != b.deg) return a.deg < b.deg;
            int c = mono_cmp(a.lcm, b.lcm, eng->order_.kind, eng->nvars_);
            if (c != 0) return c < 0;
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        }
    };

    static std::uint64_t key_of(JetVariable v) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(v.level)) << 32) |
               static_cast<std::uint32_t>(v.base);
    }

    static std::uint64_t pack_ij(std::int32_t i, std::int32_t j) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(i)) << 32) |
               static_cast<std::uint32_t>(j);
    }

    void tick() {
        if (++steps_ > config_.max_steps)
            throw BudgetExceeded(steps_, basis_.size(), queue_.size());
        if (deadline_ && (steps_ & 0xFFF) == 0 &&
            std::chrono::steady_clock::now() > *deadline_)
            throw BudgetExceeded(steps_, basis_.size(), queue_.size());
    }

    int find_reducer(const Mono& t, const std::vector<Poly>& reducers) const {
        std::uint64_t tm = support_mask(t, nvars_);
        int best = -1;
        std::size_t best_size = 0;
        for (std::size_t k = 0; k < reducers.size(); ++k) {
            const Poly& g = reducers[k];
            if (g.empty()) continue;
            const Mono& lg = g.ms[0];
            if (lg.deg > t.deg) continue;
            if ((support_mask(lg, nvars_) & ~tm) != 0) continue;
            if (!mono_divides(lg, t, nvars_)) continue;
            if (best < 0 || g.size() < best_size) {
                best = static_cast<int>(k);
                best_size = g.size();
            }
        }
        return best;
    }

    Poly spoly(const Poly& f, const Poly& g) {
        // Both inputs are monic: S = uf*f - ug*g cancels the lcm exactly.
        Mono l = mono_lcm(f.ms[0], g.ms[0], nvars_);
        Mono uf = mono_quot(l, f.ms[0], nvars_);
        Mono ug = mono_quot(l, g.ms[0], nvars_);
        Poly fs;
        fs.ms.reserve(f.size());
        fs.cs = f.cs;
        for (std::size_t t = 0; t < f.size(); ++t)
            fs.ms.push_back(mono_mul(f.ms[t], uf, nvars_));
        return sub_mul(fs, Rational(1), g, ug, order_.kind, nvars_);
    }

    bool chain_criterion(const Pair& pr) const {
        for (std::int32_t k = 0; k < static_cast<std::int32_t>(basis_.size()); ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!mono_divides(basis_[static_cast<std::size_t>(k)].ms[0], pr.lcm, nvars_))
                continue;
            std::int32_t a1 = pr.i < k ? pr.i : k, b1 = pr.i < k ? k : pr.i;
            std::int32_t a2 = pr.j < k ? pr.j : k, b2 = pr.j < k ? k : pr.j;
            if (!pending_.count(pack_ij(a1, b1)) && !pending_.count(pack_ij(a2, b2)))
                return true;
        }
        return false;
    }

    void add_element(Poly p) {
        make_monic(p);
        std::int32_t t = static_cast<std::int32_t>(basis_.size());
        basis_.push_back(std::move(p));
        for (std::int32_t i = 0; i < t; ++i) {
            Pair pr;
            pr.i = i;
            pr.j = t;
            pr.lcm = mono_lcm(basis_[static_cast<std::size_t>(i)].ms[0],
                              basis_[static_cast<std::size_t>(t)].ms[0], nvars_);
            pr.deg = pr.lcm.deg;
            queue_.insert(pr);
            pending_.insert(pack_ij(i, t));
        }
    }

    /// Minimal basis (no leading monomial divides another), then full tail
    /// reduction of every element against the others.
    std::vector<Poly> minimal_reduced() {
        std::vector<char> keep(basis_.size(), 1);
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            if (!keep[i]) continue;
            for (std::size_t j = 0; j < basis_.size(); ++j) {
                if (i == j || !keep[j]) continue;
                if (mono_divides(basis_[j].ms[0], basis_[i].ms[0], nvars_) &&
                    !(mono_equal(basis_[i].ms[0], basis_[j].ms[0], nvars_) && j > i)) {
                    keep[i] = 0;
                    break;
                }
            }
        }
        std::vector<Poly> min;
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (keep[i]) min.push_back(std::move(basis_[i]));
        std::sort(min.begin(), min.end(), [&](const Poly& x, const Poly& y) {
            return mono_cmp(x.ms[0], y.ms[0], order_.kind, nvars_) < 0;
        });
        std::vector<Poly> out(min.size());
        for (std::size_t i = 0; i < min.size(); ++i) {
            std::vector<Poly> others;
            others.reserve(min.size() - 1);
            for (std::size_t j = 0; j < min.size(); ++j)
                if (j != i) others.push_back(min[j]);
            out[i] = normal_form(min[i], others);
        }
        return out;
    }

    MonomialOrder order_;
    GroebnerConfig config_;
    int nvars_;
    std::map<std::uint64_t, int> var_index_;
    std::uint64_t steps_ = 0;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::vector<Poly> basis_;
    std::set<Pair, PairLess> queue_{PairLess{this}};
    std::unordered_set<std::uint64_t> pending_;
};

}  // namespace gb

inline GroebnerBasis groebner_basis(const Ideal& ideal, const MonomialOrder& order,
                                    const GroebnerConfig& config = {}) {
    gb::Engine eng(order, config);
    std::vector<gb::Poly> input;
    input.reserve(ideal.generators.size());
    for (const auto& g : ideal.generators) input.push_back(eng.to_engine(g));
    GroebnerStats stats;
    std::vector<gb::Poly> out = eng.buchberger(std::move(input), stats);
    GroebnerBasis result{{}, eng.order(), true, stats};
    result.basis.reserve(out.size());
    for (const auto& p : out) result.basis.push_back(eng.to_friendly(p, ideal.ambient));
    return result;
}

inline GroebnerBasis groebner_basis(const Ideal& ideal, const GroebnerConfig& config = {}) {
    return groebner_basis(ideal, MonomialOrder::grevlex_for(ideal.ambient), config);
}

/// Unique remainder of g modulo B (no term divisible by a basis leading
/// monomial), monic-scaled to the rational normal form.
inline Polynomial normal_form(const Polynomial& g, const GroebnerBasis& basis,
                              const GroebnerConfig& config = {}) {
    gb::Engine eng(basis.order, config);
    std::vector<gb::Poly> reducers;
    reducers.reserve(basis.basis.size());
    for (const auto& b : basis.basis) reducers.push_back(eng.to_engine(b));
    gb::Poly r = eng.normal_form(eng.to_engine(g), reducers);
    return eng.to_friendly(r, g.ambient());
}

inline bool ideal_membership(const Polynomial& g, const GroebnerBasis& basis,
                             const GroebnerConfig& config = {}) {
    return normal_form(g, basis, config).is_zero();
}

namespace gb {

/// Branch-and-bound minimum hitting set over squarefree supports.
inline int min_hitting_set(std::vector<std::uint64_t> supports) {
    std::sort(supports.begin(), supports.end(), [](std::uint64_t a, std::uint64_t b) {
        int ca = std::popcount(a), cb = std::popcount(b);
        return ca != cb ? ca < cb : a < b;
    });
    // Keep only minimal supports: any set containing another is hit for free.
    std::vector<std::uint64_t> min_sets;
    for (auto s : supports) {
        bool redundant = false;
        for (auto t : min_sets)
            if ((t & ~s) == 0) {
                redundant = true;
                break;
            }
        if (!redundant) min_sets.push_back(s);
    }
    int best = static_cast<int>(min_sets.size());
    auto lower_bound = [&](const std::vector<std::uint64_t>& sets) {
        // Greedy count of pairwise-disjoint sets.
        std::uint64_t used = 0;
        int lb = 0;
        for (auto s : sets)
            if ((s & used) == 0) {
                ++lb;
                used |= s;
            }
        return lb;
    };
    struct Frame {
        std::vector<std::uint64_t> sets;
        int chosen;
    };
    std::vector<Frame> stack{{std::move(min_sets), 0}};
    while (!stack.empty()) {
        Frame fr = std::move(stack.back());
        stack.pop_back();
        if (fr.sets.empty()) {
            best = std::min(best, fr.chosen);
            continue;
        }
        if (fr.chosen + lower_bound(fr.sets) >= best) continue;
        std::uint64_t pick = fr.sets.front();
        for (std::uint64_t bit = pick; bit;) {
            std::uint64_t v = bit & (~bit + 1);
            bit ^= v;
            std::vector<std::uint64_t> rest;
            rest.reserve(fr.sets.size());
            for (auto s : fr.sets)
                if ((s & v) == 0) rest.push_back(s);
            stack.push_back({std::move(rest), fr.chosen + 1});
        }
    }
    return best;
}

}  // namespace gb

/// Krull dimension of the quotient by the ideal of B: the maximum size of a
/// variable subset S such that no leading monomial uses only variables of S.
/// Returns -1 when the ideal is the whole ring.
inline int krull_dimension(const GroebnerBasis& basis) {
    if (basis.contains_unit()) return -1;
    int n = static_cast<int>(basis.order.sequence.size());
    std::map<JetVariable, int> index;
    for (int i = 0; i < n; ++i)
        index[basis.order.sequence[static_cast<std::size_t>(i)]] = i;
    std::vector<std::uint64_t> supports;
    supports.reserve(basis.basis.size());
    for (const auto& g : basis.basis) {
        const Monomial* lead = nullptr;
        for (const auto& [m, c] : g.terms())
            if (!lead || basis.order.less(*lead, m)) lead = &m;
        if (!lead) continue;
        std::uint64_t mask = 0;
        for (const auto& [v, e] : lead->factors())
            mask |= std::uint64_t{1} << index.at(v);
        supports.push_back(mask);
    }
    return n - gb::min_hitting_set(std::move(supports));
}

/// Dimension of the variety of `ideal` (grevlex basis under the hood).
inline int krull_dimension(const Ideal& ideal, const GroebnerConfig& config = {}) {
    return krull_dimension(groebner_basis(ideal, config));
}

}  // namespace jetlct
