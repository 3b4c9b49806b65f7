// Minimal graded free resolutions and Betti tables.
//
// The resolution of R/I is built by iterated syzygy computation: the reduced
// Groebner basis of I seeds level one, and each next level is the Schreyer
// syzygy basis of the previous one (the syzygies read off S-pair reductions
// are a Groebner basis under the order induced by the lower level). The
// resulting exact complex is then minimized by cancelling map entries with a
// nonzero constant term, which leaves every entry in the irrelevant maximal
// ideal. Betti numbers are the twist multiplicities of the minimized modules.
#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symideal/groebner.hpp"
#include "symideal/polynomial.hpp"

namespace symideal {

struct FreeModule {
    std::vector<int> twists;  // degree of each free generator: F = (+) R(-twist)
    int rank() const { return static_cast<int>(twists.size()); }
};

struct PolyMatrix {
    PolyMatrix() = default;
    PolyMatrix(int rows, int cols, const VariableSet& vars, MonomialOrder order)
        : rows_(rows), cols_(cols),
          entries_(static_cast<std::size_t>(rows) * cols, Polynomial::zero(vars, order)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Polynomial& at(int r, int c) { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Polynomial& at(int r, int c) const {
        return entries_[static_cast<std::size_t>(r) * cols_ + c];
    }

    void erase_row(int r) {
        std::vector<Polynomial> next;
        next.reserve(entries_.size() - cols_);
        for (int i = 0; i < rows_; ++i) {
            if (i == r) continue;
            for (int j = 0; j < cols_; ++j) next.push_back(std::move(at(i, j)));
        }
        entries_ = std::move(next);
        --rows_;
    }
    void erase_col(int c) {
        std::vector<Polynomial> next;
        next.reserve(entries_.size() - rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (j != c) next.push_back(std::move(at(i, j)));
        entries_ = std::move(next);
        --cols_;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Polynomial> entries_;
};

/// Graded complex ... -> F_2 -> F_1 -> F_0 with maps[i] : F_{i+1} -> F_i.
struct Resolution {
    VariableSet ring;
    MonomialOrder order = MonomialOrder::grevlex();
    std::vector<FreeModule> modules;
    std::vector<PolyMatrix> maps;

    int length() const { return static_cast<int>(modules.size()) - 1; }
};

struct BettiTable {
    std::map<std::pair<int, int>, long long> entries;  // (homological i, internal j) -> count

    long long at(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
    friend bool operator==(const BettiTable& a, const BettiTable& b) {
        return a.entries == b.entries;
    }
    friend bool operator!=(const BettiTable& a, const BettiTable& b) { return !(a == b); }

    /// Betti diagram: columns are the homological index, rows are j - i.
    std::string to_diagram() const {
        int max_i = 0, max_row = 0;
        for (const auto& [key, count] : entries) {
            max_i = std::max(max_i, key.first);
            max_row = std::max(max_row, key.second - key.first);
        }
        auto cell = [](const std::string& s) {
            std::string out = s;
            while (out.size() < 6) out = " " + out;
            return out;
        };
        std::string out = cell("");
        for (int i = 0; i <= max_i; ++i) out += cell(std::to_string(i));
        out += "\n";
        for (int row = 0; row <= max_row; ++row) {
            out += cell(std::to_string(row) + ":");
            for (int i = 0; i <= max_i; ++i) {
                long long v = at(i, row + i);
                out += cell(v == 0 ? "." : std::to_string(v));
            }
            out += "\n";
        }
        return out;
    }
};

namespace detail {

struct MTerm {
    int comp;
    Monomial mono;
    friend bool operator==(const MTerm& a, const MTerm& b) {
        return a.comp == b.comp && a.mono == b.mono;
    }
};

struct MElem {
    std::vector<std::pair<MTerm, Rational>> terms;  // descending under the level order
    bool is_zero() const { return terms.empty(); }
    const std::pair<MTerm, Rational>& lead() const { return terms.front(); }
};

/// Order on a free module induced by the leading terms of the level below
/// (Schreyer order): compare m * sig[comp] in the ring order, break ties by
/// the component chains, smaller index winning at the shallowest level first.
struct SchreyerOrder {
    MonomialOrder ring_order = MonomialOrder::grevlex();
    std::vector<Monomial> sig;            // per component: accumulated signature monomial
    std::vector<std::vector<int>> chain;  // per component: tie-break chain, bottom-up

    static SchreyerOrder base(std::size_t nvars, MonomialOrder ring_order) {
        SchreyerOrder o;
        o.ring_order = ring_order;
        o.sig = {Monomial::one(nvars)};
        o.chain = {{}};
        return o;
    }

    int compare(const MTerm& a, const MTerm& b) const {
        int c = ring_order.compare(a.mono.times(sig[a.comp]), b.mono.times(sig[b.comp]));
        if (c != 0) return c;
        const auto& ca = chain[a.comp];
        const auto& cb = chain[b.comp];
        for (std::size_t p = 0; p < ca.size(); ++p)
            if (ca[p] != cb[p]) return ca[p] < cb[p] ? 1 : -1;
        return 0;
    }
    bool greater(const MTerm& a, const MTerm& b) const { return compare(a, b) > 0; }
};

inline MElem melem_from_terms(std::vector<std::pair<MTerm, Rational>> terms,
                              const SchreyerOrder& order) {
    std::map<std::pair<int, std::vector<int>>, Rational> acc;
    for (auto& [t, c] : terms) acc[{t.comp, t.mono.exponents()}] += c;
    MElem out;
    for (auto& [key, c] : acc)
        if (!c.is_zero()) out.terms.push_back({MTerm{key.first, Monomial(key.second)}, c});
    std::sort(out.terms.begin(), out.terms.end(),
              [&](const auto& a, const auto& b) { return order.greater(a.first, b.first); });
    return out;
}

inline MElem melem_add(const MElem& a, const MElem& b, const SchreyerOrder& order) {
    MElem out;
    out.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        int c = order.compare(a.terms[i].first, b.terms[j].first);
        if (c > 0) {
            out.terms.push_back(a.terms[i++]);
        } else if (c < 0) {
            out.terms.push_back(b.terms[j++]);
        } else {
            Rational s = a.terms[i].second + b.terms[j].second;
            if (!s.is_zero()) out.terms.push_back({a.terms[i].first, s});
            ++i, ++j;
        }
    }
    for (; i < a.terms.size(); ++i) out.terms.push_back(a.terms[i]);
    for (; j < b.terms.size(); ++j) out.terms.push_back(b.terms[j]);
    return out;
}

inline MElem melem_times_term(const MElem& a, const Monomial& m, const Rational& c) {
    MElem out;
    if (c.is_zero()) return out;
    out.terms.reserve(a.terms.size());
    for (const auto& [t, coeff] : a.terms)
        out.terms.push_back({MTerm{t.comp, t.mono.times(m)}, coeff * c});
    return out;
}

struct ModuleDivision {
    MElem remainder;
    std::vector<Polynomial> quotients;
};

inline ModuleDivision divide_module(const MElem& f, const std::vector<MElem>& basis,
                                    const SchreyerOrder& order, const VariableSet& vars) {
    ModuleDivision out;
    out.quotients.assign(basis.size(), Polynomial::zero(vars, order.ring_order));
    MElem work = f;
    while (!work.is_zero()) {
        const auto& [lt, lc] = work.lead();
        bool divided = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (basis[i].is_zero()) continue;
            const auto& [gt, gc] = basis[i].lead();
            if (gt.comp != lt.comp || !gt.mono.divides(lt.mono)) continue;
            Monomial q = lt.mono.divided_by(gt.mono);
            Rational c = lc / gc;
            out.quotients[i] =
                out.quotients[i] + Polynomial::from_term(vars, q, c, order.ring_order);
            work = melem_add(work, melem_times_term(basis[i], q, -c), order);
            divided = true;
            break;
        }
        if (!divided) {
            out.remainder.terms.push_back(work.terms.front());
            work.terms.erase(work.terms.begin());
        }
    }
    return out;
}

struct ModuleLevel {
    std::vector<MElem> basis;         // Groebner basis of the submodule
    SchreyerOrder order;              // order on the ambient free module
    std::vector<int> ambient_twists;  // grading of the ambient free module
};

inline int element_degree(const MElem& e, const std::vector<int>& twists) {
    if (e.is_zero()) throw std::logic_error("element_degree: zero module element");
    int d = e.terms.front().first.mono.degree() + twists[e.terms.front().first.comp];
    for (const auto& [t, c] : e.terms)
        if (t.mono.degree() + twists[t.comp] != d)
            throw std::invalid_argument("resolution: inhomogeneous module element");
    return d;
}

/// Sort a basis so the Schreyer iteration sheds one variable of the leading
/// terms per level: components ascending, leading monomials lex-descending.
inline void sort_for_syzygies(std::vector<MElem>& basis) {
    MonomialOrder lex = MonomialOrder::lex();
    std::stable_sort(basis.begin(), basis.end(), [&](const MElem& a, const MElem& b) {
        if (a.lead().first.comp != b.lead().first.comp)
            return a.lead().first.comp < b.lead().first.comp;
        return lex.greater(a.lead().first.mono, b.lead().first.mono);
    });
}

/// One Schreyer step: the syzygies of the given module Groebner basis, again
/// as a Groebner basis (reduced) under the induced order.
inline ModuleLevel syzygy_step(const ModuleLevel& level, const VariableSet& vars) {
    const auto& g = level.basis;
    SchreyerOrder next;
    next.ring_order = level.order.ring_order;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& lt = g[i].lead().first;
        next.sig.push_back(lt.mono.times(level.order.sig[lt.comp]));
        auto c = level.order.chain[lt.comp];
        c.push_back(static_cast<int>(i));
        next.chain.push_back(std::move(c));
    }

    std::vector<MElem> syzygies;
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            const auto& [ti, ci] = g[i].lead();
            const auto& [tj, cj] = g[j].lead();
            if (ti.comp != tj.comp) continue;
            Monomial l = ti.mono.lcm(tj.mono);
            Monomial ui = l.divided_by(ti.mono);
            Monomial uj = l.divided_by(tj.mono);
            MElem spair = melem_add(melem_times_term(g[i], ui, ci.inverse()),
                                    melem_times_term(g[j], uj, -cj.inverse()), level.order);
            ModuleDivision div = divide_module(spair, g, level.order, vars);
            if (!div.remainder.is_zero())
                throw std::logic_error("syzygy_step: input basis is not a Groebner basis");
            std::vector<std::pair<MTerm, Rational>> terms;
            terms.push_back({MTerm{static_cast<int>(i), ui}, ci.inverse()});
            terms.push_back({MTerm{static_cast<int>(j), uj}, -cj.inverse()});
            for (std::size_t k = 0; k < g.size(); ++k)
                for (const auto& [m, c] : div.quotients[k].terms())
                    terms.push_back({MTerm{static_cast<int>(k), m}, -c});
            MElem s = melem_from_terms(std::move(terms), next);
            if (!s.is_zero()) syzygies.push_back(std::move(s));
        }
    }

    // minimize the Groebner basis: drop elements whose lead another divides
    std::vector<MElem> minimal;
    for (std::size_t i = 0; i < syzygies.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < syzygies.size() && !redundant; ++j) {
            if (i == j) continue;
            const auto& mi = syzygies[i].lead().first;
            const auto& mj = syzygies[j].lead().first;
            if (mj.comp != mi.comp) continue;
            if (mj.mono == mi.mono)
                redundant = j < i;
            else if (mj.mono.divides(mi.mono))
                redundant = true;
        }
        if (!redundant) minimal.push_back(syzygies[i]);
    }
    // interreduce tails for a canonical basis
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<MElem> others;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            MElem r = divide_module(minimal[i], others, next, vars).remainder;
            Rational lc = r.lead().second;
            if (!lc.is_one())
                r = melem_times_term(r, Monomial::one(vars.size()), lc.inverse());
            if (!(r.terms == minimal[i].terms)) {
                minimal[i] = std::move(r);
                changed = true;
            }
        }
    }
    sort_for_syzygies(minimal);

    ModuleLevel out;
    out.basis = std::move(minimal);
    out.order = std::move(next);
    for (const auto& e : g) out.ambient_twists.push_back(element_degree(e, level.ambient_twists));
    return out;
}

inline PolyMatrix matrix_of_level(const ModuleLevel& level, const VariableSet& vars,
                                  MonomialOrder order) {
    PolyMatrix m(static_cast<int>(level.ambient_twists.size()),
                 static_cast<int>(level.basis.size()), vars, order);
    for (std::size_t c = 0; c < level.basis.size(); ++c) {
        std::map<int, std::vector<Polynomial::Term>> per_row;
        for (const auto& [t, coeff] : level.basis[c].terms)
            per_row[t.comp].emplace_back(t.mono, coeff);
        for (auto& [row, terms] : per_row)
            m.at(row, static_cast<int>(c)) = Polynomial::from_terms(vars, std::move(terms), order);
    }
    return m;
}

}  // namespace detail

/// Syzygies of a (ring-level) Groebner basis: each generator of the first
/// syzygy module is returned as a coefficient vector aligned with the basis.
/// The vectors are a Groebner basis under the Schreyer order induced by g.
inline std::vector<std::vector<Polynomial>> syzygies(const GroebnerBasis& g) {
    if (g.elements.empty()) return {};
    const VariableSet& vars = g.elements.front().variables();
    detail::ModuleLevel level;
    level.order = detail::SchreyerOrder::base(vars.size(), g.order);
    level.ambient_twists = {0};
    for (const auto& p : g.elements) {
        std::vector<std::pair<detail::MTerm, Rational>> terms;
        for (const auto& [m, c] : p.terms()) terms.push_back({detail::MTerm{0, m}, c});
        level.basis.push_back(detail::melem_from_terms(std::move(terms), level.order));
    }
    detail::ModuleLevel next = detail::syzygy_step(level, vars);
    std::vector<std::vector<Polynomial>> out;
    for (const auto& s : next.basis) {
        std::vector<Polynomial> row(g.elements.size(), Polynomial::zero(vars, g.order));
        for (const auto& [t, c] : s.terms)
            row[t.comp] = row[t.comp] + Polynomial::from_term(vars, t.mono, c, g.order);
        out.push_back(std::move(row));
    }
    return out;
}

/// The (generally non-minimal) Schreyer resolution of R/ideal.
inline Resolution schreyer_resolution(const Ideal& ideal,
                                      MonomialOrder order = MonomialOrder::grevlex()) {
    for (const auto& g : ideal.generators())
        if (!g.is_homogeneous())
            throw std::invalid_argument("resolution: ideal must be homogeneous");
    const VariableSet& vars = ideal.ring();

    Resolution res;
    res.ring = vars;
    res.order = order;
    res.modules.push_back(FreeModule{{0}});
    if (ideal.is_zero()) return res;

    auto gb = ideal.groebner(order);
    detail::ModuleLevel level;
    level.order = detail::SchreyerOrder::base(vars.size(), order);
    level.ambient_twists = {0};
    for (const auto& p : gb->elements) {
        std::vector<std::pair<detail::MTerm, Rational>> terms;
        for (const auto& [m, c] : p.terms()) terms.push_back({detail::MTerm{0, m}, c});
        level.basis.push_back(detail::melem_from_terms(std::move(terms), level.order));
    }
    detail::sort_for_syzygies(level.basis);

    const int max_levels = static_cast<int>(vars.size()) + 4;
    for (int l = 0; l <= max_levels && !level.basis.empty(); ++l) {
        if (l == max_levels)
            throw std::logic_error("schreyer_resolution: level cap exceeded");
        res.maps.push_back(detail::matrix_of_level(level, vars, order));
        FreeModule next_module;
        for (const auto& e : level.basis)
            next_module.twists.push_back(detail::element_degree(e, level.ambient_twists));
        res.modules.push_back(std::move(next_module));
        level = detail::syzygy_step(level, vars);
    }
    return res;
}

/// Cancel map entries that are nonzero constants until every entry lies in
/// the irrelevant maximal ideal. Exactness is preserved (the cancelled pair
/// splits off a trivial two-term complex).
inline void minimize_resolution(Resolution& res) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t l = 0; l < res.maps.size() && !changed; ++l) {
            PolyMatrix& phi = res.maps[l];
            for (int r = 0; r < phi.rows() && !changed; ++r) {
                for (int c = 0; c < phi.cols() && !changed; ++c) {
                    Rational u = phi.at(r, c).constant_coefficient();
                    if (u.is_zero()) continue;
                    // Schur complement on the (r, c) unit entry
                    for (int r2 = 0; r2 < phi.rows(); ++r2) {
                        if (r2 == r) continue;
                        for (int c2 = 0; c2 < phi.cols(); ++c2) {
                            if (c2 == c) continue;
                            phi.at(r2, c2) =
                                phi.at(r2, c2) -
                                phi.at(r2, c) * phi.at(r, c2).scale(u.inverse());
                        }
                    }
                    phi.erase_row(r);
                    phi.erase_col(c);
                    if (l + 1 < res.maps.size()) res.maps[l + 1].erase_row(c);
                    if (l > 0) res.maps[l - 1].erase_col(r);
                    res.modules[l].twists.erase(res.modules[l].twists.begin() + r);
                    res.modules[l + 1].twists.erase(res.modules[l + 1].twists.begin() + c);
                    changed = true;
                }
            }
        }
    }
    while (!res.modules.empty() && res.modules.back().rank() == 0) {
        res.modules.pop_back();
        if (!res.maps.empty()) res.maps.pop_back();
    }
}

inline Resolution minimal_resolution(const Ideal& ideal,
                                     MonomialOrder order = MonomialOrder::grevlex()) {
    Resolution res = schreyer_resolution(ideal, order);
    minimize_resolution(res);
    return res;
}

inline bool is_complex(const Resolution& res) {
    for (std::size_t l = 0; l + 1 < res.maps.size(); ++l) {
        const PolyMatrix& a = res.maps[l];
        const PolyMatrix& b = res.maps[l + 1];
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) {
                Polynomial acc = Polynomial::zero(res.ring, res.order);
                for (int k = 0; k < a.cols(); ++k) acc = acc + a.at(i, k) * b.at(k, j);
                if (!acc.is_zero()) return false;
            }
    }
    return true;
}

inline bool is_minimal(const Resolution& res) {
    for (const auto& m : res.maps)
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                if (!m.at(i, j).constant_coefficient().is_zero()) return false;
    return true;
}

/// Every nonzero entry homogeneous of degree twist(col) - twist(row).
inline bool is_graded_consistent(const Resolution& res) {
    for (std::size_t l = 0; l < res.maps.size(); ++l) {
        const PolyMatrix& m = res.maps[l];
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) {
                const Polynomial& e = m.at(i, j);
                if (e.is_zero()) continue;
                if (!e.is_homogeneous()) return false;
                if (e.total_degree() !=
                    res.modules[l + 1].twists[j] - res.modules[l].twists[i])
                    return false;
            }
    }
    return true;
}

inline BettiTable betti_table(const Resolution& res) {
    BettiTable table;
    for (std::size_t l = 0; l < res.modules.size(); ++l)
        for (int j : res.modules[l].twists) ++table.entries[{static_cast<int>(l), j}];
    return table;
}

inline BettiTable betti_table(const Ideal& ideal,
                              MonomialOrder order = MonomialOrder::grevlex()) {
    return betti_table(minimal_resolution(ideal, order));
}

/// The Betti tables predicted for I_r^(d), r in {1,2,3}; zero-valued formula
/// entries are omitted.
inline BettiTable conjectured_betti(int r, int d) {
    if (d < 1) throw std::invalid_argument("conjectured_betti: d must be >= 1");
    BettiTable t;
    auto put = [&](int i, int j, long long v) {
        if (v != 0) t.entries[{i, j}] += v;
    };
    switch (r) {
        case 1:
            put(0, 0, 1);
            put(1, d, 2);
            put(2, 2 * d, 1);
            break;
        case 2:
            put(0, 0, 1);
            put(1, d, 4);
            put(2, 2 * d - 1, d);
            put(2, 2 * d, 3);
            put(3, 2 * d + 1, d);
            break;
        case 3:
            put(0, 0, 1);
            put(1, d, 8);
            put(2, 2 * d - 2, static_cast<long long>(d - 1) * d / 2);
            put(2, 2 * d - 1, 4LL * d);
            put(2, 2 * d, 6);
            put(3, 2 * d, static_cast<long long>(d - 1) * (d + 1));
            put(3, 2 * d + 1, 4LL * d);
            put(4, 2 * d + 2, static_cast<long long>(d) * (d - 1) / 2);
            break;
        default:
            throw std::invalid_argument("conjectured_betti: r must be 1, 2 or 3");
    }
    return t;
}

using HilbertNumerator = std::map<int, long long>;  // degree -> coefficient

/// Graded Euler characteristic of the resolution: sum_i (-1)^i sum T^twist.
inline HilbertNumerator hilbert_numerator(const Resolution& res) {
    HilbertNumerator k;
    for (std::size_t l = 0; l < res.modules.size(); ++l)
        for (int j : res.modules[l].twists) k[j] += l % 2 == 0 ? 1 : -1;
    for (auto it = k.begin(); it != k.end();)
        it = it->second == 0 ? k.erase(it) : std::next(it);
    return k;
}

namespace detail {

inline std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
            if (i == j) continue;
            if (gens[j] == gens[i])
                redundant = j < i;
            else if (gens[j].divides(gens[i]))
                redundant = true;
        }
        if (!redundant) out.push_back(gens[i]);
    }
    return out;
}

// Hilbert numerator of R/(monomial ideal) by the colon-ideal recursion.
inline HilbertNumerator hilbert_numerator_monomials(std::vector<Monomial> gens) {
    gens = minimalize_monomials(std::move(gens));
    if (gens.empty()) return {{0, 1}};
    for (const auto& g : gens)
        if (g.is_one()) return {};
    Monomial pivot = gens.back();
    gens.pop_back();
    HilbertNumerator without = hilbert_numerator_monomials(gens);
    std::vector<Monomial> colon;
    for (const auto& g : gens) {
        std::vector<int> e(g.nvars());
        for (std::size_t v = 0; v < g.nvars(); ++v)
            e[v] = std::max(0, g.exponent(v) - pivot.exponent(v));
        colon.emplace_back(std::move(e));
    }
    HilbertNumerator shifted = hilbert_numerator_monomials(std::move(colon));
    for (const auto& [deg, coeff] : shifted) without[deg + pivot.degree()] -= coeff;
    for (auto it = without.begin(); it != without.end();)
        it = it->second == 0 ? without.erase(it) : std::next(it);
    return without;
}

}  // namespace detail

/// Hilbert series numerator of R/ideal computed from the staircase of the
/// initial ideal, independent of any resolution.
inline HilbertNumerator hilbert_numerator_from_staircase(
    const Ideal& ideal, MonomialOrder order = MonomialOrder::grevlex()) {
    std::vector<Monomial> leads;
    for (const auto& g : ideal.groebner(order)->elements) leads.push_back(g.leading_monomial());
    return detail::hilbert_numerator_monomials(std::move(leads));
}

}  // namespace symideal
