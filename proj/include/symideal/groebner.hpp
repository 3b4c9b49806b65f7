// Buchberger engine over the rationals: reduced Groebner bases, normal forms,
// ideal membership, elimination/contraction and the conjecture harnesses.
#pragma once

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symideal/ideals.hpp"
#include "symideal/polynomial.hpp"

namespace symideal {

class ComputationTimeout : public std::runtime_error {
public:
    explicit ComputationTimeout(const std::string& what) : std::runtime_error(what) {}
};

struct GroebnerBasis {
    std::vector<Polynomial> elements;  // monic, sorted by ascending leading monomial
    MonomialOrder order = MonomialOrder::grevlex();
    bool reduced = false;
};

struct DivisionResult {
    Polynomial remainder;
    std::vector<Polynomial> quotients;  // aligned with the divisor list
};

/// Multivariate division: p = sum quotients[i]*basis[i] + remainder, with no
/// remainder term divisible by any basis leading monomial. Divisors are tried
/// in list order, so the result is deterministic for a fixed list.
inline DivisionResult divide(const Polynomial& p, const std::vector<Polynomial>& basis,
                             MonomialOrder order) {
    Polynomial work = p.order() == order ? p : p.with_order(order);
    const VariableSet& vars = work.variables();
    DivisionResult out;
    out.remainder = Polynomial::zero(vars, order);
    out.quotients.assign(basis.size(), Polynomial::zero(vars, order));

    std::vector<Polynomial> divisors;
    divisors.reserve(basis.size());
    for (const auto& g : basis) divisors.push_back(g.order() == order ? g : g.with_order(order));

    while (!work.is_zero()) {
        const auto& [lm, lc] = work.terms().front();
        bool divided = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            const Polynomial& g = divisors[i];
            if (g.is_zero() || !g.leading_monomial().divides(lm)) continue;
            Monomial q = lm.divided_by(g.leading_monomial());
            Rational c = lc / g.leading_coefficient();
            out.quotients[i] = out.quotients[i] + Polynomial::from_term(vars, q, c, order);
            work = work - g.times_term(q, c);
            divided = true;
            break;
        }
        if (!divided) {
            Polynomial lead = Polynomial::from_term(vars, lm, lc, order);
            out.remainder = out.remainder + lead;
            work = work - lead;
        }
    }
    return out;
}

inline Polynomial normal_form(const Polynomial& p, const GroebnerBasis& g) {
    if (!g.elements.empty() && p.variables() != g.elements.front().variables())
        throw std::invalid_argument("normal_form: polynomial and basis live in different rings");
    return divide(p, g.elements, g.order).remainder;
}

struct BuchbergerOptions {
    /// For homogeneous inputs only: ignore S-pairs whose lcm degree exceeds
    /// this bound, yielding a degree-truncated basis that decides membership
    /// exactly for homogeneous polynomials up to the bound.
    std::optional<int> max_degree;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// The unique reduced Groebner basis of the given generators.
/// Normal selection strategy (minimal lcm degree first) with Buchberger's
/// coprimality and chain criteria for pair pruning.
inline GroebnerBasis buchberger(const std::vector<Polynomial>& generators, MonomialOrder order,
                                const BuchbergerOptions& options = {}) {
    GroebnerBasis result;
    result.order = order;

    std::vector<Polynomial> basis;
    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        if (options.max_degree && !g.is_homogeneous())
            throw std::invalid_argument("buchberger: degree truncation requires homogeneous input");
        Polynomial h = g.order() == order ? g : g.with_order(order);
        basis.push_back(h.scale(h.leading_coefficient().inverse()));
    }

    struct Pair {
        int deg;
        int i, j;
        Monomial lcm;
        bool operator<(const Pair& o) const {
            return std::tie(deg, i, j) < std::tie(o.deg, o.i, o.j);
        }
    };
    std::set<Pair> queue;
    std::set<std::pair<int, int>> pending;

    auto push_pairs_for = [&](int t) {
        for (int i = 0; i < t; ++i) {
            Monomial l = basis[i].leading_monomial().lcm(basis[t].leading_monomial());
            queue.insert(Pair{l.degree(), i, t, l});
            pending.insert({i, t});
        }
    };
    for (int t = 0; t < static_cast<int>(basis.size()); ++t) push_pairs_for(t);

    while (!queue.empty()) {
        if (options.deadline && std::chrono::steady_clock::now() > *options.deadline)
            throw ComputationTimeout("buchberger: deadline exceeded");

        Pair pr = *queue.begin();
        queue.erase(queue.begin());
        pending.erase({pr.i, pr.j});

        if (options.max_degree && pr.deg > *options.max_degree) continue;

        const Polynomial& f = basis[pr.i];
        const Polynomial& g = basis[pr.j];
        if (f.leading_monomial().coprime_with(g.leading_monomial())) continue;

        // chain criterion: some h divides the lcm and both mixed pairs are done
        bool chained = false;
        for (int k = 0; k < static_cast<int>(basis.size()) && !chained; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!basis[k].leading_monomial().divides(pr.lcm)) continue;
            auto key = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
            if (!pending.count(key(pr.i, k)) && !pending.count(key(pr.j, k))) chained = true;
        }
        if (chained) continue;

        Monomial qf = pr.lcm.divided_by(f.leading_monomial());
        Monomial qg = pr.lcm.divided_by(g.leading_monomial());
        Polynomial spoly = f.times_term(qf, Rational(1)) - g.times_term(qg, Rational(1));
        Polynomial rem = divide(spoly, basis, order).remainder;
        if (rem.is_zero()) continue;
        basis.push_back(rem.scale(rem.leading_coefficient().inverse()));
        push_pairs_for(static_cast<int>(basis.size()) - 1);
    }

    // minimize: drop elements whose leading monomial another one divides
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& mi = basis[i].leading_monomial();
            const Monomial& mj = basis[j].leading_monomial();
            if (mj == mi) {
                redundant = j < i;  // keep one representative of equal leads
            } else if (mj.divides(mi)) {
                redundant = true;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // interreduce tails until stable
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Polynomial r = divide(minimal[i], others, order).remainder;
            r = r.scale(r.leading_coefficient().inverse());
            if (r != minimal[i]) {
                minimal[i] = r;
                changed = true;
            }
        }
    }

    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.less(a.leading_monomial(), b.leading_monomial());
    });
    result.elements = std::move(minimal);
    result.reduced = true;
    return result;
}

/// Finitely generated ideal with a thread-safe cache of reduced bases.
class Ideal {
public:
    Ideal() : cache_(std::make_shared<Cache>()) {}
    Ideal(VariableSet ring, std::vector<Polynomial> generators)
        : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
        for (auto& g : generators) {
            if (g.is_zero()) continue;
            if (g.variables() != ring_)
                throw std::invalid_argument("Ideal: generator in a different ring");
            generators_.push_back(std::move(g));
        }
    }

    const VariableSet& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return generators_; }
    bool is_zero() const { return generators_.empty(); }

    /// Cached reduced Groebner basis; safe for concurrent readers.
    std::shared_ptr<const GroebnerBasis> groebner(
        MonomialOrder order = MonomialOrder::grevlex()) const {
        std::pair<int, int> key{static_cast<int>(order.kind()), order.first_block_size()};
        {
            std::lock_guard<std::mutex> lock(cache_->mutex);
            auto it = cache_->bases.find(key);
            if (it != cache_->bases.end()) return it->second;
        }
        auto basis = std::make_shared<GroebnerBasis>(buchberger(generators_, order));
        std::lock_guard<std::mutex> lock(cache_->mutex);
        auto [it, inserted] = cache_->bases.emplace(key, std::move(basis));
        return it->second;
    }

private:
    struct Cache {
        std::mutex mutex;
        std::map<std::pair<int, int>, std::shared_ptr<const GroebnerBasis>> bases;
    };

    VariableSet ring_;
    std::vector<Polynomial> generators_;
    std::shared_ptr<Cache> cache_;
};

inline bool is_member(const Polynomial& p, const Ideal& ideal) {
    if (p.variables() != ideal.ring())
        throw std::invalid_argument("is_member: polynomial in a different ring");
    if (p.is_zero()) return true;
    return normal_form(p, *ideal.groebner()).is_zero();
}

/// Membership of a homogeneous polynomial via a degree-truncated basis;
/// exact, and much cheaper when the target degree is small. Returns nullopt
/// on deadline expiry.
inline std::optional<bool> homogeneous_member(
    const Polynomial& p, const Ideal& ideal,
    std::optional<std::chrono::milliseconds> budget = std::nullopt) {
    if (p.variables() != ideal.ring())
        throw std::invalid_argument("homogeneous_member: polynomial in a different ring");
    if (!p.is_homogeneous())
        throw std::invalid_argument("homogeneous_member: polynomial not homogeneous");
    if (p.is_zero()) return true;
    BuchbergerOptions options;
    options.max_degree = p.total_degree();
    if (budget) options.deadline = std::chrono::steady_clock::now() + *budget;
    try {
        GroebnerBasis basis = buchberger(ideal.generators(), MonomialOrder::grevlex(), options);
        return normal_form(p, basis).is_zero();
    } catch (const ComputationTimeout&) {
        return std::nullopt;
    }
}

/// Rewrite p over another variable set with the same names (a sub- or
/// super-set); variables missing from the target must not occur in p.
inline Polynomial transport(const Polynomial& p, const VariableSet& target,
                            MonomialOrder order = MonomialOrder::grevlex()) {
    std::vector<std::optional<std::size_t>> slot(p.variables().size());
    for (std::size_t i = 0; i < p.variables().size(); ++i)
        slot[i] = target.index_of(p.variables().name(i));
    std::vector<Polynomial::Term> terms;
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> e(target.size(), 0);
        for (std::size_t i = 0; i < slot.size(); ++i) {
            if (m.exponent(i) == 0) continue;
            if (!slot[i])
                throw std::invalid_argument("transport: variable '" + p.variables().name(i) +
                                            "' not in target ring");
            e[*slot[i]] = m.exponent(i);
        }
        terms.emplace_back(Monomial(std::move(e)), c);
    }
    return Polynomial::from_terms(target, std::move(terms), order);
}

/// Contraction ideal /\ k[remaining variables], computed from a reduced basis
/// under a block elimination order with the dropped variables first.
inline Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& drop) {
    for (const auto& name : drop)
        if (!ideal.ring().contains(name))
            throw std::invalid_argument("eliminate: unknown variable '" + name + "'");
    if (drop.empty()) return ideal;

    std::vector<std::string> first, rest;
    for (const auto& name : ideal.ring().names()) {
        if (std::find(drop.begin(), drop.end(), name) != drop.end())
            first.push_back(name);
        else
            rest.push_back(name);
    }
    std::vector<std::string> permuted = first;
    permuted.insert(permuted.end(), rest.begin(), rest.end());
    VariableSet work_ring(permuted);
    MonomialOrder block = MonomialOrder::block_elimination(static_cast<int>(first.size()));

    std::vector<Polynomial> work_gens;
    for (const auto& g : ideal.generators()) work_gens.push_back(transport(g, work_ring, block));
    GroebnerBasis basis = buchberger(work_gens, block);

    VariableSet target(rest);
    std::vector<Polynomial> kept;
    for (const auto& g : basis.elements) {
        bool free_of_dropped = true;
        for (const auto& [m, c] : g.terms())
            for (std::size_t i = 0; i < first.size() && free_of_dropped; ++i)
                if (m.exponent(i) != 0) free_of_dropped = false;
        if (free_of_dropped) kept.push_back(transport(g, target));
    }
    return Ideal(target, std::move(kept));
}

inline bool ideal_equals(const Ideal& a, const Ideal& b) {
    if (a.ring() != b.ring()) throw std::invalid_argument("ideal_equals: different rings");
    for (const auto& g : a.generators())
        if (!is_member(g, b)) return false;
    for (const auto& g : b.generators())
        if (!is_member(g, a)) return false;
    return true;
}

struct Conjecture35Report {
    int N = 0;
    bool superset_holds = false;  // contraction contains the conjectured monomial ideal
    bool equality_holds = false;  // the two ideals coincide
    std::optional<Polynomial> witness;  // contraction generator outside the monomial ideal
    std::vector<Polynomial> contraction_generators;  // in k[x,y]
    std::vector<Polynomial> conjectured_generators;  // in k[x,y]
};

/// Compares the computed contraction J(N) /\ k[x,y] with the conjectured
/// monomial ideal. The superset direction is a theorem; the equality
/// direction is reported, with a counterexample generator when it fails.
inline Conjecture35Report conjecture35_report(int N) {
    if (N < 2) throw std::invalid_argument("conjecture35_report: N must be >= 2");
    Conjecture35Report report;
    report.N = N;

    Ideal j(j_ring(), j_ideal(N));
    report.conjectured_generators = conjectured_contraction_generators(N);

    report.superset_holds = true;
    for (const auto& g : report.conjectured_generators)
        if (!is_member(transport(g, j_ring()), j)) report.superset_holds = false;

    Ideal contraction = eliminate(j, {"d"});
    report.contraction_generators = contraction.generators();

    Ideal conjectured(xy_ring(), report.conjectured_generators);
    report.equality_holds = true;
    for (const auto& g : contraction.generators()) {
        if (!is_member(g, conjectured)) {
            report.equality_holds = false;
            if (!report.witness) report.witness = g;
        }
    }
    if (report.equality_holds && !report.superset_holds) report.equality_holds = false;
    return report;
}

/// I_r^(d) as an Ideal in k[t0..tr].
inline Ideal build_Ird(int r, int d) { return Ideal(ird_ring(r), ird_generators(r, d)); }

inline Polynomial ird_target(int r, int n) {
    VariableSet vars = ird_ring(r);
    Polynomial t = Polynomial::constant(vars, 1);
    for (int i = 1; i <= r; ++i) t = t * Polynomial::variable(vars, "t" + std::to_string(i));
    return t.pow(2 * n - 1);
}

/// (t1...tr)^(2n-1) in I_r^(nr)?
inline bool conjecture41_check(int r, int n) {
    if (r < 1 || n < 1) throw std::invalid_argument("conjecture41_check: r, n must be >= 1");
    return *homogeneous_member(ird_target(r, n), build_Ird(r, n * r));
}

/// Same check under a wall-clock budget; nullopt means the budget expired.
inline std::optional<bool> conjecture41_check_budgeted(int r, int n,
                                                       std::chrono::milliseconds budget) {
    if (r < 1 || n < 1) throw std::invalid_argument("conjecture41_check: r, n must be >= 1");
    return homogeneous_member(ird_target(r, n), build_Ird(r, n * r), budget);
}

}  // namespace symideal
