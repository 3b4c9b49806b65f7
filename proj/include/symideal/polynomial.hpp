// Multivariate polynomials over Rational: variable sets, monomials, monomial
// orders and the ring operations the certificate and Groebner layers build on.
#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symideal/rational.hpp"

namespace symideal {

/// Ordered list of distinct variable names. The position in the list defines
/// variable precedence for monomial orders (earlier = larger).
class VariableSet {
public:
    VariableSet() : impl_(std::make_shared<Impl>()) {}
    explicit VariableSet(std::vector<std::string> names)
        : impl_(std::make_shared<Impl>(std::move(names))) {
        for (std::size_t i = 0; i < impl_->names.size(); ++i)
            for (std::size_t j = i + 1; j < impl_->names.size(); ++j)
                if (impl_->names[i] == impl_->names[j])
                    throw std::invalid_argument("VariableSet: duplicate variable '" +
                                                impl_->names[i] + "'");
    }
    VariableSet(std::initializer_list<std::string> names)
        : VariableSet(std::vector<std::string>(names)) {}

    std::size_t size() const { return impl_->names.size(); }
    const std::string& name(std::size_t i) const { return impl_->names.at(i); }
    const std::vector<std::string>& names() const { return impl_->names; }

    std::optional<std::size_t> index_of(const std::string& name) const {
        for (std::size_t i = 0; i < impl_->names.size(); ++i)
            if (impl_->names[i] == name) return i;
        return std::nullopt;
    }
    bool contains(const std::string& name) const { return index_of(name).has_value(); }

    friend bool operator==(const VariableSet& a, const VariableSet& b) {
        return a.impl_ == b.impl_ || a.impl_->names == b.impl_->names;
    }
    friend bool operator!=(const VariableSet& a, const VariableSet& b) { return !(a == b); }

private:
    struct Impl {
        Impl() = default;
        explicit Impl(std::vector<std::string> n) : names(std::move(n)) {}
        std::vector<std::string> names;
    };
    std::shared_ptr<const Impl> impl_;
};

constexpr int kMaxExponent = 1 << 20;  // exponents past this throw

/// Exponent vector relative to an ambient VariableSet (length must match).
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {
        for (int x : e_) check_exponent(x);
    }
    static Monomial one(std::size_t nvars) { return Monomial(std::vector<int>(nvars, 0)); }

    std::size_t nvars() const { return e_.size(); }
    int exponent(std::size_t i) const { return e_.at(i); }
    const std::vector<int>& exponents() const { return e_; }

    int degree() const {
        int d = 0;
        for (int x : e_) d += x;
        return d;
    }
    bool is_one() const {
        return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
    }

    Monomial times(const Monomial& o) const {
        check_arity(o);
        std::vector<int> r(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i) {
            r[i] = e_[i] + o.e_[i];
            check_exponent(r[i]);
        }
        return Monomial(std::move(r));
    }
    bool divides(const Monomial& o) const {
        check_arity(o);
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }
    /// this / o; requires o.divides(*this).
    Monomial divided_by(const Monomial& o) const {
        check_arity(o);
        std::vector<int> r(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i) {
            r[i] = e_[i] - o.e_[i];
            if (r[i] < 0) throw std::invalid_argument("Monomial: not divisible");
        }
        return Monomial(std::move(r));
    }
    Monomial lcm(const Monomial& o) const {
        check_arity(o);
        std::vector<int> r(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i) r[i] = std::max(e_[i], o.e_[i]);
        return Monomial(std::move(r));
    }
    bool coprime_with(const Monomial& o) const {
        check_arity(o);
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > 0 && o.e_[i] > 0) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.e_ < b.e_; }

private:
    static void check_exponent(int x) {
        if (x < 0 || x > kMaxExponent) throw std::overflow_error("Monomial: exponent out of range");
    }
    void check_arity(const Monomial& o) const {
        if (e_.size() != o.e_.size()) throw std::invalid_argument("Monomial: arity mismatch");
    }

    std::vector<int> e_;
};

/// Total order on monomials, compatible with multiplication and with 1
/// minimal: lex, graded reverse lex, or a two-block elimination order
/// (grevlex within each block, first block dominates).
class MonomialOrder {
public:
    enum class Kind { Lex, GrevLex, Block };

    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
    static MonomialOrder grevlex() { return MonomialOrder(Kind::GrevLex, 0); }
    static MonomialOrder block_elimination(int first_block_size) {
        if (first_block_size < 0)
            throw std::invalid_argument("MonomialOrder: negative block size");
        return MonomialOrder(Kind::Block, first_block_size);
    }

    Kind kind() const { return kind_; }
    int first_block_size() const { return block_; }

    /// <0, 0, >0 as a <, ==, > b.
    int compare(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
            case Kind::Lex: {
                for (std::size_t i = 0; i < a.nvars(); ++i)
                    if (a.exponent(i) != b.exponent(i))
                        return a.exponent(i) < b.exponent(i) ? -1 : 1;
                return 0;
            }
            case Kind::GrevLex:
                return grevlex_segment(a, b, 0, a.nvars());
            case Kind::Block: {
                std::size_t split = std::min<std::size_t>(block_, a.nvars());
                if (int c = grevlex_segment(a, b, 0, split)) return c;
                return grevlex_segment(a, b, split, a.nvars());
            }
        }
        return 0;
    }
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.kind_ == b.kind_ && a.block_ == b.block_;
    }
    friend bool operator!=(const MonomialOrder& a, const MonomialOrder& b) { return !(a == b); }

    std::string to_string() const {
        switch (kind_) {
            case Kind::Lex: return "lex";
            case Kind::GrevLex: return "grevlex";
            case Kind::Block: return "block:" + std::to_string(block_);
        }
        return "?";
    }
    static MonomialOrder from_string(const std::string& s) {
        if (s == "lex") return lex();
        if (s == "grevlex") return grevlex();
        if (s.rfind("block:", 0) == 0) return block_elimination(std::stoi(s.substr(6)));
        throw std::invalid_argument("MonomialOrder: unknown order '" + s + "'");
    }

private:
    MonomialOrder(Kind k, int b) : kind_(k), block_(b) {}

    static int grevlex_segment(const Monomial& a, const Monomial& b, std::size_t lo,
                               std::size_t hi) {
        int da = 0, db = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            da += a.exponent(i);
            db += b.exponent(i);
        }
        if (da != db) return da < db ? -1 : 1;
        for (std::size_t i = hi; i > lo; --i) {
            int xa = a.exponent(i - 1), xb = b.exponent(i - 1);
            if (xa != xb) return xa > xb ? -1 : 1;  // smaller last exponent wins
        }
        return 0;
    }

    Kind kind_;
    int block_;
};

/// Sparse polynomial: terms kept sorted in descending order of the attached
/// monomial order so that leading-term queries are O(1). No zero coefficients
/// are ever stored; the zero polynomial has no terms.
class Polynomial {
public:
    using Term = std::pair<Monomial, Rational>;

    Polynomial() = default;

    static Polynomial zero(const VariableSet& vars,
                           MonomialOrder order = MonomialOrder::grevlex()) {
        return Polynomial(vars, order, {});
    }
    static Polynomial constant(const VariableSet& vars, const Rational& c,
                               MonomialOrder order = MonomialOrder::grevlex()) {
        Polynomial p(vars, order, {});
        if (!c.is_zero()) p.terms_.emplace_back(Monomial::one(vars.size()), c);
        return p;
    }
    static Polynomial variable(const VariableSet& vars, const std::string& name,
                               MonomialOrder order = MonomialOrder::grevlex()) {
        auto idx = vars.index_of(name);
        if (!idx) throw std::invalid_argument("Polynomial: unknown variable '" + name + "'");
        std::vector<int> e(vars.size(), 0);
        e[*idx] = 1;
        Polynomial p(vars, order, {});
        p.terms_.emplace_back(Monomial(std::move(e)), Rational(1));
        return p;
    }
    static Polynomial from_term(const VariableSet& vars, const Monomial& m, const Rational& c,
                                MonomialOrder order = MonomialOrder::grevlex()) {
        if (m.nvars() != vars.size())
            throw std::invalid_argument("Polynomial: monomial arity mismatch");
        Polynomial p(vars, order, {});
        if (!c.is_zero()) p.terms_.emplace_back(m, c);
        return p;
    }
    static Polynomial from_terms(const VariableSet& vars, std::vector<Term> terms,
                                 MonomialOrder order = MonomialOrder::grevlex()) {
        Polynomial p(vars, order, {});
        std::map<std::vector<int>, Rational> acc;
        for (auto& [m, c] : terms) {
            if (m.nvars() != vars.size())
                throw std::invalid_argument("Polynomial: monomial arity mismatch");
            acc[m.exponents()] += c;
        }
        for (auto& [e, c] : acc)
            if (!c.is_zero()) p.terms_.emplace_back(Monomial(e), c);
        p.sort_terms();
        return p;
    }

    const VariableSet& variables() const { return vars_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    const Monomial& leading_monomial() const {
        require_nonzero();
        return terms_.front().first;
    }
    const Rational& leading_coefficient() const {
        require_nonzero();
        return terms_.front().second;
    }
    Term leading_term() const {
        require_nonzero();
        return terms_.front();
    }

    /// Total degree; -1 for the zero polynomial.
    int total_degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }
    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = terms_.front().first.degree();
        return std::all_of(terms_.begin(), terms_.end(),
                           [d](const Term& t) { return t.first.degree() == d; });
    }

    Rational coefficient(const Monomial& m) const {
        for (const auto& [mm, c] : terms_)
            if (mm == m) return c;
        return Rational();
    }
    Rational constant_coefficient() const { return coefficient(Monomial::one(vars_.size())); }

    Polynomial with_order(MonomialOrder order) const {
        Polynomial p(vars_, order, terms_);
        p.sort_terms();
        return p;
    }

    Polynomial operator-() const {
        Polynomial p = *this;
        for (auto& [m, c] : p.terms_) c = -c;
        return p;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        a.check_compatible(b);
        const Polynomial& rhs = (a.order_ == b.order_) ? b : b.with_order(a.order_);
        Polynomial r(a.vars_, a.order_, {});
        r.terms_.reserve(a.terms_.size() + rhs.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < rhs.terms_.size()) {
            int c = a.order_.compare(a.terms_[i].first, rhs.terms_[j].first);
            if (c > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                r.terms_.push_back(rhs.terms_[j++]);
            } else {
                Rational s = a.terms_[i].second + rhs.terms_[j].second;
                if (!s.is_zero()) r.terms_.emplace_back(a.terms_[i].first, s);
                ++i, ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
        for (; j < rhs.terms_.size(); ++j) r.terms_.push_back(rhs.terms_[j]);
        return r;
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    Polynomial scale(const Rational& c) const {
        if (c.is_zero()) return Polynomial(vars_, order_, {});
        Polynomial p = *this;
        for (auto& [m, coeff] : p.terms_) coeff *= c;
        return p;
    }

    /// c * m * this, with the product still sorted (shifting by a fixed
    /// monomial preserves the order of the terms).
    Polynomial times_term(const Monomial& m, const Rational& c) const {
        if (c.is_zero()) return Polynomial(vars_, order_, {});
        Polynomial p(vars_, order_, {});
        p.terms_.reserve(terms_.size());
        for (const auto& [mm, cc] : terms_) p.terms_.emplace_back(mm.times(m), cc * c);
        return p;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_compatible(b);
        if (a.is_zero() || b.is_zero()) return Polynomial(a.vars_, a.order_, {});
        std::map<std::vector<int>, Rational> acc;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) acc[ma.times(mb).exponents()] += ca * cb;
        Polynomial r(a.vars_, a.order_, {});
        for (auto& [e, c] : acc)
            if (!c.is_zero()) r.terms_.emplace_back(Monomial(e), c);
        r.sort_terms();
        return r;
    }

    Polynomial pow(int k) const {
        if (k < 0) throw std::invalid_argument("Polynomial: negative power");
        Polynomial result = constant(vars_, 1, order_);
        Polynomial base = *this;
        while (k > 0) {
            if (k & 1) result = result * base;
            k >>= 1;
            if (k) base = base * base;
        }
        return result;
    }

    /// Order-insensitive exact equality (same variable set required for a
    /// true result; different variable sets simply compare unequal).
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.vars_ != b.vars_) return false;
        if (a.terms_.size() != b.terms_.size()) return false;
        if (a.order_ == b.order_) return a.terms_ == b.terms_;
        return a.terms_sorted_plain() == b.terms_sorted_plain();
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Ring-homomorphism image: every variable of the ring must be mapped
    /// explicitly, and all images must live in one common variable set.
    Polynomial substitute(const std::map<std::string, Polynomial>& images) const {
        if (images.empty()) throw std::invalid_argument("substitute: empty variable map");
        const VariableSet& target = images.begin()->second.variables();
        MonomialOrder torder = images.begin()->second.order();
        std::vector<const Polynomial*> image_of(vars_.size(), nullptr);
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            auto it = images.find(vars_.name(i));
            if (it == images.end())
                throw std::invalid_argument("substitute: unmapped variable '" + vars_.name(i) +
                                            "'");
            if (it->second.variables() != target)
                throw std::invalid_argument("substitute: images use different variable sets");
            image_of[i] = &it->second;
        }
        // memoized powers per variable
        std::vector<std::vector<Polynomial>> powers(vars_.size());
        auto power_of = [&](std::size_t v, int e) -> const Polynomial& {
            auto& cache = powers[v];
            if (cache.empty()) cache.push_back(Polynomial::constant(target, 1, torder));
            while (static_cast<int>(cache.size()) <= e)
                cache.push_back(cache.back() * image_of[v]->with_order(torder));
            return cache[e];
        };
        Polynomial result = Polynomial::zero(target, torder);
        for (const auto& [m, c] : terms_) {
            Polynomial t = Polynomial::constant(target, c, torder);
            for (std::size_t v = 0; v < vars_.size(); ++v)
                if (m.exponent(v) > 0) t = t * power_of(v, m.exponent(v));
            result = result + t;
        }
        return result;
    }

    /// Set `pivot` to 1 in a homogeneous polynomial; the result lives in the
    /// ring with the pivot removed.
    Polynomial dehomogenize(const std::string& pivot) const {
        if (!is_homogeneous())
            throw std::invalid_argument("dehomogenize: polynomial not homogeneous");
        auto idx = vars_.index_of(pivot);
        if (!idx) throw std::invalid_argument("dehomogenize: unknown variable '" + pivot + "'");
        std::vector<std::string> rest;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (i != *idx) rest.push_back(vars_.name(i));
        VariableSet target(rest);
        Polynomial p(target, order_, {});
        for (const auto& [m, c] : terms_) {
            std::vector<int> e;
            e.reserve(rest.size());
            for (std::size_t i = 0; i < vars_.size(); ++i)
                if (i != *idx) e.push_back(m.exponent(i));
            p.terms_.emplace_back(Monomial(std::move(e)), c);
        }
        p.sort_terms();  // distinct monomials stay distinct: pivot exponent was determined
        return p;
    }

    /// Multiply each term by pivot^(d - term degree). If the pivot is not in
    /// the ring it is prepended as the first (highest-precedence) variable.
    Polynomial homogenize(const std::string& pivot, int d) const {
        if (total_degree() > d)
            throw std::invalid_argument("homogenize: degree of polynomial exceeds target");
        VariableSet target = vars_;
        std::size_t pidx;
        bool fresh = !vars_.contains(pivot);
        if (fresh) {
            std::vector<std::string> names = {pivot};
            names.insert(names.end(), vars_.names().begin(), vars_.names().end());
            target = VariableSet(names);
            pidx = 0;
        } else {
            pidx = *vars_.index_of(pivot);
        }
        Polynomial p(target, order_, {});
        for (const auto& [m, c] : terms_) {
            std::vector<int> e;
            if (fresh) {
                e.push_back(0);
                e.insert(e.end(), m.exponents().begin(), m.exponents().end());
            } else {
                e = m.exponents();
            }
            e[fresh ? 0 : pidx] += d - m.degree();
            p.terms_.emplace_back(Monomial(std::move(e)), c);
        }
        p.sort_terms();
        return p;
    }

    /// The polynomial multiplying v^k, returned in the same ring with the
    /// v-exponent zeroed (so that sum_k v^k * coefficient_of_power(p, v, k)
    /// reconstructs p).
    Polynomial coefficient_of_power(const std::string& v, int k) const {
        auto idx = vars_.index_of(v);
        if (!idx) throw std::invalid_argument("coefficient_of_power: unknown variable '" + v + "'");
        Polynomial p(vars_, order_, {});
        for (const auto& [m, c] : terms_) {
            if (m.exponent(*idx) != k) continue;
            std::vector<int> e = m.exponents();
            e[*idx] = 0;
            p.terms_.emplace_back(Monomial(std::move(e)), c);
        }
        p.sort_terms();
        return p;
    }

    int degree_in(const std::string& v) const {
        auto idx = vars_.index_of(v);
        if (!idx) throw std::invalid_argument("degree_in: unknown variable '" + v + "'");
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(*idx));
        return d;
    }

    /// Terms in descending monomial order, rationals as "p/q".
    std::string to_text() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            bool neg = c.sign() < 0;
            Rational mag = neg ? -c : c;
            if (first) {
                if (neg) out += "-";
                first = false;
            } else {
                out += neg ? " - " : " + ";
            }
            std::string mono = monomial_text(m);
            if (mono.empty()) {
                out += mag.to_string();
            } else if (mag.is_one()) {
                out += mono;
            } else {
                out += mag.to_string() + "*" + mono;
            }
        }
        return out;
    }

    std::string monomial_text(const Monomial& m) const {
        std::string out;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            int e = m.exponent(i);
            if (e == 0) continue;
            if (!out.empty()) out += "*";
            out += vars_.name(i);
            if (e > 1) out += "^" + std::to_string(e);
        }
        return out;
    }

private:
    Polynomial(VariableSet vars, MonomialOrder order, std::vector<Term> terms)
        : vars_(std::move(vars)), order_(order), terms_(std::move(terms)) {}

    void require_nonzero() const {
        if (terms_.empty()) throw std::domain_error("Polynomial: zero polynomial has no terms");
    }
    void check_compatible(const Polynomial& o) const {
        if (vars_ != o.vars_)
            throw std::invalid_argument("Polynomial: mismatched variable sets");
    }
    void sort_terms() {
        std::sort(terms_.begin(), terms_.end(), [this](const Term& a, const Term& b) {
            return order_.greater(a.first, b.first);
        });
    }
    std::vector<Term> terms_sorted_plain() const {
        std::vector<Term> t = terms_;
        std::sort(t.begin(), t.end(),
                  [](const Term& a, const Term& b) { return a.first < b.first; });
        return t;
    }

    VariableSet vars_;
    MonomialOrder order_ = MonomialOrder::grevlex();
    std::vector<Term> terms_;
};

/// All exponent vectors of the given total degree, in lexicographic order.
inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree) {
    std::vector<Monomial> out;
    std::vector<int> current(nvars, 0);
    auto rec = [&](auto&& self, std::size_t pos, int remaining) -> void {
        if (pos + 1 == nvars) {
            current[pos] = remaining;
            out.emplace_back(current);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            current[pos] = e;
            self(self, pos + 1, remaining - e);
        }
    };
    if (nvars == 0) {
        if (degree == 0) out.emplace_back(std::vector<int>{});
        return out;
    }
    rec(rec, 0, degree);
    return out;
}

}  // namespace symideal
