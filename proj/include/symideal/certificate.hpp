// Explicit ideal-membership certificates witnessing (xy)^(2n-1) in J(2n) and
// the four-variable identities behind the non-primality of the symmetric
// ideals generated by (x_i - x_j)^(2n).
//
// The structured constructor follows the proof pipeline: set up the binomial
// band matrix Lambda and the alternating diagonal B, solve
// Lambda*C - (Lambda*C)^tau = B for a strictly lower triangular C, put
// D = -C^tau, read the cofactor coefficient polynomials off the columns of C
// and D, recover the b's and a's, and finally rehomogenize back to k[d,x,y].
// The generic constructor solves the cofactor coefficients as one dense
// linear system and serves as an independent route to the same memberships.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symideal/ideals.hpp"
#include "symideal/polynomial.hpp"
#include "symideal/qmatrix.hpp"

namespace symideal {

/// target = sum cofactor * generator, checked exactly by verify_certificate.
struct Certificate {
    Polynomial target;
    std::vector<std::pair<Polynomial, Polynomial>> pairs;  // (generator, cofactor)
};

struct VerifyResult {
    bool ok = false;
    Polynomial residual;  // target - sum cofactor*generator
    explicit operator bool() const { return ok; }
};

inline VerifyResult verify_certificate(const Certificate& c) {
    Polynomial sum = Polynomial::zero(c.target.variables(), c.target.order());
    for (const auto& [generator, cofactor] : c.pairs) sum = sum + cofactor * generator;
    VerifyResult r;
    r.residual = c.target - sum;
    r.ok = r.residual.is_zero();
    return r;
}

/// Intermediate data of the structured solve, kept for inspection:
/// dmat = -cmat^tau and lambda*cmat + dmat*lambda = bdiag hold exactly, and
/// the coefficient polynomials (in t, inside k[s,t]) are recorded per index.
struct StructuredSolveTrace {
    QMatrix lambda;  // unipotent upper triangular binomial band matrix
    QMatrix bdiag;   // alternating diagonal of binom(2n-1, *)
    QMatrix cmat;    // strictly lower triangular
    QMatrix dmat;    // -cmat^tau
    std::vector<Polynomial> a_polys, b_polys, c_polys, d_polys;
};

inline VariableSet st_ring() { return VariableSet{"s", "t"}; }

/// Certificate for (xy)^(2n-1) against j_ideal(2n), built by the structured
/// pipeline above. Any violated internal degree bound or a nonzero final
/// residual throws; a returned certificate always verifies.
inline std::pair<Certificate, StructuredSolveTrace> build_certificate_structured(int n) {
    if (n < 1) throw std::invalid_argument("build_certificate_structured: n must be >= 1");
    const int N = 2 * n;

    StructuredSolveTrace trace;
    trace.lambda = binomial_band_matrix(N, N);
    trace.bdiag = QMatrix(N, N);
    for (int k = 0; k < N; ++k) {
        Rational entry{binom(N - 1, N - 1 - k)};
        if ((N - 1 - k) % 2 != 0) entry = -entry;
        trace.bdiag.at(k, k) = entry;
    }

    trace.cmat = solve_antidiagonal(trace.lambda, AntiSymmetricSpec(trace.bdiag));
    trace.dmat = -anti_transpose(trace.cmat);
    if (trace.lambda * trace.cmat + trace.dmat * trace.lambda != trace.bdiag)
        throw std::logic_error("structured certificate: Lambda*C + D*Lambda != B");

    VariableSet st = st_ring();
    Polynomial s = Polynomial::variable(st, "s");
    Polynomial t = Polynomial::variable(st, "t");
    Polynomial one = Polynomial::constant(st, 1);

    // column k+1 of C holds the coefficients of c_k(t); same for D and d_k
    auto column_poly = [&](const QMatrix& m, int k) {
        Polynomial p = Polynomial::zero(st);
        for (int l = 0; l + k + 2 <= N; ++l)
            p = p + t.pow(l).scale(m.at(k + 1 + l, k));
        return p;
    };
    for (int k = 0; k + 2 <= N; ++k) {
        trace.c_polys.push_back(column_poly(trace.cmat, k));
        trace.d_polys.push_back(column_poly(trace.dmat, k));
    }

    // b_k = -sum_{m=k}^{2n-2} binom(2n, m-k) t^(m-k) d_m
    for (int k = 0; k + 2 <= N; ++k) {
        Polynomial bk = Polynomial::zero(st);
        for (int m = k; m + 2 <= N; ++m)
            bk = bk + t.pow(m - k).scale(Rational(binom(N, m - k))) * trace.d_polys[m];
        trace.b_polys.push_back(-bk);
    }

    // a_k = (-1)^(2n-1-k) binom(2n-1,k) t^(2n-1)
    //       - c_k (1+t)^2n - sum_{i<=k} binom(2n, k-i) d_i t^(2n-k+i)
    Polynomial one_plus_t_pow = (one + t).pow(N);
    for (int k = 0; k + 2 <= N; ++k) {
        Rational lead{binom(N - 1, k)};
        if ((N - 1 - k) % 2 != 0) lead = -lead;
        Polynomial ak = t.pow(N - 1).scale(lead) - trace.c_polys[k] * one_plus_t_pow;
        for (int i = 0; i <= k; ++i)
            ak = ak - t.pow(N - k + i).scale(Rational(binom(N, k - i))) * trace.d_polys[i];
        trace.a_polys.push_back(ak);
    }

    auto assemble = [&](const std::vector<Polynomial>& coeffs) {
        Polynomial p = Polynomial::zero(st);
        for (int k = 0; k < static_cast<int>(coeffs.size()); ++k)
            p = p + s.pow(k) * coeffs[k];
        return p;
    };
    Polynomial a = assemble(trace.a_polys);
    Polynomial b = assemble(trace.b_polys);
    Polynomial c = assemble(trace.c_polys);
    Polynomial d = assemble(trace.d_polys);

    for (const Polynomial* p : {&a, &b, &c, &d})
        if (p->total_degree() > N - 2)
            throw std::logic_error("structured certificate: cofactor degree bound violated");
    Polynomial lhs = (s - one).pow(N - 1) * t.pow(N - 1);
    if (lhs != a + b * s.pow(N) + c * (one + t).pow(N) + d * (s + t).pow(N))
        throw std::logic_error("structured certificate: dehomogenized identity fails");

    // map back: s = 1 + x/d, t = y/d, then homogenize by d to degree 2n-2
    VariableSet xy = xy_ring();
    std::map<std::string, Polynomial> back = {
        {"s", Polynomial::constant(xy, 1) + Polynomial::variable(xy, "x")},
        {"t", Polynomial::variable(xy, "y")}};
    auto lift = [&](const Polynomial& p) { return p.substitute(back).homogenize("d", N - 2); };

    Certificate cert;
    VariableSet jr = j_ring();
    cert.target =
        (Polynomial::variable(jr, "x") * Polynomial::variable(jr, "y")).pow(N - 1);
    std::vector<Polynomial> gens = j_ideal(N);
    std::vector<Polynomial> cofs = {lift(a), lift(b), lift(c), lift(d)};
    for (int i = 0; i < 4; ++i) cert.pairs.emplace_back(gens[i], cofs[i]);

    if (!verify_certificate(cert).ok)
        throw std::logic_error("structured certificate: final residual is nonzero");
    return {std::move(cert), std::move(trace)};
}

/// Independent constructor: treat all coefficients of degree-d homogeneous
/// cofactors as unknowns, equate coefficients of target = sum cofactor *
/// generator, and solve the linear system exactly (free variables pinned to
/// zero). Returns nullopt when the system is inconsistent, which rules out
/// cofactors of that degree, not membership in the ideal. Generators whose
/// degree cannot contribute to the target get the zero cofactor.
inline std::optional<Certificate> build_certificate_generic(
    const Polynomial& target, const std::vector<Polynomial>& generators, int cofactor_degree) {
    if (!target.is_homogeneous())
        throw std::invalid_argument("build_certificate_generic: target not homogeneous");
    for (const auto& g : generators)
        if (!g.is_homogeneous() || g.variables() != target.variables())
            throw std::invalid_argument(
                "build_certificate_generic: generators must be homogeneous in the target ring");
    if (cofactor_degree < 0) return std::nullopt;

    const VariableSet& vars = target.variables();
    const int target_degree = target.total_degree();
    std::vector<Monomial> cof_monos = monomials_of_degree(vars.size(), cofactor_degree);
    std::vector<Monomial> eq_monos =
        monomials_of_degree(vars.size(), target_degree < 0 ? 0 : target_degree);
    std::map<std::vector<int>, int> eq_row;
    for (std::size_t r = 0; r < eq_monos.size(); ++r)
        eq_row[eq_monos[r].exponents()] = static_cast<int>(r);

    struct Unknown {
        std::size_t gen;
        Monomial mono;
    };
    std::vector<Unknown> unknowns;
    for (std::size_t gi = 0; gi < generators.size(); ++gi) {
        if (generators[gi].is_zero()) continue;
        if (generators[gi].total_degree() + cofactor_degree != target_degree) continue;
        for (const auto& m : cof_monos) unknowns.push_back({gi, m});
    }

    QMatrix a(static_cast<int>(eq_monos.size()), static_cast<int>(unknowns.size()));
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
        const Polynomial& g = generators[unknowns[u].gen];
        for (const auto& [m, c] : g.terms())
            a.at(eq_row.at(m.times(unknowns[u].mono).exponents()), static_cast<int>(u)) = c;
    }
    std::vector<Rational> rhs(eq_monos.size());
    for (const auto& [m, c] : target.terms()) rhs[eq_row.at(m.exponents())] = c;

    auto solution = solve(a, rhs);
    if (!solution) return std::nullopt;

    Certificate cert;
    cert.target = target;
    std::vector<Polynomial> cofs(generators.size(), Polynomial::zero(vars, target.order()));
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
        if ((*solution)[u].is_zero()) continue;
        cofs[unknowns[u].gen] =
            cofs[unknowns[u].gen] +
            Polynomial::from_term(vars, unknowns[u].mono, (*solution)[u], target.order());
    }
    for (std::size_t gi = 0; gi < generators.size(); ++gi)
        cert.pairs.emplace_back(generators[gi], cofs[gi]);

    if (!verify_certificate(cert).ok)
        throw std::logic_error("build_certificate_generic: solved system fails verification");
    return cert;
}

/// Closed-form certificate for x^(2N-1) over [d^N, (d+x)^N]: expand
/// ((d+x) - d)^(2N-1) and split the sum at k = N; terms with k >= N carry the
/// factor (d+x)^N, the rest carry d^N.
inline Certificate binomial_split_certificate(int N) {
    if (N < 1) throw std::invalid_argument("binomial_split_certificate: N must be >= 1");
    VariableSet vars{"d", "x"};
    Polynomial d = Polynomial::variable(vars, "d");
    Polynomial x = Polynomial::variable(vars, "x");
    Polynomial dx = d + x;

    Polynomial low = Polynomial::zero(vars);   // cofactor of d^N (k = 0..N-1)
    Polynomial high = Polynomial::zero(vars);  // cofactor of (d+x)^N (k = N..2N-1)
    for (int k = 0; k < 2 * N; ++k) {
        Rational c{binom(2 * N - 1, k)};
        if ((2 * N - 1 - k) % 2 != 0) c = -c;
        if (k >= N)
            high = high + (dx.pow(k - N) * d.pow(2 * N - 1 - k)).scale(c);
        else
            low = low + (dx.pow(k) * d.pow(N - 1 - k)).scale(c);
    }

    Certificate cert;
    cert.target = x.pow(2 * N - 1);
    cert.pairs = {{d.pow(N), low}, {dx.pow(N), high}};
    if (!verify_certificate(cert).ok)
        throw std::logic_error("binomial_split_certificate: identity fails");
    return cert;
}

/// Certificate for x^(2i+1) y^(2j+1) against j_ideal(N), for i + j = N-2,
/// via the generic constructor with cofactor degree N-2.
inline Certificate odd_monomial_certificate(int N, int i, int j) {
    if (N < 2 || i < 0 || j < 0 || i + j != N - 2)
        throw std::invalid_argument("odd_monomial_certificate: need i, j >= 0 with i + j = N - 2");
    VariableSet jr = j_ring();
    Polynomial target = Polynomial::variable(jr, "x").pow(2 * i + 1) *
                        Polynomial::variable(jr, "y").pow(2 * j + 1);
    auto cert = build_certificate_generic(target, j_ideal(N), N - 2);
    if (!cert)
        throw std::logic_error("odd_monomial_certificate: generic solve unexpectedly failed");
    return *cert;
}

/// Four-variable certificate for (x1-x2)^(2n-1) (xi-xj)^(2n-1) against
/// [(x1-xi)^2n, (x1-xj)^2n, (x2-xi)^2n, (x2-xj)^2n], obtained by substituting
/// x = x1-x2, y = -(xi-xj), d = x2-xj into the structured certificate and
/// negating. Overlapping indices specialize the identity (a vanished
/// generator keeps its cofactor and contributes zero); {i,j} = {1,2}
/// degenerates to the divisibility certificate
/// +-(x1-x2)^(4n-2) = +-(x1-x2)^(2n-2) * (x1-x2)^2n.
inline Certificate symmetric_certificate(int n, int i, int j) {
    if (n < 1) throw std::invalid_argument("symmetric_certificate: n must be >= 1");
    if (i < 1 || j < 1) throw std::invalid_argument("symmetric_certificate: indices must be >= 1");
    if (i == j) throw std::invalid_argument("symmetric_certificate: indices must be distinct");

    auto var_name = [](int k) { return "x" + std::to_string(k); };

    if ((i == 1 && j == 2) || (i == 2 && j == 1)) {
        VariableSet vars{var_name(1), var_name(2)};
        Polynomial diff = Polynomial::variable(vars, var_name(1)) -
                          Polynomial::variable(vars, var_name(2));
        bool flipped = i == 2;  // (xi - xj) = -(x1 - x2)
        Certificate cert;
        cert.target = flipped ? -diff.pow(4 * n - 2) : diff.pow(4 * n - 2);
        Polynomial cof = flipped ? -diff.pow(2 * n - 2) : diff.pow(2 * n - 2);
        cert.pairs = {{diff.pow(2 * n), cof}};
        if (!verify_certificate(cert).ok)
            throw std::logic_error("symmetric_certificate: degenerate identity fails");
        return cert;
    }

    std::vector<int> indices = {1, 2};
    for (int k : {i, j})
        if (k != 1 && k != 2) indices.push_back(k);
    std::sort(indices.begin(), indices.end());
    std::vector<std::string> names;
    for (int k : indices) names.push_back(var_name(k));
    VariableSet vars(names);
    auto v = [&](int k) { return Polynomial::variable(vars, var_name(k)); };

    auto [base, trace] = build_certificate_structured(n);
    (void)trace;
    std::map<std::string, Polynomial> sigma = {
        {"d", v(2) - v(j)},
        {"x", v(1) - v(2)},
        {"y", v(j) - v(i)},
    };

    Certificate cert;
    cert.target = (v(1) - v(2)).pow(2 * n - 1) * (v(i) - v(j)).pow(2 * n - 1);
    // generator order fixed as [(x1-xi), (x1-xj), (x2-xi), (x2-xj)]^2n, whose
    // preimages under sigma are d+x+y, d+x, d+y, d respectively
    const Polynomial& cof_d = base.pairs[0].second;
    const Polynomial& cof_dx = base.pairs[1].second;
    const Polynomial& cof_dy = base.pairs[2].second;
    const Polynomial& cof_dxy = base.pairs[3].second;
    cert.pairs = {
        {(v(1) - v(i)).pow(2 * n), -cof_dxy.substitute(sigma)},
        {(v(1) - v(j)).pow(2 * n), -cof_dx.substitute(sigma)},
        {(v(2) - v(i)).pow(2 * n), -cof_dy.substitute(sigma)},
        {(v(2) - v(j)).pow(2 * n), -cof_d.substitute(sigma)},
    };
    if (!verify_certificate(cert).ok)
        throw std::logic_error("symmetric_certificate: substituted identity fails");
    return cert;
}

}  // namespace symideal
