// The ideal families under study: J(N) in k[d,x,y], the power ideals
// I_r^(d) in k[t0..tr], and the conjectured monomial generators of the
// contraction J(N) /\ k[x,y].
#pragma once

#include <string>
#include <vector>

#include "symideal/polynomial.hpp"

namespace symideal {

inline VariableSet j_ring() { return VariableSet{"d", "x", "y"}; }

/// Generators of J(N) = < d^N, (d+x)^N, (d+y)^N, (d+x+y)^N >, in this fixed
/// order ("d" stands for the homogenizing variable delta).
inline std::vector<Polynomial> j_ideal(int n_exponent,
                                       MonomialOrder order = MonomialOrder::grevlex()) {
    if (n_exponent < 1) throw std::invalid_argument("j_ideal: exponent must be >= 1");
    VariableSet vars = j_ring();
    Polynomial d = Polynomial::variable(vars, "d", order);
    Polynomial x = Polynomial::variable(vars, "x", order);
    Polynomial y = Polynomial::variable(vars, "y", order);
    return {d.pow(n_exponent), (d + x).pow(n_exponent), (d + y).pow(n_exponent),
            (d + x + y).pow(n_exponent)};
}

inline VariableSet ird_ring(int r) {
    if (r < 1) throw std::invalid_argument("ird_ring: r must be >= 1");
    std::vector<std::string> names;
    for (int i = 0; i <= r; ++i) names.push_back("t" + std::to_string(i));
    return VariableSet(names);
}

/// Generators (t0 + sum_{i in S} ti)^d over all subsets S of {1..r}, subsets
/// enumerated by binary counting on the mask of {t1..tr}.
inline std::vector<Polynomial> ird_generators(int r, int d,
                                              MonomialOrder order = MonomialOrder::grevlex()) {
    if (r < 1 || d < 1) throw std::invalid_argument("ird_generators: r and d must be >= 1");
    VariableSet vars = ird_ring(r);
    std::vector<Polynomial> gens;
    gens.reserve(std::size_t{1} << r);
    for (unsigned long mask = 0; mask < (1ul << r); ++mask) {
        Polynomial form = Polynomial::variable(vars, "t0", order);
        for (int i = 1; i <= r; ++i)
            if (mask & (1ul << (i - 1)))
                form = form + Polynomial::variable(vars, "t" + std::to_string(i), order);
        gens.push_back(form.pow(d));
    }
    return gens;
}

inline VariableSet xy_ring() { return VariableSet{"x", "y"}; }

/// The conjectured monomial generators of J(N) /\ k[x,y]:
/// x^(2N-1), y^(2N-1), and x^(2i+1)*y^(2j+1) for i+j = N-2.
inline std::vector<Polynomial> conjectured_contraction_generators(
    int N, MonomialOrder order = MonomialOrder::grevlex()) {
    if (N < 1) throw std::invalid_argument("conjectured_contraction_generators: N must be >= 1");
    VariableSet vars = xy_ring();
    Polynomial x = Polynomial::variable(vars, "x", order);
    Polynomial y = Polynomial::variable(vars, "y", order);
    std::vector<Polynomial> gens = {x.pow(2 * N - 1), y.pow(2 * N - 1)};
    for (int i = 0; i + 2 <= N; ++i) {
        int j = N - 2 - i;
        gens.push_back(x.pow(2 * i + 1) * y.pow(2 * j + 1));
    }
    return gens;
}

}  // namespace symideal
