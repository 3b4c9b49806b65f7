// Binomial coefficients, partitions and the Schur dimension product formula.
#pragma once

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "symideal/rational.hpp"

namespace symideal {

/// Binomial coefficient, by the multiplicative formula with exact division.
/// Returns 0 when k < 0 or k > n.
inline Integer binom(long n, long k) {
    if (n < 0) throw std::invalid_argument("binom: negative n");
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Integer result = 1;
    for (long i = 1; i <= k; ++i) {
        result *= n - k + i;
        mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), static_cast<unsigned long>(i));
    }
    return result;
}

/// Weakly decreasing sequence of non-negative integers. Trailing zeros are
/// permitted and ignored for equality.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) throw std::invalid_argument("Partition: negative part");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    /// m copies of value `part` (a rectangle).
    static Partition rectangle(int part, int copies) {
        if (copies < 0) throw std::invalid_argument("Partition: negative length");
        return Partition(std::vector<int>(static_cast<std::size_t>(copies), part));
    }

    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    std::size_t length() const { return parts_.size(); }
    std::size_t nonzero_length() const {
        std::size_t n = parts_.size();
        while (n > 0 && parts_[n - 1] == 0) --n;
        return n;
    }

    const std::vector<int>& parts() const { return parts_; }

    friend bool operator==(const Partition& a, const Partition& b) {
        std::size_t n = std::max(a.parts_.size(), b.parts_.size());
        for (std::size_t i = 0; i < n; ++i)
            if (a.part(i) != b.part(i)) return false;
        return true;
    }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

    std::string to_string() const {
        std::string out = "(";
        for (std::size_t i = 0; i < nonzero_length(); ++i) {
            if (i) out += ",";
            out += std::to_string(parts_[i]);
        }
        return out + ")";
    }

private:
    std::vector<int> parts_;
};

/// s_lambda(1,...,1) over n variables: prod_{i<j} (l_i - l_j + j - i)/(j - i),
/// the dimension of the GL_n irreducible of highest weight lambda. Strictly
/// positive for every valid input.
inline Integer schur_dimension(const Partition& lambda, int n) {
    if (n <= 0) throw std::invalid_argument("schur_dimension: n must be positive");
    if (lambda.nonzero_length() > static_cast<std::size_t>(n))
        throw std::invalid_argument("schur_dimension: partition has more than n nonzero parts");
    Integer num = 1, den = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            num *= lambda.part(i - 1) - lambda.part(j - 1) + j - i;
            den *= j - i;
        }
    }
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw std::logic_error("schur_dimension: product formula not an integer");
    Integer result;
    mpz_divexact(result.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return result;
}

/// e_m evaluated at n ones, i.e. binom(n, m). Named so the Jacobi-Trudi
/// cross-checks in the tests read like the derivation they follow.
inline Integer elementary_symmetric_at_ones(long m, long n) {
    if (n < 0) throw std::invalid_argument("elementary_symmetric_at_ones: negative n");
    return binom(n, m);
}

}  // namespace symideal
