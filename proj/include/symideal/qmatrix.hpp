// Exact dense rational linear algebra: determinants, linear solves, the
// anti-diagonal transpose, binomial band matrices and the strictly-lower-
// triangular solver for A*X - (A*X)^tau = B.
#pragma once

#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "symideal/combinatorics.hpp"
#include "symideal/rational.hpp"

namespace symideal {

class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("QMatrix: negative dimension");
        a_.assign(static_cast<std::size_t>(rows) * cols, Rational());
    }
    QMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
        rows_ = static_cast<int>(rows.size());
        cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
        a_.reserve(static_cast<std::size_t>(rows_) * cols_);
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != cols_)
                throw std::invalid_argument("QMatrix: ragged rows");
            for (const auto& x : r) a_.push_back(x);
        }
    }

    static QMatrix identity(int n) {
        QMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& at(int i, int j) { return a_[index(i, j)]; }
    const Rational& at(int i, int j) const { return a_[index(i, j)]; }

    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const QMatrix& a, const QMatrix& b) { return !(a == b); }

    QMatrix operator-() const {
        QMatrix r = *this;
        for (auto& x : r.a_) x = -x;
        return r;
    }
    friend QMatrix operator+(const QMatrix& a, const QMatrix& b) {
        a.check_same_shape(b);
        QMatrix r = a;
        for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += b.a_[k];
        return r;
    }
    friend QMatrix operator-(const QMatrix& a, const QMatrix& b) {
        a.check_same_shape(b);
        QMatrix r = a;
        for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= b.a_[k];
        return r;
    }
    friend QMatrix operator*(const QMatrix& a, const QMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("QMatrix: dimension mismatch in *");
        QMatrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return r;
    }
    friend QMatrix operator*(const Rational& c, const QMatrix& a) {
        QMatrix r = a;
        for (auto& x : r.a_) x *= c;
        return r;
    }

    QMatrix transpose() const {
        QMatrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    /// Debug form: one row per line, entries separated by spaces.
    std::string to_string() const {
        std::string out;
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) {
                if (j) out += " ";
                out += at(i, j).to_string();
            }
            out += "\n";
        }
        return out;
    }

private:
    std::size_t index(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw std::out_of_range("QMatrix: index out of range");
        return static_cast<std::size_t>(i) * cols_ + j;
    }
    void check_same_shape(const QMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("QMatrix: shape mismatch");
    }

    int rows_, cols_;
    std::vector<Rational> a_;
};

/// A^tau = J A^T J: reflection across the anti-diagonal. Entry (i,j) of the
/// result is entry (n+1-j, n+1-i) of the input, 1-based.
inline QMatrix anti_transpose(const QMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("anti_transpose: matrix not square");
    int n = m.rows();
    QMatrix r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.at(i, j) = m.at(n - 1 - j, n - 1 - i);
    return r;
}

/// Exact determinant by fraction-free (Bareiss) elimination: rows are scaled
/// to integers first, the integer elimination divides exactly, and the row
/// scales are divided back out at the end.
inline Rational det(const QMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("det: matrix not square");
    int n = m.rows();
    if (n == 0) return 1;

    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    Integer scale = 1;
    for (int i = 0; i < n; ++i) {
        Integer l = 1;
        for (int j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).denominator().get_mpz_t());
        for (int j = 0; j < n; ++j) {
            Rational scaled = m.at(i, j) * Rational(l);
            a[i][j] = scaled.numerator();  // exact: l is a common denominator
        }
        scale *= l;
    }

    Integer prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { pivot = i; break; }
            if (pivot < 0) return 0;
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Integer d = a[n - 1][n - 1];
    if (sign < 0) d = -d;
    return Rational(d, scale);
}

struct LinearSolution {
    std::vector<Rational> x;  // free variables pinned to zero
    int rank = 0;
    bool unique = false;  // rank == number of unknowns
};

/// Solve a*x = rhs exactly by reduced row echelon form with the leftmost
/// nonzero pivot rule. Returns nullopt for an inconsistent system; otherwise
/// the solution with every free variable set to zero.
inline std::optional<LinearSolution> solve_rref(const QMatrix& a, const std::vector<Rational>& rhs) {
    if (static_cast<int>(rhs.size()) != a.rows())
        throw std::invalid_argument("solve: rhs size mismatch");
    int rows = a.rows(), cols = a.cols();
    std::vector<std::vector<Rational>> w(rows, std::vector<Rational>(cols + 1));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) w[i][j] = a.at(i, j);
        w[i][cols] = rhs[i];
    }

    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!w[i][c].is_zero()) { p = i; break; }
        if (p < 0) continue;
        std::swap(w[r], w[p]);
        Rational inv = w[r][c].inverse();
        for (int j = c; j <= cols; ++j) w[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || w[i][c].is_zero()) continue;
            Rational f = w[i][c];
            for (int j = c; j <= cols; ++j) w[i][j] -= f * w[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (!w[i][cols].is_zero()) return std::nullopt;

    LinearSolution sol;
    sol.rank = r;
    sol.unique = r == cols;
    sol.x.assign(cols, Rational());
    for (int i = 0; i < r; ++i) sol.x[pivot_col[i]] = w[i][cols];
    return sol;
}

inline std::optional<std::vector<Rational>> solve(const QMatrix& a, const std::vector<Rational>& rhs) {
    auto sol = solve_rref(a, rhs);
    if (!sol) return std::nullopt;
    return std::move(sol->x);
}

/// Square matrix with (i,j) entry binom(n_choose, j-i), 1-based: a unipotent
/// upper triangular banded Toeplitz matrix, symmetric under anti-transpose.
inline QMatrix binomial_band_matrix(int n_choose, int size) {
    if (n_choose <= 0 || size <= 0)
        throw std::invalid_argument("binomial_band_matrix: arguments must be positive");
    QMatrix m(size, size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) m.at(i, j) = Rational(binom(n_choose, j - i));
    return m;
}

/// The m x m block whose bottom-left corner is the bottom-left corner of a.
inline QMatrix lower_left_minor(const QMatrix& a, int m) {
    if (m < 1 || m > a.rows() || m > a.cols())
        throw std::invalid_argument("lower_left_minor: m out of range");
    QMatrix r(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) r.at(i, j) = a.at(a.rows() - m + i, j);
    return r;
}

/// The m x m block whose top-right corner is the top-right corner of a.
inline QMatrix upper_right_minor(const QMatrix& a, int m) {
    if (m < 1 || m > a.rows() || m > a.cols())
        throw std::invalid_argument("upper_right_minor: m out of range");
    QMatrix r(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) r.at(i, j) = a.at(i, a.cols() - m + j);
    return r;
}

/// Right-hand side for solve_antidiagonal: square, zero anti-diagonal and
/// B^tau = -B. Validated on construction.
class AntiSymmetricSpec {
public:
    explicit AntiSymmetricSpec(QMatrix b) : b_(std::move(b)) {
        if (!b_.is_square()) throw std::invalid_argument("AntiSymmetricSpec: matrix not square");
        int n = b_.rows();
        for (int i = 0; i < n; ++i)
            if (!b_.at(i, n - 1 - i).is_zero())
                throw std::invalid_argument("AntiSymmetricSpec: nonzero anti-diagonal entry");
        if (anti_transpose(b_) != -b_)
            throw std::invalid_argument("AntiSymmetricSpec: B^tau != -B");
    }
    const QMatrix& matrix() const { return b_; }
    int size() const { return b_.rows(); }

private:
    QMatrix b_;
};

/// The unique strictly lower triangular X with a*X - (a*X)^tau = b, found by
/// block back-substitution over the columns i = n-1 .. 1: the coefficient
/// block of column i is the (n-i) x (n-i) upper-right minor of a, and already
/// solved columns feed into the right-hand side. Requires every upper-right
/// minor of a to be nonsingular.
inline QMatrix solve_antidiagonal(const QMatrix& a, const AntiSymmetricSpec& b) {
    if (!a.is_square()) throw std::invalid_argument("solve_antidiagonal: matrix not square");
    int n = a.rows();
    if (n != b.size()) throw std::invalid_argument("solve_antidiagonal: size mismatch");

    QMatrix x(n, n);
    for (int col = n - 2; col >= 0; --col) {  // 0-based column; X's last column is zero
        int k = n - 1 - col;                  // number of unknowns in this column
        QMatrix block = upper_right_minor(a, k);
        std::vector<Rational> rhs(k);
        for (int row = 0; row < k; ++row) {
            // b entry plus the correction A_{n-col} . X_{n-row} from later columns
            Rational corr;
            int arow = n - 1 - col;
            int xcol = n - 1 - row;
            for (int t = 0; t < n; ++t) corr += a.at(arow, t) * x.at(t, xcol);
            rhs[row] = b.matrix().at(row, col) + corr;
        }
        auto sol = solve_rref(block, rhs);
        if (!sol) throw std::invalid_argument("solve_antidiagonal: inconsistent block system");
        if (!sol->unique)
            throw std::invalid_argument("solve_antidiagonal: singular upper-right minor");
        for (int row = 0; row < k; ++row) x.at(col + 1 + row, col) = sol->x[row];
    }

    QMatrix ax = a * x;
    if (ax - anti_transpose(ax) != b.matrix())
        throw std::logic_error("solve_antidiagonal: residual is nonzero");
    return x;
}

}  // namespace symideal
