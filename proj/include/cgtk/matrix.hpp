#pragma once

// Dense matrices over arbitrary-precision rationals, plus the exact linear
// algebra the rest of the project leans on: Gaussian elimination, nullspaces,
// Bareiss fraction-free determinants and characteristic polynomials.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cgtk {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

    static ExactMatrix identity(std::size_t d) {
        ExactMatrix m(d, d);
        for (std::size_t i = 0; i < d; ++i) m(i, i) = 1;
        return m;
    }

    static ExactMatrix diagonal(const std::vector<Rat>& entries) {
        ExactMatrix m(entries.size(), entries.size());
        for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
        ExactMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    if (b(k, j) == 0) continue;
                    r(i, j) += a(i, k) * b(k, j);
                }
            }
        return r;
    }

    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix sum: shape mismatch");
        ExactMatrix r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
        return r;
    }

    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix difference: shape mismatch");
        ExactMatrix r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
        return r;
    }

    ExactMatrix scaled(const Rat& c) const {
        ExactMatrix r = *this;
        for (auto& v : r.data_) v *= c;
        return r;
    }

    ExactMatrix transpose() const {
        ExactMatrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    bool isZero() const {
        for (const auto& v : data_)
            if (v != 0) return false;
        return true;
    }

    bool isIdentity() const {
        if (!square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
        return true;
    }

    Rat det() const {
        if (!square()) throw std::invalid_argument("det: matrix not square");
        ExactMatrix a = *this;
        Rat result = 1;
        for (std::size_t k = 0; k < rows_; ++k) {
            std::size_t pivot = k;
            while (pivot < rows_ && a(pivot, k) == 0) ++pivot;
            if (pivot == rows_) return Rat(0);
            if (pivot != k) {
                for (std::size_t j = k; j < cols_; ++j) std::swap(a(pivot, j), a(k, j));
                result = -result;
            }
            result *= a(k, k);
            Rat inv = Rat(1) / a(k, k);
            for (std::size_t i = k + 1; i < rows_; ++i) {
                if (a(i, k) == 0) continue;
                Rat f = a(i, k) * inv;
                for (std::size_t j = k; j < cols_; ++j) a(i, j) -= f * a(k, j);
            }
        }
        return result;
    }

    ExactMatrix inverse() const {
        if (!square()) throw std::invalid_argument("inverse: matrix not square");
        std::size_t d = rows_;
        ExactMatrix a = *this;
        ExactMatrix inv = identity(d);
        for (std::size_t k = 0; k < d; ++k) {
            std::size_t pivot = k;
            while (pivot < d && a(pivot, k) == 0) ++pivot;
            if (pivot == d) throw std::domain_error("inverse: singular matrix");
            if (pivot != k)
                for (std::size_t j = 0; j < d; ++j) {
                    std::swap(a(pivot, j), a(k, j));
                    std::swap(inv(pivot, j), inv(k, j));
                }
            Rat f = Rat(1) / a(k, k);
            for (std::size_t j = 0; j < d; ++j) {
                a(k, j) *= f;
                inv(k, j) *= f;
            }
            for (std::size_t i = 0; i < d; ++i) {
                if (i == k || a(i, k) == 0) continue;
                Rat g = a(i, k);
                for (std::size_t j = 0; j < d; ++j) {
                    a(i, j) -= g * a(k, j);
                    inv(i, j) -= g * inv(k, j);
                }
            }
        }
        return inv;
    }

    ExactMatrix pow(std::int64_t n) const {
        if (!square()) throw std::invalid_argument("pow: matrix not square");
        if (n < 0) return inverse().pow(-n);
        ExactMatrix acc = identity(rows_);
        ExactMatrix sq = *this;
        std::int64_t k = n;
        while (k > 0) {
            if (k & 1) acc = acc * sq;
            sq = sq * sq;
            k >>= 1;
        }
        return acc;
    }

    friend ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
        ExactMatrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) {
                if (a(i, j) == 0) continue;
                for (std::size_t k = 0; k < b.rows_; ++k)
                    for (std::size_t l = 0; l < b.cols_; ++l)
                        r(i * b.rows_ + k, j * b.cols_ + l) = a(i, j) * b(k, l);
            }
        return r;
    }

    friend ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b) {
        ExactMatrix r(a.rows_ + b.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) r(a.rows_ + i, a.cols_ + j) = b(i, j);
        return r;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rat> data_;
};

// Row echelon machinery on rational row vectors. Rows are reduced in place;
// rank and pivot columns are exposed for nullspace extraction.
class RowSpace {
public:
    explicit RowSpace(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<std::vector<Rat>>& rows() const { return rows_; }

    // Reduces v against the current rows; returns true (and absorbs it) when v
    // is independent of them.
    bool insert(std::vector<Rat> v) {
        if (v.size() != dim_) throw std::invalid_argument("RowSpace: dimension mismatch");
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rat& lead = v[pivots_[r]];
            if (lead == 0) continue;
            Rat f = lead;  // rows are normalized to pivot 1
            for (std::size_t j = 0; j < dim_; ++j)
                if (rows_[r][j] != 0) v[j] -= f * rows_[r][j];
        }
        std::size_t p = 0;
        while (p < dim_ && v[p] == 0) ++p;
        if (p == dim_) return false;
        Rat inv = Rat(1) / v[p];
        for (auto& x : v) x *= inv;
        // keep earlier rows reduced against the new pivot
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            Rat f = rows_[r][p];
            if (f == 0) continue;
            for (std::size_t j = 0; j < dim_; ++j)
                if (v[j] != 0) rows_[r][j] -= f * v[j];
        }
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
        pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
        return true;
    }

    bool contains(std::vector<Rat> v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rat& lead = v[pivots_[r]];
            if (lead == 0) continue;
            Rat f = lead;
            for (std::size_t j = 0; j < dim_; ++j)
                if (rows_[r][j] != 0) v[j] -= f * rows_[r][j];
        }
        for (const auto& x : v)
            if (x != 0) return false;
        return true;
    }

private:
    std::size_t dim_;
    std::vector<std::vector<Rat>> rows_;
    std::vector<std::size_t> pivots_;
};

// Exact nullspace basis of an r x c matrix given as rows.
inline std::vector<std::vector<Rat>> nullspace(std::vector<std::vector<Rat>> rows, std::size_t cols) {
    std::size_t nr = rows.size();
    std::vector<std::size_t> pivotCol;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < nr; ++col) {
        std::size_t pivot = rank;
        while (pivot < nr && rows[pivot][col] == 0) ++pivot;
        if (pivot == nr) continue;
        std::swap(rows[pivot], rows[rank]);
        Rat inv = Rat(1) / rows[rank][col];
        for (auto& x : rows[rank]) x *= inv;
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            Rat f = rows[i][col];
            for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
        }
        pivotCol.push_back(col);
        ++rank;
    }
    std::vector<bool> isPivot(cols, false);
    for (auto c : pivotCol) isPivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t freeCol = 0; freeCol < cols; ++freeCol) {
        if (isPivot[freeCol]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[freeCol] = 1;
        for (std::size_t r = 0; r < rank; ++r) v[pivotCol[r]] = -rows[r][freeCol];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solves A x = b exactly; throws std::domain_error when inconsistent and
// std::invalid_argument when underdetermined.
inline std::vector<Rat> solve_unique(std::vector<std::vector<Rat>> rows, std::vector<Rat> b,
                                     std::size_t cols) {
    std::size_t nr = rows.size();
    std::vector<std::size_t> pivotCol;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < nr; ++col) {
        std::size_t pivot = rank;
        while (pivot < nr && rows[pivot][col] == 0) ++pivot;
        if (pivot == nr) continue;
        std::swap(rows[pivot], rows[rank]);
        std::swap(b[pivot], b[rank]);
        Rat inv = Rat(1) / rows[rank][col];
        for (auto& x : rows[rank]) x *= inv;
        b[rank] *= inv;
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            Rat f = rows[i][col];
            for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
            b[i] -= f * b[rank];
        }
        pivotCol.push_back(col);
        ++rank;
    }
    for (std::size_t i = rank; i < nr; ++i)
        if (b[i] != 0) throw std::domain_error("solve_unique: inconsistent system");
    if (rank < cols) throw std::invalid_argument("solve_unique: underdetermined system");
    std::vector<Rat> x(cols);
    for (std::size_t r = 0; r < rank; ++r) x[pivotCol[r]] = b[r];
    return x;
}

// Bareiss fraction-free determinant of an integer matrix.
inline Int bareiss_det(std::vector<std::vector<Int>> a) {
    std::size_t n = a.size();
    if (n == 0) return Int(1);
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && a[pivot][k] == 0) ++pivot;
            if (pivot == n) return Int(0);
            std::swap(a[pivot], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                a[i][j] /= prev;  // exact by Sylvester's identity
            }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

// Characteristic polynomial det(t I - A), exact, as coefficients c[0..d]
// (c[d] = 1). Evaluation at d+1 integer points via Bareiss determinants on the
// denominator-cleared matrix, then Lagrange interpolation.
inline std::vector<Rat> charpoly(const ExactMatrix& A) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (!A.square()) throw std::invalid_argument("charpoly: matrix not square");
    std::size_t d = A.rows();
    Int D = 1;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Int den = denominator(A(i, j));
            D = D / boost::multiprecision::gcd(D, den) * den;
        }
    // integer matrix M = D*A; det(tI - A) = det(D t I - M) / D^d
    std::vector<std::vector<Int>> M(d, std::vector<Int>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Rat v = A(i, j) * Rat(D);
            M[i][j] = numerator(v);
        }
    std::vector<Rat> xs(d + 1), ys(d + 1);
    for (std::size_t k = 0; k <= d; ++k) {
        Int t = static_cast<std::int64_t>(k);
        auto B = M;
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) B[i][j] = -M[i][j];
            B[i][i] += D * t;
        }
        Rat Dd = 1;
        for (std::size_t i = 0; i < d; ++i) Dd *= Rat(D);
        xs[k] = Rat(t);
        ys[k] = Rat(bareiss_det(B)) / Dd;
    }
    // Newton's divided differences, then expansion to monomial coefficients.
    std::vector<Rat> divided = ys;
    for (std::size_t level = 1; level <= d; ++level)
        for (std::size_t i = d; i >= level; --i) {
            divided[i] = (divided[i] - divided[i - 1]) / (xs[i] - xs[i - level]);
            if (i == level) break;
        }
    std::vector<Rat> coeff(d + 1, Rat(0));
    std::vector<Rat> basis{Rat(1)};  // prod (t - x_i) so far
    for (std::size_t k = 0; k <= d; ++k) {
        for (std::size_t j = 0; j < basis.size(); ++j) coeff[j] += divided[k] * basis[j];
        if (k < d) {
            basis.push_back(Rat(0));
            for (std::size_t j = basis.size() - 1; j > 0; --j)
                basis[j] = basis[j - 1] - xs[k] * basis[j];
            basis[0] = -xs[k] * basis[0];
        }
    }
    return coeff;
}

}  // namespace cgtk
