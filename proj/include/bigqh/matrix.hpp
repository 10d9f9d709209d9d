#ifndef BIGQH_MATRIX_HPP
#define BIGQH_MATRIX_HPP

#include <bigqh/rational.hpp>

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bigqh
{

// Dense row-major matrix over a commutative ring R. R{} must be the zero of
// the ring, R(1L) its unit, and R * Rational scalar multiplication.
template <typename R>
class Matrix
{
public:
    using value_type = R;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = R(1L);
        }
        return m;
    }

    // Matrix whose columns are the given vectors.
    static Matrix from_columns(const std::vector<std::vector<R>> &columns)
    {
        if (columns.empty()) {
            return {};
        }
        Matrix m(columns.front().size(), columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j].size() != m.rows_) {
                throw std::invalid_argument("from_columns: ragged column lengths");
            }
            for (std::size_t i = 0; i < m.rows_; ++i) {
                m(i, j) = columns[j][i];
            }
        }
        return m;
    }

    std::size_t rows() const
    {
        return rows_;
    }
    std::size_t cols() const
    {
        return cols_;
    }
    bool is_square() const
    {
        return rows_ == cols_;
    }

    R &operator()(std::size_t i, std::size_t j)
    {
        return data_[i * cols_ + j];
    }
    const R &operator()(std::size_t i, std::size_t j) const
    {
        return data_[i * cols_ + j];
    }

    std::vector<R> column(std::size_t j) const
    {
        std::vector<R> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            c[i] = (*this)(i, j);
        }
        return c;
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                t(j, i) = (*this)(i, j);
            }
        }
        return t;
    }

    template <typename F>
    auto map(F &&f) const -> Matrix<std::decay_t<decltype(f(std::declval<const R &>()))>>
    {
        Matrix<std::decay_t<decltype(f(std::declval<const R &>()))>> out(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                out(i, j) = f((*this)(i, j));
            }
        }
        return out;
    }

    bool is_zero() const
    {
        for (const auto &x : data_) {
            if (!(x == R{})) {
                return false;
            }
        }
        return true;
    }

    Matrix &operator+=(const Matrix &o)
    {
        check_same_shape(o, "addition");
        for (std::size_t k = 0; k < data_.size(); ++k) {
            data_[k] += o.data_[k];
        }
        return *this;
    }
    Matrix &operator-=(const Matrix &o)
    {
        check_same_shape(o, "subtraction");
        for (std::size_t k = 0; k < data_.size(); ++k) {
            data_[k] -= o.data_[k];
        }
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix &b)
    {
        return a += b;
    }
    friend Matrix operator-(Matrix a, const Matrix &b)
    {
        return a -= b;
    }

    friend Matrix operator*(const Matrix &a, const Matrix &b)
    {
        if (a.cols_ != b.rows_) {
            throw std::invalid_argument("matrix product: dimension mismatch (" + a.shape() + " * " + b.shape() + ")");
        }
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const R &aik = a(i, k);
                if (aik == R{}) {
                    continue;
                }
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    c(i, j) += aik * b(k, j);
                }
            }
        }
        return c;
    }

    // Scalar multiplication by a ring element.
    friend Matrix operator*(const R &s, Matrix m)
    {
        for (auto &x : m.data_) {
            x = s * x;
        }
        return m;
    }

    friend bool operator==(const Matrix &a, const Matrix &b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::string shape() const
    {
        return std::to_string(rows_) + "x" + std::to_string(cols_);
    }

private:
    void check_same_shape(const Matrix &o, const char *what) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_) {
            throw std::invalid_argument(std::string("matrix ") + what + ": dimension mismatch (" + shape() + " vs "
                                        + o.shape() + ")");
        }
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<R> data_;
};

template <typename R>
Matrix<R> mat_add(const Matrix<R> &a, const Matrix<R> &b)
{
    return a + b;
}

template <typename R>
Matrix<R> mat_mul(const Matrix<R> &a, const Matrix<R> &b)
{
    return a * b;
}

template <typename R>
Matrix<R> mat_scale(const R &s, const Matrix<R> &m)
{
    return s * m;
}

template <typename R>
std::vector<R> mat_apply(const Matrix<R> &m, const std::vector<R> &v)
{
    if (m.cols() != v.size()) {
        throw std::invalid_argument("matrix-vector product: dimension mismatch (" + m.shape() + " * "
                                    + std::to_string(v.size()) + ")");
    }
    std::vector<R> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!(v[j] == R{})) {
                out[i] += m(i, j) * v[j];
            }
        }
    }
    return out;
}

template <typename R>
R trace(const Matrix<R> &m)
{
    if (!m.is_square()) {
        throw std::invalid_argument("trace of a non-square matrix");
    }
    R t{};
    for (std::size_t i = 0; i < m.rows(); ++i) {
        t += m(i, i);
    }
    return t;
}

template <typename R>
Matrix<R> mat_power(const Matrix<R> &m, std::size_t k)
{
    Matrix<R> r = Matrix<R>::identity(m.rows());
    for (std::size_t i = 0; i < k; ++i) {
        r = r * m;
    }
    return r;
}

// Characteristic polynomial det(x*I - m) by Faddeev-LeVerrier; coefficients
// low to high, so result[n] = 1, result[n-1] = -trace, result[0] = (-1)^n det.
// When `adjugate_out` is given it receives N with m * N = -result[0] * I,
// i.e. m^{-1} = -N / result[0] whenever result[0] is invertible.
template <typename R>
std::vector<R> char_poly_faddeev(const Matrix<R> &m, Matrix<R> *adjugate_out = nullptr)
{
    if (!m.is_square()) {
        throw std::invalid_argument("characteristic polynomial of a non-square " + m.shape() + " matrix");
    }
    const std::size_t n = m.rows();
    std::vector<R> c(n + 1);
    c[n] = R(1L);
    Matrix<R> acc(n, n);  // M_k
    Matrix<R> prod(n, n); // A M_{k-1}
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k
        acc = std::move(prod);
        for (std::size_t i = 0; i < n; ++i) {
            acc(i, i) += c[n - k + 1];
        }
        prod = m * acc;
        c[n - k] = trace(prod) * make_rational(-1, static_cast<long>(k));
    }
    if (adjugate_out != nullptr) {
        *adjugate_out = std::move(acc);
    }
    return c;
}

// Division-free characteristic polynomial (Berkowitz). Same output layout as
// char_poly_faddeev.
template <typename R>
std::vector<R> char_poly_berkowitz(const Matrix<R> &m)
{
    if (!m.is_square()) {
        throw std::invalid_argument("characteristic polynomial of a non-square " + m.shape() + " matrix");
    }
    const std::size_t n = m.rows();
    if (n == 0) {
        return {R(1L)};
    }
    // Coefficients high to low while iterating.
    std::vector<R> vect{R(1L), R{} - m(0, 0)};
    for (std::size_t r = 1; r < n; ++r) {
        // Toeplitz column: 1, -a_rr, -R C, -R A C, ..., -R A^{r-1} C.
        std::vector<R> col(r);
        for (std::size_t i = 0; i < r; ++i) {
            col[i] = m(i, r);
        }
        std::vector<R> toeplitz{R(1L), R{} - m(r, r)};
        for (std::size_t p = 0; p < r; ++p) {
            R rc{};
            for (std::size_t i = 0; i < r; ++i) {
                rc += m(r, i) * col[i];
            }
            toeplitz.push_back(R{} - rc);
            std::vector<R> next(r);
            for (std::size_t i = 0; i < r; ++i) {
                for (std::size_t j = 0; j < r; ++j) {
                    next[i] += m(i, j) * col[j];
                }
            }
            col = std::move(next);
        }
        std::vector<R> out(r + 2);
        for (std::size_t i = 0; i < r + 2; ++i) {
            for (std::size_t j = 0; j <= i && j < vect.size(); ++j) {
                out[i] += toeplitz[i - j] * vect[j];
            }
        }
        vect = std::move(out);
    }
    return std::vector<R>(vect.rbegin(), vect.rend());
}

template <typename R>
R determinant(const Matrix<R> &m)
{
    const std::vector<R> c = char_poly_faddeev(m);
    return (m.rows() % 2 == 0) ? c[0] : R{} - c[0];
}

// Exact linear algebra over Q.
using RationalMatrix = Matrix<Rational>;

std::size_t rank(const RationalMatrix &m);
// Throws std::domain_error when singular.
RationalMatrix inverse(const RationalMatrix &m);

} // namespace bigqh

#endif
