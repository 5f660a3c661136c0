#ifndef MRDKIT_LINALG_HPP
#define MRDKIT_LINALG_HPP

// Dense linear algebra over any field type exposing add/sub/mul/inv on
// integer-encoded elements (zero = 0, one = 1).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace mrdkit::linalg {

template <class F>
concept FieldOps = requires(const F& f, std::uint64_t a) {
    { f.add(a, a) };
    { f.sub(a, a) };
    { f.mul(a, a) };
    { f.inv(a) };
};

template <class T>
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<T> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, T{0}) {}

    T& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }

    void append_row(const std::vector<T>& row) {
        if (rows == 0) cols = row.size();
        data.insert(data.end(), row.begin(), row.end());
        ++rows;
    }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data.begin() + static_cast<std::ptrdiff_t>(i * cols),
                              data.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols));
    }

    bool operator==(const Matrix&) const = default;
};

template <class T>
Matrix<T> transpose(const Matrix<T>& m) {
    Matrix<T> t(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
    return t;
}

template <FieldOps F, class T>
Matrix<T> multiply(const F& f, const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const T aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                c(i, j) = static_cast<T>(f.add(c(i, j), f.mul(aik, b(k, j))));
        }
    return c;
}

/// In-place reduced row echelon form. Returns the pivot columns (one per nonzero row).
template <FieldOps F, class T>
std::vector<std::size_t> row_reduce(const F& f, Matrix<T>& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t piv = r;
        while (piv < m.rows && m(piv, c) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(r, j));
        const auto s = f.inv(m(r, c));
        for (std::size_t j = c; j < m.cols; ++j) m(r, j) = static_cast<T>(f.mul(m(r, j), s));
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || m(i, c) == 0) continue;
            const auto factor = m(i, c);
            for (std::size_t j = c; j < m.cols; ++j)
                m(i, j) = static_cast<T>(f.sub(m(i, j), f.mul(factor, m(r, j))));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <FieldOps F, class T>
std::size_t rank(const F& f, Matrix<T> m) {
    return row_reduce(f, m).size();
}

/// Basis (as rows) of { x : m x = 0 }.
template <FieldOps F, class T>
Matrix<T> nullspace(const F& f, Matrix<T> m) {
    const auto pivots = row_reduce(f, m);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    Matrix<T> out(0, m.cols);
    out.cols = m.cols;
    for (std::size_t free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<T> v(m.cols, T{0});
        v[free] = T{1};
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = static_cast<T>(f.sub(0, m(i, free)));
        out.append_row(v);
    }
    return out;
}

template <FieldOps F, class T>
std::optional<Matrix<T>> inverse(const F& f, const Matrix<T>& m) {
    const std::size_t n = m.rows;
    Matrix<T> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = T{1};
    }
    const auto pivots = row_reduce(f, aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    Matrix<T> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

/// Incrementally maintained row echelon basis; answers span membership.
template <FieldOps F, class T>
class Echelon {
public:
    Echelon(const F& f, std::size_t cols) : f_(&f), cols_(cols) {}

    std::size_t rank() const noexcept { return rows_.size(); }

    /// Reduces v against the basis in place; returns true if v reduced to zero.
    bool reduce(std::vector<T>& v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const auto c = pivots_[i];
            if (v[c] == 0) continue;
            const auto factor = v[c];
            for (std::size_t j = c; j < cols_; ++j)
                v[j] = static_cast<T>(f_->sub(v[j], f_->mul(factor, rows_[i][j])));
        }
        for (auto x : v)
            if (x != 0) return false;
        return true;
    }

    bool contains(std::vector<T> v) const { return reduce(v); }

    /// Adds v if independent of the current basis; returns whether it was added.
    bool insert(std::vector<T> v) {
        if (reduce(v)) return false;
        std::size_t c = 0;
        while (v[c] == 0) ++c;
        const auto s = f_->inv(v[c]);
        for (std::size_t j = c; j < cols_; ++j) v[j] = static_cast<T>(f_->mul(v[j], s));
        rows_.push_back(std::move(v));
        pivots_.push_back(c);
        return true;
    }

private:
    const F* f_;
    std::size_t cols_;
    std::vector<std::vector<T>> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace mrdkit::linalg

#endif // MRDKIT_LINALG_HPP
