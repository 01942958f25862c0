#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace steenrod {

/// Dense vector over F2, bit-packed into 64-bit words.
class F2Vec {
public:
    F2Vec() = default;
    explicit F2Vec(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }
    bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i, bool v)
    {
        uint64_t m = uint64_t(1) << (i & 63);
        if (v)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }
    void flip(int i) { w_[i >> 6] ^= uint64_t(1) << (i & 63); }

    void operator^=(const F2Vec& rhs)
    {
        for (size_t k = 0; k < w_.size(); ++k)
            w_[k] ^= rhs.w_[k];
    }
    bool is_zero() const
    {
        for (uint64_t x : w_)
            if (x)
                return false;
        return true;
    }
    /// Index of the lowest set bit, or -1.
    int first_set() const;
    bool operator==(const F2Vec& rhs) const { return n_ == rhs.n_ && w_ == rhs.w_; }

    const std::vector<uint64_t>& words() const { return w_; }
    std::vector<uint64_t>& words() { return w_; }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

/// Dense matrix over F2 with bit-packed rows.
///
/// Row reduction always picks as pivot the lowest-index remaining row with a
/// nonzero entry in the current column, so every derived basis (kernel,
/// image, complements) is reproducible for a fixed input ordering.
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows, F2Vec(cols)) {}
    static F2Matrix identity(int n);
    static F2Matrix from_rows(const std::vector<F2Vec>& rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool get(int r, int c) const { return data_[r].get(c); }
    void set(int r, int c, bool v) { data_[r].set(c, v); }
    const F2Vec& row(int r) const { return data_[r]; }
    F2Vec& row(int r) { return data_[r]; }

    F2Vec col(int c) const;
    F2Matrix transpose() const;
    /// Matrix product; columns of the result are images of the rhs columns.
    F2Matrix operator*(const F2Matrix& rhs) const;
    F2Vec apply(const F2Vec& x) const;
    bool operator==(const F2Matrix& rhs) const { return cols_ == rhs.cols_ && data_ == rhs.data_; }

    /// In-place reduced row echelon form; returns the pivot columns in order.
    std::vector<int> rref();
    int rank() const;
    /// Basis of {x : A x = 0}, one row per basis vector, in the canonical
    /// free-column order produced by rref.
    std::vector<F2Vec> kernel_basis() const;
    /// One solution of A x = b, if any.
    std::optional<F2Vec> solve(const F2Vec& b) const;

    void append_row(const F2Vec& v);
    std::string str() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<F2Vec> data_;
};

/// Row space in canonical (rref) form, for membership and quotient work.
class F2Subspace {
public:
    explicit F2Subspace(int ambient_dim) : dim_(ambient_dim) {}

    int ambient_dim() const { return dim_; }
    int rank() const { return int(rows_.size()); }
    /// Inserts v if independent; returns true when the rank grew.
    bool insert(F2Vec v);
    bool contains(F2Vec v) const { reduce(v); return v.is_zero(); }
    /// Reduces v modulo the subspace (zeroes the pivot coordinates).
    void reduce(F2Vec& v) const;
    const std::vector<F2Vec>& basis() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }
    /// Standard basis indices spanning a complement, lowest indices first.
    std::vector<int> complement() const;

private:
    int dim_;
    std::vector<F2Vec> rows_;   // reduced, sorted by pivot
    std::vector<int> pivots_;
};

} // namespace steenrod
