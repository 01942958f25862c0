#include "steenrod/f2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace steenrod {

int F2Vec::first_set() const
{
    for (size_t k = 0; k < w_.size(); ++k)
        if (w_[k])
            return int(k) * 64 + std::countr_zero(w_[k]);
    return -1;
}

F2Matrix F2Matrix::identity(int n)
{
    F2Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.set(i, i, true);
    return m;
}

F2Matrix F2Matrix::from_rows(const std::vector<F2Vec>& rows, int cols)
{
    F2Matrix m(int(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i)
        m.data_[i] = rows[i];
    return m;
}

F2Vec F2Matrix::col(int c) const
{
    F2Vec v(rows_);
    for (int r = 0; r < rows_; ++r)
        if (get(r, c))
            v.set(r, true);
    return v;
}

F2Matrix F2Matrix::transpose() const
{
    F2Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r) {
        const auto& w = data_[r].words();
        for (size_t k = 0; k < w.size(); ++k) {
            uint64_t x = w[k];
            while (x) {
                int c = int(k) * 64 + std::countr_zero(x);
                t.set(c, r, true);
                x &= x - 1;
            }
        }
    }
    return t;
}

F2Matrix F2Matrix::operator*(const F2Matrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("F2Matrix::operator*: shape mismatch");
    F2Matrix out(rows_, rhs.cols_);
    for (int r = 0; r < rows_; ++r) {
        const auto& w = data_[r].words();
        for (size_t k = 0; k < w.size(); ++k) {
            uint64_t x = w[k];
            while (x) {
                int c = int(k) * 64 + std::countr_zero(x);
                out.data_[r] ^= rhs.data_[c];
                x &= x - 1;
            }
        }
    }
    return out;
}

F2Vec F2Matrix::apply(const F2Vec& x) const
{
    if (x.size() != cols_)
        throw std::invalid_argument("F2Matrix::apply: shape mismatch");
    F2Vec y(rows_);
    for (int r = 0; r < rows_; ++r) {
        uint64_t acc = 0;
        const auto& a = data_[r].words();
        const auto& b = x.words();
        for (size_t k = 0; k < a.size(); ++k)
            acc ^= a[k] & b[k];
        if (std::popcount(acc) & 1)
            y.set(r, true);
    }
    return y;
}

std::vector<int> F2Matrix::rref()
{
    std::vector<int> pivots;
    int lead = 0;
    for (int c = 0; c < cols_ && lead < rows_; ++c) {
        int p = -1;
        for (int r = lead; r < rows_; ++r)
            if (data_[r].get(c)) {
                p = r;
                break;
            }
        if (p < 0)
            continue;
        std::swap(data_[lead], data_[p]);
        for (int r = 0; r < rows_; ++r)
            if (r != lead && data_[r].get(c))
                data_[r] ^= data_[lead];
        pivots.push_back(c);
        ++lead;
    }
    return pivots;
}

int F2Matrix::rank() const
{
    F2Matrix tmp = *this;
    return int(tmp.rref().size());
}

std::vector<F2Vec> F2Matrix::kernel_basis() const
{
    F2Matrix tmp = *this;
    std::vector<int> pivots = tmp.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots)
        is_pivot[c] = true;
    std::vector<F2Vec> out;
    for (int c = 0; c < cols_; ++c) {
        if (is_pivot[c])
            continue;
        F2Vec v(cols_);
        v.set(c, true);
        for (size_t i = 0; i < pivots.size(); ++i)
            if (tmp.get(int(i), c))
                v.set(pivots[i], true);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<F2Vec> F2Matrix::solve(const F2Vec& b) const
{
    if (b.size() != rows_)
        throw std::invalid_argument("F2Matrix::solve: shape mismatch");
    // Augmented system, reduced with the same pivot rule.
    F2Matrix aug(rows_, cols_ + 1);
    for (int r = 0; r < rows_; ++r) {
        aug.data_[r] = F2Vec(cols_ + 1);
        for (size_t k = 0; k < data_[r].words().size(); ++k)
            aug.data_[r].words()[k] = data_[r].words()[k];
        if (b.get(r))
            aug.data_[r].set(cols_, true);
    }
    std::vector<int> pivots;
    int lead = 0;
    for (int c = 0; c < cols_ && lead < rows_; ++c) {
        int p = -1;
        for (int r = lead; r < rows_; ++r)
            if (aug.data_[r].get(c)) {
                p = r;
                break;
            }
        if (p < 0)
            continue;
        std::swap(aug.data_[lead], aug.data_[p]);
        for (int r = 0; r < rows_; ++r)
            if (r != lead && aug.data_[r].get(c))
                aug.data_[r] ^= aug.data_[lead];
        pivots.push_back(c);
        ++lead;
    }
    for (int r = lead; r < rows_; ++r)
        if (aug.data_[r].get(cols_))
            return std::nullopt;
    F2Vec x(cols_);
    for (size_t i = 0; i < pivots.size(); ++i)
        if (aug.data_[int(i)].get(cols_))
            x.set(pivots[i], true);
    return x;
}

void F2Matrix::append_row(const F2Vec& v)
{
    if (v.size() != cols_)
        throw std::invalid_argument("F2Matrix::append_row: shape mismatch");
    data_.push_back(v);
    ++rows_;
}

std::string F2Matrix::str() const
{
    std::string s;
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c)
            s += get(r, c) ? '1' : '0';
        s += '\n';
    }
    return s;
}

bool F2Subspace::insert(F2Vec v)
{
    reduce(v);
    int p = v.first_set();
    if (p < 0)
        return false;
    // Keep rows reduced against the newcomer as well.
    for (size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i].get(p))
            rows_[i] ^= v;
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    size_t idx = size_t(it - pivots_.begin());
    pivots_.insert(it, p);
    rows_.insert(rows_.begin() + idx, std::move(v));
    return true;
}

void F2Subspace::reduce(F2Vec& v) const
{
    for (size_t i = 0; i < rows_.size(); ++i)
        if (v.get(pivots_[i]))
            v ^= rows_[i];
}

std::vector<int> F2Subspace::complement() const
{
    std::vector<bool> is_pivot(dim_, false);
    for (int p : pivots_)
        is_pivot[p] = true;
    std::vector<int> out;
    for (int i = 0; i < dim_; ++i)
        if (!is_pivot[i])
            out.push_back(i);
    return out;
}

} // namespace steenrod
