#pragma once

// Test-only oracles, kept independent of the library code paths they check.

#include <vector>

#include "steenrod/milnor.hpp"

namespace oracles {

using steenrod::Expo;
using steenrod::SqElement;

// Multinomial coefficient parity: odd iff the binary expansions of the
// arguments are pairwise disjoint (Lucas).
inline bool multinomial_odd(const std::vector<int>& parts)
{
    long acc = 0;
    for (int x : parts) {
        if (acc & x)
            return false;
        acc |= x;
    }
    return true;
}

namespace detail {

    struct MatrixEnum {
        const Expo& r;
        const Expo& s;
        std::vector<std::vector<int>> x;   // x[i][j], 1-based in both slots
        std::vector<int> col_used;
        SqElement result;

        MatrixEnum(const Expo& rr, const Expo& ss)
            : r(rr), s(ss),
              x(rr.size() + 1, std::vector<int>(ss.size() + 1, 0)),
              col_used(ss.size() + 1, 0)
        {
        }

        void finish()
        {
            size_t rows = r.size(), cols = s.size();
            // Border entries forced by the row and column constraints.
            for (size_t j = 1; j <= cols; ++j)
                x[0][j] = s[j - 1] - col_used[j];
            // Parity of the product of antidiagonal multinomials.
            Expo t(rows + cols, 0);
            for (size_t n = 1; n <= rows + cols; ++n) {
                std::vector<int> diag;
                int total = 0;
                for (size_t i = 0; i <= n; ++i) {
                    size_t j = n - i;
                    if (i <= rows && j <= cols) {
                        diag.push_back(x[i][j]);
                        total += x[i][j];
                    }
                }
                if (!multinomial_odd(diag))
                    return;
                t[n - 1] = total;
            }
            steenrod::canonicalize(t);
            result.toggle(std::move(t));
        }

        // Fill x[i][j] for i,j >= 1 cell by cell; x[i][0] is the row slack.
        void fill(size_t i, size_t j, int row_left)
        {
            size_t rows = r.size(), cols = s.size();
            if (i > rows) {
                finish();
                return;
            }
            if (j > cols) {
                x[i][0] = row_left;
                fill(i + 1, 1, i + 1 <= rows ? r[i] : 0);
                return;
            }
            int weight = 1 << j;
            int cap = row_left / weight;
            for (int v = 0; v <= cap; ++v) {
                if (col_used[j] + v > s[j - 1])
                    break;
                x[i][j] = v;
                col_used[j] += v;
                fill(i, j + 1, row_left - v * weight);
                col_used[j] -= v;
            }
            x[i][j] = 0;
        }
    };

} // namespace detail

// Milnor's matrix formula for the product Sq(R) Sq(S), enumerated directly.
inline SqElement milnor_matrix_product(const Expo& r, const Expo& s)
{
    detail::MatrixEnum e(r, s);
    e.fill(1, 1, r.empty() ? 0 : r[0]);
    return e.result;
}

} // namespace oracles
