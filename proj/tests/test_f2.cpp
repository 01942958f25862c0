#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "steenrod/f2.hpp"

using namespace steenrod;

namespace {

// Independent rank oracle: textbook elimination on a bool grid.
int rank_oracle(std::vector<std::vector<int>> m)
{
    if (m.empty())
        return 0;
    size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    for (size_t c = 0; c < cols; ++c) {
        size_t p = rows;
        for (size_t r = rank; r < rows; ++r)
            if (m[r][c]) {
                p = r;
                break;
            }
        if (p == rows)
            continue;
        std::swap(m[p], m[size_t(rank)]);
        for (size_t r = 0; r < rows; ++r)
            if (int(r) != rank && m[r][c])
                for (size_t k = 0; k < cols; ++k)
                    m[r][k] ^= m[size_t(rank)][k];
        ++rank;
    }
    return rank;
}

F2Matrix random_matrix(std::mt19937& rng, int rows, int cols)
{
    F2Matrix m(rows, cols);
    std::bernoulli_distribution coin(0.4);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (coin(rng))
                m.set(r, c, true);
    return m;
}

} // namespace

TEST_CASE("identity and zero maps")
{
    F2Matrix id = F2Matrix::identity(5);
    CHECK(id.rank() == 5);
    CHECK(id.kernel_basis().empty());

    F2Matrix z(4, 3);
    CHECK(z.rank() == 0);
    CHECK(z.kernel_basis().size() == 3);
}

TEST_CASE("rank-nullity over random matrices")
{
    std::mt19937 rng(20240517);
    for (int trial = 0; trial < 200; ++trial) {
        int rows = 1 + trial % 9, cols = 1 + (trial * 7) % 11;
        F2Matrix m = random_matrix(rng, rows, cols);
        std::vector<std::vector<int>> dense(rows, std::vector<int>(cols, 0));
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                dense[r][c] = m.get(r, c);
        int rk = m.rank();
        CHECK(rk == rank_oracle(dense));
        CHECK(rk + int(m.kernel_basis().size()) == cols);
        for (const F2Vec& v : m.kernel_basis())
            CHECK(m.apply(v).is_zero());
    }
}

TEST_CASE("random 5x3 matrix satisfies dim ker + rank = 3")
{
    std::mt19937 rng(7);
    F2Matrix m = random_matrix(rng, 5, 3);
    CHECK(m.rank() + int(m.kernel_basis().size()) == 3);
}

TEST_CASE("solve finds witnesses exactly for image vectors")
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        F2Matrix m = random_matrix(rng, 6, 4);
        F2Vec x(4);
        for (int i = 0; i < 4; ++i)
            x.set(i, rng() & 1);
        F2Vec b = m.apply(x);
        auto sol = m.solve(b);
        REQUIRE(sol.has_value());
        CHECK(m.apply(*sol) == b);
    }
    // An inconsistent system.
    F2Matrix m(2, 1);
    m.set(0, 0, true);
    m.set(1, 0, true);
    F2Vec b(2);
    b.set(0, true);
    CHECK(!m.solve(b).has_value());
}

TEST_CASE("matrix product matches composition")
{
    std::mt19937 rng(3);
    F2Matrix a = random_matrix(rng, 5, 4);
    F2Matrix b = random_matrix(rng, 4, 6);
    F2Matrix ab = a * b;
    for (int c = 0; c < 6; ++c)
        CHECK(ab.col(c) == a.apply(b.col(c)));
}

TEST_CASE("deterministic elimination: repeated runs agree")
{
    std::mt19937 rng(41);
    F2Matrix m = random_matrix(rng, 8, 8);
    F2Matrix m1 = m, m2 = m;
    CHECK(m1.rref() == m2.rref());
    CHECK(m1 == m2);
}

TEST_CASE("subspace insert, membership, complement")
{
    F2Subspace s(4);
    F2Vec a(4), b(4), c(4);
    a.set(0, true);
    a.set(2, true);
    b.set(2, true);
    c.set(0, true);
    CHECK(s.insert(a));
    CHECK(s.insert(b));
    CHECK(!s.insert(c));   // a + b
    CHECK(s.contains(c));
    auto comp = s.complement();
    REQUIRE(comp.size() == 2);
    CHECK(comp[0] == 1);
    CHECK(comp[1] == 3);
}
