#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "ihspace/chain_complex.hpp"
#include "ihspace/rational_matrix.hpp"
#include "ihspace/simplicial_complex.hpp"
#include "oracles.hpp"

using namespace ihs;

namespace {

RationalMatrix to_rational(const oracle::IntMatrix& m, std::size_t cols)
{
    RationalMatrix out(m.size(), cols);
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c)
            out(r, c) = m[r][c];
    return out;
}

oracle::IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols)
{
    std::uniform_int_distribution<long> entry(-3, 3);
    oracle::IntMatrix m(rows, std::vector<long>(cols));
    for (auto& row : m)
        for (auto& x : row)
            x = entry(rng);
    return m;
}

}  // namespace

TEST_CASE("rank of small matrices", "[linalg]")
{
    CHECK(rank(RationalMatrix()) == 0);
    CHECK(rank(RationalMatrix::identity(3)) == 3);
    CHECK(rank(RationalMatrix(2, 5)) == 0);

    // Edge-vertex incidence of the triangle 01, 02, 12 (rows: vertices).
    // Hand reduction: row0 + row1 + row2 = 0 and any two rows are
    // independent, so the rank is 2.
    const RationalMatrix d1{{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}};
    CHECK(rank(d1) == 2);
    CHECK(rank(d1) == oracle::bareiss_rank({{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}}));
    CHECK(rank(chain_complex(full_simplex(2), false).boundary(1)) == 2);
}

TEST_CASE("kernel basis", "[linalg]")
{
    CHECK(kernel_basis(RationalMatrix::identity(2)).empty());
    CHECK(kernel_basis(RationalMatrix(2, 3)).size() == 3);

    // ∂2 of the boundary of the tetrahedron: 6 edges x 4 triangles.
    const RationalMatrix d2 = chain_complex(boundary_of_simplex(3), true).boundary(2);
    REQUIRE(d2.rows() == 6);
    REQUIRE(d2.cols() == 4);
    const auto basis = kernel_basis(d2);
    REQUIRE(basis.size() == 1);
    CHECK((d2.apply(basis[0]) == RationalVector(6)));

    // Enumeration oracle: the cycles with coefficients in {-1, 0, 1} are
    // exactly 0 and ±z, i.e. a one-dimensional cycle space.
    std::size_t cycles = 0;
    for (int code = 0; code < 81; ++code)
    {
        RationalVector v(4);
        int c = code;
        for (auto& x : v)
        {
            x = c % 3 - 1;
            c /= 3;
        }
        if (d2.apply(v) == RationalVector(6))
            ++cycles;
    }
    CHECK(cycles == 3);
}

TEST_CASE("rank agrees with a fraction-free oracle on random integer matrices", "[linalg][property]")
{
    std::mt19937 rng(20261016);
    std::uniform_int_distribution<std::size_t> size(0, 9);
    for (int trial = 0; trial < 300; ++trial)
    {
        const std::size_t rows = size(rng), cols = size(rng);
        auto m = random_matrix(rng, rows, cols);
        // Make some matrices rank deficient by copying rows.
        if (rows >= 3 && trial % 3 == 0)
            for (std::size_t c = 0; c < cols; ++c)
                m[rows - 1][c] = m[0][c] - 2 * m[1][c];
        const RationalMatrix q = to_rational(m, cols);
        const std::size_t r = rank(q);
        INFO("trial " << trial << " shape " << rows << "x" << cols);
        CHECK(r == oracle::bareiss_rank(m));
        CHECK(r == rank(q.transpose()));
        CHECK(r <= std::min(rows, cols));

        const auto kernel = kernel_basis(q);
        CHECK(r + kernel.size() == cols);
        for (const auto& v : kernel)
            CHECK((q.apply(v) == RationalVector(rows)));
        if (!kernel.empty())
            CHECK(rank(RationalMatrix::from_columns(kernel, cols)) == kernel.size());
    }
}

TEST_CASE("independent columns span the column space", "[linalg]")
{
    const RationalMatrix m{{1, 2, 0, 1}, {0, 0, 1, 1}, {1, 2, 1, 2}};
    const auto cols = independent_columns(m);
    CHECK(cols == std::vector<std::size_t>{0, 2});
    CHECK(rank(m.select_columns(cols)) == rank(m));
}

TEST_CASE("matrix arithmetic", "[linalg]")
{
    const RationalMatrix a{{1, 2}, {3, 4}};
    const RationalMatrix b{{0, 1}, {1, 0}};
    CHECK((a * b == RationalMatrix{{2, 1}, {4, 3}}));
    CHECK((a + (-a)).is_zero());
    CHECK((a.hconcat(b) == RationalMatrix{{1, 2, 0, 1}, {3, 4, 1, 0}}));
    CHECK_THROWS_AS(a * RationalMatrix(3, 1), std::invalid_argument);
    RationalMatrix half(1, 1);
    half(0, 0) = Rational(2, 4);
    CHECK(half(0, 0) == Rational(1, 2));
    CHECK(boost::multiprecision::denominator(half(0, 0)) == 2);
}
