// Independent reference computations used only by the tests. Nothing here
// calls into the library's elimination or homology code.
#ifndef IHSPACE_TESTS_ORACLES_HPP
#define IHSPACE_TESTS_ORACLES_HPP

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<long>>;

/// Fraction-free (Bareiss) elimination over the integers.
inline std::size_t bareiss_rank(const IntMatrix& input)
{
    if (input.empty() || input[0].empty())
        return 0;
    std::vector<std::vector<BigInt>> a;
    for (const auto& row : input)
        a.emplace_back(row.begin(), row.end());
    const std::size_t rows = a.size(), cols = a[0].size();
    BigInt prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c)
    {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i)
        {
            for (std::size_t j = c + 1; j < cols; ++j)
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

inline std::size_t binomial(std::size_t n, std::size_t k)
{
    if (k > n)
        return 0;
    std::size_t out = 1;
    for (std::size_t i = 1; i <= k; ++i)
        out = out * (n - k + i) / i;
    return out;
}

/// Unreduced Künneth convolution of two degree -> rank tables.
inline std::map<int, std::size_t> kunneth(const std::map<int, std::size_t>& a, const std::map<int, std::size_t>& b)
{
    std::map<int, std::size_t> out;
    for (const auto& [i, x] : a)
        for (const auto& [j, y] : b)
            out[i + j] += x * y;
    return out;
}

/// Reduced -> unreduced for a nonempty space: add one in degree 0.
inline std::map<int, std::size_t> unreduce(std::map<int, std::size_t> reduced)
{
    reduced[0] += 1;
    return reduced;
}

inline std::map<int, std::size_t> reduce(std::map<int, std::size_t> unreduced)
{
    if (--unreduced[0] == 0)
        unreduced.erase(0);
    return unreduced;
}

}  // namespace oracle

#endif
