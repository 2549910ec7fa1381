#include <catch2/catch_amalgamated.hpp>

#include "ihspace/chain_complex.hpp"
#include "ihspace/errors.hpp"
#include "ihspace/simplicial_complex.hpp"
#include "oracles.hpp"

using namespace ihs;

namespace {

GradedBetti reduced_betti(const SimplicialComplex& k)
{
    return betti(chain_complex(k, true));
}

GradedBetti from_map(const std::map<int, std::size_t>& m)
{
    return GradedBetti(m);
}

/// Small complexes used by the property checks.
std::vector<SimplicialComplex> sample_complexes()
{
    std::vector<SimplicialComplex> out;
    out.push_back(SimplicialComplex{});
    for (int n = 1; n <= 5; ++n)
        out.push_back(boundary_of_simplex(n));
    out.push_back(full_simplex(3));
    out.push_back(disjoint_union(boundary_of_simplex(3), boundary_of_simplex(2)));
    // Minimal 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
    std::vector<Simplex> torus;
    for (int i = 0; i < 7; ++i)
    {
        torus.push_back({i, (i + 1) % 7, (i + 3) % 7});
        torus.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    out.push_back(SimplicialComplex::from_facets(torus));
    return out;
}

}  // namespace

TEST_CASE("from_facets closes downward", "[complexes]")
{
    const SimplicialComplex s3 = boundary_of_simplex(4);
    std::size_t expected = 0;
    for (std::size_t i = 1; i <= 4; ++i)
        expected += oracle::binomial(5, i);
    CHECK(s3.size() == expected);
    CHECK(s3.size() == 30);
    CHECK(s3.dimension() == 3);
    CHECK(SimplicialComplex::from_facets(s3.facets()) == s3);
    CHECK(SimplicialComplex::from_facets({{0}}).size() == 1);
    CHECK(SimplicialComplex::from_facets({}).empty());
    CHECK(SimplicialComplex::from_facets({{2, 0, 1}}).contains({0, 1, 2}));
}

TEST_CASE("from_facets rejects malformed tuples", "[complexes]")
{
    CHECK_THROWS_AS(SimplicialComplex::from_facets({{0, 1, 1}}), MalformedSimplexError);
    CHECK_THROWS_AS(SimplicialComplex::from_facets({{0, -1}}), MalformedSimplexError);
}

TEST_CASE("simplicial chain complexes", "[complexes]")
{
    const ChainComplex c = chain_complex(boundary_of_simplex(4), true);
    CHECK(c.min_degree() == -1);
    CHECK(c.max_degree() == 3);
    CHECK(c.dim(0) == 5);
    CHECK(c.dim(1) == 10);
    CHECK(c.dim(2) == 10);
    CHECK(c.dim(3) == 5);
    CHECK(c.is_valid());

    CHECK(betti(chain_complex(full_simplex(0), true)).is_zero());
    CHECK(betti(chain_complex(SimplicialComplex{}, true)) == GradedBetti{{-1, 1}});
    CHECK(betti(chain_complex(SimplicialComplex{}, false)).is_zero());
    CHECK(betti(chain_complex(boundary_of_simplex(3), false)) == GradedBetti{{0, 1}, {2, 1}});
}

TEST_CASE("Betti numbers of spheres and unions", "[complexes]")
{
    CHECK(reduced_betti(boundary_of_simplex(4)) == GradedBetti{{3, 1}});

    const auto s5 = boundary_of_simplex(6);
    const GradedBetti one = reduced_betti(s5);
    const auto additive = oracle::reduce([&] {
        auto m = oracle::unreduce(one.ranks());
        for (const auto& [d, r] : oracle::unreduce(one.ranks()))
            m[d] += r;
        return m;
    }());
    CHECK(additive == std::map<int, std::size_t>{{0, 1}, {5, 2}});
    CHECK(reduced_betti(disjoint_union(s5, s5)) == from_map(additive));
}

TEST_CASE("cones are acyclic", "[complexes]")
{
    CHECK(reduced_betti(cone(boundary_of_simplex(3))).is_zero());
    CHECK(cone(SimplicialComplex{}) == full_simplex(0));
    CHECK(reduced_betti(cone(boundary_of_simplex(1))).is_zero());
    for (const auto& k : sample_complexes())
    {
        CHECK(reduced_betti(cone(k)).is_zero());
        CHECK(chain_complex(cone(k)).is_valid());
    }
}

TEST_CASE("suspension shifts reduced homology", "[complexes]")
{
    CHECK(reduced_betti(suspension(boundary_of_simplex(3))) == GradedBetti{{3, 1}});
    CHECK(reduced_betti(suspension(boundary_of_simplex(1))) == GradedBetti{{1, 1}});
    CHECK(reduced_betti(suspension(boundary_of_simplex(4))) == GradedBetti{{4, 1}});
    for (const auto& k : sample_complexes())
    {
        const GradedBetti b = reduced_betti(k);
        const GradedBetti s = reduced_betti(suspension(k));
        for (int j = 0; j <= k.dimension() + 2; ++j)
            CHECK(s[j] == b[j - 1]);
        CHECK(chain_complex(suspension(k)).is_valid());
    }
}

TEST_CASE("disjoint union", "[complexes]")
{
    const auto s2 = boundary_of_simplex(3);
    CHECK(disjoint_union(s2, SimplicialComplex{}) == s2);
    CHECK(reduced_betti(disjoint_union(full_simplex(0), full_simplex(0))) == GradedBetti{{0, 1}});
    const auto u = disjoint_union(s2, s2);
    CHECK(u.max_vertex() == 7);
    CHECK(reduced_betti(u) == GradedBetti{{0, 1}, {2, 2}});
}

TEST_CASE("tensor products satisfy Kunneth", "[complexes]")
{
    const auto s1 = chain_complex(boundary_of_simplex(2), true);
    const ChainComplex torus = tensor(s1, s1);
    CHECK(torus.is_valid());
    CHECK(torus.augmented());
    CHECK(betti(torus) == GradedBetti{{1, 2}, {2, 1}});

    const auto point = chain_complex(full_simplex(0), true);
    const auto s2 = chain_complex(boundary_of_simplex(3), true);
    CHECK(betti(tensor(point, s2)) == betti(s2));

    const auto samples = sample_complexes();
    for (std::size_t i = 1; i < samples.size(); ++i)
        for (std::size_t j = i; j < samples.size() && j < i + 3; ++j)
        {
            const auto a = chain_complex(samples[i], false);
            const auto b = chain_complex(samples[j], false);
            const ChainComplex t = tensor(a, b);
            INFO("pair " << i << ", " << j);
            CHECK(t.is_valid());
            CHECK(betti(t) == from_map(oracle::kunneth(betti(a).ranks(), betti(b).ranks())));
        }
}

TEST_CASE("S3 x S5 tensor model matches the rational homology of SU(3)", "[complexes][slow]")
{
    const auto s3 = chain_complex(boundary_of_simplex(4), true);
    const auto s5 = chain_complex(boundary_of_simplex(6), true);
    const auto expected = oracle::reduce(oracle::kunneth(oracle::unreduce({{3, 1}}), oracle::unreduce({{5, 1}})));
    CHECK(expected == std::map<int, std::size_t>{{3, 1}, {5, 1}, {8, 1}});
    CHECK(betti(tensor(s3, s5)) == from_map(expected));
}

TEST_CASE("good truncation is a chain-level Moore approximation", "[complexes]")
{
    const auto s3 = chain_complex(boundary_of_simplex(4), true);

    const Truncation low = truncate(s3, 2);
    CHECK(betti(low.complex).is_zero());
    CHECK(low.inclusion.commutes());

    const Truncation all = truncate(s3, 4);
    CHECK(betti(all.complex) == GradedBetti{{3, 1}});
    CHECK(all.inclusion.induced_rank(3) == 1);

    const Truncation none = truncate(s3, 0);
    CHECK(none.complex.max_degree() < none.complex.min_degree());
    CHECK(betti(mapping_cone(none.inclusion)) == betti(s3));

    const auto s3xs2 = tensor(s3, chain_complex(boundary_of_simplex(3), true));  // S^3 x S^2
    const Truncation mid = truncate(s3xs2, 4);
    CHECK(betti(mid.complex) == GradedBetti{{2, 1}, {3, 1}});
    CHECK(mid.inclusion.commutes());

    for (const auto& k : sample_complexes())
    {
        const ChainComplex c = chain_complex(k, true);
        const GradedBetti full = betti(c);
        for (int cut = -1; cut <= k.dimension() + 2; ++cut)
        {
            const Truncation t = truncate(c, cut);
            INFO("dim " << k.dimension() << " cut " << cut);
            CHECK(t.complex.is_valid());
            CHECK(t.inclusion.commutes());
            const GradedBetti tb = betti(t.complex);
            if (cut <= 0)
            {
                // Empty Moore approximation by convention.
                CHECK(t.complex.max_degree() < t.complex.min_degree());
                continue;
            }
            for (int d = -1; d <= k.dimension(); ++d)
            {
                if (d < cut)
                {
                    CHECK(tb[d] == full[d]);
                    CHECK(t.inclusion.induced_rank(d) == full[d]);
                }
                else
                    CHECK(tb[d] == 0);
            }
        }
    }
}

TEST_CASE("mapping cones", "[complexes]")
{
    const auto s3 = chain_complex(boundary_of_simplex(4), true);
    CHECK(betti(mapping_cone(ChainMap::identity(s3))).is_zero());

    const auto s2 = chain_complex(boundary_of_simplex(3), true);
    const auto point = chain_complex(full_simplex(0), true);
    const ChainMap zero(s2, point, -1, {});
    REQUIRE(zero.commutes());
    CHECK(betti(mapping_cone(zero)) == GradedBetti{{3, 1}});

    const ChainComplex cone_of_truncation = mapping_cone(truncate(s3, 2).inclusion);
    CHECK(cone_of_truncation.is_valid());
    CHECK(betti(cone_of_truncation) == GradedBetti{{3, 1}});
}

TEST_CASE("mapping cone homology fits the long exact sequence", "[complexes][property]")
{
    // H(cone)_i = coker(f_*)_i ⊕ ker(f_*)_{i-1}, with ranks of f_* computed
    // on cycles.
    for (const auto& k : sample_complexes())
    {
        const ChainComplex c = chain_complex(k, true);
        const GradedBetti hc = betti(c);
        for (int cut = 0; cut <= k.dimension() + 1; ++cut)
        {
            const Truncation t = truncate(c, cut);
            const GradedBetti hs = betti(t.complex);
            const ChainComplex cone_complex = mapping_cone(t.inclusion);
            CHECK(cone_complex.is_valid());
            const GradedBetti h = betti(cone_complex);
            for (int i = -1; i <= k.dimension() + 1; ++i)
            {
                const std::size_t r_i = t.inclusion.induced_rank(i);
                const std::size_t r_prev = t.inclusion.induced_rank(i - 1);
                CHECK(h[i] == (hc[i] - r_i) + (hs[i - 1] - r_prev));
            }
        }
    }
}

TEST_CASE("Betti numbers are invariant under barycentric subdivision", "[complexes]")
{
    for (int n : {3, 4})
    {
        const auto k = boundary_of_simplex(n);
        const auto sd = barycentric_subdivision(k);
        CHECK(sd.count(0) == k.size());
        CHECK(reduced_betti(sd) == reduced_betti(k));
    }
}

TEST_CASE("chain complex shapes are validated", "[complexes]")
{
    CHECK_THROWS_AS(ChainComplex(0, {2, 3}, {RationalMatrix(3, 2)}), std::invalid_argument);
    CHECK_THROWS_AS(ChainComplex(0, {2, 3}, {}), std::invalid_argument);
    const ChainComplex bad(0, {1, 1, 1}, {RationalMatrix{{1}}, RationalMatrix{{1}}});
    CHECK_FALSE(bad.is_valid());
}

TEST_CASE("seven-vertex torus", "[complexes]")
{
    const auto torus = sample_complexes().back();
    CHECK(torus.count(0) == 7);
    CHECK(torus.count(1) == 21);
    CHECK(torus.count(2) == 14);
    CHECK(reduced_betti(torus) == GradedBetti{{1, 2}, {2, 1}});
}
