#include <catch2/catch_amalgamated.hpp>

#include "ihspace/catalog.hpp"
#include "ihspace/chain_complex.hpp"
#include "ihspace/errors.hpp"
#include "oracles.hpp"

using namespace ihs;

TEST_CASE("catalog lookups", "[catalog]")
{
    const Catalog& c = Catalog::builtin();
    CHECK(c.ordinary_homology("Y").betti == GradedBetti{{4, 1}, {5, 1}, {9, 1}});
    CHECK(c.ordinary_homology("Y").dimension == 9);
    CHECK(c.ordinary_homology("sphere3").betti == GradedBetti{{3, 1}});
    CHECK(c.ordinary_homology("sphere0").betti == GradedBetti{{0, 1}});
    CHECK(c.ordinary_homology("qh-su2-double").betti == GradedBetti{{4, 1}});
    CHECK(c.ordinary_homology("su3-universal-implosion").betti.is_zero());

    try
    {
        c.get("SU(4)");
        FAIL("expected a lookup error");
    }
    catch (const LookupError& e)
    {
        CHECK(std::string(e.what()).find("sphere3") != std::string::npos);
    }
    CHECK_THROWS_AS(c.link_spec("su2-universal-implosion"), std::invalid_argument);
    CHECK_THROWS_AS(c.run_example("sphere2", Perversity::lower_middle(10)), std::invalid_argument);
}

TEST_CASE("sphere entries match their complexes", "[catalog]")
{
    const Catalog& c = Catalog::builtin();
    for (int n = 0; n <= 6; ++n)
    {
        const auto& e = c.get("sphere" + std::to_string(n));
        const auto& k = std::get<SimplicialComplex>(e.model);
        CHECK(k.dimension() == n);
        CHECK(c.ordinary_homology(e.name).betti == GradedBetti{{n, 1}});
        CHECK(e.simply_connected == (n >= 2));
    }
}

TEST_CASE("SU(3) ranks agree with the tensor model of S^3 x S^5", "[catalog]")
{
    const auto s3 = chain_complex(boundary_of_simplex(4), true);
    const auto s5 = chain_complex(boundary_of_simplex(6), true);
    const GradedBetti expected(oracle::reduce(oracle::kunneth(oracle::unreduce({{3, 1}}), oracle::unreduce({{5, 1}}))));
    CHECK(Catalog::builtin().ordinary_homology("su3").betti == expected);
    CHECK(betti(tensor(s3, s5)) == expected);
}

TEST_CASE("examples", "[catalog]")
{
    const Catalog& c = Catalog::builtin();

    const auto su3 = c.run_example("su3-universal-implosion", Perversity::lower_middle(10));
    CHECK(su3.cutoff == 5);
    REQUIRE(su3.ih);
    CHECK(*su3.ih == GradedBetti{{4, 1}});
    CHECK(su3.hi == GradedBetti{{5, 1}, {9, 1}});
    CHECK(su3.differing == std::set<int>{4, 5, 9});

    const auto su2 = c.run_example("su2-universal-implosion", Perversity::lower_middle(10));
    CHECK(su2.cutoff == 2);
    CHECK(su2.ih->is_zero());
    CHECK(su2.hi == GradedBetti{{3, 1}});

    const auto qh = c.run_example("qh-su2-double", Perversity::lower_middle(10));
    CHECK_FALSE(qh.ih.has_value());
    REQUIRE(qh.ordinary);
    CHECK(*qh.ordinary == GradedBetti{{4, 1}});
    CHECK(qh.hi == GradedBetti{{3, 1}});
    CHECK(qh.differing == std::set<int>{3, 4});

    const std::string text = format_report(su3);
    CHECK(text.find("IH:\n4: 1\n") != std::string::npos);
    CHECK(text.find("HI:\n5: 1\n9: 1\n") != std::string::npos);
    CHECK(text.find("differ: 4 5 9") != std::string::npos);
    CHECK(format_report(su2).find("IH:\n(zero)\n") != std::string::npos);
}

TEST_CASE("catalog output is deterministic", "[catalog]")
{
    const Catalog& c = Catalog::builtin();
    CHECK(c.to_json() == c.to_json());
    CHECK(c.names().front() == "sphere0");
    const auto a = format_report(c.run_example("su3-universal-implosion", Perversity::upper_middle(10)));
    const auto b = format_report(c.run_example("su3-universal-implosion", Perversity::upper_middle(10)));
    CHECK(a == b);
}
