#include <catch2/catch_amalgamated.hpp>

#include "ihspace/errors.hpp"
#include "ihspace/perversity.hpp"

using namespace ihs;

TEST_CASE("validate classifies sequences", "[perversity]")
{
    const std::vector<int> zero{0, 0, 0, 0};
    CHECK(validate(zero).classical());

    const std::vector<int> shifted{1, 1, 2};
    const auto a = validate(shifted);
    CHECK(a.kind == PerversityKind::extended);
    CHECK(a.reason == "p(2) ≠ 0");

    const std::vector<int> jump{0, 2};
    const auto b = validate(jump);
    CHECK(b.kind == PerversityKind::extended);
    CHECK(b.reason == "growth step 2 at k=3");

    const std::vector<int> down{0, 1, 0};
    CHECK(validate(down).reason == "decrease at k=4");

    CHECK_THROWS_AS(validate(std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("lower middle perversity", "[perversity]")
{
    const Perversity m = Perversity::lower_middle(12);
    CHECK(m.value(2) == 0);
    CHECK(m.value(4) == 1);
    CHECK(m.value(10) == 4);
    CHECK(validate(m.values()).classical());
    CHECK(m.values() == std::vector<int>{0, 0, 1, 1, 2, 2, 3, 3, 4, 4, 5});
    // Families continue by their closed form past the tabulated range.
    CHECK(m.value(40) == 19);
    CHECK_THROWS_AS(Perversity::lower_middle(1), DomainError);
}

TEST_CASE("standard families are classical and ordered", "[perversity][property]")
{
    for (int n = 2; n <= 30; ++n)
    {
        const auto z = Perversity::zero(n);
        const auto m = Perversity::lower_middle(n);
        const auto um = Perversity::upper_middle(n);
        const auto t = Perversity::top(n);
        for (const auto* p : {&z, &m, &um, &t})
            CHECK(validate(p->values()).classical());
        for (int k = 2; k <= n; ++k)
        {
            CHECK(z.value(k) <= m.value(k));
            CHECK(m.value(k) <= um.value(k));
            CHECK(um.value(k) <= t.value(k));
        }
    }
}

TEST_CASE("cutoff degree", "[perversity]")
{
    CHECK(cutoff_degree(9, Perversity::lower_middle(10)) == 5);
    CHECK(cutoff_degree(3, Perversity::lower_middle(4)) == 2);
    CHECK(cutoff_degree(2, Perversity::extended({0, -1})) == 3);

    // Raw extended sequences are not extrapolated.
    CHECK_THROWS_AS(cutoff_degree(5, Perversity::extended({0, -1})), DomainError);
    CHECK_FALSE(Perversity::extended({3}).at(3).has_value());

    // Monotone nonincreasing in p(l+1).
    int previous = cutoff_degree(4, Perversity::constant_extended(5, -5));
    for (int v = -4; v <= 6; ++v)
    {
        const int k = cutoff_degree(4, Perversity::constant_extended(5, v));
        CHECK(k <= previous);
        CHECK(k == 4 - v);
        previous = k;
    }
}

TEST_CASE("explicit classical sequences continue by their final step", "[perversity]")
{
    const auto p = Perversity::classical({0, 0, 1});
    CHECK(p.value(5) == 2);
    CHECK(p.value(7) == 4);
    const auto q = Perversity::classical({0, 1, 1});
    CHECK(q.value(9) == 1);
    CHECK(Perversity::classical({0}).value(6) == 0);
    CHECK_THROWS_AS(Perversity::classical({1}), std::invalid_argument);
}

TEST_CASE("command-line perversity syntax", "[perversity]")
{
    CHECK(parse_perversity("m", false, 10) == Perversity::lower_middle(10));
    CHECK(parse_perversity("zero", false, 4).family() == Perversity::Family::zero);
    CHECK(parse_perversity("um", false, 4).value(5) == 2);
    CHECK(parse_perversity("top", false, 4).value(5) == 3);
    CHECK(parse_perversity("0,0,1", false, 4).kind() == PerversityKind::classical);

    CHECK_THROWS_AS(parse_perversity("0,-1", false, 4), std::invalid_argument);
    const auto ext = parse_perversity("0,-1", true, 4);
    CHECK(ext.kind() == PerversityKind::extended);
    CHECK(ext.value(3) == -1);
    CHECK(ext.label() == "0,-1");

    CHECK_THROWS_AS(parse_perversity("middle", true, 4), std::invalid_argument);
    CHECK_THROWS_AS(parse_perversity("0,,1", true, 4), std::invalid_argument);
    CHECK_THROWS_AS(parse_perversity("", true, 4), std::invalid_argument);
}
