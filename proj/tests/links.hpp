// Simplicial and chain-level links shared by the stratified tests and the
// acceptance suite.
#ifndef IHSPACE_TESTS_LINKS_HPP
#define IHSPACE_TESTS_LINKS_HPP

#include <string>
#include <vector>

#include "ihspace/chain_complex.hpp"
#include "ihspace/simplicial_complex.hpp"
#include "ihspace/stratified.hpp"

namespace testlinks {

struct NamedLink
{
    std::string name;
    ihs::LinkSpec link;
};

/// S^2 ∨ S^3: boundaries of a 3- and a 4-simplex sharing vertex 0.
inline ihs::SimplicialComplex wedge_s2_s3()
{
    std::vector<ihs::Simplex> facets = ihs::boundary_of_simplex(3).facets();
    for (auto s : ihs::boundary_of_simplex(4).facets())
    {
        for (int& v : s)
            v = v == 0 ? 0 : v + 3;
        facets.push_back(s);
    }
    return ihs::SimplicialComplex::from_facets(facets);
}

/// Tensor model of S^2 x S^3.
inline ihs::LinkSpec s2_times_s3()
{
    return ihs::LinkSpec::from_chains(ihs::tensor(ihs::chain_complex(ihs::boundary_of_simplex(3), true),
                                                  ihs::chain_complex(ihs::boundary_of_simplex(4), true)),
                                      5);
}

/// The links named in the acceptance sweep.
inline std::vector<NamedLink> acceptance_links()
{
    std::vector<NamedLink> out;
    for (int n = 2; n <= 5; ++n)
        out.push_back({"S" + std::to_string(n), ihs::LinkSpec::from_complex(ihs::boundary_of_simplex(n + 1))});
    out.push_back({"S2xS3", s2_times_s3()});
    return out;
}

/// Acceptance links plus a few more simply connected examples.
inline std::vector<NamedLink> extended_links()
{
    auto out = acceptance_links();
    out.push_back({"S2vS3", ihs::LinkSpec::from_complex(wedge_s2_s3())});
    out.push_back({"disk", ihs::LinkSpec::from_complex(ihs::full_simplex(2))});
    out.push_back({"sd(S2)", ihs::LinkSpec::from_complex(ihs::barycentric_subdivision(ihs::boundary_of_simplex(3)))});
    out.push_back({"susp(S2vS3)", ihs::LinkSpec::from_complex(ihs::suspension(wedge_s2_s3()))});
    return out;
}

}  // namespace testlinks

#endif
