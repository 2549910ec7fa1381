#include "ihspace/stratified.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "ihspace/errors.hpp"

namespace ihs {

LinkSpec::LinkSpec(GradedBetti betti, int dimension, bool simply_connected, std::optional<ChainComplex> chains)
    : betti_(std::move(betti)), dimension_(dimension), simply_connected_(simply_connected),
      chains_(std::move(chains))
{
    if (dimension_ < 1)
        throw std::invalid_argument("link dimension must be at least 1");
    if (!betti_.is_zero() && betti_.max_supported() > dimension_)
        throw std::invalid_argument("link Betti numbers supported above the link dimension");
    if (simply_connected_ && betti_[1] != 0)
        throw std::invalid_argument("link asserted simply connected but H̃_1 has rank " +
                                    std::to_string(betti_[1]));
    betti_.set_top_degree(dimension_);
}

LinkSpec LinkSpec::from_betti(GradedBetti betti, int dimension, bool simply_connected)
{
    return LinkSpec(std::move(betti), dimension, simply_connected, std::nullopt);
}

LinkSpec LinkSpec::from_complex(const SimplicialComplex& k, bool simply_connected)
{
    ChainComplex chains = chain_complex(k, true);
    GradedBetti b = ihs::betti(chains);
    return LinkSpec(std::move(b), k.dimension(), simply_connected, std::move(chains));
}

LinkSpec LinkSpec::from_chains(ChainComplex reduced_chains, int dimension, bool simply_connected)
{
    if (!reduced_chains.augmented())
        throw std::invalid_argument("link chain model must be augmented (reduced)");
    if (reduced_chains.max_degree() != dimension)
        throw std::invalid_argument("link chain model top degree " + std::to_string(reduced_chains.max_degree()) +
                                    " differs from the link dimension " + std::to_string(dimension));
    GradedBetti b = ihs::betti(reduced_chains);
    return LinkSpec(std::move(b), dimension, simply_connected, std::move(reduced_chains));
}

std::vector<std::string> LinkSpec::hypothesis_notes() const
{
    std::vector<std::string> notes;
    if (!simply_connected_)
    {
        if (betti_[1] != 0)
            notes.push_back("outside the closed-form hypotheses: H̃_1(L) has rank " + std::to_string(betti_[1]));
        else
            notes.push_back("outside the closed-form hypotheses: L not asserted simply connected (H̃_1(L) = 0)");
    }
    if (!connected())
        notes.push_back("warning: L is disconnected; degree 0 reports H̃_0(L) = " + std::to_string(betti_[0]));
    return notes;
}

GradedBetti ih_open_cone(const ConeSpaceSpec& spec, const Perversity& p)
{
    const int l = spec.link.dimension();
    const int k = cutoff_degree(l, p);
    GradedBetti out;
    for (const auto& [degree, rank] : spec.link.betti().ranks())
        if (degree < k)
            out.set(degree, rank);
    out.set_top_degree(l + 1);
    return out;
}

GradedBetti hi_open_cone(const ConeSpaceSpec& spec, const Perversity& p)
{
    const int l = spec.link.dimension();
    const int k = cutoff_degree(l, p);
    GradedBetti out;
    for (const auto& [degree, rank] : spec.link.betti().ranks())
        if (!(degree > 0 && degree < k))
            out.set(degree, rank);
    out.set_top_degree(l + 1);
    return out;
}

GradedBetti hi_suspension(const SuspensionSpaceSpec& spec, const Perversity& p)
{
    const int l = spec.link.dimension();
    const int k = cutoff_degree(l, p);
    const GradedBetti& link = spec.link.betti();
    GradedBetti out;
    for (int j = 0; j <= std::max(l, k) + 1; ++j)
    {
        if (j > 0 && j < k)
            out.set(j, link[j - 1]);
        else if (j == k)
            out.set(j, link[j] + link[j - 1]);
        else
            out.set(j, link[j]);
    }
    out.set_top_degree(l + 1);
    return out;
}

IsolatedSingularityResult hi_isolated_singularity(const BlowupData& data, int k)
{
    if (k < 0)
        throw DomainError("isolated-singularity formula needs k >= 0");
    IsolatedSingularityResult result;
    for (const auto& [degree, rank] : data.relative.ranks())
        if (degree < k)
            result.betti.set(degree, rank);
    for (const auto& [degree, rank] : data.blowup.ranks())
        if (degree > k)
            result.betti.set(degree, rank);
    result.betti.set(k, data.blowup[k] + data.connecting_rank_at_k.value_or(0));
    result.assumes_zero_connecting_rank = !data.connecting_rank_at_k.has_value();
    result.betti.set_top_degree(std::max({k, data.blowup.top_degree(), data.relative.top_degree()}));
    return result;
}

GradedBetti hi_cone_chain_model(const ChainComplex& reduced_link, int link_dim, const Perversity& p)
{
    const int k = cutoff_degree(link_dim, p);
    const Truncation moore = truncate(reduced_link, k);
    GradedBetti out = betti(mapping_cone(moore.inclusion));
    return out;
}

GradedBetti hi_cone_chain_model(const SimplicialComplex& link, const Perversity& p)
{
    return hi_cone_chain_model(chain_complex(link, true), link.dimension(), p);
}

GradedBetti hi_suspension_chain_model(const ChainComplex& reduced_link, int link_dim, const Perversity& p)
{
    const int k = cutoff_degree(link_dim, p);
    const Truncation moore = truncate(reduced_link, k);
    const ChainComplex& t = moore.complex;
    const ChainComplex source = direct_sum(t, t);

    // (a, b) -> f(a) + f(b): each component is [f_d | f_d].
    std::vector<RationalMatrix> components;
    const int lo = source.min_degree();
    for (int d = lo; d <= source.max_degree(); ++d)
    {
        const RationalMatrix f = moore.inclusion.component(d);
        components.push_back(f.hconcat(f));
    }
    const ChainMap glue(source, reduced_link, lo, std::move(components));
    return betti(mapping_cone(glue));
}

GradedBetti hi_suspension_chain_model(const SimplicialComplex& link, const Perversity& p)
{
    return hi_suspension_chain_model(chain_complex(link, true), link.dimension(), p);
}

TheoryComparison compare_theories(const ConeSpaceSpec& spec, const Perversity& p)
{
    TheoryComparison report;
    report.cutoff = cutoff_degree(spec.link.dimension(), p);
    report.ih = ih_open_cone(spec, p);
    report.hi = hi_open_cone(spec, p);
    report.differing = differing_degrees(*report.ih, report.hi);
    report.notes = spec.link.hypothesis_notes();
    return report;
}

TheoryComparison compare_theories(const SuspensionSpaceSpec& spec, const Perversity& p)
{
    TheoryComparison report;
    report.cutoff = cutoff_degree(spec.link.dimension(), p);
    report.hi = hi_suspension(spec, p);
    GradedBetti ordinary = spec.link.betti().shifted(1);
    ordinary.set_top_degree(spec.link.dimension() + 1);
    report.ordinary = std::move(ordinary);
    report.differing = differing_degrees(*report.ordinary, report.hi);
    report.notes = spec.link.hypothesis_notes();
    report.notes.push_back("intersection homology of suspensions is not computed; HI is compared with H̃(susp L)");
    return report;
}

}  // namespace ihs
