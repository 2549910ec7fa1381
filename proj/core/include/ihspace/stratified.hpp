/**
 * Intersection homology and homology of intersection spaces for spaces
 * with isolated singularities whose links are simply connected manifolds:
 * open cones c°(L) and suspensions susp(L).
 *
 * Two routes are provided for HI. The closed forms only need the reduced
 * Betti numbers of the link. The chain models build the intersection space
 * at chain level (good truncation as the Moore approximation, then an
 * algebraic mapping cone) and need an actual chain complex for the link.
 * The two routes are independent and are checked against each other in
 * the tests.
 */
#ifndef IHSPACE_STRATIFIED_HPP
#define IHSPACE_STRATIFIED_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ihspace/chain_complex.hpp"
#include "ihspace/graded_betti.hpp"
#include "ihspace/perversity.hpp"
#include "ihspace/simplicial_complex.hpp"

namespace ihs {

/**
 * A link L: its reduced Betti numbers, its dimension l, and optionally a
 * reduced chain model.
 *
 * Construction enforces l >= 1, a chain model whose top degree equals l,
 * and H̃_1 = 0 whenever simple connectivity is asserted. Simple
 * connectivity itself cannot be certified from chain data.
 */
class LinkSpec
{
  public:
    static LinkSpec from_betti(GradedBetti betti, int dimension, bool simply_connected = true);
    static LinkSpec from_complex(const SimplicialComplex& k, bool simply_connected = true);
    /// `reduced_chains` must be augmented.
    static LinkSpec from_chains(ChainComplex reduced_chains, int dimension, bool simply_connected = true);

    const GradedBetti& betti() const noexcept { return betti_; }
    int dimension() const noexcept { return dimension_; }
    bool simply_connected_asserted() const noexcept { return simply_connected_; }
    const std::optional<ChainComplex>& chains() const noexcept { return chains_; }

    /// H̃_1 = 0 as computed (or given).
    bool h1_vanishes() const { return betti_[1] == 0; }
    bool connected() const { return betti_[0] == 0 && betti_[-1] == 0; }

    /// Human-readable notes when the link falls outside the hypotheses of
    /// the closed forms (not asserted simply connected, disconnected).
    std::vector<std::string> hypothesis_notes() const;

  private:
    LinkSpec(GradedBetti betti, int dimension, bool simply_connected, std::optional<ChainComplex> chains);

    GradedBetti betti_;
    int dimension_ = 0;
    bool simply_connected_ = true;
    std::optional<ChainComplex> chains_;
};

/// The open cone c°(L); its singular stratum is the cone point.
struct ConeSpaceSpec
{
    LinkSpec link;
};

/// susp(L); its singular stratum is the two suspension points, with trivial
/// link bundle.
struct SuspensionSpaceSpec
{
    LinkSpec link;
};

/// Homology of the blow-up M̄ of a space with one isolated singularity.
struct BlowupData
{
    GradedBetti blowup;    ///< H̃(M̄)
    GradedBetti relative;  ///< H̃(M̄, ∂M̄)
    /// Rank of H̃_k(M̄, ∂M̄) -> H̃_{k-1}(∂M̄); unknown when not supplied.
    std::optional<std::size_t> connecting_rank_at_k;
};

struct IsolatedSingularityResult
{
    GradedBetti betti;
    /// Set when degree k was computed with the connecting rank taken as 0.
    bool assumes_zero_connecting_rank = false;
};

/// IH̃_j(c°L) = H̃_j(L) for j < k = l - p(l+1), zero otherwise.
GradedBetti ih_open_cone(const ConeSpaceSpec& spec, const Perversity& p);

/// HI_j(c°L) = 0 for 0 < j < k, H̃_j(L) otherwise (including j = 0).
GradedBetti hi_open_cone(const ConeSpaceSpec& spec, const Perversity& p);

/// HI_j(susp L) = H̃_{j-1}(L) for 0 < j < k, H̃_k(L) ⊕ H̃_{k-1}(L) at j = k,
/// H̃_j(L) otherwise.
GradedBetti hi_suspension(const SuspensionSpaceSpec& spec, const Perversity& p);

/// Relative Betti numbers below k, blow-up Betti numbers above k, and
/// rank H̃_k(M̄) + connecting rank in degree k.
IsolatedSingularityResult hi_isolated_singularity(const BlowupData& data, int k);

/// Reduced homology of the mapping cone of the truncation inclusion
/// L_{<k} -> L, with k = l - p(l+1).
GradedBetti hi_cone_chain_model(const ChainComplex& reduced_link, int link_dim, const Perversity& p);
GradedBetti hi_cone_chain_model(const SimplicialComplex& link, const Perversity& p);

/// Reduced homology of the mapping cone of (a, b) -> f(a) + f(b) from two
/// copies of the truncation L_{<k} to L.
GradedBetti hi_suspension_chain_model(const ChainComplex& reduced_link, int link_dim, const Perversity& p);
GradedBetti hi_suspension_chain_model(const SimplicialComplex& link, const Perversity& p);

/// Side-by-side report of two homology theories on one space.
struct TheoryComparison
{
    int cutoff = 0;
    /// Intersection homology; only available for cones.
    std::optional<GradedBetti> ih;
    GradedBetti hi;
    /// Ordinary reduced homology of the space; reported for suspensions,
    /// where it is the comparison partner of HI.
    std::optional<GradedBetti> ordinary;
    /// Degrees where HI differs from IH (cones) or from ordinary homology
    /// (suspensions).
    std::set<int> differing;
    std::vector<std::string> notes;
};

TheoryComparison compare_theories(const ConeSpaceSpec& spec, const Perversity& p);
TheoryComparison compare_theories(const SuspensionSpaceSpec& spec, const Perversity& p);

}  // namespace ihs

#endif
