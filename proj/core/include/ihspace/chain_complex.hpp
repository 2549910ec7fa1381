/**
 * Rational chain complexes and the constructions used to model
 * intersection spaces at chain level: tensor products, good truncation
 * (a chain-level Moore approximation) and algebraic mapping cones.
 */
#ifndef IHSPACE_CHAIN_COMPLEX_HPP
#define IHSPACE_CHAIN_COMPLEX_HPP

#include <cstddef>
#include <vector>

#include "ihspace/graded_betti.hpp"
#include "ihspace/rational_matrix.hpp"
#include "ihspace/simplicial_complex.hpp"

namespace ihs {

/**
 * Bounded chain complex of finite-dimensional rational vector spaces.
 *
 * Degrees run over `[min_degree(), max_degree()]`; outside that range the
 * chain groups are zero. `boundary(d)` maps degree d to degree d - 1 and has
 * shape `dim(d - 1) x dim(d)`. An augmented complex carries the augmentation
 * as its boundary into degree -1, so its homology is reduced homology.
 */
class ChainComplex
{
  public:
    /// The zero complex.
    ChainComplex() = default;

    /// `boundaries[i]` is the boundary out of degree `min_degree + i + 1`,
    /// so `boundaries.size() + 1 == dims.size()`. Shapes are checked;
    /// d∘d = 0 is not (see `is_valid()`).
    ChainComplex(int min_degree, std::vector<std::size_t> dims,
                 std::vector<RationalMatrix> boundaries, bool augmented = false);

    int min_degree() const noexcept { return min_degree_; }
    /// min_degree() - 1 for the zero complex.
    int max_degree() const noexcept { return min_degree_ + static_cast<int>(dims_.size()) - 1; }
    bool augmented() const noexcept { return augmented_; }

    std::size_t dim(int degree) const;
    /// Boundary out of `degree`; a correctly shaped zero matrix outside the
    /// stored range.
    const RationalMatrix& boundary(int degree) const;

    /// Every d∘d composite vanishes.
    bool is_valid() const;

    /// The same complex with the degree -1 augmentation term removed.
    ChainComplex without_augmentation() const;

  private:
    int min_degree_ = 0;
    std::vector<std::size_t> dims_;
    // boundaries_[i] : degree min_degree_ + i -> min_degree_ + i - 1, with
    // an extra trailing entry for the (zero) boundary into max_degree().
    std::vector<RationalMatrix> boundaries_;
    bool augmented_ = false;
};

/**
 * Degreewise linear maps `component(d) : source.dim(d) -> target.dim(d)`.
 */
class ChainMap
{
  public:
    ChainMap() = default;

    /// `components[i]` is the component in degree `min_degree + i`; degrees
    /// not covered are zero maps.
    ChainMap(ChainComplex source, ChainComplex target, int min_degree,
             std::vector<RationalMatrix> components);

    static ChainMap identity(const ChainComplex& c);

    const ChainComplex& source() const noexcept { return source_; }
    const ChainComplex& target() const noexcept { return target_; }

    /// Component in `degree`, zero of the right shape outside the stored range.
    RationalMatrix component(int degree) const;

    /// target.boundary(d) * f_d == f_{d-1} * source.boundary(d) in every degree.
    bool commutes() const;

    /// Rank of the induced map on homology in `degree`.
    std::size_t induced_rank(int degree) const;

  private:
    ChainComplex source_;
    ChainComplex target_;
    int min_degree_ = 0;
    std::vector<RationalMatrix> components_;
};

/// Simplicial chains with boundary sum_i (-1)^i d_i on ascending vertex
/// tuples. `reduced` adds the augmentation into degree -1.
ChainComplex chain_complex(const SimplicialComplex& k, bool reduced = true);

/// Homology ranks, b_d = dim C_d - rank d_d - rank d_{d+1}. For an augmented
/// complex these are reduced Betti numbers. `top_degree` of the result is
/// the complex's max degree.
GradedBetti betti(const ChainComplex& c);

/// Degreewise direct sum.
ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b);

/**
 * Tensor product over Q with the Koszul sign d(x⊗y) = dx⊗y + (-1)^|x| x⊗dy.
 *
 * Computed on the unaugmented parts; when both inputs are augmented the
 * result is augmented by the product of the two augmentations, so its
 * homology is the reduced homology of the product space.
 */
ChainComplex tensor(const ChainComplex& a, const ChainComplex& b);

/// Chain-level Moore approximation: the subcomplex together with its
/// inclusion into the original complex.
struct Truncation
{
    ChainComplex complex;
    ChainMap inclusion;
};

/**
 * Subcomplex whose homology agrees with `c` below degree k and vanishes
 * from degree k on.
 *
 * Degrees below k are kept whole. Degree k keeps only the basis elements
 * whose boundaries form a basis of the boundary space B_{k-1} (the first
 * independent columns of d_k), so d_k is injective there and nothing above
 * degree k survives. For k <= 0 the result is the zero complex; for
 * k > c.max_degree() the inclusion is the identity.
 */
Truncation truncate(const ChainComplex& c, int k);

/// Algebraic mapping cone: cone_n = source_{n-1} ⊕ target_n with
/// d(a, b) = (-da, f(a) + db). Augmented iff the target is.
ChainComplex mapping_cone(const ChainMap& f);

}  // namespace ihs

#endif
