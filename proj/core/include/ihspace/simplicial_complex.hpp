#ifndef IHSPACE_SIMPLICIAL_COMPLEX_HPP
#define IHSPACE_SIMPLICIAL_COMPLEX_HPP

#include <cstddef>
#include <vector>

namespace ihs {

/// Strictly increasing vertex ids.
using Simplex = std::vector<int>;

/**
 * Finite abstract simplicial complex, closed under taking faces.
 *
 * Simplices are grouped by dimension and kept in lexicographic order; that
 * order fixes the basis of every chain group built from the complex.
 */
class SimplicialComplex
{
  public:
    SimplicialComplex() = default;

    /// Downward closure of `facets`. Each tuple is sorted; a repeated or
    /// negative vertex throws `MalformedSimplexError`. Empty tuples are
    /// ignored.
    static SimplicialComplex from_facets(const std::vector<Simplex>& facets);

    /// -1 for the empty complex.
    int dimension() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }
    bool empty() const noexcept { return by_dim_.empty(); }

    /// Simplices of dimension `dim` in lexicographic order (empty outside range).
    const std::vector<Simplex>& simplices(int dim) const;
    std::size_t count(int dim) const { return simplices(dim).size(); }
    std::size_t size() const;

    /// Position of `s` in `simplices(s.size() - 1)`, or -1 if absent.
    long index_of(const Simplex& s) const;
    bool contains(const Simplex& s) const { return index_of(s) >= 0; }

    std::vector<int> vertices() const;
    /// Largest vertex id, -1 for the empty complex.
    int max_vertex() const;

    /// Simplices not contained in a larger simplex.
    std::vector<Simplex> facets() const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b)
    {
        return a.by_dim_ == b.by_dim_;
    }

  private:
    std::vector<std::vector<Simplex>> by_dim_;
};

/// Fresh apex joined to every simplex (and the apex alone). The cone over
/// the empty complex is a point.
SimplicialComplex cone(const SimplicialComplex& k);

/// Two fresh apices, each joined to every simplex.
SimplicialComplex suspension(const SimplicialComplex& k);

/// `b` with its vertex ids offset by `a.max_vertex() + 1`, alongside `a`.
SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b);

/// Barycentric subdivision: one vertex per simplex of `k` (numbered in
/// dimension-then-lexicographic order), one simplex per chain of faces.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& k);

/// Boundary of the standard n-simplex on vertices 0..n, a triangulated
/// (n-1)-sphere. `boundary_of_simplex(0)` is the empty complex.
SimplicialComplex boundary_of_simplex(int n);

/// Full n-simplex on vertices 0..n.
SimplicialComplex full_simplex(int n);

}  // namespace ihs

#endif
