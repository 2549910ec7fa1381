#ifndef IHSPACE_GRADED_BETTI_HPP
#define IHSPACE_GRADED_BETTI_HPP

#include <cstddef>
#include <initializer_list>
#include <map>
#include <ostream>
#include <set>
#include <utility>

namespace ihs {

/**
 * Finitely supported ranks indexed by degree.
 *
 * Only positive ranks are stored. Degrees are >= -1; degree -1 appears only
 * for the reduced homology of the empty space. `top_degree()` is an upper
 * bound on the support (usually the dimension of the space the ranks were
 * computed from) and is ignored by equality.
 */
class GradedBetti
{
  public:
    GradedBetti() = default;
    GradedBetti(std::initializer_list<std::pair<const int, std::size_t>> ranks);
    explicit GradedBetti(const std::map<int, std::size_t>& ranks, int top_degree = -1);

    /// Rank in `degree`, 0 outside the support.
    std::size_t operator[](int degree) const;
    void set(int degree, std::size_t rank);

    const std::map<int, std::size_t>& ranks() const noexcept { return ranks_; }
    bool is_zero() const noexcept { return ranks_.empty(); }
    int top_degree() const noexcept { return top_degree_; }
    void set_top_degree(int degree);

    /// Smallest / largest supported degree; only valid when nonzero.
    int min_supported() const { return ranks_.begin()->first; }
    int max_supported() const { return ranks_.rbegin()->first; }

    /// Alternating sum of ranks.
    long euler_characteristic() const;

    /// Ranks moved up by `by` degrees; entries landing below -1 are dropped.
    GradedBetti shifted(int by) const;

    friend bool operator==(const GradedBetti& a, const GradedBetti& b) { return a.ranks_ == b.ranks_; }
    friend std::ostream& operator<<(std::ostream& os, const GradedBetti& b);

  private:
    std::map<int, std::size_t> ranks_;
    int top_degree_ = -1;
};

/// Degrees where `a` and `b` have different ranks.
std::set<int> differing_degrees(const GradedBetti& a, const GradedBetti& b);

/// Graded sum, degree by degree.
GradedBetti operator+(const GradedBetti& a, const GradedBetti& b);

}  // namespace ihs

#endif
