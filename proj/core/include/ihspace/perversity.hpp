#ifndef IHSPACE_PERVERSITY_HPP
#define IHSPACE_PERVERSITY_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ihs {

enum class PerversityKind
{
    classical,
    extended
};

/// Result of checking an integer sequence against the perversity axioms.
struct PerversityCheck
{
    PerversityKind kind;
    /// Empty for classical sequences, otherwise the first axiom that fails.
    std::string reason;

    bool classical() const noexcept { return kind == PerversityKind::classical; }
};

/**
 * Check `values` (indexed from codimension 2) against p(2) = 0 and
 * p(k) <= p(k+1) <= p(k) + 1. Any integer sequence is acceptable as an
 * extended perversity. Throws `std::invalid_argument` on an empty sequence.
 */
PerversityCheck validate(std::span<const int> values);

/**
 * Integer sequence on codimensions 2, 3, ...
 *
 * The named families (zero, lower middle, upper middle, top) are defined at
 * every codimension by their closed forms. A classical sequence given
 * explicitly is continued past its last entry by repeating its final step.
 * Extended sequences are never extrapolated.
 */
class Perversity
{
  public:
    enum class Family
    {
        none,
        zero,
        lower_middle,
        upper_middle,
        top
    };

    static Perversity zero(int max_codim = 2);
    /// m(k) = floor((k - 2) / 2); throws DomainError if max_codim < 2.
    static Perversity lower_middle(int max_codim);
    /// n(k) = ceil((k - 2) / 2).
    static Perversity upper_middle(int max_codim);
    /// t(k) = k - 2.
    static Perversity top(int max_codim);

    /// Throws `std::invalid_argument` with the failed axiom if `values` is
    /// not classical.
    static Perversity classical(std::vector<int> values);
    static Perversity extended(std::vector<int> values);

    /// Extended perversity that is constant `value` on codimensions 2..codim.
    static Perversity constant_extended(int codim, int value);

    PerversityKind kind() const noexcept { return kind_; }
    Family family() const noexcept { return family_; }
    /// Stored values, starting at codimension 2.
    const std::vector<int>& values() const noexcept { return values_; }

    /// Value at `codim`, or nullopt where the perversity is undefined.
    std::optional<int> at(int codim) const;
    /// Value at `codim`; throws DomainError where undefined.
    int value(int codim) const;

    /// "zero", "m", "um", "top", or the comma-separated values.
    std::string label() const;

    friend bool operator==(const Perversity&, const Perversity&) = default;

  private:
    Perversity(std::vector<int> values, PerversityKind kind, Family family);

    std::vector<int> values_;
    PerversityKind kind_ = PerversityKind::classical;
    Family family_ = Family::none;
};

/// k = l - p(l + 1) for a link of dimension l. Throws DomainError if p is
/// undefined at l + 1.
int cutoff_degree(int link_dim, const Perversity& p);

/// Comparison sweep for a link of dimension l: zero, m, um, top, then the
/// extended perversities with p(l+1) = -2, ..., l+1.
std::vector<Perversity> sweep_perversities(int link_dim);

/**
 * Parse the command-line perversity syntax: `zero`, `m`, `um`, `top`, or a
 * comma-separated integer list starting at codimension 2. A list that fails
 * the classical axioms is only accepted when `allow_extended` is set.
 * `max_codim` sizes the named families. Throws `std::invalid_argument`.
 */
Perversity parse_perversity(const std::string& text, bool allow_extended, int max_codim);

}  // namespace ihs

#endif
