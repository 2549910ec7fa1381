/**
 * Dimension bookkeeping for long exact sequences.
 *
 * A sequence T_0 -> T_1 -> ... -> T_{n-1} is treated as a window padded
 * with zeros on both sides, so exactness at every term reads
 *
 *     dim T_i = rank(arrow into T_i) + rank(arrow out of T_i).
 *
 * Unknown dimensions and ranks are solved for exactly. The solver never
 * guesses: if the data does not pin a value down, the remaining linear
 * constraints are reported instead.
 */
#ifndef IHSPACE_EXACT_SEQUENCE_HPP
#define IHSPACE_EXACT_SEQUENCE_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ihspace/graded_betti.hpp"

namespace ihs {

/// A term is either a known dimension or a named unknown. Terms sharing a
/// name are the same unknown.
struct SequenceTerm
{
    std::variant<std::size_t, std::string> value;

    static SequenceTerm known(std::size_t dim) { return {dim}; }
    static SequenceTerm unknown(std::string name) { return {std::move(name)}; }

    bool is_known() const { return std::holds_alternative<std::size_t>(value); }
    std::string label() const;
};

struct SequenceArrow
{
    std::optional<std::size_t> rank;
    /// Marks a connecting homomorphism; informational only.
    bool connecting = false;
    /// Name used in residual constraints; defaults to r<position>.
    std::string name;
};

struct ExactSequenceSpec
{
    std::vector<SequenceTerm> terms;
    /// arrows[i] : terms[i] -> terms[i + 1]
    std::vector<SequenceArrow> arrows;

    /// Throws `std::invalid_argument` unless there are at least three
    /// terms and exactly one arrow between consecutive terms.
    void check() const;
};

enum class SolveStatus
{
    solved,
    underdetermined,
    inconsistent
};

struct SequenceSolution
{
    SolveStatus status = SolveStatus::solved;
    /// Per term / per arrow; nullopt where undetermined.
    std::vector<std::optional<std::size_t>> term_dims;
    std::vector<std::optional<std::size_t>> arrow_ranks;
    /// Values of the named unknowns that were determined.
    std::map<std::string, std::size_t> assignments;
    /// Linear relations left among undetermined quantities, e.g. "X - r2 = 1".
    /// Unnamed arrow ranks are called r0, r1, ... by position.
    std::vector<std::string> residual_constraints;
    /// Set when inconsistent; names the term (and its neighbours) where
    /// exactness cannot hold.
    std::string inconsistency;
};

SequenceSolution solve_exact(const ExactSequenceSpec& spec);

/// True if every term satisfies dim = rank(in) + rank(out) and every rank is
/// bounded by the dimensions it connects. Requires a fully solved sequence.
bool exactness_holds(const SequenceSolution& solution);

/// Alternating sum of the term dimensions; zero for any exact sequence
/// padded by zeros. Requires all term dimensions.
long alternating_sum(const SequenceSolution& solution);

/**
 * Mayer-Vietoris data for X = A ∪ B in reduced homology:
 *
 *   ... -> H̃_j(A∩B) -> H̃_j(A) ⊕ H̃_j(B) -> H̃_j(X) -> H̃_{j-1}(A∩B) -> ...
 *
 * `intersection_ranks[j]` is the rank of the first arrow in degree j;
 * omitted degrees are unknown (they are forced to zero only when one side
 * of the arrow vanishes).
 */
struct MVProblem
{
    GradedBetti betti_a;
    GradedBetti betti_b;
    GradedBetti betti_intersection;
    std::map<int, std::optional<std::size_t>> intersection_ranks;
};

struct MVResult
{
    SolveStatus status = SolveStatus::solved;
    /// Reduced Betti numbers of A ∪ B (only meaningful when solved).
    GradedBetti union_betti;
    /// The exact sequence that was solved, from the top degree down.
    ExactSequenceSpec sequence;
    SequenceSolution solution;
};

MVResult mayer_vietoris(const MVProblem& problem);

}  // namespace ihs

#endif
