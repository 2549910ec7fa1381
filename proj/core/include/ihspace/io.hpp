/**
 * File formats shared by the command-line tool and external tooling.
 *
 * Facet file: one simplex per line as whitespace-separated nonnegative
 * vertex ids; blank lines and lines starting with '#' are ignored.
 *
 * Betti table (JSON):
 *
 *     {"dim": 9, "reduced": true, "betti": {"4": 1, "5": 1, "9": 1}}
 *
 * Mayer-Vietoris problem (JSON): three Betti tables and the ranks of
 * H̃_j(A∩B) -> H̃_j(A) ⊕ H̃_j(B); unknown ranks are null or omitted.
 *
 *     {"A": {...}, "B": {...}, "intersection": {...},
 *      "ranks": {"0": 1, "3": null}}
 *
 * Exact sequence text: one entry per line, alternating
 * `term <name|integer>` and `arrow rank=<integer|?> [connecting]`.
 */
#ifndef IHSPACE_IO_HPP
#define IHSPACE_IO_HPP

#include <istream>
#include <string>
#include <vector>

#include "ihspace/exact_sequence.hpp"
#include "ihspace/graded_betti.hpp"
#include "ihspace/simplicial_complex.hpp"

namespace ihs {

/// Throws ParseError carrying the offending line number.
std::vector<Simplex> parse_facets(std::istream& in);
std::vector<Simplex> read_facet_file(const std::string& path);

struct BettiTableDocument
{
    int dim = 0;
    bool reduced = true;
    GradedBetti betti;

    friend bool operator==(const BettiTableDocument&, const BettiTableDocument&) = default;
};

/// Throws ParseError on malformed JSON or when the table violates its
/// invariants (negative or non-numeric degrees, degree above `dim`).
BettiTableDocument parse_betti_table(const std::string& json_text);
/// Compact, deterministic serialization (degrees in increasing order).
std::string to_json(const BettiTableDocument& doc);

MVProblem parse_mv_problem(const std::string& json_text);

ExactSequenceSpec parse_sequence(std::istream& in);

std::string read_text_file(const std::string& path);

}  // namespace ihs

#endif
