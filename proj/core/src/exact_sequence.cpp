#include "ihspace/exact_sequence.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ihspace/rational_matrix.hpp"

namespace ihs {

std::string SequenceTerm::label() const
{
    if (is_known())
        return std::to_string(std::get<std::size_t>(value));
    return std::get<std::string>(value);
}

void ExactSequenceSpec::check() const
{
    if (terms.size() < 3)
        throw std::invalid_argument("exact sequence needs at least three terms");
    if (arrows.size() + 1 != terms.size())
        throw std::invalid_argument("exact sequence needs exactly one arrow between consecutive terms");
}

namespace {

/// Sum of coeffs[v] * x_v == rhs.
struct Row
{
    std::vector<Rational> coeffs;
    Rational rhs;

    bool trivial() const
    {
        return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c.is_zero(); });
    }
};

class Elimination
{
  public:
    explicit Elimination(std::size_t nvars) : nvars_(nvars) {}

    /// Adds `row`; returns false if it contradicts the rows already present.
    bool add(Row row)
    {
        for (const auto& [pivot, existing] : rows_)
        {
            if (row.coeffs[pivot].is_zero())
                continue;
            const Rational factor = row.coeffs[pivot];
            for (std::size_t v = 0; v < nvars_; ++v)
                row.coeffs[v] -= factor * existing.coeffs[v];
            row.rhs -= factor * existing.rhs;
        }
        std::size_t pivot = 0;
        while (pivot < nvars_ && row.coeffs[pivot].is_zero())
            ++pivot;
        if (pivot == nvars_)
            return row.rhs.is_zero();

        const Rational inv = 1 / row.coeffs[pivot];
        for (auto& c : row.coeffs)
            c *= inv;
        row.rhs *= inv;
        for (auto& [p, existing] : rows_)
        {
            if (existing.coeffs[pivot].is_zero())
                continue;
            const Rational factor = existing.coeffs[pivot];
            for (std::size_t v = 0; v < nvars_; ++v)
                existing.coeffs[v] -= factor * row.coeffs[v];
            existing.rhs -= factor * row.rhs;
        }
        rows_.emplace(pivot, std::move(row));
        return true;
    }

    /// Value of `v` if a row pins it down alone.
    std::optional<Rational> value(std::size_t v) const
    {
        auto it = rows_.find(v);
        if (it == rows_.end())
            return std::nullopt;
        for (std::size_t u = 0; u < nvars_; ++u)
            if (u != v && !it->second.coeffs[u].is_zero())
                return std::nullopt;
        return it->second.rhs;
    }

    const std::map<std::size_t, Row>& rows() const { return rows_; }

  private:
    std::size_t nvars_;
    std::map<std::size_t, Row> rows_;
};

std::string format_row(const Row& row, const std::vector<std::string>& names)
{
    std::ostringstream out;
    bool first = true;
    for (std::size_t v = 0; v < row.coeffs.size(); ++v)
    {
        const Rational& c = row.coeffs[v];
        if (c.is_zero())
            continue;
        const Rational mag = c < 0 ? Rational(-c) : c;
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        if (mag != 1)
            out << mag << '*';
        out << names[v];
        first = false;
    }
    out << " = " << row.rhs;
    return out.str();
}

std::string describe_term(const ExactSequenceSpec& spec, std::size_t i)
{
    std::string out = "exactness fails at term " + std::to_string(i) + " (";
    out += i > 0 ? spec.terms[i - 1].label() + " -> " : "0 -> ";
    out += spec.terms[i].label();
    out += i + 1 < spec.terms.size() ? " -> " + spec.terms[i + 1].label() : " -> 0";
    return out + ")";
}

std::optional<std::size_t> as_count(const Rational& x)
{
    if (x < 0 || boost::multiprecision::denominator(x) != 1)
        return std::nullopt;
    return static_cast<std::size_t>(boost::multiprecision::numerator(x));
}

}  // namespace

SequenceSolution solve_exact(const ExactSequenceSpec& spec)
{
    spec.check();
    const std::size_t n = spec.terms.size();

    // Variables: named unknown terms first (in order of appearance), then
    // unknown arrow ranks.
    std::vector<std::string> names;
    std::map<std::string, std::size_t> term_var;
    for (const auto& t : spec.terms)
        if (!t.is_known())
        {
            const auto& name = std::get<std::string>(t.value);
            if (term_var.emplace(name, names.size()).second)
                names.push_back(name);
        }
    std::vector<std::optional<std::size_t>> arrow_var(spec.arrows.size());
    for (std::size_t a = 0; a < spec.arrows.size(); ++a)
        if (!spec.arrows[a].rank)
        {
            arrow_var[a] = names.size();
            names.push_back(spec.arrows[a].name.empty() ? "r" + std::to_string(a) : spec.arrows[a].name);
        }
    const std::size_t nvars = names.size();

    SequenceSolution solution;
    solution.term_dims.resize(n);
    solution.arrow_ranks.resize(spec.arrows.size());

    auto fail = [&](std::string why) {
        solution.status = SolveStatus::inconsistent;
        solution.inconsistency = std::move(why);
        return solution;
    };

    Elimination elim(nvars);
    for (std::size_t i = 0; i < n; ++i)
    {
        Row row{std::vector<Rational>(nvars), 0};
        const auto& t = spec.terms[i];
        if (t.is_known())
            row.rhs -= std::get<std::size_t>(t.value);
        else
            row.coeffs[term_var.at(std::get<std::string>(t.value))] += 1;
        for (std::size_t a : {i - 1, i})
        {
            if (a >= spec.arrows.size())  // padding arrow (also catches i - 1 wrapping at i = 0)
                continue;
            if (spec.arrows[a].rank)
                row.rhs += *spec.arrows[a].rank;
            else
                row.coeffs[*arrow_var[a]] -= 1;
        }
        if (!elim.add(std::move(row)))
            return fail(describe_term(spec, i));
    }

    // All quantities are nonnegative: a relation with all coefficients of
    // one sign forces each of its variables to zero or is infeasible.
    for (bool changed = true; changed;)
    {
        changed = false;
        std::vector<Row> forced;
        for (const auto& [pivot, row] : elim.rows())
        {
            bool pos = false, neg = false;
            for (const auto& c : row.coeffs)
            {
                pos |= c > 0;
                neg |= c < 0;
            }
            if (pos == neg)
                continue;
            const Rational rhs = pos ? row.rhs : Rational(-row.rhs);
            if (rhs < 0)
                return fail("no nonnegative solution: " + format_row(row, names));
            if (rhs > 0 || elim.value(pivot))
                continue;
            for (std::size_t v = 0; v < nvars; ++v)
                if (!row.coeffs[v].is_zero())
                {
                    Row zero{std::vector<Rational>(nvars), 0};
                    zero.coeffs[v] = 1;
                    forced.push_back(std::move(zero));
                }
        }
        const std::size_t before = elim.rows().size();
        for (auto& row : forced)
            if (!elim.add(std::move(row)))
                return fail("no nonnegative solution");
        changed = elim.rows().size() != before;
    }

    std::vector<std::optional<std::size_t>> values(nvars);
    for (std::size_t v = 0; v < nvars; ++v)
        if (auto x = elim.value(v))
        {
            values[v] = as_count(*x);
            if (!values[v])
            {
                std::ostringstream why;
                why << names[v] << " would be " << *x << ", not a nonnegative integer";
                return fail(why.str());
            }
        }

    for (std::size_t i = 0; i < n; ++i)
    {
        const auto& t = spec.terms[i];
        solution.term_dims[i] = t.is_known() ? std::optional(std::get<std::size_t>(t.value))
                                             : values[term_var.at(std::get<std::string>(t.value))];
    }
    for (const auto& [name, v] : term_var)
        if (values[v])
            solution.assignments[name] = *values[v];
    for (std::size_t a = 0; a < spec.arrows.size(); ++a)
        solution.arrow_ranks[a] = spec.arrows[a].rank ? spec.arrows[a].rank : values[*arrow_var[a]];

    // A rank cannot exceed the dimension of either end.
    for (std::size_t a = 0; a < spec.arrows.size(); ++a)
    {
        const auto& r = solution.arrow_ranks[a];
        if (!r)
            continue;
        for (std::size_t i : {a, a + 1})
            if (solution.term_dims[i] && *r > *solution.term_dims[i])
                return fail(describe_term(spec, i) + ": arrow rank " + std::to_string(*r) +
                            " exceeds dimension " + std::to_string(*solution.term_dims[i]));
    }

    const bool complete = std::all_of(values.begin(), values.end(), [](const auto& x) { return x.has_value(); });
    if (!complete)
    {
        solution.status = SolveStatus::underdetermined;
        for (const auto& [pivot, row] : elim.rows())
            if (!elim.value(pivot))
                solution.residual_constraints.push_back(format_row(row, names));
        for (std::size_t v = 0; v < nvars; ++v)
            if (!values[v] && !elim.rows().count(v))
                solution.residual_constraints.push_back(names[v] + " is unconstrained");
    }
    return solution;
}

bool exactness_holds(const SequenceSolution& s)
{
    const std::size_t n = s.term_dims.size();
    if (s.arrow_ranks.size() + 1 != n)
        return false;
    auto rank_at = [&](std::size_t a) -> std::optional<std::size_t> {
        return a < s.arrow_ranks.size() ? s.arrow_ranks[a] : std::optional<std::size_t>(0);
    };
    for (std::size_t i = 0; i < n; ++i)
    {
        const auto in = i == 0 ? std::optional<std::size_t>(0) : rank_at(i - 1);
        const auto out = rank_at(i);
        if (!s.term_dims[i] || !in || !out)
            return false;
        if (*s.term_dims[i] != *in + *out)
            return false;
        if (*in > *s.term_dims[i] || *out > *s.term_dims[i])
            return false;
    }
    return true;
}

long alternating_sum(const SequenceSolution& s)
{
    long sum = 0;
    for (std::size_t i = 0; i < s.term_dims.size(); ++i)
    {
        if (!s.term_dims[i])
            throw std::invalid_argument("alternating_sum: undetermined term");
        sum += (i % 2 == 0 ? 1L : -1L) * static_cast<long>(*s.term_dims[i]);
    }
    return sum;
}

MVResult mayer_vietoris(const MVProblem& p)
{
    int lo = 0, hi = 0;
    for (const GradedBetti* b : {&p.betti_a, &p.betti_b, &p.betti_intersection})
        if (!b->is_zero())
        {
            lo = std::min(lo, b->min_supported());
            hi = std::max(hi, b->max_supported());
        }
    hi += 1;  // H̃_{hi}(A∩B) feeds H̃_{hi+1}(A∪B)

    MVResult result;
    ExactSequenceSpec& seq = result.sequence;
    std::vector<std::size_t> union_term;  // index of H̃_j(A∪B) in seq.terms, for j = hi..lo
    for (int j = hi; j >= lo; --j)
    {
        const std::string d = std::to_string(j);
        if (j != hi)
            seq.arrows.push_back({std::nullopt, true, "delta" + std::to_string(j + 1)});
        seq.terms.push_back(SequenceTerm::known(p.betti_intersection[j]));
        std::optional<std::size_t> phi;
        if (auto it = p.intersection_ranks.find(j); it != p.intersection_ranks.end())
            phi = it->second;
        seq.arrows.push_back({phi, false, "phi" + d});
        seq.terms.push_back(SequenceTerm::known(p.betti_a[j] + p.betti_b[j]));
        seq.arrows.push_back({std::nullopt, false, "psi" + d});
        seq.terms.push_back(SequenceTerm::unknown("H" + d + "(A∪B)"));
        union_term.push_back(seq.terms.size() - 1);
    }

    result.solution = solve_exact(seq);
    result.status = result.solution.status;
    if (result.status == SolveStatus::solved)
    {
        for (std::size_t i = 0; i < union_term.size(); ++i)
            result.union_betti.set(hi - static_cast<int>(i), *result.solution.term_dims[union_term[i]]);
        result.union_betti.set_top_degree(hi);
    }
    return result;
}

}  // namespace ihs
