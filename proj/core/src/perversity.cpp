#include "ihspace/perversity.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ihspace/errors.hpp"

namespace ihs {

namespace {

int floor_div2(int x)
{
    return x >= 0 ? x / 2 : -((-x + 1) / 2);
}

std::optional<int> family_value(Perversity::Family family, int codim)
{
    switch (family)
    {
    case Perversity::Family::zero:
        return 0;
    case Perversity::Family::lower_middle:
        return floor_div2(codim - 2);
    case Perversity::Family::upper_middle:
        return floor_div2(codim - 1);
    case Perversity::Family::top:
        return codim - 2;
    case Perversity::Family::none:
        break;
    }
    return std::nullopt;
}

std::vector<int> tabulate(Perversity::Family family, int max_codim)
{
    std::vector<int> values;
    for (int k = 2; k <= max_codim; ++k)
        values.push_back(*family_value(family, k));
    return values;
}

}  // namespace

PerversityCheck validate(std::span<const int> values)
{
    if (values.empty())
        throw std::invalid_argument("perversity: empty sequence");
    if (values[0] != 0)
        return {PerversityKind::extended, "p(2) ≠ 0"};
    for (std::size_t i = 0; i + 1 < values.size(); ++i)
    {
        const int codim = static_cast<int>(i) + 3;
        const int step = values[i + 1] - values[i];
        if (step < 0)
            return {PerversityKind::extended, "decrease at k=" + std::to_string(codim)};
        if (step > 1)
            return {PerversityKind::extended,
                    "growth step " + std::to_string(step) + " at k=" + std::to_string(codim)};
    }
    return {PerversityKind::classical, {}};
}

Perversity::Perversity(std::vector<int> values, PerversityKind kind, Family family)
    : values_(std::move(values)), kind_(kind), family_(family)
{
}

Perversity Perversity::zero(int max_codim)
{
    return {tabulate(Family::zero, std::max(max_codim, 2)), PerversityKind::classical, Family::zero};
}

Perversity Perversity::lower_middle(int max_codim)
{
    if (max_codim < 2)
        throw DomainError("lower middle perversity needs max codimension >= 2");
    return {tabulate(Family::lower_middle, max_codim), PerversityKind::classical, Family::lower_middle};
}

Perversity Perversity::upper_middle(int max_codim)
{
    if (max_codim < 2)
        throw DomainError("upper middle perversity needs max codimension >= 2");
    return {tabulate(Family::upper_middle, max_codim), PerversityKind::classical, Family::upper_middle};
}

Perversity Perversity::top(int max_codim)
{
    if (max_codim < 2)
        throw DomainError("top perversity needs max codimension >= 2");
    return {tabulate(Family::top, max_codim), PerversityKind::classical, Family::top};
}

Perversity Perversity::classical(std::vector<int> values)
{
    const PerversityCheck check = validate(values);
    if (!check.classical())
        throw std::invalid_argument("not a classical perversity: " + check.reason);
    return {std::move(values), PerversityKind::classical, Family::none};
}

Perversity Perversity::extended(std::vector<int> values)
{
    if (values.empty())
        throw std::invalid_argument("perversity: empty sequence");
    return {std::move(values), PerversityKind::extended, Family::none};
}

Perversity Perversity::constant_extended(int codim, int value)
{
    if (codim < 2)
        throw DomainError("extended perversity needs codimension >= 2");
    return extended(std::vector<int>(static_cast<std::size_t>(codim - 1), value));
}

std::optional<int> Perversity::at(int codim) const
{
    if (codim < 2)
        return std::nullopt;
    const auto i = static_cast<std::size_t>(codim - 2);
    if (i < values_.size())
        return values_[i];
    if (family_ != Family::none)
        return family_value(family_, codim);
    if (kind_ == PerversityKind::extended)
        return std::nullopt;
    const int step = values_.size() >= 2 ? values_.back() - values_[values_.size() - 2] : 0;
    return values_.back() + step * static_cast<int>(i - (values_.size() - 1));
}

int Perversity::value(int codim) const
{
    if (auto v = at(codim))
        return *v;
    throw DomainError("perversity " + label() + " is undefined at codimension " + std::to_string(codim));
}

std::string Perversity::label() const
{
    switch (family_)
    {
    case Family::zero:
        return "zero";
    case Family::lower_middle:
        return "m";
    case Family::upper_middle:
        return "um";
    case Family::top:
        return "top";
    case Family::none:
        break;
    }
    std::string out;
    for (std::size_t i = 0; i < values_.size(); ++i)
        out += (i ? "," : "") + std::to_string(values_[i]);
    return out;
}

int cutoff_degree(int link_dim, const Perversity& p)
{
    return link_dim - p.value(link_dim + 1);
}

std::vector<Perversity> sweep_perversities(int link_dim)
{
    const int codim = link_dim + 1;
    std::vector<Perversity> out{Perversity::zero(codim), Perversity::lower_middle(codim),
                                Perversity::upper_middle(codim), Perversity::top(codim)};
    for (int v = -2; v <= link_dim + 1; ++v)
        out.push_back(Perversity::constant_extended(codim, v));
    return out;
}

Perversity parse_perversity(const std::string& text, bool allow_extended, int max_codim)
{
    max_codim = std::max(max_codim, 2);
    if (text == "zero")
        return Perversity::zero(max_codim);
    if (text == "m")
        return Perversity::lower_middle(max_codim);
    if (text == "um")
        return Perversity::upper_middle(max_codim);
    if (text == "top")
        return Perversity::top(max_codim);

    std::vector<int> values;
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, ','))
    {
        std::size_t used = 0;
        int v = 0;
        try
        {
            v = std::stoi(token, &used);
        }
        catch (const std::exception&)
        {
            used = 0;
        }
        if (token.empty() || used != token.size())
            throw std::invalid_argument("perversity: '" + token + "' is not an integer (expected zero|m|um|top or a list)");
        values.push_back(v);
    }
    if (values.empty())
        throw std::invalid_argument("perversity: empty sequence");

    const PerversityCheck check = validate(values);
    if (check.classical())
        return Perversity::classical(std::move(values));
    if (!allow_extended)
        throw std::invalid_argument("perversity " + text + " is not classical (" + check.reason +
                                    "); pass --extended to use it as an extended perversity");
    return Perversity::extended(std::move(values));
}

}  // namespace ihs
