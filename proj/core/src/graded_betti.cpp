#include "ihspace/graded_betti.hpp"

#include <algorithm>
#include <stdexcept>

namespace ihs {

GradedBetti::GradedBetti(std::initializer_list<std::pair<const int, std::size_t>> ranks)
{
    for (const auto& [degree, rank] : ranks)
        set(degree, rank);
}

GradedBetti::GradedBetti(const std::map<int, std::size_t>& ranks, int top_degree)
    : top_degree_(top_degree)
{
    for (const auto& [degree, rank] : ranks)
        set(degree, rank);
}

std::size_t GradedBetti::operator[](int degree) const
{
    auto it = ranks_.find(degree);
    return it == ranks_.end() ? 0 : it->second;
}

void GradedBetti::set(int degree, std::size_t rank)
{
    if (degree < -1)
        throw std::invalid_argument("GradedBetti: degree below -1");
    if (rank == 0)
    {
        ranks_.erase(degree);
        return;
    }
    ranks_[degree] = rank;
    top_degree_ = std::max(top_degree_, degree);
}

void GradedBetti::set_top_degree(int degree)
{
    if (!ranks_.empty() && degree < max_supported())
        throw std::invalid_argument("GradedBetti: top degree below supported degree");
    top_degree_ = degree;
}

long GradedBetti::euler_characteristic() const
{
    long chi = 0;
    for (const auto& [degree, rank] : ranks_)
        chi += (degree % 2 == 0 ? 1L : -1L) * static_cast<long>(rank);
    return chi;
}

GradedBetti GradedBetti::shifted(int by) const
{
    GradedBetti out;
    for (const auto& [degree, rank] : ranks_)
        if (degree + by >= -1)
            out.set(degree + by, rank);
    out.top_degree_ = std::max(out.top_degree_, top_degree_ + by);
    return out;
}

std::ostream& operator<<(std::ostream& os, const GradedBetti& b)
{
    os << '{';
    bool first = true;
    for (const auto& [degree, rank] : b.ranks_)
    {
        os << (first ? "" : ", ") << degree << ": " << rank;
        first = false;
    }
    return os << '}';
}

std::set<int> differing_degrees(const GradedBetti& a, const GradedBetti& b)
{
    std::set<int> out;
    for (const auto& [degree, rank] : a.ranks())
        if (b[degree] != rank)
            out.insert(degree);
    for (const auto& [degree, rank] : b.ranks())
        if (a[degree] != rank)
            out.insert(degree);
    return out;
}

GradedBetti operator+(const GradedBetti& a, const GradedBetti& b)
{
    GradedBetti out = a;
    for (const auto& [degree, rank] : b.ranks())
        out.set(degree, a[degree] + rank);
    out.set_top_degree(std::max(a.top_degree(), b.top_degree()));
    return out;
}

}  // namespace ihs
