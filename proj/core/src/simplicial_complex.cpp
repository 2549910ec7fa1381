#include "ihspace/simplicial_complex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "ihspace/errors.hpp"

namespace ihs {

namespace {

const std::vector<Simplex> kNoSimplices;

std::string describe(const Simplex& s)
{
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? " " : "") + std::to_string(s[i]);
    return out + ")";
}

void add_faces(const Simplex& s, std::vector<std::set<Simplex>>& by_dim)
{
    // Every subset of s: iterate over bitmasks. Facets stay small here.
    const std::size_t n = s.size();
    if (n > 20)
        throw MalformedSimplexError("simplex " + describe(s) + " has too many vertices");
    if (by_dim.size() < n)
        by_dim.resize(n);
    if (by_dim[n - 1].count(s))
        return;
    for (unsigned long mask = 1; mask < (1UL << n); ++mask)
    {
        Simplex face;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1UL << i))
                face.push_back(s[i]);
        by_dim[face.size() - 1].insert(std::move(face));
    }
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(const std::vector<Simplex>& facets)
{
    std::vector<std::set<Simplex>> by_dim;
    for (Simplex s : facets)
    {
        if (s.empty())
            continue;
        std::sort(s.begin(), s.end());
        if (s.front() < 0)
            throw MalformedSimplexError("negative vertex id in simplex " + describe(s));
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw MalformedSimplexError("repeated vertex in simplex " + describe(s));
        add_faces(s, by_dim);
    }

    SimplicialComplex k;
    while (!by_dim.empty() && by_dim.back().empty())
        by_dim.pop_back();
    k.by_dim_.reserve(by_dim.size());
    for (auto& level : by_dim)
        k.by_dim_.emplace_back(level.begin(), level.end());
    return k;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int dim) const
{
    if (dim < 0 || dim > dimension())
        return kNoSimplices;
    return by_dim_[dim];
}

std::size_t SimplicialComplex::size() const
{
    std::size_t n = 0;
    for (const auto& level : by_dim_)
        n += level.size();
    return n;
}

long SimplicialComplex::index_of(const Simplex& s) const
{
    const auto& level = simplices(static_cast<int>(s.size()) - 1);
    auto it = std::lower_bound(level.begin(), level.end(), s);
    if (it == level.end() || *it != s)
        return -1;
    return it - level.begin();
}

std::vector<int> SimplicialComplex::vertices() const
{
    std::vector<int> out;
    for (const auto& v : simplices(0))
        out.push_back(v[0]);
    return out;
}

int SimplicialComplex::max_vertex() const
{
    return empty() ? -1 : by_dim_[0].back()[0];
}

std::vector<Simplex> SimplicialComplex::facets() const
{
    std::vector<Simplex> out;
    for (int d = 0; d <= dimension(); ++d)
    {
        std::set<Simplex> covered;
        for (const auto& s : simplices(d + 1))
            for (std::size_t i = 0; i < s.size(); ++i)
            {
                Simplex face = s;
                face.erase(face.begin() + static_cast<long>(i));
                covered.insert(std::move(face));
            }
        for (const auto& s : simplices(d))
            if (!covered.count(s))
                out.push_back(s);
    }
    return out;
}

SimplicialComplex cone(const SimplicialComplex& k)
{
    const int apex = k.max_vertex() + 1;
    std::vector<Simplex> facets{{apex}};
    for (const auto& s : k.facets())
    {
        Simplex joined = s;
        joined.push_back(apex);
        facets.push_back(std::move(joined));
    }
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex suspension(const SimplicialComplex& k)
{
    const int north = k.max_vertex() + 1;
    const int south = north + 1;
    std::vector<Simplex> facets{{north}, {south}};
    for (const auto& s : k.facets())
        for (int apex : {north, south})
        {
            Simplex joined = s;
            joined.push_back(apex);
            facets.push_back(std::move(joined));
        }
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b)
{
    const int offset = a.max_vertex() + 1;
    std::vector<Simplex> facets = a.facets();
    for (Simplex s : b.facets())
    {
        for (int& v : s)
            v += offset;
        facets.push_back(std::move(s));
    }
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& k)
{
    std::map<Simplex, int> vertex_of;
    for (int d = 0; d <= k.dimension(); ++d)
        for (const auto& s : k.simplices(d))
            vertex_of.emplace(s, static_cast<int>(vertex_of.size()));

    // Maximal flags ending at each facet: peel one vertex at a time.
    std::vector<Simplex> facets;
    std::function<void(const Simplex&, Simplex&)> descend = [&](const Simplex& s, Simplex& flag) {
        flag.push_back(vertex_of.at(s));
        if (s.size() == 1)
            facets.push_back(flag);
        else
            for (std::size_t i = 0; i < s.size(); ++i)
            {
                Simplex face = s;
                face.erase(face.begin() + static_cast<long>(i));
                descend(face, flag);
            }
        flag.pop_back();
    };
    for (const auto& f : k.facets())
    {
        Simplex flag;
        descend(f, flag);
    }
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex boundary_of_simplex(int n)
{
    std::vector<Simplex> facets;
    for (int skip = 0; skip <= n && n >= 1; ++skip)
    {
        Simplex s;
        for (int v = 0; v <= n; ++v)
            if (v != skip)
                s.push_back(v);
        facets.push_back(std::move(s));
    }
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex full_simplex(int n)
{
    Simplex s;
    for (int v = 0; v <= n; ++v)
        s.push_back(v);
    return SimplicialComplex::from_facets({s});
}

}  // namespace ihs
