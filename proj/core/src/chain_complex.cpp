#include "ihspace/chain_complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace ihs {

namespace {

const RationalMatrix kEmptyMatrix;

/// Copy `block` into `m` with its top-left corner at (row, col).
void place(RationalMatrix& m, const RationalMatrix& block, std::size_t row, std::size_t col)
{
    for (std::size_t r = 0; r < block.rows(); ++r)
        for (std::size_t c = 0; c < block.cols(); ++c)
            if (!block(r, c).is_zero())
                m(row + r, col + c) = block(r, c);
}

std::vector<std::size_t> dims_of(const ChainComplex& c, int lo, int hi)
{
    std::vector<std::size_t> dims;
    for (int d = lo; d <= hi; ++d)
        dims.push_back(c.dim(d));
    return dims;
}

}  // namespace

ChainComplex::ChainComplex(int min_degree, std::vector<std::size_t> dims,
                           std::vector<RationalMatrix> boundaries, bool augmented)
    : min_degree_(min_degree), dims_(std::move(dims)), augmented_(augmented)
{
    if (dims_.empty())
    {
        if (!boundaries.empty())
            throw std::invalid_argument("ChainComplex: boundaries given without chain groups");
        return;
    }
    if (boundaries.size() + 1 != dims_.size())
        throw std::invalid_argument("ChainComplex: need exactly one boundary between consecutive degrees");

    boundaries_.reserve(dims_.size() + 1);
    boundaries_.emplace_back(0, dims_.front());
    for (std::size_t i = 0; i < boundaries.size(); ++i)
    {
        if (boundaries[i].rows() != dims_[i] || boundaries[i].cols() != dims_[i + 1])
            throw std::invalid_argument("ChainComplex: boundary out of degree " +
                                        std::to_string(min_degree_ + static_cast<int>(i) + 1) +
                                        " has the wrong shape");
        boundaries_.push_back(std::move(boundaries[i]));
    }
    boundaries_.emplace_back(dims_.back(), 0);
}

std::size_t ChainComplex::dim(int degree) const
{
    if (degree < min_degree_ || degree > max_degree())
        return 0;
    return dims_[degree - min_degree_];
}

const RationalMatrix& ChainComplex::boundary(int degree) const
{
    if (dims_.empty() || degree < min_degree_ || degree > max_degree() + 1)
        return kEmptyMatrix;
    return boundaries_[degree - min_degree_];
}

bool ChainComplex::is_valid() const
{
    for (int d = min_degree_ + 1; d <= max_degree(); ++d)
        if (!(boundary(d - 1) * boundary(d)).is_zero())
            return false;
    return true;
}

ChainComplex ChainComplex::without_augmentation() const
{
    if (!augmented_ || min_degree_ != -1)
        return *this;
    if (max_degree() < 0)
        return {};
    std::vector<RationalMatrix> bs;
    for (int d = 1; d <= max_degree(); ++d)
        bs.push_back(boundary(d));
    return ChainComplex(0, dims_of(*this, 0, max_degree()), std::move(bs), false);
}

ChainMap::ChainMap(ChainComplex source, ChainComplex target, int min_degree,
                   std::vector<RationalMatrix> components)
    : source_(std::move(source)), target_(std::move(target)), min_degree_(min_degree),
      components_(std::move(components))
{
    for (std::size_t i = 0; i < components_.size(); ++i)
    {
        const int d = min_degree_ + static_cast<int>(i);
        if (components_[i].rows() != target_.dim(d) || components_[i].cols() != source_.dim(d))
            throw std::invalid_argument("ChainMap: component in degree " + std::to_string(d) +
                                        " has the wrong shape");
    }
}

ChainMap ChainMap::identity(const ChainComplex& c)
{
    std::vector<RationalMatrix> comps;
    for (int d = c.min_degree(); d <= c.max_degree(); ++d)
        comps.push_back(RationalMatrix::identity(c.dim(d)));
    return ChainMap(c, c, c.min_degree(), std::move(comps));
}

RationalMatrix ChainMap::component(int degree) const
{
    const int i = degree - min_degree_;
    if (i >= 0 && i < static_cast<int>(components_.size()))
        return components_[i];
    return RationalMatrix(target_.dim(degree), source_.dim(degree));
}

bool ChainMap::commutes() const
{
    const int lo = std::min(source_.min_degree(), target_.min_degree());
    const int hi = std::max(source_.max_degree(), target_.max_degree()) + 1;
    for (int d = lo; d <= hi; ++d)
    {
        const RationalMatrix lhs = target_.boundary(d) * component(d);
        const RationalMatrix rhs = component(d - 1) * source_.boundary(d);
        if (!(lhs == rhs))
            return false;
    }
    return true;
}

std::size_t ChainMap::induced_rank(int degree) const
{
    const auto cycles = kernel_basis(source_.boundary(degree));
    if (cycles.empty())
        return 0;
    const RationalMatrix f = component(degree);
    std::vector<RationalVector> images;
    images.reserve(cycles.size());
    for (const auto& z : cycles)
        images.push_back(f.apply(z));
    const RationalMatrix& next = target_.boundary(degree + 1);
    const RationalMatrix combined = RationalMatrix::from_columns(images, target_.dim(degree)).hconcat(next);
    return rank(combined) - rank(next);
}

ChainComplex chain_complex(const SimplicialComplex& k, bool reduced)
{
    const int top = k.dimension();
    const int lo = reduced ? -1 : 0;
    if (top < lo)
        return {};

    std::vector<std::size_t> dims;
    for (int d = lo; d <= top; ++d)
        dims.push_back(d < 0 ? 1 : k.count(d));

    std::vector<RationalMatrix> bs;
    for (int d = lo + 1; d <= top; ++d)
    {
        RationalMatrix m(d == 0 ? 1 : k.count(d - 1), k.count(d));
        const auto& cells = k.simplices(d);
        for (std::size_t c = 0; c < cells.size(); ++c)
        {
            if (d == 0)
            {
                m(0, c) = 1;
                continue;
            }
            for (std::size_t i = 0; i < cells[c].size(); ++i)
            {
                Simplex face = cells[c];
                face.erase(face.begin() + static_cast<long>(i));
                m(static_cast<std::size_t>(k.index_of(face)), c) = (i % 2 == 0) ? 1 : -1;
            }
        }
        bs.push_back(std::move(m));
    }
    return ChainComplex(lo, std::move(dims), std::move(bs), reduced);
}

GradedBetti betti(const ChainComplex& c)
{
    GradedBetti out;
    const int lo = c.min_degree();
    const int hi = c.max_degree();
    if (hi < lo)
        return out;

    std::vector<std::size_t> ranks;  // ranks[i] = rank of d_{lo+i}, i in 0..(hi-lo+1)
    for (int d = lo; d <= hi + 1; ++d)
        ranks.push_back(rank(c.boundary(d)));
    for (int d = lo; d <= hi; ++d)
    {
        const std::size_t i = static_cast<std::size_t>(d - lo);
        out.set(d, c.dim(d) - ranks[i] - ranks[i + 1]);
    }
    out.set_top_degree(std::max(hi, out.is_zero() ? hi : out.max_supported()));
    return out;
}

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b)
{
    if (a.max_degree() < a.min_degree())
        return b;
    if (b.max_degree() < b.min_degree())
        return a;
    const int lo = std::min(a.min_degree(), b.min_degree());
    const int hi = std::max(a.max_degree(), b.max_degree());
    std::vector<std::size_t> dims;
    for (int d = lo; d <= hi; ++d)
        dims.push_back(a.dim(d) + b.dim(d));
    std::vector<RationalMatrix> bs;
    for (int d = lo + 1; d <= hi; ++d)
    {
        RationalMatrix m(a.dim(d - 1) + b.dim(d - 1), a.dim(d) + b.dim(d));
        place(m, a.boundary(d), 0, 0);
        place(m, b.boundary(d), a.dim(d - 1), a.dim(d));
        bs.push_back(std::move(m));
    }
    return ChainComplex(lo, std::move(dims), std::move(bs), a.augmented() && b.augmented());
}

ChainComplex tensor(const ChainComplex& a_in, const ChainComplex& b_in)
{
    const ChainComplex a = a_in.without_augmentation();
    const ChainComplex b = b_in.without_augmentation();
    if (a.max_degree() < a.min_degree() || b.max_degree() < b.min_degree())
        return {};

    const int lo = a.min_degree() + b.min_degree();
    const int hi = a.max_degree() + b.max_degree();

    // offset[n - lo][i - a.min] = start of the a_i ⊗ b_{n-i} block in degree n.
    auto block_offsets = [&](int n) {
        std::vector<std::size_t> offsets;
        std::size_t total = 0;
        for (int i = a.min_degree(); i <= a.max_degree(); ++i)
        {
            offsets.push_back(total);
            total += a.dim(i) * b.dim(n - i);
        }
        offsets.push_back(total);
        return offsets;
    };

    std::vector<std::size_t> dims;
    std::vector<std::vector<std::size_t>> offsets;
    for (int n = lo; n <= hi; ++n)
    {
        offsets.push_back(block_offsets(n));
        dims.push_back(offsets.back().back());
    }

    std::vector<RationalMatrix> bs;
    for (int n = lo + 1; n <= hi; ++n)
    {
        const auto& src = offsets[n - lo];
        const auto& dst = offsets[n - 1 - lo];
        RationalMatrix m(dims[n - 1 - lo], dims[n - lo]);
        for (int i = a.min_degree(); i <= a.max_degree(); ++i)
        {
            const int j = n - i;
            const std::size_t ai = a.dim(i), bj = b.dim(j);
            if (ai == 0 || bj == 0)
                continue;
            const std::size_t col0 = src[i - a.min_degree()];
            // dx ⊗ y lands in a_{i-1} ⊗ b_j.
            if (a.dim(i - 1) > 0)
            {
                const RationalMatrix& da = a.boundary(i);
                const std::size_t row0 = dst[i - 1 - a.min_degree()];
                for (std::size_t x = 0; x < ai; ++x)
                    for (std::size_t xr = 0; xr < da.rows(); ++xr)
                    {
                        if (da(xr, x).is_zero())
                            continue;
                        for (std::size_t y = 0; y < bj; ++y)
                            m(row0 + xr * bj + y, col0 + x * bj + y) += da(xr, x);
                    }
            }
            // (-1)^i x ⊗ dy lands in a_i ⊗ b_{j-1}.
            if (b.dim(j - 1) > 0)
            {
                const RationalMatrix& db = b.boundary(j);
                const std::size_t bj1 = b.dim(j - 1);
                const std::size_t row0 = dst[i - a.min_degree()];
                const int sign = (i % 2 == 0) ? 1 : -1;
                for (std::size_t x = 0; x < ai; ++x)
                    for (std::size_t y = 0; y < bj; ++y)
                        for (std::size_t yr = 0; yr < bj1; ++yr)
                            if (!db(yr, y).is_zero())
                                m(row0 + x * bj1 + yr, col0 + x * bj + y) += sign * db(yr, y);
            }
        }
        bs.push_back(std::move(m));
    }
    ChainComplex product(lo, std::move(dims), std::move(bs), false);

    if (!(a_in.augmented() && b_in.augmented() && lo == 0))
        return product;

    // Augment by ε_a ⊗ ε_b on a_0 ⊗ b_0.
    const RationalMatrix& ea = a_in.boundary(0);
    const RationalMatrix& eb = b_in.boundary(0);
    std::vector<std::size_t> aug_dims{1};
    std::vector<RationalMatrix> aug_bs;
    RationalMatrix eps(1, product.dim(0));
    for (std::size_t x = 0; x < a.dim(0); ++x)
        for (std::size_t y = 0; y < b.dim(0); ++y)
            eps(0, x * b.dim(0) + y) = ea(0, x) * eb(0, y);
    aug_bs.push_back(std::move(eps));
    for (int n = 0; n <= product.max_degree(); ++n)
        aug_dims.push_back(product.dim(n));
    for (int n = 1; n <= product.max_degree(); ++n)
        aug_bs.push_back(product.boundary(n));
    return ChainComplex(-1, std::move(aug_dims), std::move(aug_bs), true);
}

Truncation truncate(const ChainComplex& c, int k)
{
    if (k <= 0 || c.max_degree() < c.min_degree())
    {
        ChainComplex zero;
        return {zero, ChainMap(zero, c, 0, {})};
    }

    const int lo = c.min_degree();
    const int top = std::min(k, c.max_degree());
    if (top < lo)
    {
        ChainComplex zero;
        return {zero, ChainMap(zero, c, 0, {})};
    }

    // Degree k: columns of d_k whose images span B_{k-1}.
    std::vector<std::size_t> kept;
    if (k <= c.max_degree())
        kept = independent_columns(c.boundary(k));

    std::vector<std::size_t> dims;
    std::vector<RationalMatrix> bs;
    std::vector<RationalMatrix> inclusion;
    for (int d = lo; d <= top; ++d)
    {
        const bool partial = (d == k);
        dims.push_back(partial ? kept.size() : c.dim(d));
        if (d > lo)
            bs.push_back(partial ? c.boundary(d).select_columns(kept) : c.boundary(d));
        if (partial)
        {
            RationalMatrix select(c.dim(d), kept.size());
            for (std::size_t j = 0; j < kept.size(); ++j)
                select(kept[j], j) = 1;
            inclusion.push_back(std::move(select));
        }
        else
            inclusion.push_back(RationalMatrix::identity(c.dim(d)));
    }
    ChainComplex sub(lo, std::move(dims), std::move(bs), c.augmented());
    ChainMap map(sub, c, lo, std::move(inclusion));
    return {std::move(sub), std::move(map)};
}

ChainComplex mapping_cone(const ChainMap& f)
{
    const ChainComplex& s = f.source();
    const ChainComplex& t = f.target();
    const bool s_zero = s.max_degree() < s.min_degree();
    const bool t_zero = t.max_degree() < t.min_degree();
    if (s_zero && t_zero)
        return {};

    const int lo = s_zero ? t.min_degree() : t_zero ? s.min_degree() + 1
                                                    : std::min(s.min_degree() + 1, t.min_degree());
    const int hi = s_zero ? t.max_degree() : t_zero ? s.max_degree() + 1
                                                    : std::max(s.max_degree() + 1, t.max_degree());

    std::vector<std::size_t> dims;
    for (int n = lo; n <= hi; ++n)
        dims.push_back(s.dim(n - 1) + t.dim(n));

    std::vector<RationalMatrix> bs;
    for (int n = lo + 1; n <= hi; ++n)
    {
        // rows: source_{n-2} ⊕ target_{n-1}; cols: source_{n-1} ⊕ target_n
        RationalMatrix m(s.dim(n - 2) + t.dim(n - 1), s.dim(n - 1) + t.dim(n));
        place(m, -s.boundary(n - 1), 0, 0);
        place(m, f.component(n - 1), s.dim(n - 2), 0);
        place(m, t.boundary(n), s.dim(n - 2), s.dim(n - 1));
        bs.push_back(std::move(m));
    }
    return ChainComplex(lo, std::move(dims), std::move(bs), t.augmented());
}

}  // namespace ihs
