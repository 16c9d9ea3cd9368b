#include "tilekit/cellset.hpp"

#include <algorithm>
#include <numeric>

#include "tilekit/caps.hpp"
#include "tilekit/errors.hpp"

namespace tilekit {

static std::int64_t checked_pow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

CellSet CellSet::from_flat(int dim, std::int64_t resolution, std::vector<std::int64_t> flat) {
    if (dim < 1) throw InvalidArgument("cell set dimension must be >= 1");
    if (resolution < 1) throw InvalidArgument("resolution must be >= 1");
    CellSet s;
    s.dim_ = dim;
    s.resolution_ = resolution;
    check_domain_size(checked_pow(resolution, dim));
    std::sort(flat.begin(), flat.end());
    flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
    const std::int64_t total = checked_pow(resolution, dim);
    for (std::int64_t c : flat) {
        if (c < 0 || c >= total) throw InvalidArgument("cell index out of range");
    }
    s.cells_ = std::move(flat);
    return s;
}

CellSet::CellSet(int dim, std::int64_t resolution,
                 const std::vector<std::vector<std::int64_t>>& cells) {
    std::vector<std::int64_t> flat;
    flat.reserve(cells.size());
    CellSet probe = from_flat(dim, resolution, {});
    for (const auto& c : cells) flat.push_back(probe.flat_of(c));
    *this = from_flat(dim, resolution, std::move(flat));
}

CellSet CellSet::full(int dim, std::int64_t resolution) {
    CellSet probe = from_flat(dim, resolution, {});
    std::vector<std::int64_t> flat(std::size_t(probe.grid_size()));
    std::iota(flat.begin(), flat.end(), 0);
    return from_flat(dim, resolution, std::move(flat));
}

CellSet CellSet::box(int dim, std::int64_t resolution, const std::vector<std::int64_t>& lo,
                     const std::vector<std::int64_t>& hi) {
    if (int(lo.size()) != dim || int(hi.size()) != dim) {
        throw SpecMismatch("box corner dimension mismatch");
    }
    std::vector<std::int64_t> flat;
    std::vector<std::int64_t> cur = lo;
    for (int i = 0; i < dim; ++i) {
        if (lo[i] < 0 || hi[i] > resolution || lo[i] >= hi[i]) {
            throw InvalidArgument("box corners must satisfy 0 <= lo < hi <= resolution");
        }
    }
    while (true) {
        std::int64_t f = 0;
        for (int i = 0; i < dim; ++i) f = f * resolution + cur[i];
        flat.push_back(f);
        int i = dim - 1;
        while (i >= 0 && ++cur[i] == hi[i]) cur[i] = lo[i], --i;
        if (i < 0) break;
    }
    return from_flat(dim, resolution, std::move(flat));
}

std::int64_t CellSet::grid_size() const { return checked_pow(resolution_, dim_); }

Rational CellSet::measure() const { return Rational(count(), grid_size()); }

std::vector<std::int64_t> CellSet::coords_of(std::int64_t flat) const {
    std::vector<std::int64_t> c(static_cast<std::size_t>(dim_));
    for (int i = dim_; i-- > 0;) {
        c[std::size_t(i)] = flat % resolution_;
        flat /= resolution_;
    }
    return c;
}

std::int64_t CellSet::flat_of(const std::vector<std::int64_t>& coords) const {
    if (int(coords.size()) != dim_) throw SpecMismatch("cell coordinate dimension mismatch");
    std::int64_t f = 0;
    for (int i = 0; i < dim_; ++i) {
        const std::int64_t c = coords[std::size_t(i)];
        if (c < 0 || c >= resolution_) throw InvalidArgument("cell coordinate out of range");
        f = f * resolution_ + c;
    }
    return f;
}

bool CellSet::contains_flat(std::int64_t flat) const {
    return std::binary_search(cells_.begin(), cells_.end(), flat);
}

CellSet CellSet::refined(std::int64_t new_resolution) const {
    if (new_resolution < resolution_ || new_resolution % resolution_ != 0) {
        throw InvalidArgument("refinement must be a multiple of the current resolution");
    }
    const std::int64_t k = new_resolution / resolution_;
    if (k == 1) return *this;
    check_domain_size(checked_pow(new_resolution, dim_));

    std::vector<std::int64_t> out;
    out.reserve(cells_.size() * std::size_t(checked_pow(k, dim_)));
    std::vector<std::int64_t> sub(std::size_t(dim_), 0);
    for (std::int64_t flat : cells_) {
        const auto base = coords_of(flat);
        std::fill(sub.begin(), sub.end(), 0);
        while (true) {
            std::int64_t f = 0;
            for (int i = 0; i < dim_; ++i) {
                f = f * new_resolution + base[std::size_t(i)] * k + sub[std::size_t(i)];
            }
            out.push_back(f);
            int i = dim_ - 1;
            while (i >= 0 && ++sub[std::size_t(i)] == k) sub[std::size_t(i)] = 0, --i;
            if (i < 0) break;
        }
    }
    return from_flat(dim_, new_resolution, std::move(out));
}

CellSet CellSet::translated(const std::vector<Rational>& shift) const {
    if (int(shift.size()) != dim_) throw SpecMismatch("shift dimension mismatch");
    std::vector<std::int64_t> offset(static_cast<std::size_t>(dim_));
    for (int i = 0; i < dim_; ++i) {
        const Rational& s = shift[std::size_t(i)];
        if (resolution_ % s.den() != 0) {
            throw InvalidArgument("shift denominator does not divide the resolution");
        }
        offset[std::size_t(i)] = floor_mod(s.num() * (resolution_ / s.den()), resolution_);
    }
    std::vector<std::int64_t> out;
    out.reserve(cells_.size());
    for (std::int64_t flat : cells_) {
        auto c = coords_of(flat);
        for (int i = 0; i < dim_; ++i) {
            c[std::size_t(i)] = (c[std::size_t(i)] + offset[std::size_t(i)]) % resolution_;
        }
        out.push_back(flat_of(c));
    }
    return from_flat(dim_, resolution_, std::move(out));
}

CellSet CellSet::complement() const {
    std::vector<std::int64_t> out;
    out.reserve(std::size_t(grid_size() - count()));
    std::size_t k = 0;
    for (std::int64_t f = 0; f < grid_size(); ++f) {
        if (k < cells_.size() && cells_[k] == f) {
            ++k;
        } else {
            out.push_back(f);
        }
    }
    return from_flat(dim_, resolution_, std::move(out));
}

CellSet CellSet::unioned(const CellSet& o) const {
    if (dim_ != o.dim_ || resolution_ != o.resolution_) {
        throw SpecMismatch("cell sets live on different grids");
    }
    std::vector<std::int64_t> out;
    out.reserve(cells_.size() + o.cells_.size());
    std::set_union(cells_.begin(), cells_.end(), o.cells_.begin(), o.cells_.end(),
                   std::back_inserter(out));
    return from_flat(dim_, resolution_, std::move(out));
}

bool CellSet::is_edge_connected() const {
    if (cells_.empty()) return false;
    std::vector<std::int64_t> stack = {cells_[0]};
    std::vector<std::uint8_t> seen(cells_.size(), 0);
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const std::int64_t f = stack.back();
        stack.pop_back();
        const auto c = coords_of(f);
        for (int i = 0; i < dim_; ++i) {
            for (int delta : {-1, 1}) {
                auto n = c;
                n[std::size_t(i)] = floor_mod(n[std::size_t(i)] + delta, resolution_);
                const std::int64_t nf = flat_of(n);
                const auto it = std::lower_bound(cells_.begin(), cells_.end(), nf);
                if (it == cells_.end() || *it != nf) continue;
                const std::size_t pos = std::size_t(it - cells_.begin());
                if (!seen[pos]) {
                    seen[pos] = 1;
                    ++reached;
                    stack.push_back(nf);
                }
            }
        }
    }
    return reached == cells_.size();
}

std::int64_t common_resolution(std::int64_t base, const std::vector<std::vector<Rational>>& vecs,
                               int dim) {
    std::int64_t q = base;
    for (const auto& v : vecs) {
        if (int(v.size()) != dim) throw SpecMismatch("vector dimension mismatch");
        for (const auto& c : v) q = std::lcm(q, c.den());
    }
    std::int64_t total = 1;
    for (int i = 0; i < dim; ++i) total = checked_mul(total, q);
    check_domain_size(total);
    return q;
}

} // namespace tilekit
