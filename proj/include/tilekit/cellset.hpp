#pragma once

#include <cstdint>
#include <vector>

#include "tilekit/rational.hpp"

namespace tilekit {

/// Finite union of half-open grid cells on the torus [0,1)^d at resolution Q:
/// cell (c_1,...,c_d) is the box prod_i [c_i/Q, (c_i+1)/Q). Stored as sorted
/// unique flat indices in row-major order (first coordinate most significant).
class CellSet {
public:
    CellSet() = default;
    CellSet(int dim, std::int64_t resolution, const std::vector<std::vector<std::int64_t>>& cells);
    static CellSet from_flat(int dim, std::int64_t resolution, std::vector<std::int64_t> flat);
    static CellSet full(int dim, std::int64_t resolution);
    /// Product box prod_i [lo_i/Q, hi_i/Q).
    static CellSet box(int dim, std::int64_t resolution, const std::vector<std::int64_t>& lo,
                       const std::vector<std::int64_t>& hi);

    int dim() const { return dim_; }
    std::int64_t resolution() const { return resolution_; }
    const std::vector<std::int64_t>& flat_cells() const { return cells_; }
    std::int64_t count() const { return std::int64_t(cells_.size()); }
    bool empty() const { return cells_.empty(); }

    /// Q^d, the total number of grid cells.
    std::int64_t grid_size() const;

    Rational measure() const;

    std::vector<std::int64_t> coords_of(std::int64_t flat) const;
    std::int64_t flat_of(const std::vector<std::int64_t>& coords) const;
    bool contains_flat(std::int64_t flat) const;

    /// Same set on a finer grid; new_resolution must be a positive multiple of
    /// the current resolution.
    CellSet refined(std::int64_t new_resolution) const;

    /// Translation by a rational vector whose denominators divide the
    /// resolution.
    CellSet translated(const std::vector<Rational>& shift) const;

    CellSet complement() const;
    CellSet unioned(const CellSet& o) const;

    /// Connectivity under +-1 steps in one coordinate, wrapping around the
    /// torus.
    bool is_edge_connected() const;

    bool operator==(const CellSet& o) const = default;

private:
    int dim_ = 0;
    std::int64_t resolution_ = 1;
    std::vector<std::int64_t> cells_;
};

/// Smallest resolution on which every coordinate of every vector lands on grid
/// points: lcm of base and all denominators. Checked against the domain cap
/// (applied to the resulting grid size).
std::int64_t common_resolution(std::int64_t base, const std::vector<std::vector<Rational>>& vecs,
                               int dim);

} // namespace tilekit
