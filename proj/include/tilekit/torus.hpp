#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tilekit/cellset.hpp"
#include "tilekit/intervals.hpp"
#include "tilekit/profile.hpp"
#include "tilekit/symbolic.hpp"

namespace tilekit {

struct RationalTorusReport {
    bool is_tiling = false;
    std::int64_t resolution = 1; // common grid the check ran on
    std::map<std::int64_t, std::int64_t> level_histogram;
};

/// Exact check of (+)_{f in F} (f + A) = T^d for rational shift vectors: the
/// grid is refined to the least common resolution and coverage counted cell by
/// cell.
RationalTorusReport verify_rational_torus_tiling(const std::vector<std::vector<Rational>>& shifts,
                                                 const CellSet& set);

struct WeakRationalDirection {
    enum class Kind { FullyRational, Direction, NoDirection };
    Kind kind = Kind::FullyRational;
    /// Primitive integer covector h with h.f rational for all shifts
    /// (Kind::Direction only); first nonzero component positive.
    std::array<std::int64_t, 2> h{0, 0};
};

/// Looks for a rational direction of a planar symbolic shift family: a
/// nonzero integer covector annihilating every symbol coefficient vector.
WeakRationalDirection weak_rational_direction(const std::vector<SymbolicVector>& shifts);

struct VelocityClass {
    std::vector<std::size_t> members; // indices into the shift family
    SymbolicVector velocity;          // shared symbolic part, relative to shift 0
    /// Primitive integer direction spanning the velocity, sign-normalized;
    /// empty when the velocity is zero, nullopt when no single line fits.
    std::optional<std::vector<std::int64_t>> direction;
};

struct VelocityDecomposition {
    /// Symbolic part of the first shift, subtracted from all of them so the
    /// first class is rational.
    SymbolicVector normalized_by;
    std::vector<std::vector<Rational>> surrogate; // rational parts, one per shift
    std::vector<VelocityClass> classes;           // ordered by first member
    /// All moving classes parallel to one line (always reported when it
    /// exists, any dimension).
    std::optional<std::vector<std::int64_t>> common_direction;
    /// Two moving classes with non-parallel directions in dimension 2.
    bool parallel_violation = false;
};

VelocityDecomposition velocity_decomposition(const std::vector<SymbolicVector>& shifts);

/// M in SL2(Z) mapping the primitive vector v to (1,0); the second row of M
/// annihilates v. Deterministic: the extended-Euclid cofactors are reduced so
/// the top row is the smallest valid representative.
std::array<std::array<std::int64_t, 2>, 2> sl2_normalize(const std::array<std::int64_t, 2>& v);

struct InvarianceReport {
    bool invariant = false;
    std::vector<std::int64_t> direction;   // primitive v actually tested
    std::vector<std::int64_t> annihilator; // h used for the fiber profile (d=2)
    /// Fiber with density strictly between 0 and 1 when not invariant.
    std::optional<std::pair<Rational, Rational>> witness; // (fiber, density)
};

/// Decides whether set + t*v = set (up to null sets) for all real t. In the
/// plane this reduces to the fiber-density profile along the annihilator of v
/// being {0,1}-valued; in higher dimension only axis directions are supported.
InvarianceReport verify_invariance_along(const CellSet& set, const std::vector<std::int64_t>& v);

struct SubstitutionSample {
    std::map<int, Rational> values; // symbol id -> substituted rational
    bool tiled = false;
};

struct SymbolicTilingReport {
    bool certified = false;
    std::string reason; // set when not certified
    RationalTorusReport surrogate;
    VelocityDecomposition velocity;
    /// One entry per moving class, in class order.
    std::vector<InvarianceReport> class_invariance;
    std::vector<SubstitutionSample> substitution_samples;
};

/// Certifies that the symbolic family tiles for every real value of the
/// symbols: the rational surrogate must tile and each moving class union must
/// be invariant along its direction. Substitution samples re-check the
/// certified identity at concrete rational symbol values.
SymbolicTilingReport verify_symbolic_tiling(const std::vector<SymbolicVector>& shifts,
                                            const CellSet& set, int substitution_samples = 2,
                                            std::uint64_t seed = 0);

struct CircleRationalityReport {
    bool rational_translate = false;
    /// rational_translate: F = surrogate + shift with the surrogate tiling.
    std::vector<Rational> surrogate;
    SymbolicScalar shift;
    /// otherwise: substitution evidence that no member of the family tiles.
    std::int64_t samples_checked = 0;
    std::int64_t samples_tiled = 0;
};

/// Circle case: a sliding family tiles only if it is a translate of a rational
/// tiling. Returns the rational form, or the theorem-violation evidence for a
/// family with irrational differences.
CircleRationalityReport circle_rationality(const std::vector<SymbolicScalar>& shifts,
                                           const CellSet& set, int samples = 16,
                                           std::uint64_t seed = 0);

struct ConnectedArcPart {
    std::vector<std::size_t> members; // shift indices, equal h-coset
    Rational coset;                   // h.f mod 1
    std::pair<Rational, Rational> strip; // arc carrying the part's union
    bool invariant = false;
};

struct ConnectedArc {
    std::pair<Rational, Rational> arc; // maximal arc of the class strip
    std::vector<std::size_t> members;  // shifts assigned to this arc
    IntervalClassification cls;        // recovered (m, c, c') on the lifted line
    std::vector<ConnectedArcPart> parts;
};

struct ConnectedStrip {
    std::size_t class_index;
    std::vector<ConnectedArc> arcs;
};

struct ConnectedCaseReport {
    bool all_rational = false;
    std::vector<std::int64_t> direction;   // common v of the moving classes
    std::vector<std::int64_t> annihilator; // h
    StepFunction psi;                      // fiber profile of the base set, lifted
    std::int64_t m = 0;                    // common refined-part cardinality
    VelocityDecomposition velocity;
    std::vector<ConnectedStrip> strips;
};

/// Planar connected case: for an edge-connected base set, either every shift
/// is rational, or the circle decomposes into strips of maximal arcs on which
/// the fiber profile is a scaled interval indicator and the shifts split into
/// equal-size coset parts, each invariant along the common direction.
ConnectedCaseReport connected_case(const std::vector<SymbolicVector>& shifts, const CellSet& set);

/// Builds the circle set with transversal resolution R = assignment.size():
/// slice r uses the complement assignment[r] of tile_residues in Z/q_den.
/// Every assignment must be a genuine complement (InvalidAssignment).
CellSet assemble_circle_tiling(std::int64_t q_den, const std::vector<std::int64_t>& tile_residues,
                               const std::vector<std::vector<std::int64_t>>& assignment);

struct SineCheckReport {
    std::int64_t samples = 0;
    std::int64_t violations = 0;
    std::int64_t skipped_boundary = 0;
};

/// Monte-Carlo exactness check of the three-piece sine deformation of the
/// [0,1/3) slab tiling of T^3 at deformation time t: random points must be
/// covered exactly once, points within eps of a slab boundary are skipped.
SineCheckReport sine_multitile_check(double t, std::int64_t samples, std::uint64_t seed,
                                     double eps = 1e-9);

/// Deterministic SVG picture of a planar tiling: the base set's translates
/// filled per class, shift points marked. Shift positions are concrete
/// (substituted) coordinates.
struct RenderShift {
    int class_index = 0;
    double x = 0;
    double y = 0;
};

std::string render_svg(const CellSet& set, const std::vector<RenderShift>& shifts);

} // namespace tilekit
