#include <algorithm>
#include <cmath>
#include <numeric>

#include "tilekit/caps.hpp"
#include "tilekit/group.hpp"
#include "tilekit/prng.hpp"
#include "tilekit/tiling.hpp"
#include "tilekit/torus.hpp"

namespace tilekit {

namespace {

std::int64_t first_prime_above(std::int64_t n) {
    std::int64_t p = std::max<std::int64_t>(n + 1, 2);
    auto prime = [](std::int64_t x) {
        for (std::int64_t d = 2; d * d <= x; ++d) {
            if (x % d == 0) return false;
        }
        return x >= 2;
    };
    while (!prime(p)) ++p;
    return p;
}

} // namespace

CircleRationalityReport circle_rationality(const std::vector<SymbolicScalar>& shifts,
                                           const CellSet& set, int samples, std::uint64_t seed) {
    if (set.dim() != 1) throw SpecMismatch("circle case needs a one-dimensional set");
    if (shifts.empty()) throw InvalidArgument("shift family must be nonempty");

    CircleRationalityReport rep;
    rep.shift = shifts.front().symbolic_part();

    bool translate = true;
    for (const auto& s : shifts) {
        if (!(s.symbolic_part() == rep.shift)) {
            translate = false;
            break;
        }
    }

    if (translate) {
        rep.rational_translate = true;
        std::vector<std::vector<Rational>> surrogate;
        for (const auto& s : shifts) {
            rep.surrogate.push_back(s.rational_part());
            surrogate.push_back({s.rational_part()});
        }
        if (!verify_rational_torus_tiling(surrogate, set).is_tiling) {
            throw PremiseViolation("the translated rational family does not tile the circle");
        }
        return rep;
    }

    // Irrational differences: no member of the family can tile. Each symbol
    // samples with its own prime denominator, larger than every denominator in
    // sight, so a substituted difference keeps a prime in its denominator
    // unless the symbols cancel exactly; a tiling by a grid set would force
    // differences onto the grid. A shared denominator would not do: two
    // independent symbols drawing the same j/p collapse to a rational
    // translate, which may genuinely tile.
    std::int64_t bound = set.resolution();
    std::vector<int> ids;
    for (const auto& s : shifts) {
        bound = std::max(bound, s.rational_part().den());
        for (const auto& [id, c] : s.symbol_coeffs()) {
            bound = std::max({bound, c.den(), c.num() < 0 ? -c.num() : c.num()});
            ids.push_back(id);
        }
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::vector<std::int64_t> primes;
    for (std::size_t k = 0; k < ids.size(); ++k)
        primes.push_back(first_prime_above(primes.empty() ? bound : primes.back()));

    for (int s = 0; s < samples; ++s) {
        std::map<int, Rational> values;
        for (std::size_t k = 0; k < ids.size(); ++k) {
            const std::uint64_t h = counter_hash(seed, std::uint64_t(s) + 1, std::uint64_t(k));
            const std::int64_t p = primes[k];
            values[ids[k]] = Rational(1 + std::int64_t(h % std::uint64_t(p - 1)), p);
        }
        std::vector<std::vector<Rational>> concrete;
        concrete.reserve(shifts.size());
        for (const auto& f : shifts) concrete.push_back({f.substitute(values)});
        ++rep.samples_checked;
        if (verify_rational_torus_tiling(concrete, set).is_tiling) ++rep.samples_tiled;
    }
    rep.rational_translate = false;
    return rep;
}

namespace {

struct LiftedProfile {
    Rational start;    // absolute lift of the support start, in [0,1)
    StepFunction line; // supported on [start, start + length]
};

// Turns a step circle profile into a line step function supported on its
// single support arc. The profile must vanish somewhere and have one arc.
LiftedProfile lift_circle_step(const CircleProfile& prof) {
    // (start, value) around the circle with starts ascending in [0,1); a
    // leading negative start marks a run fused across the wrap: split it.
    std::vector<std::pair<Rational, Rational>> ring;
    for (const auto& s : prof.step_segments()) {
        if (s.first < Rational(0)) {
            ring.insert(ring.begin(), {Rational(0), s.second});
            ring.push_back({s.first + Rational(1), s.second});
        } else {
            ring.push_back(s);
        }
    }

    std::size_t zero_at = ring.size();
    for (std::size_t i = 0; i < ring.size(); ++i) {
        if (ring[i].second.is_zero()) {
            zero_at = i;
            break;
        }
    }
    if (zero_at == ring.size()) throw LemmaViolation("fiber profile has full support");

    // walk one turn starting right after the zero segment, unwrapping
    // positions past 1; the nonzero segments must form a single run
    std::vector<Rational> starts, values;
    Rational support_end;
    bool in_support = false, support_done = false;
    for (std::size_t k = 1; k <= ring.size(); ++k) {
        const std::size_t i = (zero_at + k) % ring.size();
        const bool wrapped = i <= zero_at;
        const Rational start = ring[i].first + (wrapped ? Rational(1) : Rational(0));
        if (ring[i].second.is_zero()) {
            if (in_support && !support_done) {
                support_end = start;
                support_done = true;
            }
            continue;
        }
        if (support_done) throw LemmaViolation("fiber profile support is disconnected");
        in_support = true;
        starts.push_back(start);
        values.push_back(ring[i].second);
    }
    if (!in_support) throw LemmaViolation("fiber profile is empty");

    starts.push_back(support_end);
    LiftedProfile out;
    out.start = starts.front().mod1();
    const Rational delta = out.start - starts.front();
    for (auto& b : starts) b += delta;
    out.line = StepFunction(std::move(starts), std::move(values));
    return out;
}

// Maximal value-1 arcs (start, end) of a {0,1} circle profile.
std::vector<std::pair<Rational, Rational>> unit_arcs(const CircleProfile& prof) {
    const auto segs = prof.step_segments();
    std::vector<std::pair<Rational, Rational>> arcs;
    for (std::size_t i = 0; i < segs.size(); ++i) {
        if (!(segs[i].second == Rational(1))) continue;
        const Rational end = (i + 1 < segs.size()) ? segs[i + 1].first : segs[0].first + Rational(1);
        arcs.emplace_back(segs[i].first, end);
    }
    return arcs;
}

} // namespace

ConnectedCaseReport connected_case(const std::vector<SymbolicVector>& shifts, const CellSet& set) {
    if (set.dim() != 2) throw Unsupported("connected case is planar only");
    if (set.empty()) throw ConnectedRequired("base set is empty");
    if (!set.is_edge_connected()) throw ConnectedRequired("base set is not edge-connected");

    const SymbolicTilingReport cert = verify_symbolic_tiling(shifts, set);
    if (!cert.certified) {
        throw PremiseViolation("shift family is not a certified sliding tiling: " + cert.reason);
    }

    ConnectedCaseReport rep;
    rep.velocity = cert.velocity;

    if (rep.velocity.classes.size() == 1) {
        rep.all_rational = true;
        return rep;
    }

    if (!rep.velocity.common_direction) {
        throw LemmaViolation("moving classes of a connected tiling are not parallel");
    }
    rep.direction = *rep.velocity.common_direction;
    std::array<std::int64_t, 2> h{-rep.direction[1], rep.direction[0]};
    if (h[0] < 0 || (h[0] == 0 && h[1] < 0)) {
        h[0] = -h[0];
        h[1] = -h[1];
    }
    rep.annihilator = {h[0], h[1]};

    const std::int64_t q = common_resolution(set.resolution(), rep.velocity.surrogate, 2);
    const CellSet refined = set.refined(q);

    const CircleProfile prof_a = CircleProfile::of_cellset(refined, h[0], h[1]);
    if (!prof_a.is_step()) {
        throw LemmaViolation("fiber profile of the base set is not piecewise constant");
    }
    const LiftedProfile lifted = lift_circle_step(prof_a);
    rep.psi = lifted.line;
    const Rational psi_start = lifted.start;
    const Rational psi_len =
        lifted.line.breakpoints().back() - lifted.line.breakpoints().front();

    // per-class strips and their maximal arcs
    for (std::size_t ci = 0; ci < rep.velocity.classes.size(); ++ci) {
        const auto& cls = rep.velocity.classes[ci];
        std::vector<std::int64_t> cells;
        for (std::size_t i : cls.members) {
            const CellSet t = refined.translated(rep.velocity.surrogate[i]);
            cells.insert(cells.end(), t.flat_cells().begin(), t.flat_cells().end());
        }
        const CellSet u = CellSet::from_flat(2, q, std::move(cells));
        const CircleProfile prof_u = CircleProfile::of_cellset(u, h[0], h[1]);
        if (!prof_u.is_zero_one()) {
            throw LemmaViolation("class strip profile is not an indicator");
        }

        ConnectedStrip strip;
        strip.class_index = ci;
        for (const auto& arc : unit_arcs(prof_u)) {
            ConnectedArc a;
            a.arc = arc;
            strip.arcs.push_back(std::move(a));
        }

        // assign each class member to the unique arc containing its translate
        for (std::size_t i : cls.members) {
            Rational pi(0);
            const auto& f0 = rep.velocity.surrogate[i];
            pi = (Rational(h[0]) * f0[0] + Rational(h[1]) * f0[1]).mod1();
            bool placed = false;
            for (auto& a : strip.arcs) {
                const Rational delta = (pi + psi_start - a.arc.first).mod1();
                if (delta + psi_len <= a.arc.second - a.arc.first) {
                    a.members.push_back(i);
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                throw LemmaViolation("translate support does not fit a single arc");
            }
        }
        rep.strips.push_back(std::move(strip));
    }

    // per-arc interval classification and refined coset parts
    for (auto& strip : rep.strips) {
        for (auto& a : strip.arcs) {
            if (a.members.empty()) {
                throw LemmaViolation("strip arc has no assigned translates");
            }
            RationalMultiset positions;
            std::map<Rational, std::vector<std::size_t>> by_coset;
            for (std::size_t i : a.members) {
                const auto& f0 = rep.velocity.surrogate[i];
                const Rational pi = (Rational(h[0]) * f0[0] + Rational(h[1]) * f0[1]).mod1();
                const Rational delta = (pi + psi_start - a.arc.first).mod1();
                // lifted start of the translate's support inside the arc,
                // shifted back so psi's own lift lines up
                positions.add(a.arc.first + delta - psi_start);
                by_coset[pi].push_back(i);
            }
            a.cls = classify_connected(positions, rep.psi, a.arc.first, a.arc.second);
            if (rep.m == 0) rep.m = a.cls.m;
            if (rep.m != a.cls.m) {
                throw LemmaViolation("refined part cardinality differs between arcs");
            }
            for (auto& [coset, members] : by_coset) {
                if (std::int64_t(members.size()) != a.cls.m) {
                    throw LemmaViolation("coset part size differs from the classified m");
                }
                ConnectedArcPart part;
                part.members = members;
                part.coset = coset;
                const Rational start = (coset + psi_start).mod1();
                part.strip = {start, start + psi_len};
                std::vector<std::int64_t> cells;
                for (std::size_t i : members) {
                    const CellSet t = refined.translated(rep.velocity.surrogate[i]);
                    cells.insert(cells.end(), t.flat_cells().begin(), t.flat_cells().end());
                }
                const CellSet up = CellSet::from_flat(2, q, std::move(cells));
                part.invariant = verify_invariance_along(up, rep.direction).invariant;
                if (!part.invariant) {
                    throw LemmaViolation("refined part union is not invariant");
                }
                a.parts.push_back(std::move(part));
            }
        }
    }
    return rep;
}

CellSet assemble_circle_tiling(std::int64_t q_den, const std::vector<std::int64_t>& tile_residues,
                               const std::vector<std::vector<std::int64_t>>& assignment) {
    if (q_den < 1) throw InvalidArgument("denominator must be >= 1");
    if (assignment.empty()) throw InvalidArgument("assignment must cover at least one slice");
    const std::int64_t r_count = std::int64_t(assignment.size());

    const QuotientSpec zq = finite_quotient({std::max<std::int64_t>(q_den, 2)});
    // q_den = 1 means the trivial group; handle it directly
    std::vector<GroupElement> tile;
    for (std::int64_t t : tile_residues) {
        if (t < 0 || t >= q_den) throw InvalidArgument("tile residue out of range");
        tile.push_back(GroupElement({t}));
    }

    std::vector<std::int64_t> cells;
    for (std::int64_t r = 0; r < r_count; ++r) {
        const auto& slice = assignment[std::size_t(r)];
        for (std::int64_t a : slice) {
            if (a < 0 || a >= q_den) throw InvalidAssignment("assignment value out of range");
        }
        if (q_den == 1) {
            if (!(tile_residues == std::vector<std::int64_t>{0}) ||
                !(slice == std::vector<std::int64_t>{0})) {
                throw InvalidAssignment("only {0} tiles the trivial cyclic group");
            }
        } else {
            std::vector<GroupElement> comp;
            for (std::int64_t a : slice) comp.push_back(GroupElement({a}));
            const PeriodicSet ps(zq, comp);
            if (!verify_tiling(zq, tile, ps).is_tiling) {
                throw InvalidAssignment("slice " + std::to_string(r) +
                                        " is not a tiling complement");
            }
        }
        for (std::int64_t a : slice) cells.push_back(a * r_count + r);
    }
    return CellSet::from_flat(1, checked_mul(q_den, r_count), std::move(cells));
}

SineCheckReport sine_multitile_check(double t, std::int64_t samples, std::uint64_t seed,
                                     double eps) {
    if (samples < 1) throw InvalidArgument("need at least one sample");
    SineCheckReport rep;
    rep.samples = samples;

    const auto f = [](double x) { return std::sin(M_PI * x) / 10.0; };
    const auto frac = [](double x) { return x - std::floor(x); };

    for (std::int64_t s = 0; s < samples; ++s) {
        const double x = uniform_unit(seed, s, 0);
        const double y = uniform_unit(seed, s, 1);
        const double z = uniform_unit(seed, s, 2);

        const double f1 = f(x - t);          // boundary level 0
        const double f2 = f(x + y - t);      // boundary level 1/3
        const double f3 = f(y - t);          // boundary level 2/3

        const double b1 = frac(z - f1);
        const double b2 = frac(z - (1.0 / 3.0) - f2);
        const double b3 = frac(z - (2.0 / 3.0) - f3);

        bool near = false;
        for (double b : {b1, b2, b3}) {
            if (b < eps || 1.0 - b < eps) near = true;
        }
        if (near) {
            ++rep.skipped_boundary;
            continue;
        }

        int covered = 0;
        if (b1 < 1.0 / 3.0 + f2 - f1) ++covered;
        if (b2 < 1.0 / 3.0 + f3 - f2) ++covered;
        if (b3 < 1.0 / 3.0 + f1 - f3) ++covered;
        if (covered != 1) ++rep.violations;
    }
    return rep;
}

} // namespace tilekit
