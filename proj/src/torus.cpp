#include "tilekit/torus.hpp"

#include <algorithm>
#include <numeric>

#include "tilekit/caps.hpp"
#include "tilekit/prng.hpp"

namespace tilekit {

RationalTorusReport verify_rational_torus_tiling(const std::vector<std::vector<Rational>>& shifts,
                                                 const CellSet& set) {
    if (shifts.empty()) throw InvalidArgument("shift family must be nonempty");
    const int d = set.dim();
    const std::int64_t q = common_resolution(set.resolution(), shifts, d);
    const CellSet ref = set.refined(q);

    std::int64_t total = 1;
    for (int i = 0; i < d; ++i) total = checked_mul(total, q);
    std::vector<std::int32_t> count(std::size_t(total), 0);

    std::vector<std::int64_t> offset(static_cast<std::size_t>(d));
    for (const auto& f : shifts) {
        for (int i = 0; i < d; ++i) {
            offset[std::size_t(i)] = floor_mod(f[std::size_t(i)].num() * (q / f[std::size_t(i)].den()), q);
        }
        for (std::int64_t flat : ref.flat_cells()) {
            std::int64_t moved = 0;
            std::int64_t rem = flat;
            // decode, shift and re-encode in one pass over the digits
            static thread_local std::vector<std::int64_t> digits;
            digits.assign(std::size_t(d), 0);
            for (int i = d; i-- > 0;) {
                digits[std::size_t(i)] = rem % q;
                rem /= q;
            }
            for (int i = 0; i < d; ++i) {
                moved = moved * q + (digits[std::size_t(i)] + offset[std::size_t(i)]) % q;
            }
            ++count[std::size_t(moved)];
        }
    }

    RationalTorusReport rep;
    rep.resolution = q;
    for (auto c : count) ++rep.level_histogram[c];
    rep.is_tiling = rep.level_histogram.size() == 1 && rep.level_histogram.count(1) == 1;
    return rep;
}

namespace {

// Primitive integer vector spanning the same line as a rational vector.
std::vector<std::int64_t> primitive_direction(const std::vector<Rational>& v) {
    std::int64_t l = 1;
    for (const auto& c : v) l = std::lcm(l, c.den());
    std::vector<std::int64_t> w;
    w.reserve(v.size());
    std::int64_t g = 0;
    for (const auto& c : v) {
        const std::int64_t x = checked_mul(c.num(), l / c.den());
        w.push_back(x);
        g = std::gcd(g, x);
    }
    if (g == 0) throw InvalidArgument("zero vector has no direction");
    for (auto& x : w) x /= g;
    for (const auto& x : w) {
        if (x != 0) {
            if (x < 0) {
                for (auto& y : w) y = -y;
            }
            break;
        }
    }
    return w;
}

bool parallel(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            if (checked_mul(a[i], b[j]) != checked_mul(a[j], b[i])) return false;
        }
    }
    return true;
}

// All nonzero symbol coefficient vectors of one symbolic vector.
std::vector<std::vector<Rational>> coefficient_vectors(const SymbolicVector& v) {
    std::vector<std::vector<Rational>> out;
    for (int id : v.symbols()) {
        std::vector<Rational> c;
        c.reserve(std::size_t(v.dim()));
        bool nonzero = false;
        for (int i = 0; i < v.dim(); ++i) {
            const auto& coeffs = v[i].symbol_coeffs();
            const auto it = coeffs.find(id);
            c.push_back(it == coeffs.end() ? Rational(0) : it->second);
            nonzero = nonzero || !c.back().is_zero();
        }
        if (nonzero) out.push_back(std::move(c));
    }
    return out;
}

// Common primitive line of a family of rational vectors, if one exists.
std::optional<std::vector<std::int64_t>> common_line(
    const std::vector<std::vector<Rational>>& vecs) {
    std::optional<std::vector<std::int64_t>> dir;
    for (const auto& c : vecs) {
        const auto w = primitive_direction(c);
        if (!dir) {
            dir = w;
        } else if (!parallel(*dir, w)) {
            return std::nullopt;
        }
    }
    return dir;
}

} // namespace

WeakRationalDirection weak_rational_direction(const std::vector<SymbolicVector>& shifts) {
    if (shifts.empty()) throw InvalidArgument("shift family must be nonempty");
    for (const auto& f : shifts) {
        if (f.dim() != 2) throw Unsupported("weak rational directions are planar only");
    }

    std::vector<std::vector<Rational>> coeffs;
    for (const auto& f : shifts) {
        for (auto& c : coefficient_vectors(f)) coeffs.push_back(std::move(c));
    }

    WeakRationalDirection out;
    if (coeffs.empty()) {
        out.kind = WeakRationalDirection::Kind::FullyRational;
        return out;
    }
    const auto line = common_line(coeffs);
    if (!line) {
        out.kind = WeakRationalDirection::Kind::NoDirection;
        return out;
    }
    out.kind = WeakRationalDirection::Kind::Direction;
    // h is the primitive annihilator of the common line
    std::array<std::int64_t, 2> h{-(*line)[1], (*line)[0]};
    if (h[0] < 0 || (h[0] == 0 && h[1] < 0)) {
        h[0] = -h[0];
        h[1] = -h[1];
    }
    out.h = h;
    return out;
}

VelocityDecomposition velocity_decomposition(const std::vector<SymbolicVector>& shifts) {
    if (shifts.empty()) throw InvalidArgument("shift family must be nonempty");
    const int d = shifts.front().dim();
    for (const auto& f : shifts) {
        if (f.dim() != d) throw SpecMismatch("shift dimensions differ");
    }

    VelocityDecomposition out;
    out.normalized_by = shifts.front().symbolic_part();

    std::vector<SymbolicVector> velocity;
    velocity.reserve(shifts.size());
    for (const auto& f : shifts) {
        out.surrogate.push_back(f.rational_part());
        velocity.push_back(f.symbolic_part() - out.normalized_by);
    }

    std::map<SymbolicVector, std::size_t> class_of;
    for (std::size_t i = 0; i < shifts.size(); ++i) {
        const auto [it, inserted] = class_of.emplace(velocity[i], out.classes.size());
        if (inserted) {
            VelocityClass c;
            c.velocity = velocity[i];
            out.classes.push_back(std::move(c));
        }
        out.classes[it->second].members.push_back(i);
    }

    bool conflict = false;
    std::optional<std::vector<std::int64_t>> common;
    bool any_moving = false;
    for (auto& c : out.classes) {
        if (c.velocity.is_zero()) {
            c.direction = std::vector<std::int64_t>{};
            continue;
        }
        any_moving = true;
        const auto line = common_line(coefficient_vectors(c.velocity));
        if (!line) {
            c.direction = std::nullopt;
            conflict = true;
            continue;
        }
        c.direction = *line;
        if (!common) {
            common = *line;
        } else if (!parallel(*common, *line)) {
            conflict = true;
        }
    }
    if (any_moving && !conflict) out.common_direction = common;
    out.parallel_violation = conflict && d == 2;
    return out;
}

std::array<std::array<std::int64_t, 2>, 2> sl2_normalize(const std::array<std::int64_t, 2>& v) {
    const std::int64_t v1 = v[0], v2 = v[1];
    if (std::gcd(v1, v2) != 1) throw InvalidArgument("vector must be primitive");

    std::int64_t u1, u2;
    if (v1 == 0) {
        u1 = 0;
        u2 = v2; // v2 = +-1
    } else {
        // extended Euclid on (v1, v2)
        std::int64_t r0 = v1, r1 = v2, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
        while (r1 != 0) {
            const std::int64_t qq = r0 / r1;
            std::tie(r0, r1) = std::make_pair(r1, r0 - qq * r1);
            std::tie(s0, s1) = std::make_pair(s1, s0 - qq * s1);
            std::tie(t0, t1) = std::make_pair(t1, t0 - qq * t1);
        }
        // r0 = +-1 = s0 v1 + t0 v2
        u1 = r0 > 0 ? s0 : -s0;
        u2 = r0 > 0 ? t0 : -t0;
        // canonical representative: u2 in [0, |v1|)
        const std::int64_t av1 = v1 < 0 ? -v1 : v1;
        const std::int64_t u2r = floor_mod(u2, av1);
        const std::int64_t k = (u2r - u2) / v1;
        u2 = u2r;
        u1 -= checked_mul(k, v2);
    }
    return {{{u1, u2}, {-v2, v1}}};
}

InvarianceReport verify_invariance_along(const CellSet& set, const std::vector<std::int64_t>& v) {
    const int d = set.dim();
    if (int(v.size()) != d) throw SpecMismatch("direction dimension mismatch");
    std::int64_t g = 0;
    for (auto x : v) g = std::gcd(g, x);
    if (g == 0) throw InvalidArgument("direction must be nonzero");
    std::vector<std::int64_t> w = v;
    for (auto& x : w) x /= g;
    for (auto& x : w) {
        if (x != 0) {
            if (x < 0) {
                for (auto& y : w) y = -y;
            }
            break;
        }
    }

    InvarianceReport rep;
    rep.direction = w;

    if (d == 1) {
        rep.invariant = set.count() == 0 || set.count() == set.grid_size();
        if (!rep.invariant) rep.witness = std::make_pair(Rational(0), set.measure());
        return rep;
    }

    if (d == 2) {
        std::array<std::int64_t, 2> h{-w[1], w[0]};
        if (h[0] < 0 || (h[0] == 0 && h[1] < 0)) {
            h[0] = -h[0];
            h[1] = -h[1];
        }
        rep.annihilator = {h[0], h[1]};
        const CircleProfile prof = CircleProfile::of_cellset(set, h[0], h[1]);
        rep.invariant = prof.is_zero_one();
        if (!rep.invariant) {
            for (std::size_t i = 0; i < prof.segment_count(); ++i) {
                const Rational end = (i + 1 < prof.segment_count()) ? prof.start(i + 1)
                                                                    : prof.start(0) + Rational(1);
                const Rational len = end - prof.start(i);
                for (int denom : {2, 4, 8}) {
                    const Rational t = prof.start(i) + len / Rational(denom);
                    const Rational val = prof.value_at(t);
                    if (!(val == Rational(0) || val == Rational(1))) {
                        rep.witness = std::make_pair(t.mod1(), val);
                        break;
                    }
                }
                if (rep.witness) break;
            }
        }
        return rep;
    }

    // d >= 3: axis directions only
    int axis = -1;
    for (int i = 0; i < d; ++i) {
        if (w[std::size_t(i)] != 0) {
            if (axis >= 0 || w[std::size_t(i)] != 1) {
                throw Unsupported("only axis directions are supported above dimension 2");
            }
            axis = i;
        }
    }
    rep.invariant = true;
    for (std::int64_t flat : set.flat_cells()) {
        auto c = set.coords_of(flat);
        c[std::size_t(axis)] = (c[std::size_t(axis)] + 1) % set.resolution();
        if (!set.contains_flat(set.flat_of(c))) {
            rep.invariant = false;
            const auto orig = set.coords_of(flat);
            rep.witness = std::make_pair(Rational(orig[std::size_t(axis)], set.resolution()),
                                         Rational(-1));
            break;
        }
    }
    return rep;
}

namespace {

std::int64_t pick_substitution_denominator(std::int64_t base, int dim) {
    const std::int64_t soft_cap = std::min<std::int64_t>(domain_cap(), std::int64_t{1} << 21);
    for (std::int64_t p : {97, 61, 41, 31, 23, 17, 13, 11, 7, 5, 3, 2}) {
        const std::int64_t q = std::lcm(base, p);
        std::int64_t total = 1;
        bool ok = true;
        for (int i = 0; i < dim && ok; ++i) {
            if (__builtin_mul_overflow(total, q, &total) || total > soft_cap) ok = false;
        }
        if (ok) return p;
    }
    return 2;
}

CellSet class_union(const CellSet& refined_set, const std::vector<std::vector<Rational>>& surrogate,
                    const std::vector<std::size_t>& members) {
    std::vector<std::int64_t> cells;
    for (std::size_t i : members) {
        const CellSet t = refined_set.translated(surrogate[i]);
        cells.insert(cells.end(), t.flat_cells().begin(), t.flat_cells().end());
    }
    return CellSet::from_flat(refined_set.dim(), refined_set.resolution(), std::move(cells));
}

} // namespace

SymbolicTilingReport verify_symbolic_tiling(const std::vector<SymbolicVector>& shifts,
                                            const CellSet& set, int substitution_samples,
                                            std::uint64_t seed) {
    const int d = set.dim();
    for (const auto& f : shifts) {
        if (f.dim() != d) throw SpecMismatch("shift dimension does not match the set");
    }

    SymbolicTilingReport rep;
    rep.velocity = velocity_decomposition(shifts);
    rep.surrogate = verify_rational_torus_tiling(rep.velocity.surrogate, set);

    bool certified = rep.surrogate.is_tiling;
    if (!certified) rep.reason = "rational surrogate does not tile";

    const std::int64_t q = common_resolution(set.resolution(), rep.velocity.surrogate, d);
    const CellSet refined = set.refined(q);

    for (const auto& cls : rep.velocity.classes) {
        if (cls.velocity.is_zero()) continue;
        if (!cls.direction || cls.direction->empty()) {
            throw Unsupported("velocity class does not move along a single line");
        }
        const CellSet u = class_union(refined, rep.velocity.surrogate, cls.members);
        InvarianceReport inv = verify_invariance_along(u, *cls.direction);
        if (!inv.invariant && certified) {
            certified = false;
            rep.reason = "a class union is not invariant along its direction";
        }
        rep.class_invariance.push_back(std::move(inv));
    }

    if (certified && substitution_samples > 0) {
        std::vector<int> ids;
        for (const auto& f : shifts) {
            for (int id : f.symbols()) ids.push_back(id);
        }
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

        const std::int64_t p = pick_substitution_denominator(q, d);
        for (int s = 0; s < substitution_samples && !ids.empty(); ++s) {
            SubstitutionSample sample;
            for (std::size_t k = 0; k < ids.size(); ++k) {
                const std::uint64_t h = counter_hash(seed, std::uint64_t(s) + 1, std::uint64_t(k));
                sample.values[ids[k]] = Rational(1 + std::int64_t(h % std::uint64_t(p - 1)), p);
            }
            std::vector<std::vector<Rational>> concrete;
            concrete.reserve(shifts.size());
            for (const auto& f : shifts) concrete.push_back(f.substitute(sample.values));
            sample.tiled = verify_rational_torus_tiling(concrete, set).is_tiling;
            if (!sample.tiled) {
                certified = false;
                rep.reason = "substitution sample failed to tile";
            }
            rep.substitution_samples.push_back(std::move(sample));
        }
    }

    rep.certified = certified;
    return rep;
}

} // namespace tilekit
