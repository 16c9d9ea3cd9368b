#include "tilekit/fiid.hpp"

#include <algorithm>
#include <set>

#include "tilekit/errors.hpp"
#include "tilekit/prng.hpp"
#include "tilekit/tiling.hpp"

namespace tilekit {

namespace {

double field_value(std::uint64_t seed, std::int64_t site, std::int64_t fiber) {
    return uniform_unit(seed, static_cast<std::uint64_t>(site), static_cast<std::uint64_t>(fiber));
}

void histogram_gaps(const std::vector<std::int64_t>& sites,
                    std::map<std::int64_t, std::int64_t>& out) {
    for (std::size_t i = 1; i < sites.size(); ++i) out[sites[i] - sites[i - 1]] += 1;
}

} // namespace

TwoTileTrace simulate_two_tile(std::int64_t length, std::uint64_t seed, std::int64_t start) {
    if (length < 10) throw InvalidArgument("two-tile window length must be at least 10");
    TwoTileTrace trace;
    trace.window = FiidWindow{start, length, seed};

    // Strict local minima of the field; interior sites only, so both
    // neighbours carry defined values.
    for (std::int64_t x = start + 1; x < start + length - 1; ++x) {
        double v = field_value(seed, x, 0);
        double left = field_value(seed, x - 1, 0);
        double right = field_value(seed, x + 1, 0);
        if (v == left || v == right) trace.ties += 1;
        if (v < left && v < right) trace.minima.push_back(x);
    }
    if (trace.minima.size() < 2)
        throw DegenerateWindow("fewer than two local minima in window");

    // Fill each stretch between consecutive minima in steps of two, stopping
    // two short of the next minimum. Consecutive fill points end up 2 or 3
    // apart.
    for (std::size_t n = 0; n + 1 < trace.minima.size(); ++n) {
        std::int64_t s = trace.minima[n];
        std::int64_t next = trace.minima[n + 1];
        for (std::int64_t p = s; p <= next - 2; p += 2) trace.fill.push_back(p);
    }
    trace.fill.push_back(trace.minima.back());

    for (std::size_t i = 0; i + 1 < trace.fill.size(); ++i) {
        std::int64_t gap = trace.fill[i + 1] - trace.fill[i];
        if (gap == 2)
            trace.pair_sites.push_back(trace.fill[i]);
        else
            trace.triple_sites.push_back(trace.fill[i]);
    }
    trace.core_start = trace.fill.front();
    trace.core_end = trace.fill.back();
    return trace;
}

FiidValidation validate_two_tile(const TwoTileTrace& trace,
                                 std::optional<std::pair<std::int64_t, std::int64_t>> core_override) {
    FiidValidation report;
    report.core_start = core_override ? core_override->first : trace.core_start;
    report.core_end = core_override ? core_override->second : trace.core_end;
    histogram_gaps(trace.minima, report.gap_histogram);
    histogram_gaps(trace.fill, report.fill_gap_histogram);
    if (report.core_end <= report.core_start) return report;

    std::map<std::int64_t, std::int64_t> cover;
    for (std::int64_t s : trace.pair_sites)
        for (std::int64_t f = 0; f < 2; ++f) cover[s + f] += 1;
    for (std::int64_t s : trace.triple_sites)
        for (std::int64_t f = 0; f < 3; ++f) cover[s + f] += 1;
    std::int64_t in_core_a1 = 0, in_core_a2 = 0;
    for (std::int64_t x = report.core_start; x < report.core_end; ++x) {
        auto it = cover.find(x);
        std::int64_t c = it == cover.end() ? 0 : it->second;
        if (c != 1) report.coverage_violations += 1;
    }
    for (std::size_t i = 1; i < trace.minima.size(); ++i)
        if (trace.minima[i] - trace.minima[i - 1] < 2) report.constraint_violations += 1;
    for (std::size_t i = 1; i < trace.fill.size(); ++i) {
        std::int64_t gap = trace.fill[i] - trace.fill[i - 1];
        if (gap != 2 && gap != 3) report.constraint_violations += 1;
    }
    double span = double(report.core_end - report.core_start);
    for (std::int64_t s : trace.pair_sites)
        if (s >= report.core_start && s < report.core_end) in_core_a1 += 1;
    for (std::int64_t s : trace.triple_sites)
        if (s >= report.core_start && s < report.core_end) in_core_a2 += 1;
    report.densities.emplace_back("A1", double(in_core_a1) / span);
    report.densities.emplace_back("A2", double(in_core_a2) / span);
    return report;
}

VerticalTrace simulate_vertical(std::int64_t length, std::uint64_t seed, const QuotientSpec& base,
                                const std::vector<GroupElement>& tile,
                                const std::vector<GroupElement>& set, std::int64_t start) {
    if (length < 1) throw InvalidArgument("window length must be positive");
    auto premise = verify_tiling(base, tile, PeriodicSet(base, set));
    if (!premise.is_tiling)
        throw PremiseViolation("base complement does not tile the base group");

    VerticalTrace trace;
    trace.window = FiidWindow{start, length, seed};
    trace.base = base;
    std::set<std::int64_t> seen_set, seen_tile;
    for (const auto& a : set) {
        std::int64_t idx = base.index_of(base.reduce(a));
        if (!seen_set.insert(idx).second) throw InvalidArgument("duplicate complement element");
        trace.set_indices.push_back(idx);
    }
    for (const auto& f : tile) {
        std::int64_t idx = base.index_of(base.reduce(f));
        if (!seen_tile.insert(idx).second) throw InvalidArgument("duplicate tile element");
        trace.tile_indices.push_back(idx);
    }
    std::sort(trace.set_indices.begin(), trace.set_indices.end());
    std::sort(trace.tile_indices.begin(), trace.tile_indices.end());

    std::int64_t order = base.size();
    trace.chosen.reserve(std::size_t(length));
    for (std::int64_t x = start; x < start + length; ++x) {
        std::int64_t best = 0;
        double best_value = field_value(seed, x, 0);
        for (std::int64_t g = 1; g < order; ++g) {
            double v = field_value(seed, x, g);
            if (v == best_value) trace.ties += 1;
            if (v < best_value) {
                best_value = v;
                best = g;
            }
        }
        trace.chosen.push_back(best);
    }
    return trace;
}

FiidValidation validate_vertical(const VerticalTrace& trace) {
    FiidValidation report;
    report.core_start = trace.window.start;
    report.core_end = trace.window.start + trace.window.length;
    const auto& base = trace.base;
    std::vector<std::int64_t> count(std::size_t(base.size()));
    std::int64_t members = 0;
    for (std::int64_t g0 : trace.chosen) {
        std::fill(count.begin(), count.end(), 0);
        for (std::int64_t a : trace.set_indices) {
            std::int64_t cell = base.index_add(g0, a);
            members += 1;
            for (std::int64_t f : trace.tile_indices) count[std::size_t(base.index_add(cell, f))] += 1;
        }
        for (std::int64_t c : count)
            if (c != 1) report.coverage_violations += 1;
    }
    double span = double(trace.window.length) * double(base.size());
    if (span > 0) report.densities.emplace_back("A", double(members) / span);
    return report;
}

void FiniteGroupTable::validate() const {
    int n = order();
    if (n <= 0) throw InvalidArgument("group table is empty");
    if (inverse.size() != mul.size() || names.size() != mul.size())
        throw InvalidArgument("group table field lengths disagree");
    if (identity < 0 || identity >= n) throw InvalidArgument("identity index out of range");
    for (int i = 0; i < n; ++i) {
        if (int(mul[std::size_t(i)].size()) != n)
            throw InvalidArgument("multiplication table is not square");
        for (int j = 0; j < n; ++j) {
            int v = mul[std::size_t(i)][std::size_t(j)];
            if (v < 0 || v >= n) throw InvalidArgument("multiplication entry out of range");
        }
    }
    for (int i = 0; i < n; ++i) {
        if (times(identity, i) != i || times(i, identity) != i)
            throw InvalidArgument("identity row or column is wrong");
        int v = inverse[std::size_t(i)];
        if (v < 0 || v >= n || times(i, v) != identity || times(v, i) != identity)
            throw InvalidArgument("inverse table is wrong");
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (times(times(i, j), k) != times(i, times(j, k)))
                    throw InvalidArgument("multiplication table is not associative");
}

FiniteGroupTable FiniteGroupTable::symmetric3() {
    // Permutations of 012 in lexicographic one-line order.
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                    {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto index_of = [&](const int p[3]) {
        for (int i = 0; i < 6; ++i)
            if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2]) return i;
        return -1;
    };
    FiniteGroupTable g;
    g.mul.assign(6, std::vector<int>(6));
    g.inverse.assign(6, 0);
    g.identity = 0;
    for (int s = 0; s < 6; ++s) {
        for (int t = 0; t < 6; ++t) {
            int composed[3];
            for (int i = 0; i < 3; ++i) composed[i] = perms[s][perms[t][i]];
            g.mul[std::size_t(s)][std::size_t(t)] = index_of(composed);
        }
    }
    for (int s = 0; s < 6; ++s)
        for (int t = 0; t < 6; ++t)
            if (g.times(s, t) == 0) g.inverse[std::size_t(s)] = t;
    for (int s = 0; s < 6; ++s) {
        std::string name;
        for (int i = 0; i < 3; ++i) name.push_back(char('0' + perms[s][i]));
        g.names.push_back(name);
    }
    g.validate();
    return g;
}

FiniteGroupTable FiniteGroupTable::cyclic(int n) {
    if (n <= 0) throw InvalidArgument("cyclic group order must be positive");
    FiniteGroupTable g;
    g.mul.assign(std::size_t(n), std::vector<int>(std::size_t(n)));
    g.inverse.assign(std::size_t(n), 0);
    g.identity = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) g.mul[std::size_t(i)][std::size_t(j)] = (i + j) % n;
        g.inverse[std::size_t(i)] = (n - i) % n;
        g.names.push_back(std::to_string(i));
    }
    g.validate();
    return g;
}

void require_subgroup(const FiniteGroupTable& g, const std::vector<int>& subset) {
    if (subset.empty()) throw InvalidSubgroup("subgroup is empty");
    std::set<int> h;
    for (int x : subset) {
        if (x < 0 || x >= g.order()) throw InvalidSubgroup("subgroup index out of range");
        if (!h.insert(x).second) throw InvalidSubgroup("duplicate subgroup element");
    }
    if (!h.count(g.identity)) throw InvalidSubgroup("subgroup is missing the identity");
    for (int x : h) {
        if (!h.count(g.inv(x))) throw InvalidSubgroup("subgroup is not closed under inverses");
        for (int y : h)
            if (!h.count(g.times(x, y)))
                throw InvalidSubgroup("subgroup is not closed under multiplication");
    }
}

bool triple_product_check(const FiniteGroupTable& g, const std::vector<int>& subgroup, int a) {
    require_subgroup(g, subgroup);
    if (a < 0 || a >= g.order()) throw InvalidArgument("element index out of range");
    for (int h : subgroup)
        if (h == a) throw InvalidArgument("element must lie outside the subgroup");
    std::set<int> coset;
    for (int h : subgroup) coset.insert(g.times(h, a));
    std::set<int> product = coset;
    for (int round = 0; round < 2; ++round) {
        std::set<int> next;
        for (int x : product)
            for (int y : coset) next.insert(g.times(x, y));
        product = std::move(next);
    }
    return int(product.size()) == g.order();
}

NonabelianTrace simulate_nonabelian_s3(std::int64_t length, std::uint64_t seed,
                                       const FiniteGroupTable& g, const std::vector<int>& subgroup,
                                       int a, std::int64_t start) {
    if (length < 20) throw InvalidArgument("window length must be at least 20");
    g.validate();
    if (!triple_product_check(g, subgroup, a))
        throw PremiseViolation("triple coset product does not cover the group");

    NonabelianTrace trace;
    trace.window = FiidWindow{start, length, seed};
    trace.subgroup = subgroup;
    std::sort(trace.subgroup.begin(), trace.subgroup.end());
    trace.a = a;

    int order = g.order();
    auto fiber_min = [&](std::int64_t x) {
        double best = field_value(seed, x, 0);
        for (int gi = 1; gi < order; ++gi) best = std::min(best, field_value(seed, x, gi));
        return best;
    };

    for (std::int64_t x = start + 2; x < start + length - 2; ++x) {
        double v = fiber_min(x);
        bool strict = true;
        for (std::int64_t d : {-2, -1, 1, 2}) {
            double w = fiber_min(x + d);
            if (v == w) trace.ties += 1;
            if (v >= w) strict = false;
        }
        if (strict) trace.minima.push_back(x);
    }
    if (trace.minima.size() < 2)
        throw DegenerateWindow("fewer than two separated minima in window");

    trace.sites_start = trace.minima.front();
    trace.fiber.assign(std::size_t(trace.minima.back() - trace.minima.front() + 1), 0);
    auto put = [&](std::int64_t x, int value) {
        trace.fiber[std::size_t(x - trace.sites_start)] = value;
    };
    auto get = [&](std::int64_t x) { return trace.fiber[std::size_t(x - trace.sites_start)]; };

    // Anchor each marker at the fiber element with the largest field value.
    for (std::int64_t s : trace.minima) {
        int best = 0;
        double best_value = field_value(seed, s, 0);
        for (int gi = 1; gi < order; ++gi) {
            double v = field_value(seed, s, gi);
            if (v == best_value) trace.ties += 1;
            if (v > best_value) {
                best_value = v;
                best = gi;
            }
        }
        put(s, best);
    }

    int a_inv = g.inv(a);
    std::vector<int> a_inv_h;
    for (int h : trace.subgroup) a_inv_h.push_back(g.times(a_inv, h));
    std::sort(a_inv_h.begin(), a_inv_h.end());

    for (std::size_t n = 0; n + 1 < trace.minima.size(); ++n) {
        std::int64_t left = trace.minima[n];
        std::int64_t right = trace.minima[n + 1];
        std::int64_t gap = right - left;
        for (std::int64_t j = 1; j <= gap - 3; ++j) put(left + j, g.times(a_inv, get(left + j - 1)));

        // Close the chain with the first boundary pair, scanning pairs in
        // index order.
        std::vector<char> target(std::size_t(order), 0);
        for (int h : trace.subgroup) target[std::size_t(g.times(g.times(h, a), get(right)))] = 1;
        int anchor = get(right - 3);
        bool found = false;
        for (int b0 : a_inv_h) {
            for (int b1 : a_inv_h) {
                int mid = g.times(b1, anchor);
                int end = g.times(b0, mid);
                if (target[std::size_t(end)]) {
                    put(right - 2, mid);
                    put(right - 1, end);
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (!found) throw LemmaViolation("no boundary pair closes the chain");
    }

    trace.core_start = trace.minima.front() + 1;
    trace.core_end = trace.minima.back() + 1;
    return trace;
}

FiidValidation validate_nonabelian(const FiniteGroupTable& g, const NonabelianTrace& trace,
                                   std::optional<std::pair<std::int64_t, std::int64_t>>
                                       core_override) {
    FiidValidation report;
    report.core_start = core_override ? core_override->first : trace.core_start;
    report.core_end = core_override ? core_override->second : trace.core_end;
    histogram_gaps(trace.minima, report.gap_histogram);
    if (report.core_end <= report.core_start) return report;

    int order = g.order();
    std::vector<char> in_h(std::size_t(order), 0);
    for (int h : trace.subgroup) in_h[std::size_t(h)] = 1;
    std::vector<int> coset_ha, complement;
    for (int h : trace.subgroup) coset_ha.push_back(g.times(h, trace.a));
    for (int x = 0; x < order; ++x)
        if (!in_h[std::size_t(x)]) complement.push_back(x);

    auto fiber_at = [&](std::int64_t x) -> int {
        return trace.fiber[std::size_t(x - trace.sites_start)];
    };
    auto has_fiber = [&](std::int64_t x) {
        return x >= trace.sites_start &&
               x < trace.sites_start + std::int64_t(trace.fiber.size());
    };

    std::vector<std::int64_t> count(static_cast<std::size_t>(order));
    for (std::int64_t x = report.core_start; x < report.core_end; ++x) {
        if (!has_fiber(x) || !has_fiber(x - 1)) {
            report.coverage_violations += order;
            continue;
        }
        std::fill(count.begin(), count.end(), 0);
        for (int w : coset_ha) count[std::size_t(g.times(w, fiber_at(x)))] += 1;
        for (int w : complement) count[std::size_t(g.times(w, fiber_at(x - 1)))] += 1;
        for (std::int64_t c : count)
            if (c != 1) report.coverage_violations += 1;

        bool linked = false;
        for (int w : coset_ha)
            if (g.times(w, fiber_at(x)) == fiber_at(x - 1)) linked = true;
        if (!linked) report.constraint_violations += 1;
    }
    double span = double(report.core_end - report.core_start) * double(order);
    report.densities.emplace_back("A", double(report.core_end - report.core_start) / span);
    return report;
}

} // namespace tilekit
