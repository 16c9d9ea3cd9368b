#include "tilekit/enumerate.hpp"

#include <algorithm>
#include <map>

#include "tilekit/errors.hpp"

namespace tilekit {

namespace {

struct Search {
    const QuotientSpec& q;
    std::vector<std::int64_t> tile_idx; // distinct tile elements as indices
    std::vector<std::uint8_t> covered;
    std::vector<std::int64_t> chosen;
    std::vector<std::vector<std::int64_t>>& out;
    std::int64_t max_solutions;

    void run() {
        const std::int64_t n = q.size();
        std::int64_t x = 0;
        while (x < n && covered[std::size_t(x)]) ++x;
        if (x == n) {
            if (std::int64_t(out.size()) >= max_solutions) {
                throw CapacityExceeded("solution catalog exceeds cap");
            }
            auto sol = chosen;
            std::sort(sol.begin(), sol.end());
            out.push_back(std::move(sol));
            return;
        }
        // Any complement containing a translate that covers x must place the
        // translate at x - f for some tile element f, so branching over the
        // tile is exhaustive and collision-free across branches.
        for (std::int64_t f : tile_idx) {
            const std::int64_t a = q.index_add(x, q.index_neg(f));
            bool ok = true;
            for (std::int64_t g : tile_idx) {
                if (covered[std::size_t(q.index_add(a, g))]) { ok = false; break; }
            }
            if (!ok) continue;
            for (std::int64_t g : tile_idx) covered[std::size_t(q.index_add(a, g))] = 1;
            chosen.push_back(a);
            run();
            chosen.pop_back();
            for (std::int64_t g : tile_idx) covered[std::size_t(q.index_add(a, g))] = 0;
        }
    }
};

} // namespace

TilingCatalog enumerate_tilings(const QuotientSpec& q, const std::vector<GroupElement>& tile,
                                std::int64_t max_solutions) {
    if (tile.empty()) throw InvalidArgument("tile must be nonempty");
    std::vector<std::int64_t> tile_idx;
    tile_idx.reserve(tile.size());
    for (const auto& f : tile) tile_idx.push_back(q.index_of(f));
    std::sort(tile_idx.begin(), tile_idx.end());
    if (std::adjacent_find(tile_idx.begin(), tile_idx.end()) != tile_idx.end()) {
        throw InvalidArgument("tile elements collide in the quotient");
    }

    TilingCatalog cat;
    cat.quotient = q;
    cat.tile = tile;
    if (q.size() % std::int64_t(tile.size()) != 0) return cat;

    Search s{q, std::move(tile_idx), std::vector<std::uint8_t>(std::size_t(q.size()), 0),
             {}, cat.solutions, max_solutions};
    s.run();
    std::sort(cat.solutions.begin(), cat.solutions.end());
    return cat;
}

OrbitSummary count_and_orbits(const TilingCatalog& catalog) {
    const auto& q = catalog.quotient;
    const auto& sols = catalog.solutions;

    OrbitSummary sum;
    sum.count = std::int64_t(sols.size());
    sum.orbit_of.assign(sols.size(), 0);
    sum.rigid.assign(sols.size(), false);

    std::map<std::vector<std::int64_t>, std::size_t> pos;
    for (std::size_t i = 0; i < sols.size(); ++i) pos.emplace(sols[i], i);

    std::vector<std::uint8_t> seen(sols.size(), 0);
    for (std::size_t i = 0; i < sols.size(); ++i) {
        if (seen[i]) continue;
        ++sum.orbit_count;
        for (std::int64_t g = 0; g < q.size(); ++g) {
            std::vector<std::int64_t> moved;
            moved.reserve(sols[i].size());
            for (std::int64_t a : sols[i]) moved.push_back(q.index_add(a, g));
            std::sort(moved.begin(), moved.end());
            const auto it = pos.find(moved);
            if (it != pos.end() && !seen[it->second]) {
                seen[it->second] = 1;
                sum.orbit_of[it->second] = i;
            }
        }
    }

    for (std::size_t i = 0; i < sols.size(); ++i) {
        bool rigid = true;
        for (std::size_t j = 0; j < sols.size() && rigid; ++j) {
            if (j == i) continue;
            // complement pair <=> disjoint and sizes add up to the domain
            std::vector<std::int64_t> inter;
            std::set_intersection(sols[i].begin(), sols[i].end(), sols[j].begin(), sols[j].end(),
                                  std::back_inserter(inter));
            const bool complement = inter.empty() &&
                std::int64_t(sols[i].size() + sols[j].size()) == q.size();
            if (!complement) rigid = false;
        }
        sum.rigid[i] = rigid;
    }
    return sum;
}

} // namespace tilekit
