#include "tilekit/json_io.hpp"

#include "tilekit/errors.hpp"

namespace tilekit {

namespace {

ordered_json histogram_json(const std::map<std::int64_t, std::int64_t>& h) {
    ordered_json out = ordered_json::object();
    for (const auto& [k, v] : h) out[std::to_string(k)] = v;
    return out;
}

ordered_json int_array(const std::vector<std::int64_t>& v) {
    return ordered_json(v);
}

ordered_json rational_array(const std::vector<Rational>& v) {
    ordered_json out = ordered_json::array();
    for (const auto& r : v) out.push_back(json_of(r));
    return out;
}

ordered_json direction_or_null(const std::optional<std::vector<std::int64_t>>& d) {
    if (!d) return nullptr;
    return int_array(*d);
}

ordered_json window_json(const FiidWindow& w) {
    return ordered_json{{"start", w.start}, {"length", w.length}, {"seed", w.seed}};
}

ordered_json densities_json(const std::vector<std::pair<std::string, double>>& d) {
    ordered_json out = ordered_json::object();
    for (const auto& [label, value] : d) out[label] = value;
    return out;
}

} // namespace

ordered_json json_of(const Rational& r) { return r.str(); }

ordered_json json_of(const GroupElement& g) { return ordered_json(g.coords); }

ordered_json json_of(const QuotientSpec& q) {
    ordered_json out;
    out["free_rank"] = q.group().free_rank;
    out["torsion"] = int_array(q.group().torsion_orders);
    out["periods"] = int_array(q.periods());
    out["size"] = q.size();
    return out;
}

ordered_json json_of(const Weight& w) {
    ordered_json out = ordered_json::array();
    for (const auto& [g, c] : w.terms()) out.push_back(ordered_json{{"g", json_of(g)}, {"c", c}});
    return out;
}

ordered_json json_of(const TilingReport& r) {
    ordered_json out;
    out["is_tiling"] = r.is_tiling;
    out["levels"] = histogram_json(r.level_histogram);
    out["collisions"] = json_of(r.collision_multiplicities);
    return out;
}

ordered_json json_of(const FrobeniusReport& r) {
    ordered_json out;
    out["holds"] = r.holds;
    out["lhs"] = json_of(r.lhs);
    out["rhs"] = json_of(r.rhs);
    return out;
}

ordered_json json_of(const std::vector<DilationEntry>& entries) {
    ordered_json out = ordered_json::array();
    for (const auto& e : entries) {
        ordered_json row;
        row["r"] = e.r;
        row["coprime_to_tile_size"] = e.coprime_to_size;
        row["coprime_to_small_primes"] = e.coprime_to_small_primes;
        row["report"] = json_of(e.report);
        out.push_back(std::move(row));
    }
    return out;
}

ordered_json json_of(const TilingCatalog& catalog, const OrbitSummary& orbits) {
    ordered_json out;
    out["group"] = json_of(catalog.quotient);
    ordered_json tile = ordered_json::array();
    for (const auto& f : catalog.tile) tile.push_back(json_of(f));
    out["tile"] = std::move(tile);
    out["count"] = orbits.count;
    out["orbit_count"] = orbits.orbit_count;
    ordered_json solutions = ordered_json::array();
    for (const auto& sol : catalog.solutions) {
        ordered_json one = ordered_json::array();
        for (std::int64_t idx : sol) one.push_back(json_of(catalog.quotient.element_at(idx)));
        solutions.push_back(std::move(one));
    }
    out["solutions"] = std::move(solutions);
    ordered_json orbit_of = ordered_json::array();
    for (std::size_t i : orbits.orbit_of) orbit_of.push_back(i);
    out["orbit_of"] = std::move(orbit_of);
    ordered_json rigid = ordered_json::array();
    for (bool b : orbits.rigid) rigid.push_back(b);
    out["rigid"] = std::move(rigid);
    return out;
}

ordered_json json_of(const Decomposition& dec) {
    ordered_json out;
    out["exponent"] = dec.exponent;
    ordered_json comps = ordered_json::array();
    for (std::size_t i = 0; i < dec.tile.size(); ++i) {
        ordered_json one;
        one["f"] = json_of(dec.tile[i]);
        one["values"] = rational_array(dec.components[i]);
        comps.push_back(std::move(one));
    }
    out["components"] = std::move(comps);
    return out;
}

ordered_json json_of(const DecompositionCheck& check) {
    ordered_json out;
    out["partition_of_unity"] = check.partition_of_unity;
    out["invariant"] = check.invariant;
    out["mean_correct"] = check.mean_correct;
    out["pure_translates"] = check.pure_translates;
    out["pure_translate_tiles"] = check.pure_translate_tiles;
    return out;
}

ordered_json json_of(const StepFunction& f) {
    ordered_json out;
    out["breakpoints"] = rational_array(f.breakpoints());
    out["values"] = rational_array(f.values());
    return out;
}

ordered_json json_of(const IntervalClassification& c) {
    ordered_json out;
    out["m"] = c.m;
    out["c"] = json_of(c.c);
    out["cprime"] = json_of(c.cprime);
    return out;
}

ordered_json json_of(const SymbolicScalar& s) {
    ordered_json out;
    out["rat"] = json_of(s.rational_part());
    ordered_json irr = ordered_json::object();
    for (const auto& [id, coeff] : s.symbol_coeffs()) irr[std::to_string(id)] = json_of(coeff);
    out["irr"] = std::move(irr);
    return out;
}

ordered_json json_of(const SymbolicVector& v) {
    ordered_json out;
    ordered_json rat = ordered_json::array();
    for (int i = 0; i < v.dim(); ++i) rat.push_back(json_of(v[i].rational_part()));
    out["rat"] = std::move(rat);
    ordered_json irr = ordered_json::object();
    for (int id : v.symbols()) {
        ordered_json coeffs = ordered_json::array();
        for (int i = 0; i < v.dim(); ++i) {
            Rational c;
            for (const auto& [sid, sc] : v[i].symbol_coeffs())
                if (sid == id) c = sc;
            coeffs.push_back(json_of(c));
        }
        irr[std::to_string(id)] = std::move(coeffs);
    }
    out["irr"] = std::move(irr);
    return out;
}

ordered_json json_of(const CellSet& set) {
    ordered_json out;
    out["d"] = set.dim();
    out["Q"] = set.resolution();
    ordered_json cells = ordered_json::array();
    for (std::int64_t flat : set.flat_cells()) cells.push_back(int_array(set.coords_of(flat)));
    out["cells"] = std::move(cells);
    return out;
}

ordered_json json_of(const RationalTorusReport& r) {
    ordered_json out;
    out["is_tiling"] = r.is_tiling;
    out["resolution"] = r.resolution;
    out["levels"] = histogram_json(r.level_histogram);
    return out;
}

ordered_json json_of(const VelocityClass& c) {
    ordered_json out;
    ordered_json members = ordered_json::array();
    for (std::size_t m : c.members) members.push_back(m);
    out["members"] = std::move(members);
    out["velocity"] = json_of(c.velocity);
    out["direction"] = direction_or_null(c.direction);
    return out;
}

ordered_json json_of(const VelocityDecomposition& d) {
    ordered_json out;
    out["normalized_by"] = json_of(d.normalized_by);
    ordered_json surrogate = ordered_json::array();
    for (const auto& s : d.surrogate) surrogate.push_back(rational_array(s));
    out["surrogate"] = std::move(surrogate);
    ordered_json classes = ordered_json::array();
    for (const auto& c : d.classes) classes.push_back(json_of(c));
    out["classes"] = std::move(classes);
    out["common_direction"] = direction_or_null(d.common_direction);
    out["parallel_violation"] = d.parallel_violation;
    return out;
}

ordered_json json_of(const InvarianceReport& r) {
    ordered_json out;
    out["invariant"] = r.invariant;
    out["direction"] = int_array(r.direction);
    out["annihilator"] = int_array(r.annihilator);
    if (r.witness) {
        out["witness"] =
            ordered_json{{"fiber", json_of(r.witness->first)}, {"density", json_of(r.witness->second)}};
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

ordered_json json_of(const SymbolicTilingReport& r) {
    ordered_json out;
    out["certified"] = r.certified;
    out["reason"] = r.reason;
    out["surrogate"] = json_of(r.surrogate);
    out["velocity"] = json_of(r.velocity);
    ordered_json inv = ordered_json::array();
    for (const auto& c : r.class_invariance) inv.push_back(json_of(c));
    out["class_invariance"] = std::move(inv);
    ordered_json samples = ordered_json::array();
    for (const auto& s : r.substitution_samples) {
        ordered_json values = ordered_json::object();
        for (const auto& [id, v] : s.values) values[std::to_string(id)] = json_of(v);
        samples.push_back(ordered_json{{"values", std::move(values)}, {"tiled", s.tiled}});
    }
    out["substitution_samples"] = std::move(samples);
    return out;
}

ordered_json json_of(const CircleRationalityReport& r) {
    ordered_json out;
    out["verdict"] = r.rational_translate ? "RationalTranslate" : "TheoremViolation";
    out["surrogate"] = rational_array(r.surrogate);
    out["shift"] = json_of(r.shift);
    out["samples_checked"] = r.samples_checked;
    out["samples_tiled"] = r.samples_tiled;
    return out;
}

ordered_json json_of(const ConnectedCaseReport& r) {
    ordered_json out;
    out["all_rational"] = r.all_rational;
    out["direction"] = int_array(r.direction);
    out["annihilator"] = int_array(r.annihilator);
    out["psi"] = json_of(r.psi);
    out["m"] = r.m;
    out["velocity"] = json_of(r.velocity);
    ordered_json strips = ordered_json::array();
    for (const auto& strip : r.strips) {
        ordered_json s;
        s["class_index"] = strip.class_index;
        ordered_json arcs = ordered_json::array();
        for (const auto& arc : strip.arcs) {
            ordered_json a;
            a["arc"] = ordered_json::array({json_of(arc.arc.first), json_of(arc.arc.second)});
            ordered_json members = ordered_json::array();
            for (std::size_t m : arc.members) members.push_back(m);
            a["members"] = std::move(members);
            a["classification"] = json_of(arc.cls);
            ordered_json parts = ordered_json::array();
            for (const auto& part : arc.parts) {
                ordered_json p;
                ordered_json pm = ordered_json::array();
                for (std::size_t m : part.members) pm.push_back(m);
                p["members"] = std::move(pm);
                p["coset"] = json_of(part.coset);
                p["strip"] =
                    ordered_json::array({json_of(part.strip.first), json_of(part.strip.second)});
                p["invariant"] = part.invariant;
                parts.push_back(std::move(p));
            }
            a["parts"] = std::move(parts);
            arcs.push_back(std::move(a));
        }
        s["arcs"] = std::move(arcs);
        strips.push_back(std::move(s));
    }
    out["strips"] = std::move(strips);
    return out;
}

ordered_json json_of(const SineCheckReport& r) {
    ordered_json out;
    out["samples"] = r.samples;
    out["violations"] = r.violations;
    out["skipped_boundary"] = r.skipped_boundary;
    return out;
}

ordered_json json_of(const FiidValidation& v) {
    ordered_json out;
    out["core"] = ordered_json::array({v.core_start, v.core_end});
    out["coverage_violations"] = v.coverage_violations;
    out["constraint_violations"] = v.constraint_violations;
    out["gap_histogram"] = histogram_json(v.gap_histogram);
    out["fill_gap_histogram"] = histogram_json(v.fill_gap_histogram);
    out["densities"] = densities_json(v.densities);
    return out;
}

ordered_json json_of(const TwoTileTrace& t) {
    ordered_json out;
    out["window"] = window_json(t.window);
    out["minima"] = int_array(t.minima);
    out["fill"] = int_array(t.fill);
    out["pair_sites"] = int_array(t.pair_sites);
    out["triple_sites"] = int_array(t.triple_sites);
    out["core"] = ordered_json::array({t.core_start, t.core_end});
    out["ties"] = t.ties;
    return out;
}

ordered_json json_of(const VerticalTrace& t) {
    ordered_json out;
    out["window"] = window_json(t.window);
    out["base"] = json_of(t.base);
    out["tile"] = int_array(t.tile_indices);
    out["set"] = int_array(t.set_indices);
    out["chosen"] = int_array(t.chosen);
    out["ties"] = t.ties;
    return out;
}

ordered_json json_of(const NonabelianTrace& t) {
    ordered_json out;
    out["window"] = window_json(t.window);
    ordered_json subgroup = ordered_json::array();
    for (int h : t.subgroup) subgroup.push_back(h);
    out["subgroup"] = std::move(subgroup);
    out["a"] = t.a;
    out["minima"] = int_array(t.minima);
    out["fiber_start"] = t.sites_start;
    ordered_json fiber = ordered_json::array();
    for (int g : t.fiber) fiber.push_back(g);
    out["fiber"] = std::move(fiber);
    out["core"] = ordered_json::array({t.core_start, t.core_end});
    out["ties"] = t.ties;
    return out;
}

Rational rational_from_json(const ordered_json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw InvalidArgument("expected a rational as \"p/q\" string or integer");
}

std::vector<Rational> rational_vector_from_json(const ordered_json& j) {
    if (!j.is_array()) throw InvalidArgument("expected an array of rationals");
    std::vector<Rational> out;
    for (const auto& e : j) out.push_back(rational_from_json(e));
    return out;
}

CellSet cellset_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("d") || !j.contains("Q") || !j.contains("cells"))
        throw InvalidArgument("cell set document needs fields d, Q, cells");
    int d = j.at("d").get<int>();
    std::int64_t q = j.at("Q").get<std::int64_t>();
    std::vector<std::vector<std::int64_t>> cells;
    for (const auto& c : j.at("cells")) {
        if (!c.is_array()) throw InvalidArgument("cell must be a coordinate array");
        cells.push_back(c.get<std::vector<std::int64_t>>());
    }
    return CellSet(d, q, cells);
}

SymbolicScalar symbolic_scalar_from_json(const ordered_json& j) {
    if (j.is_string() || j.is_number_integer()) return SymbolicScalar(rational_from_json(j));
    if (!j.is_object()) throw InvalidArgument("symbolic scalar must be rational or {rat, irr}");
    SymbolicScalar out(j.contains("rat") ? rational_from_json(j.at("rat")) : Rational(0));
    if (j.contains("irr")) {
        for (const auto& [key, value] : j.at("irr").items())
            out = out + SymbolicScalar::symbol(std::stoi(key), rational_from_json(value));
    }
    return out;
}

SymbolicVector symbolic_vector_from_json(const ordered_json& j) {
    if (j.is_array()) return SymbolicVector::rational(rational_vector_from_json(j));
    if (!j.is_object()) throw InvalidArgument("symbolic vector must be array or {rat, irr}");
    std::vector<Rational> rat = rational_vector_from_json(j.at("rat"));
    std::vector<SymbolicScalar> comps;
    for (const auto& r : rat) comps.emplace_back(r);
    if (j.contains("irr")) {
        for (const auto& [key, value] : j.at("irr").items()) {
            int id = std::stoi(key);
            std::vector<Rational> coeffs = rational_vector_from_json(value);
            if (coeffs.size() != comps.size())
                throw InvalidArgument("symbol coefficient arity mismatch");
            for (std::size_t i = 0; i < comps.size(); ++i)
                comps[i] = comps[i] + SymbolicScalar::symbol(id, coeffs[i]);
        }
    }
    return SymbolicVector(comps);
}

StepFunction step_function_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("breakpoints") || !j.contains("values"))
        throw InvalidArgument("step function document needs breakpoints and values");
    return StepFunction(rational_vector_from_json(j.at("breakpoints")),
                        rational_vector_from_json(j.at("values")));
}

} // namespace tilekit
