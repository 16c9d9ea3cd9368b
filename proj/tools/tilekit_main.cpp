#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tilekit/errors.hpp"
#include "tilekit/json_io.hpp"

using namespace tilekit;

namespace {

// Inline values can always be swapped for "@path" to read a file instead.
std::string load_arg(const std::string& text) {
    if (text.empty() || text[0] != '@') return text;
    std::ifstream in(text.substr(1));
    if (!in) throw InvalidArgument("cannot read input file " + text.substr(1));
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::int64_t parse_int(const std::string& text) {
    std::size_t pos = 0;
    std::int64_t value = 0;
    try {
        value = std::stoll(text, &pos);
    } catch (const std::exception&) {
        throw InvalidArgument("not an integer: " + text);
    }
    if (pos != text.size()) throw InvalidArgument("not an integer: " + text);
    return value;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    if (text.empty()) return out;
    for (const auto& tok : split(text, ',')) out.push_back(parse_int(tok));
    return out;
}

// "Z/6", "Z/2xZ/2", "Z^2", "ZxZ/4"; free coordinates need --period entries.
QuotientSpec parse_group(const std::string& group_text, const std::string& period_text) {
    int free_rank = 0;
    std::vector<std::int64_t> torsion;
    for (const auto& tok : split(group_text, 'x')) {
        if (tok == "Z") {
            free_rank += 1;
        } else if (tok.rfind("Z^", 0) == 0) {
            free_rank += int(parse_int(tok.substr(2)));
        } else if (tok.rfind("Z/", 0) == 0) {
            torsion.push_back(parse_int(tok.substr(2)));
        } else {
            throw InvalidArgument("cannot parse group factor '" + tok + "'");
        }
    }
    auto spec = GroupSpec::make(free_rank, std::move(torsion));
    auto periods = parse_int_list(period_text);
    if (int(periods.size()) != free_rank)
        throw InvalidArgument("--period must list one modulus per free coordinate");
    return QuotientSpec::make(spec, periods);
}

// Elements separated by ';', coordinates by ','. For rank-1 groups a plain
// comma list is accepted as a list of elements.
std::vector<GroupElement> parse_elements(const std::string& text, const QuotientSpec& q) {
    std::vector<GroupElement> out;
    int rank = q.group().rank();
    std::string body = load_arg(text);
    if (body.find(';') == std::string::npos && rank == 1) {
        for (std::int64_t v : parse_int_list(body)) out.push_back(GroupElement({v}));
        return out;
    }
    for (const auto& tok : split(body, ';')) {
        auto coords = parse_int_list(tok);
        if (int(coords.size()) != rank)
            throw InvalidArgument("element '" + tok + "' has the wrong number of coordinates");
        out.push_back(GroupElement(coords));
    }
    return out;
}

std::vector<std::int64_t> parse_r_spec(const std::string& text) {
    auto dots = text.find("..");
    if (dots != std::string::npos) {
        std::int64_t lo = parse_int(text.substr(0, dots));
        std::int64_t hi = parse_int(text.substr(dots + 2));
        if (hi < lo) throw InvalidArgument("empty dilation range");
        std::vector<std::int64_t> out;
        for (std::int64_t r = lo; r <= hi; ++r) out.push_back(r);
        return out;
    }
    return parse_int_list(text);
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    if (text.empty()) return out;
    for (const auto& tok : split(text, ',')) out.push_back(Rational::parse(tok));
    return out;
}

ordered_json parse_json(const std::string& text) {
    try {
        return ordered_json::parse(load_arg(text));
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("malformed JSON input: ") + e.what());
    }
}

CellSet parse_cellset(const std::string& text) { return cellset_from_json(parse_json(text)); }

// Rational vectors as "x,y;x,y" or a JSON array (symbolic entries allowed).
std::vector<std::vector<Rational>> parse_rational_shifts(const std::string& text) {
    std::string body = load_arg(text);
    std::vector<std::vector<Rational>> out;
    if (!body.empty() && body[0] == '[') {
        for (const auto& e : parse_json(body)) out.push_back(rational_vector_from_json(e));
        return out;
    }
    for (const auto& tok : split(body, ';')) out.push_back(parse_rational_list(tok));
    return out;
}

std::vector<SymbolicVector> parse_symbolic_shifts(const std::string& text) {
    std::string body = load_arg(text);
    std::vector<SymbolicVector> out;
    if (!body.empty() && body[0] == '[') {
        for (const auto& e : parse_json(body)) out.push_back(symbolic_vector_from_json(e));
        return out;
    }
    for (const auto& tok : split(body, ';'))
        out.push_back(SymbolicVector::rational(parse_rational_list(tok)));
    return out;
}

std::vector<SymbolicScalar> parse_symbolic_scalars(const std::string& text) {
    std::string body = load_arg(text);
    std::vector<SymbolicScalar> out;
    if (!body.empty() && body[0] == '[') {
        for (const auto& e : parse_json(body)) out.push_back(symbolic_scalar_from_json(e));
        return out;
    }
    for (const auto& tok : split(body, ','))
        out.push_back(SymbolicScalar(Rational::parse(tok)));
    return out;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

struct Args {
    std::string group, period, tile, set, r_spec;
    std::string positions, psi, interval;
    std::string shifts, values, out_path;
    std::string assignment, subgroup_text;
    std::int64_t den = 0, max_solutions = 1 << 20, n = 0, start = 0, a = -1;
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
    double t = 0.0;
    bool prime_product = false;
    int substitution_samples = 2;
};

int cmd_verify(const Args& a) {
    auto q = parse_group(a.group, a.period);
    auto tile = parse_elements(a.tile, q);
    PeriodicSet set(q, parse_elements(a.set, q));
    auto report = verify_tiling(q, tile, set);
    emit(json_of(report));
    return report.is_tiling ? 0 : 1;
}

int cmd_dilate(const Args& a) {
    auto q = parse_group(a.group, a.period);
    auto tile = parse_elements(a.tile, q);
    PeriodicSet set(q, parse_elements(a.set, q));
    auto entries = dilation_scan(q, tile, set, parse_r_spec(a.r_spec));
    emit(json_of(entries));
    return 0;
}

int cmd_enumerate(const Args& a) {
    auto q = parse_group(a.group, a.period);
    auto tile = parse_elements(a.tile, q);
    auto catalog = enumerate_tilings(q, tile, a.max_solutions);
    auto orbits = count_and_orbits(catalog);
    emit(json_of(catalog, orbits));
    return 0;
}

int cmd_decompose(const Args& a) {
    auto q = parse_group(a.group, a.period);
    auto tile = parse_elements(a.tile, q);
    PeriodicSet set(q, parse_elements(a.set, q));
    auto dec = decompose(q, tile, set, a.prime_product);
    auto check = check_decomposition(q, tile, set, dec);
    ordered_json out;
    out["decomposition"] = json_of(dec);
    out["check"] = json_of(check);
    emit(out);
    return 0;
}

int cmd_classify_interval(const Args& a) {
    RationalMultiset positions(parse_rational_list(load_arg(a.positions)));
    StepFunction psi = step_function_from_json(parse_json(a.psi));
    auto ends = parse_rational_list(a.interval);
    if (ends.size() != 2) throw InvalidArgument("--interval needs exactly two rationals a,b");
    auto cls = classify_connected(positions, psi, ends[0], ends[1]);
    emit(json_of(cls));
    return 0;
}

int cmd_torus_verify(const Args& a) {
    auto set = parse_cellset(a.set);
    auto report = verify_rational_torus_tiling(parse_rational_shifts(a.shifts), set);
    emit(json_of(report));
    return report.is_tiling ? 0 : 1;
}

int cmd_torus_slide(const Args& a) {
    auto set = parse_cellset(a.set);
    auto report = verify_symbolic_tiling(parse_symbolic_shifts(a.shifts), set,
                                         a.substitution_samples, a.seed);
    emit(json_of(report));
    return report.certified ? 0 : 1;
}

int cmd_torus_connected(const Args& a) {
    auto set = parse_cellset(a.set);
    auto report = connected_case(parse_symbolic_shifts(a.shifts), set);
    emit(json_of(report));
    return 0;
}

int cmd_circle(const Args& a) {
    auto set = parse_cellset(a.set);
    auto report =
        circle_rationality(parse_symbolic_scalars(a.shifts), set, int(a.samples), a.seed);
    emit(json_of(report));
    return report.rational_translate ? 0 : 1;
}

int cmd_assemble_circle(const Args& a) {
    std::vector<std::vector<std::int64_t>> assignment;
    for (const auto& tok : split(load_arg(a.assignment), ';'))
        assignment.push_back(parse_int_list(tok));
    auto set = assemble_circle_tiling(a.den, parse_int_list(a.tile), assignment);
    emit(json_of(set));
    return 0;
}

int cmd_sine_check(const Args& a) {
    auto report = sine_multitile_check(a.t, a.samples, a.seed);
    emit(json_of(report));
    return report.violations == 0 ? 0 : 1;
}

int cmd_fiid_two_tile(const Args& a) {
    auto trace = simulate_two_tile(a.n, a.seed, a.start);
    auto validation = validate_two_tile(trace);
    ordered_json out;
    out["trace"] = json_of(trace);
    out["validation"] = json_of(validation);
    emit(out);
    return validation.coverage_violations == 0 && validation.constraint_violations == 0 ? 0 : 1;
}

int cmd_fiid_vertical(const Args& a) {
    auto q = parse_group(a.group, a.period);
    auto tile = parse_elements(a.tile, q);
    auto set = parse_elements(a.set, q);
    auto trace = simulate_vertical(a.n, a.seed, q, tile, set, a.start);
    auto validation = validate_vertical(trace);
    ordered_json out;
    out["trace"] = json_of(trace);
    out["validation"] = json_of(validation);
    emit(out);
    return validation.coverage_violations == 0 && validation.constraint_violations == 0 ? 0 : 1;
}

int cmd_fiid_s3(const Args& a) {
    auto g = FiniteGroupTable::symmetric3();
    std::vector<std::vector<int>> subgroup_candidates;
    if (!a.subgroup_text.empty()) {
        std::vector<int> h;
        for (std::int64_t v : parse_int_list(a.subgroup_text)) h.push_back(int(v));
        subgroup_candidates.push_back(std::move(h));
    } else {
        for (int t = 1; t < g.order(); ++t)
            if (g.times(t, t) == g.identity)
                subgroup_candidates.push_back({g.identity, t});
    }

    // Fixed arguments are used as given; anything left open takes the first
    // (subgroup, element) pair passing the premise.
    std::vector<int> subgroup;
    int elem = -1;
    for (const auto& h : subgroup_candidates) {
        for (int cand = 0; cand < g.order() && elem < 0; ++cand) {
            if (a.a >= 0 && cand != int(a.a)) continue;
            if (std::find(h.begin(), h.end(), cand) != h.end()) continue;
            if (triple_product_check(g, h, cand)) {
                subgroup = h;
                elem = cand;
            }
        }
        if (elem >= 0) break;
    }
    if (elem < 0) throw PremiseViolation("no valid subgroup and element pair found");
    auto trace = simulate_nonabelian_s3(a.n, a.seed, g, subgroup, elem, a.start);
    auto validation = validate_nonabelian(g, trace);
    ordered_json out;
    out["trace"] = json_of(trace);
    out["validation"] = json_of(validation);
    emit(out);
    return validation.coverage_violations == 0 && validation.constraint_violations == 0 ? 0 : 1;
}

int cmd_render(const Args& a) {
    auto set = parse_cellset(a.set);
    auto shifts = parse_symbolic_shifts(a.shifts);
    std::map<int, Rational> values;
    if (!a.values.empty()) {
        for (const auto& [key, value] : parse_json(a.values).items())
            values[std::stoi(key)] = rational_from_json(value);
    }
    auto decomposition = velocity_decomposition(shifts);
    std::vector<RenderShift> render_shifts;
    for (std::size_t ci = 0; ci < decomposition.classes.size(); ++ci) {
        for (std::size_t member : decomposition.classes[ci].members) {
            auto concrete = shifts[member].substitute(values);
            if (concrete.size() != 2) throw Unsupported("rendering needs two coordinates");
            render_shifts.push_back(
                RenderShift{int(ci), concrete[0].to_double(), concrete[1].to_double()});
        }
    }
    std::string svg = render_svg(set, render_shifts);
    if (!a.out_path.empty()) {
        std::ofstream out(a.out_path);
        if (!out) throw InvalidArgument("cannot write " + a.out_path);
        out << svg;
    } else {
        std::cout << svg;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification, enumeration and deformation of translational tilings"};
    app.require_subcommand(1);
    Args a;
    int exit_code = 0;
    auto wire = [&](CLI::App* sub, int (*fn)(const Args&)) {
        sub->callback([&, fn] { exit_code = fn(a); });
        return sub;
    };

    auto add_group = [&](CLI::App* sub) {
        sub->add_option("--group", a.group, "group, e.g. Z/6, Z/2xZ/2, Z^2")->required();
        sub->add_option("--period", a.period, "periods for free coordinates, e.g. 4,4");
    };

    auto* verify = wire(app.add_subcommand("verify", "check one tiling pair"), cmd_verify);
    add_group(verify);
    verify->add_option("--tile", a.tile)->required();
    verify->add_option("--set", a.set)->required();

    auto* dilate = wire(app.add_subcommand("dilate", "rescan a tiling with dilated tiles"),
                        cmd_dilate);
    add_group(dilate);
    dilate->add_option("--tile", a.tile)->required();
    dilate->add_option("--set", a.set)->required();
    dilate->add_option("--r", a.r_spec, "dilation factors: lo..hi or comma list")->required();

    auto* enumerate = wire(app.add_subcommand("enumerate", "list all tiling complements"),
                           cmd_enumerate);
    add_group(enumerate);
    enumerate->add_option("--tile", a.tile)->required();
    enumerate->add_option("--max", a.max_solutions, "solution cap");

    auto* decompose_cmd = wire(app.add_subcommand("decompose", "orbit-average decomposition"),
                               cmd_decompose);
    add_group(decompose_cmd);
    decompose_cmd->add_option("--tile", a.tile)->required();
    decompose_cmd->add_option("--set", a.set)->required();
    decompose_cmd->add_flag("--prime-product-exponent", a.prime_product,
                            "use the product of primes <= 2|F| as invariance exponent");

    auto* classify = wire(app.add_subcommand("classify-interval",
                                             "recover the interval form of a convolution factor"),
                          cmd_classify_interval);
    classify->add_option("--positions", a.positions, "tile positions, rational comma list")
        ->required();
    classify->add_option("--psi", a.psi, "step function JSON or @file")->required();
    classify->add_option("--interval", a.interval, "target interval a,b")->required();

    auto* tverify = wire(app.add_subcommand("torus-verify", "verify a rational torus tiling"),
                         cmd_torus_verify);
    tverify->add_option("--set", a.set, "cell set JSON or @file")->required();
    tverify->add_option("--shifts", a.shifts, "rational shifts x,y;x,y or JSON")->required();

    auto* tslide = wire(app.add_subcommand("torus-slide", "certify a sliding symbolic tiling"),
                        cmd_torus_slide);
    tslide->add_option("--set", a.set)->required();
    tslide->add_option("--shifts", a.shifts, "symbolic shifts JSON")->required();
    tslide->add_option("--samples", a.substitution_samples, "substitution samples");
    tslide->add_option("--seed", a.seed)->required();

    auto* tconn = wire(app.add_subcommand("torus-connected",
                                          "strip decomposition for a connected tile"),
                       cmd_torus_connected);
    tconn->add_option("--set", a.set)->required();
    tconn->add_option("--shifts", a.shifts)->required();

    auto* circle = wire(app.add_subcommand("circle", "rationality of a circle tiling family"),
                        cmd_circle);
    circle->add_option("--set", a.set, "d=1 cell set JSON")->required();
    circle->add_option("--shifts", a.shifts, "symbolic scalars JSON or rational list")->required();
    circle->add_option("--samples", a.samples, "substitution samples")->default_val(16);
    circle->add_option("--seed", a.seed)->required();

    auto* assemble = wire(app.add_subcommand("assemble-circle",
                                             "build a circle tiling from per-cell assignments"),
                          cmd_assemble_circle);
    assemble->add_option("--den", a.den, "denominator q of the tile grid")->required();
    assemble->add_option("--tile", a.tile, "tile residues mod q")->required();
    assemble->add_option("--assignment", a.assignment,
                         "per-transversal-cell complements, e.g. 0,2;1,3")
        ->required();

    auto* sine = wire(app.add_subcommand("sine-check", "sample the three-tile sine deformation"),
                      cmd_sine_check);
    sine->add_option("--t", a.t, "deformation time")->required();
    sine->add_option("--samples", a.samples)->required();
    sine->add_option("--seed", a.seed)->required();

    auto* ftwo = wire(app.add_subcommand("fiid-two-tile", "simulate the two-tile construction"),
                      cmd_fiid_two_tile);
    ftwo->add_option("--n", a.n, "window length")->required();
    ftwo->add_option("--seed", a.seed)->required();
    ftwo->add_option("--start", a.start);

    auto* fvert = wire(app.add_subcommand("fiid-vertical", "simulate the fiber-tile construction"),
                       cmd_fiid_vertical);
    fvert->add_option("--n", a.n)->required();
    fvert->add_option("--seed", a.seed)->required();
    add_group(fvert);
    fvert->add_option("--tile", a.tile)->required();
    fvert->add_option("--set", a.set)->required();
    fvert->add_option("--start", a.start);

    auto* fs3 = wire(app.add_subcommand("fiid-s3", "simulate the non-abelian construction"),
                     cmd_fiid_s3);
    fs3->add_option("--n", a.n)->required();
    fs3->add_option("--seed", a.seed)->required();
    fs3->add_option("--subgroup", a.subgroup_text, "subgroup element indices");
    fs3->add_option("--a", a.a, "connecting element index");
    fs3->add_option("--start", a.start);

    auto* render = wire(app.add_subcommand("render", "draw a torus tiling as SVG"), cmd_render);
    render->add_option("--set", a.set)->required();
    render->add_option("--shifts", a.shifts)->required();
    render->add_option("--values", a.values, "symbol substitutions JSON, e.g. {\"1\":\"3/10\"}");
    render->add_option("--out", a.out_path, "output file (default stdout)");

    auto fail = [](const char* type, const std::exception& e, int code) {
        ordered_json j;
        j["error"] = ordered_json{{"type", type}, {"message", e.what()}};
        std::cout << j.dump(2) << "\n";
        return code;
    };

    try {
        app.parse(argc, argv);
        return exit_code;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ArithmeticOverflow& e) {
        return fail("ArithmeticOverflow", e, 3);
    } catch (const CapacityExceeded& e) {
        return fail("CapacityExceeded", e, 3);
    } catch (const InvalidPrime& e) {
        return fail("InvalidPrime", e, 2);
    } catch (const InvalidSubgroup& e) {
        return fail("InvalidSubgroup", e, 2);
    } catch (const InvalidAssignment& e) {
        return fail("InvalidAssignment", e, 2);
    } catch (const InvalidArgument& e) {
        return fail("InvalidArgument", e, 2);
    } catch (const Unsupported& e) {
        return fail("Unsupported", e, 2);
    } catch (const PremiseViolation& e) {
        return fail("PremiseViolation", e, 1);
    } catch (const ConnectedRequired& e) {
        return fail("ConnectedRequired", e, 1);
    } catch (const StructureViolation& e) {
        return fail("StructureViolation", e, 1);
    } catch (const LemmaViolation& e) {
        return fail("LemmaViolation", e, 1);
    } catch (const DegenerateWindow& e) {
        return fail("DegenerateWindow", e, 1);
    } catch (const SpecMismatch& e) {
        return fail("SpecMismatch", e, 1);
    } catch (const Error& e) {
        return fail("Error", e, 1);
    } catch (const nlohmann::json::exception& e) {
        return fail("InvalidArgument", e, 2);
    } catch (const std::exception& e) {
        return fail("InternalError", e, 2);
    }
}
