#pragma once

#include <json.hpp>

#include "tilekit/cellset.hpp"
#include "tilekit/enumerate.hpp"
#include "tilekit/fiid.hpp"
#include "tilekit/intervals.hpp"
#include "tilekit/structure.hpp"
#include "tilekit/symbolic.hpp"
#include "tilekit/tiling.hpp"
#include "tilekit/torus.hpp"
#include "tilekit/weight.hpp"

namespace tilekit {

using ordered_json = nlohmann::ordered_json;

// Serialization: stable key order, rationals printed "p/q" reduced.
ordered_json json_of(const Rational& r);
ordered_json json_of(const GroupElement& g);
ordered_json json_of(const QuotientSpec& q);
ordered_json json_of(const Weight& w);
ordered_json json_of(const TilingReport& r);
ordered_json json_of(const FrobeniusReport& r);
ordered_json json_of(const std::vector<DilationEntry>& entries);
ordered_json json_of(const TilingCatalog& catalog, const OrbitSummary& orbits);
ordered_json json_of(const Decomposition& dec);
ordered_json json_of(const DecompositionCheck& check);
ordered_json json_of(const StepFunction& f);
ordered_json json_of(const IntervalClassification& c);
ordered_json json_of(const SymbolicScalar& s);
ordered_json json_of(const SymbolicVector& v);
ordered_json json_of(const CellSet& set);
ordered_json json_of(const RationalTorusReport& r);
ordered_json json_of(const VelocityClass& c);
ordered_json json_of(const VelocityDecomposition& d);
ordered_json json_of(const InvarianceReport& r);
ordered_json json_of(const SymbolicTilingReport& r);
ordered_json json_of(const CircleRationalityReport& r);
ordered_json json_of(const ConnectedCaseReport& r);
ordered_json json_of(const SineCheckReport& r);
ordered_json json_of(const FiidValidation& v);
ordered_json json_of(const TwoTileTrace& t);
ordered_json json_of(const VerticalTrace& t);
ordered_json json_of(const NonabelianTrace& t);

// Parsing of input documents.
Rational rational_from_json(const ordered_json& j);
std::vector<Rational> rational_vector_from_json(const ordered_json& j);
CellSet cellset_from_json(const ordered_json& j);
SymbolicScalar symbolic_scalar_from_json(const ordered_json& j);
SymbolicVector symbolic_vector_from_json(const ordered_json& j);
StepFunction step_function_from_json(const ordered_json& j);

} // namespace tilekit
