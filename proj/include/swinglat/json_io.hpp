#pragma once

#include <json.hpp>

#include "swinglat/builder.hpp"
#include "swinglat/congruence.hpp"
#include "swinglat/diagram.hpp"
#include "swinglat/swing.hpp"

namespace swinglat {

using Json = nlohmann::json;

// Canonical diagram format:
//   {"size": N, "upper_covers": [[...], ...], "layout": [[x, y], ...] | null}
// Lower covers are derived on load; invalid input throws InvalidDiagram.
Json diagram_to_json(const Diagram& d);
Diagram diagram_from_json(const Json& j);

Json edge_to_json(PrimeInterval e);
PrimeInterval edge_from_json(const Json& j);
Json cell_to_json(const FourCell& c);
FourCell cell_from_json(const Json& j);

/// {"blocks": [[ids...], ...]} with blocks sorted by least element.
Json partition_to_json(const Partition& p);
Partition partition_from_json(int size, const Json& j);

/// {"grid":[m,n],"forks":[cellRef...],"corners":[id...],"eyes":[cellRef...],"seed":u64}
Json recipe_to_json(const BuildRecipe& r);
BuildRecipe recipe_from_json(const Json& j);

Json sequence_to_json(const StepSequence& s);

} // namespace swinglat
