#pragma once

#include <optional>

#include "json.hpp"

#include "antipode/expansion.hpp"
#include "antipode/involution.hpp"
#include "antipode/polynomial.hpp"

namespace antipode {

// Wire formats. Partitions are arrays of integers ([] for the empty one);
// tableaux and tuples list their cells in row-major order:
//   tableau  {"lambda":[...],"mu":[...],"cells":[{"row":r,"col":c,"value":v},...]}
//   tuple    {"lambda":[...],"mu":[...],"blocks":[{"cells":[...]},...]}
//   poly     {"num_vars":N,"terms":[{"exponents":[...],"coeff":c},...]}
// Parsers throw std::invalid_argument naming the violated invariant.

nlohmann::json partition_to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

nlohmann::json tableau_to_json(const Tableau& t);
Tableau tableau_from_json(const nlohmann::json& j);

nlohmann::json tuple_to_json(const TableauTuple& t);
TableauTuple tuple_from_json(const nlohmann::json& j);

nlohmann::json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

// One application of phi: the acted-on cell (absent for fixed points), what
// happened, and the image.
struct OrbitReport {
    TableauTuple input;
    std::optional<DistinguishedCell> cell;
    TableauTuple output;
};

OrbitReport make_orbit_report(const TableauTuple& t);

// {"input":<tuple>,"cell":{"row":r,"col":c}|null,"kind":"split"|"merge"|"fixed",
//  "output":<tuple>}
nlohmann::json orbit_report_to_json(const OrbitReport& r);

}  // namespace antipode
