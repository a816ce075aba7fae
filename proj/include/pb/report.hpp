#pragma once

#include <string>

#include <json.hpp>

#include "pb/barcelo.hpp"
#include "pb/collapse.hpp"
#include "pb/fixedpoints.hpp"
#include "pb/freelie.hpp"
#include "pb/homology.hpp"
#include "pb/quotients.hpp"

namespace pb {

using Json = nlohmann::ordered_json;

/// `{"2": {"betti": 24, "torsion": []}}` — degrees as keys, stable order.
Json to_json(const HomologySummary& s);
HomologySummary homology_from_json(const Json& j);

Json to_json(const BranchingReport& r);
Json to_json(const BarceloReport& r);
Json to_json(const CollapseIsoReport& r);
Json to_json(const MainTheoremReport& r);
Json to_json(const FixedPredictionReport& r);
Json to_json(const QuotientBlock& b);
Json to_json(const YoungQuotientReport& r);
Json to_json(const TorsionRationalReport& r);

std::string csv_of_homology(const HomologySummary& s);

}  // namespace pb
