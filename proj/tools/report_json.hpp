#pragma once

#include "json.hpp"

#include "bilip/compare.hpp"
#include "bilip/numeric.hpp"
#include "bilip/topology.hpp"

namespace bilip::cli {

using nlohmann::json;

json to_json(const ConeComponentReport& r);
json to_json(const InvariantSignature& sig, bool assume_radical);
json to_json(const ObstructionReport& r, bool assume_radical);
json to_json(const SheetReport& r);
json to_json(const SheetRun& run);
json to_json(const AbelianGroup& g);
json to_json(const SpectralPage& page);

}  // namespace bilip::cli
