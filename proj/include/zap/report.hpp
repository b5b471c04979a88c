#pragma once

// JSON forms of the analysis reports. Integers that could not be computed
// are written as {"unavailable": reason}; intervals as {"min", "max"}.

#include "zap/homology.hpp"
#include "zap/invariants.hpp"
#include "zap/io.hpp"
#include "zap/obstructions.hpp"

namespace zap {

ojson to_json(const ValidationReport& r);
ojson to_json(const SingularityCensus& c);
ojson to_json(const HomologyResult& h);
ojson to_json(const InvariantReport& r);
ojson to_json(const K3Profile& p);
ojson to_json(const ObstructionReport& r);

}  // namespace zap
