#pragma once

#include <nlohmann/json.hpp>

#include "oddsym/complexes.hpp"
#include "oddsym/homology.hpp"
#include "oddsym/lattice.hpp"
#include "oddsym/orbits.hpp"
#include "oddsym/weights.hpp"

namespace oddsym {

/// Insertion-ordered JSON so identical inputs serialize byte-identically.
using Json = nlohmann::ordered_json;

// Integers are serialized as decimal strings: arbitrary precision survives
// any JSON reader.
Json to_json(const Int& x);
Json to_json(const IntVec& v);
Json to_json(const IntMat& m);
Int int_from_json(const Json& j);
IntVec int_vec_from_json(const Json& j);
IntMat int_mat_from_json(const Json& j);

Json to_json(const FiniteComplex& fc);
FiniteComplex complex_from_json(const Json& j);

Json to_json(const HomologyReport& report);

Json to_json(const std::vector<KostantRow>& rows, const Partition& lambda, std::size_t n);
Json to_json(const PartitionMultiset& ms);
Json to_json(const Polynomial& poly);

Json to_json(const OrbitReport& report);
Json to_json(const NecessityReport& report);
Json to_json(const ReachabilityResult& result);

/// dump(2) plus trailing newline; the single serialization used everywhere.
std::string dump_json(const Json& j);

}  // namespace oddsym
