#pragma once

#include <json.hpp>

#include "qlrc/quantum.hpp"

namespace qlrc {

// Certificate JSON, schema "qlrc-cert/1". Field elements render as 0x-hex;
// coordinates are 0-based; counts that can exceed 2^53 render as decimal
// strings. Key order is insertion order, fixed by the writers, so identical
// inputs produce byte-identical files.
using Json = nlohmann::ordered_json;

Json field_json(const Field& f);
const Field& field_from_json(const Json& j);

Json code_json(const LinearCode& c);
LinearCode code_from_json(const Json& j);

Json design_json(const DesignCertificate& cert, const BlockSystem* blocks = nullptr);
Json locality_json(const LocalityCertificate& cert);
Json clrc_bounds_json(const ClrcBoundReport& rep);
Json optimal_clrc_json(const OptimalClrcCertificate& cert);
Json qlrc_bounds_json(const QBoundReport& rep);
Json family_json(const FamilyInstance& inst);
Json crossover_json(uint64_t q, int r, int t, const CrossoverReport& rep);

// Canonical block-list string ("0,1,2;0,3,5;...") and its SHA-256.
std::string blocks_canonical(const BlockSystem& b);
std::string blocks_sha256(const BlockSystem& b);

// Re-validation of a written certificate: schema tag, parameter identities,
// and recomputation of everything cheap (bound right-hand sides, design
// counting identities, block hashes, generator RREF ranks).
struct RecheckResult {
    bool ok = true;
    std::vector<std::string> problems;
    void fail(std::string msg) {
        ok = false;
        problems.push_back(std::move(msg));
    }
};
RecheckResult recheck_certificate(const Json& j, const Budget& budget = {});

}  // namespace qlrc
