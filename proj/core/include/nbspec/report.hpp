#pragma once

#include <nlohmann/json.hpp>

#include "nbspec/analysis.hpp"
#include "nbspec/eig.hpp"
#include "nbspec/graph.hpp"
#include "nbspec/qep.hpp"

// JSON forms of the result types. Complex numbers serialize as {"re", "im"}.
// Doubles use the shortest representation that round-trips exactly; non-finite
// values become null.

namespace nbspec {

nlohmann::json complex_json(Complex z);

void to_json(nlohmann::json& j, const SbmParams& p);
void to_json(nlohmann::json& j, const DegreeStats& s);
void to_json(nlohmann::json& j, const Spectrum& s);
void to_json(nlohmann::json& j, const IsolatedEigenvalue& e);
void to_json(nlohmann::json& j, const ClassificationReport& r);
void to_json(nlohmann::json& j, const IharaBassResult& r);
void to_json(nlohmann::json& j, const InclusionResult& r);
void to_json(nlohmann::json& j, const EsdReport& r);
void to_json(nlohmann::json& j, const CommunityResult& r);
void to_json(nlohmann::json& j, const MuBound& b);
void to_json(nlohmann::json& j, const ClusterCertificate& c);
void to_json(nlohmann::json& j, const QepBoundReport& r);

/// Compact form of a classification without the per-eigenvalue bulk list.
nlohmann::json classification_summary(const ClassificationReport& r);

}  // namespace nbspec
