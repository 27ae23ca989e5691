#pragma once

#include <json.hpp>
#include <string>

#include "egt/action.hpp"
#include "egt/automorphism.hpp"
#include "egt/config.hpp"
#include "egt/cover.hpp"
#include "egt/cuts.hpp"
#include "egt/family.hpp"
#include "egt/graph.hpp"
#include "egt/kernel.hpp"
#include "egt/replace.hpp"
#include "egt/spectra.hpp"

namespace egt {

nlohmann::json to_json(const Graph& g);
nlohmann::json to_json(const RunConfig& cfg);
nlohmann::json to_json(const SpectralReport& r);
nlohmann::json to_json(const CheegerReport& r);
nlohmann::json to_json(const ExpanderReport& r);
nlohmann::json to_json(const FolnerReport& r);
nlohmann::json to_json(const CoveringMap& c);
nlohmann::json to_json(const DeckGroup& d);
nlohmann::json to_json(const QuotientResult& q);
nlohmann::json to_json(const ReductionCover& r);
nlohmann::json to_json(const ReplacementResult& r);
nlohmann::json to_json(const TransitivityReport& r);
nlohmann::json to_json(const FixedVertexReport& r);
nlohmann::json to_json(const CndVerdict& v);
nlohmann::json to_json(const QuasiTriangleReport& r);
nlohmann::json to_json(const InvarianceReport& r);
nlohmann::json to_json(const BoundCertificate& c);
nlohmann::json to_json(const SupExponentResult& r);
nlohmann::json to_json(const RoundnessEstimate& r);
nlohmann::json to_json(const OrbitData& o);
nlohmann::json to_json(const FamilyRow& r);
nlohmann::json to_json(const FamilyReport& r);
nlohmann::json to_json(const FolnerProbeRow& r);

std::string family_report_csv(const FamilyReport& r, const RunConfig& cfg);

// Whitespace matrix text (n, then n rows) -> kernel.
Kernel read_kernel_file(const std::string& path);

}  // namespace egt
