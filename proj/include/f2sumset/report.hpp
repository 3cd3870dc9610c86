#pragma once

#include <json.hpp>

#include "f2sumset/flatten.hpp"
#include "f2sumset/harness.hpp"
#include "f2sumset/setstats.hpp"
#include "f2sumset/structure.hpp"

namespace f2sumset {

using Json = nlohmann::ordered_json;

Json to_json(const DoublingReport& r);
Json to_json(const EnergyReport& r);
Json to_json(const FlatnessVerdict& v, int n);
Json to_json(const SplitDiagnostics& d, int n);
Json to_json(const BucketAudit& a);
Json to_json(const FlatteningTrace& t, int n);
Json to_json(const Lemma1Verdict& v, int n);
Json to_json(const StructureResult& r);
Json to_json(const Subspace& h);
Json to_json(const OracleCheckReport& r);
Json to_json(const CampaignRow& r);
Json to_json(const CampaignCell& c);

}  // namespace f2sumset
