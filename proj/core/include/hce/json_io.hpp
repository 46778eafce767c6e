#pragma once

#include <json.hpp>

#include "hce/fgl.hpp"
#include "hce/specseq.hpp"

namespace hce {

using Json = nlohmann::ordered_json;

Json ring_to_json(const RingSpec& spec);
RingSpec ring_from_json(const Json& j);

Json scalar_to_json(const Ring& ring, const Scalar& s);
Scalar scalar_from_json(const Ring& ring, const Json& j);

Json module_to_json(const FreeWGModule& m);
FreeWGModule module_from_json(const Json& j);

Json lie_to_json(const Ring& ring, const GradedLieAlgebra& g);
GradedLieAlgebra lie_from_json(const Ring& ring, const Json& j);

Json hecke_to_json(const Ring& ring, const HeckeLieAlgebra& g);
HeckeLieAlgebra hecke_from_json(const Ring& ring, const Json& j);

Json summary_to_json(const HomologySummary& h);
Json page_to_json(const Page& p);
std::string page_to_tsv(const Page& p);

Json answer_to_json(const GradedAnswer& a);
std::string answer_to_pretty(const GradedAnswer& a, long p);

std::vector<DifferentialAssertion> assertions_from_json(const Json& j);

}  // namespace hce
