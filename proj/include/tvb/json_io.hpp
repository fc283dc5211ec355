#pragma once

#include "tvb/bundle.hpp"
#include "tvb/chain.hpp"
#include "tvb/ehrhart.hpp"
#include "tvb/errors.hpp"
#include "tvb/fan.hpp"
#include "tvb/plfunction.hpp"
#include "tvb/polytope.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace tvb {

using Json = nlohmann::json;

Json to_json(const LatticeVector& v);
Json to_json(const RationalVector& v);
Json to_json(const Polytope& p);
Json to_json(const Cone& c);
Json to_json(const Fan& f);
Json to_json(const PLFunction& h);
Json to_json(const MultiSupportFunction& m);
Json to_json(const ConvexChain& a);
Json to_json(const ConeChain& a);
Json to_json(const KlyachkoBundle& b);
Json to_json(const EhrhartPolynomial& p);

LatticeVector lattice_vector_from_json(const Json& j, const std::string& where);
RationalVector rational_vector_from_json(const Json& j, const std::string& where);
Polytope polytope_from_json(const Json& j, const std::string& where = "polytope");
Cone cone_from_json(const Json& j, const std::string& where = "cone");
FanPtr fan_from_json(const Json& j, const std::string& where = "fan");
PLFunction plfunction_from_json(const Json& j, const std::string& where = "plfunction");
ConvexChain chain_from_json(const Json& j, const std::string& where = "chain");
KlyachkoBundle bundle_from_json(const Json& j, const std::string& where = "bundle");

// Parses a whole document from disk; throws JsonFormatError with the
// offending location.
Json load_json_file(const std::string& path);

}  // namespace tvb
