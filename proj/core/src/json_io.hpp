#pragma once

#include <json.hpp>

#include "qrep/rep.hpp"
#include "qrep/symres.hpp"

// Internal JSON plumbing shared by the io entry points and the CLI; the
// public surface exchanges strings only.
namespace qrep::detail {

using Json = nlohmann::ordered_json;

Json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const Json& j, const std::string& source_name);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const Field& f, const std::string& source_name);

Json rep_to_json(const Representation& m);
Representation rep_from_json(const Json& j, const std::string& source_name,
                             std::shared_ptr<const Quiver> context);

// {vertex: matrix} block of a morphism.
Json morphism_comps_to_json(const RepMorphism& f);
Json morphism_to_json_full(const RepMorphism& f);

Json extnat_to_json(const ExtNat& v);
ExtNat extnat_from_json(const Json& j, const std::string& source_name);

Json profile_to_json(const RingProfile& p);
RingProfile profile_from_json(const Json& j, const std::string& source_name);

Json formal_to_json(const Quiver& q, const FormalInjective& term);

Json parse_document(const std::string& text, const std::string& source_name);

}  // namespace qrep::detail
