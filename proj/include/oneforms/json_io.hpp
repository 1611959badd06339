#pragma once

#include <json.hpp>

#include "oneforms/flat.hpp"
#include "oneforms/forms.hpp"
#include "oneforms/group.hpp"
#include "oneforms/quotient.hpp"

namespace oneforms {

using nlohmann::json;

json to_json(const cplx& z);
cplx complex_from_json(const json& j);

/// [re, im] for finite points, the string "inf" for infinity.
json to_json(const SpherePoint& p);
SpherePoint sphere_point_from_json(const json& j);

/// [[re_a, im_a], [re_b, im_b], [re_c, im_c], [re_d, im_d]].
json to_json(const MobiusMap& t);
MobiusMap mobius_from_json(const json& j);

json to_json(const FormDocument& doc);
FormDocument form_document_from_json(const json& j);

json to_json(const FiniteMobiusGroup& g);

json to_json(const MPoint& m);
MPoint mpoint_from_json(const json& j);

json to_json(const FlatSurfaceInvariants& inv);

} // namespace oneforms
