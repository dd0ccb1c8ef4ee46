/*
 * encoding.hpp
 * ------------
 * JSON interchange encodings. A Laurent polynomial is a list of
 * [exponent, coefficient] pairs with the exponent a signed integer and the
 * coefficient a decimal string (arbitrary precision); everything else builds
 * on that. Serialization is deterministic: object keys are sorted and no
 * volatile fields (timestamps etc.) appear.
 */
#pragma once

#include <json.hpp>

#include <string>

#include "rhoslice/blanchfield.hpp"
#include "rhoslice/covers.hpp"
#include "rhoslice/hermitian.hpp"
#include "rhoslice/laurent.hpp"
#include "rhoslice/metabelian.hpp"

namespace rhoslice {

using json = nlohmann::json;

json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j);

json herm_matrix_to_json(const HermMatrix& u);
HermMatrix herm_matrix_from_json(const json& j);

json presentation_to_json(const AlexanderPresentation& a);
AlexanderPresentation presentation_from_json(const json& j);

json form_to_json(const BlanchfieldForm& form);
BlanchfieldForm form_from_json(const json& j);

json submodule_to_json(const Submodule& s);
IntMatrix submodule_generators_from_json(const json& j, std::size_t ambient_dim);

json metabelian_ctx_to_json(const MetabelianGroupCtx& ctx);
MetabelianGroupCtx metabelian_ctx_from_json(const json& j);
json metabelian_element_to_json(const MetabelianElement& e);
MetabelianElement metabelian_element_from_json(const json& j);

json rho_result_to_json(const RhoResult& r);
json cover_order_to_json(const CoverOrderResult& r);
json livingston_report_to_json(const LivingstonReport& r);
json ruberman_report_to_json(const RubermanReport& r);
json signature_function_to_json(const SignatureFunction& f);
json obstruction_report_to_json(const ObstructionReport& r);
json double_slice_verdict_to_json(const DoubleSliceVerdict& v);

}  // namespace rhoslice
