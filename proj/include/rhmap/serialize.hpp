#pragma once

// JSON documents for every object the CLI emits. Coefficients are exact
// fraction strings; parse(emit(x)) == x.

#include <json.hpp>

#include "rhmap/coalgebra.hpp"
#include "rhmap/components.hpp"
#include "rhmap/config_space.hpp"
#include "rhmap/descriptor.hpp"
#include "rhmap/gca.hpp"
#include "rhmap/mapping_model.hpp"

namespace rhmap {

using Json = nlohmann::ordered_json;

Json polynomial_to_json(const GeneratorSet& gens, const Polynomial& p);
Polynomial polynomial_from_json(const GeneratorSet& gens, const Json& j);

/// {"generators": [{name, degree}], "differential": {name: [{coeff, monomial}]}}
Json cdga_to_json(const Cdga& model);
Cdga cdga_from_json(const Json& j);

/// CDGA document plus "pointed" and "provenance": {name: {v, beta}}.
Json mapping_model_to_json(const MappingModel& M);
MappingModel mapping_model_from_json(const Json& j);

Json algebra_to_json(const FiniteGradedAlgebra& B);
Json coalgebra_to_json(const GradedCoalgebra& C);

Json family_to_json(const AugmentationFamily& f);
Json augmentation_to_json(const Augmentation& u);

Json descriptor_to_json(const HomotopyTypeDescriptor& d, const RenderOptions& opts = {});
HomotopyTypeDescriptor descriptor_from_json(const Json& j);

}  // namespace rhmap
