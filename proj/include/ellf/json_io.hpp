#pragma once

#include <json.hpp>

#include "ellf/character.hpp"
#include "ellf/padic.hpp"
#include "ellf/stepfun.hpp"
#include "ellf/zeta.hpp"

namespace ellf {

using nlohmann::json;

json kelem_to_json(const KElem& x);
KElem kelem_from_json(const Field& F, const json& j);

json cyc_to_json(const Cyc& x);
Cyc cyc_from_json(const Field& F, const json& j);

json stepfn_to_json(const StepFn& f);
StepFn stepfn_from_json(const Field& F, const json& j);

json shellfn_to_json(const ShellFn& f);
ShellFn shellfn_from_json(const Field& F, const json& j);

json laurent_to_json(const Laurent& f);
json zeta_to_json(const ZetaValue& z);

json character_to_json(const Character& chi);
Character character_from_json(const Field& F, const json& j);

json padic_context_to_json(const PadicContext& ctx);

}  // namespace ellf
