#pragma once

#include "wr/bigaction.hpp"
#include "wr/cover.hpp"
#include "wr/rayclass.hpp"

#include <json.hpp>

namespace wr::io {

using json = nlohmann::json;

// Integers outside the int64 range are written as decimal strings;
// readers accept both forms.
json big_to_json(const BigInt& x);
BigInt big_from_json(const json& j);
json rational_to_json(const Rational& x);   // [num, den]
Rational rational_from_json(const json& j);

json to_json(FieldCtx k);
// modulus is optional on input; when present it must be the deterministic one
FieldCtx field_from_json(const json& j);

json to_json(const FqElem& x);
FqElem elem_from_json(FieldCtx k, const json& j);
json to_json(const FqPoly& f);
FqPoly poly_from_json(FieldCtx k, const json& j);
json to_json(const AdditiveOp& A);
AdditiveOp additive_from_json(FieldCtx k, const json& j);
json to_json(const WittVec& u);
WittVec witt_from_json(FieldCtx k, const json& j);

json to_json(const CoverSpec& c);
CoverSpec cover_from_json(const json& j);

json to_json(const Filtration& f);
Filtration filtration_from_json(const json& j);

json to_json(const ActionProfile& a);
ActionProfile profile_from_json(const json& j);
json to_json(const Report& r);

json to_json(const AbelianInvariants& inv);   // orders, e.g. [25, 5]
AbelianInvariants invariants_from_json(uint32_t p, const json& j);

json to_json(const TowerLevel& l);
json to_json(const CoverAnalysis& a);

// throws ParseError with the offending text
json parse(const std::string& text);

} // namespace wr::io
