#ifndef CARLITZ_JSON_IO_HPP
#define CARLITZ_JSON_IO_HPP

#include <json.hpp>

#include "carlitz/carlitz.hpp"
#include "carlitz/kpoly.hpp"
#include "carlitz/logalg.hpp"

namespace carlitz {

using Json = nlohmann::ordered_json;

// Wire formats:
//   Fq        -> array of e integers in [0, p)
//   Poly      -> array of Fq, ascending degree (empty = zero)
//   RatFun    -> {"num": Poly, "den": Poly}
//   MultiPoly -> array of {"exps": {var: deg, ...}, "coeff": ...}, terms in
//                canonical monomial order
//   FieldCtx  -> {"p":, "e":, "modulus":[...]} (modulus omitted when e = 1)
//   TwistedPoly -> array of Poly, ascending tau degree
Json to_json(const Fq& x);
Json to_json(const Poly& f);
Json to_json(const RatFun& f);
Json to_json(const FieldCtx& ctx);
Json to_json(const TwistedPoly& f);
Json to_json(const FqPoly& f);
Json to_json(const KPoly& f);
Json to_json(const LogAlgReport& rep);

Fq fq_from_json(const FieldPtr& ctx, const Json& j);
Poly poly_from_json(const FieldPtr& ctx, const Json& j);
RatFun ratfun_from_json(const FieldPtr& ctx, const Json& j);
FieldPtr field_from_json(const Json& j);
TwistedPoly twisted_from_json(const FieldPtr& ctx, const Json& j);
KPoly kpoly_from_json(const FieldPtr& ctx, const Json& j);

}  // namespace carlitz

#endif
