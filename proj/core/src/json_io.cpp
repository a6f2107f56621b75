#include "carlitz/json_io.hpp"

namespace carlitz {

Json to_json(const Fq& x) {
    Json j = Json::array();
    for (auto c : x.coords()) j.push_back(c);
    return j;
}

Json to_json(const Poly& f) {
    Json j = Json::array();
    for (const auto& c : f.coeffs()) j.push_back(to_json(c));
    return j;
}

Json to_json(const RatFun& f) {
    return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

Json to_json(const FieldCtx& ctx) {
    Json j{{"p", ctx.p()}, {"e", ctx.e()}};
    if (ctx.e() > 1) j["modulus"] = ctx.modulus();
    return j;
}

Json to_json(const TwistedPoly& f) {
    Json j = Json::array();
    for (const auto& c : f.coeffs()) j.push_back(to_json(c));
    return j;
}

namespace {

Json mono_to_json(const Mono& m) {
    Json exps = Json::object();
    for (const auto& [v, e] : m.factors()) exps[v.name()] = e;
    return exps;
}

template <class R>
Json multipoly_to_json(const MultiPoly<R>& f) {
    Json j = Json::array();
    for (const auto& [m, c] : f.terms())
        j.push_back(Json{{"exps", mono_to_json(m)}, {"coeff", to_json(c)}});
    return j;
}

Mono mono_from_json(const Json& j) {
    Mono m = Mono::unit();
    for (auto it = j.begin(); it != j.end(); ++it) {
        auto v = Var::parse(it.key());
        if (!v) throw usage_error("unknown variable '" + it.key() + "' in monomial");
        m = m * Mono::var(*v, it.value().get<long long>());
    }
    return m;
}

}  // namespace

Json to_json(const FqPoly& f) { return multipoly_to_json(f); }
Json to_json(const KPoly& f) { return multipoly_to_json(f); }

Json to_json(const LogAlgReport& rep) {
    return Json{{"m", rep.m},
                {"q", rep.q},
                {"N", rep.order},
                {"match", rep.match},
                {"integral", rep.integral},
                {"poly", to_json(rep.poly)},
                {"max_i", rep.max_i},
                {"millis", rep.millis}};
}

Fq fq_from_json(const FieldPtr& ctx, const Json& j) {
    std::vector<std::uint32_t> coords;
    for (const auto& c : j) coords.push_back(c.get<std::uint32_t>());
    return Fq::from_coords(ctx, coords);
}

Poly poly_from_json(const FieldPtr& ctx, const Json& j) {
    std::vector<Fq> cs;
    for (const auto& c : j) cs.push_back(fq_from_json(ctx, c));
    return Poly(ctx, std::move(cs));
}

RatFun ratfun_from_json(const FieldPtr& ctx, const Json& j) {
    return RatFun(poly_from_json(ctx, j.at("num")), poly_from_json(ctx, j.at("den")));
}

FieldPtr field_from_json(const Json& j) {
    const auto p = j.at("p").get<std::uint32_t>();
    const auto e = j.at("e").get<std::uint32_t>();
    if (e == 1) return FieldCtx::make_prime(p);
    return FieldCtx::make(p, e, j.at("modulus").get<std::vector<std::uint32_t>>());
}

TwistedPoly twisted_from_json(const FieldPtr& ctx, const Json& j) {
    std::vector<Poly> cs;
    for (const auto& c : j) cs.push_back(poly_from_json(ctx, c));
    return TwistedPoly(ctx, std::move(cs));
}

KPoly kpoly_from_json(const FieldPtr& ctx, const Json& j) {
    KPoly f = k_zero_poly(ctx);
    for (const auto& term : j)
        f.add_term(mono_from_json(term.at("exps")), ratfun_from_json(ctx, term.at("coeff")));
    return f;
}

}  // namespace carlitz
