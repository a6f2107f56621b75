#include "carlitz/render.hpp"

#include <sstream>

namespace carlitz {

namespace {

constexpr const char* kTheta = "θ";

std::string var_symbol(Var v) {
    return v.family() == Var::Family::Theta ? kTheta : v.name();
}

std::string mono_str(const Mono& m) {
    std::string out;
    for (const auto& [v, e] : m.factors()) {
        if (!out.empty()) out += "*";
        out += var_symbol(v);
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

// generic sparse renderer over (monomial string, coefficient string, is_one)
template <class Terms>
std::string joined_terms(const Terms& terms) {
    std::string out;
    for (const auto& [mono, coeff, coeff_is_one] : terms) {
        if (!out.empty()) out += " + ";
        if (mono.empty()) {
            out += coeff;
        } else if (coeff_is_one) {
            out += mono;
        } else {
            bool wrap = coeff.find('+') != std::string::npos || coeff.find('/') != std::string::npos;
            out += (wrap ? "(" + coeff + ")" : coeff) + "*" + mono;
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string render(const Fq& x) { return x.str(); }

std::string render(const Poly& f) { return f.str(); }

std::string render(const RatFun& f) { return f.str(); }

std::string render(const FqPoly& f) {
    std::vector<std::tuple<std::string, std::string, bool>> terms;
    for (const auto& [m, c] : f.terms())
        terms.emplace_back(mono_str(m), c.str(), c.is_one());
    return joined_terms(terms);
}

std::string render(const KPoly& f) {
    std::vector<std::tuple<std::string, std::string, bool>> terms;
    for (const auto& [m, c] : f.terms())
        terms.emplace_back(mono_str(m), c.str(), c.is_one());
    return joined_terms(terms);
}

}  // namespace carlitz
