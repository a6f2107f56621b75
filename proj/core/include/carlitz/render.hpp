#ifndef CARLITZ_RENDER_HPP
#define CARLITZ_RENDER_HPP

#include <string>

#include "carlitz/kpoly.hpp"

namespace carlitz {

// Human-readable rendering for CLI text output.  theta prints as the UTF-8
// symbol; multivariate terms print like "x^3*z - x^3*z^3".
std::string render(const Fq& x);
std::string render(const Poly& f);
std::string render(const RatFun& f);
std::string render(const FqPoly& f);
std::string render(const KPoly& f);

}  // namespace carlitz

#endif
