#ifndef CYCO_UNITS_HPP
#define CYCO_UNITS_HPP

#include "cyco/terms.hpp"

namespace cyco {

// Unit elimination: returns a unit-free term, or a single unit leaf when the
// input contains no parameters.
ObjPtr red0_object(const ObjPtr& w, const Signature& sig);

// Unit elimination on arrow terms: an arrow between the red0 images of the
// endpoints, or 1_{id{x,y}} when both endpoints reduce to a unit.
ArrowPtr red0_arrow(const ArrowPtr& f, const Signature& sig);

// Formal inverse of an eps-only composite (used by the inverse generators).
ArrowPtr invert_eps(const ArrowPtr& f);

// The completed arrow case table, one line per case, for test audits.
std::vector<std::string> red0_cases();

}  // namespace cyco

#endif
