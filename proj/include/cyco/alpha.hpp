#ifndef CYCO_ALPHA_HPP
#define CYCO_ALPHA_HPP

#include "cyco/terms.hpp"

namespace cyco {

// Renames one entry at the named leaf (tau must be a one-point renaming of the
// leaf's current entry set), rewriting the indices of enclosing compositions.
ObjPtr substitute_param(const ObjPtr& w, const std::string& leaf, const Bijection& tau);

// Same, addressed by the entry being renamed: oldv must be contributed by a
// unique leaf of w (free or composed at an inner node of w).
ObjPtr subst_entry(const ObjPtr& w, const VarName& oldv, const VarName& newv);

// Substitution on symmetry-free arrow terms (Id/Beta/BetaInv/Gamma/VComp/HComp):
// renames at the named leaf throughout, rewriting generator indices as
// dictated by the substitution on the endpoints.
ArrowPtr substitute_param_arrow(const ArrowPtr& f, const std::string& leaf, const Bijection& tau,
                                const Signature& sig);

// Alpha-equivalence on symmetry-free object terms: structural matching that
// renames composition-interface pairs, with the freshness side conditions of
// the generating rule (no capture).
bool alpha_eq(const ObjPtr& u, const ObjPtr& v, const Signature& sig);

// Witness arrow u -> v for u == v (alpha), built from eps2inv, eps4 and
// leafward eps chains, horizontally composed. Trivial witness is 1_u.
ArrowPtr alpha_witness(const ObjPtr& u, const ObjPtr& v, const Signature& sig);

// True iff every entry name of every leaf occurs at exactly one leaf
// (the precondition for the tree representation).
bool leaf_vars_disjoint(const ObjPtr& w);

}  // namespace cyco

#endif
