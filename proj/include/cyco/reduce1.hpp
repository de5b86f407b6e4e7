#ifndef CYCO_REDUCE1_HPP
#define CYCO_REDUCE1_HPP

#include <functional>

#include "cyco/terms.hpp"

namespace cyco {

// Chooses the pair (x', y') when an action is pushed through a composition.
// Receives the candidate original names and the set of names to avoid;
// must return names satisfying the rewrite rule's side conditions.
struct FreshPolicy {
  // Default: keep the original name when admissible, else least #k suffix.
  static FreshPolicy canonical();
  std::function<std::pair<VarName, VarName>(const VarName& x, const VarName& y,
                                            const FinSet& avoid)>
      pick;
};

// Normal form of an object term: symmetry-free, decorated leaves.
ObjPtr nf_object(const ObjPtr& w, const Signature& sig,
                 const FreshPolicy& fresh = FreshPolicy::canonical());

// All normal forms reachable when each rule application may choose its fresh
// names from a palette of `bound` candidates per variable.
std::vector<ObjPtr> nf_all_objects(const ObjPtr& w, const Signature& sig, int bound);

// The arrow W -> nf(W) that replays the reduction with eps generators.
ArrowPtr nf_object_arrow(const ObjPtr& w, const Signature& sig,
                         const FreshPolicy& fresh = FreshPolicy::canonical());

// Arrow Act(w, renaming(old->new)) -> w[old/new] pushing a one-entry renaming
// to its leaf, keeping all other names where the side conditions allow.
ArrowPtr push_rename(const ObjPtr& w, const VarName& oldv, const VarName& newv,
                     const Signature& sig);

// Normal form of an arrow term: symmetry-free, typed in the loose system
// (vertical composition along alpha-equivalent objects).
ArrowPtr nf_arrow(const ArrowPtr& f, const Signature& sig,
                  const FreshPolicy& fresh = FreshPolicy::canonical());

// Lemma-construction transfer: given a loose arrow f and u' alpha-equivalent
// to its source, produce a strictly typed arrow from u' (target alpha-equal
// to f's target).
ArrowPtr transfer(const ArrowPtr& f, const ObjPtr& u_prime, const Signature& sig);

// Full first reduction: strict symmetry-free arrow with source nf(source(f)).
ArrowPtr red1(const ArrowPtr& f, const Signature& sig);

// Renames composed interface pairs to globally fresh canonical names so that
// every leaf entry name occurs at exactly one leaf. Identity on terms that
// are already tree-representable.
ObjPtr alpha_canonical(const ObjPtr& w, const Signature& sig);

}  // namespace cyco

#endif
