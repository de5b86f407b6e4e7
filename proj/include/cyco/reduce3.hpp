#ifndef CYCO_REDUCE3_HPP
#define CYCO_REDUCE3_HPP

#include "cyco/reduce2.hpp"

namespace cyco {

// Per-corolla total orders on the inputs (relative to the ambient root):
// position i (1-based) -> entry name.
using Skeletalisation = std::map<std::string, std::vector<VarName>>;

// Lexicographic skeletalisation: each corolla's inputs in natural name order.
Skeletalisation lex_skeletalisation(const UnrootedTree& t, const VarName& root);
void validate_skeletalisation(const UnrootedTree& t, const VarName& root,
                              const Skeletalisation& sk);
std::string print_skeletalisation(const Skeletalisation& sk);

// The splice of Eq-style grafting: replace position i of s1 by the block s2.
std::vector<VarName> splice(const std::vector<VarName>& s1, int i,
                            const std::vector<VarName>& s2);

// Total order on the inputs of the whole tree induced by the skeletalisation.
std::vector<VarName> induced_order(const UnrootedTree& t, const VarName& root,
                                   const Skeletalisation& sk);

// Skeletal object: quadruple type (entries, root, order, word).
struct SkObject {
  RootedTerm rt;
  Skeletalisation skel;
};

bool sk_equal(const SkObject& a, const SkObject& b);
std::string print_skobject(const SkObject& o);

struct SkArrow;
using SkArrowPtr = std::shared_ptr<const SkArrow>;

// Skeletal arrows index entries by integer positions.
struct SkArrow {
  RK kind;
  std::vector<SkObject> terms;
  std::vector<int> idx;  // Beta*: {i,j}; Theta: {i,k}; HComp: {i}
  std::vector<VarName> vars;  // underlying tree interface (kept for typing)
  SkArrowPtr a, b;
};

std::string print_skarrow(const SkArrowPtr& f);
std::pair<SkObject, SkObject> typecheck_skarrow(const SkArrowPtr& f, const Signature& sig);

SkArrowPtr red3(const RArrowPtr& f, const Skeletalisation& sk, const Signature& sig);

// Equality in the skeletal target is parallelism (Dosen-Petric coherence).
bool dp_parallel(const SkArrowPtr& f, const SkArrowPtr& g, const Signature& sig);

}  // namespace cyco

#endif
