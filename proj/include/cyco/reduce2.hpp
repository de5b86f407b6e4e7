#ifndef CYCO_REDUCE2_HPP
#define CYCO_REDUCE2_HPP

#include "cyco/trees.hpp"

namespace cyco {

struct RootedTerm {
  UnrootedTree tree;
  VarName root;
  PWPtr word;
};

bool rooted_equal(const RootedTerm& a, const RootedTerm& b);
std::string print_rooted(const RootedTerm& t);
void validate_rooted(const RootedTerm& t, const Signature& sig);

struct RArrow;
using RArrowPtr = std::shared_ptr<const RArrow>;

enum class RK { Id, Beta, BetaInv, Theta, VComp, HComp };

// Arrow terms of the rooted syntax. Factors carry their own roots:
//   Beta*, Theta: factors {rt1, rt2, rt3}, indices {z, y}
//   HComp: a, b, indices {z, y} (z an input of a's side, y the root of b's)
struct RArrow {
  RK kind;
  std::vector<RootedTerm> terms;
  std::vector<VarName> vars;
  RArrowPtr a, b;
};

RArrowPtr r_id(RootedTerm t);
RArrowPtr r_beta(RootedTerm t1, RootedTerm t2, RootedTerm t3, const VarName& z, const VarName& y,
                 bool inverse = false);
RArrowPtr r_theta(RootedTerm t1, RootedTerm t2, RootedTerm t3, const VarName& z,
                  const VarName& y);
RArrowPtr r_vcomp(RArrowPtr before, RArrowPtr after);
RArrowPtr r_hcomp(RArrowPtr l, const VarName& z, const VarName& y, RArrowPtr r);

std::string print_rarrow(const RArrowPtr& f);
std::pair<RootedTerm, RootedTerm> typecheck_rarrow(const RArrowPtr& f, const Signature& sig);
int count_thetas(const RArrowPtr& f);
int count_betas_r(const RArrowPtr& f);

// The operadic word w^{.x}: the root-side factor always comes first.
PWPtr rootify_word(const TreeTerm& t, const VarName& x);

// The commuting witness kappa : (T,w) -> (T, w^{.x}) over the tree syntax.
WArrowPtr kappa(const TreeTerm& t, const VarName& x);

// Second reduction of an arrow over trees, for the chosen root.
RArrowPtr red2(const UnrootedTree& tree, const WArrowPtr& f, const VarName& x);

}  // namespace cyco

#endif
