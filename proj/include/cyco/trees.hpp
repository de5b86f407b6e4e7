#ifndef CYCO_TREES_HPP
#define CYCO_TREES_HPP

#include <memory>
#include <string>
#include <vector>

#include "cyco/terms.hpp"

namespace cyco {

// A corolla is a decorated parameter; its half-edges are the entries.
struct Corolla {
  std::string param;
  Bijection dec;

  FinSet half_edges() const { return dec.dom(); }
};

// Corollas with mutually disjoint half-edges plus an involution; fixpoints
// are the free variables. Valid trees are connected and acyclic with no
// loops or multiple edges.
struct UnrootedTree {
  std::vector<Corolla> cors;
  std::map<VarName, VarName, NatLess> inv;

  FinSet all_half_edges() const;
  FinSet fv() const;
  VarName mate(const VarName& v) const;
  int corolla_index_of(const VarName& half) const;
  const Corolla& corolla(const std::string& param) const;
  bool has_corolla(const std::string& param) const;
  // Unordered edges, canonically oriented (smaller name first).
  std::vector<std::pair<VarName, VarName>> edges() const;
};

bool tree_equal(const UnrootedTree& a, const UnrootedTree& b);
std::string print_tree(const UnrootedTree& t);
void validate_tree(const UnrootedTree& t, const Signature& sig);

// Splits at an edge; the component containing the edge's first half-edge
// comes first. Both half-edges become free.
std::pair<UnrootedTree, UnrootedTree> decompose(const UnrootedTree& t,
                                                const std::pair<VarName, VarName>& edge);

// ---------------------------------------------------------------------------

struct PW;
using PWPtr = std::shared_ptr<const PW>;

// Parenthesised words over parameters: w ::= a | (w w).
struct PW {
  bool is_leaf;
  std::string param;
  PWPtr l, r;
};

PWPtr pw_leaf(const std::string& p);
PWPtr pw_pair(PWPtr l, PWPtr r);
bool pw_equal(const PWPtr& a, const PWPtr& b);
std::string print_pword(const PWPtr& w);
std::vector<std::string> pw_letters(const PWPtr& w);

// T-admissibility: the word records a gradual composition of the corollas.
bool admissible(const UnrootedTree& t, const PWPtr& w);
// (T,x)-admissibility: additionally operadic with respect to the root x.
bool rooted_admissible(const UnrootedTree& t, const VarName& x, const PWPtr& w);

// Inputs and output of the subtree spanned by the given corollas, relative to
// the root x of the ambient tree.
std::pair<FinSet, VarName> in_out(const UnrootedTree& t, const VarName& x,
                                  const std::vector<std::string>& sub_corollas);

// ---------------------------------------------------------------------------

struct TreeTerm {
  UnrootedTree tree;
  PWPtr word;
};

// The unique decomposition of t matching the word split (w1 w2):
// returns (T1, T2, z, y) with letters(w1) spanning T1 and the cross edge
// (z, y), z on the T1 side.
struct WordSplit {
  UnrootedTree t1, t2;
  VarName z, y;
};
WordSplit split_by_word(const UnrootedTree& t, const PWPtr& w1, const PWPtr& w2);

// Correspondence with symmetry-free normal object terms.
TreeTerm delta_inv(const ObjPtr& w, const Signature& sig);
ObjPtr delta(const TreeTerm& t, const Signature& sig);

// Arrow terms over a fixed unrooted tree: the factor data are words.
struct WArrow;
using WArrowPtr = std::shared_ptr<const WArrow>;

enum class WK { Id, Beta, BetaInv, Gamma, VComp, HComp };

struct WArrow {
  WK kind;
  std::vector<PWPtr> words;   // Id: {w}; Beta*: {w1,w2,w3}; Gamma: {w1,w2}
  std::vector<VarName> vars;  // Beta*: {z,zb,y,yb}; Gamma/HComp: {z,y}
  WArrowPtr a, b;
};

WArrowPtr w_id(PWPtr w);
WArrowPtr w_beta(PWPtr w1, PWPtr w2, PWPtr w3, const VarName& z, const VarName& zb,
                 const VarName& y, const VarName& yb, bool inverse = false);
WArrowPtr w_gamma(PWPtr w1, PWPtr w2, const VarName& z, const VarName& y);
WArrowPtr w_vcomp(WArrowPtr before, WArrowPtr after);
WArrowPtr w_hcomp(WArrowPtr l, const VarName& z, const VarName& y, WArrowPtr r);

std::string print_warrow(const WArrowPtr& f);

// Source and target words; validates the typing rules over the tree.
std::pair<PWPtr, PWPtr> typecheck_warrow(const UnrootedTree& t, const WArrowPtr& f);

// Homomorphic extension of delta to arrows.
WArrowPtr delta_inv_arrow(const ArrowPtr& f, const Signature& sig);
ArrowPtr delta_arrow(const UnrootedTree& t, const WArrowPtr& f, const Signature& sig);

}  // namespace cyco

#endif
