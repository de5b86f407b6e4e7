#ifndef CYCO_PARSER_HPP
#define CYCO_PARSER_HPP

#include <string>

#include "cyco/trees.hpp"

namespace cyco {

enum class PayloadKind { Object, Arrow, Tree };

struct Input {
  PayloadKind kind;
  Signature sig;
  ObjPtr object;
  ArrowPtr arrow;
  UnrootedTree tree;
};

// Parses an input file: an optional `params { a(x,y); ... }` header followed
// by an object term, an arrow term, or a tree. Parameters also declare
// themselves through identity leaves a{x,y} and corollas a(x,...).
// Unit syntax switches the signature to unit mode.
Input parse_input(const std::string& text);

// Single-payload helpers (collect declarations into sig).
ObjPtr parse_object(const std::string& text, Signature& sig);
ArrowPtr parse_arrow(const std::string& text, Signature& sig);
UnrootedTree parse_tree(const std::string& text, Signature& sig);
Bijection parse_bijection(const std::string& text);

}  // namespace cyco

#endif
