#ifndef CYCO_ENGINE_HPP
#define CYCO_ENGINE_HPP

#include <cstdint>
#include <functional>
#include <optional>

#include "cyco/reduce3.hpp"

namespace cyco {

struct RunConfig {
  bool relaxed = false;  // also build and typecheck the equivariance witnesses
  std::optional<VarName> root;
  std::optional<Skeletalisation> skel;
  SignTable signs;
  unsigned seed = 0;
};

struct StageTrace {
  std::string stage;
  std::string src, tgt;
};

struct PipelineResult {
  bool unit_degenerate = false;
  ObjPtr unit_obj;             // when both endpoints reduce to a unit
  ArrowPtr red0_out;           // arrow of the unit-free calculus
  ArrowPtr red1_out;           // strict symmetry-free arrow
  UnrootedTree tree;
  WArrowPtr warrow;            // the tree-wise form of red1_out
  VarName root;
  RArrowPtr red2_out;
  Skeletalisation skel;
  SkArrowPtr red3_out;
  ArrowPtr witness;            // relaxed mode: eps(Phi, eps_U), typing-only
  std::vector<StageTrace> trace;
};

PipelineResult pipeline(const ArrowPtr& f, const Signature& sig, const RunConfig& cfg = {});

struct Verdict {
  bool equal = false;
  enum class Reason { NotParallel, ParallelByCoherence } reason = Reason::NotParallel;
  std::string detail;  // first disagreeing stage, or "all stages parallel"
  std::vector<StageTrace> trace_lhs, trace_rhs;
};

Verdict decide_equal(const ArrowPtr& f, const ArrowPtr& g, const Signature& sig,
                     const RunConfig& cfg = {});

// ---------------------------------------------------------------------------
// Coherence cell catalogue.

enum class Cell {
  BetaPentagon,
  BetaGammaHexagon,
  BetaGammaDecagon,
  GammaInvolution,
  BetaSigma,
  GammaSigma,
  EqMor,
  BetaEpsHexagon,
  GammaEpsSquare,
  BetaGammaIotaEpsHexagon1,
  BetaGammaIotaEpsHexagon2,
  BetaIotaEpsSquare,
  GammaIotaSquare,
  EpsIotaSquare,
  IotaEpsNuSquare,
  GammaIotaNuPentagon,
  IotaNuPentagon,
  NuSigma,
  NuInvolution,
  ThetaInvolution,
  BetaThetaPentagon,
  ThetaHexagon,
};

std::vector<Cell> all_cells();
std::string cell_name(Cell c);
bool cell_needs_units(Cell c);

struct CellInstance {
  ArrowPtr lhs, rhs;
};

// Builds the two border composites over a concrete factor assignment;
// declares the needed parameters in sig. variant >= 0 varies entry sets and
// the bijections involved.
CellInstance cell_borders(Cell c, Signature& sig, int variant);

// The derived parallel associativity, expanded through its definition.
ArrowPtr theta_arrow(const ObjPtr& f, const ObjPtr& g, const ObjPtr& h, const VarName& x,
                     const VarName& xb, const VarName& y, const VarName& yb);

// ---------------------------------------------------------------------------
// Enumeration of canonical arrows as rewrite paths.

struct Move {
  ArrowPtr step;   // whiskered single generator
  ObjPtr result;
};

// All single-generator rewrites of a symmetry-free term.
std::vector<Move> one_step_moves(const ObjPtr& w, const Signature& sig);

// All symmetry-free object terms over non-repeating subsets of the given
// parameters (every bracketing, every interface choice).
std::vector<ObjPtr> enumerate_objects(const Signature& sig,
                                      const std::vector<std::string>& params, int max_corollas);

// All arrows src -> tgt with at most `depth` generator occurrences,
// enumerated as rewrite paths (depth 0 yields the identity when src = tgt).
void enumerate_arrows(const ObjPtr& src, const ObjPtr& tgt, int depth, const Signature& sig,
                      const std::function<void(const ArrowPtr&)>& yield);
std::uint64_t count_arrows(const ObjPtr& src, const ObjPtr& tgt, int depth,
                           const Signature& sig);

// ---------------------------------------------------------------------------
// Sign coherence sweep.

struct SweepOptions {
  int corollas = 3;
  int depth = 5;
  SignTable table;
  bool parallel = false;  // OpenMP over source terms
};

struct SweepResult {
  std::uint64_t objects = 0;
  std::uint64_t pairs = 0;
  std::uint64_t violations = 0;
  std::string report;
};

// Checks, over every enumerated parallel pair, that all connecting arrows
// carry one sign, and that each one-step edge carries the sign demanded by
// the rooting potential (the kappa arrow's gamma parity).
SweepResult sweep_signs(const Signature& sig, const std::vector<std::string>& params,
                        const SweepOptions& opt);

std::uint64_t fnv1a(const std::string& s);
std::string hash_hex(const std::string& s);

// Gamma parity of the rooting arrow kappa at the least free variable;
// the potential of the sign check.
int kappa_parity(const ObjPtr& w, const Signature& sig);

}  // namespace cyco

#endif
