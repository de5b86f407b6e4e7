#include "cyco/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "cyco/engine.hpp"
#include "cyco/parser.hpp"
#include "cyco/reduce1.hpp"
#include "cyco/units.hpp"

namespace cyco::cli {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void apply_mode(Signature& sig, RunConfig& cfg, const std::string& mode) {
  if (mode == "with-units")
    sig.units = true;
  else if (mode == "relaxed-eq")
    cfg.relaxed = true;
  else if (mode != "strict" && !mode.empty())
    throw ParseError("unknown mode " + mode);
}

// Stage outputs for an object payload.
std::string reduce_object(const ObjPtr& w, const Signature& sig, int stage,
                          const RunConfig& cfg) {
  if (stage == 0) {
    if (!sig.units) throw TypeError("stage 0 expects unit mode");
    return print_object(red0_object(w, sig));
  }
  ObjPtr w0 = sig.units ? red0_object(w, sig) : w;
  if (w0->kind == Obj::Kind::Unit) return print_object(w0);
  ObjPtr n = nf_object(w0, sig);
  if (stage == 1) return print_object(n);
  ObjPtr cn = alpha_canonical(n, sig);
  TreeTerm tt = delta_inv(cn, sig);
  VarName root = cfg.root.value_or(*tt.tree.fv().begin());
  RootedTerm rt{tt.tree, root, rootify_word(tt, root)};
  validate_rooted(rt, sig);
  if (stage == 2) return print_rooted(rt);
  Skeletalisation sk = cfg.skel ? *cfg.skel : lex_skeletalisation(tt.tree, root);
  return print_skobject(SkObject{rt, sk});
}

std::string reduce_arrow(const ArrowPtr& f, const Signature& sig, int stage,
                         const RunConfig& cfg) {
  if (stage == 0) {
    if (!sig.units) throw TypeError("stage 0 expects unit mode");
    return print_arrow(red0_arrow(f, sig));
  }
  PipelineResult p = pipeline(f, sig, cfg);
  if (p.unit_degenerate) return "1(" + print_object(p.unit_obj) + ")";
  if (stage == 1) return print_arrow(p.red1_out);
  if (stage == 2) return print_rarrow(p.red2_out);
  return print_skarrow(p.red3_out);
}

int cmd_typecheck(const std::string& file, const std::string& mode, RunResult& res) {
  std::string text = slurp(file);
  Input in = parse_input(text);
  RunConfig cfg;
  apply_mode(in.sig, cfg, mode);
  switch (in.kind) {
    case PayloadKind::Object:
      res.out = print_finset(typecheck_object(in.object, in.sig)) + "\n";
      break;
    case PayloadKind::Arrow: {
      ArrowType t = typecheck_arrow(in.arrow, in.sig);
      res.out = print_finset(typecheck_object(t.src, in.sig)) + "\n";
      break;
    }
    case PayloadKind::Tree: {
      validate_tree(in.tree, in.sig);
      res.out = print_finset(in.tree.fv()) + "\n";
      break;
    }
  }
  return 0;
}

int cmd_reduce(const std::string& file, int stage, const std::string& mode,
               const std::string& root, RunResult& res) {
  if (stage < 0 || stage > 3) throw ParseError("stage must be 0..3");
  std::string text = slurp(file);
  Input in = parse_input(text);
  RunConfig cfg;
  apply_mode(in.sig, cfg, mode);
  if (!root.empty()) cfg.root = root;
  if (in.kind == PayloadKind::Object)
    res.out = reduce_object(in.object, in.sig, stage, cfg) + "\n";
  else if (in.kind == PayloadKind::Arrow)
    res.out = reduce_arrow(in.arrow, in.sig, stage, cfg) + "\n";
  else
    throw ParseError("reduce expects an object or arrow term");
  return 0;
}

int cmd_decide(const std::string& file1, const std::string& file2, const std::string& mode,
               const std::string& root, bool trace, RunResult& res) {
  Input a = parse_input(slurp(file1));
  Input b = parse_input(slurp(file2));
  if (a.kind != PayloadKind::Arrow || b.kind != PayloadKind::Arrow)
    throw ParseError("decide expects two arrow terms");
  // Shared signature: merge declarations.
  Signature sig = a.sig;
  for (const auto& [name, p] : b.sig.params)
    if (!sig.declared(name))
      sig.declare(name, p.fv);
    else if (sig.lookup(name).fv != p.fv)
      throw TypeError("parameter " + name + " declared with different entries");
  sig.units = a.sig.units || b.sig.units;
  RunConfig cfg;
  apply_mode(sig, cfg, mode);
  if (!root.empty()) cfg.root = root;
  Verdict v = decide_equal(a.arrow, b.arrow, sig, cfg);
  res.out = v.equal ? "EQUAL\n" : "NOT-PARALLEL\n";
  res.out += "# " + v.detail + "\n";
  if (trace) {
    for (size_t i = 0; i < v.trace_lhs.size(); ++i) {
      res.out += "L " + v.trace_lhs[i].stage + ": " + v.trace_lhs[i].src + " -> " +
                 v.trace_lhs[i].tgt + "\n";
      res.out += "R " + v.trace_rhs[i].stage + ": " + v.trace_rhs[i].src + " -> " +
                 v.trace_rhs[i].tgt + "\n";
    }
  }
  return v.equal ? 0 : 1;
}

int cmd_sweep(int corollas, int depth, bool gamma_plus, bool par, RunResult& res) {
  if (corollas > 4 || depth > 8) {
    res.err = "resource bound exceeded (corollas <= 4, depth <= 8)\n";
    return 3;
  }
  Signature sig;
  std::vector<std::string> params;
  for (int i = 0; i < std::min(corollas, 3); ++i) {
    std::string name(1, static_cast<char>('a' + i));
    FinSet fv;
    for (int j = 1; j <= 3; ++j) fv.insert(name + std::to_string(j));
    sig.declare(name, fv);
    params.push_back(name);
  }
  if (corollas == 4) {
    sig.declare("d", FinSet{"d1", "d2"});
    params.push_back("d");
  }
  SweepOptions opt;
  opt.corollas = corollas;
  opt.depth = depth;
  opt.table.gamma = gamma_plus ? 1 : -1;
  opt.parallel = par;
  SweepResult r = sweep_signs(sig, params, opt);
  res.out = r.report;
  return r.violations == 0 ? 0 : 1;
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
  RunResult res;
  CLI::App app{"coherence engine for categorified cyclic operads"};
  app.require_subcommand(1);

  std::string file1, file2, mode, root;
  int stage = 1, corollas = 2, depth = 3;
  unsigned seed = 0;
  bool trace = false, gamma_plus = false, par = false;

  auto* tc = app.add_subcommand("typecheck", "typecheck a term or tree file");
  tc->add_option("file", file1)->required();
  tc->add_option("--mode", mode);

  auto* rd = app.add_subcommand("reduce", "run the reduction pipeline to a stage");
  rd->add_option("file", file1)->required();
  rd->add_option("--stage", stage)->required();
  rd->add_option("--mode", mode);
  rd->add_option("--root", root);
  rd->add_option("--seed", seed);

  auto* dc = app.add_subcommand("decide", "decide equality of two parallel arrow terms");
  dc->add_option("file1", file1)->required();
  dc->add_option("file2", file2)->required();
  dc->add_option("--mode", mode);
  dc->add_option("--root", root);
  dc->add_option("--seed", seed);
  dc->add_flag("--trace", trace);

  auto* sw = app.add_subcommand("sweep", "sign-coherence sweep over enumerated terms");
  sw->add_option("--corollas", corollas);
  sw->add_option("--depth", depth);
  sw->add_option("--seed", seed);
  sw->add_flag("--gamma-plus", gamma_plus, "negative control: assign +1 to the commutator");
  sw->add_flag("--par", par, "parallel sweep (OpenMP)");

  std::vector<std::string> argv = args;
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    res.err = std::string(e.what()) + "\n";
    res.code = 2;
    return res;
  }

  try {
    if (tc->parsed())
      res.code = cmd_typecheck(file1, mode, res);
    else if (rd->parsed())
      res.code = cmd_reduce(file1, stage, mode, root, res);
    else if (dc->parsed())
      res.code = cmd_decide(file1, file2, mode, root, trace, res);
    else if (sw->parsed())
      res.code = cmd_sweep(corollas, depth, gamma_plus, par, res);
  } catch (const ParseError& e) {
    res.err = std::string("parse error: ") + e.what() + "\n";
    res.code = 2;
  } catch (const TypeError& e) {
    res.err = std::string("type error: ") + e.what() + "\n";
    res.code = 2;
  }
  return res;
}

}  // namespace cyco::cli
