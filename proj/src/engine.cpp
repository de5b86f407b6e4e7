#include "cyco/engine.hpp"

#include <algorithm>
#include <sstream>

#include "cyco/alpha.hpp"
#include "cyco/reduce1.hpp"
#include "cyco/units.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cyco {

namespace {

int w_count_gammas(const WArrowPtr& f) {
  int n = f->kind == WK::Gamma ? 1 : 0;
  if (f->a) n += w_count_gammas(f->a);
  if (f->b) n += w_count_gammas(f->b);
  return n;
}

}  // namespace

int kappa_parity(const ObjPtr& w, const Signature& sig) {
  TreeTerm tt = delta_inv(w, sig);
  VarName root = *tt.tree.fv().begin();
  WArrowPtr k = kappa(tt, root);
  return w_count_gammas(k) % 2;
}

PipelineResult pipeline(const ArrowPtr& f, const Signature& sig, const RunConfig& cfg) {
  PipelineResult out;
  typecheck_arrow(f, sig);

  ArrowPtr g0 = sig.units ? red0_arrow(f, sig) : f;
  out.red0_out = g0;
  ArrowType t0 = typecheck_arrow(g0, sig);
  out.trace.push_back({"red0", print_object(t0.src), print_object(t0.tgt)});
  if (t0.src->kind == Obj::Kind::Unit) {
    out.unit_degenerate = true;
    out.unit_obj = t0.src;
    return out;
  }

  ArrowPtr loose = nf_arrow(g0, sig);
  ObjPtr u0 = alpha_canonical(nf_object(t0.src, sig), sig);
  out.red1_out = transfer(loose, u0, sig);
  ArrowType t1 = typecheck_arrow(out.red1_out, sig);
  out.trace.push_back({"red1", print_object(t1.src), print_object(t1.tgt)});

  TreeTerm tt = delta_inv(t1.src, sig);
  out.tree = tt.tree;
  out.warrow = delta_inv_arrow(out.red1_out, sig);
  auto [ws, wt] = typecheck_warrow(out.tree, out.warrow);
  out.trace.push_back({"delta", print_tree(out.tree) + " : " + print_pword(ws),
                       print_tree(out.tree) + " : " + print_pword(wt)});

  FinSet fv = out.tree.fv();
  out.root = cfg.root.value_or(*fv.begin());
  if (!fv.count(out.root))
    throw TypeError("root " + out.root + " is not free in " + print_finset(fv));
  out.red2_out = red2(out.tree, out.warrow, out.root);
  auto [rs, rt] = typecheck_rarrow(out.red2_out, sig);
  out.trace.push_back({"red2", print_rooted(rs), print_rooted(rt)});

  out.skel = cfg.skel ? *cfg.skel : lex_skeletalisation(out.tree, out.root);
  out.red3_out = red3(out.red2_out, out.skel, sig);
  auto [ss, st] = typecheck_skarrow(out.red3_out, sig);
  out.trace.push_back({"red3", print_skobject(ss), print_skobject(st)});

  if (cfg.relaxed) {
    ArrowPtr eps_v = nf_object_arrow(t0.tgt, sig);
    ObjPtr nf_v = typecheck_arrow(eps_v, sig).tgt;
    ArrowPtr epsw = alpha_witness(nf_v, t1.tgt, sig);
    out.witness = mk_vcomp(eps_v, epsw);
    typecheck_arrow(out.witness, sig);
    out.trace.push_back({"witness", print_object(t0.tgt), print_object(t1.tgt)});
  }
  return out;
}

Verdict decide_equal(const ArrowPtr& f, const ArrowPtr& g, const Signature& sig,
                     const RunConfig& cfg) {
  Verdict v;
  auto stage = [&](const std::string& name, const ArrowType& a, const ArrowType& b) {
    v.trace_lhs.push_back({name, print_object(a.src), print_object(a.tgt)});
    v.trace_rhs.push_back({name, print_object(b.src), print_object(b.tgt)});
  };

  ArrowType tf = typecheck_arrow(f, sig);
  ArrowType tg = typecheck_arrow(g, sig);
  if (typecheck_object(tf.src, sig) != typecheck_object(tg.src, sig) ||
      typecheck_object(tf.tgt, sig) != typecheck_object(tg.tgt, sig)) {
    v.detail = "entry sets differ";
    return v;
  }

  ArrowPtr f0 = sig.units ? red0_arrow(f, sig) : f;
  ArrowPtr g0 = sig.units ? red0_arrow(g, sig) : g;
  ArrowType tf0 = typecheck_arrow(f0, sig);
  ArrowType tg0 = typecheck_arrow(g0, sig);
  stage("red0", tf0, tg0);
  bool fu = tf0.src->kind == Obj::Kind::Unit;
  bool gu = tg0.src->kind == Obj::Kind::Unit;
  if (fu != gu) {
    v.detail = "red0: one side reduces to a unit";
    return v;
  }
  if (fu) {
    if (obj_equal(tf0.src, tg0.src) && obj_equal(tf0.tgt, tg0.tgt)) {
      v.equal = true;
      v.reason = Verdict::Reason::ParallelByCoherence;
      v.detail = "both sides reduce to the same unit";
    } else {
      v.detail = "red0: distinct units";
    }
    return v;
  }

  ArrowPtr loose_f = nf_arrow(f0, sig);
  ArrowPtr loose_g = nf_arrow(g0, sig);
  ObjPtr u0 = alpha_canonical(nf_object(tf0.src, sig), sig);
  ArrowPtr r1f = transfer(loose_f, u0, sig);
  ArrowPtr r1g;
  try {
    r1g = transfer(loose_g, u0, sig);
  } catch (const TypeError&) {
    v.detail = "red1: sources are not alpha-equivalent";
    return v;
  }
  ArrowType t1f = typecheck_arrow(r1f, sig);
  ArrowType t1g = typecheck_arrow(r1g, sig);
  stage("red1", t1f, t1g);
  if (!obj_equal(t1f.tgt, t1g.tgt)) {
    v.detail = "red1: targets differ";
    return v;
  }

  TreeTerm tt = delta_inv(t1f.src, sig);
  WArrowPtr wf = delta_inv_arrow(r1f, sig);
  WArrowPtr wg = delta_inv_arrow(r1g, sig);
  auto [wfs, wft] = typecheck_warrow(tt.tree, wf);
  auto [wgs, wgt] = typecheck_warrow(tt.tree, wg);
  v.trace_lhs.push_back({"delta", print_pword(wfs), print_pword(wft)});
  v.trace_rhs.push_back({"delta", print_pword(wgs), print_pword(wgt)});
  if (!pw_equal(wfs, wgs) || !pw_equal(wft, wgt)) {
    v.detail = "delta: word components differ";
    return v;
  }

  VarName root = cfg.root.value_or(*tt.tree.fv().begin());
  RArrowPtr r2f = red2(tt.tree, wf, root);
  RArrowPtr r2g = red2(tt.tree, wg, root);
  auto [r2fs, r2ft] = typecheck_rarrow(r2f, sig);
  auto [r2gs, r2gt] = typecheck_rarrow(r2g, sig);
  v.trace_lhs.push_back({"red2", print_rooted(r2fs), print_rooted(r2ft)});
  v.trace_rhs.push_back({"red2", print_rooted(r2gs), print_rooted(r2gt)});
  if (!rooted_equal(r2fs, r2gs) || !rooted_equal(r2ft, r2gt)) {
    v.detail = "red2: rooted endpoints differ";
    return v;
  }

  Skeletalisation sk = cfg.skel ? *cfg.skel : lex_skeletalisation(tt.tree, root);
  SkArrowPtr r3f = red3(r2f, sk, sig);
  SkArrowPtr r3g = red3(r2g, sk, sig);
  auto [r3fs, r3ft] = typecheck_skarrow(r3f, sig);
  auto [r3gs, r3gt] = typecheck_skarrow(r3g, sig);
  v.trace_lhs.push_back({"red3", print_skobject(r3fs), print_skobject(r3ft)});
  v.trace_rhs.push_back({"red3", print_skobject(r3gs), print_skobject(r3gt)});
  if (!dp_parallel(r3f, r3g, sig)) {
    v.detail = "red3: skeletal endpoints differ";
    return v;
  }

  v.equal = true;
  v.reason = Verdict::Reason::ParallelByCoherence;
  v.detail = "all stages parallel";
  return v;
}

// ---------------------------------------------------------------------------
// Enumeration.

namespace {

void collect_moves(const ObjPtr& w, const Signature& sig,
                   const std::function<ArrowPtr(ArrowPtr)>& wrap_arrow,
                   const std::function<ObjPtr(ObjPtr)>& wrap_obj, std::vector<Move>& out) {
  if (w->kind != Obj::Kind::Comp) return;

  // gamma at this node
  out.push_back({wrap_arrow(mk_gamma(w->left, w->right, w->x, w->y)),
                 wrap_obj(mk_comp(w->right, w->y, w->x, w->left))});
  // beta: ((A u<>v B) x<>y C) -> (A u<>v (B x<>y C)), needs x from B
  if (w->left->kind == Obj::Kind::Comp) {
    const ObjPtr& l = w->left;
    ArrowPtr b = mk_beta(l->left, l->right, w->right, l->x, l->y, w->x, w->y);
    try {
      typecheck_arrow(b, sig);
      out.push_back({wrap_arrow(b), wrap_obj(mk_comp(l->left, l->x, l->y,
                                                     mk_comp(l->right, w->x, w->y, w->right)))});
    } catch (const TypeError&) {
    }
  }
  // betainv: (A x<>y (B u<>v C)) -> ((A x<>y B) u<>v C), needs y from B
  if (w->right->kind == Obj::Kind::Comp) {
    const ObjPtr& r = w->right;
    ArrowPtr b = mk_beta(w->left, r->left, r->right, w->x, w->y, r->x, r->y, true);
    try {
      typecheck_arrow(b, sig);
      out.push_back({wrap_arrow(b), wrap_obj(mk_comp(mk_comp(w->left, w->x, w->y, r->left),
                                                     r->x, r->y, r->right))});
    } catch (const TypeError&) {
    }
  }

  ObjPtr left = w->left, right = w->right;
  VarName x = w->x, y = w->y;
  collect_moves(
      left, sig,
      [&, right, x, y](ArrowPtr a) { return wrap_arrow(mk_hcomp(a, x, y, mk_id(right))); },
      [&, right, x, y](ObjPtr o) { return wrap_obj(mk_comp(o, x, y, right)); }, out);
  collect_moves(
      right, sig,
      [&, left, x, y](ArrowPtr a) { return wrap_arrow(mk_hcomp(mk_id(left), x, y, a)); },
      [&, left, x, y](ObjPtr o) { return wrap_obj(mk_comp(left, x, y, o)); }, out);
}

}  // namespace

std::vector<Move> one_step_moves(const ObjPtr& w, const Signature& sig) {
  std::vector<Move> out;
  collect_moves(
      w, sig, [](ArrowPtr a) { return a; }, [](ObjPtr o) { return o; }, out);
  return out;
}

std::vector<ObjPtr> enumerate_objects(const Signature& sig,
                                      const std::vector<std::string>& params,
                                      int max_corollas) {
  int n = static_cast<int>(params.size());
  std::vector<std::vector<ObjPtr>> memo(1u << n);
  std::function<const std::vector<ObjPtr>&(unsigned)> terms =
      [&](unsigned mask) -> const std::vector<ObjPtr>& {
    auto& slot = memo[mask];
    if (!slot.empty() || mask == 0) return slot;
    int bits = __builtin_popcount(mask);
    if (bits == 1) {
      int i = __builtin_ctz(mask);
      slot.push_back(mk_param(params[i], sig.lookup(params[i]).fv));
      return slot;
    }
    // ordered proper splits
    for (unsigned m1 = (mask - 1) & mask; m1 != 0; m1 = (m1 - 1) & mask) {
      unsigned m2 = mask & ~m1;
      for (const auto& t1 : terms(m1)) {
        FinSet X = typecheck_object(t1, sig);
        for (const auto& t2 : terms(m2)) {
          FinSet Y = typecheck_object(t2, sig);
          for (const auto& x : X)
            for (const auto& y : Y) {
              ObjPtr c = mk_comp(t1, x, y, t2);
              try {
                typecheck_object(c, sig);
                slot.push_back(c);
              } catch (const TypeError&) {
              }
            }
        }
      }
    }
    return slot;
  };
  std::vector<ObjPtr> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) > max_corollas) continue;
    for (const auto& t : terms(mask)) out.push_back(t);
  }
  return out;
}

void enumerate_arrows(const ObjPtr& src, const ObjPtr& tgt, int depth, const Signature& sig,
                      const std::function<void(const ArrowPtr&)>& yield) {
  std::string goal = print_object(tgt);
  std::function<void(const ObjPtr&, int, std::vector<ArrowPtr>&)> dfs =
      [&](const ObjPtr& cur, int left, std::vector<ArrowPtr>& path) {
        if (print_object(cur) == goal) {
          if (path.empty())
            yield(mk_id(src));
          else
            yield(mk_seq(path));
        }
        if (left == 0) return;
        for (const auto& m : one_step_moves(cur, sig)) {
          path.push_back(m.step);
          dfs(m.result, left - 1, path);
          path.pop_back();
        }
      };
  std::vector<ArrowPtr> path;
  dfs(src, depth, path);
}

std::uint64_t count_arrows(const ObjPtr& src, const ObjPtr& tgt, int depth,
                           const Signature& sig) {
  std::uint64_t n = 0;
  enumerate_arrows(src, tgt, depth, sig, [&](const ArrowPtr&) { ++n; });
  return n;
}

// ---------------------------------------------------------------------------
// Sweep.

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hash_hex(const std::string& s) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = fnv1a(s);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

namespace {

struct SourceSweep {
  const Signature& sig;
  const SweepOptions& opt;
  std::map<std::string, int>& chi;  // kappa parity cache (per thread)

  int chi_of(const ObjPtr& w) {
    std::string k = print_object(w);
    auto it = chi.find(k);
    if (it != chi.end()) return it->second;
    int p = kappa_parity(w, sig);
    chi.emplace(k, p);
    return p;
  }

  // Runs the checks from one source; appends lines, returns (pairs, violations).
  std::pair<std::uint64_t, std::uint64_t> run(const ObjPtr& src, std::string& out) {
    struct State {
      ObjPtr term;
      std::set<int> parities;
      std::uint64_t count = 0;  // paths of length <= depth (saturating)
    };
    std::map<std::string, State> states;
    std::map<std::string, std::vector<Move>> edges;
    std::uint64_t violations = 0;

    auto key = [](const ObjPtr& w) { return print_object(w); };
    std::string src_key = key(src);
    states[src_key].term = src;
    states[src_key].parities.insert(0);
    states[src_key].count = 1;

    // Layered path DP: cnt[k] = number of paths of length k ending per state.
    std::map<std::string, std::uint64_t> layer;
    std::map<std::string, int> layer_par;  // parity of some path in this layer
    layer[src_key] = 1;
    std::map<std::string, std::set<int>> reached_par;
    reached_par[src_key].insert(0);

    // Parity BFS over (state, parity) pairs.
    std::vector<std::pair<std::string, int>> frontier = {{src_key, 0}};
    std::set<std::pair<std::string, int>> seen(frontier.begin(), frontier.end());
    int steps = 0;
    auto moves_of = [&](const std::string& k, const ObjPtr& t) -> const std::vector<Move>& {
      auto it = edges.find(k);
      if (it == edges.end()) it = edges.emplace(k, one_step_moves(t, sig)).first;
      return it->second;
    };
    while (steps < opt.depth && !frontier.empty()) {
      ++steps;
      std::vector<std::pair<std::string, int>> next;
      for (const auto& [k, par] : frontier) {
        const ObjPtr& term = states[k].term;
        for (const auto& m : moves_of(k, term)) {
          int gsign = count_gammas(m.step) % 2 ? opt.table.gamma : 1;
          int npar = (gsign == -1) ? 1 - par : par;
          std::string nk = key(m.result);
          auto& st = states[nk];
          if (!st.term) st.term = m.result;
          st.parities.insert(npar);
          if (seen.insert({nk, npar}).second) next.push_back({nk, npar});
        }
      }
      frontier = std::move(next);
    }
    // Path counts.
    for (int k = 0; k < opt.depth; ++k) {
      std::map<std::string, std::uint64_t> nl;
      for (const auto& [sk, cnt] : layer) {
        for (const auto& m : moves_of(sk, states[sk].term)) {
          std::string nk = print_object(m.result);
          std::uint64_t& c = nl[nk];
          c = (c + cnt < c) ? ~0ull : c + cnt;
        }
      }
      for (const auto& [sk, cnt] : nl) {
        std::uint64_t& c = states[sk].count;
        c = (c + cnt < c) ? ~0ull : c + cnt;
      }
      layer = std::move(nl);
      if (layer.empty()) break;
    }

    // Potential check on every traversed edge.
    int chi_src_cache = -1;
    for (const auto& [k, st] : states) {
      for (const auto& m : moves_of(k, st.term)) {
        std::string nk = key(m.result);
        if (!states.count(nk)) continue;  // beyond the horizon; skip
        int cs = chi_of(st.term);
        int ct = chi_of(m.result);
        int required = (cs == ct) ? 1 : -1;
        int got = count_gammas(m.step) % 2 ? opt.table.gamma : 1;
        if (got != required) {
          ++violations;
          out += "VIOLATION POTENTIAL " + hash_hex(k) + " " + hash_hex(nk) + " GEN " +
                 (count_gammas(m.step) % 2 ? "gamma" : "beta") + " SIGN " +
                 (got == 1 ? "+" : "-") + " REQUIRED " + (required == 1 ? "+" : "-") + "\n";
        }
      }
    }
    (void)chi_src_cache;

    std::uint64_t pairs = 0;
    std::string sh = hash_hex(src_key);
    for (const auto& [k, st] : states) {
      ++pairs;
      if (st.parities.size() > 1) {
        ++violations;
        out += "VIOLATION PARITY " + sh + " " + hash_hex(k) + "\n";
      } else {
        int p = *st.parities.begin();
        out += "PAIR " + sh + " " + hash_hex(k) + " SIGN " + (p == 0 ? "+" : "-") + " COUNT " +
               std::to_string(st.count) + "\n";
      }
    }
    return {pairs, violations};
  }
};

}  // namespace

SweepResult sweep_signs(const Signature& sig, const std::vector<std::string>& params,
                        const SweepOptions& opt) {
  std::vector<ObjPtr> sources = enumerate_objects(sig, params, opt.corollas);
  SweepResult res;
  res.objects = sources.size();
  std::vector<std::string> bufs(sources.size());
  std::vector<std::uint64_t> pair_counts(sources.size(), 0), viol_counts(sources.size(), 0);

  if (opt.parallel) {
#pragma omp parallel
    {
      std::map<std::string, int> chi;
#pragma omp for schedule(dynamic)
      for (long i = 0; i < static_cast<long>(sources.size()); ++i) {
        SourceSweep sw{sig, opt, chi};
        auto [p, v] = sw.run(sources[i], bufs[i]);
        pair_counts[i] = p;
        viol_counts[i] = v;
      }
    }
  } else {
    std::map<std::string, int> chi;
    for (size_t i = 0; i < sources.size(); ++i) {
      SourceSweep sw{sig, opt, chi};
      auto [p, v] = sw.run(sources[i], bufs[i]);
      pair_counts[i] = p;
      viol_counts[i] = v;
    }
  }

  std::string report;
  for (size_t i = 0; i < sources.size(); ++i) {
    report += bufs[i];
    res.pairs += pair_counts[i];
    res.violations += viol_counts[i];
  }
  report += "SWEEP objects=" + std::to_string(res.objects) +
            " pairs=" + std::to_string(res.pairs) +
            " violations=" + std::to_string(res.violations) + "\n";
  res.report = std::move(report);
  return res;
}

}  // namespace cyco
