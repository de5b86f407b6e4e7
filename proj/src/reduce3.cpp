#include "cyco/reduce3.hpp"

#include <algorithm>
#include <functional>

namespace cyco {

Skeletalisation lex_skeletalisation(const UnrootedTree& t, const VarName& root) {
  Skeletalisation sk;
  for (const auto& c : t.cors) {
    auto [ins, out] = in_out(t, root, {c.param});
    (void)out;
    sk[c.param] = std::vector<VarName>(ins.begin(), ins.end());
  }
  return sk;
}

void validate_skeletalisation(const UnrootedTree& t, const VarName& root,
                              const Skeletalisation& sk) {
  if (sk.size() != t.cors.size()) throw TypeError("skeletalisation: one entry per corolla");
  for (const auto& c : t.cors) {
    auto it = sk.find(c.param);
    if (it == sk.end()) throw TypeError("skeletalisation missing corolla " + c.param);
    auto [ins, out] = in_out(t, root, {c.param});
    (void)out;
    FinSet got(it->second.begin(), it->second.end());
    if (got != ins || it->second.size() != ins.size())
      throw TypeError("skeletalisation of " + c.param + " is not an order on its inputs");
  }
}

std::string print_skeletalisation(const Skeletalisation& sk) {
  std::string out = "ord{";
  bool first = true;
  for (const auto& [c, v] : sk) {
    if (!first) out += "; ";
    first = false;
    out += c + ":(";
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) out += ",";
      out += v[i];
    }
    out += ")";
  }
  out += "}";
  return out;
}

std::vector<VarName> splice(const std::vector<VarName>& s1, int i,
                            const std::vector<VarName>& s2) {
  int n = static_cast<int>(s1.size());
  if (i < 1 || i > n) throw TypeError("splice index out of range");
  std::vector<VarName> out;
  for (int j = 0; j < i - 1; ++j) out.push_back(s1[j]);
  for (const auto& v : s2) out.push_back(v);
  for (int j = i; j < n; ++j) out.push_back(s1[j]);
  return out;
}

std::vector<VarName> induced_order(const UnrootedTree& t, const VarName& root,
                                   const Skeletalisation& sk) {
  validate_skeletalisation(t, root, sk);
  std::vector<VarName> out;
  std::function<void(int)> walk = [&](int cor) {
    const auto& order = sk.at(t.cors[cor].param);
    for (const auto& h : order) {
      VarName m = t.mate(h);
      if (m == h)
        out.push_back(h);
      else
        walk(t.corolla_index_of(m));
    }
  };
  walk(t.corolla_index_of(root));
  return out;
}

bool sk_equal(const SkObject& a, const SkObject& b) {
  return rooted_equal(a.rt, b.rt) && a.skel == b.skel;
}

std::string print_skobject(const SkObject& o) {
  return print_rooted(o.rt) + " | " + print_skeletalisation(o.skel);
}

std::string print_skarrow(const SkArrowPtr& f) {
  switch (f->kind) {
    case RK::Id:
      return "1(" + print_skobject(f->terms[0]) + ")";
    case RK::Beta:
    case RK::BetaInv:
    case RK::Theta: {
      std::string head =
          f->kind == RK::Beta ? "beta" : (f->kind == RK::BetaInv ? "betainv" : "theta");
      return head + "(" + std::to_string(f->idx[0]) + ";" + std::to_string(f->idx[1]) + " | " +
             print_skobject(f->terms[0]) + ", " + print_skobject(f->terms[1]) + ", " +
             print_skobject(f->terms[2]) + ")";
    }
    case RK::VComp:
      return print_skarrow(f->a) + " ; " + print_skarrow(f->b);
    case RK::HComp:
      return "(" + print_skarrow(f->a) + " " + std::to_string(f->idx[0]) + "<> " +
             print_skarrow(f->b) + ")";
  }
  return "?";
}

namespace {

Skeletalisation skel_restrict(const Skeletalisation& sk, const UnrootedTree& t) {
  Skeletalisation out;
  for (const auto& c : t.cors) {
    auto it = sk.find(c.param);
    if (it == sk.end()) throw TypeError("skeletalisation missing corolla " + c.param);
    out[c.param] = it->second;
  }
  return out;
}

Skeletalisation skel_union(const Skeletalisation& a, const Skeletalisation& b) {
  Skeletalisation out = a;
  for (const auto& [k, v] : b) out[k] = v;
  return out;
}

int position_of(const std::vector<VarName>& order, const VarName& v) {
  for (size_t i = 0; i < order.size(); ++i)
    if (order[i] == v) return static_cast<int>(i) + 1;
  throw TypeError("entry " + v + " not in the induced order");
}

std::shared_ptr<SkArrow> mk_sk(RK k) {
  auto f = std::make_shared<SkArrow>();
  f->kind = k;
  return f;
}

struct RArrowView {
  // Underlying rooted arrow endpoints, for validation.
  RootedTerm src, tgt;
};

}  // namespace

std::pair<SkObject, SkObject> typecheck_skarrow(const SkArrowPtr& f, const Signature& sig) {
  switch (f->kind) {
    case RK::Id: {
      validate_rooted(f->terms[0].rt, sig);
      validate_skeletalisation(f->terms[0].rt.tree, f->terms[0].rt.root, f->terms[0].skel);
      return {f->terms[0], f->terms[0]};
    }
    case RK::Beta:
    case RK::BetaInv:
    case RK::Theta: {
      // Rebuild the underlying rooted arrow to reuse its typing.
      RArrowPtr r;
      if (f->kind == RK::Theta)
        r = r_theta(f->terms[0].rt, f->terms[1].rt, f->terms[2].rt, f->vars[0], f->vars[1]);
      else
        r = r_beta(f->terms[0].rt, f->terms[1].rt, f->terms[2].rt, f->vars[0], f->vars[1],
                   f->kind == RK::BetaInv);
      auto [rs, rt] = typecheck_rarrow(r, sig);
      for (int k = 0; k < 3; ++k)
        validate_skeletalisation(f->terms[k].rt.tree, f->terms[k].rt.root, f->terms[k].skel);
      // Index consistency.
      auto ord1 = induced_order(f->terms[0].rt.tree, f->terms[0].rt.root, f->terms[0].skel);
      int i = position_of(ord1, f->vars[0]);
      int j;
      if (f->kind == RK::Theta) {
        j = position_of(ord1, f->vars[1]);
      } else {
        auto ord2 = induced_order(f->terms[1].rt.tree, f->terms[1].rt.root, f->terms[1].skel);
        j = position_of(ord2, f->vars[1]);
      }
      if (f->idx.size() != 2 || f->idx[0] != i || f->idx[1] != j)
        throw TypeError("skeletal indices do not match the induced orders");
      Skeletalisation sk =
          skel_union(skel_union(f->terms[0].skel, f->terms[1].skel), f->terms[2].skel);
      return {SkObject{rs, sk}, SkObject{rt, sk}};
    }
    case RK::VComp: {
      auto [s1, t1] = typecheck_skarrow(f->a, sig);
      auto [s2, t2] = typecheck_skarrow(f->b, sig);
      if (!sk_equal(t1, s2)) throw TypeError("skeletal vertical composition mismatch");
      return {s1, t2};
    }
    case RK::HComp: {
      auto [s1, t1] = typecheck_skarrow(f->a, sig);
      auto [s2, t2] = typecheck_skarrow(f->b, sig);
      RArrowPtr l = r_id(s1.rt), rr = r_id(s2.rt);
      auto [rs, rt] = typecheck_rarrow(r_hcomp(l, f->vars[0], f->vars[1], rr), sig);
      auto ord1 = induced_order(s1.rt.tree, s1.rt.root, s1.skel);
      int i = position_of(ord1, f->vars[0]);
      if (f->idx.size() != 1 || f->idx[0] != i)
        throw TypeError("skeletal composition index mismatch");
      Skeletalisation sk = skel_union(s1.skel, s2.skel);
      RootedTerm src{rs.tree, rs.root, pw_pair(s1.rt.word, s2.rt.word)};
      RootedTerm tgt{rs.tree, rs.root, pw_pair(t1.rt.word, t2.rt.word)};
      return {SkObject{src, sk}, SkObject{tgt, sk}};
    }
  }
  throw TypeError("bad skeletal arrow");
}

SkArrowPtr red3(const RArrowPtr& f, const Skeletalisation& sk, const Signature& sig) {
  switch (f->kind) {
    case RK::Id: {
      auto g = mk_sk(RK::Id);
      g->terms = {SkObject{f->terms[0], skel_restrict(sk, f->terms[0].tree)}};
      return g;
    }
    case RK::Beta:
    case RK::BetaInv:
    case RK::Theta: {
      auto g = mk_sk(f->kind);
      for (const auto& t : f->terms) g->terms.push_back(SkObject{t, skel_restrict(sk, t.tree)});
      auto ord1 = induced_order(f->terms[0].tree, f->terms[0].root, g->terms[0].skel);
      int i = position_of(ord1, f->vars[0]);
      int j;
      if (f->kind == RK::Theta) {
        j = position_of(ord1, f->vars[1]);
      } else {
        auto ord2 = induced_order(f->terms[1].tree, f->terms[1].root, g->terms[1].skel);
        j = position_of(ord2, f->vars[1]);
      }
      g->idx = {i, j};
      g->vars = f->vars;
      return g;
    }
    case RK::VComp: {
      auto g = mk_sk(RK::VComp);
      g->a = red3(f->a, sk, sig);
      g->b = red3(f->b, sk, sig);
      return g;
    }
    case RK::HComp: {
      auto [s1, t1] = typecheck_rarrow(f->a, sig);
      auto [s2, t2] = typecheck_rarrow(f->b, sig);
      (void)t1;
      (void)t2;
      auto g = mk_sk(RK::HComp);
      Skeletalisation sk1 = skel_restrict(sk, s1.tree);
      Skeletalisation sk2 = skel_restrict(sk, s2.tree);
      g->a = red3(f->a, sk1, sig);
      g->b = red3(f->b, sk2, sig);
      auto ord1 = induced_order(s1.tree, s1.root, sk1);
      g->idx = {position_of(ord1, f->vars[0])};
      g->vars = f->vars;
      return g;
    }
  }
  throw TypeError("bad rooted arrow");
}

bool dp_parallel(const SkArrowPtr& f, const SkArrowPtr& g, const Signature& sig) {
  auto [fs, ft] = typecheck_skarrow(f, sig);
  auto [gs, gt] = typecheck_skarrow(g, sig);
  return sk_equal(fs, gs) && sk_equal(ft, gt);
}

}  // namespace cyco
