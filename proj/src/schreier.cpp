#include "schreier.hpp"

#include <algorithm>

#include "reps.hpp"

namespace mvtwin {

SchreierContext::SchreierContext(GroupCtx ctx, MapKind map, std::vector<Word> transversal)
    : ctx_(ctx), map_(map), transversal_(std::move(transversal)) {
  for (std::size_t idx = 0; idx < transversal_.size(); ++idx) {
    Permutation p = phi(transversal_[idx]);
    auto [it, inserted] = by_image_.emplace(p.images(), idx);
    if (!inserted) {
      throw Error(ErrorCode::Internal, "transversal keying is not bijective");
    }
  }
}

const Word& SchreierContext::representative(const Permutation& p) const {
  auto it = by_image_.find(p.images());
  if (it == by_image_.end()) {
    throw Error(ErrorCode::Internal, "no transversal entry for permutation " + p.cycles());
  }
  return transversal_[it->second];
}

SchreierContext build_transversal(int n, int k, MapKind map) {
  if (n < 2) throw Error(ErrorCode::Domain, "n must be >= 2");
  if (k < 1) throw Error(ErrorCode::Domain, "k must be >= 1");
  if (n > 6) throw Error(ErrorCode::Scale, "transversal enumeration is limited to n <= 6");
  GroupCtx ctx{n, k, Family::MVT};

  std::vector<Word> transversal;
  std::vector<int> choice(n + 1, 1);  // choice[m] = j_m, 1 <= j_m <= m
  while (true) {
    Word w(ctx);
    for (int m = 2; m <= n; ++m) {
      for (int t = m - 1; t >= choice[m]; --t) w.push(sym_rho(t, 0));
    }
    transversal.push_back(std::move(w));
    int m = n;
    while (m >= 2 && choice[m] == m) choice[m--] = 1;
    if (m < 2) break;
    ++choice[m];
  }
  if (transversal.size() != [n] {
        std::size_t f = 1;
        for (int x = 2; x <= n; ++x) f *= x;
        return f;
      }()) {
    throw Error(ErrorCode::Internal, "transversal size is not n!");
  }
  return SchreierContext(ctx, map, std::move(transversal));
}

Word coset_rep(const SchreierContext& sc, const Word& w) {
  return sc.representative(quotient_image(w, sc.map()));
}

std::optional<SchreierLabel> schreier_label(const SchreierContext& sc,
                                            const Word& transversal_word,
                                            const GenSym& a) {
  if (a.kind == SymKind::Rho && a.layer == 0) return std::nullopt;
  Permutation p = phi(transversal_word);
  const bool pure = sc.map() == MapKind::Phi;
  if (a.kind == SymKind::S) {
    if (pure) return SchreierLabel{sym_lambda(p.apply(a.i + 1), p.apply(a.i), 0), 1};
    return SchreierLabel{sym_kappa(p.apply(a.i), p.apply(a.i + 1), 0), 1};
  }
  if (a.kind != SymKind::Rho) {
    throw Error(ErrorCode::Alphabet, "Schreier labels are defined for ambient generators");
  }
  int lo = p.apply(a.i);
  int hi = p.apply(a.i + 1);
  int sign = -1;  // the Schreier word is the inverse of the conjugated generator
  if (lo > hi) {
    std::swap(lo, hi);
    sign = 1;
  }
  GenSym sym = pure ? sym_lambda(lo, hi, a.layer) : sym_kappa(lo, hi, a.layer);
  return SchreierLabel{sym, sign};
}

std::vector<SchreierGenerator> schreier_generators(const SchreierContext& sc) {
  const GroupCtx& ctx = sc.ctx();
  std::vector<GenSym> alphabet;
  for (int i = 1; i <= ctx.n - 1; ++i) alphabet.push_back(sym_s(i));
  for (int a = 0; a <= ctx.k - 1; ++a) {
    for (int i = 1; i <= ctx.n - 1; ++i) alphabet.push_back(sym_rho(i, a));
  }
  std::vector<SchreierGenerator> out;
  for (const Word& t : sc.transversal()) {
    for (const GenSym& a : alphabet) {
      Word ta(ctx);
      for (const Letter& l : t.letters()) ta.push(l.sym, l.exp);
      ta.push(a);
      Word s = free_reduce(concat(ta, invert(coset_rep(sc, ta))));
      if (s.empty()) continue;
      auto label = schreier_label(sc, t, a);
      if (!label.has_value()) {
        throw Error(ErrorCode::Internal, "nontrivial Schreier word with trivial label");
      }
      out.push_back(SchreierGenerator{*label, std::move(s)});
    }
  }
  return out;
}

Word expand_generator(const GenSym& sym, int n, int k) {
  GroupCtx ctx{n, k, Family::MVT};
  if (sym.kind != SymKind::LambdaP && sym.kind != SymKind::KappaS) {
    throw Error(ErrorCode::Alphabet, "expansion is defined for subgroup generators");
  }
  const bool reversed = sym.i > sym.j;
  if (reversed && sym.layer >= 1) {
    GenSym canon = sym;
    std::swap(canon.i, canon.j);
    return invert(expand_generator(canon, n, k));
  }
  const int lo = std::min(sym.i, sym.j);
  const int hi = std::max(sym.i, sym.j);
  if (lo < 1 || hi > n || lo == hi) {
    throw Error(ErrorCode::Index, "invalid generator " + render_sym(sym));
  }
  if (sym.layer < 0 || sym.layer > k - 1) {
    throw Error(ErrorCode::Index, "invalid layer in " + render_sym(sym));
  }

  Word base(ctx);
  if (sym.kind == SymKind::LambdaP) {
    if (sym.layer == 0 && !reversed) {
      base.push(sym_rho(lo, 0));
      base.push(sym_s(lo));
    } else if (sym.layer == 0) {
      base.push(sym_s(lo));
      base.push(sym_rho(lo, 0));
    } else {
      base.push(sym_rho(lo, 0));
      base.push(sym_rho(lo, sym.layer));
    }
  } else {
    if (sym.layer == 0 && !reversed) {
      base.push(sym_s(lo));
    } else if (sym.layer == 0) {
      base.push(sym_rho(lo, 0));
      base.push(sym_s(lo));
      base.push(sym_rho(lo, 0));
    } else {
      base.push(sym_rho(lo, 0));
      base.push(sym_rho(lo, sym.layer));
    }
  }

  Word w(ctx);
  for (int t = hi - 1; t >= lo + 1; --t) w.push(sym_rho(t, 0));
  w = concat(w, base);
  for (int t = lo + 1; t <= hi - 1; ++t) w.push(sym_rho(t, 0));

  MapKind map = sym.kind == SymKind::LambdaP ? MapKind::Phi : MapKind::Psi;
  if (!in_kernel(w, map)) {
    throw Error(ErrorCode::Internal, "expansion of " + render_sym(sym) + " is not in the kernel");
  }
  return w;
}

namespace {

// Cancellation for subgroup words: free inverses, the layer-0 lambda
// orientation identity lambda^0_{j,i} = (lambda^0_{i,j})^{-1}, and the
// involutivity of layer-0 kappa symbols.
bool letters_cancel(const Letter& a, const Letter& b) {
  if (a.sym == b.sym) {
    if (a.sym.kind == SymKind::KappaS && a.sym.layer == 0) return true;
    return a.exp == -b.exp;
  }
  if (a.sym.kind == SymKind::LambdaP && b.sym.kind == SymKind::LambdaP &&
      a.sym.layer == 0 && b.sym.layer == 0 && a.sym.i == b.sym.j &&
      a.sym.j == b.sym.i) {
    return a.exp == b.exp;
  }
  return false;
}

Word reduce_subgroup_word(const Word& w) {
  Word out(w.ctx());
  std::vector<Letter> stack;
  for (const Letter& l : w.letters()) {
    if (!stack.empty() && letters_cancel(stack.back(), l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  for (const Letter& l : stack) out.push(l.sym, l.exp);
  return out;
}

}  // namespace

Word rewrite_tau(const SchreierContext& sc, const Word& w) {
  if (w.ctx().family != Family::MVT || w.ctx().n != sc.ctx().n || w.ctx().k != sc.ctx().k) {
    throw Error(ErrorCode::Context, "word context does not match the Schreier context");
  }
  if (!in_kernel(w, sc.map())) {
    throw Error(ErrorCode::Kernel,
                "word is not in the kernel of " + map_name(sc.map()));
  }
  Word reduced = free_reduce(w);
  GroupCtx out_ctx{sc.ctx().n, sc.ctx().k, sc.subgroup_family()};
  Word out(out_ctx);
  Word prefix(sc.ctx());
  for (const Letter& l : reduced.letters()) {
    Word segment = prefix;  // segment preceding the letter
    if (l.exp == -1) {
      segment.push(l.sym, l.exp);
    }
    Word rep = coset_rep(sc, segment);
    auto label = schreier_label(sc, rep, l.sym);
    if (label.has_value()) {
      out.push(label->sym, label->sign * l.exp);
    }
    prefix.push(l.sym, l.exp);
  }
  return reduce_subgroup_word(out);
}

GenSym lemma31_action(const Word& a, const GenSym& sym) {
  if (sym.kind != SymKind::LambdaP) {
    throw Error(ErrorCode::Alphabet, "the action is defined on lambda generators");
  }
  int i = sym.i;
  int j = sym.j;
  for (const Letter& l : a.letters()) {
    if (l.sym.kind != SymKind::Rho || l.sym.layer != 0) {
      throw Error(ErrorCode::Alphabet, "conjugator must be a word in rho^0 letters");
    }
    auto swap_at = [&](int x) {
      if (x == l.sym.i) return l.sym.i + 1;
      if (x == l.sym.i + 1) return l.sym.i;
      return x;
    };
    i = swap_at(i);
    j = swap_at(j);
  }
  return sym_lambda(i, j, sym.layer);
}

SubgroupPresentationResult subgroup_presentation(const SchreierContext& sc) {
  const GroupCtx& ctx = sc.ctx();
  if (ctx.n > 5) {
    throw Error(ErrorCode::Scale, "subgroup presentations are limited to n <= 5");
  }
  SubgroupPresentationResult result;
  result.printed = relators_for(sc.subgroup_family(), ctx.n, ctx.k);

  // Deduplicate Schreier generators by label, keeping first occurrence.
  std::map<GenSym, Word> by_label;
  for (SchreierGenerator& g : schreier_generators(sc)) {
    by_label.emplace(g.label.sym, g.word);
  }
  for (const GenSym& g : result.printed.generators) {
    auto it = by_label.find(g);
    if (it == by_label.end()) {
      throw Error(ErrorCode::Internal,
                  "presentation generator " + render_sym(g) + " not reached by Schreier enumeration");
    }
    result.generators.push_back(
        SchreierGenerator{SchreierLabel{g, 1}, expand_generator(g, ctx.n, ctx.k)});
  }
  if (by_label.size() != result.printed.generators.size()) {
    throw Error(ErrorCode::Internal, "Schreier labels do not match the printed generator set");
  }

  // Rewrite every conjugated ambient relator and check it against the
  // battery: trivial quotient image and identity image under a panel of
  // representation instances.
  std::vector<RepInstance> panel;
  {
    RepParams p2;
    for (int a = 0; a < ctx.k; ++a) p2.y.push_back(Rational(a + 2));
    panel.push_back(build_rep(RepFamily::Z2, p2, ctx.n, ctx.k));
    RepParams p6 = p2;
    p6.z = Rational(5, 3);
    panel.push_back(build_rep(RepFamily::Z6, p6, ctx.n, ctx.k));
    RepParams p8;
    for (int a = 0; a < ctx.k; ++a) p8.y.push_back(Rational(2 * a + 3, 2));
    p8.a = Rational(7, 2);
    p8.b = Rational(4, 5);
    panel.push_back(build_rep(RepFamily::Z8, p8, ctx.n, ctx.k));
  }
  Presentation ambient = relators_mvt(ctx.n, ctx.k);
  for (const Word& t : sc.transversal()) {
    for (const Word& r : ambient.relators) {
      Word conj = concat(concat(t, r), invert(t));
      Word rewritten = rewrite_tau(sc, conj);
      Word back(ctx);
      for (const Letter& l : rewritten.letters()) {
        Word e = expand_generator(l.sym, ctx.n, ctx.k);
        back = concat(back, l.exp == 1 ? e : invert(e));
      }
      bool ok = in_kernel(back, sc.map());
      for (const RepInstance& rep : panel) {
        ok = ok && eval(rep, back).is_identity();
      }
      result.rewritten_checks.push_back(RewrittenRelatorCheck{
          render_word(t), render_word(r), render_word(rewritten), ok});
      result.pass = result.pass && ok;
    }
  }
  return result;
}

}  // namespace mvtwin
