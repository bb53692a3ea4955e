#include "reps.hpp"

#include <algorithm>
#include <deque>

#include "schreier.hpp"

namespace mvtwin {

std::string rep_family_name(RepFamily f) {
  return "z" + std::to_string(static_cast<int>(f) + 1);
}

RepFamily rep_family_from_name(const std::string& name) {
  for (int i = 0; i < 8; ++i) {
    if (name == "z" + std::to_string(i + 1)) return static_cast<RepFamily>(i);
  }
  throw Error(ErrorCode::Domain, "unknown representation family '" + name + "'");
}

namespace {

Matrix block2(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  Matrix m(2, 2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

void require_nonzero(const std::optional<Rational>& v, const char* name) {
  if (!v.has_value()) throw Error(ErrorCode::Param, std::string("missing parameter ") + name);
  if (v->is_zero()) throw Error(ErrorCode::Param, std::string("parameter ") + name + " must be nonzero");
}

void require_y(const RepParams& params, int k) {
  if (static_cast<int>(params.y.size()) != k) {
    throw Error(ErrorCode::Param, "expected " + std::to_string(k) + " y values, got " +
                                      std::to_string(params.y.size()));
  }
  for (const Rational& y : params.y) {
    if (y.is_zero()) throw Error(ErrorCode::Param, "parameter y must be nonzero");
  }
}

}  // namespace

Matrix rep_s_block(RepFamily family, const RepParams& params) {
  switch (family) {
    case RepFamily::Z1:
    case RepFamily::Z2:
      return Matrix::identity(2);
    case RepFamily::Z3:
      return block2(1, 0, 0, -1);
    case RepFamily::Z4:
      return block2(-1, 0, 0, 1);
    case RepFamily::Z5:
      return block2(-1, 0, 0, -1);
    case RepFamily::Z6:
      require_nonzero(params.z, "z");
      return block2(1, *params.z, 0, -1);
    case RepFamily::Z7:
      require_nonzero(params.z, "z");
      return block2(-1, *params.z, 0, 1);
    case RepFamily::Z8: {
      if (!params.a.has_value()) throw Error(ErrorCode::Param, "missing parameter a");
      require_nonzero(params.b, "b");
      const Rational& a = *params.a;
      const Rational& b = *params.b;
      return block2(-a, -(a * a - Rational(1)) / b, b, a);
    }
  }
  throw Error(ErrorCode::Internal, "unknown family");
}

Matrix rep_rho_block(RepFamily family, const RepParams& params, int layer) {
  if (family == RepFamily::Z1) return Matrix::identity(2);
  if (layer < 0 || layer >= static_cast<int>(params.y.size())) {
    throw Error(ErrorCode::Param, "no y value for layer " + std::to_string(layer));
  }
  const Rational& y = params.y[layer];
  if (y.is_zero()) throw Error(ErrorCode::Param, "parameter y must be nonzero");
  return block2(0, y.inv(), y, 0);
}

namespace {

Matrix embed_block(const Matrix& block, int n, int i) {
  Matrix m = Matrix::identity(n);
  m.at(i - 1, i - 1) = block.at(0, 0);
  m.at(i - 1, i) = block.at(0, 1);
  m.at(i, i - 1) = block.at(1, 0);
  m.at(i, i) = block.at(1, 1);
  return m;
}

}  // namespace

RepInstance build_rep(RepFamily family, const RepParams& params, int n, int k) {
  if (n < 3) throw Error(ErrorCode::Domain, "representations are defined for n >= 3");
  if (k < 1) throw Error(ErrorCode::Domain, "k must be >= 1");
  if (family != RepFamily::Z1) require_y(params, k);

  RepInstance rep;
  rep.family = family;
  rep.ctx = GroupCtx{n, k, Family::MVT};
  rep.params = params;

  Matrix s_block = rep_s_block(family, params);
  for (int i = 1; i <= n - 1; ++i) {
    rep.table.emplace(sym_s(i), embed_block(s_block, n, i));
  }
  for (int a = 0; a <= k - 1; ++a) {
    Matrix r_block = rep_rho_block(family, params, a);
    for (int i = 1; i <= n - 1; ++i) {
      rep.table.emplace(sym_rho(i, a), embed_block(r_block, n, i));
    }
  }
  return rep;
}

Matrix eval(const RepInstance& rep, const Word& w) {
  if (w.ctx().family != Family::MVT || w.ctx().n != rep.ctx.n || w.ctx().k != rep.ctx.k) {
    throw Error(ErrorCode::Context, "word context does not match the representation");
  }
  Matrix acc = Matrix::identity(rep.ctx.n);
  std::map<GenSym, Matrix> inverses;
  for (const Letter& l : w.letters()) {
    auto it = rep.table.find(l.sym);
    if (it == rep.table.end()) {
      throw Error(ErrorCode::Alphabet, "no image for letter " + render_sym(l.sym));
    }
    if (l.exp == 1) {
      acc = mat_mul(acc, it->second);
    } else {
      auto inv = inverses.find(l.sym);
      if (inv == inverses.end()) {
        inv = inverses.emplace(l.sym, inverse(it->second)).first;
      }
      acc = mat_mul(acc, inv->second);
    }
  }
  return acc;
}

Matrix eval_table(const std::map<GenSym, Matrix>& table, int n, const Word& w) {
  Matrix acc = Matrix::identity(n);
  for (const Letter& l : w.letters()) {
    auto it = table.find(l.sym);
    if (it == table.end()) {
      throw Error(ErrorCode::Alphabet, "no image for letter " + render_sym(l.sym));
    }
    acc = mat_mul(acc, l.exp == 1 ? it->second : inverse(it->second));
  }
  return acc;
}

RelationReport verify_relations(const RepInstance& rep) {
  RelationReport report;
  Presentation pres = relators_mvt(rep.ctx.n, rep.ctx.k);
  for (const Word& r : pres.relators) {
    bool ok = eval(rep, r).is_identity();
    report.checks.push_back(RelationCheck{render_word(r), ok});
    report.pass = report.pass && ok;
  }
  return report;
}

namespace {

struct Block {
  Rational w, x, y, z;
};

Block block_of(const Matrix& m) {
  return Block{m.at(0, 0), m.at(0, 1), m.at(1, 0), m.at(1, 1)};
}

}  // namespace

SystemReport verify_system_report(const Matrix& s_block, const std::vector<Matrix>& rho_blocks) {
  SystemReport report;
  auto add = [&](const std::string& id, const Rational& lhs, const Rational& rhs) {
    bool ok = lhs == rhs;
    report.checks.push_back(SystemCheck{id, ok});
    report.pass = report.pass && ok;
  };
  const Rational one(1), zero(0);
  Block s = block_of(s_block);
  const Rational &t = s.w, &u = s.x, &v = s.y, &w = s.z;

  add("A1", t * t + u * v, one);
  add("A2", t * u + u * w, zero);
  add("A3", t * v + v * w, zero);
  add("A4", w * w + u * v, one);

  const int k = static_cast<int>(rho_blocks.size());
  for (int bi = 0; bi < k; ++bi) {
    Block B = block_of(rho_blocks[bi]);
    std::string tag = "[b=" + std::to_string(bi) + "]";
    add("B1" + tag, B.w * B.w + B.x * B.y, one);
    add("B2" + tag, B.w * B.x + B.x * B.z, zero);
    add("B3" + tag, B.w * B.y + B.y * B.z, zero);
    add("B4" + tag, B.z * B.z + B.x * B.y, one);

    add("C1" + tag, B.w * B.w + B.x * B.y * B.w, B.w);
    add("C2" + tag, B.w * B.x + B.w * B.x * B.z, B.w * B.x);
    add("C3" + tag, B.w * B.y + B.w * B.y * B.z, B.w * B.y);
    add("C4" + tag, B.w * B.z * B.z + B.x * B.y, B.z * B.w * B.w + B.x * B.y);
    add("C5" + tag, B.x * B.z + B.w * B.x * B.z, B.x * B.z);
    add("C6" + tag, B.y * B.z + B.w * B.y * B.z, B.y * B.z);
    add("C7" + tag, B.z * B.z + B.x * B.y * B.z, B.z);

    add("F1" + tag, t * B.w + v * B.w * B.x, B.w);
    add("F2" + tag, u * B.w + w * B.w * B.x, B.w * B.x);
    add("F3" + tag, t * B.y + v * B.w * B.z, t * B.y);
    add("F4" + tag, u * B.y + w * B.w * B.z, u * B.y + t * B.w * B.z);
    add("F5" + tag, u * B.z + t * B.x * B.z, B.x * B.z);
    add("F6" + tag, w * B.y + v * B.w * B.z, w * B.y);
    add("F7" + tag, w * B.z + v * B.x * B.z, B.z);
  }

  for (int ai = 0; ai < k; ++ai) {
    for (int bi = ai + 1; bi < k; ++bi) {
      Block A = block_of(rho_blocks[ai]);
      Block B = block_of(rho_blocks[bi]);
      std::string tag = "[a=" + std::to_string(ai) + ",b=" + std::to_string(bi) + "]";

      add("D1" + tag, B.w * A.w + B.w * B.y * A.x, B.w);
      add("D2" + tag, B.x * A.w + B.w * B.y * A.x, B.x * A.w);
      add("D3" + tag, B.w * A.y + B.w * B.y * A.z, B.w * A.y);
      add("D4" + tag, B.x * A.y + B.w * B.z * A.z, B.x * A.y + B.w * B.z * A.w);
      add("D5" + tag, B.x * A.z + B.w * B.z * A.x, B.x * A.z);
      add("D6" + tag, B.z * A.y + B.y * B.z * A.x, B.y * B.z);
      add("D7" + tag, B.z * A.z + B.y * B.z * A.x, B.z);

      add("E1" + tag, B.w * A.w + B.y * A.w * A.x, A.w);
      add("E2" + tag, B.x * A.w + B.z * A.w * A.x, A.w * A.x);
      add("E3" + tag, B.w * A.y + B.y * A.w * A.z, B.w * A.y);
      add("E4" + tag, B.x * A.y + B.z * A.w * A.z, B.x * A.y + B.w * A.w * A.z);
      add("E5" + tag, B.x * A.z + B.w * A.x * A.z, B.z * A.y);
      add("E6" + tag, B.z * A.z + B.y * A.x * A.z, A.z);
    }
  }
  return report;
}

bool verify_system(RepFamily family, const RepParams& params, int k) {
  Matrix s = rep_s_block(family, params);
  std::vector<Matrix> rho;
  for (int a = 0; a < k; ++a) rho.push_back(rep_rho_block(family, params, a));
  return verify_system_report(s, rho).pass;
}

namespace {

Word power_word(const GroupCtx& ctx, const std::vector<GenSym>& base, int times) {
  Word w(ctx);
  for (int t = 0; t < times; ++t) {
    for (const GenSym& s : base) w.push(s);
  }
  return w;
}

Witness make_witness(const RepInstance& rep, Word word) {
  Witness wit{std::move(word), false, MapKind::Phi, Permutation(rep.ctx.n)};
  wit.eval_identity = eval(rep, wit.word).is_identity();
  Permutation p = phi(wit.word);
  if (!p.is_identity()) {
    wit.cert_map = MapKind::Phi;
    wit.cert_image = p;
  } else {
    wit.cert_map = MapKind::Psi;
    wit.cert_image = psi(wit.word);
  }
  return wit;
}

}  // namespace

std::vector<Witness> faithfulness_witnesses(RepFamily family, const RepParams& params,
                                            int n, int k) {
  RepInstance rep = build_rep(family, params, n, k);
  const GroupCtx& ctx = rep.ctx;
  std::vector<Witness> out;

  auto all_i = [&](auto&& make) {
    for (int i = 1; i <= n - 2; ++i) {
      for (int a = 0; a <= k - 1; ++a) out.push_back(make_witness(rep, make(i, a)));
    }
  };

  switch (family) {
    case RepFamily::Z1:
    case RepFamily::Z2:
      for (int i = 1; i <= n - 1; ++i) {
        out.push_back(make_witness(rep, power_word(ctx, {sym_s(i)}, 1)));
      }
      break;
    case RepFamily::Z3:
    case RepFamily::Z4:
    case RepFamily::Z5:
      for (int i = 1; i <= n - 2; ++i) {
        out.push_back(make_witness(rep, power_word(ctx, {sym_s(i), sym_s(i + 1)}, 2)));
      }
      break;
    case RepFamily::Z6:
      all_i([&](int i, int a) { return power_word(ctx, {sym_s(i), sym_rho(i + 1, a)}, 4); });
      break;
    case RepFamily::Z7:
      all_i([&](int i, int a) { return power_word(ctx, {sym_s(i + 1), sym_rho(i, a)}, 4); });
      break;
    case RepFamily::Z8: {
      if (!params.a.has_value()) throw Error(ErrorCode::Param, "missing parameter a");
      const Rational& a = *params.a;
      if (a == Rational(-1)) {
        all_i([&](int i, int la) { return power_word(ctx, {sym_s(i), sym_rho(i + 1, la)}, 4); });
      } else if (a == Rational(0)) {
        all_i([&](int i, int la) { return power_word(ctx, {sym_s(i), sym_rho(i + 1, la)}, 3); });
      } else if (a == Rational(1)) {
        all_i([&](int i, int la) { return power_word(ctx, {sym_s(i + 1), sym_rho(i, la)}, 4); });
      } else {
        throw Error(ErrorCode::NotApplicable,
                    "no witness family for z8 with a outside {-1, 0, 1}");
      }
      break;
    }
  }
  return out;
}

bool thm_reducible(RepFamily family, const RepParams& params) {
  auto all_y_equal = [&]() {
    for (std::size_t i = 1; i < params.y.size(); ++i) {
      if (params.y[i] != params.y[0]) return false;
    }
    return true;
  };
  switch (family) {
    case RepFamily::Z1:
      return true;
    case RepFamily::Z2:
    case RepFamily::Z3:
    case RepFamily::Z4:
    case RepFamily::Z5:
      return all_y_equal();
    case RepFamily::Z6:
    case RepFamily::Z7:
      return false;
    case RepFamily::Z8: {
      if (!params.a.has_value() || !params.b.has_value() || params.y.empty()) {
        throw Error(ErrorCode::Param, "z8 verdict needs a, b and y");
      }
      if (!all_y_equal()) return false;
      Rational ratio = *params.b / params.y[0];
      return ratio == Rational(1) + *params.a || ratio == Rational(1) - *params.a;
    }
  }
  throw Error(ErrorCode::Internal, "unknown family");
}

bool is_2local(const std::map<GenSym, Matrix>& table, int n, int k) {
  std::optional<Matrix> s_block;
  std::vector<std::optional<Matrix>> rho_blocks(k);
  for (const auto& [sym, m] : table) {
    if (m.rows() != n || m.cols() != n) return false;
    int i = sym.i;
    if (sym.kind != SymKind::S && sym.kind != SymKind::Rho) return false;
    if (i < 1 || i > n - 1) return false;
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        bool in_block = (r == i - 1 || r == i) && (c == i - 1 || c == i);
        if (!in_block && m.at(r, c) != Rational(r == c ? 1 : 0)) return false;
      }
    }
    Matrix block = block2(m.at(i - 1, i - 1), m.at(i - 1, i), m.at(i, i - 1), m.at(i, i));
    std::optional<Matrix>& slot =
        sym.kind == SymKind::S ? s_block : rho_blocks[sym.layer];
    if (slot.has_value() && *slot != block) return false;
    if (!slot.has_value()) slot = block;
  }
  return true;
}

bool is_2local(const RepInstance& rep) {
  return is_2local(rep.table, rep.ctx.n, rep.ctx.k);
}

namespace {

Matrix mat3(std::initializer_list<Rational> entries) {
  Matrix m(3, 3);
  int idx = 0;
  for (const Rational& e : entries) {
    m.at(idx / 3, idx % 3) = e;
    ++idx;
  }
  return m;
}

}  // namespace

RepInstance mvpt3_source_rep(int case_id, const Mvpt3Params& p) {
  RepParams params;
  params.y = {p.y0, p.y1};
  switch (case_id) {
    case 1: {
      if ((p.eps != 1 && p.eps != -1) || (p.delta != 1 && p.delta != -1)) {
        throw Error(ErrorCode::Param, "case 1 signs must be +1 or -1");
      }
      RepFamily fam = p.delta == 1
                          ? (p.eps == 1 ? RepFamily::Z2 : RepFamily::Z3)
                          : (p.eps == 1 ? RepFamily::Z4 : RepFamily::Z5);
      return build_rep(fam, params, 3, 2);
    }
    case 2: {
      if (p.sign != 1 && p.sign != -1) throw Error(ErrorCode::Param, "case 2 sign must be +1 or -1");
      params.z = p.z;
      return build_rep(p.sign == 1 ? RepFamily::Z6 : RepFamily::Z7, params, 3, 2);
    }
    case 3: {
      params.a = p.a;
      params.b = p.b;
      return build_rep(RepFamily::Z8, params, 3, 2);
    }
    default:
      throw Error(ErrorCode::Domain, "case must be 1, 2 or 3");
  }
}

std::map<GenSym, Matrix> mvpt3_rep(int case_id, const Mvpt3Params& p) {
  if (p.y0.is_zero() || p.y1.is_zero()) {
    throw Error(ErrorCode::Param, "y0 and y1 must be nonzero");
  }
  const Rational one(1), zero(0);
  const Rational y0 = p.y0, y1 = p.y1;
  std::map<GenSym, Matrix> out;
  out.emplace(sym_lambda(1, 2, 1), Matrix::diagonal({y1 / y0, y0 / y1, one}));
  out.emplace(sym_lambda(2, 3, 1), Matrix::diagonal({one, y1 / y0, y0 / y1}));
  out.emplace(sym_lambda(1, 3, 1), Matrix::diagonal({y1 / y0, one, y0 / y1}));

  switch (case_id) {
    case 1: {
      if ((p.eps != 1 && p.eps != -1) || (p.delta != 1 && p.delta != -1)) {
        throw Error(ErrorCode::Param, "case 1 signs must be +1 or -1");
      }
      Rational e(p.eps), d(p.delta);
      out.emplace(sym_lambda(1, 2, 0),
                  mat3({zero, e / y0, zero, d * y0, zero, zero, zero, zero, one}));
      out.emplace(sym_lambda(2, 3, 0),
                  mat3({one, zero, zero, zero, zero, e / y0, zero, d * y0, zero}));
      out.emplace(sym_lambda(1, 3, 0),
                  mat3({zero, zero, e / (y0 * y0), zero, one, zero, d * y0 * y0, zero, zero}));
      break;
    }
    case 2: {
      if (p.sign != 1 && p.sign != -1) throw Error(ErrorCode::Param, "case 2 sign must be +1 or -1");
      if (p.z.is_zero()) throw Error(ErrorCode::Param, "z must be nonzero");
      Rational sg(p.sign);
      Rational yz = y0 * p.z;
      out.emplace(sym_lambda(1, 2, 0),
                  mat3({zero, -sg / y0, zero, sg * y0, yz, zero, zero, zero, one}));
      out.emplace(sym_lambda(2, 3, 0),
                  mat3({one, zero, zero, zero, zero, -sg / y0, zero, sg * y0, yz}));
      out.emplace(sym_lambda(1, 3, 0),
                  mat3({zero, zero, -sg / (y0 * y0), zero, one, zero, sg * y0 * y0, zero, yz}));
      break;
    }
    case 3: {
      if (p.b.is_zero()) throw Error(ErrorCode::Param, "b must be nonzero");
      const Rational& a = p.a;
      const Rational& b = p.b;
      Rational corner = (one - a * a) * y0 / b;
      out.emplace(sym_lambda(1, 2, 0),
                  mat3({b / y0, a / y0, zero, -a * y0, corner, zero, zero, zero, one}));
      out.emplace(sym_lambda(2, 3, 0),
                  mat3({one, zero, zero, zero, b / y0, a / y0, zero, -a * y0, corner}));
      out.emplace(sym_lambda(1, 3, 0),
                  mat3({b / y0, zero, a / (y0 * y0), zero, one, zero, -a * y0 * y0, zero, corner}));
      break;
    }
    default:
      throw Error(ErrorCode::Domain, "case must be 1, 2 or 3");
  }
  return out;
}

std::map<GenSym, Matrix> restrict_rep(const RepInstance& rep, Family subgroup) {
  if (subgroup == Family::MVT) {
    throw Error(ErrorCode::Domain, "restriction target must be mvpt or mvht");
  }
  Presentation pres = relators_for(subgroup, rep.ctx.n, rep.ctx.k);
  std::map<GenSym, Matrix> out;
  for (const GenSym& g : pres.generators) {
    out.emplace(g, eval(rep, expand_generator(g, rep.ctx.n, rep.ctx.k)));
  }
  return out;
}

KernelSearchResult kernel_search(const RepInstance& rep, int max_len, long beam) {
  if (max_len < 0 || max_len > 16) {
    throw Error(ErrorCode::Scale, "kernel search length must be between 0 and 16");
  }
  if (beam < 1) throw Error(ErrorCode::Domain, "beam must be positive");
  const int n = rep.ctx.n;
  const int k = rep.ctx.k;
  std::vector<GenSym> alphabet;
  for (int i = 1; i <= n - 1; ++i) alphabet.push_back(sym_s(i));
  for (int a = 0; a <= k - 1; ++a) {
    for (int i = 1; i <= n - 1; ++i) alphabet.push_back(sym_rho(i, a));
  }

  struct Node {
    std::vector<GenSym> word;
    Matrix m;
    Permutation phi_img;
    Permutation psi_img;
  };

  KernelSearchResult result;
  std::vector<Node> frontier;
  frontier.push_back(Node{{}, Matrix::identity(n), Permutation(n), Permutation(n)});

  for (int len = 1; len <= max_len; ++len) {
    std::vector<Node> next;
    for (const Node& node : frontier) {
      for (const GenSym& x : alphabet) {
        // Adjacent equal involutive letters would cancel; skip non-reduced words.
        if (!node.word.empty() && node.word.back() == x) continue;
        std::vector<GenSym> word = node.word;
        word.push_back(x);
        Permutation t = Permutation::transposition(n, x.i);
        Node child{std::move(word), mat_mul(node.m, rep.table.at(x)),
                   compose(node.phi_img, t),
                   x.kind == SymKind::S ? node.psi_img : compose(node.psi_img, t)};
        ++result.words_examined;
        if (child.m.is_identity()) {
          Word w(rep.ctx);
          for (const GenSym& s : child.word) w.push(s);
          if (!child.phi_img.is_identity()) {
            result.certified.push_back(KernelHit{w, true, MapKind::Phi, child.phi_img});
          } else if (!child.psi_img.is_identity()) {
            result.certified.push_back(KernelHit{w, true, MapKind::Psi, child.psi_img});
          } else {
            result.unresolved.push_back(w);
          }
        }
        if (static_cast<long>(next.size()) < beam) next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return result;
}

}  // namespace mvtwin
