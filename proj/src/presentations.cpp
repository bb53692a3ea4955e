#include "presentations.hpp"

#include <cstdlib>
#include <utility>

namespace mvtwin {

namespace {

Word make_relator(const GroupCtx& ctx, const std::vector<GenSym>& left,
                  const std::vector<GenSym>& right) {
  Word l(ctx);
  for (const GenSym& s : left) l.push(s);
  Word r(ctx);
  for (const GenSym& s : right) r.push(s);
  return concat(l, invert(r));
}

}  // namespace

Presentation relators_mvt(int n, int k) {
  GroupCtx ctx{n, k, Family::MVT};
  validate_ctx(ctx);
  Presentation pres;
  pres.ctx = ctx;
  for (int i = 1; i <= n - 1; ++i) pres.generators.push_back(sym_s(i));
  for (int a = 0; a <= k - 1; ++a) {
    for (int i = 1; i <= n - 1; ++i) pres.generators.push_back(sym_rho(i, a));
  }

  auto& rel = pres.relators;
  // (R1) s_i^2
  for (int i = 1; i <= n - 1; ++i) {
    rel.push_back(make_relator(ctx, {sym_s(i), sym_s(i)}, {}));
  }
  // (R2) far commutation of twin generators
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i + 2; j <= n - 1; ++j) {
      rel.push_back(make_relator(ctx, {sym_s(i), sym_s(j)}, {sym_s(j), sym_s(i)}));
    }
  }
  // (R3) (rho_i^a)^2
  for (int i = 1; i <= n - 1; ++i) {
    for (int a = 0; a <= k - 1; ++a) {
      rel.push_back(make_relator(ctx, {sym_rho(i, a), sym_rho(i, a)}, {}));
    }
  }
  // (R4) far commutation of virtual generators, all layer pairs
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i + 2; j <= n - 1; ++j) {
      for (int a = 0; a <= k - 1; ++a) {
        for (int b = 0; b <= k - 1; ++b) {
          rel.push_back(make_relator(ctx, {sym_rho(i, a), sym_rho(j, b)},
                                     {sym_rho(j, b), sym_rho(i, a)}));
        }
      }
    }
  }
  // (R5) far commutation of virtual with twin generators, both orders of (i, j)
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = 1; j <= n - 1; ++j) {
      if (std::abs(i - j) < 2) continue;
      for (int a = 0; a <= k - 1; ++a) {
        rel.push_back(make_relator(ctx, {sym_rho(i, a), sym_s(j)},
                                   {sym_s(j), sym_rho(i, a)}));
      }
    }
  }
  // (R6) single-layer braid relation
  for (int i = 1; i <= n - 2; ++i) {
    for (int a = 0; a <= k - 1; ++a) {
      rel.push_back(make_relator(
          ctx, {sym_rho(i, a), sym_rho(i + 1, a), sym_rho(i, a)},
          {sym_rho(i + 1, a), sym_rho(i, a), sym_rho(i + 1, a)}));
    }
  }
  // (R7) mixed braid relation, layers a < b
  for (int i = 1; i <= n - 2; ++i) {
    for (int a = 0; a <= k - 1; ++a) {
      for (int b = a + 1; b <= k - 1; ++b) {
        rel.push_back(make_relator(
            ctx, {sym_rho(i, a), sym_rho(i + 1, b), sym_rho(i, b)},
            {sym_rho(i + 1, b), sym_rho(i, b), sym_rho(i + 1, a)}));
      }
    }
  }
  // (R8) mixed braid relation, layers a < b
  for (int i = 1; i <= n - 2; ++i) {
    for (int a = 0; a <= k - 1; ++a) {
      for (int b = a + 1; b <= k - 1; ++b) {
        rel.push_back(make_relator(
            ctx, {sym_rho(i, a), sym_rho(i + 1, a), sym_rho(i, b)},
            {sym_rho(i + 1, b), sym_rho(i, a), sym_rho(i + 1, a)}));
      }
    }
  }
  // (R9) mixed braid relation with a twin generator
  for (int i = 1; i <= n - 2; ++i) {
    for (int a = 0; a <= k - 1; ++a) {
      rel.push_back(make_relator(
          ctx, {sym_rho(i, a), sym_rho(i + 1, a), sym_s(i)},
          {sym_s(i + 1), sym_rho(i, a), sym_rho(i + 1, a)}));
    }
  }
  return pres;
}

namespace {

using SymMaker = GenSym (*)(int, int, int);

// The lambda and kappa presentations share index patterns; only the symbol
// constructor and the two relation families peculiar to each differ.
Presentation subgroup_presentation_skeleton(int n, int k, Family family) {
  GroupCtx ctx{n, k, family};
  validate_ctx(ctx);
  SymMaker sym = family == Family::MVPT
                     ? static_cast<SymMaker>(&sym_lambda)
                     : static_cast<SymMaker>(&sym_kappa);
  Presentation pres;
  pres.ctx = ctx;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i != j) pres.generators.push_back(sym(i, j, 0));
    }
  }
  for (int b = 1; b <= k - 1; ++b) {
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) pres.generators.push_back(sym(i, j, b));
    }
  }
  auto& rel = pres.relators;

  // Commutators of layer >= 1 symbols on four distinct strands, a <= g; for
  // a == g each unordered factor pair appears once.
  for (int p1 = 1; p1 <= n; ++p1) {
    for (int q1 = p1 + 1; q1 <= n; ++q1) {
      for (int p2 = 1; p2 <= n; ++p2) {
        for (int q2 = p2 + 1; q2 <= n; ++q2) {
          if (p2 == p1 || p2 == q1 || q2 == p1 || q2 == q1) continue;
          for (int a = 1; a <= k - 1; ++a) {
            for (int g = a; g <= k - 1; ++g) {
              if (a == g && std::make_pair(p1, q1) >= std::make_pair(p2, q2)) continue;
              rel.push_back(make_relator(ctx, {sym(p1, q1, a), sym(p2, q2, g)},
                                         {sym(p2, q2, g), sym(p1, q1, a)}));
            }
          }
        }
      }
    }
  }
  // Triple relation within one layer, sorted triples p < q < r.
  for (int p = 1; p <= n; ++p) {
    for (int q = p + 1; q <= n; ++q) {
      for (int r = q + 1; r <= n; ++r) {
        for (int a = 1; a <= k - 1; ++a) {
          rel.push_back(make_relator(
              ctx, {sym(p, q, a), sym(p, r, a), sym(q, r, a)},
              {sym(q, r, a), sym(p, r, a), sym(p, q, a)}));
        }
      }
    }
  }
  // Mixed-layer triple relations, a < b, over all ordered pairs (p, q).
  for (int p = 1; p <= n; ++p) {
    for (int q = 1; q <= n; ++q) {
      if (q == p) continue;
      for (int r = 1; r <= n; ++r) {
        if (r == p || r == q) continue;
        for (int a = 1; a <= k - 1; ++a) {
          for (int b = a + 1; b <= k - 1; ++b) {
            rel.push_back(make_relator(
                ctx, {sym(p, q, a), sym(p, r, b), sym(q, r, b)},
                {sym(q, r, b), sym(p, r, b), sym(p, q, a)}));
          }
        }
      }
    }
  }
  for (int p = 1; p <= n; ++p) {
    for (int q = 1; q <= n; ++q) {
      if (q == p) continue;
      for (int r = 1; r <= n; ++r) {
        if (r == p || r == q) continue;
        for (int a = 1; a <= k - 1; ++a) {
          for (int b = a + 1; b <= k - 1; ++b) {
            rel.push_back(make_relator(
                ctx, {sym(p, q, a), sym(p, r, a), sym(q, r, b)},
                {sym(q, r, b), sym(p, r, a), sym(p, q, a)}));
          }
        }
      }
    }
  }
  // Triple relation against a layer-0 symbol, over all ordered pairs (p, q).
  // The lambda and kappa lists print different index patterns here.
  for (int p = 1; p <= n; ++p) {
    for (int q = 1; q <= n; ++q) {
      if (q == p) continue;
      for (int r = 1; r <= n; ++r) {
        if (r == p || r == q) continue;
        for (int a = 1; a <= k - 1; ++a) {
          if (family == Family::MVPT) {
            rel.push_back(make_relator(
                ctx, {sym(p, q, a), sym(p, r, a), sym(q, r, 0)},
                {sym(q, r, 0), sym(p, r, a), sym(p, q, a)}));
          } else {
            rel.push_back(make_relator(
                ctx, {sym(p, r, a), sym(p, q, a), sym(q, r, 0)},
                {sym(q, r, 0), sym(p, r, a), sym(p, q, a)}));
          }
        }
      }
    }
  }
  // Shared-strand commutators within one layer, p < q.
  for (int p = 1; p <= n; ++p) {
    for (int q = p + 1; q <= n; ++q) {
      for (int r = 1; r <= n; ++r) {
        if (r == p || r == q) continue;
        for (int b = 1; b <= k - 1; ++b) {
          rel.push_back(make_relator(ctx, {sym(p, r, b), sym(q, r, b)},
                                     {sym(q, r, b), sym(p, r, b)}));
        }
      }
    }
  }
  return pres;
}

}  // namespace

Presentation relators_mvpt(int n, int k) {
  Presentation pres = subgroup_presentation_skeleton(n, k, Family::MVPT);
  // Layer-0 commutators on four distinct strands, each factor pair once.
  GroupCtx ctx = pres.ctx;
  std::vector<Word> head;
  for (int p1 = 1; p1 <= n; ++p1) {
    for (int q1 = 1; q1 <= n; ++q1) {
      if (q1 == p1) continue;
      for (int p2 = 1; p2 <= n; ++p2) {
        for (int q2 = 1; q2 <= n; ++q2) {
          if (q2 == p2 || p2 == p1 || p2 == q1 || q2 == p1 || q2 == q1) continue;
          if (std::make_pair(p1, q1) >= std::make_pair(p2, q2)) continue;
          head.push_back(make_relator(ctx,
                                      {sym_lambda(p1, q1, 0), sym_lambda(p2, q2, 0)},
                                      {sym_lambda(p2, q2, 0), sym_lambda(p1, q1, 0)}));
        }
      }
    }
  }
  pres.relators.insert(pres.relators.begin(), head.begin(), head.end());
  return pres;
}

Presentation relators_mvht(int n, int k) {
  return subgroup_presentation_skeleton(n, k, Family::MVHT);
}

Presentation relators_for(Family family, int n, int k) {
  switch (family) {
    case Family::MVT: return relators_mvt(n, k);
    case Family::MVPT: return relators_mvpt(n, k);
    case Family::MVHT: return relators_mvht(n, k);
  }
  throw Error(ErrorCode::Internal, "unknown family");
}

}  // namespace mvtwin
