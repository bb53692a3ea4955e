#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mvtwin {

enum class ErrorCode {
  Parse,
  Index,
  Context,
  Alphabet,
  Domain,
  Scale,
  Singular,
  Kernel,
  Param,
  NotApplicable,
  Internal,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

// Which group a word lives in.  MVT is the ambient group on the s/rho
// alphabet; MVPT and MVHT are the pure and semi-pure subgroups on the
// lambda and kappa alphabets.
enum class Family { MVT, MVPT, MVHT };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

struct GroupCtx {
  int n = 2;
  int k = 1;
  Family family = Family::MVT;

  bool operator==(const GroupCtx& o) const {
    return n == o.n && k == o.k && family == o.family;
  }
  bool operator!=(const GroupCtx& o) const { return !(*this == o); }
};

// Requires n >= 2 and k >= 1.
void validate_ctx(const GroupCtx& ctx);

enum class SymKind : std::uint8_t { S, Rho, LambdaP, KappaS };

// A generator symbol.  Strand indices are 1-based, layers 0-based.
//   S(i)            : twin generator s_i,        1 <= i <= n-1
//   Rho(i, layer)   : virtual generator rho_i^a, 1 <= i <= n-1, 0 <= a <= k-1
//   LambdaP(i,j,b)  : pure generator lambda_{i,j}^b,  1 <= i != j <= n
//   KappaS(i,j,b)   : semi-pure generator kappa_{i,j}^b
// For layer >= 1 the canonical lambda/kappa form has i < j; the reversed
// symbol denotes the inverse of the canonical one and is rewritten to it
// wherever letters are built.
struct GenSym {
  SymKind kind = SymKind::S;
  int i = 1;
  int j = 0;
  int layer = 0;

  bool operator==(const GenSym& o) const {
    return kind == o.kind && i == o.i && j == o.j && layer == o.layer;
  }
  bool operator!=(const GenSym& o) const { return !(*this == o); }
  bool operator<(const GenSym& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (layer != o.layer) return layer < o.layer;
    if (i != o.i) return i < o.i;
    return j < o.j;
  }
};

GenSym sym_s(int i);
GenSym sym_rho(int i, int layer);
GenSym sym_lambda(int i, int j, int layer);
GenSym sym_kappa(int i, int j, int layer);

// s_i and rho_i^a are involutions; lambda/kappa letters are not.
bool is_involutive(const GenSym& sym);

std::string render_sym(const GenSym& sym);

struct Letter {
  GenSym sym;
  int exp = 1;  // +1 or -1

  bool operator==(const Letter& o) const { return sym == o.sym && exp == o.exp; }
  bool operator!=(const Letter& o) const { return !(*this == o); }
};

class Word {
public:
  explicit Word(GroupCtx ctx) : ctx_(ctx) { validate_ctx(ctx); }
  Word(GroupCtx ctx, std::vector<Letter> letters);

  const GroupCtx& ctx() const { return ctx_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  // Appends one letter, canonicalizing reversed lambda/kappa symbols with
  // layer >= 1 and checking index ranges and the alphabet for ctx.
  void push(GenSym sym, int exp = 1);

  bool operator==(const Word& o) const {
    return ctx_ == o.ctx_ && letters_ == o.letters_;
  }
  bool operator!=(const Word& o) const { return !(*this == o); }

private:
  GroupCtx ctx_;
  std::vector<Letter> letters_;
};

// Validates an index-correct symbol against (n, k) and returns the canonical
// (symbol, exponent-multiplier) pair; the multiplier is -1 exactly when a
// reversed layer >= 1 lambda/kappa symbol was rewritten to its i < j form.
std::pair<GenSym, int> canonicalize_sym(const GenSym& sym, const GroupCtx& ctx);

// Cancels adjacent inverse pairs and normalizes exponents on involutive
// letters to +1, repeating to a fixed point.  Only involutivity of s/rho and
// free cancellation are used; no braid or commutation relations.
Word free_reduce(const Word& w);

Word concat(const Word& u, const Word& v);
Word invert(const Word& w);

// Word grammar, whitespace-separated tokens:
//   s<i>         twin generator
//   p<i>.<a>     virtual generator, layer a
//   L<i>.<j>.<b> pure generator
//   K<i>.<j>.<b> semi-pure generator
// with an optional trailing '!' for exponent -1.  Strand indices are
// 1-based, layers 0-based.
Word parse_word(const std::string& text, const GroupCtx& ctx);
std::string render_word(const Word& w);

}  // namespace mvtwin
