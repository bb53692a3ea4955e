#include "words.hpp"

#include <cctype>
#include <sstream>

namespace mvtwin {

std::string family_name(Family f) {
  switch (f) {
    case Family::MVT: return "mvt";
    case Family::MVPT: return "mvpt";
    case Family::MVHT: return "mvht";
  }
  throw Error(ErrorCode::Internal, "unknown family");
}

Family family_from_name(const std::string& name) {
  if (name == "mvt") return Family::MVT;
  if (name == "mvpt") return Family::MVPT;
  if (name == "mvht") return Family::MVHT;
  throw Error(ErrorCode::Domain, "unknown group family '" + name + "'");
}

void validate_ctx(const GroupCtx& ctx) {
  if (ctx.n < 2) throw Error(ErrorCode::Domain, "n must be >= 2");
  if (ctx.k < 1) throw Error(ErrorCode::Domain, "k must be >= 1");
}

GenSym sym_s(int i) { return GenSym{SymKind::S, i, 0, 0}; }
GenSym sym_rho(int i, int layer) { return GenSym{SymKind::Rho, i, 0, layer}; }
GenSym sym_lambda(int i, int j, int layer) {
  return GenSym{SymKind::LambdaP, i, j, layer};
}
GenSym sym_kappa(int i, int j, int layer) {
  return GenSym{SymKind::KappaS, i, j, layer};
}

bool is_involutive(const GenSym& sym) {
  return sym.kind == SymKind::S || sym.kind == SymKind::Rho;
}

std::string render_sym(const GenSym& sym) {
  std::ostringstream os;
  switch (sym.kind) {
    case SymKind::S:
      os << 's' << sym.i;
      break;
    case SymKind::Rho:
      os << 'p' << sym.i << '.' << sym.layer;
      break;
    case SymKind::LambdaP:
      os << 'L' << sym.i << '.' << sym.j << '.' << sym.layer;
      break;
    case SymKind::KappaS:
      os << 'K' << sym.i << '.' << sym.j << '.' << sym.layer;
      break;
  }
  return os.str();
}

namespace {

void check_strand(int i, int n, const GenSym& sym) {
  if (i < 1 || i > n - 1) {
    throw Error(ErrorCode::Index, "strand index out of range in " +
                                      render_sym(sym) + " (need 1 <= i <= " +
                                      std::to_string(n - 1) + ")");
  }
}

void check_layer(int layer, int k, const GenSym& sym) {
  if (layer < 0 || layer > k - 1) {
    throw Error(ErrorCode::Index, "layer out of range in " + render_sym(sym) +
                                      " (need 0 <= layer <= " +
                                      std::to_string(k - 1) + ")");
  }
}

void check_pair(int i, int j, int n, const GenSym& sym) {
  if (i < 1 || i > n || j < 1 || j > n || i == j) {
    throw Error(ErrorCode::Index, "invalid index pair in " + render_sym(sym) +
                                      " (need 1 <= i != j <= " +
                                      std::to_string(n) + ")");
  }
}

}  // namespace

std::pair<GenSym, int> canonicalize_sym(const GenSym& sym, const GroupCtx& ctx) {
  switch (sym.kind) {
    case SymKind::S:
      check_strand(sym.i, ctx.n, sym);
      return {sym, 1};
    case SymKind::Rho:
      check_strand(sym.i, ctx.n, sym);
      check_layer(sym.layer, ctx.k, sym);
      return {sym, 1};
    case SymKind::LambdaP:
    case SymKind::KappaS: {
      check_pair(sym.i, sym.j, ctx.n, sym);
      check_layer(sym.layer, ctx.k, sym);
      if (sym.layer >= 1 && sym.i > sym.j) {
        GenSym c = sym;
        std::swap(c.i, c.j);
        return {c, -1};
      }
      return {sym, 1};
    }
  }
  throw Error(ErrorCode::Internal, "unknown symbol kind");
}

namespace {

void check_alphabet(const GenSym& sym, const GroupCtx& ctx) {
  bool ok = false;
  switch (ctx.family) {
    case Family::MVT:
      ok = sym.kind == SymKind::S || sym.kind == SymKind::Rho;
      break;
    case Family::MVPT:
      ok = sym.kind == SymKind::LambdaP;
      break;
    case Family::MVHT:
      ok = sym.kind == SymKind::KappaS;
      break;
  }
  if (!ok) {
    throw Error(ErrorCode::Alphabet, "letter " + render_sym(sym) +
                                         " not in the " +
                                         family_name(ctx.family) + " alphabet");
  }
}

}  // namespace

Word::Word(GroupCtx ctx, std::vector<Letter> letters) : ctx_(ctx) {
  validate_ctx(ctx);
  letters_.reserve(letters.size());
  for (const Letter& l : letters) push(l.sym, l.exp);
}

void Word::push(GenSym sym, int exp) {
  if (exp != 1 && exp != -1) {
    throw Error(ErrorCode::Domain, "letter exponent must be +1 or -1");
  }
  check_alphabet(sym, ctx_);
  auto [canon, mult] = canonicalize_sym(sym, ctx_);
  letters_.push_back(Letter{canon, exp * mult});
}

Word free_reduce(const Word& w) {
  Word out(w.ctx());
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (Letter l : w.letters()) {
    if (is_involutive(l.sym)) l.exp = 1;
    if (!stack.empty() && stack.back().sym == l.sym &&
        (is_involutive(l.sym) || stack.back().exp == -l.exp)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  for (const Letter& l : stack) out.push(l.sym, l.exp);
  return out;
}

Word concat(const Word& u, const Word& v) {
  if (u.ctx() != v.ctx()) {
    throw Error(ErrorCode::Context, "cannot concatenate words from different contexts");
  }
  Word out(u.ctx());
  for (const Letter& l : u.letters()) out.push(l.sym, l.exp);
  for (const Letter& l : v.letters()) out.push(l.sym, l.exp);
  return out;
}

Word invert(const Word& w) {
  Word out(w.ctx());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push(it->sym, -it->exp);
  }
  return out;
}

namespace {

struct TokenParser {
  const std::string& tok;
  std::size_t pos = 0;
  std::size_t token_index;

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::Parse, "token " + std::to_string(token_index + 1) +
                                      " ('" + tok + "'): " + why);
  }

  bool done() const { return pos >= tok.size(); }

  int read_int() {
    if (done() || !std::isdigit(static_cast<unsigned char>(tok[pos]))) {
      fail("expected a decimal index at offset " + std::to_string(pos));
    }
    long v = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(tok[pos]))) {
      v = v * 10 + (tok[pos] - '0');
      if (v > 1000000) fail("index too large");
      ++pos;
    }
    return static_cast<int>(v);
  }

  void expect(char c) {
    if (done() || tok[pos] != c) {
      fail(std::string("expected '") + c + "' at offset " + std::to_string(pos));
    }
    ++pos;
  }
};

}  // namespace

Word parse_word(const std::string& text, const GroupCtx& ctx) {
  Word out(ctx);
  std::istringstream in(text);
  std::string tok;
  std::size_t index = 0;
  while (in >> tok) {
    TokenParser p{tok, 0, index};
    char head = tok[0];
    ++p.pos;
    GenSym sym;
    switch (head) {
      case 's': {
        sym = sym_s(p.read_int());
        break;
      }
      case 'p': {
        int i = p.read_int();
        p.expect('.');
        sym = sym_rho(i, p.read_int());
        break;
      }
      case 'L':
      case 'K': {
        int i = p.read_int();
        p.expect('.');
        int j = p.read_int();
        p.expect('.');
        int b = p.read_int();
        sym = head == 'L' ? sym_lambda(i, j, b) : sym_kappa(i, j, b);
        break;
      }
      default:
        p.fail("unknown generator letter");
    }
    int exp = 1;
    if (!p.done() && tok[p.pos] == '!') {
      exp = -1;
      ++p.pos;
    }
    if (!p.done()) p.fail("trailing characters at offset " + std::to_string(p.pos));
    try {
      out.push(sym, exp);
    } catch (const Error& e) {
      throw Error(e.code(), "token " + std::to_string(index + 1) + ": " + e.what());
    }
    ++index;
  }
  return out;
}

std::string render_word(const Word& w) {
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += render_sym(l.sym);
    if (l.exp == -1) out += '!';
  }
  return out;
}

}  // namespace mvtwin
