// Lexer, parser and canonical serializer for .sesq files.
#include <algorithm>
#include <charconv>
#include <climits>
#include <cstring>
#include <map>
#include <set>
#include <sstream>

#include "sesq/specio.hpp"

namespace sesq {

std::string to_string(const Diagnostic& d) {
  std::string out = std::to_string(d.span.line) + ":" + std::to_string(d.span.column) + ": " + d.kind;
  if (d.code != d.kind) out += " (" + d.code + ")";
  return out + ": " + d.message;
}

namespace {

enum class Tok { ident, lbrace, rbrace, lparen, rparen, colon, arrow, darrow, eq, dot, plus, star, comma, newline, end };

struct Token {
  Tok kind;
  std::string text;
  Span span;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::ident: return "identifier '" + t.text + "'";
    case Tok::newline: return "end of line";
    case Tok::end: return "end of input";
    default: return "'" + t.text + "'";
  }
}

std::string tok_text(Tok k) {
  switch (k) {
    case Tok::ident: return "identifier";
    case Tok::lbrace: return "'{'";
    case Tok::rbrace: return "'}'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::colon: return "':'";
    case Tok::arrow: return "'->'";
    case Tok::darrow: return "'=>'";
    case Tok::eq: return "'='";
    case Tok::dot: return "'.'";
    case Tok::plus: return "'+'";
    case Tok::star: return "'*'";
    case Tok::comma: return "','";
    case Tok::newline: return "end of line";
    case Tok::end: return "end of input";
  }
  return "token";
}

bool ident_char(char c) {
  const auto u = static_cast<unsigned char>(c);
  if (u >= 0x80) return false;
  return std::isalnum(u) || (c != 0 && std::strchr("_'[]|^~$@!?/%&", c) != nullptr);
}

struct Lexer {
  std::string_view text;
  std::vector<Diagnostic>& diags;
  std::vector<Token> out;

  void run() {
    int line = 1, col = 1;
    std::size_t i = 0;
    auto push = [&](Tok k, std::string s, int len) {
      out.push_back(Token{k, std::move(s), Span{line, col, len}});
    };
    while (i < text.size()) {
      const char c = text[i];
      if (c == '\n') {
        push(Tok::newline, "\\n", 1);
        ++i, ++line, col = 1;
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\r') {
        ++i, ++col;
        continue;
      }
      if (c == '#') {
        while (i < text.size() && text[i] != '\n') ++i, ++col;
        continue;
      }
      if (ident_char(c)) {
        std::size_t j = i;
        // inner hyphens are allowed (builder names), except in front of '>'
        while (j < text.size() && (ident_char(text[j]) || (text[j] == '-' && j + 1 < text.size() &&
                                                           ident_char(text[j + 1]))))
          ++j;
        const int len = static_cast<int>(j - i);
        push(Tok::ident, std::string(text.substr(i, j - i)), len);
        i = j, col += len;
        continue;
      }
      const char next = i + 1 < text.size() ? text[i + 1] : '\0';
      Tok k;
      int len = 1;
      switch (c) {
        case '{': k = Tok::lbrace; break;
        case '}': k = Tok::rbrace; break;
        case '(': k = Tok::lparen; break;
        case ')': k = Tok::rparen; break;
        case ':': k = Tok::colon; break;
        case '.': k = Tok::dot; break;
        case '+': k = Tok::plus; break;
        case '*': k = Tok::star; break;
        case ',': k = Tok::comma; break;
        case '=':
          if (next == '>') k = Tok::darrow, len = 2;
          else k = Tok::eq;
          break;
        case '-':
          if (next == '>') {
            k = Tok::arrow, len = 2;
            break;
          }
          [[fallthrough]];
        default: {
          const auto u = static_cast<unsigned char>(c);
          std::string shown = (u >= 0x20 && u < 0x7f) ? std::string(1, c) : "\\x" + [&] {
            static const char* hex = "0123456789abcdef";
            return std::string{hex[u >> 4], hex[u & 15]};
          }();
          diags.push_back(Diagnostic{"ParseError", "ParseError", Span{line, col, 1}, "unexpected character '" + shown + "'"});
          ++i, ++col;
          continue;
        }
      }
      push(k, std::string(text.substr(i, len)), len);
      i += len, col += len;
    }
    out.push_back(Token{Tok::end, "", Span{line, col, 0}});
  }
};

// Declaration shapes: I identifier, ':' colon, '>' arrow, 'D' double arrow,
// and the literal operators.
const std::map<std::string, std::map<std::string, std::string>>& shapes() {
  static const std::map<std::string, std::map<std::string, std::string>> s = {
      {"category", {{"object", "I"}, {"morphism", "I:I>I"}, {"id", "I=I"}, {"compose", "I.I=I"}}},
      {"cells", {{"cell", "I:IDI"}, {"zero", "I=I"}, {"plus", "I+I=I"}, {"lwhisk", "I.I=I"}, {"rwhisk", "I.I=I"}}},
      {"group", {{"elem", "I"}, {"mul", "I*I=I"}}},
      {"monoid", {{"elem", "I"}, {"mul", "I*I=I"}}},
      {"xmod", {{"top", "I"}, {"bottom", "I"}, {"diff", "I=I"}, {"act", "I.I=I"}}},
      {"complex", {{"degree", "II"}, {"diff", "II=I"}}},
      {"intcat", {{"object", "I"}, {"arrow", "I:I>I"}, {"unit", "I=I"}, {"mul", "I*I=I"}}},
      {"chainmap", {{"map", "II=I"}}},
      {"homotopy", {{"map", "II=I"}}},
  };
  return s;
}

const std::vector<std::string>& kind_order(const std::string& block) {
  static const std::map<std::string, std::vector<std::string>> order = {
      {"category", {"object", "morphism", "id", "compose"}},
      {"cells", {"cell", "zero", "plus", "lwhisk", "rwhisk"}},
      {"group", {"elem", "mul"}},
      {"monoid", {"elem", "mul"}},
      {"xmod", {"top", "bottom", "diff", "act"}},
      {"complex", {"degree", "diff"}},
      {"intcat", {"object", "arrow", "unit", "mul"}},
      {"chainmap", {"map"}},
      {"homotopy", {"map"}},
      {"pseudocat", {"C0", "C1", "d", "c", "e", "m", "C2", "C3", "alpha", "lambda", "rho"}},
  };
  static const std::vector<std::string> none;
  auto it = order.find(block);
  return it == order.end() ? none : it->second;
}

const std::vector<std::string> kBlockOrder = {"group",    "monoid",   "xmod",     "complex", "intcat", "chainmap",
                                              "homotopy", "category", "cells",    "derive",  "pseudocat"};

bool named_block(const std::string& k) {
  return k == "group" || k == "monoid" || k == "xmod" || k == "complex" || k == "intcat" || k == "chainmap" ||
         k == "homotopy";
}

Tok shape_tok(char c) {
  switch (c) {
    case ':': return Tok::colon;
    case '>': return Tok::arrow;
    case 'D': return Tok::darrow;
    case '=': return Tok::eq;
    case '.': return Tok::dot;
    case '+': return Tok::plus;
    case '*': return Tok::star;
    default: return Tok::ident;
  }
}

const char* shape_text(char c) {
  switch (c) {
    case ':': return ":";
    case '>': return "->";
    case 'D': return "=>";
    case '=': return "=";
    case '.': return ".";
    case '+': return "+";
    case '*': return "*";
    default: return "";
  }
}

struct Failed {};

class Parser {
 public:
  Parser(std::vector<Token> toks, std::vector<Diagnostic>& diags) : t_(std::move(toks)), diags_(diags) {}

  SpecDocument run() {
    SpecDocument doc;
    while (true) {
      skip_newlines();
      if (peek().kind == Tok::end) break;
      if (diags_.size() >= 64) break;
      try {
        doc.blocks.push_back(top_level());
      } catch (Failed&) {
        recover_top();
      }
    }
    return doc;
  }

 private:
  const Token& peek() const { return t_[pos_]; }
  const Token& take() {
    const Token& t = t_[pos_];
    if (t.kind != Tok::end) ++pos_;
    return t;
  }

  [[noreturn]] void fail(const Token& at, const std::string& msg) {
    diags_.push_back(Diagnostic{"ParseError", "ParseError", at.span, msg});
    throw Failed{};
  }

  const Token& expect(Tok k, const std::string& context) {
    if (peek().kind != k) fail(peek(), "expected " + tok_text(k) + " " + context + ", found " + describe(peek()));
    return take();
  }

  void skip_newlines() {
    while (peek().kind == Tok::newline) take();
  }

  // Skip to the end of the current line, or past an unterminated block.
  void recover_top() {
    int depth = 0;
    while (peek().kind != Tok::end) {
      const auto k = take().kind;
      if (k == Tok::lbrace) ++depth;
      if (k == Tok::rbrace && depth > 0 && --depth == 0) break;
      if (k == Tok::newline && depth == 0) break;
    }
  }

  void recover_decl() {
    while (peek().kind != Tok::end && peek().kind != Tok::newline && peek().kind != Tok::rbrace) take();
  }

  Block top_level() {
    const Token& kw = expect(Tok::ident, "at the start of a block");
    Block b;
    b.kind = kw.text;
    b.span = kw.span;
    if (b.kind == "derive") {
      b.name = expect(Tok::ident, "naming a builder after 'derive'").text;
      while (peek().kind == Tok::ident) {
        std::string arg = take().text;
        if (peek().kind == Tok::eq) {
          take();
          arg += "=" + expect(Tok::ident, "after '='").text;
        }
        b.header.push_back(std::move(arg));
      }
      end_of_line("after derive directive");
      return b;
    }
    const bool known = b.kind == "category" || b.kind == "cells" || b.kind == "pseudocat" || named_block(b.kind);
    if (!known)
      fail(kw, "unknown block '" + b.kind +
                   "'; expected category, cells, group, monoid, xmod, complex, intcat, chainmap, homotopy, pseudocat "
                   "or derive");
    if (named_block(b.kind)) b.name = expect(Tok::ident, "naming the " + b.kind).text;
    if (b.kind == "chainmap" || b.kind == "homotopy") {
      expect(Tok::colon, "after the " + b.kind + " name");
      b.header.push_back(expect(Tok::ident, "naming the source complex").text);
      expect(Tok::arrow, "between source and target");
      b.header.push_back(expect(Tok::ident, "naming the target complex").text);
    }
    skip_newlines();
    expect(Tok::lbrace, "opening the " + b.kind + " block");
    while (true) {
      while (peek().kind == Tok::newline || peek().kind == Tok::comma) take();
      if (peek().kind == Tok::rbrace) {
        take();
        break;
      }
      if (peek().kind == Tok::end) fail(peek(), "unterminated " + b.kind + " block, expected '}'");
      if (diags_.size() >= 64) throw Failed{};
      try {
        b.decls.push_back(b.kind == "pseudocat" ? field() : decl(b.kind));
        if (peek().kind != Tok::newline && peek().kind != Tok::comma && peek().kind != Tok::rbrace)
          fail(peek(), "expected end of line after declaration, found " + describe(peek()));
      } catch (Failed&) {
        recover_decl();
      }
    }
    end_of_line("after '}'");
    return b;
  }

  void end_of_line(const std::string& context) {
    if (peek().kind != Tok::newline && peek().kind != Tok::end)
      fail(peek(), "expected end of line " + context + ", found " + describe(peek()));
  }

  Decl decl(const std::string& block) {
    const Token& kw = expect(Tok::ident, "at the start of a declaration");
    const auto& table = shapes().at(block);
    auto it = table.find(kw.text);
    if (it == table.end()) {
      std::string allowed;
      for (const auto& k : kind_order(block)) allowed += (allowed.empty() ? "" : ", ") + k;
      fail(kw, "unknown declaration '" + kw.text + "' in " + block + " block; expected one of " + allowed);
    }
    Decl d;
    d.keyword = kw.text;
    d.span = kw.span;
    for (char c : it->second) {
      const auto k = shape_tok(c);
      const Token& t = expect(k, "in '" + d.keyword + "' declaration");
      if (k == Tok::ident) {
        d.args.push_back(t.text);
        d.arg_spans.push_back(t.span);
      }
    }
    d.span.length = t_[pos_ - 1].span.column + t_[pos_ - 1].span.length - d.span.column;
    return d;
  }

  Decl field() {
    const Token& kw = expect(Tok::ident, "naming a pseudocat field");
    const auto& names = kind_order("pseudocat");
    if (std::find(names.begin(), names.end(), kw.text) == names.end())
      fail(kw, "unknown pseudocat field '" + kw.text + "'; expected C0, C1, d, c, e, m, C2, C3, alpha, lambda or rho");
    Decl d;
    d.keyword = kw.text;
    d.span = kw.span;
    expect(Tok::eq, "after field name");
    auto arg = [&] {
      const Token& t = expect(Tok::ident, "as field value");
      d.args.push_back(t.text);
      d.arg_spans.push_back(t.span);
    };
    if (d.keyword == "C2" || d.keyword == "C3") {
      expect(Tok::lparen, "opening the pullback triple");
      arg();
      expect(Tok::comma, "in pullback triple");
      arg();
      expect(Tok::comma, "in pullback triple");
      arg();
      expect(Tok::rparen, "closing the pullback triple");
    } else {
      arg();
    }
    return d;
  }

  std::vector<Token> t_;
  std::size_t pos_ = 0;
  std::vector<Diagnostic>& diags_;
};

// ---------------------------------------------------------------- canonical order

constexpr long kUnknown = LONG_MAX;

long as_int(const std::string& s) {
  long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return kUnknown;
  return v;
}

using Index = std::map<std::string, long>;

long lookup(const Index& idx, const std::string& s) {
  auto it = idx.find(s);
  return it == idx.end() ? kUnknown : it->second;
}

struct OrderContext {
  Index objects, morphisms, cells;
  std::map<std::string, Index> group_elems;             // group or monoid name
  std::map<std::string, std::pair<std::string, std::string>> xmod_groups;  // top, bottom
  std::map<std::string, std::map<long, std::string>> complex_groups;
  std::map<std::string, std::pair<Index, Index>> intcat;  // objects, arrows

  explicit OrderContext(const SpecDocument& doc) {
    for (const auto& b : doc.blocks) {
      auto collect = [&](Index& idx, const std::string& kw) {
        for (const auto& d : b.decls)
          if (d.keyword == kw && !d.args.empty()) idx.emplace(d.args[0], static_cast<long>(idx.size()));
      };
      if (b.kind == "category") {
        collect(objects, "object");
        collect(morphisms, "morphism");
      } else if (b.kind == "cells") {
        collect(cells, "cell");
      } else if (b.kind == "group" || b.kind == "monoid") {
        collect(group_elems[b.name], "elem");
      } else if (b.kind == "xmod") {
        auto& g = xmod_groups[b.name];
        for (const auto& d : b.decls) {
          if (d.keyword == "top") g.first = d.args[0];
          if (d.keyword == "bottom") g.second = d.args[0];
        }
      } else if (b.kind == "complex") {
        for (const auto& d : b.decls)
          if (d.keyword == "degree") complex_groups[b.name][as_int(d.args[0])] = d.args[1];
      } else if (b.kind == "intcat") {
        auto& ic = intcat[b.name];
        collect(ic.first, "object");
        collect(ic.second, "arrow");
      }
    }
  }

  long elem(const std::string& group, const std::string& label) const {
    auto it = group_elems.find(group);
    return it == group_elems.end() ? kUnknown : lookup(it->second, label);
  }

  long complex_elem(const std::string& complex, long degree, const std::string& label) const {
    auto it = complex_groups.find(complex);
    if (it == complex_groups.end()) return kUnknown;
    auto g = it->second.find(degree);
    return g == it->second.end() ? kUnknown : elem(g->second, label);
  }

  std::vector<long> key(const Block& b, const Decl& d) const {
    const auto& a = d.args;
    const auto& k = d.keyword;
    if (b.kind == "category") {
      if (k == "id") return {lookup(objects, a[0])};
      if (k == "compose") return {lookup(morphisms, a[0]), lookup(morphisms, a[1])};
    } else if (b.kind == "cells") {
      if (k == "zero") return {lookup(morphisms, a[0])};
      if (k == "plus") return {lookup(cells, a[0]), lookup(cells, a[1])};
      if (k == "lwhisk") return {lookup(morphisms, a[0]), lookup(cells, a[1])};
      if (k == "rwhisk") return {lookup(cells, a[0]), lookup(morphisms, a[1])};
    } else if (b.kind == "group" || b.kind == "monoid") {
      if (k == "mul") return {elem(b.name, a[0]), elem(b.name, a[1])};
    } else if (b.kind == "xmod") {
      auto it = xmod_groups.find(b.name);
      const std::string top = it == xmod_groups.end() ? "" : it->second.first;
      const std::string bottom = it == xmod_groups.end() ? "" : it->second.second;
      if (k == "diff") return {elem(top, a[0])};
      if (k == "act") return {elem(bottom, a[0]), elem(top, a[1])};
    } else if (b.kind == "complex") {
      if (k == "degree") return {as_int(a[0])};
      if (k == "diff") return {as_int(a[0]), complex_elem(b.name, as_int(a[0]), a[1])};
    } else if (b.kind == "intcat") {
      auto it = intcat.find(b.name);
      if (it == intcat.end()) return {};
      if (k == "unit") return {lookup(it->second.first, a[0])};
      if (k == "mul") return {lookup(it->second.second, a[0]), lookup(it->second.second, a[1])};
    } else if (b.kind == "chainmap" || b.kind == "homotopy") {
      const long deg = as_int(a[0]);
      const long src_deg = b.kind == "homotopy" && deg != kUnknown ? deg - 1 : deg;
      const std::string src = b.header.empty() ? "" : b.header[0];
      return {deg, complex_elem(src, src_deg, a[1])};
    }
    return {};
  }
};

void write_decl(std::ostream& out, const std::string& block, const Decl& d) {
  out << "  " << d.keyword;
  if (block == "pseudocat") {
    out << " = ";
    if (d.args.size() == 3) out << "(" << d.args[0] << ", " << d.args[1] << ", " << d.args[2] << ")";
    else if (!d.args.empty()) out << d.args[0];
    out << "\n";
    return;
  }
  const auto& table = shapes().at(block);
  const auto& shape = table.at(d.keyword);
  std::size_t i = 0;
  for (char c : shape) {
    out << ' ';
    if (shape_tok(c) == Tok::ident) out << (i < d.args.size() ? d.args[i++] : std::string("?"));
    else out << shape_text(c);
  }
  out << "\n";
}

long rank_of(const std::vector<std::string>& order, const std::string& s) {
  auto it = std::find(order.begin(), order.end(), s);
  return it == order.end() ? static_cast<long>(order.size()) : it - order.begin();
}

}  // namespace

ParseResult parse(std::string_view text) {
  ParseResult r;
  Lexer lex{text, r.diagnostics, {}};
  lex.run();
  Parser p(std::move(lex.out), r.diagnostics);
  auto doc = p.run();
  if (r.diagnostics.empty()) r.document = std::move(doc);
  return r;
}

std::string serialize(const SpecDocument& doc) {
  const OrderContext ctx(doc);
  std::vector<const Block*> blocks;
  for (const auto& b : doc.blocks) blocks.push_back(&b);
  std::stable_sort(blocks.begin(), blocks.end(), [](const Block* x, const Block* y) {
    return rank_of(kBlockOrder, x->kind) < rank_of(kBlockOrder, y->kind);
  });
  std::ostringstream out;
  bool first = true;
  for (const Block* b : blocks) {
    if (!first) out << "\n";
    first = false;
    if (b->kind == "derive") {
      out << "derive " << b->name;
      for (const auto& a : b->header) out << ' ' << a;
      out << "\n";
      continue;
    }
    out << b->kind;
    if (!b->name.empty()) out << ' ' << b->name;
    if (b->header.size() == 2) out << " : " << b->header[0] << " -> " << b->header[1];
    out << " {\n";
    const auto& order = kind_order(b->kind);
    std::vector<std::pair<std::pair<long, std::vector<long>>, const Decl*>> decls;
    for (const auto& d : b->decls) decls.push_back({{rank_of(order, d.keyword), ctx.key(*b, d)}, &d});
    std::stable_sort(decls.begin(), decls.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [k, d] : decls) write_decl(out, b->kind, *d);
    out << "}\n";
  }
  return out.str();
}

SpecDocument to_document(const TableStructure& h) {
  const auto& ct = h.base().tables();
  const auto& t = h.tables();
  SpecDocument doc;
  auto decl = [](std::string kw, std::vector<std::string> args) {
    Decl d;
    d.keyword = std::move(kw);
    d.args = std::move(args);
    return d;
  };
  Block cat;
  cat.kind = "category";
  for (const auto& o : ct.objects) cat.decls.push_back(decl("object", {o}));
  for (const auto& m : ct.morphisms)
    cat.decls.push_back(decl("morphism", {m.name, ct.objects.at(m.source), ct.objects.at(m.target)}));
  for (std::size_t a = 0; a < ct.identities.size(); ++a)
    if (ct.identities[a] >= 0) cat.decls.push_back(decl("id", {ct.objects[a], ct.morphisms[ct.identities[a]].name}));
  const int n = static_cast<int>(ct.morphisms.size());
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f)
      if (int c = ct.composite(g, f); c >= 0)
        cat.decls.push_back(decl("compose", {ct.morphisms[g].name, ct.morphisms[f].name, ct.morphisms[c].name}));
  Block cells;
  cells.kind = "cells";
  auto mname = [&](int m) { return ct.morphisms.at(m).name; };
  auto cname = [&](int c) { return t.cells.at(c).name; };
  for (const auto& c : t.cells) cells.decls.push_back(decl("cell", {c.name, mname(c.dom), mname(c.cod)}));
  for (std::size_t f = 0; f < t.zero.size(); ++f)
    if (t.zero[f] >= 0) cells.decls.push_back(decl("zero", {mname(static_cast<int>(f)), cname(t.zero[f])}));
  for (const auto& [k, w] : t.vsum) cells.decls.push_back(decl("plus", {cname(k.first), cname(k.second), cname(w)}));
  for (const auto& [k, w] : t.lwhisk) cells.decls.push_back(decl("lwhisk", {mname(k.first), cname(k.second), cname(w)}));
  for (const auto& [k, w] : t.rwhisk) cells.decls.push_back(decl("rwhisk", {cname(k.first), mname(k.second), cname(w)}));
  doc.blocks.push_back(std::move(cat));
  doc.blocks.push_back(std::move(cells));
  return doc;
}

std::string serialize(const TableStructure& h) { return serialize(to_document(h)); }

// ---------------------------------------------------------------- presentation blocks

namespace {

Decl make_decl(std::string kw, std::vector<std::string> args) {
  Decl d;
  d.keyword = std::move(kw);
  d.args = std::move(args);
  return d;
}

Block table_block(std::string kind, const std::string& name, const std::vector<std::string>& elems,
                  const std::vector<int>& table) {
  Block b;
  b.kind = std::move(kind);
  b.name = name;
  const auto n = elems.size();
  for (const auto& e : elems) b.decls.push_back(make_decl("elem", {e}));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) b.decls.push_back(make_decl("mul", {elems[x], elems[y], elems[table[x * n + y]]}));
  return b;
}

}  // namespace

Block group_block(const FiniteGroup& g) { return table_block("group", g.name, g.elements, g.table); }
Block monoid_block(const FiniteMonoid& m) { return table_block("monoid", m.name, m.elements, m.table); }

Block xmod_block(const CrossedModule& x) {
  Block b;
  b.kind = "xmod";
  b.name = x.name;
  b.decls.push_back(make_decl("top", {x.top.name}));
  b.decls.push_back(make_decl("bottom", {x.bottom.name}));
  for (int e = 0; e < x.top.size(); ++e)
    b.decls.push_back(make_decl("diff", {x.top.elements[e], x.bottom.elements[x.boundary[e]]}));
  for (int s = 0; s < x.bottom.size(); ++s)
    for (int e = 0; e < x.top.size(); ++e)
      b.decls.push_back(make_decl("act", {x.bottom.elements[s], x.top.elements[e], x.top.elements[x.act(s, e)]}));
  return b;
}

Block complex_block(const ChainComplex& c) {
  Block b;
  b.kind = "complex";
  b.name = c.name;
  for (int k = 0; k < 3; ++k) b.decls.push_back(make_decl("degree", {std::to_string(k), c.groups[k].name}));
  for (int k = 1; k < 3; ++k) {
    const auto& d = k == 2 ? c.d2 : c.d1;
    for (int x = 0; x < c.groups[k].size(); ++x)
      b.decls.push_back(
          make_decl("diff", {std::to_string(k), c.groups[k].elements[x], c.groups[k - 1].elements[d[x]]}));
  }
  return b;
}

Block intcat_block(const InternalCategory& c) {
  Block b;
  b.kind = "intcat";
  b.name = c.name;
  for (const auto& o : c.objects) b.decls.push_back(make_decl("object", {o}));
  for (std::size_t a = 0; a < c.arrows.size(); ++a)
    b.decls.push_back(make_decl("arrow", {c.arrows[a], c.objects[c.dom[a]], c.objects[c.cod[a]]}));
  for (std::size_t o = 0; o < c.objects.size(); ++o)
    b.decls.push_back(make_decl("unit", {c.objects[o], c.arrows[c.unit[o]]}));
  const int n = static_cast<int>(c.arrows.size());
  for (int f = 0; f < n; ++f)
    for (int g = 0; g < n; ++g)
      if (int h = c.compose(f, g); h >= 0) b.decls.push_back(make_decl("mul", {c.arrows[f], c.arrows[g], c.arrows[h]}));
  return b;
}

}  // namespace sesq
