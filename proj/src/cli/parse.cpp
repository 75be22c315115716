#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>

#include "stonework/cli.hpp"
#include "stonework/error.hpp"

namespace stonework::cli {

using boolalg::Presentation;
using boolalg::Term;

namespace {

enum class Tok { Ident, Zero, One, Not, And, Or, LParen, RParen, Comma, Arrow, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t col;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string describe(const Token& t) { return t.kind == Tok::End ? "end of input" : "'" + t.text + "'"; }

class Parser {
 public:
  Parser(std::string_view text, std::size_t line, std::size_t col0) : line_(line) {
    std::size_t i = 0;
    while (i < text.size()) {
      char c = text[i];
      std::size_t col = col0 + i;
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (ident_start(c)) {
        std::size_t j = i;
        while (j < text.size() && ident_char(text[j])) ++j;
        tokens_.push_back({Tok::Ident, std::string(text.substr(i, j - i)), col});
        i = j;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < text.size() && ident_char(text[j])) ++j;
        std::string lit(text.substr(i, j - i));
        if (lit != "0" && lit != "1") throw ParseError("expected 0 or 1, found '" + lit + "'", line_, col);
        tokens_.push_back({lit == "0" ? Tok::Zero : Tok::One, lit, col});
        i = j;
      } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
        tokens_.push_back({Tok::Arrow, "->", col});
        i += 2;
      } else {
        Tok kind;
        switch (c) {
          case '~': kind = Tok::Not; break;
          case '&': kind = Tok::And; break;
          case '|': kind = Tok::Or; break;
          case '(': kind = Tok::LParen; break;
          case ')': kind = Tok::RParen; break;
          case ',': kind = Tok::Comma; break;
          default: throw ParseError(std::string("unexpected character '") + c + "'", line_, col);
        }
        tokens_.push_back({kind, std::string(1, c), col});
        ++i;
      }
    }
    tokens_.push_back({Tok::End, "", col0 + text.size()});
  }

  const Token& peek() const { return tokens_[pos_]; }
  bool at(Tok k) const { return peek().kind == k; }
  Token take() { return tokens_[pos_ == tokens_.size() - 1 ? pos_ : pos_++]; }

  Token expect(Tok k, const std::string& what) {
    if (!at(k)) fail("expected " + what + ", found " + describe(peek()));
    return take();
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, peek().col); }

  Term expr() {
    Term t = conj();
    while (at(Tok::Or)) {
      take();
      t = t | conj();
    }
    return t;
  }

  /// expr ("," expr)*, possibly empty.
  std::vector<Term> list() {
    std::vector<Term> out;
    if (at(Tok::End)) return out;
    out.push_back(expr());
    while (at(Tok::Comma)) {
      take();
      out.push_back(expr());
    }
    return out;
  }

  void finish() {
    if (!at(Tok::End)) fail("unexpected " + describe(peek()));
  }

 private:
  Term conj() {
    Term t = unary();
    while (at(Tok::And)) {
      take();
      t = t & unary();
    }
    return t;
  }

  Term unary() {
    if (at(Tok::Not)) {
      take();
      return ~unary();
    }
    return atom();
  }

  Term atom() {
    Token t = take();
    switch (t.kind) {
      case Tok::Zero: return Term::zero();
      case Tok::One: return Term::one();
      case Tok::Ident: return Term::gen(t.text);
      case Tok::LParen: {
        Term inner = expr();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default: throw ParseError("expected a term, found " + describe(t), line_, t.col);
    }
  }

  std::size_t line_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

struct Section {
  std::string value;
  std::size_t line = 0;
  std::size_t col = 0;  // column of value[0]
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::map<std::string, Section> sections(std::string_view text, const std::set<std::string>& allowed) {
  std::map<std::string, Section> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!trim(line).empty()) {
      auto colon = line.find(':');
      std::size_t key_col = line.find_first_not_of(" \t") + 1;
      if (colon == std::string_view::npos) throw ParseError("expected 'key: value'", line_no, key_col);
      std::string key;
      for (char c : trim(line.substr(0, colon))) {
        if (std::isspace(static_cast<unsigned char>(c))) {
          if (!key.empty() && key.back() != ' ') key.push_back(' ');
        } else {
          key.push_back(c);
        }
      }
      if (!allowed.contains(key)) throw ParseError("unknown key '" + key + "'", line_no, key_col);
      if (out.contains(key)) throw ParseError("repeated key '" + key + "'", line_no, key_col);
      out.emplace(key, Section{std::string(line.substr(colon + 1)), line_no, colon + 2});
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

std::vector<std::string> parse_names(const Section& s) {
  std::vector<std::string> names;
  std::size_t i = 0;
  const std::string& v = s.value;
  while (i < v.size()) {
    if (std::isspace(static_cast<unsigned char>(v[i])) || v[i] == ',') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < v.size() && !std::isspace(static_cast<unsigned char>(v[j])) && v[j] != ',') ++j;
    std::string name = v.substr(i, j - i);
    bool ok = ident_start(name[0]) && std::all_of(name.begin(), name.end(), ident_char);
    if (!ok) throw ParseError("invalid generator name '" + name + "'", s.line, s.col + i);
    names.push_back(std::move(name));
    i = j;
  }
  return names;
}

std::vector<Term> parse_list(const Section& s) {
  Parser p(s.value, s.line, s.col);
  auto terms = p.list();
  p.finish();
  return terms;
}

std::size_t parse_natural(const Section& s) {
  std::string_view v = trim(s.value);
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
  if (v.empty() || ec != std::errc() || ptr != v.data() + v.size())
    throw ParseError("expected a natural number", s.line, s.col + s.value.find_first_not_of(' '));
  return n;
}

Presentation presentation_from(const std::map<std::string, Section>& secs, const std::string& prefix) {
  auto gens = secs.find(prefix + "gens");
  if (gens == secs.end()) throw ParseError("missing '" + prefix + "gens:' line", 1, 1);
  std::vector<Term> rels;
  if (auto r = secs.find(prefix + "rels"); r != secs.end()) rels = parse_list(r->second);
  return Presentation(parse_names(gens->second), std::move(rels));
}

}  // namespace

Term parse_term(std::string_view text) {
  Parser p(text, 1, 1);
  Term t = p.expr();
  p.finish();
  return t;
}

Presentation parse_presentation(std::string_view text) {
  return presentation_from(sections(text, {"gens", "rels"}), "");
}

boolalg::Morphism parse_morphism(std::string_view text) {
  auto secs = sections(text, {"src gens", "src rels", "dst gens", "dst rels", "map"});
  Presentation src = presentation_from(secs, "src ");
  Presentation dst = presentation_from(secs, "dst ");
  auto map = secs.find("map");
  if (map == secs.end()) throw ParseError("missing 'map:' line", 1, 1);
  const Section& s = map->second;

  Parser p(s.value, s.line, s.col);
  std::vector<std::optional<Term>> images(src.gens().size());
  if (!p.at(Tok::End)) {
    while (true) {
      Token name = p.expect(Tok::Ident, "a source generator");
      auto found = src.index_of(name.text);
      if (!found) throw UnknownGenerator(name.text);
      std::size_t idx = *found;
      if (images[idx]) throw ParseError("generator '" + name.text + "' mapped twice", s.line, name.col);
      p.expect(Tok::Arrow, "'->'");
      images[idx] = p.expr();
      if (!p.at(Tok::Comma)) break;
      p.take();
    }
  }
  p.finish();
  std::vector<Term> out;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!images[i]) throw ParseError("no image given for '" + src.gens()[i] + "'", s.line, s.col);
    out.push_back(*images[i]);
  }
  return boolalg::hom(src, std::move(out), dst);
}

SeparateInput parse_separate(std::string_view text) {
  auto secs = sections(text, {"gens", "rels", "F", "G"});
  SeparateInput in{presentation_from(secs, ""), {}, {}};
  if (auto f = secs.find("F"); f != secs.end()) in.f = parse_list(f->second);
  if (auto g = secs.find("G"); g != secs.end()) in.g = parse_list(g->second);
  for (const auto& t : in.f) in.presentation.check_term(t);
  for (const auto& t : in.g) in.presentation.check_term(t);
  return in;
}

TowerInput parse_tower(std::string_view text) {
  auto secs = sections(text, {"gens", "rels", "depth", "family"});
  TowerInput in;
  if (auto g = secs.find("gens"); g != secs.end()) in.presentation.gens = parse_names(g->second);
  if (auto r = secs.find("rels"); r != secs.end()) in.presentation.rels = parse_list(r->second);
  if (auto d = secs.find("depth"); d != secs.end()) in.depth = parse_natural(d->second);
  if (auto f = secs.find("family"); f != secs.end()) {
    std::string_view v = trim(f->second.value);
    if (v == "none")
      in.presentation.family = profinite::Family::None;
    else if (v == "pairwise-meet-zero")
      in.presentation.family = profinite::Family::PairwiseMeetZero;
    else
      throw ParseError("family must be 'none' or 'pairwise-meet-zero'", f->second.line, f->second.col);
  }
  return in;
}

}  // namespace stonework::cli
