#include "ccoa/kb.hpp"

#include <cctype>
#include <optional>
#include <set>

namespace ccoa {
namespace {

struct Token {
  std::string text;
  SourcePos pos;
};

std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const SourcePos pos{line_no, i + 1};
    std::size_t end = i;
    if (c == '{') {
      end = line.find('}', i);
      if (end == std::string_view::npos) throw ParseError(ParseErrorKind::syntax, pos, "unterminated relation literal");
      ++end;
    } else {
      while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end])) && line[end] != '#') ++end;
    }
    out.push_back({std::string(line.substr(i, end - i)), pos});
    i = end;
  }
  return out;
}

template <typename Atom>
RelationSet<Atom> relation_token(const Token& t) {
  std::string compact;
  for (char c : t.text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  if (compact == "{}") throw ParseError(ParseErrorKind::empty_relation, t.pos, "empty relation literal");
  if (auto r = parse_relation<Atom>(compact)) return *r;
  if (compact.front() == '{' && compact.back() == '}') {
    // Report the first element that is not an atom.
    std::string_view body(compact);
    body = body.substr(1, body.size() - 2);
    std::size_t start = 0;
    while (start <= body.size()) {
      const std::size_t comma = std::min(body.find(',', start), body.size());
      const auto item = body.substr(start, comma - start);
      if (item.empty()) throw ParseError(ParseErrorKind::syntax, t.pos, "malformed relation literal '" + t.text + "'");
      if (!parse_atom<Atom>(item))
        throw ParseError(ParseErrorKind::unknown_atom, t.pos, "unknown atom '" + std::string(item) + "'");
      start = comma + 1;
    }
    throw ParseError(ParseErrorKind::syntax, t.pos, "malformed relation literal '" + t.text + "'");
  }
  throw ParseError(ParseErrorKind::unknown_atom, t.pos, "unknown atom '" + t.text + "'");
}

template <typename Atom>
std::string relation_text(RelationSet<Atom> r) {
  if (r.is_universal()) return "?";
  if (r.is_atomic()) return std::string(name(r.first()));
  return to_string(r);
}

}  // namespace

ParseError::ParseError(ParseErrorKind kind, SourcePos pos, const std::string& what)
    : std::runtime_error("line " + std::to_string(pos.line) + ", column " + std::to_string(pos.column) + ": " + what),
      kind_(kind),
      pos_(pos) {}

bool KnowledgeBase::operator==(const KnowledgeBase& o) const {
  if (points != o.points || cda_facts.size() != o.cda_facts.size() || roa_facts.size() != o.roa_facts.size())
    return false;
  for (std::size_t i = 0; i < cda_facts.size(); ++i) {
    const auto &a = cda_facts[i], &b = o.cda_facts[i];
    if (a.p != b.p || a.r != b.r || a.q != b.q) return false;
  }
  for (std::size_t i = 0; i < roa_facts.size(); ++i) {
    const auto &a = roa_facts[i], &b = o.roa_facts[i];
    if (a.parent != b.parent || a.reference != b.reference || a.primary != b.primary || a.r != b.r) return false;
  }
  return true;
}

KnowledgeBase parse_kb(std::string_view text) {
  KnowledgeBase kb;
  std::set<std::string, std::less<>> declared;
  auto point = [&](const Token& t) {
    if (!declared.contains(t.text))
      throw ParseError(ParseErrorKind::unknown_point, t.pos, "unknown point '" + t.text + "'");
    return t.text;
  };

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    start = nl + 1;
    ++line_no;

    const auto toks = tokenize(line, line_no);
    if (toks.empty()) continue;
    const Token& kw = toks[0];
    auto expect = [&](std::size_t count, const char* form) {
      if (toks.size() != count) {
        const SourcePos pos = toks.size() > count ? toks[count].pos : SourcePos{line_no, line.size() + 1};
        throw ParseError(ParseErrorKind::syntax, pos, std::string("expected '") + form + "'");
      }
    };
    if (kw.text == "point") {
      expect(2, "point <name>");
      if (toks[1].text.front() == '{' || toks[1].text == "?")
        throw ParseError(ParseErrorKind::syntax, toks[1].pos, "invalid point name '" + toks[1].text + "'");
      if (!declared.insert(toks[1].text).second)
        throw ParseError(ParseErrorKind::duplicate_point, toks[1].pos, "point '" + toks[1].text + "' declared twice");
      kb.points.push_back(toks[1].text);
      kb.point_pos.push_back(toks[1].pos);
    } else if (kw.text == "cda") {
      expect(4, "cda <p> <REL> <q>");
      kb.cda_facts.push_back({point(toks[1]), relation_token<CdaAtom>(toks[2]), point(toks[3]), kw.pos});
    } else if (kw.text == "roa") {
      expect(5, "roa <parent> <reference> <primary> <REL>");
      kb.roa_facts.push_back(
          {point(toks[1]), point(toks[2]), point(toks[3]), relation_token<RoaAtom>(toks[4]), kw.pos});
    } else {
      throw ParseError(ParseErrorKind::syntax, kw.pos, "unknown statement '" + kw.text + "'");
    }
  }
  return kb;
}

std::string serialize_kb(const KnowledgeBase& kb) {
  std::string out;
  for (const auto& p : kb.points) out += "point " + p + "\n";
  for (const auto& f : kb.cda_facts) out += "cda " + f.p + " " + relation_text(f.r) + " " + f.q + "\n";
  for (const auto& f : kb.roa_facts)
    out += "roa " + f.parent + " " + f.reference + " " + f.primary + " " + relation_text(f.r) + "\n";
  return out;
}

KnowledgeBase project_kb(const KnowledgeBase& kb, KbPart part) {
  KnowledgeBase out = kb;
  if (part == KbPart::roa) out.cda_facts.clear();
  if (part == KbPart::cda) out.roa_facts.clear();
  return out;
}

KnowledgeBase kb_from_csp(const CcoaCsp& csp) {
  KnowledgeBase kb;
  const auto& n = csp.names();
  kb.points = n;
  kb.point_pos.resize(n.size());
  for (std::size_t i = 0; i < n.size(); ++i)
    for (std::size_t j = i + 1; j < n.size(); ++j)
      if (const auto r = csp.binary().at(i, j); !r.is_universal()) kb.cda_facts.push_back({n[i], r, n[j], {}});
  for (std::size_t i = 0; i < n.size(); ++i)
    for (std::size_t j = i + 1; j < n.size(); ++j)
      for (std::size_t k = j + 1; k < n.size(); ++k)
        if (const auto r = csp.ternary().at(i, j, k); !r.is_universal())
          kb.roa_facts.push_back({n[i], n[j], n[k], r, {}});
  return kb;
}

BuiltCsp build_csp(const KnowledgeBase& kb) {
  BuiltCsp out{CcoaCsp(kb.points), {}};
  auto idx = [&](const std::string& n) { return *out.csp.index_of(n); };
  for (const auto& f : kb.cda_facts)
    if (out.csp.assert_cda(idx(f.p), idx(f.q), f.r).emptied)
      out.conflicts.push_back("line " + std::to_string(f.pos.line) + ": cda " + f.p + " " + relation_text(f.r) + " " +
                              f.q + " empties B(" + f.p + "," + f.q + ")");
  for (const auto& f : kb.roa_facts)
    if (out.csp.assert_roa(idx(f.parent), idx(f.reference), idx(f.primary), f.r).emptied)
      out.conflicts.push_back("line " + std::to_string(f.pos.line) + ": roa " + f.parent + " " + f.reference + " " +
                              f.primary + " " + relation_text(f.r) + " empties T(" + f.parent + "," + f.reference +
                              "," + f.primary + ")");
  return out;
}

}  // namespace ccoa
