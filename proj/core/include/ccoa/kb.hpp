#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ccoa/csp.hpp"

namespace ccoa {

struct SourcePos {
  std::size_t line = 0;    // 1-based
  std::size_t column = 0;  // 1-based
};

struct CdaFact {
  std::string p;
  CdaRelation r;
  std::string q;
  SourcePos pos;
};

// t(parent, reference, primary)
struct RoaFact {
  std::string parent;
  std::string reference;
  std::string primary;
  RoaRelation r;
  SourcePos pos;
};

/// Parsed knowledge base. Equality ignores source positions.
struct KnowledgeBase {
  std::vector<std::string> points;
  std::vector<SourcePos> point_pos;
  std::vector<CdaFact> cda_facts;
  std::vector<RoaFact> roa_facts;

  bool operator==(const KnowledgeBase& o) const;
};

enum class ParseErrorKind : std::uint8_t { syntax, unknown_point, unknown_atom, empty_relation, duplicate_point };

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, SourcePos pos, const std::string& what);
  ParseErrorKind kind() const { return kind_; }
  SourcePos pos() const { return pos_; }

 private:
  ParseErrorKind kind_;
  SourcePos pos_;
};

/// Line-oriented format; `#` starts a comment:
///   point <name>
///   cda <p> <REL> <q>                          REL(p, q)
///   roa <parent> <reference> <primary> <REL>   REL(parent, reference, primary)
/// REL is an atom name, `?` or a braced list `{a,b,...}`.
KnowledgeBase parse_kb(std::string_view text);
std::string serialize_kb(const KnowledgeBase& kb);

enum class KbPart : std::uint8_t { all, cda, roa };
/// Same points, facts of one kind only.
KnowledgeBase project_kb(const KnowledgeBase& kb, KbPart part);

/// Atomic facts for every pair i < j and triple i < j < k whose cell is not
/// universal.
KnowledgeBase kb_from_csp(const CcoaCsp& csp);

struct BuiltCsp {
  CcoaCsp csp;
  // Facts that emptied a cell when asserted.
  std::vector<std::string> conflicts;
};

BuiltCsp build_csp(const KnowledgeBase& kb);

}  // namespace ccoa
