#include "khr/dsl.hpp"

#include <map>
#include <optional>
#include <sstream>

namespace khr {

std::string_view to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::UnknownElement: return "unknown element";
    case ParseErrorKind::MissingCell: return "missing cell";
    case ParseErrorKind::DuplicateCell: return "contradictory duplicate cell";
    case ParseErrorKind::BadHeader: return "bad header";
    case ParseErrorKind::EmptySet: return "empty set";
    case ParseErrorKind::Syntax: return "syntax error";
  }
  return "error";
}

ParseError::ParseError(SourceSpan span, ParseErrorKind kind, const std::string& detail)
    : std::runtime_error(std::to_string(span.line) + ":" + std::to_string(span.column) + ": " +
                         std::string(to_string(kind)) + ": " + detail),
      span_(span), kind_(kind), detail_(detail) {}

namespace {

enum class Tok { Word, LBrace, RBrace, Comma, Colon, Arrow };

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

bool is_separator(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '{' || c == '}' || c == ',' || c == ':';
}

std::vector<Token> tokenize(std::string_view line, int line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    const SourceSpan at{line_no, static_cast<int>(i) + 1};
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
    } else if (c == '{') {
      out.push_back({Tok::LBrace, "{", at});
      ++i;
    } else if (c == '}') {
      out.push_back({Tok::RBrace, "}", at});
      ++i;
    } else if (c == ',') {
      out.push_back({Tok::Comma, ",", at});
      ++i;
    } else if (c == ':') {
      out.push_back({Tok::Colon, ":", at});
      ++i;
    } else if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      out.push_back({Tok::Arrow, "->", at});
      i += 2;
    } else {
      std::size_t j = i;
      while (j < line.size() && !is_separator(line[j]) && !(line[j] == '-' && j + 1 < line.size() && line[j + 1] == '>'))
        ++j;
      out.push_back({Tok::Word, std::string(line.substr(i, j - i)), at});
      i = j;
    }
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

template <typename T>
struct CellGrid {
  int n = 0;
  std::vector<std::optional<T>> value;
  std::vector<bool> explicit_;

  explicit CellGrid(int order)
      : n(order), value(static_cast<std::size_t>(order * order)), explicit_(static_cast<std::size_t>(order * order)) {}

  std::size_t at(int x, int y) const { return static_cast<std::size_t>(x * n + y); }

  // Returns false on a contradictory repeat of the same ordered cell.
  bool put(int x, int y, const T& v) {
    const auto c = at(x, y);
    if (explicit_[c] && value[c] != v) return false;
    value[c] = v;
    explicit_[c] = true;
    const auto m = at(y, x);
    if (!explicit_[m]) value[m] = v;
    return true;
  }
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  HyperringTable run() {
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      std::size_t end = text_.find('\n', pos);
      if (end == std::string_view::npos) end = text_.size();
      ++line_no;
      std::string_view line = text_.substr(pos, end - pos);
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      handle_line(line, line_no);
      last_line_ = line_no;
      if (end == text_.size()) break;
      pos = end + 1;
    }
    return finish();
  }

 private:
  enum class Section { None, Add, Mul };

  [[noreturn]] static void fail(SourceSpan at, ParseErrorKind kind, const std::string& msg) {
    throw ParseError(at, kind, msg);
  }

  void handle_line(std::string_view line, int line_no) {
    auto toks = tokenize(line, line_no);
    if (toks.empty()) return;
    const Token& head = toks.front();

    if (head.kind == Tok::Word && head.text == "hyperring" && (toks.size() < 2 || toks[1].kind != Tok::Colon)) {
      if (name_) fail(head.span, ParseErrorKind::BadHeader, "repeated 'hyperring' line");
      auto rest = trim(line.substr(static_cast<std::size_t>(head.span.column - 1) + head.text.size()));
      if (rest.empty()) fail(head.span, ParseErrorKind::BadHeader, "'hyperring' needs a name");
      name_ = std::string(rest);
      return;
    }
    if (!name_) fail(head.span, ParseErrorKind::BadHeader, "file must start with 'hyperring <name>'");

    if (head.kind == Tok::Word && toks.size() >= 2 && toks[1].kind == Tok::Colon) {
      directive(head, toks);
      return;
    }
    if (section_ == Section::None)
      fail(head.span, ParseErrorKind::Syntax, "expected a directive ('elements:', 'zero:', 'one:', 'add:', 'mul:')");
    cell(toks);
  }

  void directive(const Token& head, const std::vector<Token>& toks) {
    const std::string& key = head.text;
    if (key == "elements") {
      if (!names_.empty()) fail(head.span, ParseErrorKind::BadHeader, "repeated 'elements:' line");
      for (std::size_t i = 2; i < toks.size(); ++i) {
        if (toks[i].kind != Tok::Word) fail(toks[i].span, ParseErrorKind::Syntax, "unexpected '" + toks[i].text + "'");
        if (index_.count(toks[i].text))
          fail(toks[i].span, ParseErrorKind::BadHeader, "element '" + toks[i].text + "' declared twice");
        index_[toks[i].text] = static_cast<int>(names_.size());
        names_.push_back(toks[i].text);
      }
      if (names_.empty()) fail(head.span, ParseErrorKind::BadHeader, "'elements:' lists no elements");
      if (static_cast<int>(names_.size()) > kMaxOrder)
        fail(head.span, ParseErrorKind::BadHeader, "more than 64 elements");
      add_.emplace(static_cast<int>(names_.size()));
      mul_.emplace(static_cast<int>(names_.size()));
    } else if (key == "zero" || key == "one") {
      need_elements(head);
      if (toks.size() != 3 || toks[2].kind != Tok::Word)
        fail(head.span, ParseErrorKind::BadHeader, "'" + key + ":' takes exactly one element");
      auto& slot = key == "zero" ? zero_ : one_;
      if (slot) fail(head.span, ParseErrorKind::BadHeader, "repeated '" + key + ":' line");
      slot = lookup(toks[2]);
    } else if (key == "add" || key == "mul") {
      need_elements(head);
      if (toks.size() != 2) fail(toks[2].span, ParseErrorKind::Syntax, "'" + key + ":' takes no arguments");
      auto& seen = key == "add" ? add_seen_ : mul_seen_;
      if (seen) fail(head.span, ParseErrorKind::BadHeader, "repeated '" + key + ":' section");
      seen = true;
      section_ = key == "add" ? Section::Add : Section::Mul;
    } else {
      fail(head.span, ParseErrorKind::BadHeader, "unknown directive '" + key + ":'");
    }
  }

  void need_elements(const Token& at) {
    if (names_.empty()) fail(at.span, ParseErrorKind::BadHeader, "'elements:' must come before '" + at.text + ":'");
  }

  int lookup(const Token& t) const {
    if (t.kind != Tok::Word) fail(t.span, ParseErrorKind::Syntax, "expected an element, got '" + t.text + "'");
    auto it = index_.find(t.text);
    if (it == index_.end()) fail(t.span, ParseErrorKind::UnknownElement, "'" + t.text + "' is not declared");
    return it->second;
  }

  void cell(const std::vector<Token>& toks) {
    if (toks.size() < 4 || toks[2].kind != Tok::Arrow)
      fail(toks.front().span, ParseErrorKind::Syntax, "expected '<x> <y> -> <value>'");
    const int x = lookup(toks[0]);
    const int y = lookup(toks[1]);
    if (section_ == Section::Mul) {
      if (toks.size() != 4) fail(toks[4].span, ParseErrorKind::Syntax, "a product cell holds a single element");
      if (!mul_->put(x, y, lookup(toks[3])))
        fail(toks[0].span, ParseErrorKind::DuplicateCell,
             "mul cell (" + toks[0].text + "," + toks[1].text + ") given twice with different values");
      return;
    }
    ElementSubset value;
    if (toks[3].kind == Tok::Word) {
      if (toks.size() != 4) fail(toks[4].span, ParseErrorKind::Syntax, "unexpected '" + toks[4].text + "'");
      value.insert(lookup(toks[3]));
    } else if (toks[3].kind == Tok::LBrace) {
      std::size_t i = 4;
      if (i < toks.size() && toks[i].kind == Tok::RBrace)
        fail(toks[3].span, ParseErrorKind::EmptySet, "hyperaddition cells must be nonempty");
      while (true) {
        if (i >= toks.size()) fail(toks.back().span, ParseErrorKind::Syntax, "unterminated set");
        value.insert(lookup(toks[i]));
        ++i;
        if (i >= toks.size()) fail(toks.back().span, ParseErrorKind::Syntax, "unterminated set");
        if (toks[i].kind == Tok::RBrace) break;
        if (toks[i].kind != Tok::Comma) fail(toks[i].span, ParseErrorKind::Syntax, "expected ',' or '}'");
        ++i;
      }
      if (i + 1 != toks.size()) fail(toks[i + 1].span, ParseErrorKind::Syntax, "trailing input after '}'");
    } else {
      fail(toks[3].span, ParseErrorKind::Syntax, "expected '{' or an element");
    }
    if (!add_->put(x, y, value))
      fail(toks[0].span, ParseErrorKind::DuplicateCell,
           "add cell (" + toks[0].text + "," + toks[1].text + ") given twice with different values");
  }

  HyperringTable finish() {
    const SourceSpan eof{last_line_ + 1, 1};
    if (!name_) fail(eof, ParseErrorKind::BadHeader, "missing 'hyperring <name>' line");
    if (names_.empty()) fail(eof, ParseErrorKind::BadHeader, "missing 'elements:' line");
    if (!zero_) fail(eof, ParseErrorKind::BadHeader, "missing 'zero:' line");
    if (!add_seen_) fail(eof, ParseErrorKind::BadHeader, "missing 'add:' section");
    if (!mul_seen_) fail(eof, ParseErrorKind::BadHeader, "missing 'mul:' section");

    const int n = static_cast<int>(names_.size());
    std::string missing;
    auto collect = [&](const char* table, const auto& grid) {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (!grid.value[grid.at(x, y)]) missing += std::string(" ") + table + "(" + names_[x] + "," + names_[y] + ")";
    };
    collect("add", *add_);
    collect("mul", *mul_);
    if (!missing.empty()) fail(eof, ParseErrorKind::MissingCell, "cells not given:" + missing);

    std::vector<ElementSubset> add;
    std::vector<Element> mul;
    for (const auto& v : add_->value) add.push_back(*v);
    for (const auto& v : mul_->value) mul.push_back(*v);
    return HyperringTable(*name_, names_, std::move(add), std::move(mul), *zero_, one_);
  }

  std::string_view text_;
  int last_line_ = 0;
  std::optional<std::string> name_;
  std::vector<std::string> names_;
  std::map<std::string, int, std::less<>> index_;
  std::optional<int> zero_, one_;
  bool add_seen_ = false, mul_seen_ = false;
  Section section_ = Section::None;
  std::optional<CellGrid<ElementSubset>> add_;
  std::optional<CellGrid<Element>> mul_;
};

}  // namespace

HyperringTable parse_hyperring(std::string_view text) { return Parser(text).run(); }

std::string serialize_hyperring(const HyperringTable& ring) {
  std::ostringstream out;
  const int n = ring.order();
  out << "hyperring " << (ring.name().empty() ? "unnamed" : ring.name()) << '\n';
  out << "elements:";
  for (const auto& label : ring.names()) out << ' ' << label;
  out << '\n';
  out << "zero: " << ring.name_of(ring.zero()) << '\n';
  if (ring.one()) out << "one: " << ring.name_of(*ring.one()) << '\n';
  out << "add:\n";
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      out << "  " << ring.name_of(x) << ' ' << ring.name_of(y) << " -> " << format_subset(ring, ring.add(x, y)) << '\n';
  out << "mul:\n";
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      out << "  " << ring.name_of(x) << ' ' << ring.name_of(y) << " -> " << ring.name_of(ring.mul(x, y)) << '\n';
  return out.str();
}

}  // namespace khr
