#include "gfgcanon/hoa.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

namespace gfgcanon {

namespace {

struct Cursor {
  const std::string& text;
  size_t pos = 0;
  int line = 1;
  int col = 1;

  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  char get() {
    char c = text[pos++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw HoaParseError(line, col, what);
  }
  void skip_space() {
    while (!eof()) {
      char c = peek();
      if (c == '/' && pos + 1 < text.size() && text[pos + 1] == '*') {
        get();
        get();
        while (!eof() && !(peek() == '*' && pos + 1 < text.size() &&
                           text[pos + 1] == '/'))
          get();
        if (eof()) fail("unterminated comment");
        get();
        get();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        get();
      } else {
        break;
      }
    }
  }
};

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

// Header name including the trailing ':' (e.g. "States:"), or a bare token.
std::string read_token(Cursor& cur) {
  cur.skip_space();
  if (cur.eof()) cur.fail("unexpected end of input");
  std::string out;
  if (!ident_char(cur.peek())) cur.fail("unexpected character");
  while (!cur.eof() && ident_char(cur.peek())) out += cur.get();
  if (!cur.eof() && cur.peek() == ':') out += cur.get();
  return out;
}

int read_int(Cursor& cur) {
  cur.skip_space();
  if (cur.eof() || !std::isdigit(static_cast<unsigned char>(cur.peek())))
    cur.fail("expected a number");
  long v = 0;
  while (!cur.eof() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    v = v * 10 + (cur.get() - '0');
    if (v > 1'000'000'000) cur.fail("number too large");
  }
  return static_cast<int>(v);
}

std::string read_quoted(Cursor& cur) {
  cur.skip_space();
  if (cur.eof() || cur.peek() != '"') cur.fail("expected a quoted string");
  cur.get();
  std::string out;
  while (!cur.eof() && cur.peek() != '"') {
    char c = cur.get();
    if (c == '\\') {
      if (cur.eof()) cur.fail("unterminated string");
      out += cur.get();
    } else {
      out += c;
    }
  }
  if (cur.eof()) cur.fail("unterminated string");
  cur.get();
  return out;
}

void quote_to(std::ostream& os, const std::string& s) {
  os << '"';
  for (char c : s) {
    if (c == '"' || c == '\\') os << '\\';
    os << c;
  }
  os << '"';
}

}  // namespace

TncwAutomaton parse_hoa(const std::string& text) {
  Cursor cur{text};

  if (read_token(cur) != "HOA:") cur.fail("expected 'HOA: v1'");
  if (read_token(cur) != "v1") cur.fail("only HOA v1 is supported");

  std::optional<int> num_states, start;
  std::optional<std::vector<std::string>> ap;
  bool acceptance_ok = false;
  bool saw_acceptance = false;

  for (;;) {
    cur.skip_space();
    std::string tok = read_token(cur);
    if (tok == "--BODY--") break;
    if (tok == "States:") {
      num_states = read_int(cur);
    } else if (tok == "Start:") {
      start = read_int(cur);
    } else if (tok == "AP:") {
      int n = read_int(cur);
      std::vector<std::string> letters;
      for (int i = 0; i < n; ++i) letters.push_back(read_quoted(cur));
      ap = letters;
    } else if (tok == "acc-name:") {
      std::string name = read_token(cur);
      if (name != "co-Buchi")
        throw HoaSemanticError("unsupported acceptance name '" + name +
                               "' (only co-Buchi)");
    } else if (tok == "Acceptance:") {
      saw_acceptance = true;
      int sets = read_int(cur);
      cur.skip_space();
      std::string formula;
      while (!cur.eof() && cur.peek() != '\n') formula += cur.get();
      while (!formula.empty() && std::isspace(static_cast<unsigned char>(
                                     formula.back())))
        formula.pop_back();
      acceptance_ok = sets == 1 && formula == "Fin(0)";
      if (!acceptance_ok)
        throw HoaSemanticError("unsupported acceptance '" +
                               std::to_string(sets) + " " + formula +
                               "' (only 1 Fin(0))");
    } else if (tok == "name:") {
      read_quoted(cur);  // display label, not part of the value
    } else if (tok == "tool:" || tok == "properties:") {
      while (!cur.eof() && cur.peek() != '\n') cur.get();
    } else {
      cur.fail("unknown header '" + tok + "'");
    }
  }

  if (!num_states) throw HoaSemanticError("missing States: header");
  if (!start) throw HoaSemanticError("missing Start: header");
  if (!ap) throw HoaSemanticError("missing AP: header");
  if (!saw_acceptance) throw HoaSemanticError("missing Acceptance: header");

  TncwAutomaton a;
  a.alphabet.letters = *ap;
  a.num_states = *num_states;
  a.initial = *start;

  int current_state = -1;
  for (;;) {
    cur.skip_space();
    if (cur.eof()) cur.fail("missing --END--");
    if (cur.peek() == '[') {
      if (current_state < 0) cur.fail("edge before any State: line");
      cur.get();
      int letter = read_int(cur);
      cur.skip_space();
      if (cur.eof() || cur.peek() != ']') cur.fail("expected ']'");
      cur.get();
      int dst = read_int(cur);
      Mark mark = Mark::NonAlpha;
      cur.skip_space();
      if (!cur.eof() && cur.peek() == '{') {
        cur.get();
        int set = read_int(cur);
        if (set != 0)
          throw HoaSemanticError("edge refers to acceptance set " +
                                 std::to_string(set) + " (only {0} exists)");
        cur.skip_space();
        if (cur.eof() || cur.peek() != '}') cur.fail("expected '}'");
        cur.get();
        mark = Mark::Alpha;
      }
      if (letter >= a.alphabet.size())
        throw HoaSemanticError("letter index " + std::to_string(letter) +
                               " out of range on an edge of state " +
                               std::to_string(current_state));
      a.transitions.push_back({current_state, letter, dst, mark});
      continue;
    }
    std::string tok = read_token(cur);
    if (tok == "--END--") break;
    if (tok != "State:") cur.fail("expected 'State:', an edge, or '--END--'");
    current_state = read_int(cur);
    cur.skip_space();
    if (!cur.eof() && cur.peek() == '"') read_quoted(cur);  // state label
    cur.skip_space();
    if (!cur.eof() && cur.peek() == '{')
      throw HoaSemanticError("state-based acceptance set on state " +
                             std::to_string(current_state) +
                             " (only transition-based acceptance)");
  }

  size_t before = a.transitions.size();
  a.canonicalize();
  if (a.transitions.size() != before)
    throw HoaSemanticError("duplicate edge in the body");

  std::vector<std::string> violations = validate(a);
  if (!violations.empty()) {
    std::string msg = "not a valid total tNCW:";
    for (const std::string& v : violations) msg += " [" + v + "]";
    throw HoaSemanticError(msg);
  }
  return a;
}

std::string write_hoa(const TncwAutomaton& a) {
  require_valid(a);
  std::ostringstream os;
  os << "HOA: v1\n";
  os << "States: " << a.num_states << "\n";
  os << "Start: " << a.initial << "\n";
  os << "AP: " << a.alphabet.size();
  for (const std::string& l : a.alphabet.letters) {
    os << ' ';
    quote_to(os, l);
  }
  os << "\n";
  os << "acc-name: co-Buchi\n";
  os << "Acceptance: 1 Fin(0)\n";
  os << "--BODY--\n";
  for (int q = 0; q < a.num_states; ++q) {
    os << "State: " << q << "\n";
    for (int s = 0; s < a.alphabet.size(); ++s)
      for (const Transition& t : a.successors(q, s)) {
        os << '[' << t.letter << "] " << t.dst;
        if (t.mark == Mark::Alpha) os << " {0}";
        os << "\n";
      }
  }
  os << "--END--\n";
  return os.str();
}

std::string to_dot(const TncwAutomaton& a) {
  require_valid(a);
  std::ostringstream os;
  os << "digraph ";
  quote_to(os, a.name.empty() ? std::string("tNCW") : a.name);
  os << " {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=circle];\n";
  os << "  __init [shape=point, style=invis];\n";
  os << "  __init -> q" << a.initial << ";\n";
  for (int q = 0; q < a.num_states; ++q) os << "  q" << q << ";\n";
  for (const Transition& t : a.transitions) {
    os << "  q" << t.src << " -> q" << t.dst << " [label=";
    quote_to(os, a.alphabet.letters[t.letter]);
    if (t.mark == Mark::Alpha) os << ", style=dashed";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace gfgcanon
