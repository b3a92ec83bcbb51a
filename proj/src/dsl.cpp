#include "tosc/dsl.hpp"

#include <cctype>
#include <optional>

namespace tosc {

ParseError::ParseError(std::size_t line, std::size_t column, std::string reason)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + reason),
      line_(line),
      column_(column),
      reason_(std::move(reason)) {}

bool Document::has_name(const std::string& name) const {
  return spaces.count(name) || funcs.count(name) || sets.count(name) || series.count(name);
}

const SpaceTree& Document::space_of(const std::string& name) const {
  if (auto it = spaces.find(name); it != spaces.end()) return it->second;
  if (auto it = funcs.find(name); it != funcs.end()) return spaces.at(it->second.space);
  if (auto it = sets.find(name); it != sets.end()) return spaces.at(it->second.space);
  if (auto it = series.find(name); it != series.end()) return spaces.at(it->second.space);
  throw std::out_of_range("unknown name '" + name + "'");
}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

class Parser {
 public:
  explicit Parser(std::string_view text, const Document* doc = nullptr) : text_(text), doc_(doc) {}

  struct Mark {
    std::size_t pos, line, column;
  };

  /// Position of the next token.
  Mark mark() {
    skip();
    return {pos_, line_, col_};
  }
  [[noreturn]] void fail(const Mark& m, const std::string& reason) const { throw ParseError(m.line, m.column, reason); }
  [[noreturn]] void fail(const std::string& reason) { fail(mark(), reason); }

  void skip() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip();
    return pos_ >= text_.size();
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'" + found());
  }

  /// Identifier or keyword at the cursor, without consuming it.
  std::string peek_word() {
    skip();
    std::size_t end = pos_;
    if (end < text_.size() && is_ident_start(text_[end])) {
      while (end < text_.size() && is_ident_char(text_[end])) ++end;
    }
    return std::string(text_.substr(pos_, end - pos_));
  }

  bool accept_word(std::string_view w) {
    if (peek_word() != w) return false;
    for (std::size_t i = 0; i < w.size(); ++i) advance();
    return true;
  }

  void expect_word(std::string_view w) {
    if (!accept_word(w)) fail("expected '" + std::string(w) + "'" + found());
  }

  std::string ident() {
    const std::string w = peek_word();
    if (w.empty()) fail("expected a name" + found());
    for (std::size_t i = 0; i < w.size(); ++i) advance();
    return w;
  }

  Rational rational() {
    skip();
    const Mark m = mark();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') advance();
    if (pos_ >= text_.size() || !is_digit(text_[pos_])) fail(m, "expected a rational" + found());
    while (pos_ < text_.size() && is_digit(text_[pos_])) advance();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      advance();
      while (pos_ < text_.size() && is_digit(text_[pos_])) advance();
    }
    try {
      return Rational::parse(text_.substr(start, pos_ - start));
    } catch (const std::invalid_argument& e) {
      fail(m, e.what());
    }
  }

  std::uint64_t count() {
    skip();
    const Mark m = mark();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) advance();
    if (start == pos_) fail(m, "expected a number" + found());
    return std::stoull(std::string(text_.substr(start, pos_ - start)));
  }

  // space := "pt" | "lim" "(" list ";" list ")" | name
  SpaceTree space() {
    const Mark m = mark();
    if (accept_word("pt")) return leaf();
    if (accept_word("lim")) {
      expect('(');
      SpaceTree::Children prefix, period;
      if (peek() != ';') {
        do prefix.push_back(space());
        while (accept(','));
      }
      expect(';');
      if (peek() != ')') {
        do period.push_back(space());
        while (accept(','));
      }
      expect(')');
      return limit(std::move(prefix), std::move(period));
    }
    const std::string name = peek_word();
    if (name.empty()) fail(m, "expected a space" + found());
    ident();
    if (!doc_ || !doc_->spaces.count(name)) fail(m, "unknown space '" + name + "'");
    return doc_->spaces.at(name);
  }

  // func := rat ["drift" rat] | "(" rat ";" list ";" list ["drift" rat] ")"
  FuncTree func(const SpaceTree& shape) {
    const Mark m = mark();
    if (!accept('(')) {
      const Rational v = rational();
      FuncTree out = constant(shape, v);
      if (shape.is_limit() && accept_word("drift")) {
        out = FuncTree(FuncLabel{v, rational()}, out.prefix(), out.period());
      }
      return out;
    }
    const Rational v = rational();
    expect(';');
    FuncTree::Children prefix, period;
    if (peek() != ';') {
      do {
        if (prefix.size() >= shape.prefix().size()) fail(mark(), shape_message("prefix", shape.prefix().size()));
        prefix.push_back(func(shape.prefix()[prefix.size()]));
      } while (accept(','));
    }
    if (prefix.size() != shape.prefix().size()) fail(m, shape_message("prefix", shape.prefix().size()));
    expect(';');
    if (peek() != ')' && peek_word() != "drift") {
      do {
        if (period.size() >= shape.period().size()) fail(mark(), shape_message("period", shape.period().size()));
        period.push_back(func(shape.period()[period.size()]));
      } while (accept(','));
    }
    if (period.size() != shape.period().size()) fail(m, shape_message("period", shape.period().size()));
    Rational drift(0);
    if (accept_word("drift")) {
      const Mark dm = mark();
      drift = rational();
      if (!shape.is_limit() && !drift.is_zero()) fail(dm, "drift on a point without a tail");
    }
    expect(')');
    return FuncTree(FuncLabel{v, drift}, std::move(prefix), std::move(period));
  }

  std::size_t bit() {
    skip();
    const Mark m = mark();
    if (accept('0')) return 0;
    if (accept('1')) return 1;
    fail(m, "expected 0 or 1" + found());
  }

  // set := bit | "(" bit ";" list ";" list ["|" c "." i ":" set, ...] ")"
  SubsetTree set(const SpaceTree& shape) {
    const Mark m = mark();
    if (!accept('(')) return SubsetTree::uniform(shape, bit() == 1);
    const bool member = bit() == 1;
    expect(';');
    SubsetTree::Children prefix, period;
    if (peek() != ';') {
      do {
        if (prefix.size() >= shape.prefix().size()) fail(mark(), shape_message("prefix", shape.prefix().size()));
        prefix.push_back(set(shape.prefix()[prefix.size()]));
      } while (accept(','));
    }
    if (prefix.size() != shape.prefix().size()) fail(m, shape_message("prefix", shape.prefix().size()));
    expect(';');
    if (peek() != ')' && peek() != '|') {
      do {
        if (period.size() >= shape.period().size()) fail(mark(), shape_message("period", shape.period().size()));
        period.push_back(set(shape.period()[period.size()]));
      } while (accept(','));
    }
    if (period.size() != shape.period().size()) fail(m, shape_message("period", shape.period().size()));
    std::vector<SubsetTree::Override> overrides;
    if (accept('|')) {
      do {
        const Mark om = mark();
        const std::uint64_t copy = count();
        expect('.');
        const std::uint64_t idx = count();
        if (idx >= shape.period().size()) fail(om, "override member out of range");
        for (const auto& o : overrides) {
          if (o.copy == copy && o.member == idx) fail(om, "duplicate override");
        }
        expect(':');
        overrides.push_back({copy, static_cast<std::size_t>(idx), set(shape.period()[idx])});
      } while (accept(','));
    }
    expect(')');
    return SubsetTree(member, std::move(prefix), std::move(period), std::move(overrides));
  }

  // series := "[" items [";" "tail" func "ratio" rat] "]"
  SeriesSpec series(const SpaceTree& shape) {
    expect('[');
    SeriesSpec out{shape, {}, std::nullopt};
    if (peek() != ']' && peek() != ';') {
      do out.terms.push_back(series_item(shape));
      while (accept(','));
    }
    if (accept(';')) {
      expect_word("tail");
      FuncTree g = series_item(shape);
      expect_word("ratio");
      out.tail = SeriesSpec::GeometricTail{std::move(g), rational()};
    }
    expect(']');
    return out;
  }

  Document document() {
    Document doc;
    doc_ = &doc;
    while (!at_end()) statement(doc);
    doc_ = nullptr;
    return doc;
  }

  void finish() {
    if (!at_end()) fail("unexpected trailing text" + found());
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else if ((static_cast<unsigned char>(text_[pos_]) & 0xC0) != 0x80) {
      ++col_;
    }
    ++pos_;
  }

  std::string found() {
    if (at_end()) return ", found end of input";
    return std::string(", found '") + text_[pos_] + "'";
  }

  static std::string shape_message(const char* part, std::size_t n) {
    return std::string("shape mismatch: expected ") + std::to_string(n) + " " + part + " entr" + (n == 1 ? "y" : "ies");
  }

  FuncTree series_item(const SpaceTree& shape) {
    const Mark m = mark();
    const std::string w = peek_word();
    if (w.empty()) return func(shape);
    ident();
    if (!doc_ || !doc_->funcs.count(w)) fail(m, "unknown func '" + w + "'");
    const FuncTree& f = doc_->funcs.at(w).func;
    if (!same_shape(f, shape)) fail(m, "shape mismatch: func '" + w + "' lives on another space");
    return f;
  }

  void define(Document& doc, const Mark& m, const std::string& name, Document::Kind kind) {
    if (doc.has_name(name)) fail(m, "duplicate name '" + name + "'");
    doc.order.push_back({kind, name, 0});
  }

  std::string space_ref(Document& doc) {
    const Mark m = mark();
    const std::string s = ident();
    if (!doc.spaces.count(s)) fail(m, "unknown space '" + s + "'");
    return s;
  }

  void statement(Document& doc) {
    const Mark m = mark();
    const std::string kw = peek_word();
    if (kw == "space") {
      expect_word("space");
      const Mark nm = mark();
      const std::string name = ident();
      expect('=');
      SpaceTree s = space();
      define(doc, nm, name, Document::Kind::Space);
      doc.spaces.emplace(name, std::move(s));
    } else if (kw == "func" || kw == "set" || kw == "series") {
      expect_word(kw);
      const Mark nm = mark();
      const std::string name = ident();
      expect_word("on");
      const std::string sp = space_ref(doc);
      expect('=');
      const SpaceTree& shape = doc.spaces.at(sp);
      if (kw == "func") {
        FuncTree f = func(shape);
        define(doc, nm, name, Document::Kind::Func);
        doc.funcs.emplace(name, Document::Func{sp, std::move(f)});
      } else if (kw == "set") {
        SubsetTree s = set(shape);
        define(doc, nm, name, Document::Kind::Set);
        doc.sets.emplace(name, Document::Set{sp, std::move(s)});
      } else {
        SeriesSpec s = series(shape);
        define(doc, nm, name, Document::Kind::Series);
        doc.series.emplace(name, Document::Series{sp, std::move(s)});
      }
    } else if (kw == "task") {
      expect_word("task");
      Document::Task t;
      t.line = line_;
      t.verb = ident();
      expect('(');
      t.args = raw_args();
      doc.order.push_back({Document::Kind::Task, "", doc.tasks.size()});
      doc.tasks.push_back(std::move(t));
    } else {
      fail(m, "expected 'space', 'func', 'set', 'series' or 'task'" + found());
    }
  }

  // Comma-separated raw arguments up to the matching ')', nesting respected.
  std::vector<std::string> raw_args() {
    std::vector<std::string> args;
    std::string cur;
    int depth = 0;
    auto push = [&] {
      const auto b = cur.find_first_not_of(" \t\r\n");
      const auto e = cur.find_last_not_of(" \t\r\n");
      args.push_back(b == std::string::npos ? "" : cur.substr(b, e - b + 1));
      cur.clear();
    };
    while (true) {
      if (pos_ >= text_.size()) fail("unterminated task arguments");
      const char c = text_[pos_];
      if (c == '#') {
        skip();
        continue;
      }
      advance();
      if (c == ')' && depth == 0) break;
      if (c == '(' || c == '[') ++depth;
      if (c == ')' || c == ']') --depth;
      if (c == ',' && depth == 0) {
        push();
      } else {
        cur += c;
      }
    }
    push();
    if (args.size() == 1 && args[0].empty()) args.clear();
    for (const auto& a : args) {
      if (a.empty()) fail("empty task argument");
    }
    return args;
  }

  std::string_view text_;
  const Document* doc_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

// The common value when every node of f carries it and no drift occurs
// below the root.
std::optional<Rational> uniform_value(const FuncTree& f, bool is_root = true) {
  if (!is_root && !f.label().drift.is_zero()) return std::nullopt;
  for (const auto* list : {&f.prefix(), &f.period()}) {
    for (const auto& c : *list) {
      const auto v = uniform_value(c, false);
      if (!v || *v != f.label().value) return std::nullopt;
    }
  }
  return f.label().value;
}

std::string func_text(const FuncTree& f, bool force_tuple) {
  if (!force_tuple) {
    if (const auto v = uniform_value(f)) {
      if (f.label().drift.is_zero()) return v->str();
      return v->str() + " drift " + f.label().drift.str();
    }
  }
  const bool has_drift = !f.label().drift.is_zero();
  std::string out = "(" + f.label().value.str() + " ;";
  for (std::size_t i = 0; i < f.prefix().size(); ++i) {
    out += (i == 0 ? " " : ", ") + func_text(f.prefix()[i], false);
  }
  out += " ;";
  for (std::size_t i = 0; i < f.period().size(); ++i) {
    const FuncTree& m = f.period()[i];
    // A bare last item on a limit would capture the tuple's drift.
    const bool last = i + 1 == f.period().size();
    const bool guard = last && has_drift && m.is_limit() && m.label().drift.is_zero();
    out += (i == 0 ? " " : ", ") + func_text(m, guard);
  }
  if (has_drift) out += " drift " + f.label().drift.str();
  return out + ")";
}

}  // namespace

SpaceTree parse_space(std::string_view text) {
  Parser p(text);
  SpaceTree s = p.space();
  p.finish();
  return s;
}

FuncTree parse_func(std::string_view text, const SpaceTree& space) {
  Parser p(text);
  FuncTree f = p.func(space);
  p.finish();
  return f;
}

SubsetTree parse_set(std::string_view text, const SpaceTree& space) {
  Parser p(text);
  SubsetTree s = p.set(space);
  p.finish();
  return s;
}

Document parse_document(std::string_view text) { return Parser(text).document(); }

std::string print_space(const SpaceTree& space) {
  if (space.is_leaf()) return "pt";
  std::string out = "lim(";
  for (std::size_t i = 0; i < space.prefix().size(); ++i) out += (i ? ", " : "") + print_space(space.prefix()[i]);
  out += ";";
  for (std::size_t i = 0; i < space.period().size(); ++i) out += (i ? ", " : " ") + print_space(space.period()[i]);
  return out + ")";
}

std::string print_func(const FuncTree& f) { return func_text(f, false); }

std::string print_set(const SubsetTree& s) {
  if (s.is_uniform()) return s.member() ? "1" : "0";
  std::string out = std::string("(") + (s.member() ? "1" : "0") + " ;";
  for (std::size_t i = 0; i < s.prefix().size(); ++i) out += (i ? ", " : " ") + print_set(s.prefix()[i]);
  out += " ;";
  for (std::size_t i = 0; i < s.period().size(); ++i) out += (i ? ", " : " ") + print_set(s.period()[i]);
  for (std::size_t i = 0; i < s.overrides().size(); ++i) {
    const auto& o = s.overrides()[i];
    out += (i ? ", " : " | ") + std::to_string(o.copy) + "." + std::to_string(o.member) + ": " + print_set(o.set);
  }
  return out + ")";
}

std::string print_series(const SeriesSpec& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.terms.size(); ++i) out += (i ? ", " : "") + print_func(s.terms[i]);
  if (s.tail) out += "; tail " + print_func(s.tail->shape) + " ratio " + s.tail->ratio.str();
  return out + "]";
}

std::string print_document(const Document& doc) {
  std::string out;
  for (const auto& e : doc.order) {
    switch (e.kind) {
      case Document::Kind::Space:
        out += "space " + e.name + " = " + print_space(doc.spaces.at(e.name));
        break;
      case Document::Kind::Func: {
        const auto& f = doc.funcs.at(e.name);
        out += "func " + e.name + " on " + f.space + " = " + print_func(f.func);
        break;
      }
      case Document::Kind::Set: {
        const auto& s = doc.sets.at(e.name);
        out += "set " + e.name + " on " + s.space + " = " + print_set(s.set);
        break;
      }
      case Document::Kind::Series: {
        const auto& s = doc.series.at(e.name);
        out += "series " + e.name + " on " + s.space + " = " + print_series(s.spec);
        break;
      }
      case Document::Kind::Task: {
        const auto& t = doc.tasks.at(e.task);
        out += "task " + t.verb + "(";
        for (std::size_t i = 0; i < t.args.size(); ++i) out += (i ? ", " : "") + t.args[i];
        out += ")";
        break;
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace tosc
