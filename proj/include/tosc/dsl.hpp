#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tosc/constructions.hpp"

namespace tosc {

/// Syntax error, unknown reference, shape mismatch or malformed rational,
/// located at a 1-based line and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string reason);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string reason_;
};

/// A parsed text of space, func, set, series and task definitions.
struct Document {
  enum class Kind { Space, Func, Set, Series, Task };
  struct Entry {
    Kind kind;
    std::string name;  // empty for tasks
    std::size_t task = 0;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  struct Func {
    std::string space;
    FuncTree func;
    friend bool operator==(const Func&, const Func&) = default;
  };
  struct Set {
    std::string space;
    SubsetTree set;
    friend bool operator==(const Set&, const Set&) = default;
  };
  struct Series {
    std::string space;
    SeriesSpec spec;
    friend bool operator==(const Series&, const Series&) = default;
  };
  struct Task {
    std::string verb;
    std::vector<std::string> args;
    std::size_t line = 0;
    friend bool operator==(const Task& a, const Task& b) { return a.verb == b.verb && a.args == b.args; }
  };

  std::vector<Entry> order;
  std::map<std::string, SpaceTree> spaces;
  std::map<std::string, Func> funcs;
  std::map<std::string, Set> sets;
  std::map<std::string, Series> series;
  std::vector<Task> tasks;

  bool has_name(const std::string& name) const;
  /// Throws std::out_of_range for unknown names.
  const SpaceTree& space_of(const std::string& name) const;

  friend bool operator==(const Document&, const Document&) = default;
};

Document parse_document(std::string_view text);
std::string print_document(const Document& doc);

/// Single values. Functions and sets are read against a space; a trailing
/// `drift` after a bare value binds to the innermost limit it can apply to.
SpaceTree parse_space(std::string_view text);
FuncTree parse_func(std::string_view text, const SpaceTree& space);
SubsetTree parse_set(std::string_view text, const SpaceTree& space);

std::string print_space(const SpaceTree& space);
std::string print_func(const FuncTree& f);
std::string print_set(const SubsetTree& s);
std::string print_series(const SeriesSpec& s);

}  // namespace tosc
