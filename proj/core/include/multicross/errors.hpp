#pragma once

#include <stdexcept>
#include <string>

namespace multicross {

// Every failure the library can report, in one enum so the CLI can map
// error classes to exit codes without string matching.
enum class Errc {
  // diagram / MPD parsing
  malformed_line,
  edge_used_once,
  edge_used_thrice,
  bad_level_permutation,
  non_planar,
  disconnected,
  // orientation
  not_bipartite,
  even_order_crossing,
  // decompose / seifert / alexander
  even_order,
  not_oriented,
  non_integer_genus,
  // bounds
  denominator_nonpositive,
  inconsistent_bounds,
  unsupported_parameter,
  // catalog
  missing_column,
  bad_numeric,
  duplicate_name,
  // misc
  io_error,
  internal,
};

// True for errors caused by malformed input files rather than by asking a
// mathematically impossible question of a valid diagram.
inline bool is_input_error(Errc c) {
  switch (c) {
    case Errc::malformed_line:
    case Errc::edge_used_once:
    case Errc::edge_used_thrice:
    case Errc::bad_level_permutation:
    case Errc::non_planar:
    case Errc::disconnected:
    case Errc::missing_column:
    case Errc::bad_numeric:
    case Errc::duplicate_name:
    case Errc::io_error:
      return true;
    default:
      return false;
  }
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message, int line = 0, int column = 0)
      : std::runtime_error(std::move(message)), code_(code), line_(line), column_(column) {}

  Errc code() const { return code_; }
  int line() const { return line_; }      // 1-based, 0 = not applicable
  int column() const { return column_; }  // 1-based, 0 = not applicable

 private:
  Errc code_;
  int line_;
  int column_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message, int line = 0, int column = 0) {
  throw Error(code, message, line, column);
}

}  // namespace multicross
