#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pathhom {

enum class error_kind {
  loop_arrow,
  duplicate_arrow,
  syntax_error,
  unknown_vertex,
  unknown_fixture,
  dimension_mismatch,
  multisquare_present,
  not_in_span,
  level_mismatch,
  invalid_field,
  method_mismatch,
};

inline const char* to_string(error_kind k) {
  switch (k) {
    case error_kind::loop_arrow: return "LoopArrow";
    case error_kind::duplicate_arrow: return "DuplicateArrow";
    case error_kind::syntax_error: return "SyntaxError";
    case error_kind::unknown_vertex: return "UnknownVertex";
    case error_kind::unknown_fixture: return "UnknownFixture";
    case error_kind::dimension_mismatch: return "DimensionMismatch";
    case error_kind::multisquare_present: return "MultisquarePresent";
    case error_kind::not_in_span: return "NotInSpan";
    case error_kind::level_mismatch: return "LevelMismatch";
    case error_kind::invalid_field: return "InvalidField";
    case error_kind::method_mismatch: return "MethodMismatch";
  }
  return "Unknown";
}

/// Base exception for everything the library throws. The kind is stable and
/// meant for programmatic dispatch; the message is for humans.
class error : public std::runtime_error {
 public:
  error(error_kind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  error_kind kind() const noexcept { return kind_; }

 private:
  error_kind kind_;
};

class parse_error : public error {
 public:
  parse_error(error_kind kind, std::size_t line, const std::string& what)
      : error(kind, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Raised by operations that are only valid on multisquare-free digraphs.
class multisquare_error : public error {
 public:
  multisquare_error(std::size_t source, std::size_t target, const std::string& what)
      : error(error_kind::multisquare_present, what), source_(source), target_(target) {}

  std::size_t source() const noexcept { return source_; }
  std::size_t target() const noexcept { return target_; }

 private:
  std::size_t source_;
  std::size_t target_;
};

}  // namespace pathhom
