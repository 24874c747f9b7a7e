#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace srsgkit {

enum class ErrorKind {
  DuplicateEdge,
  SelfLoop,
  VertexOutOfRange,
  SizeExceeded,
  DegreeMismatch,
  NotConnected,
  UnknownName,
  ConstructionInvalid,
  MalformedHeader,
  TruncatedPayload,
  TrailingBits,
  BadHeader,
  BadSign,
  CountMismatch,
  ParseError,
  VacuousQuery,
  EmptyRange,
  Io,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library. `line` is 1-based when the error
// comes from a text format.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<int> line = std::nullopt, std::string source = {});

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<int> line() const noexcept { return line_; }
  const std::string& source() const noexcept { return source_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::optional<int> line_;
  std::string source_;
  std::string detail_;
};

}  // namespace srsgkit
