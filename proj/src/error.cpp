#include "srsgkit/error.hpp"

namespace srsgkit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::SizeExceeded: return "SizeExceeded";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::ConstructionInvalid: return "ConstructionInvalid";
    case ErrorKind::MalformedHeader: return "MalformedHeader";
    case ErrorKind::TruncatedPayload: return "TruncatedPayload";
    case ErrorKind::TrailingBits: return "TrailingBits";
    case ErrorKind::BadHeader: return "BadHeader";
    case ErrorKind::BadSign: return "BadSign";
    case ErrorKind::CountMismatch: return "CountMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::VacuousQuery: return "VacuousQuery";
    case ErrorKind::EmptyRange: return "EmptyRange";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

namespace {

std::string compose(ErrorKind kind, const std::string& message,
                    const std::optional<int>& line, const std::string& source) {
  std::string out(to_string(kind));
  if (!source.empty() || line) {
    out += " (";
    out += source.empty() ? std::string("input") : source;
    if (line) out += ":" + std::to_string(*line);
    out += ")";
  }
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message, std::optional<int> line,
             std::string source)
    : std::runtime_error(compose(kind, message, line, source)),
      kind_(kind),
      line_(line),
      source_(std::move(source)),
      detail_(message) {}

}  // namespace srsgkit
