#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace equator {

enum class Errc {
  SelfLoop,
  VertexOutOfRange,
  NotAnEdge,
  Disconnected,
  Acyclic,
  NotACycle,
  NotEquatorial,
  NotAPartition,
  NoSingletonPart,
  InvalidParameters,
  InvalidJ,
  NotPrimePower,
  Unsupported,
  UnsupportedDelta,
  NoKnownMooreGraph,
  NoKnownCage,
  OutOfCharacterizedRange,
  ParseError,
  SpecTooLarge,
  UnknownTheorem,
};

std::string_view errc_name(Errc code);

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI) can branch on the kind without parsing messages.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

inline std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::NotAnEdge: return "NotAnEdge";
    case Errc::Disconnected: return "Disconnected";
    case Errc::Acyclic: return "Acyclic";
    case Errc::NotACycle: return "NotACycle";
    case Errc::NotEquatorial: return "NotEquatorial";
    case Errc::NotAPartition: return "NotAPartition";
    case Errc::NoSingletonPart: return "NoSingletonPart";
    case Errc::InvalidParameters: return "InvalidParameters";
    case Errc::InvalidJ: return "InvalidJ";
    case Errc::NotPrimePower: return "NotPrimePower";
    case Errc::Unsupported: return "Unsupported";
    case Errc::UnsupportedDelta: return "UnsupportedDelta";
    case Errc::NoKnownMooreGraph: return "NoKnownMooreGraph";
    case Errc::NoKnownCage: return "NoKnownCage";
    case Errc::OutOfCharacterizedRange: return "OutOfCharacterizedRange";
    case Errc::ParseError: return "ParseError";
    case Errc::SpecTooLarge: return "SpecTooLarge";
    case Errc::UnknownTheorem: return "UnknownTheorem";
  }
  return "Unknown";
}

}  // namespace equator
