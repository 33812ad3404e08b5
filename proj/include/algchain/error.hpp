#ifndef ALGCHAIN_ERROR_HPP
#define ALGCHAIN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace algchain {

/// Error codes for every failure mode the library reports. Each code maps to
/// one contract violation; the message carries the witness where one exists.
enum class Errc {
  CompositeP,
  ReducibleModulus,
  DegreeMismatch,
  DivisionByZero,
  FieldMismatch,
  EmptyAmbient,
  DimensionMismatch,
  AmbientMismatch,
  NotAssociative,
  IndexOutOfRange,
  UnsupportedOverRationals,
  BadPartition,
  TruncationTooSmall,
  NotClosed,
  NotAnIdeal,
  UnresolvedFactor,
  NoncommutativeDivisionFactor,
  NonPositive,
  BadInput,
  MissingDivisionHint,
  InconsistentBounds,
  BadDegree,
  StrategyInapplicable,
  NotDescending,
  MaximalityFail,
  GuardExceeded,
  ClassificationMismatch,
  ParseError,
  ValidationError,
  Internal,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::CompositeP: return "CompositeP";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::EmptyAmbient: return "EmptyAmbient";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::AmbientMismatch: return "AmbientMismatch";
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::UnsupportedOverRationals: return "UnsupportedOverRationals";
    case Errc::BadPartition: return "BadPartition";
    case Errc::TruncationTooSmall: return "TruncationTooSmall";
    case Errc::NotClosed: return "NotClosed";
    case Errc::NotAnIdeal: return "NotAnIdeal";
    case Errc::UnresolvedFactor: return "UnresolvedFactor";
    case Errc::NoncommutativeDivisionFactor: return "NoncommutativeDivisionFactor";
    case Errc::NonPositive: return "NonPositive";
    case Errc::BadInput: return "BadInput";
    case Errc::MissingDivisionHint: return "MissingDivisionHint";
    case Errc::InconsistentBounds: return "InconsistentBounds";
    case Errc::BadDegree: return "BadDegree";
    case Errc::StrategyInapplicable: return "StrategyInapplicable";
    case Errc::NotDescending: return "NotDescending";
    case Errc::MaximalityFail: return "MaximalityFail";
    case Errc::GuardExceeded: return "GuardExceeded";
    case Errc::ClassificationMismatch: return "ClassificationMismatch";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace algchain

#endif
