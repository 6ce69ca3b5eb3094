#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sesq {

enum class ErrorKind {
  NotPrime,
  ReducibleModulus,
  BadDescriptor,
  NoEmbedding,
  DivisionByZero,
  ContextMismatch,
  NotAssociative,
  BadUnit,
  NotInvolution,
  NotAGroup,
  BadDimension,
  NotAModule,
  AlgebraMismatch,
  NotSesquilinear,
  NotInvariant,
  NotAGroupRing,
  NoUnimodularFound,
  NotReflexive,
  NotHermitian,
  NotAMorphism,
  NotAnIsometry,
  NotInvertible,
  NotUnimodular,
  EnumTooLarge,
  InfiniteField,
  RadicalNotStable,
  NotIsomorphicToQ0,
  CharacteristicTwo,
  ParseError,
};

constexpr std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::BadDescriptor: return "BadDescriptor";
    case ErrorKind::NoEmbedding: return "NoEmbedding";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::BadUnit: return "BadUnit";
    case ErrorKind::NotInvolution: return "NotInvolution";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::BadDimension: return "BadDimension";
    case ErrorKind::NotAModule: return "NotAModule";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::NotSesquilinear: return "NotSesquilinear";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::NotAGroupRing: return "NotAGroupRing";
    case ErrorKind::NoUnimodularFound: return "NoUnimodularFound";
    case ErrorKind::NotReflexive: return "NotReflexive";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotAMorphism: return "NotAMorphism";
    case ErrorKind::NotAnIsometry: return "NotAnIsometry";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::EnumTooLarge: return "EnumTooLarge";
    case ErrorKind::InfiniteField: return "InfiniteField";
    case ErrorKind::RadicalNotStable: return "RadicalNotStable";
    case ErrorKind::NotIsomorphicToQ0: return "NotIsomorphicToQ0";
    case ErrorKind::CharacteristicTwo: return "CharacteristicTwo";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure in the library is reported through this type; `kind()`
/// is the stable, machine-readable part.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) +
                           (detail.empty() ? "" : ": " + detail)),
        kind_(kind) {}
  explicit Error(ErrorKind kind) : Error(kind, "") {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sesq
