#pragma once

#include <stdexcept>
#include <string>

namespace relpolicy {

/// Stable error codes shared across the library. CLI exit codes are derived
/// from these: ConfigError -> 2, NonFinite* -> 3, everything else -> 1.
enum class Err {
  BadSignature,
  BadActionArity,
  MissingNoop,
  UnknownType,
  TypeMismatch,
  UnknownObject,
  MixedLanguage,
  ShapeMismatch,
  AllMasked,
  BadSegmentIndex,
  NotScalar,
  NonFiniteGrad,
  NonFiniteLoss,
  LabelNotLegal,
  IllegalAction,
  NoLegalAction,
  ConfigError,
  ChecksumMismatch,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::BadSignature: return "BadSignature";
    case Err::BadActionArity: return "BadActionArity";
    case Err::MissingNoop: return "MissingNoop";
    case Err::UnknownType: return "UnknownType";
    case Err::TypeMismatch: return "TypeMismatch";
    case Err::UnknownObject: return "UnknownObject";
    case Err::MixedLanguage: return "MixedLanguage";
    case Err::ShapeMismatch: return "ShapeMismatch";
    case Err::AllMasked: return "AllMasked";
    case Err::BadSegmentIndex: return "BadSegmentIndex";
    case Err::NotScalar: return "NotScalar";
    case Err::NonFiniteGrad: return "NonFiniteGrad";
    case Err::NonFiniteLoss: return "NonFiniteLoss";
    case Err::LabelNotLegal: return "LabelNotLegal";
    case Err::IllegalAction: return "IllegalAction";
    case Err::NoLegalAction: return "NoLegalAction";
    case Err::ConfigError: return "ConfigError";
    case Err::ChecksumMismatch: return "ChecksumMismatch";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

}  // namespace relpolicy
