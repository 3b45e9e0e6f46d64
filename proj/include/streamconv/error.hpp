#pragma once

#include <stdexcept>
#include <string>

namespace streamconv {

enum class ErrCode {
  InvalidArgument,
  InputTooShort,
  ChannelMismatch,
  CycleDetected,
  DanglingNode,
  RateMismatchAtSum,
  MalformedGraph,
  NotCausal,
  PaddingNotStreamable,
  InternalNonIntegerDelay,
  BufferNotMultipleOfRatio,
  LengthNotMultipleOfRatio,
  ChunkTooSmall,
  LengthMismatch,
  ZeroEnergy,
  VersionMismatch,
  CorruptBlob,
  SchemaError,
  UnsupportedFormat,
  MalformedHeader,
};

inline const char* to_string(ErrCode c) {
  switch (c) {
    case ErrCode::InvalidArgument:          return "InvalidArgument";
    case ErrCode::InputTooShort:            return "InputTooShort";
    case ErrCode::ChannelMismatch:          return "ChannelMismatch";
    case ErrCode::CycleDetected:            return "CycleDetected";
    case ErrCode::DanglingNode:             return "DanglingNode";
    case ErrCode::RateMismatchAtSum:        return "RateMismatchAtSum";
    case ErrCode::MalformedGraph:           return "MalformedGraph";
    case ErrCode::NotCausal:                return "NotCausal";
    case ErrCode::PaddingNotStreamable:     return "PaddingNotStreamable";
    case ErrCode::InternalNonIntegerDelay:  return "InternalNonIntegerDelay";
    case ErrCode::BufferNotMultipleOfRatio: return "BufferNotMultipleOfRatio";
    case ErrCode::LengthNotMultipleOfRatio: return "LengthNotMultipleOfRatio";
    case ErrCode::ChunkTooSmall:            return "ChunkTooSmall";
    case ErrCode::LengthMismatch:           return "LengthMismatch";
    case ErrCode::ZeroEnergy:               return "ZeroEnergy";
    case ErrCode::VersionMismatch:          return "VersionMismatch";
    case ErrCode::CorruptBlob:              return "CorruptBlob";
    case ErrCode::SchemaError:              return "SchemaError";
    case ErrCode::UnsupportedFormat:        return "UnsupportedFormat";
    case ErrCode::MalformedHeader:          return "MalformedHeader";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrCode code, const std::string& msg)
      : std::runtime_error(std::string(to_string(code)) + ": " + msg), code_(code) {}

  ErrCode code() const noexcept { return code_; }

 private:
  ErrCode code_;
};

[[noreturn]] inline void fail(ErrCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace streamconv
