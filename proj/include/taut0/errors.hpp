#pragma once

#include <stdexcept>
#include <string>

namespace taut0 {

// Input/domain error categories. The CLI maps all of these to exit code 2;
// they are distinct from failed verification checks (exit code 1).
enum class Errc {
  InvalidDegree,
  ZeroMonodromy,
  SumNotZero,
  DomainError,
  ArityMismatch,
  DuplicateSymbols,
  LimitExceeded,
  UnstablePair,
  UnstableInput,
  NoBaseCase,
  Overflow,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidDegree: return "InvalidDegree";
    case Errc::ZeroMonodromy: return "ZeroMonodromy";
    case Errc::SumNotZero: return "SumNotZero";
    case Errc::DomainError: return "DomainError";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::DuplicateSymbols: return "DuplicateSymbols";
    case Errc::LimitExceeded: return "LimitExceeded";
    case Errc::UnstablePair: return "UnstablePair";
    case Errc::UnstableInput: return "UnstableInput";
    case Errc::NoBaseCase: return "NoBaseCase";
    case Errc::Overflow: return "Overflow";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace taut0
