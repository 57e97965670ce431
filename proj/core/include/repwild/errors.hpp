#pragma once

#include <stdexcept>
#include <string>

namespace repwild {

enum class Errc {
  NonPrimeCharacteristic,
  ReducibleModulus,
  NoSuchRoot,
  FieldMismatch,
  NotSplit,
  UnsupportedCharacteristic,
  AlgebraMismatch,
  NotComposable,
  ResourceBudgetExceeded,
  WindowTooShort,
  OracleTooLarge,
  BadOrder,
  NotAutomorphism,
  CharacteristicMismatch,
  InvalidRestrictedData,
  EvenEll,
  BadOrderHypothesis,
  SchemaError,
  InternalInvariant,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

// Internal consistency checks that must never fire on valid inputs.
inline void check(bool cond, const std::string& msg) {
  if (!cond) fail(Errc::InternalInvariant, msg);
}

}  // namespace repwild
