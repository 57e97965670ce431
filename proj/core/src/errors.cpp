#include "repwild/errors.hpp"

namespace repwild {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::NoSuchRoot: return "NoSuchRoot";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::NotSplit: return "NotSplit";
    case Errc::UnsupportedCharacteristic: return "UnsupportedCharacteristic";
    case Errc::AlgebraMismatch: return "AlgebraMismatch";
    case Errc::NotComposable: return "NotComposable";
    case Errc::ResourceBudgetExceeded: return "ResourceBudgetExceeded";
    case Errc::WindowTooShort: return "WindowTooShort";
    case Errc::OracleTooLarge: return "OracleTooLarge";
    case Errc::BadOrder: return "BadOrder";
    case Errc::NotAutomorphism: return "NotAutomorphism";
    case Errc::CharacteristicMismatch: return "CharacteristicMismatch";
    case Errc::InvalidRestrictedData: return "InvalidRestrictedData";
    case Errc::EvenEll: return "EvenEll";
    case Errc::BadOrderHypothesis: return "BadOrderHypothesis";
    case Errc::SchemaError: return "SchemaError";
    case Errc::InternalInvariant: return "InternalInvariant";
  }
  return "UnknownError";
}

}  // namespace repwild
