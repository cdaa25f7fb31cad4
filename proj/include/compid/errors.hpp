#pragma once

#include <stdexcept>
#include <string>

namespace compid {

// Base of every library error. The CLI maps these to exit code 2 unless a
// subclass says otherwise.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define COMPID_DEFINE_ERROR(Name)          \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  };

COMPID_DEFINE_ERROR(MalformedInput)
COMPID_DEFINE_ERROR(InvalidEdge)
COMPID_DEFINE_ERROR(NoExchange)
COMPID_DEFINE_ERROR(NotSquare)
COMPID_DEFINE_ERROR(NotUnimodular)
COMPID_DEFINE_ERROR(InconsistentSystem)
COMPID_DEFINE_ERROR(NotStronglyConnected)
COMPID_DEFINE_ERROR(NotExpectedDimension)
COMPID_DEFINE_ERROR(TooManyEdges)
COMPID_DEFINE_ERROR(Disconnected)
COMPID_DEFINE_ERROR(BasisNotFound)
COMPID_DEFINE_ERROR(LimitExceeded)
COMPID_DEFINE_ERROR(FieldCharacteristicTooSmall)

#undef COMPID_DEFINE_ERROR

}  // namespace compid
