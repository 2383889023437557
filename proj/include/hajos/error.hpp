#pragma once

#include <stdexcept>
#include <string>

namespace hajos {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define HAJOS_DEFINE_ERROR(Name)            \
  class Name : public Error {               \
   public:                                  \
    explicit Name(const std::string& what)  \
        : Error(#Name ": " + what) {}       \
  }

HAJOS_DEFINE_ERROR(EndpointOutOfRange);
HAJOS_DEFINE_ERROR(LoopEdge);
HAJOS_DEFINE_ERROR(MalformedGraph6);
HAJOS_DEFINE_ERROR(OrderTooLarge);
HAJOS_DEFINE_ERROR(OrderMismatch);
HAJOS_DEFINE_ERROR(OrderTooLargeForOracle);
HAJOS_DEFINE_ERROR(OrderTooLargeForExact);
HAJOS_DEFINE_ERROR(InvalidParameters);
HAJOS_DEFINE_ERROR(ParityError);
HAJOS_DEFINE_ERROR(InputSize);
HAJOS_DEFINE_ERROR(TooManyColorings);
HAJOS_DEFINE_ERROR(IncompleteAssignment);
HAJOS_DEFINE_ERROR(MalformedDimacs);

#undef HAJOS_DEFINE_ERROR

}  // namespace hajos
