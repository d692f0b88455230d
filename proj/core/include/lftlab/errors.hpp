#pragma once

#include <stdexcept>
#include <string>

namespace lftlab {

class LftError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define LFTLAB_ERROR(Name)                      \
  class Name : public LftError {                \
   public:                                      \
    explicit Name(const std::string& what)      \
        : LftError(#Name ": " + what) {}        \
  }

LFTLAB_ERROR(NonConvexInput);
LFTLAB_ERROR(NonConvexSlice);
LFTLAB_ERROR(DegenerateGrid);
LFTLAB_ERROR(InvalidK);
LFTLAB_ERROR(OutOfRangeDual);
LFTLAB_ERROR(ZeroSpacing);
LFTLAB_ERROR(IndexOutOfRange);
LFTLAB_ERROR(NotPowerOfTwo);
LFTLAB_ERROR(MalformedState);
LFTLAB_ERROR(EmptyAcceptance);
LFTLAB_ERROR(AllZeroValues);
LFTLAB_ERROR(ZeroXi);
LFTLAB_ERROR(ParseError);
LFTLAB_ERROR(DimensionCap);

#undef LFTLAB_ERROR

}  // namespace lftlab
