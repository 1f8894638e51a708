#pragma once

#include <stdexcept>
#include <string>

namespace dimsurf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define DIMSURF_DEFINE_ERROR(Name)                       \
    struct Name : Error {                                \
        explicit Name(const std::string& msg = #Name)    \
            : Error(msg) {}                              \
    }

// surface_map
DIMSURF_DEFINE_ERROR(DanglingDart);
DIMSURF_DEFINE_ERROR(NotConnected);
DIMSURF_DEFINE_ERROR(BadInvolution);
DIMSURF_DEFINE_ERROR(NotACycle);
DIMSURF_DEFINE_ERROR(NotSimple);

// matchings
DIMSURF_DEFINE_ERROR(NonpositiveTemperature);
DIMSURF_DEFINE_ERROR(NoMatchingExists);
DIMSURF_DEFINE_ERROR(EmptyPartition);

// kasteleyn
DIMSURF_DEFINE_ERROR(OddVertexCount);
DIMSURF_DEFINE_ERROR(NotKasteleyn);
DIMSURF_DEFINE_ERROR(NotACocycle);

// spin forms
DIMSURF_DEFINE_ERROR(DegenerateForm);

// pfaffian engine
DIMSURF_DEFINE_ERROR(OddSize);
DIMSURF_DEFINE_ERROR(NotSkew);
DIMSURF_DEFINE_ERROR(IdentityViolated);
DIMSURF_DEFINE_ERROR(ZeroPartition);

// grassmann oracle
DIMSURF_DEFINE_ERROR(MismatchedAlgebra);
DIMSURF_DEFINE_ERROR(OddDimension);
DIMSURF_DEFINE_ERROR(TooLarge);

// file format
DIMSURF_DEFINE_ERROR(SyntaxError);
DIMSURF_DEFINE_ERROR(ValidationError);

#undef DIMSURF_DEFINE_ERROR

}  // namespace dimsurf
