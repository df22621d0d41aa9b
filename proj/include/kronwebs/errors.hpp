#pragma once

#include <stdexcept>
#include <string>

namespace kronwebs {

// Every domain failure derives from Error so callers can catch one type.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define KRONWEBS_ERROR(Name)                     \
    struct Name : Error {                        \
        using Error::Error;                      \
    }

KRONWEBS_ERROR(DimensionMismatch);
KRONWEBS_ERROR(SingularMatrix);
KRONWEBS_ERROR(InvalidArgument);
KRONWEBS_ERROR(NotBisurjective);
KRONWEBS_ERROR(NotKronecker);
KRONWEBS_ERROR(NotMicroKronecker);
KRONWEBS_ERROR(NotSkew);
KRONWEBS_ERROR(InternalVerificationFailure);
KRONWEBS_ERROR(JacobiViolation);
KRONWEBS_ERROR(CocycleViolation);
KRONWEBS_ERROR(NotInvolution);
KRONWEBS_ERROR(NotAntiAutomorphism);
KRONWEBS_ERROR(GeneratorsDontSpan);
KRONWEBS_ERROR(NotInvariant);
KRONWEBS_ERROR(WrongPolyCount);
KRONWEBS_ERROR(DimensionIdentityFailure);
KRONWEBS_ERROR(NotAssociative);
KRONWEBS_ERROR(NotCommutative);
KRONWEBS_ERROR(NotUnital);
KRONWEBS_ERROR(NotWChain);
KRONWEBS_ERROR(ParseError);
KRONWEBS_ERROR(SchemaError);

#undef KRONWEBS_ERROR

}  // namespace kronwebs
