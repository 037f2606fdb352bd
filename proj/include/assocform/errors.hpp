#pragma once

#include <stdexcept>
#include <string>

namespace assocform {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "Error"; }
};

#define ASSOCFORM_ERROR(Name)                                                  \
    class Name : public Error {                                                \
    public:                                                                    \
        using Error::Error;                                                    \
        const char* kind() const noexcept override { return #Name; }           \
    }

ASSOCFORM_ERROR(SyntaxError);
ASSOCFORM_ERROR(InhomogeneousError);
ASSOCFORM_ERROR(VariableRangeError);
ASSOCFORM_ERROR(DimensionMismatch);
ASSOCFORM_ERROR(DimensionError);
ASSOCFORM_ERROR(DegreeError);
ASSOCFORM_ERROR(SumMismatch);
ASSOCFORM_ERROR(SingularMatrixError);
ASSOCFORM_ERROR(DegenerateFormError);
ASSOCFORM_ERROR(UnsupportedDegreeError);
ASSOCFORM_ERROR(UnsupportedPairError);
ASSOCFORM_ERROR(ZeroFormError);
ASSOCFORM_ERROR(VerificationFailure);

#undef ASSOCFORM_ERROR

} // namespace assocform
