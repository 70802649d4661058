#pragma once

#include <stdexcept>
#include <string>

namespace wd {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define WD_ERROR_TYPE(Name) \
    struct Name : Error { explicit Name(const std::string& what) : Error(#Name ": " + what) {} }

WD_ERROR_TYPE(SingularMatrix);
WD_ERROR_TYPE(NotUnipotent);
WD_ERROR_TYPE(NotNilpotent);
WD_ERROR_TYPE(NonSplitSpectrum);
WD_ERROR_TYPE(DimensionMismatch);
WD_ERROR_TYPE(DegreeBudgetExceeded);
WD_ERROR_TYPE(NotInGroup);
WD_ERROR_TYPE(InvalidGroup);
WD_ERROR_TYPE(ZeroScale);
WD_ERROR_TYPE(NotURFS);
WD_ERROR_TYPE(BudgetExhausted);
WD_ERROR_TYPE(InvalidModule);
WD_ERROR_TYPE(NotFound);
WD_ERROR_TYPE(InvalidField);
WD_ERROR_TYPE(ParseError);

#undef WD_ERROR_TYPE

}
