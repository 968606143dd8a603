#pragma once

#include <stdexcept>
#include <string>

namespace gessel {

// Base for everything thrown by this library, so callers can catch one type.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define GESSEL_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                     \
    public:                                                         \
        explicit Name(const std::string& what) : Error(what) {}     \
    }

GESSEL_DEFINE_ERROR(PreconditionViolation);
GESSEL_DEFINE_ERROR(NonIntegerResult);
GESSEL_DEFINE_ERROR(DuplicateAbscissa);
GESSEL_DEFINE_ERROR(SingularSystem);
GESSEL_DEFINE_ERROR(QueryExceedsTable);
GESSEL_DEFINE_ERROR(RegionMismatch);
GESSEL_DEFINE_ERROR(SizeCap);
GESSEL_DEFINE_ERROR(UnknownSuite);

#undef GESSEL_DEFINE_ERROR

} // namespace gessel
