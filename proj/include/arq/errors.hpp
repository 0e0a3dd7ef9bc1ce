#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arq {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define ARQ_ERROR(name)                         \
    class name : public Error {                 \
    public:                                     \
        using Error::Error;                     \
    }

ARQ_ERROR(UnsupportedType);
ARQ_ERROR(ParseError);
ARQ_ERROR(NotARoot);
ARQ_ERROR(NotReduced);
ARQ_ERROR(RootNotInWord);
ARQ_ERROR(NotASink);
ARQ_ERROR(NotApplicable);
ARQ_ERROR(WellDefinednessViolation);
ARQ_ERROR(FixtureMissing);

#undef ARQ_ERROR

class ClassTooLarge : public Error {
public:
    explicit ClassTooLarge(std::size_t count)
        : Error("commutation class exceeds cap (" + std::to_string(count) + " members seen)"),
          count(count) {}
    std::size_t count;
};

class EnumerationCapExceeded : public Error {
public:
    explicit EnumerationCapExceeded(std::size_t cap)
        : Error("enumeration cap of " + std::to_string(cap) + " exceeded"), cap(cap) {}
    std::size_t cap;
};

}  // namespace arq
