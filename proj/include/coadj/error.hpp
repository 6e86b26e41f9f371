#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace coadj {

// Base of everything the library throws on bad input or a failed internal check.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define COADJ_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                    \
    public:                                                        \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

COADJ_DEFINE_ERROR(InvalidDimension);
COADJ_DEFINE_ERROR(NotSubset);
COADJ_DEFINE_ERROR(NotMember);
COADJ_DEFINE_ERROR(NotMaximal);
COADJ_DEFINE_ERROR(InvalidInner);
COADJ_DEFINE_ERROR(UnsupportedIdealShape);
COADJ_DEFINE_ERROR(FieldMismatch);
COADJ_DEFINE_ERROR(NotCanonicalPair);
COADJ_DEFINE_ERROR(UnsupportedColumn);
COADJ_DEFINE_ERROR(NotInA);
COADJ_DEFINE_ERROR(LemmaFailure);
COADJ_DEFINE_ERROR(InvalidC);
COADJ_DEFINE_ERROR(ClassificationMismatch);
COADJ_DEFINE_ERROR(NotSubregular);
COADJ_DEFINE_ERROR(InvalidPrime);

#undef COADJ_DEFINE_ERROR

// index() is the 1-based position of the rejected choice.
class InvalidChoice : public Error {
public:
    InvalidChoice(int index, const std::string& what)
        : Error("InvalidChoice at position " + std::to_string(index) + ": " + what), index_(index) {}
    int index() const { return index_; }

private:
    int index_;
};

class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::uint64_t partial, const std::string& what)
        : Error("BudgetExceeded after " + std::to_string(partial) + " states: " + what), partial_(partial) {}
    std::uint64_t partial() const { return partial_; }

private:
    std::uint64_t partial_;
};

} // namespace coadj
