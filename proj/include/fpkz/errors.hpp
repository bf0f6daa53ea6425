#ifndef FPKZ_ERRORS_HPP
#define FPKZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fpkz {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroInverse : Error {
    ZeroInverse() : Error("inverse of zero residue") {}
};

struct DomainError : Error {
    using Error::Error;
};

struct ArityMismatch : Error {
    using Error::Error;
};

struct ModulusMismatch : Error {
    using Error::Error;
};

struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("leading term of the zero polynomial") {}
    using Error::Error;
};

struct InvalidInstance : Error {
    using Error::Error;
};

struct IndexError : Error {
    using Error::Error;
};

struct CycleOutOfRange : Error {
    using Error::Error;
};

struct PreconditionError : Error {
    using Error::Error;
};

struct NotSingular : Error {
    using Error::Error;
};

struct NotASolution : Error {
    using Error::Error;
};

struct ResourceLimit : Error {
    using Error::Error;
};

} // namespace fpkz

#endif
