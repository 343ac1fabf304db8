#ifndef CCSYM_ERRORS_HPP
#define CCSYM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ccsym {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAUnit : Error {
    using Error::Error;
};
struct AlgebraMismatch : Error {
    using Error::Error;
};
struct NoExtension : Error {
    using Error::Error;
};
struct NotFinite : Error {
    using Error::Error;
};
struct CharNotZero : Error {
    using Error::Error;
};
struct NotNilpotent : Error {
    using Error::Error;
};
struct ZeroPolynomial : Error {
    using Error::Error;
};
struct BadIndex : Error {
    using Error::Error;
};
struct PrecisionTooLow : Error {
    using Error::Error;
};
struct NotAField : Error {
    using Error::Error;
};
struct NoRootsOfUnity : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"), pos(position) {}
    std::size_t pos;
};

}  // namespace ccsym

#endif
