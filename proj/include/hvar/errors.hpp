#pragma once

#include <stdexcept>
#include <string>

namespace hvar {

// Every failure the library reports derives from Error so callers can catch
// one type; the subclasses let the CLI map failures onto exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InputError : public Error {
public:
    using Error::Error;
};

class NonPolynomial : public Error {
public:
    using Error::Error;
};

class WindowTooShort : public Error {
public:
    using Error::Error;
};

class NotMPrimary : public Error {
public:
    using Error::Error;
};

class DimensionUnsupported : public Error {
public:
    using Error::Error;
};

class Exhausted : public Error {
public:
    using Error::Error;
};

class NotCoprime : public Error {
public:
    using Error::Error;
};

class WindowOverflow : public Error {
public:
    using Error::Error;
};

class NonStabilizing : public Error {
public:
    using Error::Error;
};

class CapExceeded : public Error {
public:
    using Error::Error;
};

class OracleMismatch : public Error {
public:
    using Error::Error;
};

class IntegralityFails : public Error {
public:
    using Error::Error;
};

}  // namespace hvar
