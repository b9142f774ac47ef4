#pragma once

#include <stdexcept>
#include <string>

namespace parahex {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Angle or parameter outside the convex/valid range.
class DomainError : public Error {
public:
    using Error::Error;
};

// No interior angle of the prototype equals 360/n.
class OrderError : public Error {
public:
    using Error::Error;
};

// Plain/reflected unit alternation cannot close around an odd hole.
class ParityError : public Error {
public:
    using Error::Error;
};

// Flip requested on a prototype without an outline-preserving mirror.
class ReflectError : public Error {
public:
    using Error::Error;
};

class DegenerateError : public Error {
public:
    using Error::Error;
};

class NoHoleError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class SchemaError : public Error {
public:
    using Error::Error;
};

}  // namespace parahex
