#pragma once

#include <stdexcept>
#include <string>

namespace genquat {

// Base of all library errors. name() is the stable identifier the CLI
// prints on the diagnostic stream; messages are free-form detail.
class Error : public std::runtime_error {
public:
    const char* name() const noexcept { return name_; }

protected:
    Error(const char* name, const std::string& what)
        : std::runtime_error(what), name_(name) {}

private:
    const char* name_;
};

// A coefficient or algebra parameter is NaN or infinite.
class NonFiniteInput final : public Error {
public:
    explicit NonFiniteInput(const std::string& what) : Error("NonFiniteInput", what) {}
};

// Binary operation on elements of different algebras H(alpha,beta).
class ParamsMismatch final : public Error {
public:
    explicit ParamsMismatch(const std::string& what) : Error("ParamsMismatch", what) {}
};

// Result exceeds double range.
class Overflow final : public Error {
public:
    explicit Overflow(const std::string& what) : Error("Overflow", what) {}
};

// log: the norm form x1^2 + alpha x2^2 + beta x3^2 + alpha beta x4^2 is <= 0,
// so no real logarithm exists (possible only for indefinite parameter signs).
class NullOrNegativeNorm final : public Error {
public:
    explicit NullOrNegativeNorm(const std::string& what) : Error("NullOrNegativeNorm", what) {}
};

// log: negative scalar with zero imaginary part; the imaginary direction of
// the logarithm is undetermined and no principal value exists.
class NoPrincipalLog final : public Error {
public:
    explicit NoPrincipalLog(const std::string& what) : Error("NoPrincipalLog", what) {}
};

// log: hyperbolic or degenerate branch with non-positive scalar part.
class OutOfDomain final : public Error {
public:
    explicit OutOfDomain(const std::string& what) : Error("OutOfDomain", what) {}
};

} // namespace genquat
