// errors.hpp — exception types raised by the dimerqb library

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace dimerqb {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// linalg
class NonHermitianInput : public Error { public: using Error::Error; };
class NonUnitaryInput : public Error { public: using Error::Error; };
class ConvergenceFailure : public Error { public: using Error::Error; };
class InvalidDensityMatrix : public Error { public: using Error::Error; };

// model
class InvalidParams : public Error { public: using Error::Error; };
class InvalidGeometry : public Error { public: using Error::Error; };
class DegenerateGeometry : public Error { public: using Error::Error; };

// metrics
class NegativeTau : public Error { public: using Error::Error; };
class ZeroTime : public Error { public: using Error::Error; };

// sweep / config
class UnknownPreset : public Error { public: using Error::Error; };
class IoFailure : public Error { public: using Error::Error; };

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(what), line_(line), column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// Carries one diagnostic per violated field/invariant.
class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<std::string> issues);
    const std::vector<std::string>& issues() const noexcept { return issues_; }

private:
    std::vector<std::string> issues_;
};

} // namespace dimerqb
