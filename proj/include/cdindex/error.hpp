#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cdindex {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input violates the graded-poset invariants, or a parameter is out of range.
class InvalidPoset : public Error {
public:
    using Error::Error;
};

class OutOfRange : public Error {
public:
    using Error::Error;
};

/// A subset polynomial is not in the image of the c,d encoding.
class NotACdPolynomial : public Error {
public:
    using Error::Error;
};

/// An exact computation that must produce integers produced a fraction.
class NonIntegralCoefficients : public Error {
public:
    using Error::Error;
};

class NotQuasiConvex : public Error {
public:
    using Error::Error;
};

/// Step `step` (1-based position in the facet order) failed the quasi-convexity check.
class ShellingInvalid : public Error {
public:
    ShellingInvalid(std::size_t step, const std::string& why)
        : Error("shelling invalid at step " + std::to_string(step) + ": " + why), step_(step)
    {
    }

    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

class PiNotComplete : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace cdindex
