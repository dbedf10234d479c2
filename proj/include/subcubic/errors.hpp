#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace subcubic {

// Base for every error the library raises on a violated precondition.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidGraph : public Error {
public:
    using Error::Error;
};

class NotSubcubic : public Error {
public:
    explicit NotSubcubic(int vertex, int degree)
        : Error("vertex " + std::to_string(vertex) + " has degree " + std::to_string(degree) + " > 3"),
          vertex_(vertex), degree_(degree) {}

    int vertex() const noexcept { return vertex_; }
    int degree() const noexcept { return degree_; }

private:
    int vertex_;
    int degree_;
};

class NotConnected : public Error {
public:
    NotConnected() : Error("graph is not connected") {}
};

class MalformedGraph6 : public Error {
public:
    MalformedGraph6(std::size_t offset, const std::string& what)
        : Error("malformed graph6 at byte " + std::to_string(offset) + ": " + what), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class TooLarge : public Error {
public:
    using Error::Error;
};

class DecompositionMismatch : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class UnboundedInput : public Error {
public:
    using Error::Error;
};

class NotInP : public Error {
public:
    using Error::Error;
};

class NegativeLambda : public Error {
public:
    NegativeLambda() : Error("lambda must be nonnegative") {}
};

class InvalidParameter : public Error {
public:
    using Error::Error;
};

class TripleInP : public Error {
public:
    TripleInP() : Error("triple satisfies every half-space of P; no counterexample exists") {}
};

class LimitExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace subcubic
