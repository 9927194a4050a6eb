#pragma once

#include <stdexcept>
#include <string>

namespace eccspec {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Eccentricity is undefined on a disconnected graph.
class DisconnectedGraph : public Error {
public:
    DisconnectedGraph() : Error("graph is disconnected; eccentricities are undefined") {}
};

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

/// Malformed multipartite specification (no parts, or a part < 1).
class InvalidSpec : public Error {
public:
    using Error::Error;
};

/// A single-part specification with n >= 2 names an edgeless graph.
class DisconnectedSpec : public Error {
public:
    using Error::Error;
};

class NonSymmetricInput : public Error {
public:
    using Error::Error;
};

class ConvergenceFailure : public Error {
public:
    using Error::Error;
};

class InvalidPartition : public Error {
public:
    using Error::Error;
};

class NotDivisible : public Error {
public:
    using Error::Error;
};

class EmptySpectrum : public Error {
public:
    EmptySpectrum() : Error("spectrum is empty") {}
};

/// Any failure to read a graph from text.
class ParseError : public Error {
public:
    using Error::Error;
};

class MalformedHeader : public ParseError {
public:
    using ParseError::ParseError;
};

class VertexOutOfRange : public ParseError {
public:
    using ParseError::ParseError;
};

class SelfLoop : public ParseError {
public:
    using ParseError::ParseError;
};

class InvalidByte : public ParseError {
public:
    using ParseError::ParseError;
};

class TruncatedPayload : public ParseError {
public:
    using ParseError::ParseError;
};

}  // namespace eccspec
