#pragma once

#include <stdexcept>
#include <string>

namespace idcycle {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Self-loops and duplicate edges in edge-list input.
class InvalidGraph : public Error {
 public:
  using Error::Error;
};

class VertexOutOfRange : public Error {
 public:
  using Error::Error;
};

// Duplicate vertex, fewer than three vertices, or an id outside the graph.
class InvalidSequence : public Error {
 public:
  using Error::Error;
};

class NoBreaks : public Error {
 public:
  using Error::Error;
};

class NotOnSequence : public Error {
 public:
  using Error::Error;
};

class NotAnEndpoint : public Error {
 public:
  using Error::Error;
};

class NotAnIdCycle : public Error {
 public:
  using Error::Error;
};

// Raised when the driver gets stuck on a verified id-cycle.
class FatalInconsistency : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class HypothesisViolated : public Error {
 public:
  using Error::Error;
};

class TooSmall : public Error {
 public:
  using Error::Error;
};

class NotTwoConnected : public Error {
 public:
  using Error::Error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

}  // namespace idcycle
