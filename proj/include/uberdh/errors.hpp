#pragma once

#include <stdexcept>
#include <string>

namespace uberdh {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad complex, bad argument).
class InputError : public Error {
 public:
  using Error::Error;
};

class GhostVertex : public InputError {
 public:
  explicit GhostVertex(int v)
      : InputError("ghost vertex " + std::to_string(v) + " belongs to no facet"), vertex(v) {}
  int vertex;
};

class VertexOutOfRange : public InputError {
 public:
  VertexOutOfRange(int v, int m)
      : InputError("vertex " + std::to_string(v) + " out of range for " + std::to_string(m) +
                   " vertices") {}
};

class CycleTooSmall : public InputError {
 public:
  explicit CycleTooSmall(int n) : InputError("cycle needs at least 3 vertices, got " + std::to_string(n)) {}
};

class NotAComplex : public Error {
 public:
  NotAComplex() : Error("composite of consecutive differentials is nonzero") {}
  explicit NotAComplex(const std::string& where) : Error("not a chain complex: " + where) {}
};

class NotChainMap : public Error {
 public:
  NotChainMap() : Error("map does not commute with the differentials") {}
};

class NotCubeEdge : public Error {
 public:
  NotCubeEdge() : Error("colourings do not differ by a single 0 -> 1 flip") {}
};

/// Raised when an induced map over the integers is requested but a group
/// involved has torsion.
class TorsionObstruction : public Error {
 public:
  explicit TorsionObstruction(const std::string& where)
      : Error("torsion obstructs integral induced maps (" + where +
              "); rerun with --coeffs q or --coeffs fp:<p>") {}
};

class SizeCap : public Error {
 public:
  SizeCap(int m, int cap)
      : Error(std::to_string(m) + " vertices exceeds the configured cap of " + std::to_string(cap)) {}
};

class IsSimplex : public Error {
 public:
  IsSimplex() : Error("the complex is a full simplex") {}
};

class Disconnected : public Error {
 public:
  Disconnected() : Error("the graph or complex is disconnected") {}
};

}  // namespace uberdh
