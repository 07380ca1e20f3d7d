#pragma once

#include <stdexcept>
#include <string>

namespace braidlie {

/// Base class for everything thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

struct IllDefinedBicharacter : Error {
  int row, col;
  IllDefinedBicharacter(int i, int j, const std::string& what)
      : Error(what), row(i), col(j) {}
};

struct InfiniteGroup : Error {
  InfiniteGroup() : Error("operation requires a finite group (free rank 0)") {}
};

struct LengthMismatch : Error {
  using Error::Error;
};

struct TableMismatch : Error {
  TableMismatch() : Error("polynomials belong to different generator tables") {}
};

struct InhomogeneousRelation : Error {
  using Error::Error;
};

struct OrientationFailure : Error {
  using Error::Error;
};

struct DegreeOverflow : Error {
  std::string word;
  DegreeOverflow(std::string w, int bound)
      : Error("word '" + w + "' exceeds degree bound " + std::to_string(bound)),
        word(std::move(w)) {}
};

struct IncompleteRewriteSystem : Error {
  IncompleteRewriteSystem()
      : Error("rewrite system did not stabilize below its bound") {}
};

struct InfiniteDimensional : Error {
  InfiniteDimensional()
      : Error("algebra is not finite-dimensional below its bound") {}
};

struct DegreeMismatch : Error {
  using Error::Error;
};

struct NotAZetaFamily : Error {
  using Error::Error;
};

struct NotPrimitiveRoot : Error {
  using Error::Error;
};

struct PairNotMinusOneFamily : Error {
  int index;
  PairNotMinusOneFamily(int i, const std::string& what) : Error(what), index(i) {}
};

struct MissingBracket : Error {
  using Error::Error;
};

struct LieValidationFailure : Error {
  using Error::Error;
};

struct AntipodeNotFound : Error {
  AntipodeNotFound() : Error("antipode convolution system is singular") {}
};

struct ParseError : Error {
  int line, col;
  ParseError(int l, int c, const std::string& what)
      : Error("line " + std::to_string(l) + ", col " + std::to_string(c) + ": " + what),
        line(l), col(c) {}
};

struct ValidationError : Error {
  std::string block;
  ValidationError(std::string b, const std::string& reason)
      : Error("[" + b + "] " + reason), block(std::move(b)) {}
};

struct UnknownCommand : Error {
  explicit UnknownCommand(const std::string& cmd) : Error("unknown command: " + cmd) {}
};

}  // namespace braidlie
