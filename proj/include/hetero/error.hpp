#pragma once

#include <stdexcept>
#include <string>

namespace hetero {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class MissingParameter : public Error {
 public:
  explicit MissingParameter(const std::string& name)
      : Error("no value assigned to parameter '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// d(de^k) != 0 for the named frame index.
class ClosureError : public Error {
 public:
  explicit ClosureError(int frame)
      : Error("structure equations violate d^2 = 0 at e" + std::to_string(frame)),
        frame_(frame) {}
  int frame() const { return frame_; }

 private:
  int frame_;
};

class NonSkewTorsion : public Error {
 public:
  using Error::Error;
};

class PreconditionFailure : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) +
              ": " + message),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace hetero
