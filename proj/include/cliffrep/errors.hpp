#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cliffrep {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SignatureMismatch : public Error {
 public:
  SignatureMismatch() : Error("signature mismatch") {}
};

// Precondition violated by an argument (invalid factor set, simple vs semisimple, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NotInIdeal : public Error {
 public:
  using Error::Error;
};

class NotInDivisionRing : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace cliffrep
