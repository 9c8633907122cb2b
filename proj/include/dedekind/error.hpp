#pragma once

#include <stdexcept>
#include <string>

namespace dedekind {

// Every failure raised by the library derives from Error so callers can
// catch the whole family at once; the subclasses name the contract that
// was violated.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ModulusMismatch : public Error {
 public:
  ModulusMismatch() : Error("operands live over different prime fields") {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by the zero polynomial") {}
};

class NotMonic : public Error {
 public:
  explicit NotMonic(const std::string& what) : Error(what + ": polynomial is not monic") {}
};

class NotExact : public Error {
 public:
  using Error::Error;
};

class ReducibleInput : public Error {
 public:
  using Error::Error;
};

// Raised when p divides the index of theta, so the factorization of F mod p
// does not describe the prime ideals above p.
class IndexDivisible : public Error {
 public:
  using Error::Error;
};

class RankDeficient : public Error {
 public:
  using Error::Error;
};

class BoundExceeded : public Error {
 public:
  using Error::Error;
};

class OrderMismatch : public Error {
 public:
  OrderMismatch() : Error("operands belong to different orders") {}
};

class InvalidOrder : public Error {
 public:
  using Error::Error;
};

class NotAnIdeal : public Error {
 public:
  using Error::Error;
};

class NotPMaximal : public Error {
 public:
  using Error::Error;
};

class NotMaximalIdeal : public Error {
 public:
  using Error::Error;
};

class InfeasibleSupply : public Error {
 public:
  using Error::Error;
};

}  // namespace dedekind
