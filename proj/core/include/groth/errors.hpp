#pragma once

#include <stdexcept>
#include <string>

namespace groth {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// f is not a multiple of g; upstream this means a bad weight table or operator.
struct NonzeroRemainder : Error {
  using Error::Error;
};

struct RegistryMismatch : Error {
  using Error::Error;
};

struct NotVexillary : Error {
  using Error::Error;
};

struct KernelDimension : Error {
  explicit KernelDimension(std::size_t d)
      : Error("R-matrix kernel has dimension " + std::to_string(d)), dim(d) {}
  std::size_t dim;
};

// Bad argument: index out of range, shape too long for the grid, etc.
struct DomainError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace groth
