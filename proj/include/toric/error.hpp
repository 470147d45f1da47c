#pragma once

#include <stdexcept>
#include <string>

namespace toric {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or inconsistent user input (bad JSON, wrong lengths, ...).
class InputError : public Error {
 public:
  InputError(const std::string& what, std::string path = "")
      : Error(what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// Random sampling produced a rank that violates dim >= tedim >= edim.
class GenericityError : public Error {
 public:
  using Error::Error;
};

}  // namespace toric
