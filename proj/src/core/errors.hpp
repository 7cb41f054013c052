#pragma once

#include <stdexcept>
#include <string>

namespace aoforge {

enum class ErrorKind { InvalidArgument, ResourceLimit, Internal, Parse };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

class InvalidArgument : public Error {
public:
  explicit InvalidArgument(const std::string& message)
      : Error(ErrorKind::InvalidArgument, message) {}
};

class ResourceLimit : public Error {
public:
  explicit ResourceLimit(const std::string& message)
      : Error(ErrorKind::ResourceLimit, message) {}
};

class ParseError : public Error {
public:
  explicit ParseError(const std::string& message)
      : Error(ErrorKind::Parse, message) {}
};

// Raised when a structural identity fails to hold at runtime.
class InternalError : public Error {
public:
  explicit InternalError(const std::string& message)
      : Error(ErrorKind::Internal, message) {}
};

}  // namespace aoforge
