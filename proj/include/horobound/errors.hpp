#pragma once

#include <stdexcept>
#include <string>

namespace horobound {

// Exit-code classes used by the CLI: 2 invalid input, 3 resource cap,
// 4 verification failure.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual int exit_code() const noexcept { return 1; }
};

class InvalidInput : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 2; }
};

class ResourceLimit : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 3; }
};

// A distance needed by an operation is larger than the caller's cap.
class CapExceeded : public ResourceLimit {
 public:
  using ResourceLimit::ResourceLimit;
};

class VerificationFailure : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 4; }
};

}  // namespace horobound
