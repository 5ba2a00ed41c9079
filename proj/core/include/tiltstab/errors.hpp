#pragma once

#include <stdexcept>
#include <string>

namespace tiltstab {

// Each family maps to its own process exit code in the CLI.
enum class ErrorFamily {
  Parse = 2,
  ZeroRank = 3,
  RequiresPicardRankOne = 4,
  PreconditionViolated = 5,
  UnsupportedTarget = 6,
  InfiniteFamily = 7,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorFamily family, const std::string& what)
      : std::runtime_error(what), family_(family) {}

  ErrorFamily family() const noexcept { return family_; }
  int exit_code() const noexcept { return static_cast<int>(family_); }

 private:
  ErrorFamily family_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorFamily::Parse, what) {}
};

class ZeroRankError : public Error {
 public:
  explicit ZeroRankError(const std::string& what) : Error(ErrorFamily::ZeroRank, what) {}
};

class RequiresPicardRankOne : public Error {
 public:
  explicit RequiresPicardRankOne(const std::string& what)
      : Error(ErrorFamily::RequiresPicardRankOne, what) {}
};

class PreconditionViolated : public Error {
 public:
  explicit PreconditionViolated(const std::string& what)
      : Error(ErrorFamily::PreconditionViolated, what) {}
};

class UnsupportedTarget : public Error {
 public:
  explicit UnsupportedTarget(const std::string& what)
      : Error(ErrorFamily::UnsupportedTarget, what) {}
};

class InfiniteFamily : public Error {
 public:
  explicit InfiniteFamily(const std::string& what)
      : Error(ErrorFamily::InfiniteFamily, what) {}
};

const char* family_name(ErrorFamily family) noexcept;

}  // namespace tiltstab
