#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fibdim {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `position` is a 1-based line number for edge lists
/// and a 0-based byte offset for graph6.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// The input graph is not a partial cube. When the failure was detected by a
/// distance check, (u, v) is a pair whose label distance differs from the
/// graph distance; otherwise both are npos.
class NotPartialCubeError : public Error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit NotPartialCubeError(const std::string& what, std::size_t u = npos,
                               std::size_t v = npos)
      : Error(what), u_(u), v_(v) {}
  std::size_t u() const noexcept { return u_; }
  std::size_t v() const noexcept { return v_; }
  bool has_witness() const noexcept { return u_ != npos; }

 private:
  std::size_t u_;
  std::size_t v_;
};

/// A configured size cap would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A caller-supplied structure violates its contract (bad path system,
/// ragged labels, inconsistent simplex graph, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An embedding produced by the library failed its own certification.
/// Indicates a bug; never expected in normal operation.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace fibdim
