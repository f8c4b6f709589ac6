#pragma once

#include <stdexcept>
#include <string>

namespace ccs {

enum class errc {
  parse_error,
  unknown_variable,
  ring_mismatch,
  zero_polynomial,
  zero_divisor,
  non_homogeneous,
  degree_mismatch,
  invalid_input,
  zero_ideal,
  vanishing_jacobian,
  genericity_failure,
  unexpected_image_dimension,
  unsupported,
  internal_error,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : Error(errc::parse_error, msg + " (at position " + std::to_string(pos) + ")"),
        pos_(pos) {}
  std::size_t position() const noexcept { return pos_; }

 private:
  std::size_t pos_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw Error(c, msg); }

}  // namespace ccs
