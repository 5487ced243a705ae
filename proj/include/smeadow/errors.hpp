#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace smeadow {

// Values from two different sessions were combined. Always a caller bug.
class session_mismatch : public std::logic_error {
 public:
  session_mismatch() : std::logic_error("values belong to different sessions") {}
};

class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A symbol the target model cannot interpret (s or sqrt over a finite field, conj/re over the reals).
class unsupported_symbol : public std::runtime_error {
 public:
  explicit unsupported_symbol(const std::string& symbol, const std::string& model)
      : std::runtime_error("symbol '" + symbol + "' is not supported by model " + model),
        symbol_(symbol) {}

  const std::string& symbol() const noexcept { return symbol_; }

 private:
  std::string symbol_;
};

class unbound_variable : public std::runtime_error {
 public:
  explicit unbound_variable(const std::string& name)
      : std::runtime_error("unbound variable '" + name + "'"), name_(name) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class hole_in_term : public std::runtime_error {
 public:
  hole_in_term() : std::runtime_error("context hole [] cannot be evaluated") {}
};

class open_term : public std::runtime_error {
 public:
  open_term() : std::runtime_error("term is not closed") {}
};

class not_prime : public std::invalid_argument {
 public:
  not_prime(long long p, long long factor)
      : std::invalid_argument(factor == 0
                                  ? std::to_string(p) + " is not a prime (must be >= 2)"
                                  : std::to_string(p) + " is composite, divisible by " +
                                        std::to_string(factor)),
        factor_(factor) {}

  // Smallest prime factor, or 0 when p < 2.
  long long factor() const noexcept { return factor_; }

 private:
  long long factor_;
};

// Broken internal invariant (e.g. a degenerate sign tie). Indicates a kernel bug.
class invariant_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace smeadow
