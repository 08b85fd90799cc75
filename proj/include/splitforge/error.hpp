#ifndef SPLITFORGE_ERROR_HPP
#define SPLITFORGE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace splitforge {

enum class Errc {
  division_by_zero,
  not_divisible,
  both_zero,
  zero_input,
  factorization_timeout,
  inseparable_input,
  non_monic_divisor,
  mixed_contexts,
  reducible_modulus,
  mixed_presentations,
  non_radical_presentation,
  not_applicable,
  two_not_unit,
  hypotheses_not_met,
  internal_identity_failure,
  no_prime_contains_j,
  syntax_error,
  non_monic,
  wrong_degree,
  unknown_ring,
  even_prime,
  malformed_certificate,
  usage,
};

class SplitError : public std::runtime_error {
 public:
  SplitError(Errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  Errc code() const { return code_; }

  // Process exit contract: 1 usage, 2 input error, 3 verification failure,
  // 4 factorization timeout.
  int exit_code() const {
    switch (code_) {
      case Errc::usage:
        return 1;
      case Errc::factorization_timeout:
        return 4;
      default:
        return 2;
    }
  }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) {
  throw SplitError(c, msg);
}

}  // namespace splitforge

#endif
