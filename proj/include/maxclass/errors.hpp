#pragma once

#include <stdexcept>
#include <string>

namespace maxclass {

// Base for every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input prime is smaller than the nilpotency class; the uniform analysis
// does not apply and such primes are left to follow-up work.
class exceptional_prime_error : public error {
 public:
  exceptional_prime_error(long long p, int n)
      : error("exceptional prime p=" + std::to_string(p) + " < n=" + std::to_string(n) +
              " (exceptional primes are out of scope)"),
        p_(p),
        n_(n) {}
  long long prime() const noexcept { return p_; }
  int nilpotency_class() const noexcept { return n_; }

 private:
  long long p_;
  int n_;
};

// A size/budget guard rejected the request.
class guard_error : public error {
 public:
  using error::error;
};

// Two residues from different prime-power contexts were combined.
class context_mismatch_error : public error {
 public:
  using error::error;
};

// Something that must hold by construction did not: an implementation or
// convention bug, never a user error.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace maxclass
