#pragma once

#include <stdexcept>
#include <string>

namespace mdhll {

/// Input outside the admissible set or outside an operation's domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative or floating-point procedure failed to produce a finite answer.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller broke an operation's precondition (wrong branch, bad dt, ...).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Invalid run/mesh/boundary configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A cell average or reconstructed point left the admissible set.
class PcpFailure : public std::runtime_error {
 public:
  PcpFailure(int i, int j, const std::string& what)
      : std::runtime_error("PCP failure at cell (" + std::to_string(i) + ", " +
                           std::to_string(j) + "): " + what),
        i_(i),
        j_(j) {}

  int i() const { return i_; }
  int j() const { return j_; }

 private:
  int i_;
  int j_;
};

}  // namespace mdhll
