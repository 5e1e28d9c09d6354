#pragma once

#include <stdexcept>
#include <string>

namespace divbound {

// Invalid data: masses, supports, rate matrices, moment specs.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Two distributions passed to a divergence do not share a support list.
class AlignmentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A numeric search exhausted its budget without a feasible candidate.
class SearchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A closed-form construction has no real solution.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A function evaluation produced a non-finite value where one was required.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Integrator produced probabilities below the tolerated negative excursion.
class StepSizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// System carries no activity (all rates zero or zero horizon).
class DegenerateSystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace divbound
