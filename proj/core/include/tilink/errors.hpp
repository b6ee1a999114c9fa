#pragma once

#include <stdexcept>

namespace tilink {

// Malformed textual input: vertex configurations, angle literals, spec files.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arguments outside an operation's mathematical domain (bad ranges, no
// equilateral realization, inconsistent vertex classes, wrong geometry).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical degeneracy or non-convergence (vanishing denominators,
// bisection running out of iterations, non-finite intermediates).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tilink
