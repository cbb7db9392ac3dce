#pragma once

#include <stdexcept>
#include <string>

namespace conjlab {

// Malformed input: unknown generator, bad graph file, violated precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured resource cap (ball size, closure size, candidate count) was hit.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A check that quantifies over a truncated universe needed a member outside it.
class IncompleteUniverseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace conjlab
