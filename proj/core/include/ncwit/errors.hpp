#pragma once

#include <stdexcept>
#include <string>

namespace ncwit {

// An operation produced (or was asked to normalize) the zero vector, e.g.
// subtracting a photon from vacuum, or the degenerate superposition whose
// normalization constant vanishes.
class AnnihilatedStateError : public std::runtime_error {
 public:
  explicit AnnihilatedStateError(const std::string& msg) : std::runtime_error(msg) {}
};

// A request does not fit into the number-basis truncation budget, or a moment
// order exceeds the available dimension.
class TruncationError : public std::runtime_error {
 public:
  explicit TruncationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Assembled complex arithmetic failed an internal reality check: a quantity
// that must be real came out with a significant imaginary residue.
class ConsistencyError : public std::runtime_error {
 public:
  explicit ConsistencyError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ncwit
