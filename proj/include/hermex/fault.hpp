#pragma once

// Fault injection for testing the checker: while a Scope is alive, one block
// of one named engine matrix is corrupted before it is assembled. Off unless
// a test turns it on; thread-local.

#include <cstddef>
#include <optional>
#include <string>

namespace hermex::fault {

enum class Mode { negate, zero };

struct Site {
  std::string matrix;  ///< e.g. "pair.Q1", "pair.P2", "linear.N"
  std::size_t row = 0;
  std::size_t col = 0;
  Mode mode = Mode::negate;
  bool mirror = false;  ///< also hit block (col, row), keeping a Hermitian matrix Hermitian

  std::string str() const;
};

/// Names of the matrices that honour a Site.
const char* const sites[] = {"pair.Q1", "pair.P2", "pair.P3", "linear.M", "linear.N"};

class Scope {
 public:
  explicit Scope(Site s);
  ~Scope();
  Scope(const Scope&) = delete;
  Scope& operator=(const Scope&) = delete;

 private:
  std::optional<Site> prev_;
};

/// The fault currently in effect, or nullptr.
const Site* active();

}  // namespace hermex::fault
