#pragma once

#include <stdexcept>
#include <string>

namespace diffmax {

// Experiment-file syntax or schema problem; carries the offending position.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string message, int line = 0, int col = 0)
      : std::runtime_error(std::move(message)), line_(line), col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

// Semantic validation failure; message enumerates every violated invariant.
class ValidationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Conflict graph too large for complete maximal-independent-set enumeration.
class EnumerationCapError : public std::runtime_error {
 public:
  EnumerationCapError(int links, int cap)
      : std::runtime_error("enumeration infeasible: " + std::to_string(links) +
                           " links exceed the maximal-independent-set cap of " +
                           std::to_string(cap)),
        links_(links),
        cap_(cap) {}
  int links() const { return links_; }
  int cap() const { return cap_; }

 private:
  int links_;
  int cap_;
};

// A runtime invariant the simulator must maintain was broken (bug indicator).
class InvariantError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace diffmax
