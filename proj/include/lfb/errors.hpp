// errors.hpp -- exception types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace lfb {

// Requested prime-power data lies outside the range covered by a spec's
// local-factor table.
class data_gap_error : public std::runtime_error {
public:
    explicit data_gap_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file (spec JSON, zeros list, constants file).  Carries the
// line where the problem was detected when known.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what, long line = -1)
        : std::runtime_error(line >= 0 ? what + " (line " + std::to_string(line) + ")" : what),
          line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

// A spec violates one of the structural invariants (shift half-plane, root
// magnitude, length mismatch).  validate() reports these as diagnostics;
// constructors and file loaders throw.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lfb
