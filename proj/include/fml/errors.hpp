#pragma once

#include <stdexcept>
#include <string>

namespace fml {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A labeling references an edge that does not exist in the graph, or is
// otherwise structurally malformed. Distinct from an infeasible solution.
struct InvalidLabelingError : Error {
    using Error::Error;
};

// The instance cannot be satisfied by any labeling (e.g. a coverage
// requirement exceeds the group size, or rho exceeds the terminal count).
struct InfeasibleError : Error {
    using Error::Error;
};

// Raised when a shortest path is requested between disconnected nodes.
struct NoPathError : Error {
    using Error::Error;
};

// The graph (or the relevant part of it) is not connected where an
// operation requires connectivity, e.g. the metric fed to the embedding.
struct DisconnectedError : Error {
    using Error::Error;
};

// A file could not be parsed; carries a 1-based line number when known.
struct ParseError : Error {
    int line = 0;
    ParseError(const std::string& msg, int line_no = 0)
        : Error(line_no > 0 ? msg + " (line " + std::to_string(line_no) + ")" : msg),
          line(line_no) {}
};

// Invalid flag combination or argument value at the CLI surface.
struct UsageError : Error {
    using Error::Error;
};

}  // namespace fml
