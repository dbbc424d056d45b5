#ifndef DCP_ERROR_HPP
#define DCP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace dcp {

enum class ErrorKind {
    InvalidParameter,   // family/operation parameter out of range
    MalformedInput,     // unparseable text input
    SelfLoop,
    DuplicateEdge,
    Disconnected,
    VertexOutOfRange,
    NotAdjacent,
    InsufficientPebbles,
    IllegalMove,        // replay failure; carries the move index
    SizeMismatch,       // configuration not bound to this graph
    Infeasible,         // enumeration too large without sampling
    Budget,             // node budget exhausted, result unknown
    Overflow,           // exact integer range exceeded
    UnknownSuite,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string msg, long long index = -1)
        : std::runtime_error(std::move(msg)), kind_(kind), index_(index) {}

    ErrorKind kind() const { return kind_; }
    // Move index for IllegalMove, -1 otherwise.
    long long index() const { return index_; }

private:
    ErrorKind kind_;
    long long index_;
};

} // namespace dcp

#endif
