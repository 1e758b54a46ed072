#pragma once

#include <stdexcept>
#include <string>

namespace swarmtrack {

enum class ErrorKind {
    Domain,      // argument outside an operation's precondition
    Infeasible,  // plan cannot be deployed / tracked (Case 4)
    Config,      // scenario file or CLI value rejected
    NotReady,    // strength windows too short for a trend test
    Io,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace swarmtrack
