#pragma once

#include <stdexcept>
#include <string>

namespace mgraph {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Requested size exceeds a configured construction or materialization limit.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

// Two routes that must agree exactly did not (e.g. a closed form with a
// nonzero irrational part, or a non-integral product).
class InconsistencyError : public Error {
public:
    using Error::Error;
};

// Input is valid but the requested statistic is undefined for it.
class DegenerateInputError : public Error {
public:
    using Error::Error;
};

}  // namespace mgraph
