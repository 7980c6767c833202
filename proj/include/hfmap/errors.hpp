#pragma once

#include <stdexcept>
#include <string>

namespace hfmap {

// Bad parameters or malformed input (q outside {3,4,6}, n <= 2, even n on a
// coordinate path, unparsable fixture text).
class InvalidArgument : public std::invalid_argument {
public:
    explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

// A configured search or enumeration bound was exceeded.
class ResourceLimit : public std::runtime_error {
public:
    explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

// A value violates a structural invariant it can only violate through a bug
// (e.g. a group element matching neither the even nor the odd pattern).
class CorruptElement : public std::logic_error {
public:
    explicit CorruptElement(const std::string& what) : std::logic_error(what) {}
};

// A structural check on assembled data failed (seam adjacency, pole counts,
// non-matching pairing tables).
class VerificationError : public std::runtime_error {
public:
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hfmap
