#pragma once

#include <stdexcept>
#include <string>

namespace bck {

// Malformed input: wrong shapes, unparsable numbers, schema violations.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Well-formed input outside an operation's domain (e.g. non-generic heights
// passed to an evaluator that requires genericity).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A configured enumeration limit was exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal consistency check failed; always a bug, never silent.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace bck
