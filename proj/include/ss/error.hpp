#pragma once

#include <stdexcept>
#include <string>

namespace ss {

// Bad user input: unparsable rules, unknown letters, malformed options.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// The input is well-formed but outside the supported class of systems
// (not primitive, not pseudo-unimodular where required, Perron root not a
// Pisot unit for a geometric operation, ...).
class ScopeError : public std::runtime_error {
public:
    explicit ScopeError(const std::string& what) : std::runtime_error(what) {}
};

// An internal guard tripped: an invariant the algorithms rely on failed.
// Seeing this is a bug or a genuinely degenerate input slipping past the
// scope checks.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw InternalError(msg);
}

}  // namespace ss
