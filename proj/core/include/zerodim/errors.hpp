#ifndef ZERODIM_ERRORS_HPP
#define ZERODIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zerodim {

// Bad user input: malformed polynomials, inconsistent rings, invalid scheme files.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical precondition does not hold (ideal not saturated, scheme not
// zero-dimensional, enveloping scheme not arithmetically Gorenstein, ...).
class precondition_error : public std::runtime_error {
public:
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// A randomized search ran out of retries; the message carries the seed so the
// run can be reproduced.
class retry_exhausted : public std::runtime_error {
public:
    explicit retry_exhausted(const std::string& what) : std::runtime_error(what) {}
};

} // namespace zerodim

#endif
