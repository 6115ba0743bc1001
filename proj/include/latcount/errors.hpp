#ifndef LATCOUNT_ERRORS_HPP
#define LATCOUNT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace latcount {

// Bad argument: malformed descriptor, value outside the operation's domain.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Structurally valid request that exceeds a size/feasibility guard.
class feasibility_error : public std::runtime_error {
public:
    explicit feasibility_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace latcount

#endif
