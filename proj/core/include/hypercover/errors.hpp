#pragma once

#include <stdexcept>
#include <string>

namespace hypercover {

// Precondition violation: bad dimensions, out-of-range indices, malformed input.
class usage_error : public std::invalid_argument {
public:
    explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

// The request exceeds an enumeration budget or a hard search-space cap.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Two distinct sparse solutions explain the same measurement vector.
class ambiguity_error : public std::runtime_error {
public:
    explicit ambiguity_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hypercover
