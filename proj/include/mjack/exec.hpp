#pragma once

#include <stdexcept>

namespace mjack {

/// Selects the serial reference kernel or its OpenMP counterpart.
enum class Exec { Serial, Parallel };

/// Number of OpenMP worker threads that a parallel kernel will use.
int worker_count();

/// Thrown when a requested size exceeds an enumeration guard.
class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace mjack
