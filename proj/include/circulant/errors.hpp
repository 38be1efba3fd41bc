#pragma once

#include <stdexcept>
#include <string>

namespace circulant {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Vertex count below the smallest supported graph (n < 3).
struct TooSmallError : Error {
    using Error::Error;
};

// A jump offset is out of range [1, n/2], duplicated, or the jump set is empty.
struct InvalidJumpError : Error {
    using Error::Error;
};

// Dense-matrix guard tripped (n > 10^4).
struct TooLargeError : Error {
    using Error::Error;
};

// The operation needs a connected graph but the spectrum has a second
// zero eigenvalue (equivalently, gcd(n, jumps) > 1).
struct DisconnectedError : Error {
    using Error::Error;
};

// Matrix factorization failed.
struct SingularError : Error {
    using Error::Error;
};

// Closed forms for the jump sets {1,2} and {2} need n >= 5.
struct UnsupportedNError : Error {
    using Error::Error;
};

// Trigonometric power sum needs J >= 1; at J = 0 the closed form and the
// direct sum disagree (n vs n-1), so the request is rejected.
struct BadPowerError : Error {
    using Error::Error;
};

// Generic precondition violation (index out of range, negative count, ...).
struct DomainError : Error {
    using Error::Error;
};

// A simulated walk exceeded the defensive step cap.
struct StepCapError : Error {
    using Error::Error;
};

} // namespace circulant
