#pragma once

#include <stdexcept>

namespace flagforge {

// A sampled "generic" object failed its post-hoc verification; retry with a
// fresh seed.
struct GenericityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Duality asked of a vertical plane (or a line only contained in vertical
// planes); pre-apply a random invertible change of coordinates.
struct VerticalityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Translated copies of a construction still interact; increase separation.
struct InteractionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace flagforge
