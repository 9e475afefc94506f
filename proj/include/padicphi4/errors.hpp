#pragma once

#include <stdexcept>
#include <string>

namespace padicphi4 {

// Exit-code classes used by the CLI: config=1, numerical=2, resource=3.
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// p-adic precision window too small for the requested operation.
struct precision_error : numerical_error {
    using numerical_error::numerical_error;
};

} // namespace padicphi4
