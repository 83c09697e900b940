#pragma once

#include <stdexcept>
#include <string>

namespace icfb {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnboundedRegion : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyRegion : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PresetNotApplicable : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace icfb
