#include "krrf/trajectory.hpp"

namespace krrf {

double trajectory_length(std::span<const Config> states) {
    double len = 0.0;
    for (std::size_t i = 1; i < states.size(); ++i)
        len += distance(states[i - 1].position(), states[i].position());
    return len;
}

} // namespace krrf
