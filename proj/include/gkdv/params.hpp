#pragma once

namespace gkdv {

// Wave parameters of the rotating shallow-water soliton problem.
// k is derived, never set directly: k = sqrt(1.5 * (u + w)).
struct GkdvParams {
    double u;  // wave speed, > 0
    double w;  // Coriolis constant, >= 0
    double k;  // spatial wavenumber

    GkdvParams(double wave_speed, double coriolis);
};

}  // namespace gkdv
