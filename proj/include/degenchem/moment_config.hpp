#pragma once

namespace degenchem {

/// Parameters of the singular moment y(t) = int_0^{s1} s^(-gamma) (s1 - s) w(s, t) ds.
struct MomentConfig {
    double gamma = 0.5;
    double s0 = 0.0;
    double s1 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
    /// Mass required inside the ball of volume-radius s0.
    double m0 = 0.0;
};

}  // namespace degenchem
