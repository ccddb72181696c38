#pragma once

#include <vector>

#include "beings/core.hpp"

namespace beings {

// One body-frame velocity channel. Exactly one channel is active per input;
// the representation enforces the exclusivity constraint.
enum class Channel { VX, VY, VZ, YAW };

struct ControlInput {
    Channel channel = Channel::VX;
    double magnitude = 0.0;  // m/step for VX/VY/VZ, rad/step for YAW, signed

    bool operator==(const ControlInput&) const = default;
};

struct ControlBounds {
    double translation = 1.0;   // m/step
    double yaw = M_PI / 4.0;    // rad/step

    double limit(Channel c) const { return c == Channel::YAW ? yaw : translation; }
};

inline ControlInput clamp_input(ControlInput u, const ControlBounds& bounds) {
    const double b = bounds.limit(u.channel);
    if (u.magnitude > b) u.magnitude = b;
    if (u.magnitude < -b) u.magnitude = -b;
    return u;
}

// Fixed-horizon sequence of control inputs.
struct ControlSequence {
    std::vector<ControlInput> inputs;

    int horizon() const { return static_cast<int>(inputs.size()); }
    bool operator==(const ControlSequence&) const = default;
};

// Discrete kinematics: body-frame velocity rotated into the inertial frame by
// R(theta) for the planar channels, direct addition for z and yaw.
inline Pose step(const Pose& s, const ControlInput& u) {
    Pose next = s;
    switch (u.channel) {
        case Channel::VX:
            next.x += std::cos(s.theta) * u.magnitude;
            next.y += std::sin(s.theta) * u.magnitude;
            break;
        case Channel::VY:
            next.x += -std::sin(s.theta) * u.magnitude;
            next.y += std::cos(s.theta) * u.magnitude;
            break;
        case Channel::VZ:
            next.z += u.magnitude;
            break;
        case Channel::YAW:
            next.theta = wrap_angle(s.theta + u.magnitude);
            break;
    }
    return next;
}

// trajectory[0] = s0, trajectory[k+1] = step(trajectory[k], U[k]); length K+1.
inline std::vector<Pose> propagate(const Pose& s0, const ControlSequence& seq) {
    std::vector<Pose> trajectory;
    trajectory.reserve(seq.inputs.size() + 1);
    trajectory.push_back(s0);
    for (const auto& u : seq.inputs) trajectory.push_back(step(trajectory.back(), u));
    return trajectory;
}

}  // namespace beings
