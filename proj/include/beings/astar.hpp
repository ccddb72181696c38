#pragma once

#include "beings/scene.hpp"

namespace beings {

// Shortest obstacle-avoiding path length in meters between two footprint
// points, on an 8-connected lattice of the given pitch with obstacles
// inflated by the robot radius. Throws std::runtime_error when the goal is
// unreachable.
double shortest_path_length(const SceneModel& scene, const Vec2& start, const Vec2& goal,
                            double robot_radius, double lattice = 0.1);

}  // namespace beings
