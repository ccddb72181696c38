#pragma once

#include <cstdint>

#include "beings/scene.hpp"

namespace beings {

enum class Difficulty { Easy, Medium, Hard };

struct Task {
    SceneModel scene;
    Pose start;
};

// Procedural navigation tasks on a 10x10x2 m arena. The goal image is always
// rendered from the scene's own goal pose, so the success threshold is
// attainable by construction.
//   Easy:   no obstacles; the start is near the goal pose but faces away.
//   Medium: one 0.5 x 0.5 x 1.5 m box on the start-goal segment.
//   Hard:   a longer run with three such boxes on the segment.
Task make_task(Difficulty difficulty, std::uint64_t seed);

// Belief grid covering the arena footprint.
CellGrid grid_for_scene(const SceneModel& scene, double cell_size);

}  // namespace beings
