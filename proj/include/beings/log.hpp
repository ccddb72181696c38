#pragma once

#include <ostream>
#include <string>

#include "beings/episode.hpp"

namespace beings {

// Line-delimited JSON episode log: one header record, one record per control
// step (pose, control, cost, belief masses, rollout weights and
// trajectories), one summary record. Contains nothing run-dependent beyond
// the episode itself, so identical runs serialize byte-identically.
void write_episode_log(std::ostream& out, const Task& task, const EpisodeConfig& cfg,
                       const EpisodeResult& result);
std::string episode_log_string(const Task& task, const EpisodeConfig& cfg,
                               const EpisodeResult& result);

// Top-down SVG sketch of an episode: belief shading, obstacles, executed
// trajectory, and the best rollout of each step.
void write_episode_svg(std::ostream& out, const Task& task, const EpisodeConfig& cfg,
                       const EpisodeResult& result);

// 8-bit binary PPM; the float image is quantized only at this boundary.
void write_ppm(const std::string& path, const Image& image);

}  // namespace beings
