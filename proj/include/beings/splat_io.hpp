#pragma once

#include <string>
#include <vector>

#include "beings/scene.hpp"

namespace beings {

// Binary little-endian splat PLY. Required float32 per-vertex properties:
//   x y z              mean (meters)
//   scale_0..scale_2   log-space scales; exp() applied on load
//   rot_0..rot_3       quaternion (w, x, y, z), normalized on load
//   opacity            pre-squash; sigmoid applied on load
//   f_dc_0..f_dc_2     degree-0 SH color; 0.5 + C0*f_dc, clamped to [0,1]
// Unknown properties (normals, higher-order SH) are skipped. Parse errors name
// the offending record.
std::vector<Gaussian3D> load_splats(const std::string& path);

// Inverse of load_splats for fixtures; opacities are clamped away from {0,1}
// so the logit is finite.
void save_splats(const std::string& path, const std::vector<Gaussian3D>& splats);

}  // namespace beings
