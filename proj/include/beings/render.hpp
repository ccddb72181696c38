#pragma once

#include "beings/camera.hpp"
#include "beings/scene.hpp"

namespace beings {

// Per-pixel compositing bookkeeping of the splat backend: blend weights
// accumulated toward splat colors and the transmittance left for the
// background. weight_sum + transmittance == 1 at every pixel.
struct SplatRenderStats {
    Eigen::ArrayXd weight_sum;
    Eigen::ArrayXd transmittance;
};

// Pose -> image oracle. Pure: identical inputs give bit-identical images.
// Dispatches to the scene's active backend.
Image render(const SceneModel& scene, const Camera& camera, const Pose& pose);

// Analytic per-pixel ray cast against the colored box list.
Image render_procedural(const SceneModel& scene, const Camera& camera, const Pose& pose);

// Projects each Gaussian through the pinhole Jacobian to a 2-D footprint
// (truncated at 3 sigma), depth-sorts globally, and alpha-composites
// front-to-back.
Image render_splats(const SceneModel& scene, const Camera& camera, const Pose& pose,
                    SplatRenderStats* stats = nullptr);

}  // namespace beings
