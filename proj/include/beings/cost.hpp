#pragma once

#include "beings/belief.hpp"
#include "beings/camera.hpp"
#include "beings/motion.hpp"
#include "beings/render.hpp"
#include "beings/scene.hpp"
#include "beings/similarity.hpp"

namespace beings {

struct CostConfig {
    double distance_rate = 50.0;       // cost per meter moved
    double collision_penalty = 1000.0; // per colliding step
    double prob_floor = 1e-6;          // floors both factors of the Eq.-style denominator
    double terminal_weight = 1.0;      // weight of the terminal dissimilarity term
    double robot_radius = 0.3;         // collision body, meters
};

// distance_rate * ||position delta|| plus collision_penalty when the straight
// move collides or leaves the arena. Yaw-only steps cost nothing.
double movement_cost(const SceneModel& scene, const Pose& s, const Pose& s_next,
                     const CostConfig& cfg);

// One-step exploration cost: c / (max(p, floor) * max(q, floor)).
double exploration_cost(double c_move, double p_next, double q_next, const CostConfig& cfg);

// Full rollout objective: terminal dissimilarity at the final pose plus the
// exploration cost of each transition, with detection probabilities evaluated
// on images rendered from the scene prior. The trajectory must equal
// propagate(trajectory[0], controls).
double rollout_cost(const SceneModel& scene, const Camera& camera, const Descriptor& goal_desc,
                    const GridBelief& belief, const std::vector<Pose>& trajectory,
                    const ControlSequence& controls, const CostConfig& cfg);

// Unnormalized rollout weight exp(-J); +inf maps to 0.
double weight(double j);

}  // namespace beings
