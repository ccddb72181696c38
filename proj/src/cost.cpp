#include "beings/cost.hpp"

#include <cmath>
#include <stdexcept>

namespace beings {

double movement_cost(const SceneModel& scene, const Pose& s, const Pose& s_next,
                     const CostConfig& cfg) {
    const double dist = (s_next.position() - s.position()).norm();
    double cost = cfg.distance_rate * dist;
    if (segment_collides(scene, s, s_next, cfg.robot_radius)) cost += cfg.collision_penalty;
    return cost;
}

double exploration_cost(double c_move, double p_next, double q_next, const CostConfig& cfg) {
    return c_move / (std::max(p_next, cfg.prob_floor) * std::max(q_next, cfg.prob_floor));
}

double rollout_cost(const SceneModel& scene, const Camera& camera, const Descriptor& goal_desc,
                    const GridBelief& belief, const std::vector<Pose>& trajectory,
                    const ControlSequence& controls, const CostConfig& cfg) {
    const int k_horizon = controls.horizon();
    if (static_cast<int>(trajectory.size()) != k_horizon + 1)
        throw std::invalid_argument("rollout_cost: trajectory length must be horizon + 1");
    const std::vector<Pose> check = propagate(trajectory.front(), controls);
    for (int k = 0; k <= k_horizon; ++k)
        if (!(check[k] == trajectory[k]))
            throw std::invalid_argument("rollout_cost: trajectory does not match controls");

    double total = 0.0;
    double q_last = 1.0;  // at K=0 the terminal render is the start pose's
    if (k_horizon == 0) {
        q_last = detection_prob(goal_desc, describe(render(scene, camera, trajectory[0])));
    }
    for (int k = 0; k < k_horizon; ++k) {
        const Pose& s = trajectory[k];
        const Pose& s_next = trajectory[k + 1];
        const double c = movement_cost(scene, s, s_next, cfg);
        const double p = prob_mass(belief, s_next);
        q_last = detection_prob(goal_desc, describe(render(scene, camera, s_next)));
        total += exploration_cost(c, p, q_last, cfg);
    }
    // terminal dissimilarity reuses the final pose's render: D = 1 - q
    total += cfg.terminal_weight * (1.0 - q_last);
    return total;
}

double weight(double j) {
    if (std::isnan(j)) throw std::invalid_argument("weight: NaN cost");
    return j == std::numeric_limits<double>::infinity() ? 0.0 : std::exp(-j);
}

}  // namespace beings
