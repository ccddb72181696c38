#include "beings/scene.hpp"

#include <cmath>
#include <stdexcept>

namespace beings {

void validate_gaussian(const Gaussian3D& g, int record_index) {
    const std::string where = "splat record " + std::to_string(record_index);
    if (!g.mean.allFinite()) throw std::invalid_argument(where + ": non-finite mean");
    if (!g.scale.allFinite() || (g.scale.array() <= 0.0).any())
        throw std::invalid_argument(where + ": scale components must be finite and > 0");
    if (!std::isfinite(g.rotation.norm()) || std::abs(g.rotation.norm() - 1.0) > 1e-6)
        throw std::invalid_argument(where + ": quaternion not unit-norm");
    if (!std::isfinite(g.opacity) || g.opacity < 0.0 || g.opacity > 1.0)
        throw std::invalid_argument(where + ": opacity outside [0,1]");
    if (!g.color.allFinite() || (g.color.array() < 0.0f).any() || (g.color.array() > 1.0f).any())
        throw std::invalid_argument(where + ": color outside [0,1]");
}

void validate_scene(const SceneModel& scene) {
    if (scene.bounds.isEmpty()) throw std::invalid_argument("scene: empty bounds");
    for (const auto& ob : scene.obstacles) {
        if (!scene.bounds.contains(ob))
            throw std::invalid_argument("scene: obstacle outside bounds");
    }
    const Vec3 gp = scene.goal_pose.position();
    if (!scene.bounds.contains(gp))
        throw std::invalid_argument("scene: goal pose outside bounds");
    for (const auto& ob : scene.obstacles) {
        if (ob.contains(gp))
            throw std::invalid_argument("scene: goal pose inside an obstacle");
    }
    int i = 0;
    for (const auto& g : scene.splats) validate_gaussian(g, i++);
}

static double point_box_distance(const Vec3& p, const Eigen::AlignedBox3d& box) {
    return box.exteriorDistance(p);
}

// d(t) = dist(a + t*(b-a), box) is convex in t, so golden-section search on
// [0,1] converges to the global minimum.
double segment_box_distance(const Vec3& a, const Vec3& b, const Eigen::AlignedBox3d& box) {
    const double da = point_box_distance(a, box);
    const double db = point_box_distance(b, box);
    if (da == 0.0 || db == 0.0) return 0.0;

    constexpr double kInvPhi = 0.6180339887498949;
    double lo = 0.0, hi = 1.0;
    double t1 = hi - kInvPhi * (hi - lo);
    double t2 = lo + kInvPhi * (hi - lo);
    double f1 = point_box_distance(a + t1 * (b - a), box);
    double f2 = point_box_distance(a + t2 * (b - a), box);
    for (int it = 0; it < 80; ++it) {
        if (f1 < f2) {
            hi = t2; t2 = t1; f2 = f1;
            t1 = hi - kInvPhi * (hi - lo);
            f1 = point_box_distance(a + t1 * (b - a), box);
        } else {
            lo = t1; t1 = t2; f1 = f2;
            t2 = lo + kInvPhi * (hi - lo);
            f2 = point_box_distance(a + t2 * (b - a), box);
        }
    }
    return std::min({da, db, f1, f2});
}

bool segment_collides(const SceneModel& scene, const Pose& a, const Pose& b, double radius) {
    if (radius < 0.0) throw std::invalid_argument("segment_collides: negative radius");
    const Vec3 pa = a.position();
    const Vec3 pb = b.position();
    if (!scene.bounds.contains(pa) || !scene.bounds.contains(pb)) return true;

    Eigen::AlignedBox3d seg_box(pa.cwiseMin(pb), pa.cwiseMax(pb));
    for (const auto& ob : scene.obstacles) {
        // cheap reject on the segment's bounding box before the 1-D search
        if (ob.exteriorDistance(seg_box.center()) >
            radius + (seg_box.max() - seg_box.min()).norm() / 2.0 + 1e-12)
            continue;
        if (segment_box_distance(pa, pb, ob) <= radius) return true;
    }
    return false;
}

}  // namespace beings
