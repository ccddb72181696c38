#pragma once

#include <Eigen/Dense>
#include <Eigen/Geometry>
#include <string>
#include <vector>

#include "beings/core.hpp"

namespace beings {

// Axis-aligned colored box, the primitive of the procedural backend.
struct ColoredBox {
    Eigen::AlignedBox3d box;
    Eigen::Vector3f color{0.5f, 0.5f, 0.5f};
};

inline Eigen::AlignedBox3d box_from_center(const Vec3& center, const Vec3& size) {
    return Eigen::AlignedBox3d(center - size / 2.0, center + size / 2.0);
}

// One 3-D Gaussian primitive of the splat backend, post-activation: scales in
// meters, unit quaternion, opacity and color in [0,1].
struct Gaussian3D {
    Vec3 mean = Vec3::Zero();
    Vec3 scale = Vec3::Ones();
    Eigen::Quaterniond rotation = Eigen::Quaterniond::Identity();
    double opacity = 1.0;
    Eigen::Vector3f color{1.0f, 1.0f, 1.0f};
};

void validate_gaussian(const Gaussian3D& g, int record_index);

// Renderable scene prior plus obstacle geometry and the goal pose. Exactly one
// backend is active: the procedural box list or the splat set.
struct SceneModel {
    Eigen::AlignedBox3d bounds{Vec3(0, 0, 0), Vec3(10, 10, 2)};
    std::vector<Eigen::AlignedBox3d> obstacles;
    Pose goal_pose;
    Eigen::Vector3f background{0.08f, 0.08f, 0.10f};

    std::vector<ColoredBox> boxes;      // procedural backend
    std::vector<Gaussian3D> splats;     // splat backend
    bool use_splats = false;
};

// Throws std::invalid_argument if obstacles leave the bounds or the goal pose
// is out of bounds / inside an obstacle.
void validate_scene(const SceneModel& scene);

// Minimum distance between segment [a,b] and an axis-aligned box (0 when they
// intersect).
double segment_box_distance(const Vec3& a, const Vec3& b, const Eigen::AlignedBox3d& box);

// True iff the straight move from a to b passes within `radius` of any
// obstacle, or either endpoint lies outside the arena bounds.
bool segment_collides(const SceneModel& scene, const Pose& a, const Pose& b, double radius);

// Declarative scene text format (see README): bounds / background / goal /
// box / decor / splat_file directives, one per line.
SceneModel load_scene(const std::string& path);
SceneModel parse_scene(const std::string& text, const std::string& source_dir = "");
void save_scene(const std::string& path, const SceneModel& scene);
std::string scene_to_text(const SceneModel& scene);

}  // namespace beings
