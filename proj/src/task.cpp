#include "beings/task.hpp"

#include <cmath>

#include "beings/rng.hpp"

namespace beings {

namespace {

// 2-D distance from point p to segment [a, b]
double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
    const Vec2 ab = b - a;
    const double len2 = ab.squaredNorm();
    const double t = len2 > 0.0 ? std::clamp((p - a).dot(ab) / len2, 0.0, 1.0) : 0.0;
    return (p - (a + t * ab)).norm();
}

void add_wall_strips(SceneModel& scene) {
    const double hz = 1.0, sh = 0.5, th = 0.1;
    scene.boxes.push_back({box_from_center({5.0, 9.95, hz}, {10.0, th, sh}), {0.15f, 0.30f, 0.95f}});
    scene.boxes.push_back({box_from_center({9.95, 5.0, hz}, {th, 10.0, sh}), {0.20f, 0.85f, 0.30f}});
    scene.boxes.push_back({box_from_center({5.0, 0.05, hz}, {10.0, th, sh}), {0.95f, 0.85f, 0.20f}});
    scene.boxes.push_back({box_from_center({0.05, 5.0, hz}, {th, 10.0, sh}), {0.85f, 0.25f, 0.80f}});
    // floor slab: a smooth shading gradient in the lower half of every view
    scene.boxes.push_back({box_from_center({5.0, 5.0, 0.025}, {10.0, 10.0, 0.05}), {0.35f, 0.36f, 0.40f}});
}

}  // namespace

CellGrid grid_for_scene(const SceneModel& scene, double cell_size) {
    const Vec2 lo = scene.bounds.min().head<2>();
    const Vec2 hi = scene.bounds.max().head<2>();
    const int nx = std::max(1, int(std::round((hi.x() - lo.x()) / cell_size)));
    const int ny = std::max(1, int(std::round((hi.y() - lo.y()) / cell_size)));
    return CellGrid(lo, cell_size, nx, ny);
}

Task make_task(Difficulty difficulty, std::uint64_t seed) {
    std::mt19937_64 rng(derive_seed(seed, 0xbee5));

    SceneModel scene;
    scene.bounds = Eigen::AlignedBox3d(Vec3(0, 0, 0), Vec3(10, 10, 2));
    scene.background = Eigen::Vector3f(0.08f, 0.08f, 0.10f);
    add_wall_strips(scene);

    // target structure against a seeded wall: a wide panel with two
    // asymmetric markers so that both bearing and yaw sign are identifiable
    const int wall = uniform_int(rng, 4);
    const double phi = std::array{0.0, M_PI / 2.0, M_PI, -M_PI / 2.0}[wall];
    const Vec2 dir(std::cos(phi), std::sin(phi));
    const Vec2 left(-std::sin(phi), std::cos(phi));
    const double along = uniform_range(rng, 3.2, 6.8);

    // target wall: a smooth color ramp across the whole goal wall, plus
    // asymmetric markers pinning the goal zone. Smooth content keeps the
    // descriptor tolerant to meter-scale pose error, so success means facing
    // the right wall section rather than matching the goal pose exactly.
    const int stripes = 4;
    const double wall_off = 0.45, stripe_w = 10.0 / stripes;
    for (int i = 0; i < stripes; ++i) {
        const double t = (i + 0.5) / stripes;
        const double along_c = (i + 0.5) * stripe_w - 5.0;
        const Vec2 c2 = Vec2(5.0, 5.0) + dir * (5.0 - wall_off) + left * along_c;
        const Vec3 size = wall % 2 == 0 ? Vec3(0.12, stripe_w, 1.9) : Vec3(stripe_w, 0.12, 1.9);
        scene.boxes.push_back({box_from_center(Vec3(c2.x(), c2.y(), 1.0), size),
                               {float(0.95 - 0.25 * t), float(0.15 + 0.75 * t), float(0.10 + 0.2 * t)}});
    }
    const Vec2 panel2 = Vec2(5.0, 5.0) + dir * (5.0 - wall_off) + left * (along - 5.0);
    const Vec3 panel(panel2.x(), panel2.y(), 1.0);
    const Vec3 lv(left.x(), left.y(), 0);
    const Vec3 dv(dir.x(), dir.y(), 0);
    scene.boxes.push_back(
        {box_from_center(panel + lv * 2.0 - dv * 0.35 + Vec3(0, 0, 0.5), Vec3(0.5, 0.5, 0.5)),
         {0.95f, 0.85f, 0.65f}});
    scene.boxes.push_back(
        {box_from_center(panel - lv * 2.0 - dv * 0.35 - Vec3(0, 0, 0.5), Vec3(0.5, 0.5, 0.5)),
         {0.25f, 0.45f, 0.70f}});

    const Vec2 goal2 = panel2 - dir * 2.8;
    scene.goal_pose = Pose(goal2.x(), goal2.y(), 1.0, phi);

    Pose start;
    switch (difficulty) {
        case Difficulty::Easy: {
            const double lateral = uniform_range(rng, -0.9, 0.9);
            const double back = uniform_range(rng, -0.5, 0.7);
            const Vec2 p = goal2 + left * lateral - dir * back;
            start = Pose(std::clamp(p.x(), 0.6, 9.4), std::clamp(p.y(), 0.6, 9.4),
                         1.0,
                         phi + M_PI + uniform_range(rng, -0.5, 0.5));
            break;
        }
        case Difficulty::Medium: {
            const double d = uniform_range(rng, 2.6, 3.4);
            const Vec2 p = goal2 - dir * d;
            start = Pose(std::clamp(p.x(), 0.6, 9.4), std::clamp(p.y(), 0.6, 9.4), 1.0,
                         phi + uniform_range(rng, -0.6, 0.6));
            const Vec2 mid = 0.5 * (start.xy() + goal2) + left * uniform_range(rng, -0.1, 0.1);
            const auto ob = box_from_center(Vec3(mid.x(), mid.y(), 0.75), Vec3(0.5, 0.5, 1.5));
            scene.obstacles.push_back(ob);
            scene.boxes.push_back({ob, {0.55f, 0.50f, 0.45f}});
            break;
        }
        case Difficulty::Hard: {
            const double d = uniform_range(rng, 4.6, 5.4);
            const Vec2 p = goal2 - dir * d;
            start = Pose(std::clamp(p.x(), 0.6, 9.4), std::clamp(p.y(), 0.6, 9.4), 1.0,
                         phi + uniform_range(rng, -0.6, 0.6));
            for (double frac : {0.3, 0.5, 0.7}) {
                const Vec2 at =
                    start.xy() + frac * (goal2 - start.xy()) + left * uniform_range(rng, -0.1, 0.1);
                const auto ob = box_from_center(Vec3(at.x(), at.y(), 0.75), Vec3(0.5, 0.5, 1.5));
                scene.obstacles.push_back(ob);
                scene.boxes.push_back({ob, {0.55f, 0.50f, 0.45f}});
            }
            break;
        }
    }

    // two decorative pillars, kept clear of the goal structure and the
    // start-goal corridor
    for (int k = 0; k < 2; ++k) {
        for (int attempt = 0; attempt < 50; ++attempt) {
            const Vec2 p(uniform_range(rng, 1.2, 8.8), uniform_range(rng, 1.2, 8.8));
            if ((p - panel2).norm() < 3.2) continue;
            if ((p - goal2).norm() < 1.6) continue;
            if (point_segment_distance(p, start.xy(), goal2) < 1.4) continue;
            scene.boxes.push_back(
                {box_from_center(Vec3(p.x(), p.y(), 0.8), Vec3(0.4, 0.4, 1.6)), {0.45f, 0.47f, 0.52f}});
            break;
        }
    }

    validate_scene(scene);
    return {scene, start};
}

}  // namespace beings
