#include "beings/log.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace beings {

namespace {

using nlohmann::json;

json pose_json(const Pose& p) { return json::array({p.x, p.y, p.z, p.theta}); }

json vec_json(const Eigen::VectorXd& v) {
    json arr = json::array();
    for (int i = 0; i < v.size(); ++i) arr.push_back(v[i]);
    return arr;
}

const char* channel_name(Channel c) {
    switch (c) {
        case Channel::VX: return "vx";
        case Channel::VY: return "vy";
        case Channel::VZ: return "vz";
        case Channel::YAW: return "yaw";
    }
    return "?";
}

json box_json(const Eigen::AlignedBox3d& b) {
    return json::array({b.min().x(), b.min().y(), b.min().z(), b.max().x(), b.max().y(),
                        b.max().z()});
}

}  // namespace

void write_episode_log(std::ostream& out, const Task& task, const EpisodeConfig& cfg,
                       const EpisodeResult& result) {
    json header{{"type", "header"},
                {"strategy", to_string(cfg.strategy)},
                {"seed", cfg.seed},
                {"max_steps", cfg.max_steps},
                {"epsilon", cfg.epsilon},
                {"start", pose_json(result.trajectory.front())},
                {"goal_pose", pose_json(task.scene.goal_pose)},
                {"bounds", box_json(task.scene.bounds)}};
    json obstacles = json::array();
    for (const auto& ob : task.scene.obstacles) obstacles.push_back(box_json(ob));
    header["obstacles"] = obstacles;
    out << header.dump() << "\n";

    for (const auto& rec : result.records) {
        json line{{"type", "step"},
                  {"step", rec.step},
                  {"pose", pose_json(rec.pose)},
                  {"control", {{"channel", channel_name(rec.control.channel)},
                               {"magnitude", rec.control.magnitude}}},
                  {"cost", rec.step_cost},
                  {"dissimilarity", rec.dissimilarity},
                  {"collided", rec.collided},
                  {"belief", vec_json(rec.belief)},
                  {"weights", vec_json(rec.weights)},
                  {"best", rec.best_rollout}};
        json rollouts = json::array();
        for (const auto& traj : rec.rollouts) {
            json jt = json::array();
            for (const auto& p : traj) jt.push_back(pose_json(p));
            rollouts.push_back(jt);
        }
        line["rollouts"] = rollouts;
        out << line.dump() << "\n";
    }

    json summary{{"type", "summary"},
                 {"success", result.success},
                 {"steps", result.steps},
                 {"total_cost", result.total_cost},
                 {"final_pose", pose_json(result.final_pose)},
                 {"ne", result.ne},
                 {"min_ne", result.min_ne},
                 {"collisions", result.collisions},
                 {"final_dissimilarity", result.final_dissimilarity}};
    if (!result.diagnostic.empty()) summary["diagnostic"] = result.diagnostic;
    out << summary.dump() << "\n";
}

std::string episode_log_string(const Task& task, const EpisodeConfig& cfg,
                               const EpisodeResult& result) {
    std::ostringstream out;
    write_episode_log(out, task, cfg, result);
    return out.str();
}

void write_episode_svg(std::ostream& out, const Task& task, const EpisodeConfig& cfg,
                       const EpisodeResult& result) {
    const auto& scene = task.scene;
    const Vec2 lo = scene.bounds.min().head<2>();
    const Vec2 hi = scene.bounds.max().head<2>();
    const double scale = 50.0, margin = 10.0;
    const double w = (hi.x() - lo.x()) * scale + 2 * margin;
    const double h = (hi.y() - lo.y()) * scale + 2 * margin;
    auto sx = [&](double x) { return margin + (x - lo.x()) * scale; };
    auto sy = [&](double y) { return h - margin - (y - lo.y()) * scale; };

    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << w << "' height='" << h
        << "'>\n<rect width='100%' height='100%' fill='#f8f8f8'/>\n";

    // belief shading from the last snapshot
    if (!result.belief_snapshots.empty()) {
        const CellGrid grid = grid_for_scene(scene, cfg.cell_size);
        const Eigen::VectorXd& masses = result.belief_snapshots.back();
        const double peak = std::max(masses.maxCoeff(), 1e-12);
        for (int i = 0; i < grid.cell_count(); ++i) {
            const Vec2 c = cell_center(grid, i);
            out << "<rect x='" << sx(c.x() - grid.cell_size / 2) << "' y='"
                << sy(c.y() + grid.cell_size / 2) << "' width='" << grid.cell_size * scale
                << "' height='" << grid.cell_size * scale << "' fill='#3060c0' fill-opacity='"
                << 0.55 * masses[i] / peak << "'/>\n";
        }
    }

    for (const auto& cb : scene.boxes) {
        const bool solid = std::any_of(scene.obstacles.begin(), scene.obstacles.end(),
                                       [&](const auto& ob) { return ob.min() == cb.box.min(); });
        out << "<rect x='" << sx(cb.box.min().x()) << "' y='" << sy(cb.box.max().y())
            << "' width='" << (cb.box.max().x() - cb.box.min().x()) * scale << "' height='"
            << (cb.box.max().y() - cb.box.min().y()) * scale
            << (solid ? "' fill='#444444'/>\n" : "' fill='none' stroke='#aaaaaa'/>\n");
    }

    // best-rollout fan
    for (const auto& rec : result.records) {
        if (rec.best_rollout < 0 || rec.rollouts.empty()) continue;
        out << "<polyline fill='none' stroke='#70b0ff' stroke-width='1' points='";
        for (const auto& p : rec.rollouts[rec.best_rollout])
            out << sx(p.x) << "," << sy(p.y) << " ";
        out << "'/>\n";
    }

    out << "<polyline fill='none' stroke='#d03020' stroke-width='2' points='";
    for (const auto& p : result.trajectory) out << sx(p.x) << "," << sy(p.y) << " ";
    out << "'/>\n";

    const Pose& g = scene.goal_pose;
    out << "<circle cx='" << sx(result.trajectory.front().x) << "' cy='"
        << sy(result.trajectory.front().y) << "' r='5' fill='#d03020'/>\n";
    out << "<circle cx='" << sx(g.x) << "' cy='" << sy(g.y) << "' r='5' fill='#20a040'/>\n";
    out << "<line x1='" << sx(g.x) << "' y1='" << sy(g.y) << "' x2='"
        << sx(g.x + 0.6 * std::cos(g.theta)) << "' y2='" << sy(g.y + 0.6 * std::sin(g.theta))
        << "' stroke='#20a040' stroke-width='2'/>\n";
    out << "</svg>\n";
}

void write_ppm(const std::string& path, const Image& image) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write image: " + path);
    f << "P6\n" << image.width << " " << image.height << "\n255\n";
    for (int i = 0; i < image.pixels.cols(); ++i) {
        for (int c = 0; c < 3; ++c) {
            const float v = std::clamp(image.pixels(c, i), 0.0f, 1.0f);
            f.put(static_cast<char>(std::lround(v * 255.0f)));
        }
    }
}

}  // namespace beings
