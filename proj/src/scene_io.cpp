#include <filesystem>
#include <fstream>
#include <sstream>

#include "beings/scene.hpp"
#include "beings/splat_io.hpp"

namespace beings {

namespace {

std::vector<double> parse_numbers(std::istringstream& iss, size_t count, int line_no,
                                  const std::string& directive) {
    std::vector<double> vals(count);
    for (size_t i = 0; i < count; ++i) {
        if (!(iss >> vals[i]))
            throw std::runtime_error("scene line " + std::to_string(line_no) + ": '" + directive +
                                     "' expects " + std::to_string(count) + " numbers");
    }
    return vals;
}

}  // namespace

SceneModel parse_scene(const std::string& text, const std::string& source_dir) {
    SceneModel scene;
    scene.obstacles.clear();
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool have_goal = false;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream iss(line);
        std::string directive;
        if (!(iss >> directive)) continue;

        if (directive == "bounds") {
            auto v = parse_numbers(iss, 6, line_no, directive);
            scene.bounds = Eigen::AlignedBox3d(Vec3(v[0], v[1], v[2]), Vec3(v[3], v[4], v[5]));
        } else if (directive == "background") {
            auto v = parse_numbers(iss, 3, line_no, directive);
            scene.background = Eigen::Vector3f(float(v[0]), float(v[1]), float(v[2]));
        } else if (directive == "goal") {
            auto v = parse_numbers(iss, 4, line_no, directive);
            scene.goal_pose = Pose(v[0], v[1], v[2], v[3]);
            have_goal = true;
        } else if (directive == "box" || directive == "decor") {
            auto v = parse_numbers(iss, 9, line_no, directive);
            ColoredBox cb;
            cb.box = box_from_center(Vec3(v[0], v[1], v[2]), Vec3(v[3], v[4], v[5]));
            cb.color = Eigen::Vector3f(float(v[6]), float(v[7]), float(v[8]));
            scene.boxes.push_back(cb);
            if (directive == "box") scene.obstacles.push_back(cb.box);
        } else if (directive == "splat_file") {
            std::string rel;
            if (!(iss >> rel))
                throw std::runtime_error("scene line " + std::to_string(line_no) +
                                         ": 'splat_file' expects a path");
            std::filesystem::path p(rel);
            if (p.is_relative() && !source_dir.empty()) p = std::filesystem::path(source_dir) / p;
            scene.splats = load_splats(p.string());
            scene.use_splats = true;
        } else {
            throw std::runtime_error("scene line " + std::to_string(line_no) +
                                     ": unknown directive '" + directive + "'");
        }
    }
    if (!have_goal) throw std::runtime_error("scene: missing 'goal' directive");
    validate_scene(scene);
    return scene;
}

SceneModel load_scene(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open scene file: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_scene(ss.str(), std::filesystem::path(path).parent_path().string());
}

std::string scene_to_text(const SceneModel& scene) {
    std::ostringstream out;
    out.precision(17);
    const Vec3 lo = scene.bounds.min(), hi = scene.bounds.max();
    out << "bounds " << lo.x() << " " << lo.y() << " " << lo.z() << " "
        << hi.x() << " " << hi.y() << " " << hi.z() << "\n";
    out << "background " << scene.background.x() << " " << scene.background.y() << " "
        << scene.background.z() << "\n";
    out << "goal " << scene.goal_pose.x << " " << scene.goal_pose.y << " "
        << scene.goal_pose.z << " " << scene.goal_pose.theta << "\n";
    for (const auto& cb : scene.boxes) {
        bool is_obstacle = false;
        for (const auto& ob : scene.obstacles) {
            if (ob.min() == cb.box.min() && ob.max() == cb.box.max()) {
                is_obstacle = true;
                break;
            }
        }
        const Vec3 c = cb.box.center();
        const Vec3 s = cb.box.max() - cb.box.min();
        out << (is_obstacle ? "box " : "decor ") << c.x() << " " << c.y() << " " << c.z() << " "
            << s.x() << " " << s.y() << " " << s.z() << " " << cb.color.x() << " "
            << cb.color.y() << " " << cb.color.z() << "\n";
    }
    return out.str();
}

void save_scene(const std::string& path, const SceneModel& scene) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write scene file: " + path);
    f << scene_to_text(scene);
}

}  // namespace beings
