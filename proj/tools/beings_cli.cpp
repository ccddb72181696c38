#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "beings/episode.hpp"
#include "beings/log.hpp"
#include "beings/splat_io.hpp"

namespace {

using namespace beings;

struct CliOptions {
    EpisodeConfig episode;
    std::string difficulty = "easy";
    std::string strategy = "beings";
    std::vector<double> start;  // x y z theta
    std::string out;
    std::string svg;
    std::string log_path;
    std::vector<double> pose{5, 5, 1, 0};
    int cam_width = 256;
    int cam_height = 192;
    double cam_hfov_deg = 80.0;
};

void add_common_options(CLI::App* cmd, CliOptions& opt) {
    cmd->add_option("--scene", opt.episode.scene_path, "scene file instead of a generated task");
    cmd->add_option("--difficulty", opt.difficulty, "easy | medium | hard")
        ->check(CLI::IsMember({"easy", "medium", "hard"}));
    cmd->add_option("--strategy", opt.strategy,
                    "beings | directly | random | bayes-only | mcmpc-only")
        ->check(CLI::IsMember({"beings", "directly", "random", "bayes-only", "mcmpc-only"}));
    cmd->add_option("--start", opt.start, "start pose x y z theta (required with --scene)")
        ->expected(4);
    cmd->add_option("--max-steps", opt.episode.max_steps, "control step budget");
    cmd->add_option("--epsilon", opt.episode.epsilon, "success threshold on dissimilarity");
    cmd->add_option("--cell-size", opt.episode.cell_size, "belief cell size, meters");
    cmd->add_option("--rollouts", opt.episode.planner.rollouts, "rollout count N");
    cmd->add_option("--horizon", opt.episode.planner.horizon, "MPC horizon K");
    cmd->add_option("--mutation-prob", opt.episode.planner.mutation_prob);
    cmd->add_option("--magnitude-sigma", opt.episode.planner.magnitude_sigma);
    cmd->add_option("--temperature", opt.episode.planner.temperature);
    cmd->add_option("--threads", opt.episode.planner.threads, "parallel rollout evaluation");
    cmd->add_option("--translation-bound", opt.episode.planner.bounds.translation);
    cmd->add_option("--yaw-bound", opt.episode.planner.bounds.yaw);
    cmd->add_option("--distance-rate", opt.episode.cost.distance_rate);
    cmd->add_option("--collision-penalty", opt.episode.cost.collision_penalty);
    cmd->add_option("--prob-floor", opt.episode.cost.prob_floor);
    cmd->add_option("--terminal-weight", opt.episode.cost.terminal_weight);
    cmd->add_option("--robot-radius", opt.episode.cost.robot_radius);
}

void finalize(CliOptions& opt) {
    opt.episode.difficulty = *difficulty_from_string(opt.difficulty);
    opt.episode.strategy = *strategy_from_string(opt.strategy);
    if (!opt.start.empty())
        opt.episode.start_pose = Pose(opt.start[0], opt.start[1], opt.start[2], opt.start[3]);
}

std::ofstream open_or_die(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    return f;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"image-goal navigation simulator"};
    app.set_config("--config", "", "read options from an INI file");
    app.require_subcommand(1);

    CliOptions opt;

    auto* run = app.add_subcommand("run", "run a single episode");
    add_common_options(run, opt);
    run->add_option("--seed", opt.episode.seed, "task and planner seed");
    run->add_option("--log", opt.log_path, "episode log path (JSONL); default stdout");
    run->add_option("--svg", opt.svg, "write a top-down SVG of the episode");

    auto* batch = app.add_subcommand("batch", "run trials and report SR/SPC/NE/NS");
    add_common_options(batch, opt);
    batch->add_option("--seed", opt.episode.seed, "base seed (per-trial seeds derive from it)")
        ->required();
    batch->add_option("--trials", opt.episode.trials, "number of episodes");
    batch->add_option("--batch-threads", opt.episode.batch_threads, "parallel trials");
    batch->add_option("--csv", opt.out, "summary CSV path; default stdout");
    batch->add_option("--log", opt.log_path, "concatenated episode logs (JSONL)");

    auto* render_cmd = app.add_subcommand("render", "render a debug view from a pose");
    render_cmd->add_option("--scene", opt.episode.scene_path, "scene file")->required();
    render_cmd->add_option("--pose", opt.pose, "camera pose x y z theta")->expected(4);
    render_cmd->add_option("--out", opt.out, "output image (binary PPM)")->required();
    render_cmd->add_option("--width", opt.cam_width);
    render_cmd->add_option("--height", opt.cam_height);
    render_cmd->add_option("--hfov", opt.cam_hfov_deg, "horizontal field of view, degrees");

    auto* tasks = app.add_subcommand("tasks", "write generated task scene files");
    tasks->add_option("--seed", opt.episode.seed, "task seed")->required();
    tasks->add_option("--out-dir", opt.out, "output directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            finalize(opt);
            const EpisodeRun episode = run_episode(opt.episode);
            if (opt.log_path.empty()) {
                write_episode_log(std::cout, episode.task, opt.episode, episode.result);
            } else {
                auto f = open_or_die(opt.log_path);
                write_episode_log(f, episode.task, opt.episode, episode.result);
            }
            if (!opt.svg.empty()) {
                auto f = open_or_die(opt.svg);
                write_episode_svg(f, episode.task, opt.episode, episode.result);
            }
            std::cerr << (episode.result.success ? "success" : "failure") << " steps="
                      << episode.result.steps << " cost=" << episode.result.total_cost
                      << " ne=" << episode.result.ne << "\n";
        } else if (batch->parsed()) {
            finalize(opt);
            std::vector<EpisodeRun> episodes;
            const BatchSummary summary =
                run_batch(opt.episode, opt.log_path.empty() ? nullptr : &episodes);
            if (!opt.log_path.empty()) {
                auto f = open_or_die(opt.log_path);
                for (const auto& e : episodes) write_episode_log(f, e.task, opt.episode, e.result);
            }
            if (opt.out.empty()) {
                std::cout << batch_csv(summary);
            } else {
                open_or_die(opt.out) << batch_csv(summary);
            }
        } else if (render_cmd->parsed()) {
            const SceneModel scene = load_scene(opt.episode.scene_path);
            const Camera cam = Camera::from_fov(opt.cam_width, opt.cam_height,
                                                opt.cam_hfov_deg * M_PI / 180.0);
            const Pose pose(opt.pose[0], opt.pose[1], opt.pose[2], opt.pose[3]);
            write_ppm(opt.out, render(scene, cam, pose));
        } else if (tasks->parsed()) {
            std::filesystem::create_directories(opt.out);
            for (auto difficulty : {Difficulty::Easy, Difficulty::Medium, Difficulty::Hard}) {
                const Task task = make_task(difficulty, opt.episode.seed);
                const auto path =
                    std::filesystem::path(opt.out) / (to_string(difficulty) + ".scene");
                save_scene(path.string(), task.scene);
                std::cout << path.string() << "  start: " << task.start.x << " " << task.start.y
                          << " " << task.start.z << " " << task.start.theta << "\n";
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
