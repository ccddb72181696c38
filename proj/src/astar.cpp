#include "beings/astar.hpp"

#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

namespace beings {

namespace {

struct QueueEntry {
    double f;
    int cell;
    bool operator>(const QueueEntry& other) const { return f > other.f; }
};

}  // namespace

double shortest_path_length(const SceneModel& scene, const Vec2& start, const Vec2& goal,
                            double robot_radius, double lattice) {
    if (!(lattice > 0.0)) throw std::invalid_argument("shortest_path_length: lattice <= 0");
    const Vec2 lo = scene.bounds.min().head<2>();
    const Vec2 hi = scene.bounds.max().head<2>();
    const int nx = std::max(1, int(std::round((hi.x() - lo.x()) / lattice)));
    const int ny = std::max(1, int(std::round((hi.y() - lo.y()) / lattice)));

    auto to_cell = [&](const Vec2& p) {
        int ix = std::clamp(int(std::floor((p.x() - lo.x()) / lattice)), 0, nx - 1);
        int iy = std::clamp(int(std::floor((p.y() - lo.y()) / lattice)), 0, ny - 1);
        return iy * nx + ix;
    };
    auto center = [&](int cell) {
        return Vec2(lo.x() + (cell % nx + 0.5) * lattice, lo.y() + (cell / nx + 0.5) * lattice);
    };

    // blocked = center within robot_radius of an obstacle footprint
    std::vector<char> blocked(static_cast<size_t>(nx) * ny, 0);
    for (const auto& ob : scene.obstacles) {
        const Vec2 omin = ob.min().head<2>().array() - robot_radius;
        const Vec2 omax = ob.max().head<2>().array() + robot_radius;
        const int x0 = std::clamp(int(std::floor((omin.x() - lo.x()) / lattice)), 0, nx - 1);
        const int x1 = std::clamp(int(std::ceil((omax.x() - lo.x()) / lattice)), 0, nx - 1);
        const int y0 = std::clamp(int(std::floor((omin.y() - lo.y()) / lattice)), 0, ny - 1);
        const int y1 = std::clamp(int(std::ceil((omax.y() - lo.y()) / lattice)), 0, ny - 1);
        for (int iy = y0; iy <= y1; ++iy)
            for (int ix = x0; ix <= x1; ++ix) {
                const Vec2 c = center(iy * nx + ix);
                const double dx = std::max({ob.min().x() - c.x(), 0.0, c.x() - ob.max().x()});
                const double dy = std::max({ob.min().y() - c.y(), 0.0, c.y() - ob.max().y()});
                if (std::hypot(dx, dy) <= robot_radius) blocked[iy * nx + ix] = 1;
            }
    }

    const int start_cell = to_cell(start);
    const int goal_cell = to_cell(goal);
    if (start_cell == goal_cell) return 0.0;
    // start/goal cells are usable even when brushed by inflation
    blocked[start_cell] = 0;
    blocked[goal_cell] = 0;

    const Vec2 goal_center = center(goal_cell);
    std::vector<double> g(static_cast<size_t>(nx) * ny, std::numeric_limits<double>::infinity());
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>> open;
    g[start_cell] = 0.0;
    open.push({(center(start_cell) - goal_center).norm(), start_cell});

    const int dx8[] = {1, -1, 0, 0, 1, 1, -1, -1};
    const int dy8[] = {0, 0, 1, -1, 1, -1, 1, -1};
    while (!open.empty()) {
        const auto [f, cell] = open.top();
        open.pop();
        if (cell == goal_cell) return g[cell];
        const int ix = cell % nx, iy = cell / nx;
        for (int k = 0; k < 8; ++k) {
            const int jx = ix + dx8[k], jy = iy + dy8[k];
            if (jx < 0 || jx >= nx || jy < 0 || jy >= ny) continue;
            const int next = jy * nx + jx;
            if (blocked[next]) continue;
            const double step_len = (k < 4 ? 1.0 : M_SQRT2) * lattice;
            if (g[cell] + step_len < g[next]) {
                g[next] = g[cell] + step_len;
                open.push({g[next] + (center(next) - goal_center).norm(), next});
            }
        }
    }
    throw std::runtime_error("shortest_path_length: goal unreachable");
}

}  // namespace beings
