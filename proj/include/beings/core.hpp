#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace beings {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;

// Wrap an angle to (-pi, pi]. Throws on non-finite input.
inline double wrap_angle(double theta) {
    if (!std::isfinite(theta))
        throw std::invalid_argument("wrap_angle: non-finite angle");
    double w = std::remainder(theta, 2.0 * M_PI);  // [-pi, pi]
    if (w <= -M_PI) w = M_PI;
    return w;
}

// 4-DoF robot state: position in the inertial frame plus yaw about Z.
struct Pose {
    double x = 0.0;      // meters
    double y = 0.0;      // meters
    double z = 0.0;      // meters
    double theta = 0.0;  // radians, wrapped to (-pi, pi]

    Pose() = default;
    Pose(double x_, double y_, double z_, double theta_)
        : x(x_), y(y_), z(z_), theta(wrap_angle(theta_)) {}

    Vec3 position() const { return {x, y, z}; }
    Vec2 xy() const { return {x, y}; }

    bool operator==(const Pose&) const = default;
};

// Equal-area partition of the arena floor plane into nx*ny square cells,
// indexed row-major: index = iy*nx + ix.
struct CellGrid {
    Vec2 origin{0.0, 0.0};
    double cell_size = 1.0;  // meters
    int nx = 10;
    int ny = 10;

    CellGrid() = default;
    CellGrid(const Vec2& origin_, double cell_size_, int nx_, int ny_)
        : origin(origin_), cell_size(cell_size_), nx(nx_), ny(ny_) {
        if (!(cell_size > 0.0) || nx < 1 || ny < 1)
            throw std::invalid_argument("CellGrid: cell_size must be > 0 and nx, ny >= 1");
    }

    int cell_count() const { return nx * ny; }
    double width() const { return nx * cell_size; }
    double height() const { return ny * cell_size; }
};

// Cell containing (x, y), or nullopt outside the footprint. z and theta are
// marginalized out. Points exactly on the far footprint edge fall into the
// last row/column so the map is total over the closed footprint.
inline std::optional<int> try_cell_index(const CellGrid& grid, const Pose& pose) {
    const double rx = pose.x - grid.origin.x();
    const double ry = pose.y - grid.origin.y();
    if (rx < 0.0 || ry < 0.0 || rx > grid.width() || ry > grid.height())
        return std::nullopt;
    int ix = static_cast<int>(std::floor(rx / grid.cell_size));
    int iy = static_cast<int>(std::floor(ry / grid.cell_size));
    if (ix >= grid.nx) ix = grid.nx - 1;
    if (iy >= grid.ny) iy = grid.ny - 1;
    return iy * grid.nx + ix;
}

inline int cell_index(const CellGrid& grid, const Pose& pose) {
    if (auto idx = try_cell_index(grid, pose)) return *idx;
    throw std::out_of_range("cell_index: pose outside grid footprint");
}

inline Vec2 cell_center(const CellGrid& grid, int index) {
    if (index < 0 || index >= grid.cell_count())
        throw std::out_of_range("cell_center: bad cell index");
    const int ix = index % grid.nx;
    const int iy = index / grid.nx;
    return grid.origin + Vec2((ix + 0.5) * grid.cell_size, (iy + 0.5) * grid.cell_size);
}

// RGB image, channels in [0,1]. Pixels stored one per column in row-major
// pixel order (column y*width + x).
struct Image {
    int width = 0;
    int height = 0;
    Eigen::Matrix3Xf pixels;

    Image() = default;
    Image(int w, int h) : width(w), height(h), pixels(Eigen::Matrix3Xf::Zero(3, w * h)) {
        if (w <= 0 || h <= 0) throw std::invalid_argument("Image: non-positive size");
    }

    static Image filled(int w, int h, const Eigen::Vector3f& color) {
        Image img(w, h);
        img.pixels.colwise() = color;
        return img;
    }

    int index(int x, int y) const { return y * width + x; }
    Eigen::Vector3f at(int x, int y) const { return pixels.col(index(x, y)); }
};

// Unit-norm feature vector; dimension is fixed by the describe() configuration.
struct Descriptor {
    Eigen::VectorXd values;

    Descriptor() = default;
    explicit Descriptor(Eigen::VectorXd v) : values(std::move(v)) {
        const double n = values.norm();
        if (!(n > 1e-12) || !std::isfinite(n))
            throw std::invalid_argument("Descriptor: cannot normalize near-zero vector");
        values /= n;
    }

    int dim() const { return static_cast<int>(values.size()); }
};

}  // namespace beings
