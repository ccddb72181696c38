#pragma once

#include <Eigen/Dense>
#include <stdexcept>

#include "beings/core.hpp"

namespace beings {

// Pinhole intrinsics. The optical axis is the body +X axis (the camera looks
// where the robot faces); image x points to the robot's right, image y down.
struct Camera {
    int width = 64;
    int height = 48;
    double fx = 38.0;
    double fy = 38.0;
    double cx = 32.0;
    double cy = 24.0;

    Camera() = default;
    Camera(int w, int h, double fx_, double fy_, double cx_, double cy_)
        : width(w), height(h), fx(fx_), fy(fy_), cx(cx_), cy(cy_) {
        if (w < 8 || h < 8) throw std::invalid_argument("Camera: width/height must be >= 8");
        if (!(fx > 0.0) || !(fy > 0.0)) throw std::invalid_argument("Camera: focal length must be > 0");
    }

    static Camera from_fov(int w, int h, double hfov_rad) {
        const double f = w / (2.0 * std::tan(hfov_rad / 2.0));
        return Camera(w, h, f, f, w / 2.0, h / 2.0);
    }
};

// Rotation taking camera coordinates (x right, y down, z forward) to world
// coordinates, for a robot at yaw theta with a level camera.
inline Eigen::Matrix3d camera_to_world_rotation(const Pose& pose) {
    const double c = std::cos(pose.theta);
    const double s = std::sin(pose.theta);
    Eigen::Matrix3d r;
    r.col(0) = Eigen::Vector3d(s, -c, 0.0);   // image right
    r.col(1) = Eigen::Vector3d(0.0, 0.0, -1.0);  // image down
    r.col(2) = Eigen::Vector3d(c, s, 0.0);    // optical axis
    return r;
}

}  // namespace beings
