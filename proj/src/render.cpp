#include "beings/render.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace beings {

namespace {

constexpr double kZNear = 0.05;

struct RayHit {
    double t = std::numeric_limits<double>::infinity();
    int axis = -1;
    const ColoredBox* box = nullptr;
};

// Slab test; t is measured along the unit direction. From inside a box the
// exit face is reported, so cameras inside geometry see the box interior.
bool intersect_box(const Vec3& origin, const Vec3& dir, const Eigen::AlignedBox3d& box,
                   double& t_hit, int& hit_axis) {
    double t_enter = -std::numeric_limits<double>::infinity();
    double t_exit = std::numeric_limits<double>::infinity();
    int axis_enter = -1, axis_exit = -1;
    for (int a = 0; a < 3; ++a) {
        const double o = origin[a], d = dir[a];
        if (std::abs(d) < 1e-15) {
            if (o < box.min()[a] || o > box.max()[a]) return false;
            continue;
        }
        double ta = (box.min()[a] - o) / d;
        double tb = (box.max()[a] - o) / d;
        if (ta > tb) std::swap(ta, tb);
        if (ta > t_enter) {
            t_enter = ta;
            axis_enter = a;
        }
        if (tb < t_exit) {
            t_exit = tb;
            axis_exit = a;
        }
        if (t_enter > t_exit) return false;
    }
    if (t_enter > 1e-9) {
        t_hit = t_enter;
        hit_axis = axis_enter;
        return true;
    }
    if (t_exit > 1e-9 && axis_exit >= 0) {
        t_hit = t_exit;
        hit_axis = axis_exit;
        return true;
    }
    return false;
}

}  // namespace

Image render_procedural(const SceneModel& scene, const Camera& camera, const Pose& pose) {
    Image img(camera.width, camera.height);
    const Eigen::Matrix3d rot = camera_to_world_rotation(pose);
    const Vec3 origin = pose.position();

    for (int v = 0; v < camera.height; ++v) {
        for (int u = 0; u < camera.width; ++u) {
            const Vec3 dir_cam((u + 0.5 - camera.cx) / camera.fx,
                               (v + 0.5 - camera.cy) / camera.fy, 1.0);
            const Vec3 dir = (rot * dir_cam).normalized();

            RayHit hit;
            for (const auto& cb : scene.boxes) {
                double t;
                int axis;
                if (intersect_box(origin, dir, cb.box, t, axis) && t > 1e-9 && t < hit.t) {
                    hit.t = t;
                    hit.axis = axis;
                    hit.box = &cb;
                }
            }

            Eigen::Vector3f color = scene.background;
            if (hit.box != nullptr) {
                // headlight shading: rotation-equivariant, keeps faces distinguishable
                const double shade = 0.35 + 0.65 * std::abs(dir[hit.axis]);
                color = hit.box->color * static_cast<float>(shade);
            }
            img.pixels.col(img.index(u, v)) = color;
        }
    }
    return img;
}

namespace {

struct ProjectedSplat {
    double depth;
    double mx, my;        // 2-D mean, pixel coordinates
    double ia, ib, ic;    // inverse 2-D covariance [ia ib; ib ic]
    double radius;        // 3 sigma footprint radius, pixels
    double opacity;
    Eigen::Vector3f color;
};

}  // namespace

Image render_splats(const SceneModel& scene, const Camera& camera, const Pose& pose,
                    SplatRenderStats* stats) {
    const int npix = camera.width * camera.height;
    const Eigen::Matrix3d cam_to_world = camera_to_world_rotation(pose);
    const Eigen::Matrix3d world_to_cam = cam_to_world.transpose();
    const Vec3 origin = pose.position();

    std::vector<ProjectedSplat> projected;
    projected.reserve(scene.splats.size());
    for (const auto& g : scene.splats) {
        const Vec3 p = world_to_cam * (g.mean - origin);
        if (p.z() <= kZNear) continue;

        const Eigen::Matrix3d rot = g.rotation.toRotationMatrix();
        const Eigen::Matrix3d cov_world =
            rot * g.scale.cwiseProduct(g.scale).asDiagonal() * rot.transpose();
        const Eigen::Matrix3d cov_cam = world_to_cam * cov_world * cam_to_world;

        const double iz = 1.0 / p.z();
        Eigen::Matrix<double, 2, 3> jac;
        jac << camera.fx * iz, 0.0, -camera.fx * p.x() * iz * iz,
               0.0, camera.fy * iz, -camera.fy * p.y() * iz * iz;
        const Eigen::Matrix2d cov2 = jac * cov_cam * jac.transpose();

        const double det = cov2(0, 0) * cov2(1, 1) - cov2(0, 1) * cov2(0, 1);
        if (!(det > 1e-24)) continue;

        ProjectedSplat ps;
        ps.depth = p.z();
        ps.mx = camera.cx + camera.fx * p.x() * iz;
        ps.my = camera.cy + camera.fy * p.y() * iz;
        ps.ia = cov2(1, 1) / det;
        ps.ib = -cov2(0, 1) / det;
        ps.ic = cov2(0, 0) / det;
        const double tr = cov2(0, 0) + cov2(1, 1);
        const double lam_max = 0.5 * (tr + std::sqrt(std::max(0.0, tr * tr - 4.0 * det)));
        ps.radius = 3.0 * std::sqrt(lam_max);
        ps.opacity = g.opacity;
        ps.color = g.color;

        if (ps.mx + ps.radius < 0.0 || ps.mx - ps.radius > camera.width ||
            ps.my + ps.radius < 0.0 || ps.my - ps.radius > camera.height)
            continue;
        projected.push_back(ps);
    }

    std::stable_sort(projected.begin(), projected.end(),
                     [](const ProjectedSplat& a, const ProjectedSplat& b) { return a.depth < b.depth; });

    Eigen::ArrayXd trans = Eigen::ArrayXd::Ones(npix);
    Eigen::ArrayXd wsum = Eigen::ArrayXd::Zero(npix);
    std::vector<Eigen::Vector3d> accum(npix, Eigen::Vector3d::Zero());

    for (const auto& ps : projected) {
        const int u0 = std::max(0, int(std::floor(ps.mx - ps.radius - 0.5)));
        const int u1 = std::min(camera.width - 1, int(std::ceil(ps.mx + ps.radius - 0.5)));
        const int v0 = std::max(0, int(std::floor(ps.my - ps.radius - 0.5)));
        const int v1 = std::min(camera.height - 1, int(std::ceil(ps.my + ps.radius - 0.5)));
        const Eigen::Vector3d color = ps.color.cast<double>();
        for (int v = v0; v <= v1; ++v) {
            for (int u = u0; u <= u1; ++u) {
                const double dx = u + 0.5 - ps.mx;
                const double dy = v + 0.5 - ps.my;
                const double d2 = ps.ia * dx * dx + 2.0 * ps.ib * dx * dy + ps.ic * dy * dy;
                if (d2 > 9.0) continue;  // 3 sigma truncation
                const double w = ps.opacity * std::exp(-0.5 * d2);
                const int pix = v * camera.width + u;
                const double contrib = w * trans[pix];
                accum[pix] += contrib * color;
                wsum[pix] += contrib;
                trans[pix] *= 1.0 - w;
            }
        }
    }

    Image img(camera.width, camera.height);
    const Eigen::Vector3d bg = scene.background.cast<double>();
    for (int pix = 0; pix < npix; ++pix)
        img.pixels.col(pix) = (accum[pix] + trans[pix] * bg).cast<float>();
    if (stats != nullptr) {
        stats->weight_sum = wsum;
        stats->transmittance = trans;
    }
    return img;
}

Image render(const SceneModel& scene, const Camera& camera, const Pose& pose) {
    return scene.use_splats ? render_splats(scene, camera, pose)
                            : render_procedural(scene, camera, pose);
}

}  // namespace beings
