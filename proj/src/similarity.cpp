#include "beings/similarity.hpp"

#include <algorithm>
#include <stdexcept>

namespace beings {

Descriptor describe(const Image& image) {
    if (image.width <= 0 || image.height <= 0 || image.pixels.cols() != image.width * image.height)
        throw std::invalid_argument("describe: malformed image");

    constexpr int g = kDescriptorGrid;
    Eigen::VectorXd values(kDescriptorDim);
    for (int cy = 0; cy < g; ++cy) {
        const int y0 = cy * image.height / g;
        const int y1 = (cy + 1) * image.height / g;
        for (int cx = 0; cx < g; ++cx) {
            const int x0 = cx * image.width / g;
            const int x1 = (cx + 1) * image.width / g;
            Eigen::Vector3d sum = Eigen::Vector3d::Zero();
            int count = 0;
            for (int y = y0; y < std::max(y1, y0 + 1); ++y)
                for (int x = x0; x < std::max(x1, x0 + 1); ++x) {
                    sum += image.at(std::min(x, image.width - 1), std::min(y, image.height - 1))
                               .cast<double>();
                    ++count;
                }
            values.segment<3>((cy * g + cx) * 3) = sum / count;
        }
    }

    // center each channel
    for (int c = 0; c < 3; ++c) {
        double mean = 0.0;
        for (int i = 0; i < g * g; ++i) mean += values[i * 3 + c];
        mean /= g * g;
        for (int i = 0; i < g * g; ++i) values[i * 3 + c] -= mean;
    }

    if (values.norm() <= 1e-12) {
        Eigen::VectorXd basis = Eigen::VectorXd::Zero(kDescriptorDim);
        basis[0] = 1.0;
        return Descriptor(basis);
    }
    return Descriptor(values);
}

double dissimilarity(const Descriptor& a, const Descriptor& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("dissimilarity: descriptor dimension mismatch");
    const double d = (1.0 - a.values.dot(b.values)) / 2.0;
    return std::clamp(d, 0.0, 1.0);
}

double detection_prob(const Descriptor& goal, const Descriptor& observed) {
    return 1.0 - dissimilarity(goal, observed);
}

}  // namespace beings
