#pragma once

#include "beings/core.hpp"

namespace beings {

// Descriptor layout: the image is box-averaged to a 16x16 RGB grid, each
// channel is centered by its own mean, and the result is flattened to
// (cell_y*16 + cell_x)*3 + channel and L2-normalized.
inline constexpr int kDescriptorGrid = 16;
inline constexpr int kDescriptorDim = kDescriptorGrid * kDescriptorGrid * 3;

// Deterministic global image descriptor. Constant images (zero after mean
// subtraction) fall back to the first basis vector.
Descriptor describe(const Image& image);

// (1 - <a,b>)/2 clamped to [0,1]; 0 for identical descriptors, 1 for
// antipodal ones. Throws on dimension mismatch.
double dissimilarity(const Descriptor& a, const Descriptor& b);

// Detection probability: 1 - dissimilarity.
double detection_prob(const Descriptor& goal, const Descriptor& observed);

}  // namespace beings
