#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fdia/dataset.hpp"

namespace fdia {

/// Row-major 2D image, one channel unless stated otherwise. GAF images live
/// in [-1, 1], RP images in [0, 1].
struct ImageTensor {
    int height = 0;
    int width = 0;
    int channels = 1;
    std::vector<double> data; // height * width * channels

    double at(int r, int c, int ch = 0) const {
        return data[static_cast<std::size_t>((r * width + c) * channels + ch)];
    }
    double& at(int r, int c, int ch = 0) {
        return data[static_cast<std::size_t>((r * width + c) * channels + ch)];
    }
};

/// Polar form of a rescaled series: phi = arccos(x), radius = t/N. The
/// radius is carried for completeness; the angular-field matrix uses phi only.
struct PolarEncoding {
    std::vector<double> phi;    // radians, in [0, pi/2] for inputs in [0,1]
    std::vector<double> radius; // strictly increasing, t_l / N
};

/// Min-max rescale to [0, 1]; a constant vector maps to all 0.5.
std::vector<double> rescale_unit(std::span<const double> v);

PolarEncoding polar_encode(std::span<const double> rescaled);

/// Gramian Angular Field, summation form: G[l][k] = cos(phi_l + phi_k),
/// computed through the algebraic product form
/// x_l x_k - sqrt(1 - x_l^2) sqrt(1 - x_k^2); both agree to 1e-12.
ImageTensor gaf_encode(std::span<const double> v);

enum class RpMode { Binary, Distance };

/// Recurrence plot of the pairwise distances d[i][j] = |v_i - v_j|.
/// Binary: 1 where d <= epsilon_frac * max(d). Distance: 1 - d / max(d).
/// A constant input (max d = 0) yields the all-ones image in either mode.
ImageTensor rp_encode(std::span<const double> v, double epsilon_frac = 0.1,
                      RpMode mode = RpMode::Distance);

struct EncoderParams {
    enum class Kind { Gaf, Rp } kind = Kind::Rp;
    double rp_epsilon_frac = 0.1;
    RpMode rp_mode = RpMode::Distance;
    int image_hw = 0; // 0 = native (feature length); otherwise average-pooled
};

/// Adaptive average pooling to out_hw x out_hw (bin edges at floor(i*H/out)).
ImageTensor downsample_avg(const ImageTensor& img, int out_hw);

/// One image per sample, order preserved. Failures carry the sample index.
std::vector<ImageTensor> encode_dataset(const Dataset& ds, const EncoderParams& params);

/// 8-bit binary PGM (P5) export for visual inspection. value_lo/value_hi
/// define the gray mapping (GAF uses [-1,1], RP uses [0,1]).
void write_pgm(const ImageTensor& img, const std::string& path, double value_lo,
               double value_hi);

/// Encoded-image container, magic "FIMG": version, count, dims, f64 data,
/// u16 labels. Byte-identical for identical inputs.
void write_images(const std::vector<ImageTensor>& images,
                  const std::vector<std::uint16_t>& labels, const std::string& path);
struct ImageSet {
    std::vector<ImageTensor> images;
    std::vector<std::uint16_t> labels;
};
ImageSet read_images(const std::string& path);

} // namespace fdia
