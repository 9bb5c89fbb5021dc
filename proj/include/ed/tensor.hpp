#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ed {

/// Dense row-major float32 tensor. Shape dims are positive and
/// product(shape) always equals data.size().
struct Tensor {
    std::vector<int> shape;
    std::vector<float> data;

    Tensor() = default;
    explicit Tensor(std::vector<int> shape_in);  // zero-filled
    Tensor(std::vector<int> shape_in, std::vector<float> data_in);

    std::size_t size() const { return data.size(); }
    int ndim() const { return static_cast<int>(shape.size()); }
    int dim(int i) const { return shape[static_cast<std::size_t>(i)]; }

    float* ptr() { return data.data(); }
    const float* ptr() const { return data.data(); }

    float& operator[](std::size_t i) { return data[i]; }
    float operator[](std::size_t i) const { return data[i]; }

    // 2-D accessors (row, col).
    float& at(int r, int c);
    float at(int r, int c) const;
};

std::size_t shape_numel(const std::vector<int>& shape);
std::string shape_str(const std::vector<int>& shape);

/// a[m,k] * b[k,n] -> [m,n].
Tensor matmul(const Tensor& a, const Tensor& b);

/// Cross-correlation of input[C,H,W] with kernels[K,C,kh,kw] plus per-channel
/// bias[K]. Output spatial size (H + 2*pad - kh)/stride + 1 must be integral.
Tensor conv2d(const Tensor& input, const Tensor& kernels, const Tensor& bias,
              int stride, int pad);

struct MaxPoolResult {
    Tensor output;
    // Flat row-major index into the input C*H*W block for each output
    // element; ties break to the lowest index.
    std::vector<int> argmax;
};

MaxPoolResult maxpool2d(const Tensor& input, int window, int stride);

Tensor relu(const Tensor& input);

// Raw single-sample kernels shared with the layer code. All pointers are
// caller-owned contiguous buffers of the stated extents.
namespace kernels {

void conv2d_raw(const float* in, int c_in, int h, int w,
                const float* weights, int k_out, int kh, int kw,
                const float* bias, int stride, int pad,
                float* out, std::vector<float>& pad_scratch);

void maxpool2d_raw(const float* in, int c, int h, int w,
                   int window, int stride, float* out, int* argmax);

void conv_out_hw(int h, int w, int kh, int kw, int stride, int pad,
                 int* out_h, int* out_w);  // throws DimensionError

}  // namespace kernels

}  // namespace ed
