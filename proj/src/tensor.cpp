#include "ed/tensor.hpp"

#include <algorithm>
#include <sstream>

#include "ed/error.hpp"

namespace ed {

std::size_t shape_numel(const std::vector<int>& shape) {
    std::size_t n = 1;
    for (int d : shape) {
        n *= static_cast<std::size_t>(d);
    }
    return n;
}

std::string shape_str(const std::vector<int>& shape) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (i) os << 'x';
        os << shape[i];
    }
    os << ']';
    return os.str();
}

namespace {

void check_shape(const std::vector<int>& shape) {
    for (int d : shape) {
        if (d <= 0) {
            throw DimensionError("tensor dims must be positive, got " + shape_str(shape));
        }
    }
}

}  // namespace

Tensor::Tensor(std::vector<int> shape_in) : shape(std::move(shape_in)) {
    check_shape(shape);
    data.assign(shape_numel(shape), 0.0f);
}

Tensor::Tensor(std::vector<int> shape_in, std::vector<float> data_in)
    : shape(std::move(shape_in)), data(std::move(data_in)) {
    check_shape(shape);
    if (shape_numel(shape) != data.size()) {
        throw DimensionError("tensor data length " + std::to_string(data.size()) +
                             " does not match shape " + shape_str(shape));
    }
}

float& Tensor::at(int r, int c) {
    return data[static_cast<std::size_t>(r) * static_cast<std::size_t>(shape[1]) +
                static_cast<std::size_t>(c)];
}

float Tensor::at(int r, int c) const {
    return data[static_cast<std::size_t>(r) * static_cast<std::size_t>(shape[1]) +
                static_cast<std::size_t>(c)];
}

Tensor matmul(const Tensor& a, const Tensor& b) {
    if (a.ndim() != 2 || b.ndim() != 2) {
        throw DimensionError("matmul expects 2-D tensors, got " + shape_str(a.shape) +
                             " and " + shape_str(b.shape));
    }
    if (a.dim(1) != b.dim(0)) {
        throw DimensionError("matmul inner dimensions disagree: " + shape_str(a.shape) +
                             " vs " + shape_str(b.shape));
    }
    const int m = a.dim(0), k = a.dim(1), n = b.dim(0) == k ? b.dim(1) : 0;
    Tensor out({m, n});
    const float* pa = a.ptr();
    const float* pb = b.ptr();
    float* pc = out.ptr();
    for (int i = 0; i < m; ++i) {
        float* crow = pc + static_cast<std::size_t>(i) * n;
        for (int kk = 0; kk < k; ++kk) {
            const float av = pa[static_cast<std::size_t>(i) * k + kk];
            const float* brow = pb + static_cast<std::size_t>(kk) * n;
            for (int j = 0; j < n; ++j) {
                crow[j] += av * brow[j];
            }
        }
    }
    return out;
}

namespace kernels {

void conv_out_hw(int h, int w, int kh, int kw, int stride, int pad,
                 int* out_h, int* out_w) {
    if (stride <= 0 || pad < 0) {
        throw DimensionError("conv2d stride must be positive and pad nonnegative");
    }
    const int eh = h + 2 * pad - kh;
    const int ew = w + 2 * pad - kw;
    if (eh < 0 || ew < 0 || eh % stride != 0 || ew % stride != 0) {
        throw DimensionError("conv2d output size is not integral for input " +
                             shape_str({h, w}) + ", kernel " + shape_str({kh, kw}) +
                             ", stride " + std::to_string(stride) + ", pad " +
                             std::to_string(pad));
    }
    *out_h = eh / stride + 1;
    *out_w = ew / stride + 1;
}

void conv2d_raw(const float* in, int c_in, int h, int w,
                const float* weights, int k_out, int kh, int kw,
                const float* bias, int stride, int pad,
                float* out, std::vector<float>& pad_scratch) {
    int oh = 0, ow = 0;
    conv_out_hw(h, w, kh, kw, stride, pad, &oh, &ow);

    const int ph = h + 2 * pad;
    const int pw = w + 2 * pad;
    const float* src = in;
    if (pad > 0) {
        pad_scratch.assign(static_cast<std::size_t>(c_in) * ph * pw, 0.0f);
        for (int c = 0; c < c_in; ++c) {
            for (int y = 0; y < h; ++y) {
                const float* row = in + (static_cast<std::size_t>(c) * h + y) * w;
                float* dst = pad_scratch.data() +
                             (static_cast<std::size_t>(c) * ph + y + pad) * pw + pad;
                std::copy(row, row + w, dst);
            }
        }
        src = pad_scratch.data();
    }

    const std::size_t out_plane = static_cast<std::size_t>(oh) * ow;
    for (int k = 0; k < k_out; ++k) {
        std::fill(out + k * out_plane, out + (k + 1) * out_plane, bias ? bias[k] : 0.0f);
    }
    for (int k = 0; k < k_out; ++k) {
        float* oplane = out + k * out_plane;
        for (int c = 0; c < c_in; ++c) {
            const float* iplane = src + static_cast<std::size_t>(c) * ph * pw;
            const float* wbase = weights +
                                 (static_cast<std::size_t>(k) * c_in + c) * kh * kw;
            for (int dy = 0; dy < kh; ++dy) {
                for (int dx = 0; dx < kw; ++dx) {
                    const float wv = wbase[dy * kw + dx];
                    if (stride == 1) {
                        for (int y = 0; y < oh; ++y) {
                            const float* irow = iplane + (y + dy) * pw + dx;
                            float* orow = oplane + static_cast<std::size_t>(y) * ow;
                            for (int x = 0; x < ow; ++x) {
                                orow[x] += wv * irow[x];
                            }
                        }
                    } else {
                        for (int y = 0; y < oh; ++y) {
                            const float* irow = iplane + (y * stride + dy) * pw + dx;
                            float* orow = oplane + static_cast<std::size_t>(y) * ow;
                            for (int x = 0; x < ow; ++x) {
                                orow[x] += wv * irow[x * stride];
                            }
                        }
                    }
                }
            }
        }
    }
}

void maxpool2d_raw(const float* in, int c, int h, int w,
                   int window, int stride, float* out, int* argmax) {
    const int oh = (h - window) / stride + 1;
    const int ow = (w - window) / stride + 1;
    std::size_t o = 0;
    for (int ch = 0; ch < c; ++ch) {
        const float* plane = in + static_cast<std::size_t>(ch) * h * w;
        for (int y = 0; y < oh; ++y) {
            for (int x = 0; x < ow; ++x, ++o) {
                int best = (y * stride) * w + (x * stride);
                float bv = plane[best];
                for (int dy = 0; dy < window; ++dy) {
                    for (int dx = 0; dx < window; ++dx) {
                        const int idx = (y * stride + dy) * w + (x * stride + dx);
                        if (plane[idx] > bv) {  // strict: ties keep the lowest index
                            bv = plane[idx];
                            best = idx;
                        }
                    }
                }
                out[o] = bv;
                argmax[o] = ch * h * w + best;
            }
        }
    }
}

}  // namespace kernels

Tensor conv2d(const Tensor& input, const Tensor& kernels, const Tensor& bias,
              int stride, int pad) {
    if (input.ndim() != 3 || kernels.ndim() != 4) {
        throw DimensionError("conv2d expects input [C,H,W] and kernels [K,C,kh,kw], got " +
                             shape_str(input.shape) + " and " + shape_str(kernels.shape));
    }
    if (kernels.dim(1) != input.dim(0)) {
        throw DimensionError("conv2d channel mismatch: input " + shape_str(input.shape) +
                             " vs kernels " + shape_str(kernels.shape));
    }
    if (bias.ndim() != 1 || bias.dim(0) != kernels.dim(0)) {
        throw DimensionError("conv2d bias must be [K], got " + shape_str(bias.shape));
    }
    int oh = 0, ow = 0;
    kernels::conv_out_hw(input.dim(1), input.dim(2), kernels.dim(2), kernels.dim(3),
                         stride, pad, &oh, &ow);
    Tensor out({kernels.dim(0), oh, ow});
    std::vector<float> scratch;
    kernels::conv2d_raw(input.ptr(), input.dim(0), input.dim(1), input.dim(2),
                        kernels.ptr(), kernels.dim(0), kernels.dim(2), kernels.dim(3),
                        bias.ptr(), stride, pad, out.ptr(), scratch);
    return out;
}

MaxPoolResult maxpool2d(const Tensor& input, int window, int stride) {
    if (input.ndim() != 3) {
        throw DimensionError("maxpool2d expects [C,H,W], got " + shape_str(input.shape));
    }
    if (window <= 0 || stride <= 0) {
        throw DimensionError("maxpool2d window and stride must be positive");
    }
    const int h = input.dim(1), w = input.dim(2);
    if (window > h || window > w) {
        throw DimensionError("maxpool2d window " + std::to_string(window) +
                             " exceeds input " + shape_str(input.shape));
    }
    if ((h - window) % stride != 0 || (w - window) % stride != 0) {
        throw DimensionError("maxpool2d output size is not integral for input " +
                             shape_str(input.shape) + ", window " + std::to_string(window) +
                             ", stride " + std::to_string(stride));
    }
    const int oh = (h - window) / stride + 1;
    const int ow = (w - window) / stride + 1;
    MaxPoolResult res{Tensor({input.dim(0), oh, ow}),
                      std::vector<int>(static_cast<std::size_t>(input.dim(0)) * oh * ow)};
    kernels::maxpool2d_raw(input.ptr(), input.dim(0), h, w, window, stride,
                           res.output.ptr(), res.argmax.data());
    return res;
}

Tensor relu(const Tensor& input) {
    Tensor out = input;
    for (float& v : out.data) {
        v = v > 0.0f ? v : 0.0f;
    }
    return out;
}

}  // namespace ed
