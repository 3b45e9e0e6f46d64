#pragma once

#include <cstdint>

#include "streamconv/tensor.hpp"

namespace streamconv {

enum class Act { identity, tanh, leaky_relu };

// Global switch for the OpenMP kernel paths. Enabled by default; the serial
// reference path is always available via the *_serial entry points.
void set_parallel_kernels(bool enabled);
bool parallel_kernels_enabled();

SignalTensor pad_zeros(const SignalTensor& x, PaddingSpec p);

std::int64_t conv_output_length(std::int64_t in_len, int taps, int stride, int dilation);

// Correlation-style convolution, no implicit padding:
//   y[n][i] = bias[n] + sum_m sum_k w[n][m][k] * x[m][i*stride + k*dilation]
// Accumulation is double per output sample, so the result is independent of
// how the input was split into buffers upstream.
SignalTensor conv1d(const SignalTensor& x, const Kernel& k, int stride = 1, int dilation = 1);

// Plain triple-loop reference; the parallel path must match it bit for bit.
SignalTensor conv1d_serial(const SignalTensor& x, const Kernel& k, int stride = 1,
                           int dilation = 1);

SignalTensor zero_upsample(const SignalTensor& x, int factor);

SignalTensor activation(const SignalTensor& x, Act kind, float alpha = 0.01f);

}  // namespace streamconv
