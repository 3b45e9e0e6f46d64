#include "streamconv/kernels.hpp"

#include <atomic>
#include <cmath>
#include <cstring>

namespace streamconv {

namespace {

std::atomic<bool> g_parallel{true};

// Below this many multiply-accumulates the OpenMP fork/join overhead
// dominates, which matters for small streaming buffers.
constexpr std::int64_t kParallelMacThreshold = 1 << 15;

void check_conv_args(const SignalTensor& x, const Kernel& k, int stride, int dilation) {
  k.check();
  if (stride < 1 || dilation < 1)
    fail(ErrCode::InvalidArgument, "conv1d stride/dilation must be >= 1");
  if (x.channels != k.in_channels)
    fail(ErrCode::ChannelMismatch, "conv1d input has " + std::to_string(x.channels) +
                                       " channels, kernel expects " +
                                       std::to_string(k.in_channels));
  if (k.span(dilation) > x.length)
    fail(ErrCode::InputTooShort, "conv1d input length " + std::to_string(x.length) +
                                     " shorter than kernel span " +
                                     std::to_string(k.span(dilation)));
}

}  // namespace

void set_parallel_kernels(bool enabled) { g_parallel.store(enabled); }
bool parallel_kernels_enabled() { return g_parallel.load(); }

SignalTensor pad_zeros(const SignalTensor& x, PaddingSpec p) {
  if (p.left < 0 || p.right < 0) fail(ErrCode::InvalidArgument, "negative padding");
  SignalTensor y = SignalTensor::zeros(x.channels, x.length + p.left + p.right);
  y.sample_rate = x.sample_rate;
  for (int c = 0; c < x.channels; ++c) {
    std::memcpy(y.channel(c) + p.left, x.channel(c), sizeof(float) * x.length);
  }
  return y;
}

std::int64_t conv_output_length(std::int64_t in_len, int taps, int stride, int dilation) {
  const std::int64_t span = static_cast<std::int64_t>(taps - 1) * dilation + 1;
  return (in_len - span) / stride + 1;
}

SignalTensor conv1d_serial(const SignalTensor& x, const Kernel& k, int stride, int dilation) {
  check_conv_args(x, k, stride, dilation);
  const std::int64_t out_len = conv_output_length(x.length, k.taps, stride, dilation);
  SignalTensor y = SignalTensor::zeros(k.out_channels, out_len);
  for (int n = 0; n < k.out_channels; ++n) {
    float* yrow = y.channel(n);
    for (std::int64_t i = 0; i < out_len; ++i) {
      double acc = k.bias[n];
      const std::int64_t base = i * stride;
      for (int m = 0; m < k.in_channels; ++m) {
        const float* xrow = x.channel(m);
        const float* wrow = &k.weights[(static_cast<std::size_t>(n) * k.in_channels + m) * k.taps];
        for (int t = 0; t < k.taps; ++t) {
          acc += static_cast<double>(wrow[t]) * xrow[base + static_cast<std::int64_t>(t) * dilation];
        }
      }
      yrow[i] = static_cast<float>(acc);
    }
  }
  return y;
}

SignalTensor conv1d(const SignalTensor& x, const Kernel& k, int stride, int dilation) {
  check_conv_args(x, k, stride, dilation);
  const std::int64_t out_len = conv_output_length(x.length, k.taps, stride, dilation);
  const std::int64_t macs =
      out_len * k.out_channels * k.in_channels * static_cast<std::int64_t>(k.taps);
  if (!g_parallel.load() || macs < kParallelMacThreshold) {
    return conv1d_serial(x, k, stride, dilation);
  }

  SignalTensor y = SignalTensor::zeros(k.out_channels, out_len);
  const int N = k.out_channels;
  const int M = k.in_channels;
  const int T = k.taps;
  // Each output sample is owned by exactly one thread and accumulated in the
  // same m-then-k order as the serial path, so results are bit-identical.
#pragma omp parallel for collapse(2) schedule(static)
  for (int n = 0; n < N; ++n) {
    for (std::int64_t i = 0; i < out_len; ++i) {
      double acc = k.bias[n];
      const std::int64_t base = i * stride;
      for (int m = 0; m < M; ++m) {
        const float* xrow = x.channel(m);
        const float* wrow = &k.weights[(static_cast<std::size_t>(n) * M + m) * T];
        for (int t = 0; t < T; ++t) {
          acc += static_cast<double>(wrow[t]) * xrow[base + static_cast<std::int64_t>(t) * dilation];
        }
      }
      y.channel(n)[i] = static_cast<float>(acc);
    }
  }
  return y;
}

SignalTensor zero_upsample(const SignalTensor& x, int factor) {
  if (factor < 1) fail(ErrCode::InvalidArgument, "zero_upsample factor must be >= 1");
  if (factor == 1) return x;
  SignalTensor y = SignalTensor::zeros(x.channels, x.length * factor);
  y.sample_rate = x.sample_rate;
  for (int c = 0; c < x.channels; ++c) {
    const float* src = x.channel(c);
    float* dst = y.channel(c);
    for (std::int64_t i = 0; i < x.length; ++i) dst[i * factor] = src[i];
  }
  return y;
}

SignalTensor activation(const SignalTensor& x, Act kind, float alpha) {
  if (kind == Act::identity) return x;
  SignalTensor y = x;
  if (kind == Act::tanh) {
    for (float& v : y.data) v = std::tanh(v);
  } else {
    for (float& v : y.data) v = v < 0.0f ? alpha * v : v;
  }
  return y;
}

}  // namespace streamconv
