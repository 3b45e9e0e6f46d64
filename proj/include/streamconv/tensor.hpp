#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "streamconv/error.hpp"

namespace streamconv {

// Multichannel 1-D sample frame. Storage is channel-major contiguous:
// all samples of channel 0, then channel 1, ...
struct SignalTensor {
  int channels = 1;
  std::int64_t length = 0;
  std::vector<float> data;
  std::optional<int> sample_rate;  // metadata only, never affects math

  static SignalTensor zeros(int channels, std::int64_t length) {
    if (channels < 1 || length < 0)
      fail(ErrCode::InvalidArgument, "tensor shape " + std::to_string(channels) + "x" +
                                         std::to_string(length));
    SignalTensor t;
    t.channels = channels;
    t.length = length;
    t.data.assign(static_cast<std::size_t>(channels) * static_cast<std::size_t>(length), 0.0f);
    return t;
  }

  static SignalTensor mono(std::vector<float> samples) {
    SignalTensor t;
    t.channels = 1;
    t.length = static_cast<std::int64_t>(samples.size());
    t.data = std::move(samples);
    return t;
  }

  float* channel(int c) { return data.data() + static_cast<std::size_t>(c) * length; }
  const float* channel(int c) const { return data.data() + static_cast<std::size_t>(c) * length; }

  float& at(int c, std::int64_t i) { return data[static_cast<std::size_t>(c) * length + i]; }
  float at(int c, std::int64_t i) const { return data[static_cast<std::size_t>(c) * length + i]; }

  bool same_shape(const SignalTensor& o) const {
    return channels == o.channels && length == o.length;
  }
};

// Convolution kernel: out_channels x in_channels x taps, plus one bias per
// output channel.
struct Kernel {
  int out_channels = 1;
  int in_channels = 1;
  int taps = 1;
  std::vector<float> weights;  // indexed [n][m][k]
  std::vector<float> bias;     // indexed [n]

  static Kernel mono(std::vector<float> tap_values, float bias_value = 0.0f) {
    Kernel k;
    k.out_channels = 1;
    k.in_channels = 1;
    k.taps = static_cast<int>(tap_values.size());
    k.weights = std::move(tap_values);
    k.bias = {bias_value};
    return k;
  }

  float w(int n, int m, int k) const {
    return weights[(static_cast<std::size_t>(n) * in_channels + m) * taps + k];
  }
  float& w(int n, int m, int k) {
    return weights[(static_cast<std::size_t>(n) * in_channels + m) * taps + k];
  }

  std::int64_t span(int dilation) const {
    return static_cast<std::int64_t>(taps - 1) * dilation + 1;
  }

  void check() const {
    if (out_channels < 1 || in_channels < 1 || taps < 1)
      fail(ErrCode::InvalidArgument, "kernel shape");
    if (weights.size() != static_cast<std::size_t>(out_channels) * in_channels * taps)
      fail(ErrCode::InvalidArgument, "kernel weight count does not match shape");
    if (bias.size() != static_cast<std::size_t>(out_channels))
      fail(ErrCode::InvalidArgument, "kernel bias count does not match out_channels");
  }
};

struct PaddingSpec {
  std::int64_t left = 0;
  std::int64_t right = 0;

  std::int64_t total() const { return left + right; }
};

}  // namespace streamconv
