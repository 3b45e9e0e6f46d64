#pragma once

#include <cstdint>
#include <vector>

#include "streamconv/tensor.hpp"

namespace streamconv {

// Magnitude spectrogram, row-major frames x bins.
struct Spectrogram {
  std::int64_t frames = 0;
  int bins = 0;
  std::vector<float> mag;

  float at(std::int64_t f, int b) const { return mag[static_cast<std::size_t>(f) * bins + b]; }
  float& at(std::int64_t f, int b) { return mag[static_cast<std::size_t>(f) * bins + b]; }
};

// Hann-windowed magnitude STFT of a mono signal. Frame t covers samples
// [t*hop, t*hop + n_fft); the tail is zero-padded. n_fft must be a power of
// two; bins = n_fft/2 + 1.
Spectrogram stft_mag(const SignalTensor& x, int n_fft, int hop);

}  // namespace streamconv
