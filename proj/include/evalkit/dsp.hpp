#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace evalkit::dsp {

inline constexpr double kPi = 3.14159265358979323846;

inline std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// In-place iterative radix-2 FFT; size must be a power of two.
inline void fft(std::vector<std::complex<double>>& a, bool inverse = false) {
  const std::size_t n = a.size();
  if (n < 2) return;
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double angle = 2.0 * kPi / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
    const std::complex<double> wlen(std::cos(angle), std::sin(angle));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = a[i + k];
        const std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
  if (inverse) {
    const double inv = 1.0 / static_cast<double>(n);
    for (auto& x : a) x *= inv;
  }
}

// Power spectrum of a real signal, zero-padded to the next power of two.
// Returns bins 0..nfft/2 inclusive; bin k is at k * rate / nfft Hz.
inline std::vector<double> power_spectrum(const std::vector<double>& x, std::size_t& nfft_out) {
  const std::size_t nfft = next_pow2(x.size() < 2 ? 2 : x.size());
  std::vector<std::complex<double>> buf(nfft);
  for (std::size_t i = 0; i < x.size(); ++i) buf[i] = x[i];
  fft(buf);
  std::vector<double> power(nfft / 2 + 1);
  for (std::size_t k = 0; k <= nfft / 2; ++k) power[k] = std::norm(buf[k]);
  nfft_out = nfft;
  return power;
}

// Envelope as the magnitude of the analytic signal (frequency-domain Hilbert),
// computed on a zero-padded power-of-two buffer and truncated back.
inline std::vector<double> analytic_envelope(const std::vector<double>& x) {
  const std::size_t n = x.size();
  if (n == 0) return {};
  const std::size_t nfft = next_pow2(n);
  std::vector<std::complex<double>> buf(nfft);
  for (std::size_t i = 0; i < n; ++i) buf[i] = x[i];
  fft(buf);
  // Keep DC and Nyquist, double positive frequencies, zero negative ones.
  for (std::size_t k = 1; k < nfft / 2; ++k) buf[k] *= 2.0;
  for (std::size_t k = nfft / 2 + 1; k < nfft; ++k) buf[k] = 0.0;
  fft(buf, true);
  std::vector<double> env(n);
  for (std::size_t i = 0; i < n; ++i) env[i] = std::abs(buf[i]);
  return env;
}

// Direct-form II transposed biquad.
struct Biquad {
  double b0 = 1.0, b1 = 0.0, b2 = 0.0;
  double a1 = 0.0, a2 = 0.0;  // a0 normalized to 1

  void process(const std::vector<double>& in, std::vector<double>& out) const {
    out.resize(in.size());
    double z1 = 0.0, z2 = 0.0;
    for (std::size_t i = 0; i < in.size(); ++i) {
      const double x = in[i];
      const double y = b0 * x + z1;
      z1 = b1 * x - a1 * y + z2;
      z2 = b2 * x - a2 * y;
      out[i] = y;
    }
  }

  std::complex<double> response_at(double freq_hz, double rate_hz) const {
    const std::complex<double> z =
        std::exp(std::complex<double>(0.0, -2.0 * kPi * freq_hz / rate_hz));
    return (b0 + b1 * z + b2 * z * z) / (1.0 + a1 * z + a2 * z * z);
  }
};

// Constant-peak-gain bandpass (RBJ cookbook).
inline Biquad bandpass_biquad(double center_hz, double q, double rate_hz) {
  const double w0 = 2.0 * kPi * center_hz / rate_hz;
  const double alpha = std::sin(w0) / (2.0 * q);
  const double a0 = 1.0 + alpha;
  Biquad f;
  f.b0 = alpha / a0;
  f.b1 = 0.0;
  f.b2 = -alpha / a0;
  f.a1 = -2.0 * std::cos(w0) / a0;
  f.a2 = (1.0 - alpha) / a0;
  return f;
}

// 2nd-order Butterworth low-pass (RBJ cookbook, Q = 1/sqrt(2)).
inline Biquad lowpass_biquad(double cutoff_hz, double rate_hz) {
  const double w0 = 2.0 * kPi * cutoff_hz / rate_hz;
  const double alpha = std::sin(w0) / (2.0 * std::sqrt(0.5));
  const double cw = std::cos(w0);
  const double a0 = 1.0 + alpha;
  Biquad f;
  f.b0 = (1.0 - cw) / 2.0 / a0;
  f.b1 = (1.0 - cw) / a0;
  f.b2 = (1.0 - cw) / 2.0 / a0;
  f.a1 = -2.0 * cw / a0;
  f.a2 = (1.0 - alpha) / a0;
  return f;
}

// FFT-based linear convolution.
inline std::vector<double> fft_convolve(const std::vector<double>& x,
                                        const std::vector<double>& h) {
  if (x.empty() || h.empty()) return {};
  const std::size_t out_len = x.size() + h.size() - 1;
  const std::size_t nfft = next_pow2(out_len);
  std::vector<std::complex<double>> fx(nfft), fh(nfft);
  for (std::size_t i = 0; i < x.size(); ++i) fx[i] = x[i];
  for (std::size_t i = 0; i < h.size(); ++i) fh[i] = h[i];
  fft(fx);
  fft(fh);
  for (std::size_t i = 0; i < nfft; ++i) fx[i] *= fh[i];
  fft(fx, true);
  std::vector<double> out(out_len);
  for (std::size_t i = 0; i < out_len; ++i) out[i] = fx[i].real();
  return out;
}

}  // namespace evalkit::dsp
