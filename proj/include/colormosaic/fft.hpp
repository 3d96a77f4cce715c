#pragma once

// 1-D complex FFT for arbitrary lengths.
//
// Lengths whose prime factors are all <= kMaxDirectRadix run through a
// recursive mixed-radix Cooley-Tukey decomposition. Any other length is
// handled by Bluestein's chirp-z algorithm, which re-expresses the DFT as a
// circular convolution of power-of-two length >= 2n-1.
//
// Forward transform: X[k] = sum_j x[j] exp(-2 pi i jk / n), unnormalized.
// Inverse transform carries the 1/n factor.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <memory>
#include <numbers>
#include <span>
#include <vector>

namespace colormosaic::fft {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxDirectRadix = 64;

enum class Direction { Forward, Inverse };

namespace detail {

inline std::vector<std::size_t> factorize(std::size_t n) {
  std::vector<std::size_t> f;
  while (n % 4 == 0) {
    f.push_back(4);
    n /= 4;
  }
  if (n % 2 == 0) {
    f.push_back(2);
    n /= 2;
  }
  for (std::size_t p = 3; p * p <= n; p += 2) {
    while (n % p == 0) {
      f.push_back(p);
      n /= p;
    }
  }
  if (n > 1) f.push_back(n);
  return f;
}

// exp(-2 pi i k / n) for k in [0, n).
inline std::vector<Complex> forward_roots(std::size_t n) {
  std::vector<Complex> w(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = -2.0 * std::numbers::pi * static_cast<double>(k) /
                         static_cast<double>(n);
    w[k] = {std::cos(angle), std::sin(angle)};
  }
  return w;
}

inline std::size_t next_pow2(std::size_t n) {
  std::size_t m = 1;
  while (m < n) m <<= 1;
  return m;
}

// Mixed-radix forward DFT over lengths with small prime factors.
class MixedRadix {
 public:
  explicit MixedRadix(std::size_t n)
      : n_(n), factors_(factorize(n)), roots_(forward_roots(n)), scratch_(n) {}

  std::size_t size() const noexcept { return n_; }

  void forward(std::span<const Complex> in, std::span<Complex> out) {
    if (n_ == 1) {
      out[0] = in[0];
      return;
    }
    recurse(in.data(), 1, out.data(), n_, 0);
  }

 private:
  // out[0..len) = DFT_len of in[0], in[stride], ..., in[(len-1) stride].
  void recurse(const Complex* in, std::size_t stride, Complex* out, std::size_t len,
               std::size_t level) {
    if (len == 1) {
      out[0] = in[0];
      return;
    }
    const std::size_t p = factors_[level];
    const std::size_t m = len / p;
    for (std::size_t r = 0; r < p; ++r) {
      recurse(in + r * stride, stride * p, out + r * m, m, level + 1);
    }
    const std::size_t root_step = n_ / len;  // W_len^x == roots_[x * root_step]
    Complex* t = scratch_.data();
    if (p == 2) {
      for (std::size_t k = 0; k < m; ++k) {
        const Complex a = out[k];
        const Complex b = out[m + k] * roots_[k * root_step];
        out[k] = a + b;
        out[m + k] = a - b;
      }
      return;
    }
    if (p == 4) {
      for (std::size_t k = 0; k < m; ++k) {
        const Complex a0 = out[k];
        const Complex a1 = out[m + k] * roots_[k * root_step];
        const Complex a2 = out[2 * m + k] * roots_[2 * k * root_step];
        const Complex a3 = out[3 * m + k] * roots_[3 * k * root_step];
        const Complex s02 = a0 + a2, d02 = a0 - a2;
        const Complex s13 = a1 + a3, d13 = a1 - a3;
        const Complex d13_mi{d13.imag(), -d13.real()};  // -i * d13
        out[k] = s02 + s13;
        out[m + k] = d02 + d13_mi;
        out[2 * m + k] = s02 - s13;
        out[3 * m + k] = d02 - d13_mi;
      }
      return;
    }
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t r = 0; r < p; ++r) {
        t[r] = out[r * m + k] * roots_[((r * k) % len) * root_step];
      }
      for (std::size_t q = 0; q < p; ++q) {
        Complex acc{0.0, 0.0};
        for (std::size_t r = 0; r < p; ++r) {
          acc += t[r] * roots_[((r * q * m) % len) * root_step];
        }
        out[q * m + k] = acc;
      }
    }
  }

  std::size_t n_;
  std::vector<std::size_t> factors_;
  std::vector<Complex> roots_;
  std::vector<Complex> scratch_;
};

// Forward DFT of any length via a power-of-two circular convolution.
class Bluestein {
 public:
  explicit Bluestein(std::size_t n)
      : n_(n), m_(next_pow2(2 * n - 1)), inner_(m_), chirp_(n), kernel_(m_), a_(m_), b_(m_) {
    // chirp[j] = exp(-i pi j^2 / n); j^2 reduced mod 2n keeps the angle exact.
    for (std::size_t j = 0; j < n_; ++j) {
      const std::size_t jj = (j * j) % (2 * n_);
      const double angle = -std::numbers::pi * static_cast<double>(jj) / static_cast<double>(n_);
      chirp_[j] = {std::cos(angle), std::sin(angle)};
    }
    std::vector<Complex> k(m_, Complex{});
    k[0] = std::conj(chirp_[0]);
    for (std::size_t j = 1; j < n_; ++j) {
      k[j] = std::conj(chirp_[j]);
      k[m_ - j] = std::conj(chirp_[j]);
    }
    inner_.forward(k, kernel_);
  }

  std::size_t size() const noexcept { return n_; }

  void forward(std::span<const Complex> in, std::span<Complex> out) {
    std::fill(a_.begin(), a_.end(), Complex{});
    for (std::size_t j = 0; j < n_; ++j) a_[j] = in[j] * chirp_[j];
    inner_.forward(a_, b_);
    for (std::size_t j = 0; j < m_; ++j) b_[j] = std::conj(b_[j] * kernel_[j]);
    // Inverse of the product via conj(DFT(conj(.))) / m.
    inner_.forward(b_, a_);
    const double scale = 1.0 / static_cast<double>(m_);
    for (std::size_t j = 0; j < n_; ++j) out[j] = std::conj(a_[j]) * scale * chirp_[j];
  }

 private:
  std::size_t n_;
  std::size_t m_;
  MixedRadix inner_;
  std::vector<Complex> chirp_;
  std::vector<Complex> kernel_;
  std::vector<Complex> a_;
  std::vector<Complex> b_;
};

}  // namespace detail

/// Reusable transform of one fixed length. Not thread-safe (owns scratch
/// buffers); give each thread its own plan.
class Plan {
 public:
  explicit Plan(std::size_t n) : n_(n), buffer_(n) {
    if (n == 0) return;
    const auto f = detail::factorize(n);
    // The last factor is the largest prime unless n is a power of two.
    if (f.empty() || f.back() <= kMaxDirectRadix) {
      mixed_ = std::make_unique<detail::MixedRadix>(n);
    } else {
      bluestein_ = std::make_unique<detail::Bluestein>(n);
    }
  }

  std::size_t size() const noexcept { return n_; }
  bool uses_bluestein() const noexcept { return static_cast<bool>(bluestein_); }

  /// Transforms `data` in place.
  void execute(std::span<Complex> data, Direction dir) {
    if (n_ == 0) return;
    if (dir == Direction::Inverse) {
      for (auto& v : data) v = std::conj(v);
    }
    std::copy(data.begin(), data.end(), buffer_.begin());
    if (mixed_) {
      mixed_->forward(buffer_, data);
    } else {
      bluestein_->forward(buffer_, data);
    }
    if (dir == Direction::Inverse) {
      const double scale = 1.0 / static_cast<double>(n_);
      for (auto& v : data) v = std::conj(v) * scale;
    }
  }

 private:
  std::size_t n_;
  std::vector<Complex> buffer_;
  std::unique_ptr<detail::MixedRadix> mixed_;
  std::unique_ptr<detail::Bluestein> bluestein_;
};

}  // namespace colormosaic::fft
