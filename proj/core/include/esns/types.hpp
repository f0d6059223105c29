#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace esns {

inline constexpr int kNumFields = 5;

using Vec3 = std::array<double, 3>;
using State5 = std::array<double, 5>;

// 5x5 dense matrix, row major.
struct Mat5 {
  std::array<double, 25> a{};

  double& operator()(int r, int c) { return a[5 * r + c]; }
  double operator()(int r, int c) const { return a[5 * r + c]; }

  State5 apply(const State5& x) const {
    State5 y{};
    for (int r = 0; r < 5; ++r) {
      double s = 0.0;
      for (int c = 0; c < 5; ++c) s += a[5 * r + c] * x[c];
      y[r] = s;
    }
    return y;
  }

  Mat5 transposed() const {
    Mat5 t;
    for (int r = 0; r < 5; ++r)
      for (int c = 0; c < 5; ++c) t(r, c) = (*this)(c, r);
    return t;
  }
};

inline Mat5 operator+(const Mat5& x, const Mat5& y) {
  Mat5 z;
  for (int i = 0; i < 25; ++i) z.a[i] = x.a[i] + y.a[i];
  return z;
}

inline Mat5 operator*(double s, const Mat5& x) {
  Mat5 z;
  for (int i = 0; i < 25; ++i) z.a[i] = s * x.a[i];
  return z;
}

inline Mat5 matmul(const Mat5& x, const Mat5& y) {
  Mat5 z;
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 5; ++c) {
      double s = 0.0;
      for (int k = 0; k < 5; ++k) s += x(r, k) * y(k, c);
      z(r, c) = s;
    }
  return z;
}

inline double dot(const Vec3& x, const Vec3& y) {
  return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
}

inline double dot(const State5& x, const State5& y) {
  double s = 0.0;
  for (int i = 0; i < 5; ++i) s += x[i] * y[i];
  return s;
}

inline double norm(const Vec3& x) { return std::sqrt(dot(x, x)); }

inline Vec3 cross(const Vec3& x, const Vec3& y) {
  return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2],
          x[0] * y[1] - x[1] * y[0]};
}

inline Vec3 operator+(const Vec3& x, const Vec3& y) {
  return {x[0] + y[0], x[1] + y[1], x[2] + y[2]};
}
inline Vec3 operator-(const Vec3& x, const Vec3& y) {
  return {x[0] - y[0], x[1] - y[1], x[2] - y[2]};
}
inline Vec3 operator*(double s, const Vec3& x) {
  return {s * x[0], s * x[1], s * x[2]};
}

inline State5 operator+(const State5& x, const State5& y) {
  State5 z;
  for (int i = 0; i < 5; ++i) z[i] = x[i] + y[i];
  return z;
}
inline State5 operator-(const State5& x, const State5& y) {
  State5 z;
  for (int i = 0; i < 5; ++i) z[i] = x[i] - y[i];
  return z;
}
inline State5 operator*(double s, const State5& x) {
  State5 z;
  for (int i = 0; i < 5; ++i) z[i] = s * x[i];
  return z;
}

// Compensated (Neumaier) accumulator. The entropy balance diagnostics
// subtract two large quadratures, so plain summation noise must stay at
// the per-term rounding level rather than growing with the node count.
class CompensatedSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

struct PhysicsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonPositiveDensity : PhysicsError {
  using PhysicsError::PhysicsError;
};
struct NonPositiveTemperature : PhysicsError {
  using PhysicsError::PhysicsError;
};
struct InvalidMeshError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace esns
