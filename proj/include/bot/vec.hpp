#ifndef BOT_VEC_HPP
#define BOT_VEC_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <string>

namespace bot {

/// Small stack vector for points/covectors in dimension 1 or 2.
class Vec {
 public:
  Vec() = default;
  explicit Vec(double x) : dim_(1) { c_[0] = x; }
  Vec(double x, double y) : dim_(2) {
    c_[0] = x;
    c_[1] = y;
  }

  static Vec zero(int dim) {
    Vec v;
    v.dim_ = dim;
    return v;
  }

  int dim() const { return dim_; }
  double operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }

  /// Scalar access for 1-D vectors.
  double scalar() const { return c_[0]; }

  Vec& operator+=(const Vec& o) {
    for (int i = 0; i < dim_; ++i) c_[static_cast<std::size_t>(i)] += o[i];
    return *this;
  }
  Vec& operator-=(const Vec& o) {
    for (int i = 0; i < dim_; ++i) c_[static_cast<std::size_t>(i)] -= o[i];
    return *this;
  }
  Vec& operator*=(double s) {
    for (int i = 0; i < dim_; ++i) c_[static_cast<std::size_t>(i)] *= s;
    return *this;
  }

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(Vec a, double s) { return a *= s; }
  friend Vec operator*(double s, Vec a) { return a *= s; }
  friend Vec operator-(Vec a) { return a *= -1.0; }

  friend bool operator==(const Vec& a, const Vec& b) {
    if (a.dim_ != b.dim_) return false;
    for (int i = 0; i < a.dim_; ++i)
      if (a[i] != b[i]) return false;
    return true;
  }

 private:
  std::array<double, 2> c_{};
  int dim_ = 1;
};

inline double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm_sq(const Vec& a) { return dot(a, a); }
inline double norm(const Vec& a) { return std::sqrt(norm_sq(a)); }
inline double dist(const Vec& a, const Vec& b) { return norm(a - b); }

inline std::string to_string(const Vec& a) {
  std::string s = "(" + std::to_string(a[0]);
  for (int i = 1; i < a.dim(); ++i) s += ", " + std::to_string(a[i]);
  return s + ")";
}

}  // namespace bot

#endif  // BOT_VEC_HPP
