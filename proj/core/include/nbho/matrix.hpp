#ifndef NBHO_MATRIX_HPP
#define NBHO_MATRIX_HPP

#include <cmath>
#include <cstddef>
#include <vector>

namespace nbho {

// Minimal dense square matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n, double fill = 0.0) : n_(n), a_(n * n, fill) {}

  std::size_t order() const { return n_; }

  double& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (double v : a_) s += v * v;
    return std::sqrt(s);
  }

  double max_abs_off_diagonal() const {
    double mx = 0.0;
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < n_; ++c)
        if (r != c) mx = std::max(mx, std::abs(a_[r * n_ + c]));
    return mx;
  }

  double max_asymmetry() const {
    double mx = 0.0;
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = r + 1; c < n_; ++c)
        mx = std::max(mx, std::abs((*this)(r, c) - (*this)(c, r)));
    return mx;
  }

  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    Matrix s(x.n_);
    for (std::size_t i = 0; i < x.a_.size(); ++i) s.a_[i] = x.a_[i] + y.a_[i];
    return s;
  }

  bool operator==(const Matrix& o) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

}  // namespace nbho

#endif
