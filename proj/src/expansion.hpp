#pragma once

// Nonoverlapping floating-point expansions (Priest / Shewchuk). An expansion
// is a sum of doubles, stored in increasing order of magnitude, whose value is
// represented exactly. Only what the predicates need is provided.

#include <cmath>
#include <vector>

namespace hoctop::detail {

inline void two_sum(double a, double b, double& x, double& y) {
  x = a + b;
  const double bv = x - a;
  const double av = x - bv;
  y = (a - av) + (b - bv);
}

inline void fast_two_sum(double a, double b, double& x, double& y) {
  x = a + b;
  y = b - (x - a);
}

inline void two_diff(double a, double b, double& x, double& y) {
  x = a - b;
  const double bv = a - x;
  const double av = x + bv;
  y = (a - av) + (bv - b);
}

inline void split(double a, double& hi, double& lo) {
  constexpr double splitter = 134217729.0;  // 2^27 + 1
  const double c = splitter * a;
  const double big = c - a;
  hi = c - big;
  lo = a - hi;
}

inline void two_product(double a, double b, double& x, double& y) {
  x = a * b;
  double ahi, alo, bhi, blo;
  split(a, ahi, alo);
  split(b, bhi, blo);
  const double err1 = x - (ahi * bhi);
  const double err2 = err1 - (alo * bhi);
  const double err3 = err2 - (ahi * blo);
  y = (alo * blo) - err3;
}

class Expansion {
 public:
  Expansion() = default;
  explicit Expansion(double v) {
    if (v != 0.0) terms_.push_back(v);
  }

  /// Exact a - b.
  static Expansion difference(double a, double b) {
    double x, y;
    two_diff(a, b, x, y);
    Expansion e;
    if (y != 0.0) e.terms_.push_back(y);
    if (x != 0.0) e.terms_.push_back(x);
    return e;
  }

  friend Expansion operator+(const Expansion& e, const Expansion& f) {
    Expansion h = e;
    for (double v : f.terms_) h.grow(v);
    return h;
  }

  Expansion operator-() const {
    Expansion r = *this;
    for (double& v : r.terms_) v = -v;
    return r;
  }

  friend Expansion operator-(const Expansion& e, const Expansion& f) { return e + (-f); }

  friend Expansion operator*(const Expansion& e, const Expansion& f) {
    Expansion total;
    for (double v : f.terms_) total = total + e.scaled(v);
    return total;
  }

  int sign() const {
    if (terms_.empty()) return 0;
    return terms_.back() > 0.0 ? 1 : -1;
  }

 private:
  void grow(double b) {
    std::vector<double> out;
    out.reserve(terms_.size() + 1);
    double q = b;
    for (double e : terms_) {
      double sum, err;
      two_sum(q, e, sum, err);
      if (err != 0.0) out.push_back(err);
      q = sum;
    }
    if (q != 0.0) out.push_back(q);
    terms_ = std::move(out);
  }

  Expansion scaled(double b) const {
    Expansion h;
    if (terms_.empty() || b == 0.0) return h;
    double q, hh;
    two_product(terms_[0], b, q, hh);
    if (hh != 0.0) h.terms_.push_back(hh);
    for (std::size_t i = 1; i < terms_.size(); ++i) {
      double p1, p0, sum;
      two_product(terms_[i], b, p1, p0);
      two_sum(q, p0, sum, hh);
      if (hh != 0.0) h.terms_.push_back(hh);
      fast_two_sum(p1, sum, q, hh);
      if (hh != 0.0) h.terms_.push_back(hh);
    }
    if (q != 0.0) h.terms_.push_back(q);
    return h;
  }

  std::vector<double> terms_;
};

}  // namespace hoctop::detail
