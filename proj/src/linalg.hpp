#pragma once

// Row reduction over an exact field (Rational or ExactScalar).

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "crmostow/exact.hpp"

namespace crmostow::detail {

inline void sub_mul(Rational& x, const Rational& f, const Rational& r) { x -= f * r; }

inline void sub_mul(ExactScalar& x, const ExactScalar& f, const ExactScalar& r) {
  if (f.is_real() && r.is_real()) {
    x -= ExactScalar(f.re() * r.re());
  } else {
    x -= f * r;
  }
}

inline Rational field_inverse(const Rational& x) { return 1 / x; }
inline ExactScalar field_inverse(const ExactScalar& x) { return x.inverse(); }

template <class F>
bool all_zero(const std::vector<F>& v) {
  return std::all_of(v.begin(), v.end(), [](const F& x) { return is_zero(x); });
}

template <class F>
std::size_t first_nonzero(const std::vector<F>& v) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!is_zero(v[k])) return k;
  }
  return v.size();
}

template <class F>
void axpy_sub(std::vector<F>& x, const F& f, const std::vector<F>& r) {
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (!is_zero(r[k])) sub_mul(x[k], f, r[k]);
  }
}

template <class F>
void scale(std::vector<F>& x, const F& f) {
  for (auto& e : x) {
    if (!is_zero(e)) e *= f;
  }
}

/// Fully reduced echelon rows, optionally carrying a tag vector that records
/// the combination of inputs producing each row.
template <class F>
class Echelon {
 public:
  explicit Echelon(std::size_t n, std::size_t tag_len = 0) : n_(n), tag_len_(tag_len) {}

  std::size_t rank() const { return rows_.size(); }

  /// Reduces x (and its tag) against the current rows.
  void reduce(std::vector<F>& x, std::vector<F>* tag = nullptr) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t p = pivots_[r];
      if (is_zero(x[p])) continue;
      F f = x[p];
      axpy_sub(x, f, rows_[r]);
      if (tag != nullptr) axpy_sub(*tag, f, tags_[r]);
    }
  }

  /// Inserts x; returns false (and leaves the kernel relation in *tag) when x
  /// is dependent on existing rows.
  bool insert(std::vector<F> x, std::vector<F>* tag = nullptr) {
    std::vector<F> t = tag != nullptr ? *tag : std::vector<F>(tag_len_);
    reduce(x, &t);
    const std::size_t p = first_nonzero(x);
    if (p == x.size()) {
      if (tag != nullptr) *tag = std::move(t);
      return false;
    }
    F inv = field_inverse(x[p]);
    scale(x, inv);
    scale(t, inv);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (is_zero(rows_[r][p])) continue;
      F f = rows_[r][p];
      axpy_sub(rows_[r], f, x);
      axpy_sub(tags_[r], f, t);
    }
    rows_.push_back(std::move(x));
    tags_.push_back(std::move(t));
    pivots_.push_back(p);
    return true;
  }

  /// Rows sorted by pivot together with their pivots.
  std::pair<std::vector<std::vector<F>>, std::vector<std::size_t>> sorted() const {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
    std::vector<std::vector<F>> out;
    std::vector<std::size_t> piv;
    out.reserve(order.size());
    for (std::size_t k : order) {
      out.push_back(rows_[k]);
      piv.push_back(pivots_[k]);
    }
    return {std::move(out), std::move(piv)};
  }

  std::size_t width() const { return n_; }

 private:
  std::size_t n_;
  std::size_t tag_len_;
  std::vector<std::vector<F>> rows_;
  std::vector<std::vector<F>> tags_;
  std::vector<std::size_t> pivots_;
};

/// Basis of {c : sum_j c_j images[j] = 0}; `n` is the image length.
template <class F>
std::vector<std::vector<F>> kernel(const std::vector<std::vector<F>>& images, std::size_t n) {
  const std::size_t m = images.size();
  Echelon<F> ech(n, m);
  std::vector<std::vector<F>> out;
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<F> tag(m);
    tag[j] = F(1);
    if (!ech.insert(images[j], &tag)) out.push_back(std::move(tag));
  }
  return out;
}

/// Kernel of a map given by constraint rows: {x : row . x = 0 for all rows}.
template <class F>
std::vector<std::vector<F>> solve_homogeneous(const std::vector<std::vector<F>>& rows, std::size_t m) {
  Echelon<F> ech(m);
  for (const auto& r : rows) {
    if (ech.rank() == m) break;
    if (!all_zero(r)) ech.insert(r);
  }
  auto [red, piv] = ech.sorted();
  std::vector<bool> is_pivot(m, false);
  for (std::size_t p : piv) is_pivot[p] = true;
  std::vector<std::vector<F>> out;
  for (std::size_t f = 0; f < m; ++f) {
    if (is_pivot[f]) continue;
    std::vector<F> x(m);
    x[f] = F(1);
    for (std::size_t r = 0; r < red.size(); ++r) x[piv[r]] = -red[r][f];
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace crmostow::detail
