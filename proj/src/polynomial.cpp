#include "crmostow/polynomial.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>

#include "linalg.hpp"

namespace crmostow {

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_derivative(const Poly& p) {
  Poly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * ExactScalar(static_cast<long>(k)));
  trim(d);
  return d;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  Poly bb = b;
  trim(bb);
  if (bb.empty()) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
  Poly r = a;
  trim(r);
  if (r.size() < bb.size()) return {Poly{}, r};
  Poly q(r.size() - bb.size() + 1);
  const ExactScalar lead_inv = bb.back().inverse();
  for (std::size_t k = r.size(); k-- >= bb.size();) {
    if (r[k].is_zero()) continue;
    ExactScalar f = r[k] * lead_inv;
    const std::size_t shift = k - (bb.size() - 1);
    q[shift] = f;
    for (std::size_t j = 0; j < bb.size(); ++j) r[shift + j] -= f * bb[j];
  }
  trim(q);
  trim(r);
  return {q, r};
}

Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  const ExactScalar inv = a.back().inverse();
  for (auto& c : a) c *= inv;
  return a;
}

ExactMatrix poly_eval(const Poly& p, const ExactMatrix& x) {
  ExactMatrix acc(x.rows(), x.cols());
  for (std::size_t k = p.size(); k-- > 0;) {
    acc = acc * x + ExactMatrix::identity(x.rows()) * p[k];
  }
  return acc;
}

Poly minimal_polynomial(const ExactMatrix& x) {
  if (!x.square()) throw Error(ErrorCode::ShapeMismatch, "incompatible shapes");
  const std::size_t n = x.rows();
  std::vector<ExactVec> powers;
  ExactMatrix cur = ExactMatrix::identity(n);
  for (std::size_t d = 0; d <= n; ++d) {
    powers.push_back(cur.flat());
    auto ker = detail::kernel(powers, n * n);
    if (!ker.empty()) {
      Poly p = ker.front();
      trim(p);
      const ExactScalar inv = p.back().inverse();
      for (auto& c : p) c *= inv;
      return p;
    }
    cur = cur * x;
  }
  throw Error(ErrorCode::InvalidArgument, "minimal polynomial search failed");
}

Poly characteristic_polynomial(const ExactMatrix& x) {
  if (!x.square()) throw Error(ErrorCode::ShapeMismatch, "incompatible shapes");
  const std::size_t n = x.rows();
  std::vector<ExactVec> h(n, ExactVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h[i][j] = x(i, j);
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1].is_zero()) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][i], h[r][m]);
    }
    const ExactScalar inv = h[m][m - 1].inverse();
    for (std::size_t j = m + 1; j < n; ++j) {
      if (h[j][m - 1].is_zero()) continue;
      ExactScalar u = h[j][m - 1] * inv;
      for (std::size_t c = 0; c < n; ++c) {
        if (!h[m][c].is_zero()) h[j][c] -= u * h[m][c];
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (!h[r][j].is_zero()) h[r][m] += u * h[r][j];
      }
    }
  }
  std::vector<Poly> p(n + 1);
  p[0] = Poly{ExactScalar(1)};
  for (std::size_t m = 1; m <= n; ++m) {
    Poly cur(m + 1);
    for (std::size_t k = 0; k < p[m - 1].size(); ++k) {
      cur[k + 1] += p[m - 1][k];
      cur[k] -= h[m - 1][m - 1] * p[m - 1][k];
    }
    ExactScalar t(1);
    for (std::size_t i = 1; i < m; ++i) {
      t *= h[m - i][m - i - 1];
      if (t.is_zero()) break;
      const ExactScalar f = t * h[m - i - 1][m - 1];
      if (f.is_zero()) continue;
      for (std::size_t k = 0; k < p[m - i - 1].size(); ++k) cur[k] -= f * p[m - i - 1][k];
    }
    p[m] = std::move(cur);
  }
  return p[n];
}

RatPoly real_coefficients(const Poly& p) {
  RatPoly out;
  for (const auto& c : p) {
    if (!c.is_real()) throw Error(ErrorCode::InvalidArgument, "polynomial has non-real coefficients");
    out.push_back(c.re());
  }
  while (!out.empty() && sgn(out.back()) == 0) out.pop_back();
  return out;
}

namespace {
std::size_t sign_changes(const RatPoly& p, bool flip_odd) {
  std::size_t changes = 0;
  int last = 0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    int s = sgn(p[k]);
    if (s == 0) continue;
    if (flip_odd && (k % 2 == 1)) s = -s;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Rational eval(const RatPoly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

RatPoly divide_linear(const RatPoly& p, const Rational& r) {
  // Synthetic division by (t - r); caller guarantees p(r) = 0.
  const std::size_t d = p.size() - 1;
  RatPoly q(d);
  Rational carry = 0;
  for (std::size_t k = d + 1; k-- > 1;) {
    carry = p[k] + carry * r;
    q[k - 1] = carry;
  }
  return q;
}
}  // namespace

SignCounts descartes_counts(const RatPoly& p) {
  SignCounts c;
  std::size_t low = 0;
  while (low < p.size() && sgn(p[low]) == 0) ++low;
  c.zero = low;
  RatPoly q(p.begin() + static_cast<long>(low), p.end());
  c.positive = sign_changes(q, false);
  c.negative = sign_changes(q, true);
  return c;
}

std::vector<Rational> rational_roots(const RatPoly& input) {
  RatPoly p = input;
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
  if (p.empty()) throw Error(ErrorCode::InvalidArgument, "zero polynomial has no finite root set");
  std::vector<Rational> roots;
  while (p.size() > 1 && sgn(p[0]) == 0) {
    roots.emplace_back(0);
    p.erase(p.begin());
  }
  // Bound on denominators: the leading coefficient of the primitive integer form.
  mpz_class den_lcm = 1;
  for (const auto& c : p) den_lcm = lcm(den_lcm, c.get_den());
  mpz_class lead = abs(mpz_class(p.back() * den_lcm));
  const double bound = lead.fits_slong_p() ? static_cast<double>(lead.get_si()) : 1e18;
  while (p.size() > 1) {
    const int d = static_cast<int>(p.size()) - 1;
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(d, d);
    const double lead_d = p.back().get_d();
    for (int k = 0; k < d; ++k) comp(0, k) = -p[static_cast<std::size_t>(d - 1 - k)].get_d() / lead_d;
    for (int k = 1; k < d; ++k) comp(k, k - 1) = 1.0;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    bool found = false;
    for (int k = 0; k < d && !found; ++k) {
      const std::complex<double> z = es.eigenvalues()(k);
      if (std::abs(z.imag()) > 1e-3 * (1.0 + std::abs(z.real()))) continue;
      // Continued-fraction convergents of the real part.
      double x = z.real();
      mpz_class h0 = 1, h1 = static_cast<long>(std::floor(x));
      mpz_class k0 = 0, k1 = 1;
      double frac = x - std::floor(x);
      for (int it = 0; it < 64; ++it) {
        Rational cand(h1, k1);
        cand.canonicalize();
        if (sgn(eval(p, cand)) == 0) {
          roots.push_back(cand);
          p = divide_linear(p, cand);
          found = true;
          break;
        }
        if (frac < 1e-15 || k1 > bound) break;
        const double inv = 1.0 / frac;
        const long a = static_cast<long>(std::floor(inv));
        frac = inv - std::floor(inv);
        mpz_class h2 = a * h1 + h0;
        mpz_class k2 = a * k1 + k0;
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
      }
    }
    if (!found) throw Error(ErrorCode::IrrationalWeights, "irrational weights");
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace crmostow
