#include "rootforge/cone.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

namespace rootforge {

namespace {

using Rational = boost::multiprecision::cpp_rational;

struct ExactField {
  using Scalar = Rational;
  static bool zero(const Scalar& x) { return x == 0; }
  static bool positive(const Scalar& x) { return x > 0; }
  static bool negative(const Scalar& x) { return x < 0; }
  static Scalar magnitude(const Scalar& x) { return x < 0 ? Scalar(-x) : x; }
};

struct FloatField {
  using Scalar = double;
  double tol;
  bool zero(double x) const { return std::abs(x) <= tol; }
  bool positive(double x) const { return x > tol; }
  bool negative(double x) const { return x < -tol; }
  static double magnitude(double x) { return std::abs(x); }
};

template <class Field>
struct Inequality {
  std::vector<typename Field::Scalar> coef;
  typename Field::Scalar rhs;
};

// Feasibility of { x >= 0 : m x = b } with m given row-major as d rows of k entries.
template <class Field>
bool fourier_motzkin(const Field& f, std::vector<std::vector<typename Field::Scalar>> m,
                     std::vector<typename Field::Scalar> b, std::size_t k) {
  using S = typename Field::Scalar;
  const std::size_t d = m.size();
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < k && rank < d; ++col) {
    std::size_t best = d;
    for (std::size_t r = rank; r < d; ++r) {
      if (f.zero(m[r][col])) continue;
      if (best == d || Field::magnitude(m[r][col]) > Field::magnitude(m[best][col])) best = r;
    }
    if (best == d) continue;
    std::swap(m[best], m[rank]);
    std::swap(b[best], b[rank]);
    const S p = m[rank][col];
    for (std::size_t c = 0; c < k; ++c) m[rank][c] /= p;
    b[rank] /= p;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == rank || f.zero(m[r][col])) continue;
      const S factor = m[r][col];
      for (std::size_t c = 0; c < k; ++c) m[r][c] -= factor * m[rank][c];
      b[r] -= factor * b[rank];
    }
    pivots.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < d; ++r)
    if (!f.zero(b[r])) return false;

  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < k; ++c)
    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free_cols.push_back(c);
  const std::size_t q = free_cols.size();

  std::vector<Inequality<Field>> rows;
  for (std::size_t j = 0; j < q; ++j) {
    Inequality<Field> in{std::vector<S>(q, S(0)), S(0)};
    in.coef[j] = S(-1);
    rows.push_back(std::move(in));
  }
  for (std::size_t i = 0; i < rank; ++i) {
    Inequality<Field> in{std::vector<S>(q, S(0)), b[i]};
    for (std::size_t j = 0; j < q; ++j) in.coef[j] = m[i][free_cols[j]];
    rows.push_back(std::move(in));
  }

  for (std::size_t jj = q; jj-- > 0;) {
    std::vector<Inequality<Field>> pos, neg, next;
    for (auto& row : rows) {
      if (f.positive(row.coef[jj]))
        pos.push_back(std::move(row));
      else if (f.negative(row.coef[jj]))
        neg.push_back(std::move(row));
      else {
        row.coef[jj] = S(0);
        next.push_back(std::move(row));
      }
    }
    for (const auto& p : pos) {
      for (const auto& n : neg) {
        const S a = -n.coef[jj];
        const S c = p.coef[jj];
        Inequality<Field> in{std::vector<S>(q, S(0)), p.rhs * a + n.rhs * c};
        S scale(0);
        for (std::size_t j = 0; j < q; ++j) {
          in.coef[j] = j == jj ? S(0) : p.coef[j] * a + n.coef[j] * c;
          scale = std::max(scale, Field::magnitude(in.coef[j]));
        }
        scale = std::max(scale, Field::magnitude(in.rhs));
        if (!f.zero(scale)) {
          for (auto& v : in.coef) v /= scale;
          in.rhs /= scale;
        }
        next.push_back(std::move(in));
      }
    }
    rows = std::move(next);
  }
  for (const auto& row : rows)
    if (f.negative(row.rhs)) return false;
  return true;
}

}  // namespace

bool nonnegative_combination_exists(const std::vector<Vec>& columns, const Vec& target, double tol) {
  const std::size_t k = columns.size();
  const std::size_t d = target.size();
  double scale = 1;
  for (double x : target) scale = std::max(scale, std::abs(x));
  for (const auto& c : columns)
    for (double x : c) scale = std::max(scale, std::abs(x));
  std::vector<std::vector<double>> m(d, std::vector<double>(k));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < k; ++j) m[i][j] = columns[j].at(i) / scale;
  std::vector<double> b(d);
  for (std::size_t i = 0; i < d; ++i) b[i] = target[i] / scale;
  return fourier_motzkin(FloatField{tol}, std::move(m), std::move(b), k);
}

bool nonnegative_combination_exists_exact(const std::vector<Vec>& columns, const Vec& target) {
  const std::size_t k = columns.size();
  const std::size_t d = target.size();
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(k));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < k; ++j) m[i][j] = Rational(columns[j].at(i));
  std::vector<Rational> b(d);
  for (std::size_t i = 0; i < d; ++i) b[i] = Rational(target[i]);
  return fourier_motzkin(ExactField{}, std::move(m), std::move(b), k);
}

bool positively_independent(const std::vector<Vec>& vectors) {
  if (vectors.empty()) return true;
  const std::size_t d = vectors.front().size();
  std::vector<Vec> columns;
  for (const auto& v : vectors) {
    if (v.size() != d) throw InputError("vectors of different dimensions");
    Vec c = v;
    c.push_back(1.0);
    columns.push_back(std::move(c));
  }
  Vec target(d, 0.0);
  target.push_back(1.0);
  return !nonnegative_combination_exists_exact(columns, target);
}

ConeTester::ConeTester(std::vector<Vec> generators, double tol) : generators_(std::move(generators)), tol_(tol) {
  if (generators_.empty()) return;
  dim_ = generators_.front().size();
  const auto d = static_cast<Eigen::Index>(dim_);
  const auto k = static_cast<Eigen::Index>(generators_.size());
  Eigen::MatrixXd g(d, k);
  for (Eigen::Index j = 0; j < k; ++j)
    for (Eigen::Index i = 0; i < d; ++i) g(i, j) = generators_[j].at(i);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(g);
  lu.setThreshold(1e-10);
  if (lu.rank() == k) {
    independent_ = true;
    Eigen::MatrixXd li = (g.transpose() * g).inverse() * g.transpose();
    left_inverse_.resize(static_cast<std::size_t>(k * d));
    for (Eigen::Index i = 0; i < k; ++i)
      for (Eigen::Index j = 0; j < d; ++j) left_inverse_[i * d + j] = li(i, j);
  }
}

std::optional<Vec> ConeTester::coefficients(const Vec& v) const {
  if (!independent_) return std::nullopt;
  const std::size_t k = generators_.size();
  Vec c(k, 0.0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < dim_; ++j) c[i] += left_inverse_[i * dim_ + j] * v[j];
  double scale = 1;
  for (double x : v) scale = std::max(scale, std::abs(x));
  for (std::size_t j = 0; j < dim_; ++j) {
    double r = -v[j];
    for (std::size_t i = 0; i < k; ++i) r += c[i] * generators_[i][j];
    if (std::abs(r) > tol_ * scale * 10) return std::nullopt;
  }
  return c;
}

bool ConeTester::contains(const Vec& v) const {
  if (generators_.empty()) {
    for (double x : v)
      if (std::abs(x) > tol_) return false;
    return true;
  }
  if (v.size() != dim_) throw InputError("vector dimension mismatch in cone test");
  if (independent_) {
    auto c = coefficients(v);
    if (!c) return false;
    double scale = 1;
    for (double x : v) scale = std::max(scale, std::abs(x));
    return std::all_of(c->begin(), c->end(), [&](double x) { return x >= -tol_ * scale; });
  }
  return nonnegative_combination_exists(generators_, v, tol_);
}

}  // namespace rootforge
