#include "summandlab/calculus.hpp"

#include "summandlab/errors.hpp"

namespace summandlab {

Polynomial derivative(const Polynomial& p, std::size_t var) {
  Polynomial::TermMap terms;
  for (const auto& [m, c] : p.terms()) {
    int e = m[var];
    if (e == 0) continue;
    std::vector<int> exps = m.exponents();
    exps[var] = e - 1;
    terms.emplace(Monomial(std::move(exps)), c * e);
  }
  return Polynomial(p.ring(), std::move(terms));
}

std::vector<Polynomial> partial_derivatives(const Polynomial& p) {
  std::vector<Polynomial> out;
  out.reserve(p.ring().arity());
  for (std::size_t i = 0; i < p.ring().arity(); ++i) out.push_back(derivative(p, i));
  return out;
}

Polynomial jet(const Polynomial& p, int k) {
  Polynomial::TermMap terms;
  for (const auto& [m, c] : p.terms()) {
    if (m.total_degree() <= k) terms.emplace(m, c);
  }
  return Polynomial(p.ring(), std::move(terms));
}

Polynomial homogeneous_part(const Polynomial& p, int k) {
  Polynomial::TermMap terms;
  for (const auto& [m, c] : p.terms()) {
    if (m.total_degree() == k) terms.emplace(m, c);
  }
  return Polynomial(p.ring(), std::move(terms));
}

bool is_homogeneous(const Polynomial& p) {
  if (p.is_zero()) return true;
  int d = p.terms().begin()->first.total_degree();
  for (const auto& [m, c] : p.terms()) {
    if (m.total_degree() != d) return false;
  }
  return true;
}

HessianAtOrigin hessian_at_origin(const Polynomial& p) {
  std::size_t n = p.ring().arity();
  HessianAtOrigin h;
  h.matrix.assign(n, std::vector<Scalar>(n, Scalar(0)));
  // The Hessian at 0 is determined by the degree-2 part alone.
  for (const auto& [m, c] : p.terms()) {
    if (m.total_degree() != 2) continue;
    std::size_t i = n, j = n;
    for (std::size_t k = 0; k < n; ++k) {
      if (m[k] == 2) {
        i = j = k;
      } else if (m[k] == 1) {
        (i == n ? i : j) = k;
      }
    }
    if (i == j) {
      h.matrix[i][i] = 2 * c;
    } else {
      h.matrix[i][j] = c;
      h.matrix[j][i] = c;
    }
  }
  h.rank = matrix_rank(h.matrix);
  h.corank = n - h.rank;
  return h;
}

Polynomial chart_localize(const Polynomial& form, const std::string& chart_var,
                          const std::vector<Scalar>& point) {
  if (!is_homogeneous(form)) {
    throw AlgebraError(Errc::NotHomogeneous, "chart localization needs a homogeneous form");
  }
  const PolyRing& ring = form.ring();
  auto chart = ring.index_of(chart_var);
  if (!chart) throw AlgebraError(Errc::UnknownVariable, "unknown chart variable " + chart_var);
  if (point.size() != ring.arity()) {
    throw AlgebraError(Errc::ArityMismatch, "point length does not match ring arity");
  }
  if (point[*chart] == 0) {
    throw AlgebraError(Errc::PointNotOnChart, "point has zero chart coordinate");
  }
  // Scale projective coordinates so the chart coordinate is 1.
  std::vector<Scalar> scaled(point);
  Scalar unit = point[*chart];
  for (auto& c : scaled) c /= unit;

  PolyRing local = ring.without_variable(*chart);
  std::vector<Polynomial> images;
  images.reserve(ring.arity());
  std::size_t pos = 0;
  for (std::size_t i = 0; i < ring.arity(); ++i) {
    if (i == *chart) {
      images.push_back(Polynomial::constant(local, Scalar(1)));
    } else {
      images.push_back(Polynomial::variable(local, pos) +
                       Polynomial::constant(local, scaled[i]));
      ++pos;
    }
  }
  return form.substitute(images);
}

}  // namespace summandlab
