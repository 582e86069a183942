#include "summandlab/grading.hpp"

#include <sstream>

#include "summandlab/errors.hpp"
#include "summandlab/int_linalg.hpp"

namespace summandlab {

std::string to_string(const DegreeVector& d) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out << ",";
    out << d[i];
  }
  out << ")";
  return out.str();
}

MultiGrading::MultiGrading(std::vector<std::vector<long>> rows) : rows_(std::move(rows)) {
  for (const auto& row : rows_) {
    if (row.size() != rows_[0].size()) {
      throw AlgebraError(Errc::BadParams, "ragged weight matrix");
    }
  }
}

DegreeVector MultiGrading::degree_of(const Monomial& m) const {
  if (m.arity() != arity()) {
    throw AlgebraError(Errc::ArityMismatch, "weight matrix does not match monomial arity");
  }
  DegreeVector d(rank(), 0);
  for (std::size_t r = 0; r < rank(); ++r) {
    for (std::size_t i = 0; i < arity(); ++i) d[r] += rows_[r][i] * m[i];
  }
  return d;
}

MultiGrading MultiGrading::with_extra_column(const DegreeVector& column) const {
  if (column.size() != rank()) {
    throw AlgebraError(Errc::ArityMismatch, "column length does not match grading rank");
  }
  std::vector<std::vector<long>> rows = rows_;
  for (std::size_t r = 0; r < rows.size(); ++r) rows[r].push_back(column[r]);
  return MultiGrading(std::move(rows));
}

HomogeneityCheck homogeneous_degree(const Polynomial& p, const MultiGrading& grading) {
  HomogeneityCheck result;
  if (p.is_zero()) {
    result.degree = DegreeVector(grading.rank(), 0);
    return result;
  }
  auto it = p.terms().begin();
  Monomial first = it->first;
  DegreeVector d = grading.degree_of(first);
  for (++it; it != p.terms().end(); ++it) {
    DegreeVector e = grading.degree_of(it->first);
    if (e != d) {
      result.witness = std::make_pair(first, it->first);
      return result;
    }
  }
  result.degree = std::move(d);
  return result;
}

bool all_generators_homogeneous(const Ideal& ideal, const MultiGrading& grading) {
  for (const auto& g : ideal.generators()) {
    if (!homogeneous_degree(g, grading).homogeneous()) return false;
  }
  return true;
}

MultiGrading discover_grading(const Ideal& ideal, std::size_t max_rank) {
  std::size_t n = ideal.ring().arity();
  ZMat differences;
  for (const auto& g : ideal.generators()) {
    if (g.is_zero()) continue;
    const Monomial& base = g.terms().begin()->first;
    for (auto it = std::next(g.terms().begin()); it != g.terms().end(); ++it) {
      ZVec row(n);
      for (std::size_t i = 0; i < n; ++i) row[i] = Integer(it->first[i] - base[i]);
      differences.push_back(std::move(row));
    }
  }
  ZMat kernel = integer_kernel(differences, n);
  std::vector<std::vector<long>> rows;
  for (const auto& krow : kernel) {
    if (rows.size() >= max_rank) break;
    std::vector<long> row(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!krow[i].fits_slong_p()) {
        throw AlgebraError(Errc::BadParams, "grading weight exceeds machine range");
      }
      row[i] = krow[i].get_si();
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) return MultiGrading();
  return MultiGrading(std::move(rows));
}

}  // namespace summandlab
