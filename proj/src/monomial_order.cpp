#include "summandlab/monomial_order.hpp"

#include <numeric>
#include <sstream>

#include "summandlab/errors.hpp"

namespace summandlab {

MonomialOrder MonomialOrder::lex() { return MonomialOrder(Kind::Lex); }

MonomialOrder MonomialOrder::degrevlex() { return MonomialOrder(Kind::DegRevLex); }

MonomialOrder MonomialOrder::block_elimination(std::size_t first_block_size) {
  MonomialOrder o(Kind::BlockElimination);
  o.block_size_ = first_block_size;
  return o;
}

MonomialOrder MonomialOrder::weight_refined(std::vector<long> weights, Tiebreak tiebreak) {
  MonomialOrder o(Kind::WeightRefined);
  o.weights_ = std::move(weights);
  o.tiebreak_ = tiebreak;
  return o;
}

MonomialOrder MonomialOrder::eliminating(const std::vector<bool>& eliminate) {
  std::vector<long> w(eliminate.size());
  for (std::size_t i = 0; i < eliminate.size(); ++i) w[i] = eliminate[i] ? 1 : 0;
  return weight_refined(std::move(w));
}

namespace {

int lex_cmp(const Monomial& a, const Monomial& b, std::size_t from, std::size_t to) {
  for (std::size_t i = from; i < to; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

int grevlex_cmp(const Monomial& a, const Monomial& b, std::size_t from, std::size_t to) {
  long da = 0, db = 0;
  for (std::size_t i = from; i < to; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = to; i-- > from;) {
    int d = a[i] - b[i];
    if (d != 0) return d > 0 ? -1 : 1;
  }
  return 0;
}

}  // namespace

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
  std::size_t n = a.arity();
  switch (kind_) {
    case Kind::Lex:
      return lex_cmp(a, b, 0, n) < 0;
    case Kind::DegRevLex:
      return grevlex_cmp(a, b, 0, n) < 0;
    case Kind::BlockElimination: {
      std::size_t k = std::min(block_size_, n);
      int c = grevlex_cmp(a, b, 0, k);
      if (c != 0) return c < 0;
      return grevlex_cmp(a, b, k, n) < 0;
    }
    case Kind::WeightRefined: {
      if (weights_.size() != n) {
        throw AlgebraError(Errc::ArityMismatch, "weight vector does not match ring arity");
      }
      long wa = 0, wb = 0;
      for (std::size_t i = 0; i < n; ++i) {
        wa += weights_[i] * a[i];
        wb += weights_[i] * b[i];
      }
      if (wa != wb) return wa < wb;
      return tiebreak_ == Tiebreak::Lex ? lex_cmp(a, b, 0, n) < 0 : grevlex_cmp(a, b, 0, n) < 0;
    }
  }
  return false;
}

std::string MonomialOrder::key() const {
  std::ostringstream out;
  switch (kind_) {
    case Kind::Lex:
      out << "lex";
      break;
    case Kind::DegRevLex:
      out << "degrevlex";
      break;
    case Kind::BlockElimination:
      out << "block:" << block_size_;
      break;
    case Kind::WeightRefined:
      out << "weight:";
      for (long w : weights_) out << w << ",";
      out << (tiebreak_ == Tiebreak::Lex ? "lex" : "degrevlex");
      break;
  }
  return out.str();
}

MonomialOrder MonomialOrder::parse(const std::string& name) {
  if (name == "lex") return lex();
  if (name == "degrevlex" || name == "grevlex") return degrevlex();
  throw AlgebraError(Errc::BadParams, "unknown monomial order: " + name);
}

}  // namespace summandlab
