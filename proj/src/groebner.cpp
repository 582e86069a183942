#include "summandlab/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <shared_mutex>
#include <unordered_map>

#include "summandlab/errors.hpp"

namespace summandlab {

namespace {

struct OrdLess {
  const MonomialOrder* ord;
  bool operator()(const Monomial& a, const Monomial& b) const { return ord->less(a, b); }
};

// Working form during reduction: terms ascending in the active order, so the
// leading term sits at rbegin().
using WPoly = std::map<Monomial, Scalar, OrdLess>;

WPoly to_wpoly(const Polynomial& p, const MonomialOrder& ord) {
  WPoly w(OrdLess{&ord});
  for (const auto& [m, c] : p.terms()) w.emplace(m, c);
  return w;
}

Polynomial to_polynomial(const PolyRing& ring, const WPoly& w) {
  Polynomial::TermMap terms;
  for (const auto& [m, c] : w) terms.emplace(m, c);
  return Polynomial(ring, std::move(terms));
}

// f += c * x^shift * g
void axpy(WPoly& f, const Scalar& c, const Monomial& shift, const WPoly& g, long max_terms) {
  for (const auto& [m, coef] : g) {
    Monomial shifted = m.times(shift);
    Scalar add = c * coef;
    auto [it, inserted] = f.emplace(std::move(shifted), add);
    if (!inserted) {
      it->second += add;
      if (it->second == 0) f.erase(it);
    }
  }
  if (static_cast<long>(f.size()) > max_terms) {
    throw AlgebraError(Errc::BudgetExceeded, "polynomial term budget exceeded during reduction");
  }
}

void make_monic(WPoly& f) {
  if (f.empty()) return;
  Scalar lc = f.rbegin()->second;
  if (lc == 1) return;
  for (auto& [m, c] : f) c /= lc;
}

// Full normal form against (leads, polys): no remainder term divisible by a lead.
WPoly reduce_full(WPoly f, const std::vector<Monomial>& leads, const std::vector<WPoly>& polys,
                  const MonomialOrder& ord, long max_terms) {
  WPoly remainder(OrdLess{&ord});
  while (!f.empty()) {
    auto lead_it = std::prev(f.end());
    const Monomial& m = lead_it->first;
    bool reduced = false;
    for (std::size_t i = 0; i < leads.size(); ++i) {
      if (leads[i].divides(m)) {
        Scalar factor = -lead_it->second / polys[i].rbegin()->second;
        Monomial shift = m.divided_by(leads[i]);
        axpy(f, factor, shift, polys[i], max_terms);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      remainder.emplace(lead_it->first, lead_it->second);
      f.erase(lead_it);
    }
  }
  return remainder;
}

WPoly s_polynomial(const WPoly& f, const WPoly& g, const MonomialOrder& ord, long max_terms) {
  const Monomial& lmf = f.rbegin()->first;
  const Monomial& lmg = g.rbegin()->first;
  Monomial lcm = Monomial::lcm(lmf, lmg);
  WPoly s(OrdLess{&ord});
  axpy(s, Scalar(1) / f.rbegin()->second, lcm.divided_by(lmf), f, max_terms);
  axpy(s, Scalar(-1) / g.rbegin()->second, lcm.divided_by(lmg), g, max_terms);
  return s;
}

struct SPair {
  std::size_t i, j;
  Monomial lcm;
  int degree;
};

struct SPairLess {
  const MonomialOrder* ord;
  bool operator()(const SPair& a, const SPair& b) const {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.lcm != b.lcm) return ord->less(a.lcm, b.lcm);
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

std::vector<Polynomial> buchberger(const Ideal& ideal, const MonomialOrder& ord,
                                   const GbBudget& budget) {
  std::vector<WPoly> basis;
  std::vector<Monomial> leads;
  for (const auto& g : ideal.generators()) {
    WPoly w = to_wpoly(g, ord);
    w = reduce_full(std::move(w), leads, basis, ord, budget.max_terms);
    if (w.empty()) continue;
    make_monic(w);
    leads.push_back(w.rbegin()->first);
    basis.push_back(std::move(w));
  }

  std::set<SPair, SPairLess> queue{SPairLess{&ord}};
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto push_pair = [&](std::size_t i, std::size_t j) {
    Monomial lcm = Monomial::lcm(leads[i], leads[j]);
    queue.insert(SPair{i, j, lcm, lcm.total_degree()});
    pending.insert({i, j});
  };
  for (std::size_t j = 1; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) push_pair(i, j);
  }

  long processed = 0;
  while (!queue.empty()) {
    if (++processed > budget.max_spairs) {
      throw AlgebraError(Errc::BudgetExceeded, "S-pair budget exceeded; raise SUMMANDLAB_GB_BUDGET");
    }
    SPair pair = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pair.i, pair.j});

    // Product criterion.
    if (Monomial::coprime(leads[pair.i], leads[pair.j])) continue;
    // Chain criterion: a third element divides the lcm and both side pairs
    // are already treated.
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (!leads[k].divides(pair.lcm)) continue;
      auto a = std::minmax(pair.i, k);
      auto b = std::minmax(pair.j, k);
      if (!pending.count({a.first, a.second}) && !pending.count({b.first, b.second})) skip = true;
    }
    if (skip) continue;

    WPoly s = s_polynomial(basis[pair.i], basis[pair.j], ord, budget.max_terms);
    WPoly r = reduce_full(std::move(s), leads, basis, ord, budget.max_terms);
    if (r.empty()) continue;
    make_monic(r);
    std::size_t t = basis.size();
    leads.push_back(r.rbegin()->first);
    basis.push_back(std::move(r));
    for (std::size_t i = 0; i < t; ++i) push_pair(i, t);
  }

  // Minimalize: drop elements whose lead is divisible by another kept lead.
  std::vector<std::size_t> order_idx(basis.size());
  std::iota(order_idx.begin(), order_idx.end(), 0);
  std::sort(order_idx.begin(), order_idx.end(),
            [&](std::size_t a, std::size_t b) { return ord.less(leads[a], leads[b]); });
  std::vector<std::size_t> kept;
  for (std::size_t idx : order_idx) {
    bool divisible = std::any_of(kept.begin(), kept.end(), [&](std::size_t k) {
      return leads[k].divides(leads[idx]);
    });
    if (!divisible) kept.push_back(idx);
  }

  // Tail-reduce each kept element against the others.
  std::vector<WPoly> reduced;
  std::vector<Monomial> kept_leads;
  for (std::size_t idx : kept) kept_leads.push_back(leads[idx]);
  for (std::size_t pos = 0; pos < kept.size(); ++pos) {
    std::vector<Monomial> other_leads;
    std::vector<WPoly> other_polys;
    for (std::size_t q = 0; q < kept.size(); ++q) {
      if (q == pos) continue;
      other_leads.push_back(leads[kept[q]]);
      other_polys.push_back(basis[kept[q]]);
    }
    WPoly r =
        reduce_full(basis[kept[pos]], other_leads, other_polys, ord, budget.max_terms);
    make_monic(r);
    reduced.push_back(std::move(r));
  }

  // Deterministic presentation: descending leading monomials.
  std::sort(reduced.begin(), reduced.end(), [&](const WPoly& a, const WPoly& b) {
    return ord.less(b.rbegin()->first, a.rbegin()->first);
  });
  std::vector<Polynomial> out;
  out.reserve(reduced.size());
  for (const auto& w : reduced) out.push_back(to_polynomial(ideal.ring(), w));
  return out;
}

std::unordered_map<std::string, GroebnerBasisPtr>& gb_cache() {
  static std::unordered_map<std::string, GroebnerBasisPtr> cache;
  return cache;
}

std::shared_mutex& gb_cache_mutex() {
  static std::shared_mutex mu;
  return mu;
}

}  // namespace

GbBudget GbBudget::from_env() {
  GbBudget b;
  if (const char* env = std::getenv("SUMMANDLAB_GB_BUDGET")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) b.max_spairs = v;
  }
  return b;
}

GroebnerBasis::GroebnerBasis(Ideal ideal, MonomialOrder order, std::vector<Polynomial> basis)
    : ideal_(std::move(ideal)), order_(std::move(order)), basis_(std::move(basis)) {
  leads_.reserve(basis_.size());
  for (const auto& g : basis_) leads_.push_back(leading_term(g, order_).first);
}

bool GroebnerBasis::is_unit_ideal() const {
  return basis_.size() == 1 && basis_[0].is_constant() && !basis_[0].is_zero();
}

std::pair<Monomial, Scalar> leading_term(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) throw AlgebraError(Errc::BadParams, "leading term of zero polynomial");
  auto best = p.terms().begin();
  for (auto it = std::next(p.terms().begin()); it != p.terms().end(); ++it) {
    if (order.less(best->first, it->first)) best = it;
  }
  return {best->first, best->second};
}

GroebnerBasisPtr reduced_groebner(const Ideal& ideal, const MonomialOrder& order) {
  std::string key = order.key() + "#" + ideal.canonical_key();
  {
    std::shared_lock lock(gb_cache_mutex());
    auto it = gb_cache().find(key);
    if (it != gb_cache().end()) return it->second;
  }
  auto basis = buchberger(ideal, order, GbBudget::from_env());
  auto gb = std::make_shared<const GroebnerBasis>(ideal, order, std::move(basis));
  std::unique_lock lock(gb_cache_mutex());
  return gb_cache().emplace(key, gb).first->second;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  if (p.ring() != gb.ideal().ring()) {
    throw AlgebraError(Errc::RingMismatch, "normal form across different rings");
  }
  GbBudget budget = GbBudget::from_env();
  const MonomialOrder& ord = gb.order();
  std::vector<WPoly> polys;
  polys.reserve(gb.basis().size());
  for (const auto& g : gb.basis()) polys.push_back(to_wpoly(g, ord));
  WPoly r = reduce_full(to_wpoly(p, ord), gb.leading_monomials(), polys, ord, budget.max_terms);
  return to_polynomial(p.ring(), r);
}

bool contains(const Polynomial& p, const Ideal& ideal) {
  if (p.is_zero()) return true;
  return normal_form(p, *reduced_groebner(ideal, MonomialOrder::degrevlex())).is_zero();
}

bool ideal_contains(const Ideal& larger, const Ideal& smaller) {
  return std::all_of(smaller.generators().begin(), smaller.generators().end(),
                     [&](const Polynomial& g) { return contains(g, larger); });
}

bool ideal_equals(const Ideal& a, const Ideal& b) {
  auto ga = reduced_groebner(a, MonomialOrder::degrevlex());
  auto gb = reduced_groebner(b, MonomialOrder::degrevlex());
  return ga->basis() == gb->basis();
}

namespace {

bool supported_on(const Polynomial& p, const std::vector<bool>& allowed) {
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t i = 0; i < allowed.size(); ++i) {
      if (!allowed[i] && m[i] > 0) return false;
    }
  }
  return true;
}

// Re-expresses p inside `target`, sending variable i of p's ring to the
// variable at position[i].
Polynomial embed(const Polynomial& p, const PolyRing& target,
                 const std::vector<std::size_t>& position) {
  Polynomial::TermMap terms;
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> e(target.arity(), 0);
    for (std::size_t i = 0; i < position.size(); ++i) e[position[i]] = m[i];
    terms.emplace(Monomial(std::move(e)), c);
  }
  return Polynomial(target, std::move(terms));
}

std::string fresh_name(const PolyRing& ring, const std::string& stem) {
  std::string name = stem;
  int suffix = 0;
  while (ring.index_of(name)) name = stem + std::to_string(suffix++);
  return name;
}

}  // namespace

Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& keep) {
  const PolyRing& ring = ideal.ring();
  std::vector<bool> kept(ring.arity(), false);
  for (const auto& name : keep) {
    auto idx = ring.index_of(name);
    if (!idx) throw AlgebraError(Errc::UnknownVariable, "eliminate: unknown variable " + name);
    kept[*idx] = true;
  }
  std::vector<bool> elim(ring.arity());
  for (std::size_t i = 0; i < elim.size(); ++i) elim[i] = !kept[i];
  auto gb = reduced_groebner(ideal, MonomialOrder::eliminating(elim));
  std::vector<Polynomial> gens;
  for (const auto& g : gb->basis()) {
    if (supported_on(g, kept)) gens.push_back(g);
  }
  return Ideal(ring, std::move(gens));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  if (a.ring() != b.ring()) {
    throw AlgebraError(Errc::RingMismatch, "intersection across different rings");
  }
  const PolyRing& ring = a.ring();
  std::string tag = fresh_name(ring, "t_isect");
  PolyRing ext = ring.extended({tag});
  std::vector<std::size_t> position(ring.arity());
  std::iota(position.begin(), position.end(), 0);
  Polynomial t = Polynomial::variable(ext, ext.arity() - 1);
  Polynomial one_minus_t = Polynomial::constant(ext, Scalar(1)) - t;

  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(t * embed(g, ext, position));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * embed(g, ext, position));
  Ideal extended(ext, std::move(gens));
  Ideal elim = eliminate(extended, ring.variables());

  std::vector<Polynomial> out;
  for (const auto& g : elim.generators()) {
    Polynomial::TermMap terms;
    for (const auto& [m, c] : g.terms()) {
      std::vector<int> e(m.exponents().begin(), m.exponents().end() - 1);
      terms.emplace(Monomial(std::move(e)), c);
    }
    out.push_back(Polynomial(ring, std::move(terms)));
  }
  return Ideal(ring, std::move(out));
}

namespace {

Polynomial divide_exact(const Polynomial& p, const Polynomial& f) {
  MonomialOrder ord = MonomialOrder::degrevlex();
  auto [lmf, lcf] = leading_term(f, ord);
  Polynomial q = Polynomial::zero(p.ring());
  Polynomial r = p;
  while (!r.is_zero()) {
    auto [lmr, lcr] = leading_term(r, ord);
    if (!lmf.divides(lmr)) {
      throw AlgebraError(Errc::BadParams, "inexact polynomial division");
    }
    Polynomial t = Polynomial::term(p.ring(), lmr.divided_by(lmf), lcr / lcf);
    q = q + t;
    r = r - t * f;
  }
  return q;
}

}  // namespace

Ideal colon_ideal(const Ideal& ideal, const Ideal& divisor) {
  if (ideal.ring() != divisor.ring()) {
    throw AlgebraError(Errc::RingMismatch, "colon across different rings");
  }
  if (divisor.is_zero_ideal()) return Ideal::unit(ideal.ring());
  bool first = true;
  Ideal acc(ideal.ring());
  for (const auto& f : divisor.generators()) {
    Ideal quotient(ideal.ring());
    if (f.is_constant()) {
      quotient = ideal;
    } else {
      Ideal principal(ideal.ring(), {f});
      Ideal meet = intersect(ideal, principal);
      std::vector<Polynomial> gens;
      for (const auto& g : meet.generators()) gens.push_back(divide_exact(g, f));
      quotient = Ideal(ideal.ring(), std::move(gens));
    }
    acc = first ? quotient : intersect(acc, quotient);
    first = false;
  }
  return acc;
}

Ideal saturate(const Ideal& ideal, const Ideal& divisor) {
  Ideal current = ideal;
  for (int round = 0; round < 64; ++round) {
    Ideal next = colon_ideal(current, divisor);
    if (ideal_equals(next, current)) return current;
    current = next;
  }
  throw AlgebraError(Errc::BudgetExceeded, "saturation did not stabilize within budget");
}

namespace {

// Pure-power bound per variable from the leading monomials, or -1 if absent.
std::vector<int> pure_power_bounds(const GroebnerBasis& gb) {
  std::size_t n = gb.ideal().ring().arity();
  std::vector<int> bound(n, -1);
  for (const auto& lead : gb.leading_monomials()) {
    int support = -1;
    bool pure = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (lead[i] > 0) {
        if (support >= 0) {
          pure = false;
          break;
        }
        support = static_cast<int>(i);
      }
    }
    if (lead.is_one()) {
      std::fill(bound.begin(), bound.end(), 0);
      return bound;
    }
    if (pure && support >= 0) {
      int e = lead[support];
      if (bound[support] < 0 || e < bound[support]) bound[support] = e;
    }
  }
  return bound;
}

void enumerate_standard(const GroebnerBasis& gb, const std::vector<int>& bound,
                        std::vector<int>& exps, std::size_t var,
                        std::vector<Monomial>& out) {
  std::size_t n = bound.size();
  if (var == n) {
    Monomial m(exps);
    for (const auto& lead : gb.leading_monomials()) {
      if (lead.divides(m)) return;
    }
    out.push_back(std::move(m));
    return;
  }
  for (int e = 0; e < bound[var]; ++e) {
    exps[var] = e;
    enumerate_standard(gb, bound, exps, var + 1, out);
  }
  exps[var] = 0;
}

}  // namespace

bool is_zero_dimensional(const Ideal& ideal) {
  auto gb = reduced_groebner(ideal, MonomialOrder::degrevlex());
  if (gb->is_unit_ideal()) return true;
  auto bound = pure_power_bounds(*gb);
  return std::all_of(bound.begin(), bound.end(), [](int b) { return b >= 0; });
}

std::vector<Monomial> standard_monomials(const Ideal& ideal) {
  auto gb = reduced_groebner(ideal, MonomialOrder::degrevlex());
  if (gb->is_unit_ideal()) return {};
  auto bound = pure_power_bounds(*gb);
  for (int b : bound) {
    if (b < 0) {
      throw AlgebraError(Errc::NotZeroDimensional,
                         "some variable has no pure-power leading monomial");
    }
  }
  std::vector<Monomial> out;
  std::vector<int> exps(bound.size(), 0);
  enumerate_standard(*gb, bound, exps, 0, out);
  std::sort(out.begin(), out.end(), grevlex_less);
  return out;
}

std::size_t zero_dim_vector_dimension(const Ideal& ideal) {
  return standard_monomials(ideal).size();
}

namespace {

std::vector<Integer> positive_divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> divisors;
  if (n == 0) return divisors;
  // Trial division; adequate for desk-scale coefficient data.
  std::vector<std::pair<Integer, int>> factors;
  Integer d(2);
  Integer remaining = n;
  long steps = 0;
  while (remaining > 1 && d * d <= remaining) {
    if (++steps > 2000000) break;
    if (remaining % d == 0) {
      int mult = 0;
      while (remaining % d == 0) {
        remaining /= d;
        ++mult;
      }
      factors.emplace_back(d, mult);
    }
    d += 1;
  }
  if (remaining > 1) factors.emplace_back(remaining, 1);
  divisors.push_back(Integer(1));
  for (const auto& [prime, mult] : factors) {
    std::size_t prior = divisors.size();
    Integer power(1);
    for (int e = 1; e <= mult; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < prior; ++i) divisors.push_back(divisors[i] * power);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

// Rational roots of a univariate polynomial given as dense coefficients.
std::vector<Scalar> rational_roots(std::vector<Scalar> coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  std::vector<Scalar> roots;
  if (coeffs.size() <= 1) return roots;
  // Zero roots.
  std::size_t shift = 0;
  while (shift < coeffs.size() && coeffs[shift] == 0) ++shift;
  if (shift > 0) {
    roots.push_back(Scalar(0));
    coeffs.erase(coeffs.begin(), coeffs.begin() + shift);
  }
  if (coeffs.size() <= 1) return roots;
  // Clear denominators and content.
  Integer denom_lcm(1);
  for (const auto& c : coeffs) {
    Integer den = c.get_den();
    denom_lcm = denom_lcm / gcd(denom_lcm, den) * den;
  }
  std::vector<Integer> ints;
  ints.reserve(coeffs.size());
  Integer content(0);
  for (const auto& c : coeffs) {
    Integer v = c.get_num() * (denom_lcm / c.get_den());
    content = gcd(content, v);
    ints.push_back(v);
  }
  if (content > 1) {
    for (auto& v : ints) v /= content;
  }
  auto eval = [&](const Scalar& x) {
    Scalar acc(0);
    for (std::size_t i = ints.size(); i-- > 0;) {
      acc = acc * x + Scalar(ints[i]);
    }
    return acc;
  };
  for (const Integer& p : positive_divisors(ints.front())) {
    for (const Integer& q : positive_divisors(ints.back())) {
      if (gcd(p, q) != 1) continue;
      Scalar candidate(p, q);
      candidate.canonicalize();
      if (eval(candidate) == 0) roots.push_back(candidate);
      Scalar neg = -candidate;
      if (eval(neg) == 0) roots.push_back(neg);
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::vector<Scalar> univariate_coefficients(const Ideal& elim, std::size_t var) {
  // gcd of the univariate generators, computed over Q.
  std::vector<std::vector<Scalar>> polys;
  for (const auto& g : elim.generators()) {
    std::vector<Scalar> coeffs;
    for (const auto& [m, c] : g.terms()) {
      std::size_t deg = static_cast<std::size_t>(m[var]);
      if (m.total_degree() != m[var]) {
        coeffs.clear();
        break;
      }
      if (coeffs.size() <= deg) coeffs.resize(deg + 1, Scalar(0));
      coeffs[deg] = c;
    }
    if (!coeffs.empty()) polys.push_back(std::move(coeffs));
  }
  if (polys.empty()) return {};
  auto degree = [](const std::vector<Scalar>& p) { return static_cast<long>(p.size()) - 1; };
  auto rem = [&](std::vector<Scalar> a, const std::vector<Scalar>& b) {
    while (degree(a) >= degree(b) && !a.empty()) {
      Scalar factor = a.back() / b.back();
      long offset = degree(a) - degree(b);
      for (long i = 0; i <= degree(b); ++i) a[offset + i] -= factor * b[i];
      while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
  };
  std::vector<Scalar> g = polys[0];
  for (std::size_t i = 1; i < polys.size(); ++i) {
    std::vector<Scalar> h = polys[i];
    while (!h.empty()) {
      std::vector<Scalar> r = rem(g, h);
      g = h;
      h = r;
    }
  }
  return g;
}

void solve_points(const Ideal& ideal, std::vector<std::size_t> active,
                  std::vector<Scalar>& partial, std::vector<std::vector<Scalar>>& out) {
  auto gb = reduced_groebner(ideal, MonomialOrder::degrevlex());
  if (gb->is_unit_ideal()) return;
  if (active.empty()) {
    out.push_back(partial);
    return;
  }
  std::size_t var = active.back();
  active.pop_back();
  Ideal elim = eliminate(ideal, {ideal.ring().variable(var)});
  auto coeffs = univariate_coefficients(elim, var);
  for (const Scalar& root : rational_roots(coeffs)) {
    Polynomial constraint = Polynomial::variable(ideal.ring(), var) -
                            Polynomial::constant(ideal.ring(), root);
    partial[var] = root;
    solve_points(ideal.plus(constraint), active, partial, out);
  }
  partial[var] = 0;
}

}  // namespace

RationalPoints rational_points_zero_dim(const Ideal& ideal) {
  std::size_t total = zero_dim_vector_dimension(ideal);  // throws if not zero-dimensional
  RationalPoints result;
  if (total == 0) return result;

  std::vector<std::size_t> active(ideal.ring().arity());
  std::iota(active.begin(), active.end(), 0);
  std::vector<Scalar> partial(ideal.ring().arity(), Scalar(0));
  solve_points(ideal, active, partial, result.points);
  std::sort(result.points.begin(), result.points.end());

  // Degree accounting: each rational point's local multiplicity is what the
  // residue algebra loses when the point's component is saturated away.
  std::size_t accounted = 0;
  for (const auto& point : result.points) {
    std::vector<Polynomial> max_ideal_gens;
    for (std::size_t i = 0; i < point.size(); ++i) {
      max_ideal_gens.push_back(Polynomial::variable(ideal.ring(), i) -
                               Polynomial::constant(ideal.ring(), point[i]));
    }
    Ideal away = saturate(ideal, Ideal(ideal.ring(), max_ideal_gens));
    accounted += total - zero_dim_vector_dimension(away);
  }
  result.complete = (accounted == total);
  return result;
}

bool buchberger_certificate(const GroebnerBasis& gb) {
  GbBudget budget = GbBudget::from_env();
  const MonomialOrder& ord = gb.order();
  std::vector<WPoly> polys;
  for (const auto& g : gb.basis()) polys.push_back(to_wpoly(g, ord));
  for (std::size_t j = 1; j < polys.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      WPoly s = s_polynomial(polys[i], polys[j], ord, budget.max_terms);
      WPoly r = reduce_full(std::move(s), gb.leading_monomials(), polys, ord, budget.max_terms);
      if (!r.empty()) return false;
    }
  }
  return true;
}

}  // namespace summandlab
