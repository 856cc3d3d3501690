#include "fibercone/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <set>
#include <tuple>

#include "fibercone/errors.hpp"

namespace fibercone {

Polynomial normal_form(const Polynomial& f,
                       const std::vector<Polynomial>& basis) {
  if (f.is_zero()) return f;
  const PolyRing& R = *f.ring();
  const PrimeField& F = R.field();
  Polynomial rem(&R);
  Polynomial cur = f;
  std::vector<Term> rem_terms;
  while (!cur.is_zero()) {
    const Term& lt = cur.leading_term();
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      if (g.leading_monomial().divides(lt.mon)) {
        Monomial q = lt.mon.divided_by(g.leading_monomial());
        uint32_t c = F.mul(lt.coeff, F.inv(g.leading_coeff()));
        cur = cur.minus(g.times_term(q, c));
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      // Move the leading term to the remainder; it can never be reduced later
      // because subsequent leading terms are strictly smaller.
      rem_terms.push_back(lt);
      std::vector<Term> rest(cur.terms().begin() + 1, cur.terms().end());
      Polynomial next(&R);
      next = Polynomial(&R, std::move(rest));
      cur = std::move(next);
    }
  }
  return Polynomial(&R, std::move(rem_terms));
}

namespace {

Polynomial s_poly(const Polynomial& f, const Polynomial& g) {
  const PolyRing& R = *f.ring();
  const PrimeField& F = R.field();
  Monomial L = f.leading_monomial().lcm(g.leading_monomial());
  Monomial mf = L.divided_by(f.leading_monomial());
  Monomial mg = L.divided_by(g.leading_monomial());
  Polynomial a = f.times_term(mf, F.inv(f.leading_coeff()));
  Polynomial b = g.times_term(mg, F.inv(g.leading_coeff()));
  return a.minus(b);
}

struct Pair {
  uint64_t lcm_deg;
  uint32_t i, j;
  Monomial lcm;
  bool operator>(const Pair& o) const {
    return std::tie(lcm_deg, i, j) > std::tie(o.lcm_deg, o.i, o.j);
  }
};

constexpr size_t kPairCap = 500000;

}  // namespace

std::vector<Polynomial> reduced_groebner(const PolyRing& ring,
                                         std::vector<Polynomial> gens) {
  // Interreduce the input first: drastically shrinks pair counts for the
  // monomial-heavy ideals this engine mostly sees.
  std::vector<Polynomial> G;
  for (auto& f : gens) {
    if (f.is_zero()) continue;
    if (f.ring() != &ring) throw RingMismatch("generator from wrong ring");
    G.push_back(f.monic());
  }
  std::sort(G.begin(), G.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ring.less(a.leading_monomial(), b.leading_monomial());
  });
  {
    std::vector<Polynomial> reduced;
    for (auto& f : G) {
      Polynomial r = normal_form(f, reduced);
      if (!r.is_zero()) reduced.push_back(r.monic());
    }
    G = std::move(reduced);
  }
  if (G.empty()) return G;

  std::priority_queue<Pair, std::vector<Pair>, std::greater<Pair>> queue;
  std::set<std::pair<uint32_t, uint32_t>> handled;
  auto push_pair = [&](uint32_t i, uint32_t j) {
    if (i > j) std::swap(i, j);
    Monomial L = G[i].leading_monomial().lcm(G[j].leading_monomial());
    queue.push(Pair{L.degree(), i, j, std::move(L)});
  };
  for (uint32_t i = 0; i < G.size(); ++i)
    for (uint32_t j = i + 1; j < G.size(); ++j) push_pair(i, j);

  size_t processed = 0;
  while (!queue.empty()) {
    if (++processed > kPairCap)
      throw OverflowError("Groebner pair budget exhausted");
    Pair p = queue.top();
    queue.pop();
    if (handled.count({p.i, p.j})) continue;
    handled.insert({p.i, p.j});
    const Polynomial &f = G[p.i], &g = G[p.j];
    // Buchberger 1: coprime leading monomials reduce to zero.
    if (f.leading_monomial().coprime(g.leading_monomial())) continue;
    // S-polynomial of two monomials is zero.
    if (f.is_monomial() && g.is_monomial()) continue;
    // Chain criterion: some other basis element divides the lcm and both
    // associated pairs were already handled.
    bool skip = false;
    for (uint32_t k = 0; k < G.size() && !skip; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!G[k].leading_monomial().divides(p.lcm)) continue;
      auto key1 = std::minmax(p.i, k);
      auto key2 = std::minmax(p.j, k);
      if (handled.count({key1.first, key1.second}) &&
          handled.count({key2.first, key2.second}))
        skip = true;
    }
    if (skip) continue;
    Polynomial r = normal_form(s_poly(f, g), G);
    if (r.is_zero()) continue;
    G.push_back(r.monic());
    uint32_t n = static_cast<uint32_t>(G.size()) - 1;
    for (uint32_t i = 0; i < n; ++i) push_pair(i, n);
  }

  // Minimalize: drop elements whose leading monomial is divisible by another.
  std::vector<Polynomial> minimal;
  for (size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial &mi = G[i].leading_monomial(),
                     &mj = G[j].leading_monomial();
      if (mj.divides(mi) && (mi != mj || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(G[i]);
  }

  // Tail-reduce each element against the others.
  std::vector<Polynomial> out;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial r = normal_form(minimal[i], others);
    assert(!r.is_zero());
    out.push_back(r.monic());
  }
  std::sort(out.begin(), out.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return ring.less(a.leading_monomial(), b.leading_monomial());
            });
  return out;
}

}  // namespace fibercone
