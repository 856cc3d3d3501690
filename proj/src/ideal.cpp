#include "fibercone/ideal.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "fibercone/errors.hpp"

namespace fibercone {

bool Ideal::is_unit() const {
  return gb_.size() == 1 && gb_[0].is_monomial() &&
         gb_[0].leading_monomial().is_one();
}

bool Ideal::contains(const Ideal& other) const {
  for (const auto& g : other.gb_)
    if (!contains(g)) return false;
  return true;
}

bool Ideal::is_zero_dimensional() const {
  if (is_unit()) return true;
  size_t n = ring_->nvars();
  std::vector<bool> covered(n, false);
  for (const auto& g : gb_) {
    const Monomial& m = g.leading_monomial();
    // A pure power of one variable?
    int var = -1;
    bool pure = true;
    for (size_t i = 0; i < n; ++i) {
      if (m.exp(i) == 0) continue;
      if (var >= 0) {
        pure = false;
        break;
      }
      var = static_cast<int>(i);
    }
    if (pure && var >= 0) covered[var] = true;
  }
  for (bool c : covered)
    if (!c) return false;
  return true;
}

const std::vector<Monomial>& Ideal::std_monomials() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (std_) return *std_;
  if (!is_zero_dimensional())
    throw NotFiniteColength("quotient is not finite-dimensional");
  // BFS over the monomial lattice from 1, pruning anything under a leading
  // monomial of the basis.
  size_t n = ring_->nvars();
  std::vector<Monomial> lts;
  for (const auto& g : gb_) lts.push_back(g.leading_monomial());
  auto standard = [&](const Monomial& m) {
    for (const auto& l : lts)
      if (l.divides(m)) return false;
    return true;
  };
  std::vector<Monomial> out;
  std::set<ExpVec> seen;
  std::deque<Monomial> work;
  Monomial one = Monomial::one(n);
  if (standard(one)) {
    work.push_back(one);
    seen.insert(one.exps());
  }
  while (!work.empty()) {
    Monomial m = work.front();
    work.pop_front();
    out.push_back(m);
    for (size_t i = 0; i < n; ++i) {
      Monomial next = m.times(Monomial::var(n, i));
      if (!standard(next)) continue;
      if (seen.insert(next.exps()).second) work.push_back(next);
    }
  }
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return ring_->less(a, b);
  });
  for (uint32_t i = 0; i < out.size(); ++i) std_index_[out[i]] = i;
  std_ = std::move(out);
  return *std_;
}

uint64_t Ideal::colength() const { return std_monomials().size(); }

std::optional<uint32_t> Ideal::std_index(const Monomial& m) const {
  std_monomials();
  std::lock_guard<std::mutex> lock(mu_);
  auto it = std_index_.find(m);
  if (it == std_index_.end()) return std::nullopt;
  return it->second;
}

namespace {

// Stable fingerprint of a reduced GB for interning. Hash narrows the search;
// the string key settles collisions exactly.
uint64_t hash_gb(const std::vector<Polynomial>& gb) {
  uint64_t h = 1469598103934665603ull;
  auto mix = [&](uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(gb.size());
  for (const auto& g : gb) {
    mix(g.size());
    for (const auto& t : g.terms()) {
      mix(t.coeff);
      for (uint32_t e : t.mon.exps()) mix(e);
    }
  }
  return h;
}

std::string key_gb(const std::vector<Polynomial>& gb) {
  std::ostringstream out;
  for (const auto& g : gb) {
    for (const auto& t : g.terms()) {
      out << t.coeff;
      for (uint32_t e : t.mon.exps()) out << ',' << e;
      out << ';';
    }
    out << '|';
  }
  return out.str();
}

}  // namespace

IdealArena::IdealArena(const PolyRing& ring) : ring_(&ring) {
  std::vector<std::string> evars;
  evars.push_back("@t");
  for (const auto& v : ring.var_names()) evars.push_back(v);
  elim_ring_ = std::make_unique<PolyRing>(ring.characteristic(), evars,
                                          MonomialOrder::ElimFirst);
  to_elim_.resize(ring.nvars());
  for (size_t i = 0; i < ring.nvars(); ++i) to_elim_[i] = i + 1;
}

IdealArena::~IdealArena() = default;

IdealPtr IdealArena::intern(std::vector<Polynomial> gb) {
  uint64_t h = hash_gb(gb);
  std::string key = key_gb(gb);
  std::lock_guard<std::mutex> lock(mu_);
  auto it = interned_.find({h, key});
  if (it != interned_.end()) return it->second;
  pool_.emplace_back(new Ideal(ring_, std::move(gb), h));
  IdealPtr p = pool_.back().get();
  interned_[{h, key}] = p;
  return p;
}

IdealPtr IdealArena::make(std::vector<Polynomial> gens) {
  return intern(reduced_groebner(*ring_, std::move(gens)));
}

IdealPtr IdealArena::zero() { return intern({}); }

IdealPtr IdealArena::unit() {
  return make({Polynomial::constant(*ring_, 1)});
}

IdealPtr IdealArena::maximal() {
  std::vector<Polynomial> gens;
  for (size_t i = 0; i < ring_->nvars(); ++i)
    gens.push_back(Polynomial::variable(*ring_, i));
  return make(std::move(gens));
}

IdealPtr IdealArena::principal(const Polynomial& f) { return make({f}); }

IdealPtr IdealArena::sum(IdealPtr a, IdealPtr b) {
  std::tuple<char, IdealPtr, IdealPtr> key{'+', std::min(a, b),
                                           std::max(a, b)};
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = binary_memo_.find(key);
    if (it != binary_memo_.end()) return it->second;
  }
  std::vector<Polynomial> gens = a->gb();
  for (const auto& g : b->gb()) gens.push_back(g);
  IdealPtr r = make(std::move(gens));
  std::lock_guard<std::mutex> lock(mu_);
  binary_memo_[key] = r;
  return r;
}

IdealPtr IdealArena::product(IdealPtr a, IdealPtr b) {
  std::tuple<char, IdealPtr, IdealPtr> key{'*', std::min(a, b),
                                           std::max(a, b)};
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = binary_memo_.find(key);
    if (it != binary_memo_.end()) return it->second;
  }
  std::vector<Polynomial> gens;
  gens.reserve(a->gb().size() * b->gb().size());
  for (const auto& f : a->gb())
    for (const auto& g : b->gb()) gens.push_back(f.times(g));
  IdealPtr r = make(std::move(gens));
  std::lock_guard<std::mutex> lock(mu_);
  binary_memo_[key] = r;
  return r;
}

IdealPtr IdealArena::power(IdealPtr a, int n) {
  if (n <= 0) return unit();
  if (n == 1) return a;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = power_memo_.find({a, n});
    if (it != power_memo_.end()) return it->second;
  }
  IdealPtr r = product(power(a, n - 1), a);
  std::lock_guard<std::mutex> lock(mu_);
  power_memo_[{a, n}] = r;
  return r;
}

IdealPtr IdealArena::intersect(IdealPtr a, IdealPtr b) {
  std::tuple<char, IdealPtr, IdealPtr> key{'&', std::min(a, b),
                                           std::max(a, b)};
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = binary_memo_.find(key);
    if (it != binary_memo_.end()) return it->second;
  }
  // I cap J = (t*I + (1-t)*J) cap R, eliminating the auxiliary t via the
  // block order: basis elements free of t generate the intersection.
  const PolyRing& E = *elim_ring_;
  Polynomial t = Polynomial::variable(E, 0);
  Polynomial one_minus_t = Polynomial::constant(E, 1).minus(t);
  std::vector<Polynomial> gens;
  for (const auto& f : a->gb())
    gens.push_back(t.times(map_to_ring(f, E, to_elim_)));
  for (const auto& g : b->gb())
    gens.push_back(one_minus_t.times(map_to_ring(g, E, to_elim_)));
  std::vector<Polynomial> egb = reduced_groebner(E, std::move(gens));
  std::vector<Polynomial> kept;
  std::vector<size_t> back(E.nvars(), 0);
  for (size_t i = 1; i < E.nvars(); ++i) back[i] = i - 1;
  for (const auto& g : egb) {
    bool has_t = false;
    for (const auto& term : g.terms())
      if (term.mon.exp(0) > 0) {
        has_t = true;
        break;
      }
    if (!has_t) kept.push_back(map_to_ring(g, *ring_, back));
  }
  IdealPtr r = make(std::move(kept));
  std::lock_guard<std::mutex> lock(mu_);
  binary_memo_[key] = r;
  return r;
}

IdealPtr IdealArena::colon_single(IdealPtr a, const Polynomial& g) {
  // (a : g) = (a cap (g)) / g, computed by exact term-wise division of each
  // basis element of the intersection (each is a multiple of g; divide by
  // running the division algorithm, remainder must vanish).
  if (g.is_zero()) return unit();
  IdealPtr ag = intersect(a, principal(g));
  std::vector<Polynomial> gens;
  for (const auto& f : ag->gb()) {
    // f = q*g exactly; recover q by long division of f by {g}.
    const PolyRing& R = *ring_;
    const PrimeField& F = R.field();
    Polynomial cur = f;
    std::vector<Term> q;
    while (!cur.is_zero()) {
      const Term& lt = cur.leading_term();
      if (!g.leading_monomial().divides(lt.mon))
        throw HypothesisViolated("colon witness not divisible");
      Monomial qm = lt.mon.divided_by(g.leading_monomial());
      uint32_t qc = F.mul(lt.coeff, F.inv(g.leading_coeff()));
      q.push_back(Term{qm, qc});
      cur = cur.minus(g.times_term(qm, qc));
    }
    gens.push_back(Polynomial(&R, std::move(q)));
  }
  return make(std::move(gens));
}

IdealPtr IdealArena::colon(IdealPtr a, IdealPtr b) {
  std::tuple<char, IdealPtr, IdealPtr> key{':', a, b};
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = binary_memo_.find(key);
    if (it != binary_memo_.end()) return it->second;
  }
  IdealPtr r;
  if (b->is_zero()) {
    r = unit();
  } else {
    r = colon_single(a, b->gb()[0]);
    for (size_t i = 1; i < b->gb().size(); ++i)
      r = intersect(r, colon_single(a, b->gb()[i]));
  }
  std::lock_guard<std::mutex> lock(mu_);
  binary_memo_[key] = r;
  return r;
}

uint64_t IdealArena::module_length(IdealPtr sub, IdealPtr big) const {
  if (!big->contains(*sub))
    throw HypothesisViolated("module_length: not a submodule");
  return sub->colength() - big->colength();
}

}  // namespace fibercone
