#include "fibercone/reduction.hpp"

#include <limits>
#include <random>
#include <sstream>

#include "fibercone/errors.hpp"

namespace fibercone {

namespace {

uint64_t splitmix64(uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int default_probe(IdealPtr I2) {
  return static_cast<int>(I2->colength()) + 2;
}

std::string sequence_str(const ParameterSequence& x) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < x.size(); ++i) {
    if (i) os << "; ";
    os << x[i].str();
  }
  os << "]";
  return os.str();
}

}  // namespace

std::pair<bool, int> is_reduction(IdealArena& arena,
                                  const ParameterSequence& x, IdealPtr I2,
                                  int probe_bound) {
  if (x.size() != arena.ring().nvars()) return {false, -1};
  for (const auto& f : x)
    if (!I2->contains(f)) return {false, -1};
  if (probe_bound < 0) probe_bound = default_probe(I2);
  IdealPtr X = arena.make(x);
  for (int r = 0; r <= probe_bound; ++r) {
    if (arena.product(X, arena.power(I2, r)) == arena.power(I2, r + 1))
      return {true, r};
  }
  return {false, -1};
}

SuperficialVerdict check_superficial(const Polynomial& x,
                                     const FiltrationPair& pair, int r_window,
                                     int s_window) {
  SuperficialVerdict v;
  v.r_window = r_window;
  v.s_window = s_window;
  if (x.is_zero() || !pair.I2->contains(x)) return v;  // degenerate input
  IdealArena& A = *pair.arena;
  IdealPtr xR = A.principal(x);
  // cell (r, s) passes iff xR ∩ I1^s I2^r = x I1^s I2^(r-1)
  auto cell = [&](int r, int s) {
    IdealPtr Is = A.power(pair.I1, s);
    IdealPtr lhs = A.intersect(xR, A.product(Is, A.power(pair.I2, r)));
    IdealPtr rhs = A.product(xR, A.product(Is, A.power(pair.I2, r - 1)));
    return lhs == rhs;
  };
  int least_stable = -1;
  for (int r = r_window; r >= 1; --r) {
    bool row_ok = true;
    for (int s = 0; s <= s_window && row_ok; ++s) row_ok = cell(r, s);
    if (!row_ok) break;
    least_stable = r;
  }
  v.pass = least_stable != -1;
  v.r0 = least_stable;
  return v;
}

int s_value(const ParameterSequence& x, const FiltrationPair& pair,
            int probe_bound) {
  IdealArena& A = *pair.arena;
  if (probe_bound < 0) probe_bound = default_probe(pair.I2);
  IdealPtr X = A.make(x);
  for (int n = 0; n <= probe_bound; ++n) {
    if (A.product(X, pair.filtration_ideal(n)) == pair.filtration_ideal(n + 1) &&
        A.product(X, pair.filtration_ideal(n + 1)) ==
            pair.filtration_ideal(n + 2))
      return n;
  }
  throw WindowTooSmall("no stable exponent for (x) I1 I2^n = I1 I2^(n+1) up to " +
                       std::to_string(probe_bound));
}

ReductionData find_minimal_reduction(IdealArena& arena, IdealPtr I2,
                                     IdealPtr I1, bool constrain_inside_I1,
                                     int trials, uint64_t seed,
                                     int probe_bound) {
  const PolyRing& R = arena.ring();
  const size_t d = R.nvars();
  const uint32_t p = R.characteristic();
  const std::vector<Polynomial>& pool = I2->gb();
  if (probe_bound < 0) probe_bound = default_probe(I2);

  int rejected_membership = 0;
  uint64_t best_gap = std::numeric_limits<uint64_t>::max();
  int best_trial = -1;
  std::string best_desc;

  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 rng(splitmix64(seed + static_cast<uint64_t>(t)));
    ParameterSequence x;
    for (size_t j = 0; j < d; ++j) {
      Polynomial f = Polynomial::zero(R);
      for (const auto& g : pool)
        f = f.plus(g.scaled(static_cast<uint32_t>(rng() % p)));
      x.push_back(std::move(f));
    }
    if (constrain_inside_I1) {
      bool inside = true;
      for (const auto& f : x) inside = inside && I1->contains(f);
      if (!inside) {
        ++rejected_membership;
        continue;
      }
    }
    auto [ok, r] = is_reduction(arena, x, I2, probe_bound);
    if (ok) {
      ReductionData data;
      data.x = x;
      data.reduction_number = r;
      data.seed = seed;
      FiltrationPair pair = FiltrationPair::make(arena, I1, I2);
      data.s_value = s_value(x, pair, probe_bound);
      bool inside = true;
      for (const auto& f : x) inside = inside && I1->contains(f);
      data.inside_I1 = inside;
      int r_window = r + static_cast<int>(d) + 3;
      for (size_t j = 0; j < d; ++j) {
        SuperficialVerdict v = check_superficial(x[j], pair, r_window, 2);
        v.index = j;
        data.superficial_verdicts.push_back(v);
      }
      return data;
    }
    // Track how close the failing candidate came: the colength gap between
    // (x) I2^probe and I2^(probe+1) at the end of the ladder.
    uint64_t gap = std::numeric_limits<uint64_t>::max();
    try {
      IdealPtr X = arena.make(x);
      IdealPtr lhs = arena.product(X, arena.power(I2, probe_bound));
      gap = lhs->colength() - arena.power(I2, probe_bound + 1)->colength();
    } catch (const NotFiniteColength&) {
    }
    if (gap < best_gap) {
      best_gap = gap;
      best_trial = t;
      best_desc = sequence_str(x);
    }
  }

  std::ostringstream detail;
  detail << "trials=" << trials
         << " rejected_by_membership=" << rejected_membership;
  if (best_trial >= 0) {
    detail << " best: trial=" << best_trial << " colength_gap=";
    if (best_gap == std::numeric_limits<uint64_t>::max())
      detail << "infinite";
    else
      detail << best_gap;
    detail << " at exponent " << probe_bound << " x=" << best_desc;
  } else {
    detail << " (every candidate rejected before the reduction test)";
  }
  throw TrialsExhausted("no reduction found within the trial budget",
                        detail.str());
}

}  // namespace fibercone
