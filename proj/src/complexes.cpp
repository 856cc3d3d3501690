#include "fibercone/complexes.hpp"

#include <unordered_map>

#include "fibercone/errors.hpp"

namespace fibercone {

namespace {

// All i-subsets of {0..k-1} as sorted index lists, lexicographic order.
std::vector<std::vector<int>> subsets_of_size(size_t k, size_t i) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (cur.size() == i) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < static_cast<int>(k); ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

uint32_t subset_mask(const std::vector<int>& s) {
  uint32_t m = 0;
  for (int v : s) m |= 1u << v;
  return m;
}

}  // namespace

const char* variant_name(ComplexVariant v) {
  switch (v) {
    case ComplexVariant::C1:
      return "C1";
    case ComplexVariant::C0:
      return "C0";
    case ComplexVariant::D1:
      return "D1";
    case ComplexVariant::KoszulFiber:
      return "KoszulFiber";
  }
  return "?";
}

long long HomologyReport::euler() const {
  long long e = 0;
  for (size_t i = 0; i < h.size(); ++i) e += (i % 2 == 0) ? h[i] : -h[i];
  return e;
}

void ClauseVerdict::add(const std::string& clause, long long n, long long lhs,
                        long long rhs) {
  ClauseResult r;
  r.clause = clause;
  r.n = n;
  r.lhs = lhs;
  r.rhs = rhs;
  r.ok = lhs == rhs;
  pass = pass && r.ok;
  clauses.push_back(std::move(r));
}

ComplexFactory::ComplexFactory(ParameterSequence x, FiltrationPair pair)
    : x_(std::move(x)), pair_(pair) {
  if (x_.empty()) throw HypothesisViolated("empty parameter sequence");
  for (const auto& f : x_) {
    if (f.is_zero() || !pair_.I2->contains(f))
      throw HypothesisViolated(
          "every sequence element must be a nonzero element of I2");
  }
  inside_I1_ = true;
  for (const auto& f : x_) inside_I1_ = inside_I1_ && pair_.I1->contains(f);
}

IdealPtr ComplexFactory::sequence_ideal() {
  if (!x_ideal_) x_ideal_ = pair_.arena->make(x_);
  return x_ideal_;
}

const SparseMatFp& ComplexFactory::mult_matrix(IdealPtr src, IdealPtr tgt,
                                               size_t j) {
  auto key = std::make_tuple(src, tgt, j);
  auto it = mult_cache_.find(key);
  if (it != mult_cache_.end()) return it->second;

  const auto& src_std = src->std_monomials();
  const auto& tgt_std = tgt->std_monomials();
  SparseMatFp M(pair_.arena->ring().field(),
                static_cast<uint32_t>(tgt_std.size()),
                static_cast<uint32_t>(src_std.size()));
  for (uint32_t c = 0; c < src_std.size(); ++c) {
    Polynomial f = tgt->reduce(x_[j].times_term(src_std[c], 1));
    std::vector<SparseEntry> col;
    for (const auto& t : f.terms())
      col.push_back({tgt->std_index(t.mon).value(), t.coeff});
    M.set_col(c, std::move(col));
  }
  M.normalize();
  return mult_cache_.emplace(key, std::move(M)).first->second;
}

const SparseMatFp& ComplexFactory::fiber_basis(long long a) {
  auto it = basis_cache_.find(a);
  if (it != basis_cache_.end()) return it->second;

  IdealArena& A = *pair_.arena;
  IdealPtr den = pair_.filtration_ideal(a);  // I1 I2^a, a >= 0
  IdealPtr num = A.power(pair_.I2, static_cast<int>(a));
  const auto& amb = den->std_monomials();
  const auto& tgt = num->std_monomials();
  // Projection R/I1 I2^a -> R/I2^a; its kernel is the image of I2^a.
  SparseMatFp pi(A.ring().field(), static_cast<uint32_t>(tgt.size()),
                 static_cast<uint32_t>(amb.size()));
  for (uint32_t c = 0; c < amb.size(); ++c) {
    Polynomial f = num->reduce(Polynomial::monomial(A.ring(), amb[c]));
    std::vector<SparseEntry> col;
    for (const auto& t : f.terms())
      col.push_back({num->std_index(t.mon).value(), t.coeff});
    pi.set_col(c, std::move(col));
  }
  pi.normalize();
  KernelBasis ker = sparse_kernel(pi);
  uint64_t expect = den->colength() - num->colength();
  if (ker.vecs.size() != expect)
    throw std::logic_error("fiber subspace dimension mismatch");
  SparseMatFp B(A.ring().field(), static_cast<uint32_t>(amb.size()),
                static_cast<uint32_t>(ker.vecs.size()));
  for (uint32_t c = 0; c < ker.vecs.size(); ++c) {
    std::vector<SparseEntry> col;
    for (uint32_t r = 0; r < ker.ambient; ++r)
      if (ker.vecs[c][r] != 0) col.push_back({r, ker.vecs[c][r]});
    B.set_col(c, std::move(col));
  }
  B.normalize();
  return basis_cache_.emplace(a, std::move(B)).first->second;
}

ComplexInstance ComplexFactory::build(ComplexVariant v, long long n) {
  IdealArena& A = *pair_.arena;
  const PrimeField& F = A.ring().field();
  const size_t k = x_.size();
  const bool truncated =
      v == ComplexVariant::D1 || v == ComplexVariant::KoszulFiber;
  if (truncated && !inside_I1_)
    throw HypothesisViolated(
        "the truncated and fiber complexes need (x) inside I1");

  ComplexInstance cx;
  cx.variant = v;
  cx.n = n;
  cx.k = k;
  cx.has_basis = v == ComplexVariant::KoszulFiber;

  for (size_t i = 0; i <= k; ++i) {
    ComplexTerm t;
    t.mult = binom_nonneg(static_cast<long long>(k), static_cast<int>(i));
    long long a = n - static_cast<long long>(i);
    t.present = !truncated || (a >= 0);
    if (v == ComplexVariant::C0)
      t.den = A.power(pair_.I2, a <= 0 ? 0 : static_cast<int>(a));
    else
      t.den = pair_.filtration_ideal(a);
    if (t.present) {
      t.ambient_block = static_cast<uint32_t>(t.den->colength());
      if (v == ComplexVariant::KoszulFiber) {
        t.num = A.power(pair_.I2, a <= 0 ? 0 : static_cast<int>(a));
        t.block_dim = static_cast<uint32_t>(t.den->colength() - t.num->colength());
      } else {
        t.block_dim = t.ambient_block;
      }
    }
    cx.terms.push_back(t);
  }

  // Differentials on ambient coordinates, blockwise over subset indices.
  cx.diff.emplace_back(F, 0, 0);  // placeholder at index 0
  for (size_t i = 1; i <= k; ++i) {
    const ComplexTerm& src = cx.terms[i];
    const ComplexTerm& tgt = cx.terms[i - 1];
    uint32_t src_amb = src.present ? src.ambient_block : 0;
    uint32_t tgt_amb = tgt.present ? tgt.ambient_block : 0;
    auto srcs = subsets_of_size(k, i);
    auto tgts = subsets_of_size(k, i - 1);
    SparseMatFp M(F, static_cast<uint32_t>(tgts.size()) * tgt_amb,
                  static_cast<uint32_t>(srcs.size()) * src_amb);
    if (src.present && tgt.present && src_amb > 0 && tgt_amb > 0) {
      std::unordered_map<uint32_t, uint32_t> tgt_rank;
      for (uint32_t t = 0; t < tgts.size(); ++t)
        tgt_rank[subset_mask(tgts[t])] = t;
      for (uint32_t s = 0; s < srcs.size(); ++s) {
        const auto& S = srcs[s];
        for (size_t r = 0; r < S.size(); ++r) {
          int j = S[r];
          uint32_t t = tgt_rank.at(subset_mask(S) & ~(1u << j));
          bool negate = r % 2 == 1;  // sign (-1)^(r+1) with r one-based
          const SparseMatFp& blk =
              mult_matrix(src.den, tgt.den, static_cast<size_t>(j));
          for (uint32_t c = 0; c < blk.cols(); ++c)
            for (const auto& e : blk.col(c))
              M.add_entry(t * tgt_amb + e.row, s * src_amb + c,
                          negate ? F.neg(e.val) : e.val);
        }
      }
    }
    M.normalize();
    cx.diff.push_back(std::move(M));
  }

  if (cx.has_basis) {
    for (size_t i = 0; i <= k; ++i) {
      const ComplexTerm& t = cx.terms[i];
      if (!t.present || t.ambient_block == 0) {
        cx.basis.emplace_back(F, 0, 0);
        continue;
      }
      const SparseMatFp& B = fiber_basis(n - static_cast<long long>(i));
      uint32_t mult = static_cast<uint32_t>(t.mult);
      SparseMatFp big(F, mult * B.rows(), mult * B.cols());
      for (uint32_t b = 0; b < mult; ++b)
        for (uint32_t c = 0; c < B.cols(); ++c)
          for (const auto& e : B.col(c))
            big.add_entry(b * B.rows() + e.row, b * B.cols() + c, e.val);
      big.normalize();
      cx.basis.push_back(std::move(big));
    }
  }

  // d^2 = 0, checked exactly on ambient coordinates.
  for (size_t i = 2; i <= k; ++i) {
    if (cx.diff[i].cols() == 0 || cx.diff[i - 1].rows() == 0) continue;
    if (!sparse_mul(cx.diff[i - 1], cx.diff[i]).is_zero())
      throw std::logic_error("differential square is nonzero");
  }
  return cx;
}

const HomologyReport& ComplexFactory::homology(ComplexVariant v, long long n) {
  auto key = std::make_pair(v, n);
  auto it = hom_cache_.find(key);
  if (it != hom_cache_.end()) return it->second;

  ComplexInstance cx = build(v, n);
  const size_t k = cx.k;
  HomologyReport rep;
  rep.variant = v;
  rep.n = n;
  std::vector<long long> dims(k + 1, 0);
  for (size_t i = 0; i <= k; ++i) {
    dims[i] = cx.terms[i].present ? cx.terms[i].length() : 0;
    rep.term_lengths.push_back(dims[i]);
  }
  std::vector<long long> rank(k + 2, 0);
  for (size_t i = 1; i <= k; ++i) {
    if (cx.diff[i].rows() == 0 || cx.diff[i].cols() == 0) continue;
    if (cx.has_basis)
      rank[i] = sparse_rank(sparse_mul(cx.diff[i], cx.basis[i]));
    else
      rank[i] = sparse_rank(cx.diff[i]);
  }
  long long euler_terms = 0;
  for (size_t i = 0; i <= k; ++i) {
    long long hi = dims[i] - rank[i] - rank[i + 1];
    if (hi < 0) throw std::logic_error("negative homology length");
    rep.h.push_back(hi);
    euler_terms += (i % 2 == 0) ? dims[i] : -dims[i];
  }
  if (rep.euler() != euler_terms)
    throw std::logic_error("homology Euler characteristic mismatch");
  return hom_cache_.emplace(key, std::move(rep)).first->second;
}

ClauseVerdict ComplexFactory::cross_check_homology(long long n) {
  IdealArena& A = *pair_.arena;
  const size_t k = x_.size();
  IdealPtr X = sequence_ideal();
  ClauseVerdict v;

  const HomologyReport& hc = homology(ComplexVariant::C1, n);

  long long h0_form = static_cast<long long>(
      A.sum(pair_.filtration_ideal(n), X)->colength());
  v.add("H0(C) = len(R/(I1 I2^n + (x)))", n, hc.h[0], h0_form);

  auto h1_form = [&]() {
    IdealPtr big = A.intersect(X, pair_.filtration_ideal(n));
    IdealPtr sub = A.product(X, pair_.filtration_ideal(n - 1));
    return static_cast<long long>(A.module_length(sub, big));
  };
  if (n >= 2)
    v.add("H1(C) = len((x) cap I1 I2^n / (x) I1 I2^(n-1))", n, hc.h[1],
          h1_form());

  IdealPtr colon_big =
      A.colon(pair_.filtration_ideal(n - static_cast<long long>(k) + 1), X);
  long long hk_form = static_cast<long long>(
      A.module_length(pair_.filtration_ideal(n - static_cast<long long>(k)),
                      colon_big));
  v.add("Hk(C) = len((I1 I2^(n-k+1) : (x)) / I1 I2^(n-k))", n, hc.h[k],
        hk_form);

  if (inside_I1_) {
    const HomologyReport& hd = homology(ComplexVariant::D1, n);
    if (n >= 1)
      v.add("H1(D) = len((x) cap I1 I2^n / (x) I1 I2^(n-1))", n, hd.h[1],
            h1_form());
    else
      v.add("H1(D) = 0 for n < 1", n, hd.h[1], 0);
    if (n < static_cast<long long>(k))
      v.add("Hk(D) = 0 for n < k", n, hd.h[k], 0);
    else
      v.add("Hk(D) = Hk closed form for n >= k", n, hd.h[k], hk_form);
  }
  return v;
}

ClauseVerdict ComplexFactory::euler_and_exactness_check(long long n) {
  if (!inside_I1_)
    throw HypothesisViolated("length additivity needs (x) inside I1");
  const size_t k = x_.size();
  ClauseVerdict v;

  const HomologyReport& hd = homology(ComplexVariant::D1, n);
  const HomologyReport& hk = homology(ComplexVariant::KoszulFiber, n);
  const HomologyReport& hc0 = homology(ComplexVariant::C0, n);
  for (size_t i = 0; i <= k; ++i)
    v.add("len(D_" + std::to_string(i) + ") = len(K_" + std::to_string(i) +
              ") + len(C0_" + std::to_string(i) + ")",
          n, hd.term_lengths[i], hk.term_lengths[i] + hc0.term_lengths[i]);
  v.add("chi(D) = chi(K) + chi(C0)", n, hd.euler(), hk.euler() + hc0.euler());
  return v;
}

ComplexInstance build_complex(const ParameterSequence& x,
                              const FiltrationPair& pair, ComplexVariant v,
                              long long n) {
  ComplexFactory f(x, pair);
  return f.build(v, n);
}

HomologyReport homology_lengths(const ParameterSequence& x,
                                const FiltrationPair& pair, ComplexVariant v,
                                long long n) {
  ComplexFactory f(x, pair);
  return f.homology(v, n);
}

}  // namespace fibercone
