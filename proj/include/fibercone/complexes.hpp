#pragma once

#include <map>
#include <string>
#include <vector>

#include "fibercone/hilbert.hpp"
#include "fibercone/ideal.hpp"
#include "fibercone/linalg.hpp"
#include "fibercone/reduction.hpp"

namespace fibercone {

// The four complexes attached to a sequence x = x_1..x_k in I2 and the
// filtration {I1 I2^n}:
//   C1          term i = (R/I1 I2^(n-i))^C(k,i), i = 0..k
//   C0          term i = (R/I2^(n-i))^C(k,i), with I2^m = R for m <= 0
//   D1          the truncation of C1 to homological degrees i <= n
//   KoszulFiber term i = (I2^(n-i)/I1 I2^(n-i))^C(k,i), i <= min(n,k)
// Differentials are the Koszul maps: e_{j1<..<ji} -> sum_r (-1)^(r+1)
// x_{j_r} e_{..^j_r..}, realized as multiply-then-normal-form blocks on
// standard-monomial coordinates.
enum class ComplexVariant { C1, C0, D1, KoszulFiber };

const char* variant_name(ComplexVariant v);

struct ComplexTerm {
  IdealPtr den = nullptr;  // denominator ideal (quotient R/den as ambient)
  IdealPtr num = nullptr;  // numerator ideal for subquotients, else nullptr
  long long mult = 0;      // C(k, i)
  uint32_t ambient_block = 0;  // colength(den)
  uint32_t block_dim = 0;      // dim of one block of the term
  bool present = true;         // truncated terms are absent (dimension 0)

  long long length() const { return mult * static_cast<long long>(block_dim); }
};

struct ComplexInstance {
  ComplexVariant variant = ComplexVariant::C1;
  long long n = 0;
  size_t k = 0;
  std::vector<ComplexTerm> terms;  // index 0..k
  // diff[i]: term_i -> term_{i-1} on ambient coordinates, i = 1..k
  // (diff[0] is an empty placeholder).
  std::vector<SparseMatFp> diff;
  // For KoszulFiber: basis[i] spans the subspace of the ambient carrying the
  // term (block-diagonal over the multiplicity); empty columns mean identity.
  std::vector<SparseMatFp> basis;
  bool has_basis = false;
};

struct HomologyReport {
  ComplexVariant variant = ComplexVariant::C1;
  long long n = 0;
  std::vector<long long> h;             // h[i], i = 0..k
  std::vector<long long> term_lengths;  // l(term_i), i = 0..k
  long long euler() const;              // sum (-1)^i h[i]
};

struct ClauseResult {
  std::string clause;
  long long n = 0;
  long long lhs = 0;  // computed homology length
  long long rhs = 0;  // closed form / expected value
  bool ok = false;
};

struct ClauseVerdict {
  bool pass = true;
  std::vector<ClauseResult> clauses;
  void add(const std::string& clause, long long n, long long lhs,
           long long rhs);
};

// Builds complexes and homology for one fixed sequence and filtration pair,
// caching multiplication blocks, subspace bases, and homology reports.
class ComplexFactory {
 public:
  ComplexFactory(ParameterSequence x, FiltrationPair pair);

  const ParameterSequence& x() const { return x_; }
  const FiltrationPair& pair() const { return pair_; }
  size_t k() const { return x_.size(); }
  bool inside_I1() const { return inside_I1_; }

  // Throws HypothesisViolated for D1/KoszulFiber when (x) is not inside I1.
  ComplexInstance build(ComplexVariant v, long long n);
  const HomologyReport& homology(ComplexVariant v, long long n);

  // Compares homology lengths of C1 (and D1 when (x) is inside I1) against
  // the closed forms:
  //   H_0(C)(1,n) = len(R/(I1 I2^n + (x)))            all n
  //   H_1(C)(1,n) = len((x) cap I1 I2^n / (x) I1 I2^(n-1))   n >= 2
  //   H_k(C)(1,n) = len((I1 I2^(n-k+1) : (x)) / I1 I2^(n-k)) all n
  //   H_1(D) matches the H_1 form already for n >= 1 and vanishes for n < 1;
  //   H_k(D) vanishes for n < k.
  ClauseVerdict cross_check_homology(long long n);

  // Termwise length additivity len(D_i) = len(K_i) + len(C0_i) and the Euler
  // characteristic identity chi(D) = chi(K) + chi(C0). Requires (x) in I1.
  ClauseVerdict euler_and_exactness_check(long long n);

  IdealPtr sequence_ideal();  // (x) in the arena

 private:
  ParameterSequence x_;
  FiltrationPair pair_;
  bool inside_I1_ = false;

  const SparseMatFp& mult_matrix(IdealPtr src, IdealPtr tgt, size_t j);
  const SparseMatFp& fiber_basis(long long a);

  IdealPtr x_ideal_ = nullptr;
  std::map<std::tuple<IdealPtr, IdealPtr, size_t>, SparseMatFp> mult_cache_;
  std::map<long long, SparseMatFp> basis_cache_;
  std::map<std::pair<ComplexVariant, long long>, HomologyReport> hom_cache_;
};

// Convenience wrappers matching the operation-level vocabulary; each call
// builds a fresh factory, so prefer ComplexFactory for sweeps over n.
ComplexInstance build_complex(const ParameterSequence& x,
                              const FiltrationPair& pair, ComplexVariant v,
                              long long n);
HomologyReport homology_lengths(const ParameterSequence& x,
                                const FiltrationPair& pair, ComplexVariant v,
                                long long n);

}  // namespace fibercone
