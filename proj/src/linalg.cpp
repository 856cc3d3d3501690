#include "fibercone/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>
#include <unordered_set>

namespace fibercone {

void SparseMatFp::add_entry(uint32_t r, uint32_t c, uint32_t v) {
  assert(r < rows_ && c < cols_);
  v %= F_->characteristic();
  if (v) data_[c].push_back(SparseEntry{r, v});
}

void SparseMatFp::set_col(uint32_t c, std::vector<SparseEntry> col) {
  assert(c < cols_);
  data_[c] = std::move(col);
}

void SparseMatFp::normalize() {
  for (auto& col : data_) {
    if (col.empty()) continue;
    std::sort(col.begin(), col.end(),
              [](const SparseEntry& a, const SparseEntry& b) {
                return a.row < b.row;
              });
    std::vector<SparseEntry> merged;
    merged.reserve(col.size());
    for (const auto& e : col) {
      if (!merged.empty() && merged.back().row == e.row) {
        merged.back().val = F_->add(merged.back().val, e.val);
        if (merged.back().val == 0) merged.pop_back();
      } else {
        merged.push_back(e);
      }
    }
    col = std::move(merged);
  }
}

size_t SparseMatFp::nnz() const {
  size_t n = 0;
  for (const auto& c : data_) n += c.size();
  return n;
}

bool SparseMatFp::is_zero() const { return nnz() == 0; }

namespace {

// Working state for elimination: columns as hash maps row -> value, plus a
// row -> set-of-columns index so pivoted rows can be cleared quickly.
struct Elim {
  const PrimeField& F;
  std::vector<std::unordered_map<uint32_t, uint32_t>> cols;
  std::unordered_map<uint32_t, std::unordered_set<uint32_t>> row_cols;
  std::vector<bool> done;

  explicit Elim(const SparseMatFp& M) : F(M.field()), cols(M.cols()) {
    done.assign(M.cols(), false);
    for (uint32_t c = 0; c < M.cols(); ++c) {
      for (const auto& e : M.col(c)) {
        cols[c][e.row] = e.val;
        row_cols[e.row].insert(c);
      }
    }
  }

  void set_entry(uint32_t c, uint32_t r, uint32_t v) {
    auto& col = cols[c];
    if (v == 0) {
      if (col.erase(r)) {
        auto it = row_cols.find(r);
        if (it != row_cols.end()) it->second.erase(c);
      }
    } else {
      auto [it, inserted] = col.try_emplace(r, v);
      if (!inserted) it->second = v;
      if (inserted) row_cols[r].insert(c);
    }
  }

  // Pick the unfinished column with fewest nonzeros (>=1).
  int pick_pivot_col() const {
    int best = -1;
    size_t best_n = SIZE_MAX;
    for (uint32_t c = 0; c < cols.size(); ++c) {
      if (done[c] || cols[c].empty()) continue;
      if (cols[c].size() < best_n) {
        best_n = cols[c].size();
        best = static_cast<int>(c);
      }
    }
    return best;
  }

  // Eliminate pivot row `pr` from all other unfinished columns using column
  // `pc` (whose (pr) entry is made 1 first). Optionally record the same
  // column operations on a history matrix (for kernel extraction).
  void eliminate(uint32_t pc, uint32_t pr,
                 std::vector<std::unordered_map<uint32_t, uint32_t>>* hist) {
    uint32_t pv = cols[pc].at(pr);
    if (pv != 1) {
      uint32_t inv = F.inv(pv);
      for (auto& [r, v] : cols[pc]) v = F.mul(v, inv);
      if (hist)
        for (auto& [r, v] : (*hist)[pc]) v = F.mul(v, inv);
    }
    auto it = row_cols.find(pr);
    if (it == row_cols.end()) return;
    std::vector<uint32_t> targets(it->second.begin(), it->second.end());
    for (uint32_t c : targets) {
      if (c == pc || done[c]) continue;
      auto f = cols[c].find(pr);
      if (f == cols[c].end()) continue;
      uint32_t factor = f->second;  // col_c -= factor * col_pc
      for (const auto& [r, v] : cols[pc]) {
        uint32_t cur = 0;
        auto g = cols[c].find(r);
        if (g != cols[c].end()) cur = g->second;
        set_entry(c, r, F.sub(cur, F.mul(factor, v)));
      }
      if (hist) {
        auto& hc = (*hist)[c];
        for (const auto& [r, v] : (*hist)[pc]) {
          uint32_t cur = 0;
          auto g = hc.find(r);
          if (g != hc.end()) cur = g->second;
          uint32_t nv = F.sub(cur, F.mul(factor, v));
          if (nv)
            hc[r] = nv;
          else
            hc.erase(r);
        }
      }
    }
  }
};

}  // namespace

uint32_t sparse_rank(const SparseMatFp& M) {
  Elim e(M);
  uint32_t rank = 0;
  for (;;) {
    int pc = e.pick_pivot_col();
    if (pc < 0) break;
    // Pivot on the row with fewest other columns touching it.
    uint32_t pr = 0;
    size_t best = SIZE_MAX;
    for (const auto& [r, v] : e.cols[pc]) {
      size_t n = e.row_cols[r].size();
      if (n < best) {
        best = n;
        pr = r;
      }
    }
    e.eliminate(static_cast<uint32_t>(pc), pr, nullptr);
    e.done[pc] = true;
    // Clear the pivot row entirely so later pivots never reuse it.
    auto it = e.row_cols.find(pr);
    if (it != e.row_cols.end()) {
      std::vector<uint32_t> touch(it->second.begin(), it->second.end());
      for (uint32_t c : touch) {
        e.cols[c].erase(pr);
        // row set cleaned below
      }
      e.row_cols.erase(pr);
    }
    ++rank;
  }
  return rank;
}

KernelBasis sparse_kernel(const SparseMatFp& M) {
  const PrimeField& F = M.field();
  Elim e(M);
  // History: identity, tracking column ops.
  std::vector<std::unordered_map<uint32_t, uint32_t>> hist(M.cols());
  for (uint32_t c = 0; c < M.cols(); ++c) hist[c][c] = 1;

  for (;;) {
    int pc = e.pick_pivot_col();
    if (pc < 0) break;
    uint32_t pr = 0;
    size_t best = SIZE_MAX;
    for (const auto& [r, v] : e.cols[pc]) {
      size_t n = e.row_cols[r].size();
      if (n < best) {
        best = n;
        pr = r;
      }
    }
    e.eliminate(static_cast<uint32_t>(pc), pr, &hist);
    e.done[pc] = true;
    auto it = e.row_cols.find(pr);
    if (it != e.row_cols.end()) {
      std::vector<uint32_t> touch(it->second.begin(), it->second.end());
      for (uint32_t c : touch) e.cols[c].erase(pr);
      e.row_cols.erase(pr);
    }
  }

  // Kernel = history columns of the non-pivot columns, all of which have
  // eliminated to zero by now.
  std::vector<std::vector<uint32_t>> raw;
  for (uint32_t c = 0; c < M.cols(); ++c) {
    if (e.done[c] || !e.cols[c].empty()) continue;
    std::vector<uint32_t> v(M.cols(), 0);
    for (const auto& [r, val] : hist[c]) v[r] = val;
    raw.push_back(std::move(v));
  }

  // Column-reduce the raw kernel vectors to get unit coordinates.
  KernelBasis kb;
  kb.ambient = M.cols();
  std::vector<bool> used_pivot(M.cols(), false);
  for (auto& v : raw) {
    // Reduce against chosen pivots.
    for (size_t j = 0; j < kb.vecs.size(); ++j) {
      uint32_t pv = v[kb.pivot[j]];
      if (pv == 0) continue;
      for (uint32_t r = 0; r < kb.ambient; ++r)
        v[r] = F.sub(v[r], F.mul(pv, kb.vecs[j][r]));
    }
    // Find a new pivot coordinate.
    int piv = -1;
    for (uint32_t r = 0; r < kb.ambient; ++r) {
      if (v[r] != 0 && !used_pivot[r]) {
        piv = static_cast<int>(r);
        break;
      }
    }
    if (piv < 0) continue;  // dependent (should not happen)
    uint32_t inv = F.inv(v[piv]);
    for (auto& x : v) x = F.mul(x, inv);
    // Back-substitute into existing vectors.
    for (size_t j = 0; j < kb.vecs.size(); ++j) {
      uint32_t c = kb.vecs[j][piv];
      if (c == 0) continue;
      for (uint32_t r = 0; r < kb.ambient; ++r)
        kb.vecs[j][r] = F.sub(kb.vecs[j][r], F.mul(c, v[r]));
    }
    used_pivot[piv] = true;
    kb.pivot.push_back(static_cast<uint32_t>(piv));
    kb.vecs.push_back(std::move(v));
  }
  return kb;
}

SparseMatFp sparse_mul(const SparseMatFp& A, const SparseMatFp& B) {
  assert(A.cols() == B.rows());
  const PrimeField& F = A.field();
  SparseMatFp C(F, A.rows(), B.cols());
  for (uint32_t j = 0; j < B.cols(); ++j) {
    std::unordered_map<uint32_t, uint64_t> acc;
    for (const auto& e : B.col(j)) {
      for (const auto& a : A.col(e.row)) {
        acc[a.row] += static_cast<uint64_t>(a.val) * e.val % F.characteristic();
      }
    }
    std::vector<SparseEntry> col;
    col.reserve(acc.size());
    for (auto& [r, v] : acc) {
      uint32_t rv = static_cast<uint32_t>(v % F.characteristic());
      if (rv) col.push_back(SparseEntry{r, rv});
    }
    std::sort(col.begin(), col.end(),
              [](const SparseEntry& x, const SparseEntry& y) {
                return x.row < y.row;
              });
    C.set_col(j, std::move(col));
  }
  return C;
}

uint32_t dense_rank(const PrimeField& F,
                    std::vector<std::vector<uint32_t>> rows) {
  if (rows.empty()) return 0;
  const uint64_t p = F.characteristic();
  size_t nr = rows.size(), nc = rows[0].size();
  uint32_t rank = 0;
  size_t row = 0;
  for (size_t col = 0; col < nc && row < nr; ++col) {
    size_t sel = row;
    while (sel < nr && rows[sel][col] % p == 0) ++sel;
    if (sel == nr) continue;
    std::swap(rows[sel], rows[row]);
    uint32_t inv = F.inv(static_cast<uint32_t>(rows[row][col] % p));
    for (size_t j = col; j < nc; ++j)
      rows[row][j] = F.mul(static_cast<uint32_t>(rows[row][j] % p), inv);
    for (size_t i = 0; i < nr; ++i) {
      if (i == row) continue;
      uint32_t f = static_cast<uint32_t>(rows[i][col] % p);
      if (!f) continue;
      for (size_t j = col; j < nc; ++j)
        rows[i][j] =
            F.sub(static_cast<uint32_t>(rows[i][j] % p),
                  F.mul(f, rows[row][j]));
    }
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace fibercone
