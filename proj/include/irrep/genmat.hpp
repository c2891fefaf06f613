// Generic matrices, the relation ideal, spanning word sets with the Pappacena
// length bound, and the candidate equations cutting out the locus of
// reducible specializations.
#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "irrep/freealg.hpp"
#include "irrep/groebner.hpp"
#include "irrep/presentation.hpp"

namespace irrep {

// "x_{i}_{j}_{l}", all 1-based
std::string genvar_name(std::uint32_t i, std::uint32_t j, std::uint32_t l);

// polynomial ring carrying one variable per generic matrix entry plus a
// leading slack variable "z" for radical-membership runs
RingPtr representation_ring(FieldSpec f, std::uint32_t n, std::uint32_t s);

using GenericMatrix = Mat<Polynomial>;

// s matrices whose (i,j) entry is the registered variable x_{i+1}_{j+1}_{l+1}
std::vector<GenericMatrix> generic_matrices(const RingPtr& ctx, std::uint32_t n, std::uint32_t s);

struct RelEntryTag {
  std::size_t rel;        // relation index in the presentation
  std::uint32_t i, j;     // matrix entry, 0-based
  bool zero;              // entry vanished and was dropped from gens
};

struct RelIdeal {
  std::vector<Polynomial> gens;        // nonzero entries, in provenance order
  std::vector<RelEntryTag> provenance; // all t*n^2 entries
};

RelIdeal rel_ideal(const Presentation& pres, const RingPtr& ctx);

// largest admissible word length L = max{m : m < p} for the spanning bound p;
// n=2 uses the sharper p=4
std::uint32_t length_bound(std::uint32_t n);

struct WordBasisSet {
  std::uint32_t n = 1;
  std::uint32_t L = 0;
  std::vector<std::string> gen_names;  // full generator list; word letters index it
  std::vector<NcWord> words;           // graded lex, first entry is the empty word
  std::vector<std::string> pruning_log;
};

// all words of length <= length_bound(n), minus Cayley-Hamilton-prunable ones
// (a letter n times consecutively) when ch_prune, filtered by presentation
// hints ("alternating A B", "omit A")
WordBasisSet word_set(const Presentation& pres, std::uint32_t n, bool ch_prune = true);

enum class Strategy { Trace, Det, Commutator };

std::string strategy_str(Strategy s);
std::optional<Strategy> strategy_from(const std::string& s);

struct Candidate {
  std::string descriptor;
  Polynomial poly;
};

// Lazy, deterministic, cheapest-first stream of defining equations for the
// reducibility locus. reduce_mod (optional) normal-forms every intermediate
// matrix entry, keeping degrees down without changing radical membership.
class CandidateStream {
 public:
  CandidateStream(Strategy st, const WordBasisSet& s, const RingPtr& ctx,
                  const GroebnerBasis* reduce_mod = nullptr, std::uint64_t det_cap = 1000000);

  // next emittable candidate; a scan may pass thousands of identically-zero
  // blocks, so max_seconds > 0 puts a soft deadline on this call (checked
  // between blocks, so one block's construction may overshoot). On timeout
  // next returns nullopt with timed_out() set and the stream stays resumable.
  std::optional<Candidate> next(double max_seconds = 0);

  bool timed_out() const { return timed_out_; }

  // the trace candidate for explicit 0-based indices, bypassing enumeration
  Candidate trace_at(std::size_t m0, const std::vector<std::size_t>& tuple);

  std::uint64_t emitted() const { return emitted_; }
  std::uint64_t skipped_zero() const { return skipped_zero_; }
  std::uint64_t skipped_dedup() const { return skipped_dedup_; }
  std::uint64_t total_enumerated() const { return emitted_ + skipped_zero_ + skipped_dedup_; }

 private:
  using Deadline = std::chrono::steady_clock::time_point;

  const Mat<Polynomial>& word_matrix(std::size_t idx);
  void mat_post(Mat<Polynomial>& m) const;
  std::optional<Candidate> next_trace(Deadline deadline);
  std::optional<Candidate> next_det(Deadline deadline);
  std::optional<Candidate> next_commutator();
  bool first_block();
  bool next_in_block();
  void advance();

  Strategy st_;
  WordBasisSet set_;
  RingPtr ctx_;
  std::uint32_t n_ = 1;
  const GroebnerBasis* reduce_mod_;
  std::uint64_t det_cap_;

  std::vector<GenericMatrix> gens_;
  std::vector<std::optional<Mat<Polynomial>>> wmats_;
  std::map<std::vector<std::uint32_t>, std::size_t> windex_;
  std::uint64_t emitted_ = 0, skipped_zero_ = 0, skipped_dedup_ = 0;
  bool timed_out_ = false;

  // trace state: enumerate by max word index, then m0, then the combination
  std::size_t slots_ = 0;
  std::size_t kmax_ = 0;
  std::size_t m0_ = 0;
  std::vector<std::size_t> combo_;
  bool trace_done_ = false;
  std::set<std::pair<std::vector<std::size_t>, int>> seen_;

  // det state
  std::size_t det_q_ = 0;
  std::vector<std::size_t> det_combo_;
  bool det_started_ = false;
  bool det_done_ = false;
  bool comm_done_ = false;
};

// convenience wrapper over CandidateStream::trace_at
Candidate trace_candidate(const WordBasisSet& s, const RingPtr& ctx, std::size_t m0,
                          std::vector<std::size_t> tuple,
                          const GroebnerBasis* reduce_mod = nullptr);

// ---- witness descriptors -----------------------------------------------------

// stable report/point-file strings: "tr[M3]", "tr[M3 * s4(M1,M2,M5,M9)]"
// (1-based word indices), "det[M1,M2,M3,M4]", "det[X*Y - Y*X]"
struct WitnessDescriptor {
  Strategy kind = Strategy::Trace;
  std::size_t m0 = 0;               // trace: 0-based word index
  std::vector<std::size_t> tuple;   // trace: 0-based, ascending
  std::vector<std::size_t> cols;    // det: 0-based word indices
  std::string str(const WordBasisSet& s) const;
};

std::optional<WitnessDescriptor> parse_witness(const std::string& text, const WordBasisSet& s);

// ---- evaluation at concrete points -------------------------------------------

template <typename Ops>
Mat<typename Ops::Elem> word_matrix_at(const NcWord& w,
                                       const std::vector<Mat<typename Ops::Elem>>& mats,
                                       const Ops& ops) {
  Mat<typename Ops::Elem> m = mat_identity<Ops>(mats.front().n, ops);
  for (std::uint32_t letter : w.g) m = mat_mul<Ops>(m, mats[letter], ops);
  return m;
}

// subset-expansion determinant (columns left to right, one row per column)
template <typename Ops>
typename Ops::Elem mat_det(const Mat<typename Ops::Elem>& m, const Ops& ops) {
  const std::size_t k = m.n;
  if (k > 12) throw std::invalid_argument("determinant expansion capped at 12x12");
  std::vector<typename Ops::Elem> d(std::size_t(1) << k, ops.zero());
  d[0] = ops.one();
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    std::size_t col = (std::size_t)__builtin_popcount(mask) - 1;
    auto acc = ops.zero();
    // expanding along the last column: row position t (1-based) within the
    // mask carries sign (-1)^(t + |mask|)
    bool oddrow = (col & 1) != 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (!(mask & (1u << i))) continue;
      const auto& entry = m.at(i, col);
      if (!ops.is_zero(entry)) {
        auto term = ops.mul(entry, d[mask ^ (1u << i)]);
        acc = oddrow ? ops.sub(acc, term) : ops.add(acc, term);
      }
      oddrow = !oddrow;
    }
    d[mask] = std::move(acc);
  }
  return d[(std::size_t(1) << k) - 1];
}

// witness value at a concrete point (matrices over a field or tower)
template <typename Ops>
typename Ops::Elem evaluate_witness(const WitnessDescriptor& w, const WordBasisSet& s,
                                    const std::vector<Mat<typename Ops::Elem>>& mats,
                                    const Ops& ops) {
  if (w.kind == Strategy::Trace) {
    Mat<typename Ops::Elem> head = word_matrix_at<Ops>(s.words.at(w.m0), mats, ops);
    if (w.tuple.empty()) return mat_trace<Ops>(head, ops);
    std::vector<Mat<typename Ops::Elem>> args;
    args.reserve(w.tuple.size());
    for (std::size_t idx : w.tuple) args.push_back(word_matrix_at<Ops>(s.words.at(idx), mats, ops));
    Mat<typename Ops::Elem> sm = evaluate_standard<Ops>(args, ops);
    return mat_trace<Ops>(mat_mul<Ops>(head, sm, ops), ops);
  }
  if (w.kind == Strategy::Commutator) {
    Mat<typename Ops::Elem> c = mat_sub<Ops>(mat_mul<Ops>(mats.at(0), mats.at(1), ops),
                                             mat_mul<Ops>(mats.at(1), mats.at(0), ops), ops);
    return mat_det<Ops>(c, ops);
  }
  const std::size_t nn = mats.front().n * mats.front().n;
  if (w.cols.size() != nn) throw std::invalid_argument("determinant witness needs n^2 columns");
  Mat<typename Ops::Elem> m(nn, ops.zero());
  for (std::size_t c = 0; c < nn; ++c) {
    Mat<typename Ops::Elem> wm = word_matrix_at<Ops>(s.words.at(w.cols[c]), mats, ops);
    for (std::size_t r = 0; r < nn; ++r) m.at(r, c) = wm.a[r];
  }
  return mat_det<Ops>(m, ops);
}

// ---- spanning rank -----------------------------------------------------------

namespace detail {

// reduced-echelon accumulator: every row is monic at its pivot and zero at
// every other row's pivot, so a single reduction pass suffices
template <typename Ops>
struct Echelon {
  const Ops& ops;
  std::vector<std::vector<typename Ops::Elem>> rows;
  std::vector<std::size_t> pivots;

  explicit Echelon(const Ops& o) : ops(o) {}

  bool insert(std::vector<typename Ops::Elem> v) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      auto f = v[pivots[r]];
      if (ops.is_zero(f)) continue;
      for (std::size_t j = 0; j < v.size(); ++j)
        v[j] = ops.sub(v[j], ops.mul(f, rows[r][j]));
    }
    std::size_t p = v.size();
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!ops.is_zero(v[j])) {
        p = j;
        break;
      }
    if (p == v.size()) return false;
    auto inv = ops.inv(v[p]);
    for (auto& x : v) x = ops.mul(x, inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      auto f = rows[r][p];
      if (ops.is_zero(f)) continue;
      for (std::size_t j = 0; j < v.size(); ++j)
        rows[r][j] = ops.sub(rows[r][j], ops.mul(f, v[j]));
    }
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  }
};

}  // namespace detail

// rank of the span of all products of length <= L (empty product included);
// over a tower, zero-divisor pivots raise SplitRequest for the caller
template <typename Ops>
std::uint32_t span_rank(const std::vector<Mat<typename Ops::Elem>>& mats, std::uint32_t L,
                        const Ops& ops, bool ch_prune = true) {
  if (mats.empty()) throw std::invalid_argument("span_rank needs at least one matrix");
  const std::size_t n = mats.front().n;
  for (const auto& m : mats)
    if (m.n != n) throw std::invalid_argument("matrix dimension mismatch");
  const std::size_t nn = n * n;
  detail::Echelon<Ops> ech(ops);
  std::uint32_t rank = 0;
  auto push = [&](const Mat<typename Ops::Elem>& m) {
    if (ech.insert(m.a)) ++rank;
    return rank == nn;
  };
  Mat<typename Ops::Elem> id = mat_identity<Ops>(n, ops);
  if (push(id)) return rank;
  // depth-first over words, reusing prefix products
  auto rec = [&](auto&& self, const Mat<typename Ops::Elem>& prefix, std::size_t len,
                 std::size_t last, std::size_t run) -> bool {
    if (len >= L) return false;
    for (std::size_t l = 0; l < mats.size(); ++l) {
      std::size_t r = (l == last) ? run + 1 : 1;
      if (ch_prune && r >= n) continue;  // the word would contain l n times in a row
      Mat<typename Ops::Elem> next = mat_mul<Ops>(prefix, mats[l], ops);
      if (push(next)) return true;
      if (self(self, next, len + 1, l, r)) return true;
    }
    return false;
  };
  rec(rec, id, 0, mats.size(), 0);
  return rank;
}

}  // namespace irrep
