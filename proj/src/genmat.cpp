#include "irrep/genmat.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace irrep {

std::string genvar_name(std::uint32_t i, std::uint32_t j, std::uint32_t l) {
  return "x_" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(l);
}

RingPtr representation_ring(FieldSpec f, std::uint32_t n, std::uint32_t s) {
  std::vector<std::string> names;
  names.reserve((std::size_t)n * n * s + 1);
  names.push_back("z");  // slack for radical membership, most significant
  for (std::uint32_t l = 1; l <= s; ++l)
    for (std::uint32_t i = 1; i <= n; ++i)
      for (std::uint32_t j = 1; j <= n; ++j) names.push_back(genvar_name(i, j, l));
  return register_ring(f, names, MonomialOrder::grevlex());
}

std::vector<GenericMatrix> generic_matrices(const RingPtr& ctx, std::uint32_t n, std::uint32_t s) {
  std::vector<GenericMatrix> out;
  out.reserve(s);
  for (std::uint32_t l = 1; l <= s; ++l) {
    GenericMatrix m(n, Polynomial::zero(ctx));
    for (std::uint32_t i = 1; i <= n; ++i)
      for (std::uint32_t j = 1; j <= n; ++j) {
        auto v = ctx->find(genvar_name(i, j, l));
        if (!v) throw std::invalid_argument("ring lacks variable " + genvar_name(i, j, l));
        m.at(i - 1, j - 1) = Polynomial::variable(ctx, *v);
      }
    out.push_back(std::move(m));
  }
  return out;
}

RelIdeal rel_ideal(const Presentation& pres, const RingPtr& ctx) {
  const std::uint32_t n = pres.n;
  const std::uint32_t s = (std::uint32_t)pres.gens.size();
  std::vector<GenericMatrix> gm = generic_matrices(ctx, n, s);
  PolyOps ops{ctx};
  RelIdeal out;
  for (std::size_t r = 0; r < pres.relations.size(); ++r) {
    Mat<Polynomial> val = evaluate_nc(pres.relations[r], gm, ops);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j) {
        const Polynomial& e = val.at(i, j);
        bool zero = e.is_zero();
        out.provenance.push_back({r, i, j, zero});
        if (!zero) out.gens.push_back(e);
      }
  }
  return out;
}

std::uint32_t length_bound(std::uint32_t n) {
  if (n <= 1) return 0;
  if (n == 2) return 3;  // the sharper spanning bound p = 4 for 2x2
  // largest m with m < p, where p = n*sqrt(2n^2/(n-1) + 1/4) + n/2 - 2;
  // m < p  <=>  2m+4-n <= 0  or  (2m+4-n)^2 (n-1) < n^2 (8n^2 + n - 1)
  mpz_class N(n);
  mpz_class rhs = N * N * (8 * N * N + N - 1);
  std::uint32_t m = 0;
  while (true) {
    mpz_class a = 2 * mpz_class(m + 1) + 4 - N;
    bool less = a <= 0 || a * a * (N - 1) < rhs;
    if (!less) return m;
    ++m;
  }
}

WordBasisSet word_set(const Presentation& pres, std::uint32_t n, bool ch_prune) {
  WordBasisSet out;
  out.n = n;
  out.L = length_bound(n);
  out.gen_names = pres.gens;

  auto gen_index = [&](const std::string& name) -> std::uint32_t {
    auto it = std::find(pres.gens.begin(), pres.gens.end(), name);
    if (it == pres.gens.end())
      throw std::invalid_argument("hint references unknown generator '" + name + "'");
    return (std::uint32_t)(it - pres.gens.begin());
  };

  std::vector<bool> omit(pres.gens.size(), false);
  bool alternating = false;
  std::uint32_t alt_a = 0, alt_b = 0;
  for (const std::string& h : pres.hints) {
    std::istringstream in(h);
    std::string kind;
    in >> kind;
    if (kind == "omit") {
      std::string g;
      if (!(in >> g)) throw std::invalid_argument("hint 'omit' needs a generator");
      omit[gen_index(g)] = true;
      out.pruning_log.push_back("omit " + g);
    } else if (kind == "alternating") {
      std::string a, b;
      if (!(in >> a >> b)) throw std::invalid_argument("hint 'alternating' needs two generators");
      if (alternating) throw std::invalid_argument("at most one 'alternating' hint supported");
      alternating = true;
      alt_a = gen_index(a);
      alt_b = gen_index(b);
      if (alt_a == alt_b) throw std::invalid_argument("'alternating' needs distinct generators");
      out.pruning_log.push_back("alternating " + a + " " + b);
    } else {
      throw std::invalid_argument("unknown hint '" + kind + "'");
    }
    std::string extra;
    if (in >> extra) throw std::invalid_argument("trailing tokens in hint '" + h + "'");
  }

  std::vector<std::uint32_t> alphabet;
  for (std::uint32_t l = 0; l < pres.gens.size(); ++l) {
    if (omit[l]) continue;
    if (alternating && l != alt_a && l != alt_b) continue;
    alphabet.push_back(l);
  }

  std::uint64_t ch_dropped = 0;
  out.words.push_back(NcWord::one());
  std::vector<NcWord> level{NcWord::one()};
  for (std::uint32_t len = 1; len <= out.L; ++len) {
    std::vector<NcWord> next;
    for (const NcWord& w : level) {
      for (std::uint32_t l : alphabet) {
        if (alternating && !w.g.empty() && w.g.back() == l) continue;
        if (ch_prune) {
          // would the new word end with letter l repeated n times?
          std::uint32_t run = 1;
          for (std::size_t i = w.g.size(); i > 0 && w.g[i - 1] == l; --i) ++run;
          if (run >= n) {
            ++ch_dropped;
            continue;
          }
        }
        next.push_back(w.concat(NcWord::letter(l)));
      }
    }
    out.words.insert(out.words.end(), next.begin(), next.end());
    level = std::move(next);
  }
  if (ch_prune) out.pruning_log.push_back("cayley-hamilton runs >= " + std::to_string(n) +
                                          " pruned (" + std::to_string(ch_dropped) + " tails)");
  return out;
}

std::string strategy_str(Strategy s) {
  switch (s) {
    case Strategy::Trace: return "trace";
    case Strategy::Det: return "det";
    case Strategy::Commutator: return "commutator";
  }
  return "?";
}

std::optional<Strategy> strategy_from(const std::string& s) {
  if (s == "trace") return Strategy::Trace;
  if (s == "det") return Strategy::Det;
  if (s == "commutator") return Strategy::Commutator;
  return std::nullopt;
}

// ---- candidate stream --------------------------------------------------------

CandidateStream::CandidateStream(Strategy st, const WordBasisSet& s, const RingPtr& ctx,
                                 const GroebnerBasis* reduce_mod, std::uint64_t det_cap)
    : st_(st),
      set_(s),
      ctx_(ctx),
      n_(s.n),
      reduce_mod_(reduce_mod),
      det_cap_(det_cap),
      wmats_(s.words.size()) {
  const std::uint32_t ngens = (std::uint32_t)set_.gen_names.size();
  gens_ = generic_matrices(ctx_, n_, ngens);
  for (std::size_t i = 0; i < set_.words.size(); ++i)
    windex_[std::vector<std::uint32_t>(set_.words[i].g.begin(), set_.words[i].g.end())] = i;
  slots_ = 2 * (std::size_t)(n_ - 1);
  if (st_ == Strategy::Trace) {
    if (set_.words.size() < slots_)
      throw std::invalid_argument("word set smaller than the standard polynomial arity");
    kmax_ = 0;
    m0_ = 0;
    if (!first_block()) advance();
  } else if (st_ == Strategy::Commutator) {
    if (n_ != 2 || ngens != 2)
      throw std::invalid_argument("commutator strategy needs n = 2 and two generators");
  } else {
    const std::size_t nn = (std::size_t)n_ * n_;
    if (nn > 12) throw std::invalid_argument("det strategy capped at n^2 <= 12");
    // largest q <= N with C(q, nn) within the cap
    std::size_t q = nn;
    while (q < set_.words.size()) {
      mpz_class c;
      mpz_bin_uiui(c.get_mpz_t(), (unsigned long)(q + 1), (unsigned long)nn);
      if (c > det_cap_) break;
      ++q;
    }
    det_q_ = q;
    if (set_.words.size() < nn) det_done_ = true;
  }
}

void CandidateStream::mat_post(Mat<Polynomial>& m) const {
  if (!reduce_mod_) return;
  for (auto& e : m.a) e = normal_form(e, reduce_mod_->polys, reduce_mod_->order);
}

const Mat<Polynomial>& CandidateStream::word_matrix(std::size_t idx) {
  if (wmats_[idx]) return *wmats_[idx];
  PolyOps ops{ctx_};
  const NcWord& w = set_.words[idx];
  Mat<Polynomial> m(0, Polynomial::zero(ctx_));
  if (w.g.empty()) {
    m = mat_identity(n_, ops);
  } else {
    std::vector<std::uint32_t> prefix(w.g.begin(), w.g.end() - 1);
    auto it = windex_.find(prefix);
    if (it == windex_.end()) throw std::logic_error("word set is not prefix-closed");
    m = mat_mul(word_matrix(it->second), gens_[w.g.back()], ops);
    mat_post(m);
  }
  wmats_[idx] = std::move(m);
  return *wmats_[idx];
}

bool CandidateStream::first_block() {
  if (kmax_ >= set_.words.size()) return false;
  if (slots_ == 0) {
    combo_.clear();
    return m0_ == kmax_;
  }
  combo_.clear();
  if (m0_ == kmax_) {
    // the word index kmax_ is already covered by m0, so the tuple ranges over
    // every slots_-subset of {0..kmax_}, repeats with m0 included
    if (kmax_ + 1 < slots_) return false;
    for (std::size_t i = 0; i < slots_; ++i) combo_.push_back(i);
  } else {
    if (kmax_ + 1 < slots_) return false;  // need slots_-1 indices below kmax_, plus kmax_
    for (std::size_t i = 0; i + 1 < slots_; ++i) combo_.push_back(i);
    combo_.push_back(kmax_);
  }
  return true;
}

namespace {

// next size-|v| ascending combination from {0..ground-1}; false when exhausted
bool next_combination(std::vector<std::size_t>& v, std::size_t ground) {
  if (v.empty()) return false;
  std::size_t t = v.size();
  std::size_t i = t;
  while (i > 0) {
    --i;
    if (v[i] != ground - t + i) {
      ++v[i];
      for (std::size_t j = i + 1; j < t; ++j) v[j] = v[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

bool CandidateStream::next_in_block() {
  if (slots_ == 0) return false;
  if (m0_ == kmax_) return next_combination(combo_, kmax_ + 1);
  std::vector<std::size_t> prefix(combo_.begin(), combo_.end() - 1);
  if (!next_combination(prefix, kmax_)) return false;
  combo_ = std::move(prefix);
  combo_.push_back(kmax_);
  return true;
}

void CandidateStream::advance() {
  if (next_in_block()) return;
  while (true) {
    ++m0_;
    if (m0_ > kmax_) {
      ++kmax_;
      m0_ = 0;
      if (kmax_ >= set_.words.size()) {
        trace_done_ = true;
        return;
      }
    }
    if (first_block()) return;
  }
}

Candidate CandidateStream::trace_at(std::size_t m0, const std::vector<std::size_t>& tuple) {
  PolyOps ops{ctx_};
  auto post = [this](Mat<Polynomial>& m) { mat_post(m); };
  Mat<Polynomial> prod(0, Polynomial::zero(ctx_));
  if (tuple.empty()) {
    prod = word_matrix(m0);
  } else {
    std::vector<Mat<Polynomial>> args;
    args.reserve(tuple.size());
    for (std::size_t t : tuple) args.push_back(word_matrix(t));
    Mat<Polynomial> sm = evaluate_standard(args, ops, post);
    prod = mat_mul(word_matrix(m0), sm, ops);
    mat_post(prod);
  }
  Candidate c;
  c.poly = mat_trace(prod, ops);
  WitnessDescriptor d;
  d.kind = Strategy::Trace;
  d.m0 = m0;
  d.tuple = tuple;
  c.descriptor = d.str(set_);
  // the trace of a product of words never exceeds the summed word lengths
  std::uint32_t bound = (std::uint32_t)set_.words[m0].length();
  for (std::size_t t : tuple) bound += (std::uint32_t)set_.words[t].length();
  if (!c.poly.is_zero() && c.poly.degree() > bound)
    throw std::logic_error("candidate degree exceeds its word-length bound");
  return c;
}

std::optional<Candidate> CandidateStream::next_trace(Deadline deadline) {
  while (!trace_done_) {
    // check before consuming the block so a timed-out call can resume here
    if (std::chrono::steady_clock::now() > deadline) {
      timed_out_ = true;
      return std::nullopt;
    }
    std::size_t m0 = m0_;
    std::vector<std::size_t> tuple = combo_;
    advance();

    if (slots_ > 0) {
      // structural zeros: a repeated word or the identity word anywhere makes
      // the alternating-sum trace vanish identically
      bool repeat = std::binary_search(tuple.begin(), tuple.end(), m0);
      bool has_identity = m0 == 0 || tuple.front() == 0;
      if (repeat || has_identity) {
        ++skipped_zero_;
        continue;
      }
      // the candidate depends only on the index multiset and the parity of
      // the front word's position in it; keep the first of each class
      std::vector<std::size_t> u = tuple;
      u.insert(std::lower_bound(u.begin(), u.end(), m0), m0);
      int parity =
          (int)(std::distance(u.begin(), std::lower_bound(u.begin(), u.end(), m0)) & 1);
      if (!seen_.insert({std::move(u), parity}).second) {
        ++skipped_dedup_;
        continue;
      }
    }

    Candidate c = trace_at(m0, tuple);
    if (c.poly.is_zero()) {
      ++skipped_zero_;
      continue;
    }
    ++emitted_;
    return c;
  }
  return std::nullopt;
}

std::optional<Candidate> CandidateStream::next_det(Deadline deadline) {
  const std::size_t nn = (std::size_t)n_ * n_;
  while (!det_done_) {
    if (std::chrono::steady_clock::now() > deadline) {
      timed_out_ = true;
      return std::nullopt;
    }
    if (!det_started_) {
      det_started_ = true;
      det_combo_.clear();
      for (std::size_t i = 0; i < nn; ++i) det_combo_.push_back(i);
    } else if (!next_combination(det_combo_, det_q_)) {
      det_done_ = true;
      break;
    }
    PolyOps ops{ctx_};
    Mat<Polynomial> m(nn, Polynomial::zero(ctx_));
    for (std::size_t c = 0; c < nn; ++c) {
      const Mat<Polynomial>& wm = word_matrix(det_combo_[c]);
      for (std::size_t r = 0; r < nn; ++r) m.at(r, c) = wm.a[r];
    }
    Polynomial det = mat_det(m, ops);
    if (reduce_mod_) det = normal_form(det, reduce_mod_->polys, reduce_mod_->order);
    if (det.is_zero()) {
      ++skipped_zero_;
      continue;
    }
    WitnessDescriptor d;
    d.kind = Strategy::Det;
    d.cols = det_combo_;
    ++emitted_;
    return Candidate{d.str(set_), std::move(det)};
  }
  return std::nullopt;
}

std::optional<Candidate> CandidateStream::next_commutator() {
  if (comm_done_) return std::nullopt;
  comm_done_ = true;
  PolyOps ops{ctx_};
  Mat<Polynomial> c = mat_sub(mat_mul(gens_[0], gens_[1], ops), mat_mul(gens_[1], gens_[0], ops), ops);
  Polynomial det = mat_det(c, ops);
  if (det.is_zero()) {
    ++skipped_zero_;
    return std::nullopt;
  }
  WitnessDescriptor d;
  d.kind = Strategy::Commutator;
  ++emitted_;
  return Candidate{d.str(set_), std::move(det)};
}

std::optional<Candidate> CandidateStream::next(double max_seconds) {
  timed_out_ = false;
  Deadline deadline = max_seconds > 0
                          ? std::chrono::steady_clock::now() +
                                std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                    std::chrono::duration<double>(max_seconds))
                          : Deadline::max();
  switch (st_) {
    case Strategy::Trace: return next_trace(deadline);
    case Strategy::Det: return next_det(deadline);
    case Strategy::Commutator: return next_commutator();
  }
  return std::nullopt;
}

Candidate trace_candidate(const WordBasisSet& s, const RingPtr& ctx, std::size_t m0,
                          std::vector<std::size_t> tuple, const GroebnerBasis* reduce_mod) {
  CandidateStream stream(Strategy::Trace, s, ctx, reduce_mod);
  return stream.trace_at(m0, tuple);
}

// ---- witness descriptors -----------------------------------------------------

std::string WitnessDescriptor::str(const WordBasisSet& s) const {
  if (kind == Strategy::Trace) {
    std::string out = "tr[M" + std::to_string(m0 + 1);
    if (!tuple.empty()) {
      out += " * s" + std::to_string(tuple.size()) + "(";
      for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) out += ",";
        out += "M" + std::to_string(tuple[i] + 1);
      }
      out += ")";
    }
    return out + "]";
  }
  if (kind == Strategy::Commutator) {
    const std::string& a = s.gen_names.at(0);
    const std::string& b = s.gen_names.at(1);
    return "det[" + a + "*" + b + " - " + b + "*" + a + "]";
  }
  std::string out = "det[";
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (i) out += ",";
    out += "M" + std::to_string(cols[i] + 1);
  }
  return out + "]";
}

namespace {

// parse "M<k>" returning the 0-based index
bool parse_windex(const std::string& tok, std::size_t nwords, std::size_t* out) {
  if (tok.size() < 2 || tok[0] != 'M') return false;
  std::size_t k = 0;
  for (std::size_t i = 1; i < tok.size(); ++i) {
    if (!std::isdigit((unsigned char)tok[i])) return false;
    k = k * 10 + (std::size_t)(tok[i] - '0');
  }
  if (k == 0 || k > nwords) return false;
  *out = k - 1;
  return true;
}

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (c != ' ') out += c;
  return out;
}

}  // namespace

std::optional<WitnessDescriptor> parse_witness(const std::string& text, const WordBasisSet& s) {
  std::string t = text;
  while (!t.empty() && (t.back() == ' ' || t.back() == '\r')) t.pop_back();
  std::size_t start = t.find_first_not_of(' ');
  if (start == std::string::npos) return std::nullopt;
  t = t.substr(start);
  if (t.size() < 4 || t.back() != ']') return std::nullopt;

  if (t.rfind("tr[", 0) == 0) {
    std::string body = strip_spaces(t.substr(3, t.size() - 4));
    WitnessDescriptor d;
    d.kind = Strategy::Trace;
    std::size_t star = body.find('*');
    std::string head = star == std::string::npos ? body : body.substr(0, star);
    if (!parse_windex(head, s.words.size(), &d.m0)) return std::nullopt;
    if (star != std::string::npos) {
      std::string rest = body.substr(star + 1);
      if (rest.size() < 4 || rest[0] != 's' || rest.back() != ')') return std::nullopt;
      std::size_t open = rest.find('(');
      if (open == std::string::npos) return std::nullopt;
      std::string arity_str = rest.substr(1, open - 1);
      std::string args = rest.substr(open + 1, rest.size() - open - 2);
      std::istringstream in(args);
      std::string tok;
      while (std::getline(in, tok, ',')) {
        std::size_t idx;
        if (!parse_windex(tok, s.words.size(), &idx)) return std::nullopt;
        d.tuple.push_back(idx);
      }
      if (arity_str != std::to_string(d.tuple.size())) return std::nullopt;
      if (!std::is_sorted(d.tuple.begin(), d.tuple.end())) return std::nullopt;
      if (std::adjacent_find(d.tuple.begin(), d.tuple.end()) != d.tuple.end())
        return std::nullopt;
    }
    return d;
  }

  if (t.rfind("det[", 0) == 0) {
    std::string body = t.substr(4, t.size() - 5);
    if (body.find('*') != std::string::npos) {
      if (s.gen_names.size() < 2) return std::nullopt;
      WitnessDescriptor d;
      d.kind = Strategy::Commutator;
      std::string expect = s.gen_names[0] + "*" + s.gen_names[1] + " - " + s.gen_names[1] + "*" +
                           s.gen_names[0];
      if (body != expect) return std::nullopt;
      return d;
    }
    WitnessDescriptor d;
    d.kind = Strategy::Det;
    std::istringstream in(strip_spaces(body));
    std::string tok;
    while (std::getline(in, tok, ',')) {
      std::size_t idx;
      if (!parse_windex(tok, s.words.size(), &idx)) return std::nullopt;
      d.cols.push_back(idx);
    }
    if (d.cols.empty()) return std::nullopt;
    return d;
  }
  return std::nullopt;
}

}  // namespace irrep
