// Commuting variable registry, sparse monomials, and monomial orders.
#pragma once

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "irrep/scalar.hpp"

namespace irrep {

using VarIndex = std::uint32_t;

struct Monomial {
  using Entry = std::pair<VarIndex, std::uint32_t>;
  // sorted by variable index, exponents > 0; empty means the monomial 1
  boost::container::small_vector<Entry, 4> e;
  std::uint32_t deg = 0;

  static Monomial one() { return {}; }
  static Monomial var(VarIndex v, std::uint32_t k = 1);

  bool is_one() const { return e.empty(); }
  std::uint32_t exponent(VarIndex v) const;
  bool contains(VarIndex v) const { return exponent(v) > 0; }

  Monomial mul(const Monomial& o) const;
  bool divisible_by(const Monomial& o) const;
  Monomial div(const Monomial& o) const;  // pre: divisible_by(o)
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const { return deg == o.deg && e == o.e; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (const auto& [v, k] : m.e) {
      h = (h ^ v) * 1099511628211ull;
      h = (h ^ k) * 1099511628211ull;
    }
    return h;
  }
};

enum class OrderKind : std::uint8_t { Lex, Grevlex, Block };

// Lex: leftmost (lowest-index) differing exponent, larger exponent wins.
// Grevlex: total degree first; ties broken at the last (highest-index)
// differing exponent, smaller exponent wins.
// Block: monomials are compared on the eliminated variables first (so any
// monomial containing an eliminated variable beats every kept-only monomial),
// then on the kept variables.
struct MonomialOrder {
  OrderKind kind = OrderKind::Grevlex;
  std::vector<VarIndex> eliminated;  // Block only; kept sorted
  OrderKind elim_inner = OrderKind::Grevlex;
  OrderKind keep_inner = OrderKind::Grevlex;

  static MonomialOrder lex() { return {OrderKind::Lex, {}, OrderKind::Lex, OrderKind::Lex}; }
  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder block(std::vector<VarIndex> elim,
                             OrderKind inner_elim = OrderKind::Grevlex,
                             OrderKind inner_keep = OrderKind::Grevlex);

  bool operator==(const MonomialOrder&) const = default;
};

enum class Cmp { Less, Equal, Greater };

Cmp compare_monomials(const Monomial& a, const Monomial& b, const MonomialOrder& o);

inline bool monomial_less(const Monomial& a, const Monomial& b, const MonomialOrder& o) {
  return compare_monomials(a, b, o) == Cmp::Less;
}

class RingContext;
using RingPtr = std::shared_ptr<const RingContext>;

// Immutable registry of named commuting variables over a fixed field.
class RingContext {
 public:
  FieldSpec field;
  std::vector<std::string> names;
  MonomialOrder order;  // default order for polynomials in this ring

  std::size_t nvars() const { return names.size(); }
  VarIndex index(const std::string& name) const;
  std::optional<VarIndex> find(const std::string& name) const;
  const std::string& name(VarIndex v) const { return names.at(v); }

  static RingPtr make(FieldSpec f, std::vector<std::string> names, MonomialOrder ord);

 private:
  std::unordered_map<std::string, VarIndex> idx_;
};

// Validates names and the field (GF modulus must be prime).
RingPtr register_ring(const FieldSpec& f, const std::vector<std::string>& names,
                      const MonomialOrder& order);

}  // namespace irrep
