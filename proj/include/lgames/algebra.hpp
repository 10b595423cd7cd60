// Copyright 2026 The lgames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Standard algebras of truth degrees over rationals in [0,1].
//
// Every algebra in the catalog interprets the lattice connectives as min and
// max. The implication (and the negation derived from it) follows one of two
// families: Lukasiewicz (x -> y = min(1, 1 - x + y), ~x = 1 - x) or Goedel
// (x -> y = 1 if x <= y else y, ~x = x -> 0). The two-element Boolean algebra
// is the common restriction of both.

#ifndef LGAMES_ALGEBRA_HPP_
#define LGAMES_ALGEBRA_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lgames/error.hpp"
#include "lgames/rational.hpp"

namespace lgames {

enum class Connective : std::uint8_t {
  kAnd,        // /\  lattice meet
  kOr,         // \/  lattice join
  kImp,        // ->  residuated implication
  kNeg,        // ~
  kStrongAnd,  // &   Lukasiewicz t-norm
  kOplus,      // +   truncated sum
  kOminus,     // -   truncated difference
  kOdot,       // *   product
  kImpPi,      // =>  product implication
  kDelta,      // D   Baaz delta
};

inline constexpr std::array<Connective, 10> kAllConnectives = {
    Connective::kAnd,    Connective::kOr,     Connective::kImp,   Connective::kNeg,
    Connective::kStrongAnd, Connective::kOplus, Connective::kOminus, Connective::kOdot,
    Connective::kImpPi,  Connective::kDelta};

inline int arity(Connective c) {
  return (c == Connective::kNeg || c == Connective::kDelta) ? 1 : 2;
}

inline std::string_view connective_name(Connective c) {
  switch (c) {
    case Connective::kAnd: return "and";
    case Connective::kOr: return "or";
    case Connective::kImp: return "imp";
    case Connective::kNeg: return "neg";
    case Connective::kStrongAnd: return "sconj";
    case Connective::kOplus: return "oplus";
    case Connective::kOminus: return "ominus";
    case Connective::kOdot: return "odot";
    case Connective::kImpPi: return "imp_pi";
    case Connective::kDelta: return "delta";
  }
  return "?";
}

inline std::string_view connective_token(Connective c) {
  switch (c) {
    case Connective::kAnd: return "/\\";
    case Connective::kOr: return "\\/";
    case Connective::kImp: return "->";
    case Connective::kNeg: return "~";
    case Connective::kStrongAnd: return "&";
    case Connective::kOplus: return "+";
    case Connective::kOminus: return "-";
    case Connective::kOdot: return "*";
    case Connective::kImpPi: return "=>";
    case Connective::kDelta: return "D";
  }
  return "?";
}

inline std::optional<Connective> connective_from_name(std::string_view name) {
  for (Connective c : kAllConnectives) {
    if (connective_name(c) == name) return c;
  }
  return std::nullopt;
}

enum class AlgebraId : std::uint8_t {
  kBool2,
  kG,
  kGC,
  kGCDelta,
  kL,
  kLC,
  kStdL,
  kStdLDelta,
  kStdQL,
  kStdQLDelta,
  kStdG,
  kStdQG,
  kStdQGDelta,
  kStdPL,
  kStdPLDelta,
  kStdQPLDelta,
  kStdLPi,
  kStdLPiHalf,
};

namespace detail {

struct CatalogEntry {
  AlgebraId id;
  std::string_view name;  // catalog identifier, "_n" marks the chain parameter
  bool parametric;
};

inline constexpr std::array<CatalogEntry, 18> kCatalog = {{
    {AlgebraId::kBool2, "BOOL2", false},
    {AlgebraId::kG, "G_n", true},
    {AlgebraId::kGC, "G_n_C", true},
    {AlgebraId::kGCDelta, "G_n_C_DELTA", true},
    {AlgebraId::kL, "L_n", true},
    {AlgebraId::kLC, "L_n_C", true},
    {AlgebraId::kStdL, "STD_L", false},
    {AlgebraId::kStdLDelta, "STD_L_DELTA", false},
    {AlgebraId::kStdQL, "STD_QL", false},
    {AlgebraId::kStdQLDelta, "STD_QL_DELTA", false},
    {AlgebraId::kStdG, "STD_G", false},
    {AlgebraId::kStdQG, "STD_QG", false},
    {AlgebraId::kStdQGDelta, "STD_QG_DELTA", false},
    {AlgebraId::kStdPL, "STD_PL", false},
    {AlgebraId::kStdPLDelta, "STD_PL_DELTA", false},
    {AlgebraId::kStdQPLDelta, "STD_QPL_DELTA", false},
    {AlgebraId::kStdLPi, "STD_LPI", false},
    {AlgebraId::kStdLPiHalf, "STD_LPIH", false},
}};

inline const CatalogEntry& entry(AlgebraId id) {
  for (const auto& e : kCatalog) {
    if (e.id == id) return e;
  }
  throw InputError("unknown algebra id");
}

}  // namespace detail

class Algebra {
 public:
  enum class Family : std::uint8_t { kBoolean, kGodel, kLukasiewicz };
  enum class Constants : std::uint8_t { kBounds, kChain, kAllRationals };

  AlgebraId id() const { return id_; }
  // Chain parameter n of the finite algebras (1 for BOOL2), nullopt otherwise.
  std::optional<int> chain() const { return n_ > 0 ? std::optional<int>(n_) : std::nullopt; }
  Family family() const { return family_; }
  Constants constants() const { return constants_; }

  // Catalog identifier template, e.g. "L_n_C".
  std::string_view catalog_id() const { return detail::entry(id_).name; }

  // Concrete name with the parameter substituted, e.g. "L_4_C".
  std::string name() const {
    std::string s(catalog_id());
    if (detail::entry(id_).parametric) {
      s.replace(s.find("_n"), 2, "_" + std::to_string(n_));
    }
    return s;
  }

  bool is_finite() const { return n_ > 0; }
  bool is_mv() const { return family_ == Family::kLukasiewicz; }
  bool has_delta() const { return has_connective(Connective::kDelta); }
  bool expands_pl() const { return has_connective(Connective::kOdot) && is_mv(); }

  const std::vector<Connective>& signature() const { return signature_; }
  bool has_connective(Connective c) const {
    return std::find(signature_.begin(), signature_.end(), c) != signature_.end();
  }

  bool contains(const Rational& x) const {
    if (x < Rational(0) || x > Rational(1)) return false;
    if (!is_finite()) return true;
    return (x * Rational(n_)).is_integer();
  }

  // Whether the language has a truth constant (nullary connective) for x.
  bool has_constant(const Rational& x) const {
    if (!contains(x)) return false;
    switch (constants_) {
      case Constants::kBounds: return x.sign() == 0 || x == Rational(1);
      case Constants::kChain:
      case Constants::kAllRationals: return true;
    }
    return false;
  }

  // Domain elements in increasing order; only for finite algebras.
  std::vector<TruthValue> elements() const {
    if (!is_finite()) throw SemanticError("algebra " + name() + " has an infinite domain");
    std::vector<TruthValue> out;
    out.reserve(static_cast<std::size_t>(n_) + 1);
    for (long k = 0; k <= n_; ++k) out.emplace_back(Rational(k, n_));
    return out;
  }

  // Interpretation without signature or domain checks. Unary connectives
  // ignore `y`.
  Rational apply_unchecked(Connective c, const Rational& x, const Rational& y) const {
    static const Rational kZero(0);
    static const Rational kOne(1);
    switch (c) {
      case Connective::kAnd: return min(x, y);
      case Connective::kOr: return max(x, y);
      case Connective::kImp:
        if (family_ == Family::kGodel) return x <= y ? kOne : y;
        return min(kOne, kOne - x + y);
      case Connective::kNeg:
        if (family_ == Family::kGodel) return x.sign() == 0 ? kOne : kZero;
        return kOne - x;
      case Connective::kStrongAnd: return max(kZero, x + y - kOne);
      case Connective::kOplus: return min(kOne, x + y);
      case Connective::kOminus: return max(kZero, x - y);
      case Connective::kOdot: return x * y;
      case Connective::kImpPi: return x <= y ? kOne : y / x;
      case Connective::kDelta: return x == kOne ? kOne : kZero;
    }
    return kZero;
  }

  TruthValue apply(Connective c, std::span<const TruthValue> args) const {
    if (!has_connective(c)) {
      throw DomainError("connective '" + std::string(connective_name(c)) +
                        "' is not in the signature of " + name());
    }
    if (static_cast<int>(args.size()) != arity(c)) {
      throw InputError("connective '" + std::string(connective_name(c)) + "' expects " +
                       std::to_string(arity(c)) + " argument(s), got " +
                       std::to_string(args.size()));
    }
    for (const auto& a : args) {
      if (!contains(a.value())) {
        throw DomainError("value " + a.str() + " is outside the domain of " + name());
      }
    }
    const Rational& x = args[0].value();
    const Rational& y = args.size() > 1 ? args[1].value() : x;
    return TruthValue(apply_unchecked(c, x, y));
  }

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.id_ == b.id_ && a.n_ == b.n_;
  }

 private:
  friend Algebra catalog_lookup(AlgebraId id, std::optional<int> n);

  AlgebraId id_ = AlgebraId::kBool2;
  int n_ = 1;
  Family family_ = Family::kBoolean;
  Constants constants_ = Constants::kBounds;
  std::vector<Connective> signature_;
};

inline Algebra catalog_lookup(AlgebraId id, std::optional<int> n) {
  const auto& e = detail::entry(id);
  Algebra a;
  a.id_ = id;
  if (e.parametric) {
    if (!n.has_value()) {
      throw InputError("algebra " + std::string(e.name) + " requires a chain parameter n");
    }
    if (*n < 1) throw InputError("chain parameter n must be >= 1, got " + std::to_string(*n));
    a.n_ = *n;
  } else if (id == AlgebraId::kBool2) {
    a.n_ = 1;
  } else {
    a.n_ = 0;
  }

  using C = Connective;
  const std::vector<C> lattice = {C::kAnd, C::kOr, C::kImp, C::kNeg};
  const std::vector<C> mv = {C::kAnd, C::kOr, C::kImp, C::kNeg, C::kStrongAnd, C::kOplus, C::kOminus};
  auto with = [](std::vector<C> base, std::initializer_list<C> extra) {
    base.insert(base.end(), extra);
    return base;
  };

  switch (id) {
    case AlgebraId::kBool2:
      a.family_ = Algebra::Family::kBoolean;
      a.signature_ = lattice;
      break;
    case AlgebraId::kG:
    case AlgebraId::kGC:
    case AlgebraId::kStdG:
    case AlgebraId::kStdQG:
      a.family_ = Algebra::Family::kGodel;
      a.signature_ = lattice;
      break;
    case AlgebraId::kGCDelta:
    case AlgebraId::kStdQGDelta:
      a.family_ = Algebra::Family::kGodel;
      a.signature_ = with(lattice, {C::kDelta});
      break;
    case AlgebraId::kL:
    case AlgebraId::kLC:
    case AlgebraId::kStdL:
    case AlgebraId::kStdQL:
      a.family_ = Algebra::Family::kLukasiewicz;
      a.signature_ = mv;
      break;
    case AlgebraId::kStdLDelta:
    case AlgebraId::kStdQLDelta:
      a.family_ = Algebra::Family::kLukasiewicz;
      a.signature_ = with(mv, {C::kDelta});
      break;
    case AlgebraId::kStdPL:
      a.family_ = Algebra::Family::kLukasiewicz;
      a.signature_ = with(mv, {C::kOdot});
      break;
    case AlgebraId::kStdPLDelta:
    case AlgebraId::kStdQPLDelta:
      a.family_ = Algebra::Family::kLukasiewicz;
      a.signature_ = with(mv, {C::kOdot, C::kDelta});
      break;
    case AlgebraId::kStdLPi:
    case AlgebraId::kStdLPiHalf:
      // Delta is term-definable in both, so it is offered natively.
      a.family_ = Algebra::Family::kLukasiewicz;
      a.signature_ = with(mv, {C::kOdot, C::kImpPi, C::kDelta});
      break;
  }

  switch (id) {
    case AlgebraId::kGC:
    case AlgebraId::kGCDelta:
    case AlgebraId::kLC:
      a.constants_ = Algebra::Constants::kChain;
      break;
    case AlgebraId::kStdQL:
    case AlgebraId::kStdQLDelta:
    case AlgebraId::kStdQG:
    case AlgebraId::kStdQGDelta:
    case AlgebraId::kStdQPLDelta:
    case AlgebraId::kStdLPiHalf:
      a.constants_ = Algebra::Constants::kAllRationals;
      break;
    default:
      a.constants_ = Algebra::Constants::kBounds;
      break;
  }
  return a;
}

inline Algebra catalog_lookup(std::string_view catalog_id, std::optional<int> n) {
  for (const auto& e : detail::kCatalog) {
    if (e.name == catalog_id) {
      if (!e.parametric && n.has_value()) {
        throw InputError("algebra " + std::string(catalog_id) + " takes no chain parameter");
      }
      return catalog_lookup(e.id, n);
    }
  }
  throw InputError("unknown algebra identifier '" + std::string(catalog_id) + "'");
}

// Parses either a catalog identifier ("STD_L", "L_n_C" is rejected since it
// lacks n) or a concrete name with the parameter filled in ("L_4_C").
inline Algebra parse_algebra(std::string_view name) {
  for (const auto& e : detail::kCatalog) {
    if (!e.parametric) {
      if (e.name == name) return catalog_lookup(e.id, std::nullopt);
      continue;
    }
    std::string_view tmpl = e.name;
    std::size_t pos = tmpl.find("_n");
    std::string_view prefix = tmpl.substr(0, pos + 1);  // e.g. "L_"
    std::string_view suffix = tmpl.substr(pos + 2);     // e.g. "_C"
    if (name.size() <= prefix.size() + suffix.size()) continue;
    if (name.substr(0, prefix.size()) != prefix) continue;
    if (name.substr(name.size() - suffix.size()) != suffix) continue;
    std::string_view digits = name.substr(prefix.size(), name.size() - prefix.size() - suffix.size());
    if (digits.empty() || digits.size() > 9 ||
        !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
      continue;
    }
    return catalog_lookup(e.id, std::stoi(std::string(digits)));
  }
  throw InputError("unknown algebra '" + std::string(name) + "'");
}

// a is a subreduct of b: a's domain and signature (including truth constants)
// are contained in b's, and a's operations are restrictions of b's. Checked
// exhaustively when a is finite; for infinite carriers the operation families
// are compared.
inline bool is_subreduct(const Algebra& a, const Algebra& b) {
  for (Connective c : a.signature()) {
    if (!b.has_connective(c)) return false;
  }
  if (!a.is_finite()) {
    if (b.is_finite()) return false;
    if (a.constants() == Algebra::Constants::kAllRationals &&
        b.constants() != Algebra::Constants::kAllRationals) {
      return false;
    }
    return a.family() == b.family();
  }
  const auto elems = a.elements();
  for (const auto& x : elems) {
    if (!b.contains(x.value())) return false;
    if (a.has_constant(x.value()) && !b.has_constant(x.value())) return false;
  }
  for (Connective c : a.signature()) {
    for (const auto& x : elems) {
      if (arity(c) == 1) {
        if (a.apply_unchecked(c, x, x) != b.apply_unchecked(c, x, x)) return false;
        continue;
      }
      for (const auto& y : elems) {
        if (a.apply_unchecked(c, x, y) != b.apply_unchecked(c, x, y)) return false;
      }
    }
  }
  return true;
}

}  // namespace lgames

#endif  // LGAMES_ALGEBRA_HPP_
