#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gzero/prodset.hpp"

namespace gzero {

enum class TriValue { Yes, No, Unknown };

/// Three-valued verdict; Unknown always carries a reason.
struct Tri {
  TriValue value = TriValue::Unknown;
  std::string reason;

  static Tri yes() { return {TriValue::Yes, ""}; }
  static Tri no() { return {TriValue::No, ""}; }
  static Tri unknown(std::string why) { return {TriValue::Unknown, std::move(why)}; }
  static Tri of(bool b) { return b ? yes() : no(); }

  bool isYes() const { return value == TriValue::Yes; }
  bool isNo() const { return value == TriValue::No; }
  bool isUnknown() const { return value == TriValue::Unknown; }
  bool decided() const { return value != TriValue::Unknown; }

  /// `yes`, `no` or `unknown`.
  std::string str() const;
};

Tri operator&&(const Tri& a, const Tri& b);
Tri operator!(const Tri& a);

using SetValue = std::variant<SymSet, ProdSet>;

std::string setStr(const SetValue& s);
const Universe& setUniverse(const SetValue& s);

enum class FilterKind {
  All, Cof, Dcc, Acc, Principal,
  Meet, Join, Quotient, Perp, Star, Induced,
  Tensor, CofPair, Angle, TimesProd,
};

/// Immutable filter expression. Builders below apply the identity rewrites;
/// `Filter::node` builds a node verbatim.
class Filter {
 public:
  static Filter node(FilterKind kind, const Universe& u, std::vector<Filter> kids = {},
                     std::vector<SetValue> sets = {});

  static Filter all(const Universe& u) { return node(FilterKind::All, u); }
  static Filter cof(const Universe& u) { return node(FilterKind::Cof, u); }
  static Filter dcc(const Universe& u) { return node(FilterKind::Dcc, u); }
  static Filter acc(const Universe& u) { return node(FilterKind::Acc, u); }
  static Filter principal(const Universe& u, std::vector<SetValue> bases) {
    return node(FilterKind::Principal, u, {}, std::move(bases));
  }

  FilterKind kind() const { return n_->kind; }
  const Universe& universe() const { return n_->u; }
  const std::vector<Filter>& kids() const { return n_->kids; }
  const Filter& kid(std::size_t i) const { return n_->kids.at(i); }
  const std::vector<SetValue>& sets() const { return n_->sets; }

  /// DSL form, e.g. `perp(meet(dcc, principal{[0..3]}))`.
  std::string str() const;

  friend bool operator==(const Filter& a, const Filter& b);

 private:
  struct Node {
    FilterKind kind;
    Universe u;
    std::vector<Filter> kids;
    std::vector<SetValue> sets;
  };
  std::shared_ptr<const Node> n_;
};

Filter meet(const Filter& a, const Filter& b);
Filter join(const Filter& a, const Filter& b);
Filter quotient(const Filter& a, const Filter& b);
Filter perp(const Filter& f);
Filter star(const Filter& f);
Filter induced(const Filter& f, const SymSet& c);
Filter tensor(const Filter& fh, const Filter& fg);
Filter cofPair(const Filter& fh, const Filter& fg);
/// Rewrites to perp(tensor(perp fh, perp fg)) when both arguments are balanced.
Filter anglePair(const Filter& fh, const Filter& fg);
Filter timesProd(const Filter& fh, const Filter& fg);

/// Re-applies the builders bottom-up.
Filter normalize(const Filter& f);

/// Closed form of a one-dimensional filter: X ∈ F iff X ⊇ z, and X̄ is
/// bounded below when `lo`, bounded above when `hi`.
struct NormalForm {
  SymSet z;
  bool lo = false;
  bool hi = false;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

std::optional<NormalForm> normalForm(const Filter& f, std::string* reason = nullptr);
/// Smallest member of the canonical base at parameter r.
SymSet baseSet(const NormalForm& nf, Point r);
Tri memberNF(const NormalForm& nf, const SymSet& x);

Tri member(const Filter& f, const SetValue& x);

struct Decision {
  Tri tri;
  std::optional<SetValue> witness;
};

Decision isProper(const Filter& f);
Decision isBalanced(const Filter& f);
Decision isSelfAdjoint(const Filter& f);
/// F₁ ⊆ F₂; a No carries a set in F₁ but not in F₂.
Decision filterLeq(const Filter& a, const Filter& b);
Decision equivalent(const Filter& a, const Filter& b);

}  // namespace gzero
