#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gzero/symset.hpp"

namespace gzero {

enum class StripeKey { Sum, Diff };  // s = h + g, d = g − h

/// Conjunction of interval constraints on h, g, s = h + g and d = g − h.
/// Only ±1 slopes occur, so for a fixed h the admissible g form an interval
/// and projections are exact.
struct Cell {
  Interval h, g, s, d;

  bool contains(Point hp, Point gp) const;
  /// Exact projections (empty interval when the cell is empty).
  Interval projectH() const;
  Interval projectG() const;
  /// Every row section {g : (h,g) ∈ cell} is finite.
  bool rowSectionsFinite() const;
  /// Every column section {h : (h,g) ∈ cell} is finite.
  bool columnSectionsFinite() const;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Subset of H×G as a union of pairwise disjoint, nonempty, normalized cells.
class ProdSet {
 public:
  ProdSet() = default;
  explicit ProdSet(Universe u);

  static ProdSet empty(const Universe& u) { return ProdSet(u); }
  static ProdSet full(const Universe& u);
  static ProdSet rect(const Universe& u, const SymSet& b, const SymSet& a);
  static ProdSet stripe(const Universe& u, StripeKey key, const SymSet& values);
  static ProdSet cell(const Universe& u, const Cell& c);
  static ProdSet points(const Universe& u, const std::vector<std::pair<Point, Point>>& pts);

  const Universe& universe() const { return u_; }
  const std::vector<Cell>& cells() const { return cells_; }

  bool contains(Point h, Point g) const;
  bool isEmpty() const { return cells_.empty(); }
  bool isFinite() const;
  bool isCofinite() const;

  ProdSet complement() const;
  bool subsetOf(const ProdSet& other) const;

  SymSet projectH() const;
  SymSet projectG() const;
  /// {g : (h,g) ∈ X}.
  SymSet rowSection(Point h) const;
  /// {h : (h,g) ∈ X}.
  SymSet columnSection(Point g) const;

  /// Some h with an infinite row section, if any.
  std::optional<Point> infiniteRowWitness() const;
  std::optional<Point> infiniteColumnWitness() const;

  Point maxAbsConstant() const;
  /// Enumerate points of a finite set.
  std::vector<std::pair<Point, Point>> elements() const;

  friend ProdSet unite(const ProdSet& a, const ProdSet& b);
  friend ProdSet intersect(const ProdSet& a, const ProdSet& b);
  friend ProdSet minus(const ProdSet& a, const ProdSet& b);
  /// Extensional equality (symmetric difference is empty).
  friend bool operator==(const ProdSet& a, const ProdSet& b);

  /// DSL form: `{}` or `union(cell(h:[0..1], g:[3..4]), ...)`.
  std::string str() const;

 private:
  std::optional<Cell> normalize(Cell c) const;
  std::vector<Cell> complementCell(const Cell& c) const;
  void addCell(const Cell& c);
  void simplify();

  Universe u_ = Universe::product(Universe::intLine(), Universe::intLine());
  std::vector<Cell> cells_;
};

std::string cellStr(const Cell& c);

}  // namespace gzero
