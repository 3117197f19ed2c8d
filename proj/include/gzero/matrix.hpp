#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gzero/formal_sum.hpp"
#include "gzero/prodset.hpp"

namespace gzero {

/// Rank-one term column ⊗ row: entry (h, g) is column(h)·row(g).
struct RankOne {
  FormalSum column;  // over H
  FormalSum row;     // over G
};

enum class MatrixForm { Explicit, Finitary, Convolution, Sum };

/// H×G matrix over a division ring. Entries Φ(h, g) = Φ_h^g.
class SymMatrix {
 public:
  SymMatrix() = default;

  static SymMatrix explicitMatrix(const Universe& h, const Universe& g, ScalarKind kind,
                                  const std::map<std::pair<Point, Point>, DivisionScalar>& entries);
  static SymMatrix finitary(const Universe& h, const Universe& g, ScalarKind kind,
                            std::vector<RankOne> terms);
  /// Φ(h, g) = kernel(h + g) for key s, kernel(g − h) for key d. H and G are
  /// ℤ or ℕ; the kernel lives on ℤ.
  static SymMatrix convolution(const Universe& h, const Universe& g, const FormalSum& kernel,
                               StripeKey key);
  /// Twisted unit E: E(h, g) = 1 iff g = h*.
  static SymMatrix identity(const Universe& u, ScalarKind kind = ScalarKind::Rational);
  /// Left multiplication by k·tˢ on ℤ with the negating involution.
  static SymMatrix translationOp(Point s, const DivisionScalar& k = DivisionScalar(1));

  MatrixForm form() const { return form_; }
  const Universe& rowUniverse() const { return h_; }  // H
  const Universe& colUniverse() const { return g_; }  // G
  Universe productUniverse() const { return Universe::product(h_, g_); }
  ScalarKind kind() const { return kind_; }

  const std::map<std::pair<Point, Point>, DivisionScalar>& entries() const { return entries_; }
  const std::vector<RankOne>& terms() const { return terms_; }
  const FormalSum& kernel() const { return kernel_; }
  StripeKey key() const { return key_; }
  const std::vector<SymMatrix>& parts() const { return parts_; }

  DivisionScalar at(Point h, Point g) const;
  /// Row Φ_h over G.
  FormalSum rowAt(Point h) const;
  /// Column Φ^g over H.
  FormalSum columnAt(Point g) const;

  /// Exact support as a subset of H×G; UnrepresentableResult when it leaves
  /// the cell fragment.
  ProdSet support() const;
  ProdSet zeroSet() const { return support().complement(); }
  Point maxAbsConstant() const;

  /// Same matrix with Explicit bodies rewritten as rank-one terms.
  SymMatrix asFinitary() const;

  SymMatrix operator-() const;
  friend SymMatrix operator+(const SymMatrix& a, const SymMatrix& b);
  friend SymMatrix operator-(const SymMatrix& a, const SymMatrix& b) { return a + (-b); }
  /// Entrywise equality, decided through the support of the difference.
  friend bool operator==(const SymMatrix& a, const SymMatrix& b);

  std::string str() const;

 private:
  MatrixForm form_ = MatrixForm::Explicit;
  Universe h_ = Universe::intLine();
  Universe g_ = Universe::intLine();
  ScalarKind kind_ = ScalarKind::Rational;
  std::map<std::pair<Point, Point>, DivisionScalar> entries_;
  std::vector<RankOne> terms_;
  FormalSum kernel_;
  StripeKey key_ = StripeKey::Sum;
  std::vector<SymMatrix> parts_;
};

SymMatrix scaleLeft(const DivisionScalar& k, const SymMatrix& m);

/// (L ⊛ R)(n) = Σ_w L(w)·R(n − w) for eventually periodic sequences on ℤ.
/// Throws UndefinedProduct when a term is an infinite sum and
/// UnrepresentableResult when the result is not eventually periodic.
FormalSum convolve(const FormalSum& l, const FormalSum& r);

/// (Φ·a)_h = Σ_g Φ(h, g*)·a(g).
FormalSum matVec(const SymMatrix& m, const FormalSum& a);
/// (γ·Φ)^g = Σ_h γ(h*)·Φ(h, g).
FormalSum vecMat(const FormalSum& row, const SymMatrix& m);
/// Θ(j, g) = Σ_h Φ(j, h*)·Ψ(h, g).
SymMatrix matMul(const SymMatrix& phi, const SymMatrix& psi);

/// ⋂_{s ∈ B̄} Z(Φ_s) ∈ star(perp F_G) for every B ∈ perp F_H.
Tri checkM1(const SymMatrix& m, const Filter& fg, const Filter& fh);
/// ⋂_{t ∈ Ā} Z(Φ^{t*}) ∈ F_H for every A ∈ F_G.
Tri checkM2(const SymMatrix& m, const Filter& fg, const Filter& fh);
/// Z(Φ) ∈ ⟨F_H, star(perp F_G)⟩. Throws NonBalanced unless both filters are
/// known to be balanced.
Tri isContinuousLeft(const SymMatrix& m, const Filter& fg, const Filter& fh);
/// Z(Ψ) ∈ ⟨star(perp F_H), F_G⟩ for right multiplication of rows from
/// FU(F_H) to FU(F_G).
Tri isContinuousRight(const SymMatrix& m, const Filter& fg, const Filter& fh);

/// Ring operations of M(F); both operands must be continuous on FU(F).
SymMatrix ringAdd(const SymMatrix& a, const SymMatrix& b, const Filter& f);
SymMatrix ringMul(const SymMatrix& a, const SymMatrix& b, const Filter& f);

/// Σ^{F_H}_{t ∈ A} Φ^{t*}·k(t), with the intersection of the zero sets of the
/// family checked against F_H.
SumResult gSumColumns(const SymMatrix& m, const SymSet& index, const FormalSum& k,
                      const Filter& fh);

/// Linear form a ↦ γ·a on FU(F) given by a row of FU(star(perp F)).
class DualForm {
 public:
  DualForm(FormalSum row, Filter filter);
  const FormalSum& row() const { return row_; }
  DivisionScalar operator()(const FormalSum& column) const;

 private:
  FormalSum row_;
  Filter filter_;
};

/// Operand of an alternating product.
using Factor = std::variant<FormalSum, SymMatrix, DivisionScalar>;
Factor multiply(const Factor& a, const Factor& b);
/// Left-to-right product, checked against the right-to-left bracketing.
Factor alternatingProduct(const std::vector<Factor>& items);
std::string factorStr(const Factor& f);

}  // namespace gzero
