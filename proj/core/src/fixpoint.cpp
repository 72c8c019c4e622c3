#include "albert/fixpoint.hpp"

#include "albert/error.hpp"

namespace albert {

namespace {

constexpr std::size_t n27 = AlbertAlgebra::dim;

Subspace from_echelon(const AlbertPtr& A, const Matrix& rows) {
  const Echelon e = row_reduce(rows);
  Subspace S{A, {}, false};
  for (std::size_t i = 0; i < e.pivots.size(); ++i) S.basis.push_back(e.rref.row(i));
  return S;
}

}  // namespace

bool Subspace::contains(const AlbertElem& x) const {
  if (x.parent() != parent) fail(Errc::MixedParents, "membership test across algebras");
  if (basis.empty()) return x.is_zero();
  std::vector<Vec> rows = basis;
  rows.push_back(x.coords());
  return rank(Matrix::from_rows(rows)) == basis.size();
}

Subspace span(const AlbertPtr& A, const std::vector<Vec>& vectors) {
  if (vectors.empty()) return {A, {}, true};
  return from_echelon(A, Matrix::from_rows(vectors));
}

Subspace full_space(const AlbertPtr& A) {
  Subspace S = from_echelon(A, Matrix::identity(n27));
  S.closed = true;
  return S;
}

bool is_closed_under_jmul(const Subspace& S) {
  for (std::size_t i = 0; i < S.dim(); ++i)
    for (std::size_t j = i; j < S.dim(); ++j)
      if (!S.contains(jmul(AlbertElem(S.parent, S.basis[i]), AlbertElem(S.parent, S.basis[j])))) return false;
  return true;
}

Subspace fixed_subspace(const LinOp& f) {
  const AlbertPtr& A = f.parent;
  Subspace S = span(A, kernel(f.matrix - Matrix::identity(n27)));
  if (is_automorphism(f)) {
    if (!S.contains(AlbertElem::one(A)) || !is_closed_under_jmul(S))
      fail(Errc::InvariantViolation, "fixed points of an automorphism are not a unital subalgebra");
    S.closed = true;
  }
  return S;
}

Subspace element_fixed_set(const AlbertPtr& A, const std::vector<LinOp>& fs) {
  if (fs.empty()) return full_space(A);
  Matrix stacked(n27 * fs.size(), n27);
  for (std::size_t k = 0; k < fs.size(); ++k) {
    if (fs[k].parent != A) fail(Errc::MixedParents, "fixed set of maps on another algebra");
    const Matrix d = fs[k].matrix - Matrix::identity(n27);
    for (std::size_t r = 0; r < n27; ++r)
      for (std::size_t c = 0; c < n27; ++c) stacked(n27 * k + r, c) = d(r, c);
  }
  Subspace S = span(A, kernel(stacked));
  S.closed = is_closed_under_jmul(S);
  return S;
}

Subspace trace_zero(const AlbertPtr& A) {
  Matrix t(1, n27);
  for (std::size_t j = 0; j < n27; ++j) t(0, j) = trace(AlbertElem::unit(A, j));
  return span(A, kernel(t));
}

Rational fixed_point_determinant(const LinOp& f) {
  const AlbertPtr& A = f.parent;
  if (!is_automorphism(f)) fail(Errc::NotAutomorphism, "fixed-point test needs an automorphism");
  // In the basis (A0 basis, 1) an automorphism is block diagonal, since it
  // preserves the trace and fixes 1.
  std::vector<Vec> cols = trace_zero(A).basis;
  cols.push_back(AlbertElem::one(A).coords());
  const Matrix P = Matrix::from_columns(cols);
  const auto Pinv = inverse(P);
  if (!Pinv) fail(Errc::InvariantViolation, "trace-zero complement does not split off 1");
  const Matrix R = *Pinv * f.matrix * P;
  const std::size_t m = n27 - 1;
  Matrix block(m, m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) block(r, c) = R(r, c) - (r == c ? 1 : 0);
  return determinant(block);
}

bool has_fixed_vector_in_A0(const LinOp& f) { return fixed_point_determinant(f) == 0; }

Subspace subalgebra_closure(const AlbertPtr& A, const std::vector<AlbertElem>& gens) {
  std::vector<Vec> vecs{AlbertElem::one(A).coords()};
  for (const auto& g : gens) vecs.push_back(g.coords());
  Subspace S = span(A, vecs);
  for (;;) {
    std::vector<Vec> next = S.basis;
    for (std::size_t i = 0; i < S.dim(); ++i)
      for (std::size_t j = i; j < S.dim(); ++j)
        next.push_back(jmul(AlbertElem(A, S.basis[i]), AlbertElem(A, S.basis[j])).coords());
    Subspace T = span(A, next);
    if (T.dim() == S.dim()) {
      T.closed = true;
      return T;
    }
    S = std::move(T);
  }
}

}  // namespace albert
