#include "surfcode/linear_code.hpp"

namespace surfcode {

size_t rref_in_place(const Field& F, std::vector<gfe>& rows, size_t nrows,
                     size_t ncols, std::vector<size_t>* pivots) {
  if (pivots) pivots->clear();
  size_t rank = 0;
  for (size_t col = 0; col < ncols && rank < nrows; ++col) {
    size_t sel = nrows;
    for (size_t i = rank; i < nrows; ++i)
      if (rows[i * ncols + col] != 0) {
        sel = i;
        break;
      }
    if (sel == nrows) continue;
    if (sel != rank)
      for (size_t j = 0; j < ncols; ++j)
        std::swap(rows[sel * ncols + j], rows[rank * ncols + j]);
    gfe s = F.inv(rows[rank * ncols + col]);
    if (s != 1)
      for (size_t j = 0; j < ncols; ++j)
        rows[rank * ncols + j] = F.mul(rows[rank * ncols + j], s);
    for (size_t i = 0; i < nrows; ++i) {
      if (i == rank) continue;
      gfe c = rows[i * ncols + col];
      if (c == 0) continue;
      for (size_t j = 0; j < ncols; ++j)
        rows[i * ncols + j] =
            F.sub(rows[i * ncols + j], F.mul(c, rows[rank * ncols + j]));
    }
    if (pivots) pivots->push_back(col);
    ++rank;
  }
  return rank;
}

LinearCode LinearCode::from_rows(FieldPtr field, size_t n, std::vector<gfe> rows,
                                 size_t nrows) {
  if (n == 0) throw InvalidInputError("code length must be >= 1");
  if (rows.size() != n * nrows) throw LengthMismatchError("matrix shape mismatch");
  size_t rank = rref_in_place(*field, rows, nrows, n);
  rows.resize(rank * n);
  return LinearCode(std::move(field), n, rank, std::move(rows));
}

MonomialBasis monomial_basis(long long r, const HomogPoly* f) {
  if (r < 0) throw InvalidInputError("r must be >= 0");
  if (r > 200) throw TooLargeError("degree r too large");
  MonomialBasis basis;
  basis.r = r;
  basis.surface_degree = f ? f->degree() : 0;
  std::optional<HomogPoly::Exps> lead;
  if (f && r >= f->degree()) lead = f->leading_exps();
  for (long long e0 = r; e0 >= 0; --e0)
    for (long long e1 = r - e0; e1 >= 0; --e1)
      for (long long e2 = r - e0 - e1; e2 >= 0; --e2) {
        long long e3 = r - e0 - e1 - e2;
        HomogPoly::Exps e = {(std::uint8_t)e0, (std::uint8_t)e1, (std::uint8_t)e2,
                             (std::uint8_t)e3};
        if (lead) {
          bool divisible = true;
          for (int i = 0; i < 4; ++i)
            if (e[i] < (*lead)[i]) {
              divisible = false;
              break;
            }
          if (divisible) continue;
        }
        basis.monomials.push_back(e);
      }
  return basis;
}

std::vector<Point> code_support(const SurfaceP3& X, const std::array<gfe, 4>& chart) {
  const Field& F = *X.field;
  std::vector<Point> support;
  for (const Point& p : rational_points(X)) {
    gfe v = 0;
    for (int i = 0; i < 4; ++i) v = F.add(v, F.mul(chart[i], p.x[i]));
    if (v != 0) support.push_back(p);
  }
  return support;
}

LinearCode build_code(const SurfaceP3& X, long long r, const std::array<gfe, 4>& chart) {
  if (r < 1) throw InvalidInputError("r must be >= 1");
  const Field& F = *X.field;
  bool chart_zero = true;
  for (gfe c : chart)
    if (c != 0) chart_zero = false;
  if (chart_zero) throw InvalidInputError("chart form must be nonzero");

  std::vector<Point> support = code_support(X, chart);
  if (support.empty())
    throw EmptySupportError("no rational points off the chart hyperplane");
  size_t n = support.size();

  // per-point scale chart(P)^-r
  std::vector<gfe> scale(n);
  for (size_t j = 0; j < n; ++j) {
    gfe v = 0;
    for (int i = 0; i < 4; ++i) v = F.add(v, F.mul(chart[i], support[j].x[i]));
    scale[j] = F.inv(F.pow(v, r));
  }

  MonomialBasis basis = monomial_basis(r, &X.f);
  std::vector<gfe> rows(basis.monomials.size() * n);
  for (size_t i = 0; i < basis.monomials.size(); ++i) {
    const auto& e = basis.monomials[i];
    for (size_t j = 0; j < n; ++j) {
      gfe prod = scale[j];
      for (int v = 0; v < 4; ++v)
        if (e[v] != 0) prod = F.mul(prod, F.pow(support[j].x[v], e[v]));
      rows[i * n + j] = prod;
    }
  }

  LinearCode code = LinearCode::from_rows(X.field, n, std::move(rows),
                                          basis.monomials.size());
  CodeProvenance prov;
  prov.surface_id = X.id;
  prov.r = r;
  prov.chart = chart;
  prov.dim_sections = basis.dim();
  prov.injective = (long long)code.k() == basis.dim();
  code.provenance = prov;
  return code;
}

long long weight_of(const LinearCode& C, std::span<const gfe> message) {
  if (message.size() != C.k())
    throw LengthMismatchError("message length " + std::to_string(message.size()) +
                              " != k = " + std::to_string(C.k()));
  const Field& F = *C.field();
  size_t n = C.n();
  std::vector<gfe> word(n, 0);
  for (size_t i = 0; i < C.k(); ++i) {
    gfe c = message[i];
    if (c == 0) continue;
    std::span<const gfe> row = C.row(i);
    for (size_t j = 0; j < n; ++j)
      word[j] = F.add(word[j], F.mul(c, row[j]));
  }
  long long w = 0;
  for (gfe v : word)
    if (v != 0) ++w;
  return w;
}

}  // namespace surfcode
