#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "surfcode/surface.hpp"

namespace surfcode {

// Row-reduce a nrows x ncols row-major matrix in place; returns the rank and
// (optionally) the pivot columns.  Deterministic: leftmost pivot per row.
size_t rref_in_place(const Field& F, std::vector<gfe>& rows, size_t nrows,
                     size_t ncols, std::vector<size_t>* pivots = nullptr);

// Monomial support for sections of O_X(r) on a degree-d hypersurface:
// all degree-r exponent tuples in 4 variables except, once r >= d, the
// multiples of the leading monomial of f (a basis of the degree-r piece of
// the coordinate ring).  Order: descending lex with x0 heaviest.
struct MonomialBasis {
  long long r = 0;
  long long surface_degree = 0;
  std::vector<HomogPoly::Exps> monomials;
  long long dim() const { return (long long)monomials.size(); }
};

MonomialBasis monomial_basis(long long r, const HomogPoly* f);

struct CodeProvenance {
  std::string surface_id;
  long long r = 0;
  std::array<gfe, 4> chart{1, 0, 0, 0};  // linear form defining the affine chart
  long long dim_sections = 0;            // dim of the section space evaluated
  bool injective = false;                // evaluation map injective (rank == dim)
};

// Linear [n, k] code over F_q held as a reduced row-echelon generator matrix.
class LinearCode {
 public:
  static LinearCode from_rows(FieldPtr field, size_t n, std::vector<gfe> rows,
                              size_t nrows);

  const FieldPtr& field() const { return field_; }
  size_t n() const { return n_; }
  size_t k() const { return k_; }
  std::span<const gfe> row(size_t i) const {
    return {gen_.data() + i * n_, n_};
  }
  const std::vector<gfe>& matrix() const { return gen_; }

  std::optional<CodeProvenance> provenance;

 private:
  LinearCode(FieldPtr field, size_t n, size_t k, std::vector<gfe> gen)
      : provenance(std::nullopt), field_(std::move(field)), n_(n), k_(k), gen_(std::move(gen)) {}
  FieldPtr field_;
  size_t n_;
  size_t k_;
  std::vector<gfe> gen_;  // k x n, reduced row echelon form
};

// Evaluation code C(X, r*L, S): S = rational points of X off the chart line,
// functions = degree-r monomials divided by chart^r.  Default chart x0.
LinearCode build_code(const SurfaceP3& X, long long r,
                      const std::array<gfe, 4>& chart = {1, 0, 0, 0});

// Points used by build_code, in canonical order.
std::vector<Point> code_support(const SurfaceP3& X, const std::array<gfe, 4>& chart);

// Hamming weight of message * generator; message length must equal k.
long long weight_of(const LinearCode& C, std::span<const gfe> message);

}  // namespace surfcode
