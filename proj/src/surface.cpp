#include "surfcode/surface.hpp"

#include <algorithm>
#include <map>

namespace surfcode {

std::string SmoothnessStatus::str() const {
  switch (kind) {
    case SmoothnessKind::Unknown:
      return "unknown";
    case SmoothnessKind::AssertedByUser:
      return "asserted_by_user";
    case SmoothnessKind::Verified:
      return "verified_ext" + std::to_string(ext_checked);
    case SmoothnessKind::SingularWitness:
      return "singular_ext" + std::to_string(witness_ext) +
             (witness ? "_at_" + witness->str() : "");
  }
  return "unknown";
}

SurfaceP3 make_surface(std::string id, FieldPtr field, HomogPoly f) {
  if (f.nvars() != 4) throw ArityMismatchError("surface polynomial must have 4 variables");
  if (f.zero()) throw InvalidInputError("surface polynomial is zero");
  if (f.degree() < 2) throw InvalidInputError("surface degree must be >= 2");
  if (!f.field()->same(*field)) throw MixedFieldError("surface field mismatch");
  return SurfaceP3{std::move(id), std::move(field), std::move(f), false, {}};
}

std::vector<Point> rational_points(const SurfaceP3& X) {
  std::vector<Point> out;
  for_each_projective_point(X.field, 3, [&](const Point& p) {
    if (X.f.evaluate_packed(p.x) == 0) out.push_back(p);
  });
  return out;
}

SmoothnessStatus check_smoothness(const SurfaceP3& X, int max_ext) {
  if (max_ext < 1) throw InvalidInputError("max_ext must be >= 1");
  std::array<HomogPoly, 4> parts = {X.f.derivative(0), X.f.derivative(1),
                                    X.f.derivative(2), X.f.derivative(3)};
  for (int k = 1; k <= max_ext; ++k) {
    FieldPtr ext = X.field;
    HomogPoly f = X.f;
    std::array<HomogPoly, 4> dparts = parts;
    if (k > 1) {
      ext = Field::make(X.field->p(), X.field->ext_degree() * k);
      std::vector<gfe> embed = embedding_table(*X.field, *ext);
      f = X.f.mapped(ext, embed);
      for (int i = 0; i < 4; ++i) dparts[i] = parts[i].mapped(ext, embed);
    }
    std::optional<Point> witness;
    for_each_projective_point(ext, 3, [&](const Point& p) {
      if (witness) return;
      if (f.evaluate_packed(p.x) != 0) return;
      for (int i = 0; i < 4; ++i)
        if (dparts[i].evaluate_packed(p.x) != 0) return;
      witness = p;
    });
    if (witness) {
      SmoothnessStatus s;
      s.kind = SmoothnessKind::SingularWitness;
      s.witness = std::move(witness);
      s.witness_ext = k;
      return s;
    }
  }
  SmoothnessStatus s;
  s.kind = SmoothnessKind::Verified;
  s.ext_checked = max_ext;
  return s;
}

long long count_points_plane_curve(const PlaneCurveSpec& C) {
  if (C.g.nvars() != 3) throw ArityMismatchError("plane curve polynomial must have 3 variables");
  long long count = 0;
  for_each_projective_point(C.field, 2, [&](const Point& p) {
    if (C.g.evaluate_packed(p.x) == 0) ++count;
  });
  return count;
}

namespace {

// f restricted to the line s*P + t*Q as a binary form in (s,t); returns the
// d+1 coefficients (index = degree in s)
std::vector<gfe> restrict_to_line(const HomogPoly& f, const Point& P, const Point& Q) {
  const Field& F = *f.field();
  int d = f.degree();
  std::vector<gfe> acc(d + 1, 0);
  for (const auto& [e, c] : f.terms()) {
    // product over coordinates of (s*P_i + t*Q_i)^{e_i}
    std::vector<gfe> prod = {c};  // binary form, index = degree in s
    for (int i = 0; i < 4; ++i) {
      for (int rep = 0; rep < e[i]; ++rep) {
        std::vector<gfe> next(prod.size() + 1, 0);
        for (size_t j = 0; j < prod.size(); ++j) {
          next[j + 1] = F.add(next[j + 1], F.mul(prod[j], P.x[i]));
          next[j] = F.add(next[j], F.mul(prod[j], Q.x[i]));
        }
        prod = std::move(next);
      }
    }
    for (size_t j = 0; j < prod.size(); ++j) acc[j] = F.add(acc[j], prod[j]);
  }
  return acc;
}

}  // namespace

long long count_rational_lines(const SurfaceP3& X) {
  std::vector<Point> pts = enumerate_projective_points(X.field, 3);
  std::map<std::vector<gfe>, size_t> index;
  for (size_t i = 0; i < pts.size(); ++i) index[pts[i].x] = i;
  const Field& F = *X.field;
  long long q = F.q();
  long long lines = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    for (size_t j = i + 1; j < pts.size(); ++j) {
      // count each line once: (i, j) must be its two smallest point indices
      size_t smallest = i, second = j;
      bool canonical = true;
      for (long long a = 0; a < q && canonical; ++a) {
        // point t*P + Q ... enumerate the q+1 points of the line
        std::vector<gfe> raw(4);
        for (int co = 0; co < 4; ++co)
          raw[co] = F.add(F.mul((gfe)a, pts[i].x[co]), pts[j].x[co]);
        size_t idx = index.at(make_point(X.field, std::move(raw)).x);
        if (idx < smallest)
          canonical = false;
        else if (idx != smallest && idx < second)
          second = idx;
      }
      if (!canonical || second != j) continue;
      std::vector<gfe> restr = restrict_to_line(X.f, pts[i], pts[j]);
      if (std::all_of(restr.begin(), restr.end(), [](gfe c) { return c == 0; }))
        ++lines;
    }
  }
  return lines;
}

}  // namespace surfcode
