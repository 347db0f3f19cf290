#include "surfcode/projective.hpp"

#include <algorithm>

namespace surfcode {

std::string Point::str() const {
  std::string out;
  for (size_t i = 0; i < x.size(); ++i) {
    if (i) out += ":";
    out += field->elem_str(x[i]);
  }
  return out;
}

Point make_point(FieldPtr field, std::vector<gfe> raw) {
  size_t lead = raw.size();
  for (size_t i = 0; i < raw.size(); ++i)
    if (raw[i] != 0) {
      lead = i;
      break;
    }
  if (lead == raw.size())
    throw InvalidInputError("projective point with all coordinates zero");
  if (raw[lead] != 1) {
    gfe s = field->inv(raw[lead]);
    for (auto& c : raw) c = field->mul(c, s);
  }
  return Point{std::move(field), std::move(raw)};
}

Point parse_point(const FieldPtr& field, std::string_view text) {
  std::vector<gfe> coords;
  size_t pos = 0;
  std::string s(text);
  while (true) {
    size_t next = s.find(':', pos);
    std::string tok = s.substr(pos, next == std::string::npos ? next : next - pos);
    coords.push_back(field->parse_elem(tok));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return make_point(field, std::move(coords));
}

long long projective_point_count(long long q, int n) {
  long long total = 0, qpow = 1;
  for (int i = 0; i <= n; ++i) {
    total += qpow;
    qpow *= q;
  }
  return total;
}

void for_each_projective_point(const FieldPtr& field, int n,
                               const std::function<void(const Point&)>& fn) {
  if (n != 2 && n != 3) throw InvalidInputError("projective dimension must be 2 or 3");
  long long q = field->q();
  if (projective_point_count(q, n) > kMaxProjectivePoints)
    throw TooLargeError("projective space too large to enumerate");
  // ascending lex: leading 1 at position i from n down to 0, free tail after it
  Point p;
  p.field = field;
  for (int lead = n; lead >= 0; --lead) {
    std::vector<gfe> coords(n + 1, 0);
    coords[lead] = 1;
    while (true) {
      p.x = coords;
      fn(p);
      // odometer over positions lead+1..n, last position fastest
      int pos = n;
      while (pos > lead) {
        if (coords[pos] + 1 < q) {
          ++coords[pos];
          break;
        }
        coords[pos] = 0;
        --pos;
      }
      if (pos == lead) break;
    }
  }
}

std::vector<Point> enumerate_projective_points(const FieldPtr& field, int n) {
  std::vector<Point> out;
  out.reserve(projective_point_count(field->q(), n));
  for_each_projective_point(field, n, [&](const Point& p) { out.push_back(p); });
  return out;
}

HomogPoly::HomogPoly(FieldPtr field, int nvars, int degree)
    : field_(std::move(field)), nvars_(nvars), degree_(degree) {
  if (nvars != 3 && nvars != 4) throw ArityMismatchError("polynomial must have 3 or 4 variables");
  if (degree < 0) throw InvalidInputError("negative degree");
}

void HomogPoly::set(const Exps& e, gfe coeff) {
  int total = 0;
  for (int i = 0; i < 4; ++i) {
    if (i >= nvars_ && e[i] != 0) throw ArityMismatchError("exponent on unused variable");
    total += e[i];
  }
  if (total != degree_) throw InvalidInputError("term degree mismatch");
  if (coeff == 0)
    terms_.erase(e);
  else
    terms_[e] = coeff;
}

void HomogPoly::add_term(const Exps& e, gfe coeff) {
  int total = 0;
  for (int i = 0; i < 4; ++i) total += e[i];
  if (total != degree_) throw InvalidInputError("term degree mismatch");
  gfe cur = 0;
  auto it = terms_.find(e);
  if (it != terms_.end()) cur = it->second;
  gfe next = field_->add(cur, coeff);
  if (next == 0)
    terms_.erase(e);
  else
    terms_[e] = next;
}

gfe HomogPoly::evaluate_packed(std::span<const gfe> coords) const {
  if ((int)coords.size() != nvars_) throw ArityMismatchError("coordinate count mismatch");
  gfe acc = 0;
  for (const auto& [e, c] : terms_) {
    gfe prod = c;
    for (int i = 0; i < nvars_; ++i)
      if (e[i] != 0) prod = field_->mul(prod, field_->pow(coords[i], e[i]));
    acc = field_->add(acc, prod);
  }
  return acc;
}

FieldElement HomogPoly::evaluate(const Point& p) const {
  if (!p.field->same(*field_))
    throw MixedFieldError("point field differs from polynomial field");
  if ((int)p.x.size() != nvars_) throw ArityMismatchError("point arity mismatch");
  return FieldElement(field_, evaluate_packed(p.x));
}

HomogPoly HomogPoly::derivative(int var) const {
  if (var < 0 || var >= nvars_) throw ArityMismatchError("derivative variable out of range");
  HomogPoly out(field_, nvars_, degree_ > 0 ? degree_ - 1 : 0);
  if (degree_ == 0) return out;
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    gfe scaled = field_->mul(c, field_->from_int(e[var]));
    if (scaled == 0) continue;  // exponent divisible by the characteristic
    Exps d = e;
    d[var] -= 1;
    out.add_term(d, scaled);
  }
  return out;
}

HomogPoly HomogPoly::mapped(const FieldPtr& target, const std::vector<gfe>& embed) const {
  HomogPoly out(target, nvars_, degree_);
  for (const auto& [e, c] : terms_) out.set(e, embed.at(c));
  return out;
}

HomogPoly::Exps HomogPoly::leading_exps() const {
  if (terms_.empty()) throw InvalidInputError("leading term of zero polynomial");
  // keys sort ascending by (e0,e1,e2,e3); lex with x0 heaviest -> take the last
  return std::prev(terms_.end())->first;
}

std::string HomogPoly::str(const std::array<std::string, 4>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  // print with the x0-heaviest term first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    const auto& [e, c] = *it;
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string cs = field_->elem_str(c);
    if (mono.empty())
      out += cs;
    else if (cs == "1")
      out += mono;
    else if (cs.find('+') != std::string::npos)
      out += "(" + cs + ")*" + mono;
    else
      out += cs + "*" + mono;
  }
  return out;
}

std::vector<gfe> embedding_table(const Field& from, const Field& to) {
  if (from.p() != to.p()) throw MixedFieldError("embedding requires equal characteristic");
  if (to.ext_degree() % from.ext_degree() != 0)
    throw MixedFieldError("no subfield embedding: degree does not divide");
  // find the first root of from.modulus() in `to`
  const std::vector<int>& m = from.modulus();
  gfe root = 0;
  bool found = false;
  for (long long z = 0; z < to.q(); ++z) {
    // Horner with F_p coefficients, which embed as packed constants
    gfe acc = 0;
    for (int i = (int)m.size() - 1; i >= 0; --i) {
      acc = to.mul(acc, (gfe)z);
      acc = to.add(acc, to.from_int(m[i]));
    }
    if (acc == 0) {
      root = (gfe)z;
      found = true;
      break;
    }
  }
  if (!found) throw MixedFieldError("modulus has no root in target field");
  std::vector<gfe> table(from.q());
  for (long long a = 0; a < from.q(); ++a) {
    std::vector<int> c = from.coeffs((gfe)a);
    gfe acc = 0;
    for (int i = (int)c.size() - 1; i >= 0; --i) {
      acc = to.mul(acc, root);
      acc = to.add(acc, to.from_int(c[i]));
    }
    table[a] = acc;
  }
  return table;
}

}  // namespace surfcode
