#include "surfcode/text_io.hpp"

#include <fstream>
#include <sstream>

#include "surfcode/errors.hpp"
#include "surfcode/field.hpp"

namespace surfcode {

namespace {

// Lines with comments ('#' to end of line) stripped and whitespace trimmed,
// empty lines dropped; paired with 1-based source line numbers.
struct Line {
  std::string text;
  size_t number;
};

std::vector<Line> significant_lines(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const size_t first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const size_t last = raw.find_last_not_of(" \t\r");
    lines.push_back({raw.substr(first, last - first + 1), number});
  }
  return lines;
}

std::vector<std::string> tokens_of(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

long long parse_int(const std::string& tok, size_t line) {
  try {
    size_t used = 0;
    const long long v = std::stoll(tok, &used);
    if (used != tok.size())
      throw ParseError("line " + std::to_string(line) +
                       ": trailing characters in integer '" + tok + "'");
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line) + ": expected integer, got '" +
                     tok + "'");
  }
}

bool starts_with(const std::string& s, const char* prefix) {
  return s.rfind(prefix, 0) == 0;
}

std::string after_colon(const std::string& s) {
  const size_t colon = s.find(':');
  size_t start = colon + 1;
  while (start < s.size() && (s[start] == ' ' || s[start] == '\t')) ++start;
  return s.substr(start);
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParseError("cannot open file for writing: " + path);
  out << content;
  if (!out) throw ParseError("write failed: " + path);
}

std::string poly_to_text(const HomogPoly& f) {
  const Field& F = *f.field();
  std::ostringstream out;
  out << "field: " << F.header() << "\n";
  out << "degree: " << f.degree() << "\n";
  for (const auto& [e, c] : f.terms()) {
    for (int v = 0; v < f.nvars(); ++v) out << (int)e[v] << ' ';
    out << F.elem_str(c) << "\n";
  }
  return out.str();
}

HomogPoly poly_from_text(const std::string& text) {
  const std::vector<Line> lines = significant_lines(text);
  size_t idx = 0;
  if (idx >= lines.size() || !starts_with(lines[idx].text, "field:"))
    throw ParseError("polynomial file: missing 'field:' header line");
  FieldPtr field;
  try {
    field = Field::parse_header(after_colon(lines[idx].text));
  } catch (const Error& e) {
    throw ParseError("line " + std::to_string(lines[idx].number) + ": " + e.what());
  }
  ++idx;
  if (idx >= lines.size() || !starts_with(lines[idx].text, "degree:"))
    throw ParseError("polynomial file: missing 'degree:' line");
  const long long degree =
      parse_int(after_colon(lines[idx].text), lines[idx].number);
  if (degree < 1 || degree > 200)
    throw ParseError("polynomial file: degree out of range: " +
                     std::to_string(degree));
  ++idx;
  if (idx >= lines.size())
    throw ParseError("polynomial file: no term lines");

  int nvars = 0;
  HomogPoly f(field, 4, (int)degree);  // replaced once nvars is known
  for (; idx < lines.size(); ++idx) {
    const auto toks = tokens_of(lines[idx].text);
    if (toks.size() != 4 && toks.size() != 5)
      throw ParseError("line " + std::to_string(lines[idx].number) +
                       ": expected 3 or 4 exponents plus a coefficient");
    const int nv = (int)toks.size() - 1;
    if (nvars == 0) {
      nvars = nv;
      f = HomogPoly(field, nvars, (int)degree);
    } else if (nv != nvars) {
      throw ParseError("line " + std::to_string(lines[idx].number) +
                       ": inconsistent variable count");
    }
    HomogPoly::Exps e{0, 0, 0, 0};
    for (int v = 0; v < nvars; ++v) {
      const long long ev = parse_int(toks[v], lines[idx].number);
      if (ev < 0 || ev > degree)
        throw ParseError("line " + std::to_string(lines[idx].number) +
                         ": exponent out of range: " + toks[v]);
      e[v] = (std::uint8_t)ev;
    }
    gfe c = 0;
    try {
      c = field->parse_elem(toks[nvars]);
    } catch (const Error& err) {
      throw ParseError("line " + std::to_string(lines[idx].number) + ": " +
                       err.what());
    }
    try {
      f.add_term(e, c);
    } catch (const Error& err) {
      throw ParseError("line " + std::to_string(lines[idx].number) + ": " +
                       err.what());
    }
  }
  if (f.zero()) throw ParseError("polynomial file: all terms cancel to zero");
  return f;
}

HomogPoly poly_from_file(const std::string& path) {
  return poly_from_text(read_text_file(path));
}

std::string matrix_to_text(const LinearCode& C) {
  const Field& F = *C.field();
  std::ostringstream out;
  out << C.n() << ' ' << C.k() << ' ' << F.q() << "\n";
  if (F.ext_degree() > 1) out << "field: " << F.header() << "\n";
  for (size_t i = 0; i < C.k(); ++i) {
    auto row = C.row(i);
    for (size_t j = 0; j < C.n(); ++j) {
      if (j) out << ' ';
      out << F.elem_str(row[j]);
    }
    out << "\n";
  }
  return out.str();
}

LinearCode matrix_from_text(const std::string& text) {
  const std::vector<Line> lines = significant_lines(text);
  if (lines.empty()) throw ParseError("matrix file: empty");
  const auto header = tokens_of(lines[0].text);
  if (header.size() != 3)
    throw ParseError("matrix file: header must be 'n k q'");
  const long long n = parse_int(header[0], lines[0].number);
  const long long k = parse_int(header[1], lines[0].number);
  const long long q = parse_int(header[2], lines[0].number);
  if (n < 1 || k < 1 || k > n)
    throw ParseError("matrix file: need 1 <= k <= n");
  size_t idx = 1;
  FieldPtr field;
  if (idx < lines.size() && starts_with(lines[idx].text, "field:")) {
    try {
      field = Field::parse_header(after_colon(lines[idx].text));
    } catch (const Error& e) {
      throw ParseError("line " + std::to_string(lines[idx].number) + ": " +
                       e.what());
    }
    if (field->q() != q)
      throw ParseError("matrix file: field order " + std::to_string(field->q()) +
                       " does not match header q=" + std::to_string(q));
    ++idx;
  } else {
    try {
      field = Field::parse_header("GF(" + std::to_string(q) + ")");
    } catch (const Error& e) {
      throw ParseError("matrix file: bad q in header: " + std::string(e.what()));
    }
  }
  if (lines.size() - idx != (size_t)k)
    throw ParseError("matrix file: expected " + std::to_string(k) +
                     " rows, found " + std::to_string(lines.size() - idx));
  std::vector<gfe> rows;
  rows.reserve((size_t)k * n);
  for (long long i = 0; i < k; ++i, ++idx) {
    const auto toks = tokens_of(lines[idx].text);
    if (toks.size() != (size_t)n)
      throw ParseError("line " + std::to_string(lines[idx].number) +
                       ": expected " + std::to_string(n) + " entries, found " +
                       std::to_string(toks.size()));
    for (const auto& tok : toks) {
      try {
        rows.push_back(field->parse_elem(tok));
      } catch (const Error& e) {
        throw ParseError("line " + std::to_string(lines[idx].number) + ": " +
                         e.what());
      }
    }
  }
  LinearCode C = LinearCode::from_rows(field, (size_t)n, std::move(rows), (size_t)k);
  if ((long long)C.k() != k)
    throw ParseError("matrix file: rows have rank " + std::to_string(C.k()) +
                     ", header says k=" + std::to_string(k));
  return C;
}

LinearCode matrix_from_file(const std::string& path) {
  return matrix_from_text(read_text_file(path));
}

std::string points_to_text(const Field& F, const std::vector<Point>& pts) {
  std::ostringstream out;
  out << "field: " << F.header() << "\n";
  for (const Point& p : pts) out << p.str() << "\n";
  return out.str();
}

std::vector<Point> points_from_text(const std::string& text) {
  const std::vector<Line> lines = significant_lines(text);
  if (lines.empty() || !starts_with(lines[0].text, "field:"))
    throw ParseError("point file: missing 'field:' header line");
  FieldPtr field;
  try {
    field = Field::parse_header(after_colon(lines[0].text));
  } catch (const Error& e) {
    throw ParseError("line " + std::to_string(lines[0].number) + ": " + e.what());
  }
  std::vector<Point> pts;
  for (size_t idx = 1; idx < lines.size(); ++idx) {
    try {
      pts.push_back(parse_point(field, lines[idx].text));
    } catch (const Error& e) {
      throw ParseError("line " + std::to_string(lines[idx].number) + ": " +
                       e.what());
    }
  }
  return pts;
}

}  // namespace surfcode
