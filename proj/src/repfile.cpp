// Copyright 2026 The cubicplane Authors
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

#include "cubicplane/repfile.hpp"

#include <sstream>
#include <vector>

#include "cubicplane/errors.hpp"
#include "cubicplane/parse.hpp"

namespace cubicplane {

namespace {

std::string trim(const std::string& s, std::size_t& offset) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) {
    offset = s.size();
    return "";
  }
  std::size_t e = s.find_last_not_of(" \t\r");
  offset = b;
  return s.substr(b, e - b + 1);
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

}  // namespace

SymDetRep parse_rep_file(const std::string& text, std::optional<Field> field_override) {
  struct RowText {
    int line = 0;
    std::vector<std::pair<std::string, int>> cells;  // text, 1-based column
  };
  std::optional<Field> field;
  bool have_vars = false;
  std::vector<std::optional<RowText>> rows(4);

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::size_t hash = raw.find('#');
    std::string content = hash == std::string::npos ? raw : raw.substr(0, hash);
    std::size_t lead = 0;
    std::string line = trim(content, lead);
    if (line.empty()) continue;
    auto w = words(line);
    const int col = static_cast<int>(lead) + 1;
    if (w[0] == "field") {
      if (field) throw ParseError("duplicate field declaration", line_no, col);
      if (w.size() == 2 && w[1] == "rational") {
        field = Field::rationals();
      } else if (w.size() == 3 && w[1] == "fp") {
        try {
          if (w[2].find_first_not_of("0123456789") != std::string::npos || w[2].size() > 10) throw std::invalid_argument("");
          unsigned long long q = std::stoull(w[2]);
          if (q > 0xffffffffULL) throw std::invalid_argument("");
          field = Field::prime(static_cast<std::uint32_t>(q));
        } catch (const std::invalid_argument&) {
          throw ParseError("field modulus must be a prime below 2^31", line_no,
                           static_cast<int>(lead + line.find(w[2])) + 1);
        }
      } else {
        throw ParseError("expected 'field rational' or 'field fp Q'", line_no, col);
      }
    } else if (w[0] == "vars") {
      if (w != std::vector<std::string>{"vars", "x1", "x2", "x3"})
        throw ParseError("expected 'vars x1 x2 x3'", line_no, col);
      have_vars = true;
    } else if (w[0] == "row") {
      std::size_t colon = line.find(':');
      if (colon == std::string::npos) throw ParseError("expected ':' after the row index", line_no, col);
      std::string idx = line.substr(3, colon - 3);
      std::size_t idx_off = 0;
      idx = trim(idx, idx_off);
      if (idx.size() != 1 || idx[0] < '0' || idx[0] > '3')
        throw ParseError("row index must be 0, 1, 2 or 3", line_no, static_cast<int>(lead + 3 + idx_off) + 1);
      const int r = idx[0] - '0';
      if (rows[r]) throw ParseError("duplicate row " + idx, line_no, col);
      RowText rt;
      rt.line = line_no;
      std::size_t start = colon + 1;
      for (;;) {
        std::size_t comma = line.find(',', start);
        std::string cell = line.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        std::size_t off = 0;
        std::string t = trim(cell, off);
        const int cell_col = static_cast<int>(lead + start + off) + 1;
        if (t.empty()) throw ParseError("empty matrix entry", line_no, cell_col);
        rt.cells.emplace_back(t, cell_col);
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      if (rt.cells.size() != 4)
        throw ParseError("row " + idx + " has " + std::to_string(rt.cells.size()) + " entries, expected 4", line_no,
                         col);
      rows[r] = std::move(rt);
    } else {
      throw ParseError("unknown directive '" + w[0] + "'", line_no, col);
    }
  }
  if (!field) throw ParseError("missing field declaration", line_no, 1);
  if (!have_vars) throw ParseError("missing 'vars x1 x2 x3'", line_no, 1);
  for (int r = 0; r < 4; ++r)
    if (!rows[r]) throw ParseError("missing row " + std::to_string(r), line_no, 1);

  const Field f = field_override ? *field_override : *field;
  const MultiPoly zero(f, VarSet::Plane, 0);
  PolyMatrix4 m{{{zero, zero, zero, zero}, {zero, zero, zero, zero}, {zero, zero, zero, zero}, {zero, zero, zero, zero}}};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      const auto& [t, col] = rows[r]->cells[c];
      try {
        m[r][c] = parse_poly(t, VarSet::Plane, f);
      } catch (const ParseError& e) {
        std::string msg = e.what();
        std::size_t p = msg.find(": ");
        throw ParseError(p == std::string::npos ? msg : msg.substr(p + 2), rows[r]->line, col + e.column() - 1);
      } catch (const std::domain_error& e) {
        throw ParseError(std::string("coefficient not defined in the field: ") + e.what(), rows[r]->line, col);
      }
    }
  return SymDetRep::validate(m);
}

std::string format_rep_file(const SymDetRep& rep, const std::string& comment) {
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << "\n";
  out << "field " << rep.field().name() << "\n";
  out << "vars x1 x2 x3\n";
  for (int r = 0; r < 4; ++r) {
    out << "row " << r << ": ";
    for (int c = 0; c < 4; ++c) out << (c ? ", " : "") << rep.entry(r, c).to_string();
    out << "\n";
  }
  return out.str();
}

}  // namespace cubicplane
