#include "bredonk/bredon/datum_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "bredonk/errors.hpp"

namespace bredonk {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string unquote(std::string_view s) {
  s = trim(s);
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
  return std::string(s);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GammaCWDatum run() {
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      const auto nl = text_.find('\n', pos);
      std::string_view line = text_.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
      ++line_no_;
      handle(line);
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
    return finish();
  }

 private:
  enum class Section { Header, Cells, Boundary, Matrix };

  struct PendingMatrix {
    std::optional<std::pair<std::size_t, std::size_t>> shape;
    std::vector<std::vector<Integer>> rows;
    int line = 0;
  };

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("line " + std::to_string(line_no_) + ": " + what);
  }

  std::size_t parse_index(std::string_view s) const {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) fail("bad section index '" + std::string(s) + "'");
    return v;
  }

  void handle(std::string_view raw) {
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) return;
    if (line.front() == '[') {
      if (line.back() != ']') fail("unterminated section header");
      open_section(trim(line.substr(1, line.size() - 2)));
      return;
    }
    if (section_ == Section::Matrix) {
      matrix_line(line);
      return;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) fail("expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) fail("empty key");
    switch (section_) {
      case Section::Header: header_entry(key, value); break;
      case Section::Cells: cell_entry(key, value); break;
      case Section::Boundary: boundary_entry(key, value); break;
      case Section::Matrix: break;
    }
  }

  void open_section(std::string_view name) {
    const auto dot = name.find('.');
    if (dot == std::string_view::npos) fail("section '" + std::string(name) + "' needs a dimension");
    const auto kind = name.substr(0, dot);
    index_ = parse_index(name.substr(dot + 1));
    if (kind == "cells") {
      section_ = Section::Cells;
      if (cells_.size() <= index_) cells_.resize(index_ + 1);
    } else if (kind == "boundary") {
      if (index_ == 0) fail("0-cells have no boundary");
      section_ = Section::Boundary;
    } else if (kind == "matrix") {
      if (index_ == 0) fail("matrices are indexed from 1");
      section_ = Section::Matrix;
      if (matrices_.count(index_)) fail("duplicate matrix section");
      matrices_[index_].line = line_no_;
    } else {
      fail("unknown section '" + std::string(kind) + "'");
    }
  }

  void header_entry(const std::string& key, std::string_view value) {
    if (key == "name") {
      datum_.name = unquote(value);
    } else if (key == "flags") {
      for (std::string_view rest = value; !rest.empty();) {
        const auto comma = rest.find(',');
        const auto flag = trim(rest.substr(0, comma));
        if (flag == "snf-equivalent") datum_.snf_equivalent = true;
        else if (!flag.empty()) fail("unknown flag '" + std::string(flag) + "'");
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
      }
    } else {
      fail("unknown header key '" + key + "'");
    }
  }

  void cell_entry(const std::string& key, std::string_view value) {
    try {
      cells_[index_].push_back({key, parse_group_name(unquote(value))});
    } catch (const ParseError& e) {
      fail(e.what());
    }
  }

  void boundary_entry(const std::string& key, std::string_view value) {
    auto& terms = boundary_lines_[index_][key];
    if (boundary_seen_[index_].count(key)) fail("duplicate boundary for '" + key + "'");
    boundary_seen_[index_].insert({key, line_no_});
    for (std::string_view rest = value; !trim(rest).empty();) {
      const auto comma = rest.find(',');
      terms.push_back(term(trim(rest.substr(0, comma))));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }

  BoundaryTerm term(std::string_view t) {
    const auto star = t.find('*');
    const auto colon = t.find(':');
    if (star == std::string_view::npos || colon == std::string_view::npos || colon < star)
      fail("expected '±k * label : spec', got '" + std::string(t) + "'");
    std::string coeff(trim(t.substr(0, star)));
    if (!coeff.empty() && coeff.front() == '+') coeff.erase(0, 1);
    long c = 0;
    auto [ptr, ec] = std::from_chars(coeff.data(), coeff.data() + coeff.size(), c);
    if (coeff.empty() || ec != std::errc() || ptr != coeff.data() + coeff.size())
      fail("bad coefficient '" + coeff + "'");
    const std::string label(trim(t.substr(star + 1, colon - star - 1)));
    if (label.empty()) fail("missing target label");
    try {
      return {c, label, InductionSpec::parse(trim(t.substr(colon + 1)))};
    } catch (const ParseError& e) {
      fail(e.what());
    }
  }

  void matrix_line(std::string_view line) {
    auto& m = matrices_[index_];
    if (line.starts_with("shape")) {
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) fail("expected 'shape = R x C'");
      const auto spec = trim(line.substr(eq + 1));
      const auto x = spec.find('x');
      if (x == std::string_view::npos) fail("expected 'shape = R x C'");
      m.shape = {{parse_index(trim(spec.substr(0, x))), parse_index(trim(spec.substr(x + 1)))}};
      return;
    }
    std::vector<Integer> row;
    std::string token;
    auto flush = [&] {
      if (token.empty()) return;
      Integer v;
      if (v.set_str(token[0] == '+' ? token.substr(1) : token, 10) != 0) fail("bad integer '" + token + "'");
      row.push_back(v);
      token.clear();
    };
    for (char ch : line) {
      if (ch == ' ' || ch == '\t' || ch == ',') flush();
      else token.push_back(ch);
    }
    flush();
    m.rows.push_back(std::move(row));
  }

  GammaCWDatum finish() {
    datum_.cells = cells_;
    // symbolic boundaries, aligned with cell order
    if (!boundary_lines_.empty()) {
      if (!matrices_.empty()) throw ParseError("a datum has either boundary or matrix sections, not both");
      datum_.boundaries.resize(cells_.size());
      for (auto& [n, by_label] : boundary_lines_) {
        if (n >= cells_.size()) throw ParseError("boundary section for dimension " + std::to_string(n) + " without cells");
        auto& out = datum_.boundaries[n];
        out.resize(cells_[n].size());
        std::map<std::string, std::size_t> index;
        for (std::size_t i = 0; i < cells_[n].size(); ++i) index.emplace(cells_[n][i].label, i);
        for (auto& [label, terms] : by_label) {
          auto it = index.find(label);
          if (it == index.end())
            throw ParseError("line " + std::to_string(boundary_seen_[n][label]) + ": boundary for unknown " +
                             std::to_string(n) + "-cell '" + label + "'");
          out[it->second] = std::move(terms);
        }
      }
      trim_boundaries();
    }
    if (!matrices_.empty()) {
      const std::size_t top = matrices_.rbegin()->first;
      datum_.raw_boundaries.resize(top);
      for (auto& [n, m] : matrices_) {
        const std::size_t rows = m.shape ? m.shape->first : m.rows.size();
        std::size_t cols = m.shape ? m.shape->second : (m.rows.empty() ? 0 : m.rows.front().size());
        if (m.rows.size() != rows)
          throw ParseError("line " + std::to_string(m.line) + ": matrix." + std::to_string(n) + " has " +
                           std::to_string(m.rows.size()) + " rows, shape says " + std::to_string(rows));
        std::vector<Integer> entries;
        for (auto& r : m.rows) {
          if (r.size() != cols)
            throw ParseError("line " + std::to_string(m.line) + ": matrix." + std::to_string(n) + " has ragged rows");
          for (auto& v : r) entries.push_back(std::move(v));
        }
        datum_.raw_boundaries[n - 1] = IntMatrix(rows, cols, std::move(entries));
      }
    }
    return datum_;
  }

  // drop trailing empty entries so parse(write(d)) matches constructions that
  // omit boundaries of cells with ∂ = 0
  void trim_boundaries() {
    auto& b = datum_.boundaries;
    for (auto& dim : b)
      while (!dim.empty() && dim.back().empty()) dim.pop_back();
    while (!b.empty() && b.back().empty()) b.pop_back();
  }

  std::string_view text_;
  int line_no_ = 0;
  Section section_ = Section::Header;
  std::size_t index_ = 0;
  GammaCWDatum datum_;
  std::vector<std::vector<Cell>> cells_;
  std::map<std::size_t, std::map<std::string, std::vector<BoundaryTerm>>> boundary_lines_;
  std::map<std::size_t, std::map<std::string, int>> boundary_seen_;
  std::map<std::size_t, PendingMatrix> matrices_;
};

}  // namespace

GammaCWDatum parse_datum(std::string_view text) { return Parser(text).run(); }

GammaCWDatum read_datum_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_datum(buf.str());
}

std::string write_datum(const GammaCWDatum& d) {
  std::ostringstream os;
  if (!d.name.empty()) os << "name = \"" << d.name << "\"\n";
  if (d.snf_equivalent) os << "flags = snf-equivalent\n";
  for (std::size_t n = 0; n < d.cells.size(); ++n) {
    os << "\n[cells." << n << "]\n";
    for (const auto& c : d.cells[n]) os << c.label << " = " << group_name(c.stabiliser) << "\n";
  }
  if (d.raw()) {
    for (std::size_t k = 0; k < d.raw_boundaries.size(); ++k) {
      const auto& m = d.raw_boundaries[k];
      os << "\n[matrix." << k + 1 << "]\n";
      os << "shape = " << m.rows() << " x " << m.cols() << "\n";
      os << m.to_string();
    }
    return os.str();
  }
  for (std::size_t n = 1; n < d.boundaries.size(); ++n) {
    bool header = false;
    for (std::size_t i = 0; i < d.boundaries[n].size(); ++i) {
      const auto& terms = d.boundaries[n][i];
      if (terms.empty()) continue;
      if (!header) {
        os << "\n[boundary." << n << "]\n";
        header = true;
      }
      os << d.cells[n][i].label << " = ";
      for (std::size_t k = 0; k < terms.size(); ++k) {
        if (k) os << ", ";
        os << (terms[k].coefficient >= 0 ? "+" : "") << terms[k].coefficient << " * " << terms[k].target
           << " : " << terms[k].induction.to_string();
      }
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace bredonk
