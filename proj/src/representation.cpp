// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cyclomatroid/representation.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "cyclomatroid/errors.hpp"

namespace cyclomatroid {
namespace {

using Vector = std::vector<CyclotomicNumber>;

// Row-echelon basis built one vector at a time. Every stored vector is scaled
// so that its pivot (first nonzero coordinate) is 1, and has zeros at the
// pivots of all vectors stored before it.
class EchelonBasis {
 public:
  // Reduces v against the basis in place.
  void Reduce(Vector& v) const {
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      const std::size_t p = pivots_[b];
      if (v[p].IsZero()) continue;
      const CyclotomicNumber factor = v[p];
      const Vector& row = basis_[b];
      for (std::size_t i = p; i < v.size(); ++i) {
        if (!row[i].IsZero()) v[i] = v[i] - factor * row[i];
      }
    }
  }

  // Returns true when v was independent of the basis (and is now part of it).
  bool Add(Vector v) {
    Reduce(v);
    std::size_t p = 0;
    while (p < v.size() && v[p].IsZero()) ++p;
    if (p == v.size()) return false;
    const CyclotomicNumber scale = v[p].Inverse();
    for (std::size_t i = p; i < v.size(); ++i) {
      if (!v[i].IsZero()) v[i] = v[i] * scale;
    }
    basis_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  std::size_t size() const { return basis_.size(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> Tokenize(const std::string& line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

std::size_t ParseCount(const Token& token, std::size_t line) {
  const std::string& t = token.text;
  if (t.empty() || t.size() > 9) throw ParseError("expected a count, got '" + t + "'", line, token.column);
  for (char c : t) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("expected a count, got '" + t + "'", line, token.column);
    }
  }
  return std::stoul(t);
}

}  // namespace

std::vector<std::string> DefaultLabels(std::size_t count) {
  std::vector<std::string> labels;
  labels.reserve(count);
  for (std::size_t i = 0; i < count; ++i) labels.push_back("e" + std::to_string(i + 1));
  return labels;
}

Representation::Representation(int conductor, std::size_t rows, std::size_t cols,
                               std::vector<CyclotomicNumber> entries,
                               std::vector<std::string> labels)
    : conductor_(conductor),
      rows_(rows),
      cols_(cols),
      entries_(std::move(entries)),
      labels_(std::move(labels)) {
  if (conductor < 1) throw UsageError("conductor must be positive");
  if (entries_.size() != rows * cols) {
    throw UsageError("representation needs " + std::to_string(rows * cols) +
                     " entries, got " + std::to_string(entries_.size()));
  }
  for (const CyclotomicNumber& x : entries_) {
    if (x.conductor() != conductor) {
      throw UsageError("entry with conductor " + std::to_string(x.conductor()) +
                       " in a conductor-" + std::to_string(conductor) + " matrix");
    }
  }
  if (labels_.empty()) labels_ = DefaultLabels(cols);
  if (labels_.size() != cols) throw UsageError("label count does not match column count");
  std::set<std::string> seen;
  for (const std::string& label : labels_) {
    if (label.empty()) throw UsageError("empty label");
    for (char c : label) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        throw UsageError("label '" + label + "' contains whitespace");
      }
    }
    if (!seen.insert(label).second) throw UsageError("duplicate label '" + label + "'");
  }
}

std::vector<CyclotomicNumber> Representation::Column(std::size_t col) const {
  std::vector<CyclotomicNumber> column;
  column.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) column.push_back(at(r, col));
  return column;
}

Representation DirectSum(const Representation& a, const Representation& b) {
  if (a.rows() == 0 && a.cols() == 0) return b;
  if (b.rows() == 0 && b.cols() == 0) return a;
  if (a.conductor() != b.conductor()) {
    throw UsageError("direct sum of conductor " + std::to_string(a.conductor()) +
                     " and conductor " + std::to_string(b.conductor()));
  }
  const int n = a.conductor();
  const std::size_t rows = a.rows() + b.rows();
  const std::size_t cols = a.cols() + b.cols();
  std::vector<CyclotomicNumber> entries(rows * cols, CyclotomicNumber::Zero(n));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) entries[r * cols + c] = a.at(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c)
      entries[(a.rows() + r) * cols + a.cols() + c] = b.at(r, c);

  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  std::set<std::string> distinct(labels.begin(), labels.end());
  if (distinct.size() != labels.size()) labels = DefaultLabels(cols);
  return Representation(n, rows, cols, std::move(entries), std::move(labels));
}

std::size_t ColumnRank(const Representation& rep, std::span<const std::size_t> columns) {
  EchelonBasis basis;
  for (std::size_t c : columns) {
    if (basis.size() == rep.rows()) break;
    basis.Add(rep.Column(c));
  }
  return basis.size();
}

Representation Project(const Representation& rep, std::span<const std::size_t> kept,
                       std::span<const std::size_t> contracted) {
  EchelonBasis basis;
  for (std::size_t c : contracted) basis.Add(rep.Column(c));
  std::vector<bool> is_pivot(rep.rows(), false);
  for (std::size_t p : basis.pivots()) is_pivot[p] = true;

  // Reduction against span(contracted) is a linear map whose kernel is that
  // span; the non-pivot coordinates of the residue are the quotient image.
  const std::size_t rows = rep.rows() - basis.size();
  std::vector<CyclotomicNumber> entries(rows * kept.size(),
                                        CyclotomicNumber::Zero(rep.conductor()));
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < kept.size(); ++k) {
    Vector v = rep.Column(kept[k]);
    basis.Reduce(v);
    std::size_t out_row = 0;
    for (std::size_t r = 0; r < rep.rows(); ++r) {
      if (is_pivot[r]) continue;
      entries[out_row * kept.size() + k] = v[r];
      ++out_row;
    }
    labels.push_back(rep.labels()[kept[k]]);
  }
  return Representation(rep.conductor(), rows, kept.size(), std::move(entries),
                        std::move(labels));
}

Representation ParseMatrix(std::string_view text) {
  std::vector<Line> lines;
  {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
      ++number;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      auto tokens = Tokenize(raw);
      if (tokens.empty() || tokens.front().text.front() == '#') continue;
      lines.push_back({number, std::move(tokens)});
    }
  }
  std::size_t cursor = 0;
  auto expect_line = [&](const char* what) -> const Line& {
    if (cursor >= lines.size()) {
      std::size_t last = lines.empty() ? 1 : lines.back().number + 1;
      throw ParseError(std::string("unexpected end of input, expected ") + what, last, 1);
    }
    return lines[cursor++];
  };

  const Line& header = expect_line("'conductor <n>'");
  if (header.tokens[0].text != "conductor" || header.tokens.size() != 2) {
    throw ParseError("expected 'conductor <n>'", header.number, header.tokens[0].column);
  }
  const std::size_t conductor = ParseCount(header.tokens[1], header.number);
  if (conductor < 1) {
    throw ParseError("conductor must be positive", header.number, header.tokens[1].column);
  }

  const Line& size = expect_line("'size <d> <m>'");
  if (size.tokens[0].text != "size" || size.tokens.size() != 3) {
    throw ParseError("expected 'size <d> <m>'", size.number, size.tokens[0].column);
  }
  const std::size_t rows = ParseCount(size.tokens[1], size.number);
  const std::size_t cols = ParseCount(size.tokens[2], size.number);

  std::vector<std::string> labels;
  if (cursor < lines.size() && lines[cursor].tokens[0].text == "labels") {
    const Line& line = lines[cursor++];
    if (line.tokens.size() != cols + 1) {
      throw ParseError("expected " + std::to_string(cols) + " labels, got " +
                           std::to_string(line.tokens.size() - 1),
                       line.number, line.tokens[0].column);
    }
    std::set<std::string> seen;
    for (std::size_t i = 1; i < line.tokens.size(); ++i) {
      if (!seen.insert(line.tokens[i].text).second) {
        throw ParseError("duplicate label '" + line.tokens[i].text + "'", line.number,
                         line.tokens[i].column);
      }
      labels.push_back(line.tokens[i].text);
    }
  }

  std::vector<CyclotomicNumber> entries;
  entries.reserve(rows * cols);
  if (cols > 0) {
    for (std::size_t r = 0; r < rows; ++r) {
      const Line& line = expect_line("a matrix row");
      if (line.tokens.size() != cols) {
        throw ParseError("expected " + std::to_string(cols) + " entries, got " +
                             std::to_string(line.tokens.size()),
                         line.number, line.tokens.front().column);
      }
      for (const Token& token : line.tokens) {
        try {
          entries.push_back(CyclotomicNumber::Parse(token.text, static_cast<int>(conductor)));
        } catch (const ParseError& e) {
          std::string message = e.what();
          message = message.substr(message.find(": ") + 2);
          throw ParseError("bad scalar '" + token.text + "': " + message, line.number,
                           token.column + e.column() - 1);
        }
      }
    }
  }
  if (cursor < lines.size()) {
    throw ParseError("unexpected trailing content", lines[cursor].number,
                     lines[cursor].tokens[0].column);
  }
  return Representation(static_cast<int>(conductor), rows, cols, std::move(entries),
                        std::move(labels));
}

std::string FormatMatrix(const Representation& rep) {
  std::ostringstream out;
  out << "conductor " << rep.conductor() << "\n";
  out << "size " << rep.rows() << " " << rep.cols() << "\n";
  out << "labels";
  for (const std::string& label : rep.labels()) out << " " << label;
  out << "\n";
  if (rep.cols() > 0) {
    for (std::size_t r = 0; r < rep.rows(); ++r) {
      for (std::size_t c = 0; c < rep.cols(); ++c) {
        if (c > 0) out << " ";
        out << rep.at(r, c).ToString();
      }
      out << "\n";
    }
  }
  return out.str();
}

Representation ReadMatrixFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'", 0, 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseMatrix(buffer.str());
}

void WriteMatrixFile(const Representation& rep, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path.string() + "'");
  out << FormatMatrix(rep);
}

}  // namespace cyclomatroid
