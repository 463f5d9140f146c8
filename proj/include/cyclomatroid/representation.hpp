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

#ifndef CYCLOMATROID_REPRESENTATION_HPP_
#define CYCLOMATROID_REPRESENTATION_HPP_

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cyclomatroid/cyclotomic.hpp"

namespace cyclomatroid {

/// A d x m matrix over Q(zeta_n) whose labeled columns are the elements of a
/// matroid. Every entry carries the same conductor and labels are unique;
/// both are checked on construction.
class Representation {
 public:
  Representation() = default;
  // `entries` is row-major. Empty `labels` means the defaults e1..em.
  Representation(int conductor, std::size_t rows, std::size_t cols,
                 std::vector<CyclotomicNumber> entries,
                 std::vector<std::string> labels = {});

  int conductor() const { return conductor_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const CyclotomicNumber& at(std::size_t row, std::size_t col) const {
    return entries_[row * cols_ + col];
  }
  std::vector<CyclotomicNumber> Column(std::size_t col) const;

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  int conductor_ = 1;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<CyclotomicNumber> entries_;
  std::vector<std::string> labels_;
};

std::vector<std::string> DefaultLabels(std::size_t count);

// Block-diagonal sum. Labels are kept when the two label sets are disjoint and
// renumbered e1..e(m_a+m_b) otherwise. An empty (0 x 0) summand is the
// identity regardless of its conductor.
Representation DirectSum(const Representation& a, const Representation& b);

// Exact rank of the column submatrix, by Gaussian elimination that takes the
// first nonzero entry as pivot.
std::size_t ColumnRank(const Representation& rep, std::span<const std::size_t> columns);

// Representation of the contraction by `contracted` restricted to `kept`:
// the kept columns projected onto a complement of span(contracted), with
// d - rank(contracted) rows. Labels of the kept columns are preserved.
Representation Project(const Representation& rep, std::span<const std::size_t> kept,
                       std::span<const std::size_t> contracted);

// Matrix text format:
//   conductor <n>
//   size <d> <m>
//   labels <m identifiers>      (optional)
//   <d rows of m scalars>
// Blank lines and lines starting with '#' are ignored by the reader.
Representation ParseMatrix(std::string_view text);
std::string FormatMatrix(const Representation& rep);
Representation ReadMatrixFile(const std::filesystem::path& path);
void WriteMatrixFile(const Representation& rep, const std::filesystem::path& path);

}  // namespace cyclomatroid

#endif  // CYCLOMATROID_REPRESENTATION_HPP_
