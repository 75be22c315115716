#include <algorithm>
#include <sstream>

#include "stonework/error.hpp"
#include "stonework/zhomology.hpp"

namespace stonework::zhomology {

namespace {

template <class R>
auto find_col(R& row, std::size_t c) {
  return std::lower_bound(row.begin(), row.end(), c, [](const IntMatrix::Entry& e, std::size_t col) {
    return e.first < col;
  });
}

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(i, 1);
  return m;
}

IntMatrix IntMatrix::from_dense(const std::vector<std::vector<Int>>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("ragged dense matrix");
    for (std::size_t c = 0; c < cols; ++c)
      if (rows[r][c] != 0) m.data_[r].emplace_back(c, rows[r][c]);
  }
  return m;
}

IntMatrix IntMatrix::from_rows(std::size_t cols, std::vector<Row> rows) {
  IntMatrix m;
  m.cols_ = cols;
  m.data_ = std::move(rows);
  for (Row& row : m.data_) {
    std::sort(row.begin(), row.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    Row merged;
    for (Entry& e : row) {
      if (e.first >= cols) throw DimensionMismatch("column index out of range");
      if (!merged.empty() && merged.back().first == e.first)
        merged.back().second += e.second;
      else
        merged.push_back(std::move(e));
    }
    std::erase_if(merged, [](const Entry& e) { return e.second == 0; });
    row = std::move(merged);
  }
  return m;
}

Int IntMatrix::get(std::size_t r, std::size_t c) const {
  const Row& row = data_.at(r);
  auto it = find_col(row, c);
  return it != row.end() && it->first == c ? it->second : Int(0);
}

void IntMatrix::set(std::size_t r, std::size_t c, const Int& v) {
  if (c >= cols_) throw DimensionMismatch("column index out of range");
  Row& row = data_.at(r);
  auto it = find_col(row, c);
  bool present = it != row.end() && it->first == c;
  if (v == 0) {
    if (present) row.erase(it);
  } else if (present) {
    it->second = v;
  } else {
    row.insert(it, Entry{c, v});
  }
}

void IntMatrix::add(std::size_t r, std::size_t c, const Int& v) { set(r, c, get(r, c) + v); }

std::size_t IntMatrix::nnz() const {
  std::size_t n = 0;
  for (const Row& row : data_) n += row.size();
  return n;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r)
    for (const auto& [c, v] : data_[r]) t.data_[c].emplace_back(r, v);
  return t;
}

IntMatrix IntMatrix::row_slice(std::size_t begin, std::size_t end) const {
  if (begin > end || end > rows()) throw DimensionMismatch("row slice out of range");
  IntMatrix m;
  m.cols_ = cols_;
  m.data_.assign(data_.begin() + static_cast<std::ptrdiff_t>(begin), data_.begin() + static_cast<std::ptrdiff_t>(end));
  return m;
}

IntMatrix IntMatrix::col_slice(std::size_t begin, std::size_t end) const {
  if (begin > end || end > cols_) throw DimensionMismatch("column slice out of range");
  IntMatrix m(rows(), end - begin);
  for (std::size_t r = 0; r < rows(); ++r)
    for (const auto& [c, v] : data_[r])
      if (c >= begin && c < end) m.data_[r].emplace_back(c - begin, v);
  return m;
}

IntMatrix IntMatrix::hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("hstack of matrices with different row counts");
  IntMatrix m(a.rows(), a.cols_ + b.cols_);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    m.data_[r] = a.data_[r];
    for (const auto& [c, v] : b.data_[r]) m.data_[r].emplace_back(c + a.cols_, v);
  }
  return m;
}

std::vector<std::vector<Int>> IntMatrix::to_dense() const {
  std::vector<std::vector<Int>> out(rows(), std::vector<Int>(cols_));
  for (std::size_t r = 0; r < rows(); ++r)
    for (const auto& [c, v] : data_[r]) out[r][c] = v;
  return out;
}

std::string IntMatrix::dump() const {
  std::ostringstream out;
  out << rows() << ' ' << cols_ << '\n';
  for (const auto& row : to_dense()) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? " " : "") << row[c];
    out << '\n';
  }
  return out.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows()) throw DimensionMismatch("product of " + std::to_string(a.rows()) + "x" +
                                                   std::to_string(a.cols_) + " and " + std::to_string(b.rows()) +
                                                   "x" + std::to_string(b.cols_));
  IntMatrix m(a.rows(), b.cols_);
  std::vector<Int> acc(b.cols_);
  std::vector<char> touched(b.cols_, 0);
  std::vector<std::size_t> cols;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    cols.clear();
    for (const auto& [k, av] : a.data_[r]) {
      for (const auto& [c, bv] : b.data_[k]) {
        if (!touched[c]) {
          touched[c] = 1;
          cols.push_back(c);
          acc[c] = 0;
        }
        acc[c] += av * bv;
      }
    }
    std::sort(cols.begin(), cols.end());
    for (std::size_t c : cols) {
      touched[c] = 0;
      if (acc[c] != 0) m.data_[r].emplace_back(c, acc[c]);
    }
  }
  return m;
}

std::string AbInvariants::to_string() const {
  std::string out;
  if (rank == 1) out = "Z";
  if (rank > 1) out = "Z^" + std::to_string(rank);
  for (const Int& t : torsion) out += (out.empty() ? "" : " + ") + std::string("Z/") + t.str();
  return out.empty() ? "0" : out;
}

}  // namespace stonework::zhomology
