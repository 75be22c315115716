#include "smith.hpp"

#include <algorithm>
#include <set>

#include "stonework/error.hpp"

namespace stonework::zhomology {

namespace {

using Row = IntMatrix::Row;
using Entry = IntMatrix::Entry;

Row combine(const Row& a, const Int& ca, const Row& b, const Int& cb) {
  Row out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    Int v;
    std::size_t c;
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      c = ia->first;
      v = ca * ia->second;
      ++ia;
    } else if (ia == a.end() || ib->first < ia->first) {
      c = ib->first;
      v = cb * ib->second;
      ++ib;
    } else {
      c = ia->first;
      v = ca * ia->second + cb * ib->second;
      ++ia;
      ++ib;
    }
    if (v != 0) out.emplace_back(c, std::move(v));
  }
  return out;
}

const Int* lookup(const Row& row, std::size_t c) {
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.first < col; });
  return it != row.end() && it->first == c ? &it->second : nullptr;
}

Row unit_row(std::size_t i) { return Row{Entry{i, 1}}; }

struct ExtGcd {
  Int g, s, t;
};

ExtGcd ext_gcd(const Int& a, const Int& b) {
  Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

class Eliminator {
 public:
  Eliminator(const IntMatrix& m, bool track_u, bool track_v)
      : rows_(m.rows()), cols_(m.cols()), track_u_(track_u), track_v_(track_v), a_(m.rows()), where_(m.cols()) {
    for (std::size_t r = 0; r < rows_; ++r) {
      a_[r] = m.row(r);
      for (const auto& e : a_[r]) where_[e.first].insert(r);
    }
    if (track_u_) {
      u_.resize(rows_);
      for (std::size_t r = 0; r < rows_; ++r) u_[r] = unit_row(r);
    }
    if (track_v_) {
      vt_.resize(cols_);
      vinv_.resize(cols_);
      for (std::size_t c = 0; c < cols_; ++c) vt_[c] = vinv_[c] = unit_row(c);
    }
  }

  void run() {
    std::vector<std::size_t> active;
    for (std::size_t r = 0; r < rows_; ++r)
      if (!a_[r].empty()) active.push_back(r);
    std::vector<char> done(rows_, 0);
    while (true) {
      std::erase_if(active, [&](std::size_t r) { return done[r] || a_[r].empty(); });
      auto pivot = choose(active);
      if (!pivot) break;
      auto [r, c] = *pivot;
      reduce(r, c);
      pivots_.emplace_back(r, c);
      done[r] = 1;
    }
  }

  SmithForm finish(bool chain) {
    std::size_t k = pivots_.size();
    std::vector<std::size_t> rowperm, colperm;
    std::vector<char> used_r(rows_, 0), used_c(cols_, 0);
    for (auto [r, c] : pivots_) {
      rowperm.push_back(r);
      colperm.push_back(c);
      used_r[r] = used_c[c] = 1;
    }
    for (std::size_t r = 0; r < rows_; ++r)
      if (!used_r[r]) rowperm.push_back(r);
    for (std::size_t c = 0; c < cols_; ++c)
      if (!used_c[c]) colperm.push_back(c);

    std::vector<Int> d(k);
    for (std::size_t t = 0; t < k; ++t) d[t] = *lookup(a_[pivots_[t].first], pivots_[t].second);

    std::vector<Row> u, vt, vinv;
    if (track_u_)
      for (std::size_t t = 0; t < rows_; ++t) u.push_back(std::move(u_[rowperm[t]]));
    if (track_v_) {
      for (std::size_t t = 0; t < cols_; ++t) {
        vt.push_back(std::move(vt_[colperm[t]]));
        vinv.push_back(std::move(vinv_[colperm[t]]));
      }
    }
    for (std::size_t t = 0; t < k; ++t) {
      if (d[t] < 0) {
        d[t] = -d[t];
        if (track_u_)
          for (auto& e : u[t]) e.second = -e.second;
      }
    }

    if (chain) {
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
          if (d[j] % d[i] == 0) continue;
          const Int a = d[i], b = d[j];
          auto [g, s, t] = ext_gcd(a, b);
          Int bg = b / g, ag = a / g;
          if (track_u_) {
            Row ui = combine(u[i], s, u[j], t);
            Row uj = combine(u[i], -bg, u[j], ag);
            u[i] = std::move(ui);
            u[j] = std::move(uj);
          }
          if (track_v_) {
            Row vi = combine(vt[i], 1, vt[j], 1);
            Row vj = combine(vt[i], -t * bg, vt[j], s * ag);
            vt[i] = std::move(vi);
            vt[j] = std::move(vj);
            Row wi = combine(vinv[i], s * ag, vinv[j], t * bg);
            Row wj = combine(vinv[i], -1, vinv[j], 1);
            vinv[i] = std::move(wi);
            vinv[j] = std::move(wj);
          }
          d[i] = g;
          d[j] = a * bg;
        }
      }
    }

    SmithForm out;
    out.rank = k;
    out.d = IntMatrix(rows_, cols_);
    for (std::size_t t = 0; t < k; ++t) out.d.set(t, t, d[t]);
    out.diagonal = std::move(d);
    if (track_u_) out.u = IntMatrix::from_rows(rows_, std::move(u));
    if (track_v_) {
      out.v = IntMatrix::from_rows(cols_, std::move(vt)).transpose();
      out.v_inv = IntMatrix::from_rows(cols_, std::move(vinv));
    }
    return out;
  }

 private:
  std::optional<std::pair<std::size_t, std::size_t>> choose(const std::vector<std::size_t>& active) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Int best_abs;
    std::size_t best_cost = 0;
    for (std::size_t r : active) {
      std::size_t row_cost = a_[r].size() - 1;
      for (const auto& [c, v] : a_[r]) {
        Int av = boost::multiprecision::abs(v);
        std::size_t cost = row_cost * (where_[c].size() - 1);
        if (!best || av < best_abs || (av == best_abs && cost < best_cost)) {
          best = {r, c};
          best_abs = av;
          best_cost = cost;
          if (best_abs == 1 && best_cost == 0) return best;
        }
      }
    }
    return best;
  }

  // a_[i] -= q * a_[j]
  void row_op(std::size_t i, std::size_t j, const Int& q) {
    Row updated = combine(a_[i], 1, a_[j], -q);
    auto io = a_[i].begin();
    auto in = updated.begin();
    while (io != a_[i].end() || in != updated.end()) {
      if (in == updated.end() || (io != a_[i].end() && io->first < in->first)) {
        where_[io->first].erase(i);
        ++io;
      } else if (io == a_[i].end() || in->first < io->first) {
        where_[in->first].insert(i);
        ++in;
      } else {
        ++io;
        ++in;
      }
    }
    a_[i] = std::move(updated);
    if (track_u_) u_[i] = combine(u_[i], 1, u_[j], -q);
  }

  // column j -= q * column c, where column c is zero outside row r.
  void col_op(std::size_t r, std::size_t j, std::size_t c, const Int& q) {
    Row& row = a_[r];
    Int updated = *lookup(row, j) - q * *lookup(row, c);
    auto it = std::lower_bound(row.begin(), row.end(), j, [](const Entry& e, std::size_t col) { return e.first < col; });
    if (updated == 0) {
      row.erase(it);
      where_[j].erase(r);
    } else {
      it->second = std::move(updated);
    }
    if (track_v_) {
      vt_[j] = combine(vt_[j], 1, vt_[c], -q);
      vinv_[c] = combine(vinv_[c], 1, vinv_[j], q);
    }
  }

  void reduce(std::size_t& r, std::size_t& c) {
    while (true) {
      {
        Int p = *lookup(a_[r], c);
        std::vector<std::size_t> others;
        for (std::size_t i : where_[c])
          if (i != r) others.push_back(i);
        for (std::size_t i : others) row_op(i, r, *lookup(a_[i], c) / p);
      }
      if (where_[c].size() > 1) {
        std::size_t next = r;
        Int smallest;
        for (std::size_t i : where_[c]) {
          Int av = boost::multiprecision::abs(*lookup(a_[i], c));
          if (i != r && (next == r || av < smallest)) {
            next = i;
            smallest = av;
          }
        }
        r = next;
        continue;
      }
      {
        Int p = *lookup(a_[r], c);
        std::vector<std::pair<std::size_t, Int>> others;
        for (const auto& [j, v] : a_[r])
          if (j != c) others.emplace_back(j, v / p);
        for (const auto& [j, q] : others) col_op(r, j, c, q);
      }
      if (a_[r].size() > 1) {
        std::size_t next = c;
        Int smallest;
        for (const auto& [j, v] : a_[r]) {
          Int av = boost::multiprecision::abs(v);
          if (j != c && (next == c || av < smallest)) {
            next = j;
            smallest = av;
          }
        }
        c = next;
        continue;
      }
      return;
    }
  }

  std::size_t rows_, cols_;
  bool track_u_, track_v_;
  std::vector<Row> a_;
  std::vector<std::set<std::size_t>> where_;
  std::vector<Row> u_, vt_, vinv_;
  std::vector<std::pair<std::size_t, std::size_t>> pivots_;
};

}  // namespace

namespace detail {

SmithForm smith(const IntMatrix& m, bool track_u, bool track_v, bool chain) {
  Eliminator e(m, track_u, track_v);
  e.run();
  return e.finish(chain);
}

IntMatrix kernel_basis(const SmithForm& s) { return s.v.col_slice(s.rank, s.v.cols()); }

IntMatrix kernel_coordinates(const SmithForm& s) { return s.v_inv.row_slice(s.rank, s.v_inv.rows()); }

}  // namespace detail

SmithForm snf(const IntMatrix& m) { return detail::smith(m, true, true); }

std::vector<Int> invariant_factors(const IntMatrix& m) { return detail::smith(m, false, false).diagonal; }

std::size_t rank(const IntMatrix& m) { return detail::smith(m, false, false, false).rank; }

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  std::size_t n = m.rows();
  auto a = m.to_dense();
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return n == 0 ? Int(1) : sign * a[n - 1][n - 1];
}

}  // namespace stonework::zhomology
