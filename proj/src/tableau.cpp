#include "rck/tableau.hpp"

#include <sstream>
#include <stdexcept>

namespace rck {

std::vector<Partition> partitions_of(int n, int max_part) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int cap) -> void {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, cap); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, max_part > 0 ? max_part : n);
  return out;
}

LetterOrder LetterOrder::type_a() { return LetterOrder{}; }

LetterOrder LetterOrder::type_d(int n) {
  LetterOrder o;
  o.rank_n_ = n;
  return o;
}

int LetterOrder::key(Letter x) const {
  if (x == 0) throw std::invalid_argument("letter 0");
  if (rank_n_ == 0) {
    if (x < 0) throw std::invalid_argument("barred letter in type A order");
    return x;
  }
  if (x > 0) return x;           // 1..n
  return 2 * rank_n_ + 1 + x;    // -k maps to 2n+1-k
}

bool LetterOrder::incomparable(Letter a, Letter b) const {
  return rank_n_ != 0 && a == -b && std::abs(a) == rank_n_;
}

bool LetterOrder::less(Letter a, Letter b) const {
  if (incomparable(a, b)) return false;
  return key(a) < key(b);
}

bool LetterOrder::less_equal(Letter a, Letter b) const {
  if (incomparable(a, b)) return false;
  return key(a) <= key(b);
}

Tableau::Tableau(std::vector<std::vector<Letter>> rows, Partition inner)
    : rows_(std::move(rows)), inner_(std::move(inner)) {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  for (auto& r : rows_)
    for (Letter x : r)
      if (x == 0) throw std::invalid_argument("Tableau: letter 0");
}

Partition Tableau::shape() const {
  std::vector<int> s;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    s.push_back(inner_[i] + static_cast<int>(rows_[i].size()));
  while (!s.empty() && s.back() == 0) s.pop_back();
  return Partition(std::move(s));
}

int Tableau::cells() const {
  int c = 0;
  for (auto& r : rows_) c += static_cast<int>(r.size());
  return c;
}

bool Tableau::has_cell(int row, int col) const {
  if (row < 1 || row > static_cast<int>(rows_.size())) return false;
  int off = inner_[row - 1];
  return col > off && col <= off + static_cast<int>(rows_[row - 1].size());
}

Letter Tableau::at(int row, int col) const {
  if (!has_cell(row, col)) throw std::out_of_range("Tableau::at");
  return rows_[row - 1][col - 1 - inner_[row - 1]];
}

Word Tableau::row_word() const {
  Word w;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it)
    w.insert(w.end(), it->begin(), it->end());
  return w;
}

bool Tableau::is_semistandard(const LetterOrder& order) const {
  Partition outer = shape();
  if (!outer.contains(inner_)) return false;
  for (std::size_t i = 0; i + 1 < rows_.size(); ++i)
    if (inner_[i] < inner_[i + 1]) return false;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j + 1 < rows_[i].size(); ++j)
      if (!order.less_equal(rows_[i][j], rows_[i][j + 1])) return false;
  }
  for (int r = 1; r + 1 <= static_cast<int>(rows_.size()); ++r)
    for (int c = inner_[r] + 1; c <= outer[r]; ++c)
      if (has_cell(r, c) && has_cell(r + 1, c) &&
          !order.less(at(r, c), at(r + 1, c)))
        return false;
  return true;
}

std::string Tableau::str() const {
  std::string s;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) s += "/";
    for (int k = 0; k < inner_[i]; ++k) s += ".,";
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (j) s += ",";
      s += std::to_string(rows_[i][j]);
    }
  }
  return s;
}

Tableau Tableau::parse(const std::string& text) {
  std::vector<std::vector<Letter>> rows;
  std::vector<int> inner;
  std::stringstream ss(text);
  std::string rowtext;
  while (std::getline(ss, rowtext, '/')) {
    std::vector<Letter> row;
    int off = 0;
    std::stringstream rs(rowtext);
    std::string tok;
    while (std::getline(rs, tok, ',')) {
      if (tok == ".") {
        if (!row.empty())
          throw std::invalid_argument("tableau parse: gap after letters");
        ++off;
      } else if (!tok.empty()) {
        row.push_back(std::stoi(tok));
      }
    }
    rows.push_back(std::move(row));
    inner.push_back(off);
  }
  while (!inner.empty() && inner.back() == 0 && rows.back().empty()) {
    inner.pop_back();
    rows.pop_back();
  }
  bool skew = false;
  for (int k : inner) skew |= k > 0;
  return skew ? Tableau(std::move(rows), Partition::sorted(std::move(inner)))
              : Tableau(std::move(rows));
}

std::pair<int, int> row_insert_letter(Tableau& t, Letter a,
                                      const LetterOrder& order) {
  if (!t.inner().empty())
    throw std::invalid_argument("row_insert: skew tableau");
  auto rows = t.rows();
  Letter carry = a;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto& row = rows[i];
    // leftmost entry strictly larger than the carry
    std::size_t j = 0;
    while (j < row.size() && order.less_equal(row[j], carry)) ++j;
    if (j == row.size()) {
      row.push_back(carry);
      int ncols = static_cast<int>(row.size());
      t = Tableau(std::move(rows));
      return {static_cast<int>(i) + 1, ncols};
    }
    std::swap(carry, row[j]);
  }
  rows.push_back({carry});
  int nrows = static_cast<int>(rows.size());
  t = Tableau(std::move(rows));
  return {nrows, 1};
}

Tableau row_insert(Tableau t, const Word& w, const LetterOrder& order) {
  for (Letter a : w) row_insert_letter(t, a, order);
  return t;
}

std::pair<Tableau, Letter> inverse_row_insert(const Tableau& t, int row,
                                              int col,
                                              const LetterOrder& order) {
  auto rows = t.rows();
  int r = row - 1;
  if (r < 0 || r >= static_cast<int>(rows.size()) ||
      col != static_cast<int>(rows[r].size()) ||
      (r + 1 < static_cast<int>(rows.size()) &&
       rows[r + 1].size() >= rows[r].size()))
    throw std::invalid_argument("inverse_row_insert: not a removable corner");
  Letter carry = rows[r].back();
  rows[r].pop_back();
  for (int i = r - 1; i >= 0; --i) {
    auto& rw = rows[i];
    // rightmost entry strictly smaller than the carry
    int j = static_cast<int>(rw.size()) - 1;
    while (j >= 0 && !order.less(rw[j], carry)) --j;
    if (j < 0)
      throw std::invalid_argument("inverse_row_insert: malformed tableau");
    std::swap(carry, rw[j]);
  }
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  return {Tableau(std::move(rows)), carry};
}

bool is_yamanouchi(const Word& w) {
  std::vector<int> count;
  for (Letter x : w) {
    if (x <= 0) return false;
    if (static_cast<std::size_t>(x) > count.size()) count.resize(x, 0);
    ++count[x - 1];
    if (x > 1 && count[x - 1] > count[x - 2]) return false;
  }
  return true;
}

std::string word_str(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s;
}

}  // namespace rck
