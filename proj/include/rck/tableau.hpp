#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rck/partition.hpp"

namespace rck {

/// Letters are nonzero ints.  Type A uses 1..n+1; type D additionally uses
/// barred letters stored as negatives, -k meaning k-bar.
using Letter = int;
using Word = std::vector<Letter>;

/// Orders an alphabet of letters.  Type A is the natural order on positive
/// ints.  Type D orders 1 < ... < n < n-bar < ... < 1-bar except that n and
/// n-bar are incomparable.
class LetterOrder {
public:
  /// Natural order on 1..m.
  static LetterOrder type_a();
  /// D_n order with incomparable n, n-bar.
  static LetterOrder type_d(int n);

  /// Position in the linear extension used for sorting and display.
  int key(Letter x) const;
  bool less(Letter a, Letter b) const;
  bool less_equal(Letter a, Letter b) const;
  /// True for the type D pair {n, n-bar}.
  bool incomparable(Letter a, Letter b) const;

private:
  int rank_n_ = 0;  // 0 marks the type A order
};

/// Semistandard tableau, possibly skew.  Rows are stored top to bottom; row i
/// of a skew tableau holds only the cells right of inner[i].  Cell addresses
/// in the public interface are 1-based (row, column) matching the usual
/// pictures.
class Tableau {
public:
  Tableau() = default;
  Tableau(std::vector<std::vector<Letter>> rows, Partition inner = {});

  static Tableau single(Letter a) {
    return Tableau(std::vector<std::vector<Letter>>{{a}});
  }

  const std::vector<std::vector<Letter>>& rows() const { return rows_; }
  const Partition& inner() const { return inner_; }
  Partition shape() const;
  int cells() const;
  bool empty() const { return rows_.empty(); }

  Letter at(int row, int col) const;  // 1-based, col counted from the wall
  bool has_cell(int row, int col) const;

  /// Row word: rows bottom to top, each left to right.
  Word row_word() const;

  /// Weakly increasing rows, strictly increasing columns under the given
  /// order; skew inner shape contained in the outer shape.
  bool is_semistandard(const LetterOrder& order = LetterOrder::type_a()) const;

  bool operator==(const Tableau& o) const = default;

  /// Text form "1,1/2,-5": rows joined by '/', letters by ','.
  std::string str() const;
  static Tableau parse(const std::string& text);

private:
  std::vector<std::vector<Letter>> rows_;
  Partition inner_;
};

/// Schensted row insertion of one letter; returns the (row, col) of the new
/// cell.  Straight shapes only.
std::pair<int, int> row_insert_letter(Tableau& t, Letter a,
                                      const LetterOrder& order =
                                          LetterOrder::type_a());

/// Inserts every letter of w in order.
Tableau row_insert(Tableau t, const Word& w,
                   const LetterOrder& order = LetterOrder::type_a());

/// Inverse row insertion starting from the removable corner at (row, col),
/// 1-based.  Returns the shrunk tableau and the bumped-out letter.
std::pair<Tableau, Letter> inverse_row_insert(const Tableau& t, int row,
                                              int col,
                                              const LetterOrder& order =
                                                  LetterOrder::type_a());

/// Prefix condition #(j) >= #(j+1) for all j, every prefix.
bool is_yamanouchi(const Word& w);

std::string word_str(const Word& w);

}  // namespace rck
