#include "rck/crystal_a.hpp"

#include <sstream>
#include <stdexcept>

namespace rck {

std::string PathA::str() const {
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += " (x) ";
    s += factors[i].str();
  }
  return s;
}

PathA PathA::parse(const std::string& text, int n) {
  PathA p;
  p.n = n;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find("(x)", pos);
    std::string piece = text.substr(
        pos, next == std::string::npos ? std::string::npos : next - pos);
    while (!piece.empty() && (piece.front() == ' ')) piece.erase(0, 1);
    while (!piece.empty() && (piece.back() == ' ')) piece.pop_back();
    if (!piece.empty()) p.factors.push_back(Tableau::parse(piece));
    if (next == std::string::npos) break;
    pos = next + 3;
  }
  if (p.factors.empty()) throw std::invalid_argument("empty path");
  return p;
}

namespace crystal_a {

Tableau classical_hw(int r, int s) {
  std::vector<std::vector<Letter>> rows(r);
  for (int i = 0; i < r; ++i) rows[i].assign(s, i + 1);
  return Tableau(std::move(rows));
}

bool valid_element(const Tableau& t, int n) {
  if (t.empty()) return false;
  auto shape = t.shape();
  for (std::size_t i = 0; i < shape.rows(); ++i)
    if (shape[i] != shape[0]) return false;
  for (auto& row : t.rows())
    for (Letter x : row)
      if (x < 1 || x > n + 1) return false;
  return t.is_semistandard();
}

std::vector<Tableau> elements(int r, int s, int n) {
  std::vector<Tableau> out;
  std::vector<std::vector<Letter>> rows(r, std::vector<Letter>(s, 0));
  auto rec = [&](auto&& self, int cell) -> void {
    if (cell == r * s) {
      out.emplace_back(rows);
      return;
    }
    int i = cell / s, j = cell % s;
    int lo = 1;
    if (j > 0) lo = std::max(lo, rows[i][j - 1]);
    if (i > 0) lo = std::max(lo, rows[i - 1][j] + 1);
    for (int v = lo; v <= n + 1; ++v) {
      rows[i][j] = v;
      self(self, cell + 1);
    }
  };
  rec(rec, 0);
  return out;
}

namespace {

// Far-Eastern reading: columns right to left, each top to bottom.  Atoms
// carry their cell so the selected letter can be modified in place.
struct Atom {
  int factor;
  int row, col;  // 1-based cell
  Letter letter;
};

std::vector<Atom> reading(const PathA& p) {
  std::vector<Atom> atoms;
  for (std::size_t f = 0; f < p.factors.size(); ++f) {
    const Tableau& t = p.factors[f];
    Partition sh = t.shape();
    int width = sh[0];
    for (int c = width; c >= 1; --c)
      for (int r = 1; r <= static_cast<int>(sh.rows()); ++r)
        if (t.has_cell(r, c))
          atoms.push_back({static_cast<int>(f), r, c, t.at(r, c)});
  }
  return atoms;
}

}  // namespace

std::optional<PathA> kashiwara(const PathA& p, Op op, int a) {
  if (a < 1 || a > p.n) throw std::invalid_argument("kashiwara: bad index");
  auto atoms = reading(p);
  // Bracket '+' for letters that f~_a raises, '-' for letters e~_a lowers.
  std::vector<int> plus_stack;
  int chosen_minus = -1;
  int leftmost_plus = -1;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (atoms[i].letter == a) {
      plus_stack.push_back(static_cast<int>(i));
    } else if (atoms[i].letter == a + 1) {
      if (!plus_stack.empty())
        plus_stack.pop_back();
      else
        chosen_minus = static_cast<int>(i);
    }
  }
  if (!plus_stack.empty()) leftmost_plus = plus_stack.front();

  int target;
  Letter replacement;
  if (op == Op::F) {
    if (leftmost_plus < 0) return std::nullopt;
    target = leftmost_plus;
    replacement = a + 1;
  } else {
    if (chosen_minus < 0) return std::nullopt;
    target = chosen_minus;
    replacement = a;
  }
  PathA q = p;
  const Atom& at = atoms[target];
  auto rows = q.factors[at.factor].rows();
  rows[at.row - 1][at.col - 1] = replacement;
  q.factors[at.factor] = Tableau(std::move(rows));
  return q;
}

int eps(const Tableau& t, int a, int n) {
  PathA p{{t}, n};
  int stack = 0, minus = 0;
  for (auto& atom : reading(p)) {
    if (atom.letter == a)
      ++stack;
    else if (atom.letter == a + 1) {
      if (stack > 0)
        --stack;
      else
        ++minus;
    }
  }
  return minus;
}

int phi(const Tableau& t, int a, int n) {
  PathA p{{t}, n};
  int stack = 0;
  for (auto& atom : reading(p)) {
    if (atom.letter == a)
      ++stack;
    else if (atom.letter == a + 1 && stack > 0)
      --stack;
  }
  return stack;
}

namespace {

// Concatenation (s^r)+(s'^r') as row-wise sums.
Partition concat_rect(int r, int s, int r2, int s2) {
  std::vector<int> rows;
  for (int i = 0; i < std::max(r, r2); ++i)
    rows.push_back((i < r ? s : 0) + (i < r2 ? s2 : 0));
  return Partition(std::move(rows));
}

}  // namespace

RResult combinatorial_r(const Tableau& b, const Tableau& bprime) {
  Partition sb = b.shape(), sp = bprime.shape();
  int r = static_cast<int>(sb.rows()), s = sb[0];
  int r2 = static_cast<int>(sp.rows()), s2 = sp[0];

  Tableau y = row_insert(bprime, b.row_word());
  Partition ys = y.shape();

  // Energy: cells of y outside the concatenation of the two rectangles.
  Partition outer = concat_rect(r, s, r2, s2);
  int energy = 0;
  for (std::size_t i = 0; i < ys.rows(); ++i)
    energy += std::max(0, ys[i] - outer[i]);

  // Equal shapes: the unique isomorphism B (x) B -> B (x) B is the identity.
  if (r == r2 && s == s2) return {b, bprime, energy};

  // Cells of theta = y \ (s^r), grouped by row.
  std::vector<std::vector<int>> theta(ys.rows());
  for (int i = 1; i <= static_cast<int>(ys.rows()); ++i)
    for (int j = (i <= r ? s + 1 : 1); j <= ys[i - 1]; ++j)
      theta[i - 1].push_back(j);

  // Number cells strip by strip: each strip takes the topmost r2 rows that
  // still hold cells, the rightmost cell in each, numbered bottom to top.
  std::vector<std::pair<int, int>> order;  // cells in removal order
  for (int strip = 0; strip < s2; ++strip) {
    std::vector<std::pair<int, int>> chosen;
    for (int i = 0; i < static_cast<int>(theta.size()) &&
                    static_cast<int>(chosen.size()) < r2;
         ++i) {
      if (!theta[i].empty()) {
        chosen.push_back({i + 1, theta[i].back()});
        theta[i].pop_back();
      }
    }
    if (static_cast<int>(chosen.size()) != r2)
      throw std::logic_error("combinatorial_r: strip selection failed");
    for (auto it = chosen.rbegin(); it != chosen.rend(); ++it)
      order.push_back(*it);
  }

  Word ejected;
  Tableau cur = y;
  for (auto [row, col] : order) {
    auto [shrunk, u] = inverse_row_insert(cur, row, col);
    cur = shrunk;
    ejected.push_back(u);
  }

  Word reversed(ejected.rbegin(), ejected.rend());
  Tableau left = row_insert(Tableau{}, reversed);
  if (left.shape() != Partition(std::vector<int>(r2, s2)) ||
      cur.shape() != Partition(std::vector<int>(r, s)))
    throw std::logic_error("combinatorial_r: output shapes wrong");
  return {left, cur, energy};
}

std::pair<AffineElement, AffineElement> affine_r(const AffineElement& x,
                                                 const AffineElement& y) {
  RResult res = combinatorial_r(x.element, y.element);
  return {{res.left, y.mode - res.energy}, {res.right, x.mode + res.energy}};
}

}  // namespace crystal_a

}  // namespace rck
