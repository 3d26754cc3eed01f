#include "rck/crystal_d.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rck {

namespace crystal_d {

Letter f_letter(Letter x, int a, int n) {
  if (a == 0) {
    if (x == -2) return 1;
    if (x == -1) return 2;
    return 0;
  }
  if (a == n) {
    if (x == n - 1) return -n;
    if (x == n) return -(n - 1);
    return 0;
  }
  if (x == a) return a + 1;
  if (x == -(a + 1)) return -a;
  return 0;
}

Letter e_letter(Letter x, int a, int n) {
  if (a == 0) {
    if (x == 1) return -2;
    if (x == 2) return -1;
    return 0;
  }
  if (a == n) {
    if (x == -n) return n - 1;
    if (x == -(n - 1)) return n;
    return 0;
  }
  if (x == a + 1) return a;
  if (x == -a) return -(a + 1);
  return 0;
}

int phi_letter(Letter x, int a, int n) { return f_letter(x, a, n) != 0; }
int eps_letter(Letter x, int a, int n) { return e_letter(x, a, n) != 0; }

std::vector<Letter> letters(int n) {
  std::vector<Letter> out;
  for (int i = 1; i <= n; ++i) out.push_back(i);
  for (int i = n; i >= 1; --i) out.push_back(-i);
  return out;
}

namespace {

struct Atom {
  int factor, row, col;
  Letter letter;
};

// Far-Eastern reading: columns right to left, each top to bottom.
std::vector<Atom> reading(const CrystalPath& p) {
  std::vector<Atom> atoms;
  for (std::size_t f = 0; f < p.factors.size(); ++f) {
    const Tableau& t = p.factors[f];
    Partition sh = t.shape();
    for (int c = sh[0]; c >= 1; --c)
      for (int r = 1; r <= static_cast<int>(sh.rows()); ++r)
        if (t.has_cell(r, c))
          atoms.push_back({static_cast<int>(f), r, c, t.at(r, c)});
  }
  return atoms;
}

}  // namespace

std::optional<CrystalPath> kashiwara(const CrystalPath& p, Op op, int a) {
  if (p.algebra != Algebra::D)
    throw std::invalid_argument("kashiwara_d: type D paths only");
  if (a < 0 || a > p.n) throw std::invalid_argument("kashiwara_d: bad index");
  if (a == 0)
    for (auto& t : p.factors)
      if (t.cells() != 1)
        throw std::invalid_argument(
            "kashiwara_d: index 0 needs B^{1,1} factors");
  auto atoms = reading(p);
  std::vector<int> plus_stack;
  int chosen_minus = -1;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (phi_letter(atoms[i].letter, a, p.n)) {
      plus_stack.push_back(static_cast<int>(i));
    } else if (eps_letter(atoms[i].letter, a, p.n)) {
      if (!plus_stack.empty())
        plus_stack.pop_back();
      else
        chosen_minus = static_cast<int>(i);
    }
  }
  int target;
  Letter repl;
  if (op == Op::F) {
    if (plus_stack.empty()) return std::nullopt;
    target = plus_stack.front();
    repl = f_letter(atoms[target].letter, a, p.n);
  } else {
    if (chosen_minus < 0) return std::nullopt;
    target = chosen_minus;
    repl = e_letter(atoms[target].letter, a, p.n);
  }
  CrystalPath q = p;
  const Atom& at = atoms[target];
  auto rows = q.factors[at.factor].rows();
  rows[at.row - 1][at.col - 1] = repl;
  q.factors[at.factor] = Tableau(std::move(rows));
  return q;
}

int eps(const Tableau& t, int a, int n) {
  CrystalPath p{Algebra::D, n, {t}};
  int stack = 0, minus = 0;
  for (auto& atom : reading(p)) {
    if (phi_letter(atom.letter, a, n))
      ++stack;
    else if (eps_letter(atom.letter, a, n)) {
      if (stack > 0)
        --stack;
      else
        ++minus;
    }
  }
  return minus;
}

int phi(const Tableau& t, int a, int n) {
  CrystalPath p{Algebra::D, n, {t}};
  int stack = 0;
  for (auto& atom : reading(p)) {
    if (phi_letter(atom.letter, a, n))
      ++stack;
    else if (eps_letter(atom.letter, a, n) && stack > 0)
      --stack;
  }
  return stack;
}

Tableau fill(int r, int s, int n, const Partition& lambda) {
  if (r > n - 2) throw std::invalid_argument("fill: requires r <= n-2");
  Partition cols = lambda.conjugate();
  if (static_cast<int>(cols.rows()) > s || (cols.rows() && cols[0] > r))
    throw std::invalid_argument("fill: shape does not fit the rectangle");
  std::vector<int> heights;
  for (std::size_t i = 0; i < cols.rows(); ++i) heights.push_back(cols[i]);
  while (static_cast<int>(heights.size()) < s) heights.push_back(0);
  for (int h : heights)
    if ((r - h) % 2 != 0)
      throw std::invalid_argument("fill: gaps must be vertical dominoes");

  // c = height whose column count is the first odd one among r-2, r-4, ...
  int c = -1;
  std::vector<int> count(r + 1, 0);
  for (int h : heights) ++count[h];
  for (int h = r - 2; h >= 0; h -= 2)
    if (count[h] % 2 == 1) {
      c = h;
      break;
    }
  if (c >= 0) {
    // one height-c column leaves; the freed slot becomes a trailing gap
    auto it = std::find(heights.begin(), heights.end(), c);
    heights.erase(it);
    heights.push_back(0);
    std::sort(heights.begin(), heights.end(), std::greater<>());
  }

  std::vector<std::vector<Letter>> grid(r, std::vector<Letter>(s, 0));
  for (int j = 0; j < s; ++j)
    for (int i = 0; i < heights[j]; ++i) grid[i][j] = i + 1;

  // The freed rightmost column is filled by step 4; step 2 pairs the gap
  // columns of height >= c and step 3 walks the rest left to right.
  int step4 = -1;
  if (c >= 0) {
    step4 = s - 1;
    if (heights[step4] != 0)
      throw std::logic_error("fill: freed column is not empty");
  }
  std::vector<int> stage2;
  for (int j = 0; j < s; ++j)
    if (j != step4 && heights[j] < r && (c < 0 || heights[j] >= c))
      stage2.push_back(j);
  for (std::size_t t = 0; t + 1 < stage2.size(); t += 2) {
    int jl = stage2[t], jr = stage2[t + 1];
    if (heights[jl] != heights[jr])
      throw std::logic_error("fill: unpaired gap columns");
    int h = heights[jl];
    for (int i = h; i < r; ++i) {
      grid[i][jl] = -(r - (i - h));  // r-bar, (r-1)-bar, ..., (h+1)-bar
      grid[i][jr] = h + 1 + (i - h);
    }
  }
  if (stage2.size() % 2 == 1)
    throw std::logic_error("fill: odd number of stage-2 columns");

  if (c >= 0) {
    // step 3 on the columns of height < c, left to right
    int x = c + 1;
    for (int j = 0; j < s; ++j) {
      if (j == step4 || heights[j] >= c) continue;
      int h = heights[j];
      int y = r - x + h + 2;
      int pos = h;
      for (int v = y; v <= r; ++v) grid[pos++][j] = v;
      for (int v = r; v >= x; --v) grid[pos++][j] = -v;
      if (pos != r) throw std::logic_error("fill: column roundoff");
      x = y;
    }
    // step 4: the rightmost column
    if ((r + x - 1) % 2 != 0) throw std::logic_error("fill: parity failure");
    int y = (r + x - 1) / 2;
    int pos = 0;
    for (int v = 1; v <= y; ++v) grid[pos++][step4] = v;
    for (int v = y; v >= x; --v) grid[pos++][step4] = -v;
    if (pos != r) throw std::logic_error("fill: final column roundoff");
  }
  for (auto& row : grid)
    for (Letter v : row)
      if (v == 0) throw std::logic_error("fill: unfilled cell");
  return Tableau(std::move(grid));
}

PmDiagram PmDiagram::parse(const std::string& text) {
  PmDiagram d;
  std::stringstream ss(text);
  std::string tok;
  while (ss >> tok) {
    auto colon = tok.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("pm parse: want height:signs");
    Column col;
    col.height = std::stoi(tok.substr(0, colon));
    std::string signs = tok.substr(colon + 1);
    for (char ch : signs) {
      if (ch == '+')
        col.plus = true;
      else if (ch == '-')
        col.minus = true;
      else if (ch != '.')
        throw std::invalid_argument("pm parse: bad sign");
    }
    d.columns.push_back(col);
  }
  return d;
}

std::string PmDiagram::str() const {
  std::string s;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(columns[i].height) + ":";
    if (columns[i].plus) s += "+";
    if (columns[i].minus) s += "-";
    if (!columns[i].plus && !columns[i].minus) s += ".";
  }
  return s;
}

RiggedConfiguration pm_to_rc(const PmDiagram& diagram, int r, int s, int n) {
  if (r > n - 2) throw std::invalid_argument("pm_to_rc: requires r <= n-2");
  if (static_cast<int>(diagram.columns.size()) != s)
    throw std::invalid_argument("pm_to_rc: want one entry per column");
  std::vector<Partition> mu(n);
  mu[r - 1] = Partition{s};
  RiggedConfiguration out(Algebra::D, n, mu);

  // per color: rows aligned from the top; add piece rows index-wise
  std::vector<std::vector<int>> width(n + 1), rig(n + 1);
  auto add_row = [&](int color, int t, int w, int rg) {
    auto& ws = width[color];
    auto& rs = rig[color];
    if (static_cast<int>(ws.size()) <= t) {
      ws.resize(t + 1, 0);
      rs.resize(t + 1, 0);
    }
    ws[t] += w;
    rs[t] += rg;
  };
  auto add_column_piece = [&](int color, int height, int top_rig) {
    for (int t = 0; t < height; ++t)
      add_row(color, t, 1, t == 0 ? top_rig : 0);
  };

  for (auto& col : diagram.columns) {
    int x = col.height;
    if ((r - x) % 2 != 0)
      throw std::invalid_argument("pm_to_rc: heights must match r's parity");
    if ((col.plus || col.minus) && x == 0)
      throw std::invalid_argument("pm_to_rc: signs on an empty column");
    if (col.plus && col.minus && x < 2)
      throw std::invalid_argument("pm_to_rc: +- needs height >= 2");
    int y = r - x;
    if (!col.plus && !col.minus && x > 0) {  // case (A)
      for (int a = 1; a <= x; ++a) add_row(a, 0, 1, a == 1 ? -1 : 0);
      for (int j = 1; j <= y; ++j)
        add_column_piece(x + j, j, j == 1 ? 1 : 0);
      for (int a = x + y + 1; a <= n - 2; ++a) add_column_piece(a, y, 0);
      if (y > 0) {
        add_column_piece(n - 1, y / 2, 0);
        add_column_piece(n, y / 2, 0);
      }
    } else if (col.plus && !col.minus) {  // case (B)
      for (int j = 1; j <= y; ++j) add_column_piece(x + j, j, 0);
      for (int a = x + y + 1; a <= n - 2; ++a) add_column_piece(a, y, 0);
      if (y > 0) {
        add_column_piece(n - 1, y / 2, 0);
        add_column_piece(n, y / 2, 0);
      }
    } else if (!col.plus && !col.minus && x == 0) {  // empty: special (B)
      for (int j = 1; j <= r; ++j) add_column_piece(j, j, 0);
      for (int a = r + 1; a <= n - 2; ++a) add_column_piece(a, r, 0);
      add_column_piece(n - 1, r / 2, 0);
      add_column_piece(n, r / 2, 0);
    } else if (!col.plus && col.minus) {  // case (C)
      if (x == 1) {
        add_row(1, 0, 1, -1);
        add_row(1, 1, 1, -1);
      } else {
        for (int a = 1; a <= x - 1; ++a) add_row(a, 0, 2, a == 1 ? -2 : 0);
        add_column_piece(x, 2, 0);
      }
      for (int j = (x == 1 ? 2 : 2); j <= y + 1; ++j)
        add_column_piece(x - 1 + j, j + 1, 0);
      for (int a = x + y + 1; a <= n - 2; ++a) add_column_piece(a, y + 2, 0);
      add_column_piece(n - 1, (y + 2) / 2, 0);
      add_column_piece(n, (y + 2) / 2, 0);
    } else {  // case (D): both signs
      for (int a = 1; a <= x - 1; ++a) add_row(a, 0, 1, a == 1 ? -1 : 0);
      for (int j = 1; j <= y + 1; ++j) add_column_piece(x - 1 + j, j + 1, 0);
      for (int a = x + y + 1; a <= n - 2; ++a) add_column_piece(a, y + 2, 0);
      add_column_piece(n - 1, (y + 2) / 2, 0);
      add_column_piece(n, (y + 2) / 2, 0);
    }
  }
  for (int a = 1; a <= n; ++a)
    for (std::size_t t = 0; t < width[a].size(); ++t)
      if (width[a][t] > 0)
        out.strings_mut(a).push_back({width[a][t], rig[a][t]});
  out.canonicalize();
  return out;
}

}  // namespace crystal_d

}  // namespace rck
