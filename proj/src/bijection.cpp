#include "rck/bijection.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace rck {

std::string CrystalPath::str() const {
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += " (x) ";
    s += factors[i].str();
  }
  return s;
}

namespace bijection {

namespace {

void check_path(const CrystalPath& p) {
  if (p.factors.empty()) throw std::invalid_argument("empty path");
  for (auto& t : p.factors) {
    Partition sh = t.shape();
    int h = static_cast<int>(sh.rows());
    for (std::size_t i = 0; i < sh.rows(); ++i)
      if (sh[i] != sh[0])
        throw std::invalid_argument("path factors must be rectangular");
    switch (p.algebra) {
      case Algebra::A:
        if (h > p.n) throw std::invalid_argument("type A factor too tall");
        break;
      case Algebra::D:
        if (h > p.n - 2)
          throw std::invalid_argument("type D supports r <= n-2 only");
        break;
      case Algebra::C:
        if (h != 1 || sh[0] != 1)
          throw std::invalid_argument("type C supports B^{1,1} factors only");
        break;
    }
    for (auto& row : t.rows())
      for (Letter x : row) {
        int m = std::abs(x);
        if (m < 1 || m > p.n + (p.algebra == Algebra::A ? 1 : 0) ||
            (x < 0 && p.algebra == Algebra::A))
          throw std::invalid_argument("letter out of range for algebra");
      }
  }
}

// The delta / inverse-delta engine.  Rows are addressed by index within a
// color; selections of one pass are made against the state at the start of
// the pass, boxes move all at once, and the changed rows are re-rigged
// against the state left behind (including the mu update).
class Engine {
public:
  Engine(Algebra g, int n, bool swap_roles, bool pick_last)
      : rc_(g, n, {}), swap_(swap_roles), pick_last_(pick_last) {}
  explicit Engine(const RiggedConfiguration& rc, bool swap_roles = false,
                  bool pick_last = false)
      : rc_(rc), swap_(swap_roles), pick_last_(pick_last) {}

  RiggedConfiguration& rc() { return rc_; }
  Algebra algebra() const { return rc_.algebra(); }
  int n() const { return rc_.rank(); }

  Letter delta(int h, int w, DeltaStep* step);
  void delta_inverse(Letter x, int h, int w, DeltaStep* step);

private:
  bool singular(int c, const RcString& s) const {
    return swap_ ? s.rigging == 0 : s.rigging == rc_.vacancy(c, s.length);
  }

  // shortest singular string of length >= lo not yet selected; -1 if none
  int find_min(int c, int lo) const {
    auto& col = rc_.strings(c);
    int best = -1, best_len = INT_MAX;
    for (std::size_t i = 0; i < col.size(); ++i) {
      if (sel_.count({c, static_cast<int>(i)})) continue;
      if (col[i].length >= lo && col[i].length > 0 && singular(c, col[i])) {
        bool better = pick_last_ ? col[i].length <= best_len
                                 : col[i].length < best_len;
        if (better) {
          best_len = col[i].length;
          best = static_cast<int>(i);
        }
      }
    }
    return best;
  }

  // Adds `boxes` to the best unselected row of color c: the singular row
  // maximizing the post length subject to floor_post <= post <= cap_post.
  // Falls back to creating a new row.  Returns the post length.
  long long add_at(int c, long long cap_post, long long floor_post,
                   int boxes) {
    auto& col = rc_.strings(c);
    int best = -1;
    long long best_post = -1;
    for (std::size_t i = 0; i < col.size(); ++i) {
      if (sel_.count({c, static_cast<int>(i)})) continue;
      if (!singular(c, col[i])) continue;
      long long post = col[i].length + boxes;
      if (post < floor_post || post > cap_post) continue;
      if (post > best_post) {
        best = static_cast<int>(i);
        best_post = post;
      }
    }
    if (best < 0) {
      if (boxes < floor_post || boxes > cap_post)
        throw std::invalid_argument("delta_inverse: letter cannot be placed");
      rc_.strings_mut(c).push_back({0, 0});
      best = static_cast<int>(rc_.strings(c).size()) - 1;
      best_post = boxes;
    }
    sel_[{c, best}] += boxes;
    return best_post;
  }

  // Type C barred letters: the descent pass may take two boxes from one
  // string (case (S)), which couples the two cap chains.  The assignment is
  // found by a guided search over candidate box placements, validated by
  // replaying delta on the result; the first valid assignment in a fixed
  // greedy order is used, so the map stays deterministic.
  bool cbar_insert(Letter x, int h, int w, DeltaStep* step) {
    const int nn = n();
    int o = -x;
    RiggedConfiguration before = rc_;
    before.canonicalize();
    using Choice = std::tuple<int, int, int>;  // color, row index (-1 new), boxes
    std::vector<Choice> picks;
    long long tries = 0;
    bool done = false;

    auto leaf = [&]() {
      if (done || ++tries > 2000) return;
      sel_.clear();
      std::vector<std::pair<int, int>> created;  // color -> new row index
      for (auto& [c, row, boxes] : picks) {
        int idx = row;
        if (idx < 0) {
          rc_.strings_mut(c).push_back({0, 0});
          idx = static_cast<int>(rc_.strings(c).size()) - 1;
        }
        sel_[{c, idx}] += boxes;
      }
      DeltaStep scratch_step;
      apply(+1, h, w, step ? step : &scratch_step);
      RiggedConfiguration after = rc_;
      Engine probe(after);
      Letter got = 0;
      bool ok = true;
      try {
        got = probe.delta(h, w, nullptr);
      } catch (...) {
        ok = false;
      }
      RiggedConfiguration replay = probe.rc();
      replay.canonicalize();
      if (ok && got == x && replay == before) {
        done = true;
        return;
      }
      rc_ = before;
      if (step) step->boxes.clear();
      (void)created;
    };

    // candidates at one color: (row, boxes, counted); sentinel rows allowed
    auto options = [&](int c, long long cap, bool allow_double,
                       const std::set<std::pair<int, int>>& used) {
      std::vector<std::tuple<long long, int, int>> out;  // counted, row, boxes
      auto& col = rc_.strings(c);
      for (int b = allow_double ? 2 : 1; b >= 1; --b) {
        for (std::size_t i = 0; i < col.size(); ++i) {
          if (used.count({c, static_cast<int>(i)})) continue;
          if (!singular(c, col[i])) continue;
          long long counted = col[i].length + b;
          if (counted <= cap) out.push_back({counted, static_cast<int>(i), b});
        }
        if (b <= cap) out.push_back({b, -1, b});
      }
      std::sort(out.begin(), out.end(), [](auto& a, auto& b2) {
        if (std::get<0>(a) != std::get<0>(b2))
          return std::get<0>(a) > std::get<0>(b2);
        return std::get<2>(a) > std::get<2>(b2);  // prefer the double on ties
      });
      return out;
    };

    std::set<std::pair<int, int>> used;
    std::vector<int> dvalue(nn + 2, 0);  // descent-chain counted values
    std::vector<bool> doubled(nn + 2, false);

    std::function<void(int, long long)> phase3;
    std::function<void(long long)> phase_node;
    std::function<void(int, long long)> phase1 = [&](int c, long long cap) {
      if (done) return;
      if (c > nn - 1) {
        phase_node(cap);
        return;
      }
      for (auto& [counted, row, boxes] : options(c, cap, true, used)) {
        picks.push_back({c, row, boxes});
        if (row >= 0) used.insert({c, row});
        dvalue[c] = static_cast<int>(counted);
        doubled[c] = boxes == 2;
        phase1(c + 1, counted);
        if (row >= 0) used.erase({c, row});
        picks.pop_back();
        if (done) return;
      }
    };
    phase_node = [&](long long cap) {
      if (done) return;
      auto& col = rc_.strings(nn);
      std::vector<std::tuple<long long, int>> opts;
      for (std::size_t i = 0; i < col.size(); ++i) {
        if (!singular(nn, col[i])) continue;
        long long counted = col[i].length + 2;
        if (counted <= cap) opts.push_back({counted, static_cast<int>(i)});
      }
      if (2 <= cap) opts.push_back({2, -1});
      std::sort(opts.begin(), opts.end(),
                [](auto& a, auto& b) { return std::get<0>(a) > std::get<0>(b); });
      for (auto& [counted, row] : opts) {
        picks.push_back({nn, row, 2});
        phase3(nn - 1, counted);
        picks.pop_back();
        if (done) return;
      }
    };
    phase3 = [&](int c, long long acap) {
      if (done) return;
      if (c < h) {
        leaf();
        return;
      }
      if (c >= o && doubled[c]) {  // case (S): the ascent box is already there
        phase3(c - 1, dvalue[c]);
        return;
      }
      for (auto& [counted, row, boxes] : options(c, acap, false, used)) {
        picks.push_back({c, row, boxes});
        if (row >= 0) used.insert({c, row});
        phase3(c - 1, counted);
        if (row >= 0) used.erase({c, row});
        picks.pop_back();
        if (done) return;
      }
    };

    phase1(o, LLONG_MAX);
    return done;
  }

  void mu_consume(int h, int w) {
    auto mus = rc_.mu_all();
    mus[h - 1].remove_row(w);
    if (w - 1 > 0) mus[h - 1].push_row(w - 1);
    if (h >= 2) mus[h - 2].push_row(1);
    rc_.set_mu(mus);
  }
  void mu_produce(int h, int w) {
    auto mus = rc_.mu_all();
    if (h >= 2) mus[h - 2].remove_row(1);
    if (w - 1 > 0) mus[h - 1].remove_row(w - 1);
    mus[h - 1].push_row(w);
    rc_.set_mu(mus);
  }

  // Moves the selected boxes (sign = -1 remove, +1 add), updates mu, then
  // re-rigs every changed row against the new state.  Unchanged rows keep
  // their riggings; in swapped mode they keep their coriggings instead.
  void apply(int sign, int h, int w, DeltaStep* step) {
    std::vector<std::vector<int>> oldp;
    if (swap_) {
      oldp.resize(n());
      for (int c = 1; c <= n(); ++c)
        for (auto& s : rc_.strings(c))
          oldp[c - 1].push_back(rc_.vacancy(c, s.length));
    }
    for (auto& [key, boxes] : sel_) {
      auto [c, i] = key;
      auto& row = rc_.strings_mut(c)[i];
      if (step) step->boxes.push_back({c, row.length, boxes});
      row.length += sign * boxes;
      if (row.length < 0)
        throw std::invalid_argument("delta: configuration exhausted");
    }
    if (sign < 0)
      mu_consume(h, w);
    else
      mu_produce(h, w);
    if (swap_) {
      for (int c = 1; c <= n(); ++c) {
        auto& col = rc_.strings_mut(c);
        for (std::size_t i = 0; i < oldp[c - 1].size(); ++i) {
          if (sel_.count({c, static_cast<int>(i)})) continue;
          col[i].rigging += rc_.vacancy(c, col[i].length) - oldp[c - 1][i];
        }
      }
    }
    for (auto& [key, boxes] : sel_) {
      auto [c, i] = key;
      auto& row = rc_.strings_mut(c)[i];
      if (row.length > 0)
        row.rigging = swap_ ? 0 : rc_.vacancy(c, row.length);
    }
    for (int c = 1; c <= n(); ++c)
      std::erase_if(rc_.strings_mut(c),
                    [](const RcString& s) { return s.length == 0; });
    sel_.clear();
  }

  RiggedConfiguration rc_;
  bool swap_, pick_last_;
  std::map<std::pair<int, int>, int> sel_;
};

Letter Engine::delta(int h, int w, DeltaStep* step) {
  const int nn = n();
  if (step) {
    step->height = h;
    step->width = w;
    step->letter = 0;
    step->boxes.clear();
  }
  int top = algebra() == Algebra::A   ? nn
            : algebra() == Algebra::D ? nn - 2
                                      : nn - 1;
  std::vector<int> asc_row(nn + 2, -1), asc_len(nn + 2, -1);
  Letter letter = 0;
  int prev = w;
  for (int c = h; c <= top && letter == 0; ++c) {
    int i = find_min(c, prev);
    if (i < 0) {
      letter = c;
      break;
    }
    sel_[{c, i}] += 1;
    asc_row[c] = i;
    asc_len[c] = rc_.strings(c)[i].length;
    prev = asc_len[c];
  }
  if (letter == 0 && algebra() == Algebra::A) letter = nn + 1;
  if (letter == 0 && algebra() == Algebra::D) {
    int i1 = find_min(nn - 1, prev), i2 = find_min(nn, prev);
    if (i1 < 0 && i2 < 0) {
      letter = nn - 1;
    } else if (i1 >= 0 && i2 < 0) {
      sel_[{nn - 1, i1}] += 1;
      letter = nn;
    } else if (i1 < 0 && i2 >= 0) {
      sel_[{nn, i2}] += 1;
      letter = -nn;
    } else {
      sel_[{nn - 1, i1}] += 1;
      sel_[{nn, i2}] += 1;
      int prevbar = std::max(rc_.strings(nn - 1)[i1].length,
                             rc_.strings(nn)[i2].length);
      letter = -1;
      for (int c = nn - 2; c >= 1; --c) {
        // The string taken on the way up is never available again: a valid
        // configuration always offers a different singular string instead
        // (the insertion pass can only have lengthened distinct strings).
        int i = find_min(c, prevbar);
        if (i < 0) {
          letter = -(c + 1);
          break;
        }
        sel_[{c, i}] += 1;
        prevbar = rc_.strings(c)[i].length;
      }
    }
  }
  if (letter == 0 && algebra() == Algebra::C) {
    int i = find_min(nn, prev);
    if (i < 0) {
      letter = nn;
    } else {
      sel_[{nn, i}] += 2;
      int prevbar = rc_.strings(nn)[i].length;
      letter = -1;
      for (int c = nn - 1; c >= 1; --c) {
        if (asc_len[c] == prevbar) {
          sel_[{c, asc_row[c]}] += 1;  // case (S): two boxes from one string
        } else {
          int j = find_min(c, prevbar);
          if (j < 0) {
            letter = -(c + 1);
            break;
          }
          sel_[{c, j}] += 1;
          prevbar = rc_.strings(c)[j].length;
        }
      }
    }
  }
  apply(-1, h, w, step);
  if (step) step->letter = letter;
  return letter;
}

void Engine::delta_inverse(Letter x, int h, int w, DeltaStep* step) {
  const int nn = n();
  if (step) {
    step->height = h;
    step->width = w;
    step->letter = x;
    step->boxes.clear();
  }
  int m = std::abs(x);
  bool barred = x < 0;
  if (m < 1 || m > nn + (algebra() == Algebra::A ? 1 : 0) ||
      (barred && algebra() == Algebra::A))
    throw std::invalid_argument("delta_inverse: bad letter");
  if (!barred && m < h)
    throw std::invalid_argument("delta_inverse: letter above its row");

  if (!barred && !(algebra() == Algebra::D && m == nn)) {
    // straight descending pass x-1 .. h
    long long cap = LLONG_MAX;
    for (int c = m - 1; c >= h; --c)
      cap = add_at(c, cap, c == h ? w : 1, 1);
  } else if (!barred) {
    // type D letter n: spinor node n-1 first, then descend
    long long cap = add_at(nn - 1, LLONG_MAX, 1, 1);
    for (int c = nn - 2; c >= h; --c)
      cap = add_at(c, cap, c == h ? w : 1, 1);
  } else if (algebra() == Algebra::D) {
    long long cap = LLONG_MAX;
    if (m <= nn - 2)
      for (int c = m; c <= nn - 2; ++c) cap = add_at(c, cap, 1, 1);
    long long capdesc;
    if (m == nn) {
      capdesc = add_at(nn, LLONG_MAX, 1, 1);
    } else {
      long long p1 = add_at(nn - 1, cap, 1, 1);
      long long p2 = add_at(nn, cap, 1, 1);
      capdesc = std::min(p1, p2);
    }
    for (int c = nn - 2; c >= h; --c)
      capdesc = add_at(c, capdesc, c == h ? w : 1, 1);
  } else if (algebra() == Algebra::C) {
    if (!cbar_insert(x, h, w, step)) {
      throw std::invalid_argument("delta_inverse: letter cannot be placed");
    }
    return;
  } else {
    throw std::invalid_argument("delta_inverse: barred letter in type A");
  }

  apply(+1, h, w, step);
}

}  // namespace

std::vector<FactorPick> order_of(const CrystalPath& path) {
  std::vector<FactorPick> order;
  for (auto it = path.factors.rbegin(); it != path.factors.rend(); ++it) {
    Partition sh = it->shape();
    order.push_back({static_cast<int>(sh.rows()), sh[0]});
  }
  return order;
}

RiggedConfiguration phi(const CrystalPath& path, Trace* trace) {
  check_path(path);
  Engine eng(path.algebra, path.n, false, false);
  for (auto& t : path.factors) {
    Partition sh = t.shape();
    int h = static_cast<int>(sh.rows()), s = sh[0];
    for (int col = s; col >= 1; --col) {
      int w = s + 1 - col;
      for (int row = 1; row <= h; ++row) {
        DeltaStep step;
        eng.delta_inverse(t.at(row, col), row, row == h ? w : 1,
                          trace ? &step : nullptr);
        if (trace) trace->push_back(step);
      }
    }
  }
  eng.rc().canonicalize();
  return eng.rc();
}

CrystalPath phi_inverse(const RiggedConfiguration& rc,
                        std::vector<FactorPick> order, Trace* trace) {
  if (order.empty()) {
    for (int h = rc.rank(); h >= 1; --h)
      for (int wdt : rc.mu(h - 1).parts()) order.push_back({h, wdt});
  }
  CrystalPath out;
  out.algebra = rc.algebra();
  out.n = rc.rank();
  Engine eng(rc);
  for (auto& pick : order) {
    int h = pick.height, s = pick.width;
    std::vector<std::vector<Letter>> rows(h, std::vector<Letter>(s, 0));
    for (int w = s; w >= 1; --w) {
      int col = s + 1 - w;
      for (int c = h; c >= 1; --c) {
        DeltaStep step;
        Letter x = eng.delta(c, c == h ? w : 1, trace ? &step : nullptr);
        rows[c - 1][col - 1] = x;
        if (trace) trace->push_back(step);
      }
    }
    out.factors.insert(out.factors.begin(), Tableau(std::move(rows)));
  }
  for (auto& mpart : eng.rc().mu_all())
    if (!mpart.empty())
      throw std::invalid_argument("phi_inverse: factor order mismatch");
  if (eng.rc().total_cells() != 0)
    throw std::invalid_argument("phi_inverse: leftover configuration");
  return out;
}

CrystalPath r_matrix_via_rc(const CrystalPath& path,
                            std::vector<int> new_order) {
  if (path.factors.size() < 2)
    throw std::invalid_argument("r_matrix_via_rc: need two or more factors");
  if (new_order.empty())
    for (int i = static_cast<int>(path.factors.size()) - 1; i >= 0; --i)
      new_order.push_back(i);
  RiggedConfiguration rcimg = phi(path);
  std::vector<FactorPick> picks;
  for (auto it = new_order.rbegin(); it != new_order.rend(); ++it) {
    Partition sh = path.factors[*it].shape();
    picks.push_back({static_cast<int>(sh.rows()), sh[0]});
  }
  return phi_inverse(rcimg, picks);
}

RiggedConfiguration lusztig_phi(const CrystalPath& path) {
  check_path(path);
  Engine eng(path.algebra, path.n, true, false);
  for (auto& t : path.factors) {
    Partition sh = t.shape();
    int h = static_cast<int>(sh.rows()), s = sh[0];
    for (int col = s; col >= 1; --col) {
      int w = s + 1 - col;
      for (int row = 1; row <= h; ++row)
        eng.delta_inverse(t.at(row, col), row, row == h ? w : 1, nullptr);
    }
  }
  eng.rc().canonicalize();
  return eng.rc();
}

bool is_lr_tableau(const Tableau& t) {
  if (t.cells() == 0) return true;
  if (!t.is_semistandard()) return false;
  Word w;
  Partition outer = t.shape();
  for (int r = 1; r <= static_cast<int>(outer.rows()); ++r)
    for (int c = outer[r - 1]; c >= 1; --c)
      if (t.has_cell(r, c)) w.push_back(t.at(r, c));
  return is_yamanouchi(w);
}

namespace {

// One psi pass starting from a length-l column cell of nu^(a_diamond);
// returns the recording row index.
int psi_delta(RiggedConfiguration& rc, int l) {
  int top = rc::a_diamond(rc.algebra(), rc.rank());
  auto singular = [&](int c, const RcString& s) {
    return s.rigging == rc.vacancy(c, s.length);
  };
  auto& topcol = rc.strings_mut(top);
  int start = -1;
  for (std::size_t i = 0; i < topcol.size(); ++i)
    if (topcol[i].length == l) {
      start = static_cast<int>(i);
      break;
    }
  if (start < 0) throw std::invalid_argument("psi: no column of that length");
  // The stable top configuration plays the role of the mirrored tensor
  // shape: its rows carry no rigging information and shrink positionally.
  std::vector<std::pair<int, int>> sel;
  int prev = l;
  int out = top;
  for (int c = top - 1; c >= 1; --c) {
    auto& col = rc.strings(c);
    int best = -1, best_len = INT_MAX;
    for (std::size_t i = 0; i < col.size(); ++i)
      if (col[i].length >= prev && singular(c, col[i]) &&
          col[i].length < best_len) {
        best_len = col[i].length;
        best = static_cast<int>(i);
      }
    if (best < 0) {
      out = c + 1;
      break;
    }
    sel.push_back({c, best});
    prev = best_len;
    out = c;
  }
  topcol[start].length -= 1;
  topcol[start].rigging = 0;
  for (auto& [c, i] : sel) rc.strings_mut(c)[i].length -= 1;
  for (auto& [c, i] : sel) {
    auto& s = rc.strings_mut(c)[i];
    if (s.length > 0) s.rigging = rc.vacancy(c, s.length);
  }
  for (int c = 1; c <= rc.rank(); ++c)
    std::erase_if(rc.strings_mut(c),
                  [](const RcString& s) { return s.length == 0; });
  return out;
}

// Inverse pass: regrow a box onto a length l-1 column at the top color with
// the chain starting at color k.
void psi_delta_inverse(RiggedConfiguration& rc, int l, int k) {
  int top = rc::a_diamond(rc.algebra(), rc.rank());
  auto singular = [&](int c, const RcString& s) {
    return s.rigging == rc.vacancy(c, s.length);
  };
  std::vector<std::pair<int, int>> sel;
  std::vector<int> new_rows;
  long long cap = LLONG_MAX;
  for (int c = k; c <= top - 1; ++c) {
    auto& col = rc.strings(c);
    int best = -1, best_len = -1;
    for (std::size_t i = 0; i < col.size(); ++i) {
      long long post = col[i].length + 1;
      if (post <= cap && post >= l && singular(c, col[i]) &&
          col[i].length > best_len) {
        best_len = col[i].length;
        best = static_cast<int>(i);
      }
    }
    if (best >= 0) {
      sel.push_back({c, best});
      cap = best_len + 1;
    } else if (1 <= cap && 1 >= l) {
      new_rows.push_back(c);
      cap = 1;
    } else {
      throw std::invalid_argument("psi_inverse: cannot place letter");
    }
  }
  auto& topcol = rc.strings_mut(top);
  int start = -1;
  for (std::size_t i = 0; i < topcol.size(); ++i)
    if (topcol[i].length == l - 1) {
      start = static_cast<int>(i);
      break;
    }
  if (start < 0) {
    if (l != 1) throw std::invalid_argument("psi_inverse: no column to grow");
    topcol.push_back({0, 0});
    start = static_cast<int>(topcol.size()) - 1;
  }
  topcol[start].length += 1;
  topcol[start].rigging = 0;
  for (auto& [c, i] : sel) rc.strings_mut(c)[i].length += 1;
  for (int c : new_rows) rc.strings_mut(c).push_back({1, 0});
  for (auto& [c, i] : sel) {
    auto& s = rc.strings_mut(c)[i];
    s.rigging = rc.vacancy(c, s.length);
  }
  for (int c : new_rows) {
    auto& col = rc.strings_mut(c);
    col.back().rigging = rc.vacancy(c, 1);
  }
}

}  // namespace

PsiResult psi(const RiggedConfiguration& input) {
  if (!rc::is_stable(input))
    throw std::invalid_argument("psi: configuration is not stable");
  RiggedConfiguration work = input;
  int top = rc::a_diamond(work.algebra(), work.rank());
  Partition lambda = rc::weight(input);
  Partition mu = input.nu(top);
  if (top < static_cast<int>(lambda.rows()) + static_cast<int>(mu.rows()))
    throw std::invalid_argument("psi: rank condition violated");

  std::vector<std::vector<Letter>> rows(
      std::max<std::size_t>(lambda.rows(), 1));
  Partition cols = mu.conjugate();
  for (int l = mu.empty() ? 0 : mu[0]; l >= 1; --l) {
    int hl = cols[l - 1];
    for (int j = 1; j <= hl; ++j) {
      int k = psi_delta(work, l);
      if (k > static_cast<int>(rows.size())) rows.resize(k);
      rows[k - 1].push_back(j);
    }
  }
  PsiResult res;
  res.recording = Tableau(std::move(rows), lambda);
  res.lambda = lambda;
  res.mu = mu;
  work.canonicalize();
  // eta by the stable weight formula on the image tower (the spinor tail of
  // the input is untouched and carries no weight of its own here)
  std::vector<int> eta_rows;
  for (int a = 1; a <= top; ++a) {
    int v = 0;
    for (int b = a; b <= work.rank(); ++b) v += work.mu(b - 1).size();
    if (a >= 2) v += work.nu(a - 1).size();
    v -= work.nu(a).size();
    if (v > 0) eta_rows.push_back(v);
  }
  res.eta = Partition(std::move(eta_rows));
  res.rc = work;
  return res;
}

RiggedConfiguration psi_inverse(const RiggedConfiguration& image,
                                const Tableau& recording) {
  RiggedConfiguration work = image;
  std::map<Letter, int> counts;
  for (auto& row : recording.rows())
    for (Letter x : row) counts[x] += 1;
  std::vector<int> mu_rows;
  for (auto& [letter, cnt] : counts) mu_rows.push_back(cnt);
  Partition mu = Partition::sorted(std::move(mu_rows));
  Partition cols = mu.conjugate();

  auto rows = recording.rows();
  for (int l = 1; l <= (mu.empty() ? 0 : mu[0]); ++l) {
    int hl = cols[l - 1];
    for (int j = hl; j >= 1; --j) {
      // the (l, j) cell ends its row; take the bottommost such row
      int k = -1;
      for (int r = static_cast<int>(rows.size()); r >= 1; --r)
        if (!rows[r - 1].empty() && rows[r - 1].back() == j) {
          k = r;
          break;
        }
      if (k < 0)
        throw std::invalid_argument("psi_inverse: malformed recording");
      rows[k - 1].pop_back();
      psi_delta_inverse(work, l, k);
    }
  }
  work.canonicalize();
  return work;
}

}  // namespace bijection

}  // namespace rck
