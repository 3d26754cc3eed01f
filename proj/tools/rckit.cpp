// rckit: command line front end for the rigged-configuration toolkit.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "rck/boxball.hpp"
#include "rck/crystal_d.hpp"
#include "rck/jsonio.hpp"
#include "rck/loopschur.hpp"

using namespace rck;

namespace {

std::string slurp(const std::string& ref) {
  if (!ref.empty() && ref[0] == '@') {
    std::ifstream in(ref.substr(1));
    if (!in) throw std::invalid_argument("cannot open " + ref.substr(1));
    std::string s((std::istreambuf_iterator<char>(in)),
                  std::istreambuf_iterator<char>());
    return s;
  }
  return ref;
}

std::vector<Partition> parse_mu(const std::string& text, int n) {
  // colors separated by ';', rows by ','; "2,2" or "2,2;;1"
  std::vector<Partition> mu(n);
  std::stringstream ss(text);
  std::string piece;
  int idx = 0;
  while (std::getline(ss, piece, ';')) {
    if (idx >= n) throw std::invalid_argument("mu: more colors than rank");
    std::vector<int> rows;
    std::stringstream rs(piece);
    std::string tok;
    while (std::getline(rs, tok, ','))
      if (!tok.empty()) rows.push_back(std::stoi(tok));
    mu[idx++] = Partition::sorted(std::move(rows));
  }
  return mu;
}

struct Output {
  std::string path;
  std::string format = "json";
  void emit(const Json& j) const {
    std::string text = format == "pretty" ? j.dump(2) : j.dump();
    text += "\n";
    if (path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(path);
      out << text;
    }
  }
};

double bethe_tol(double fallback) {
  if (const char* env = std::getenv("BETHE_TOL")) return std::atof(env);
  return fallback;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rigged configurations, box-ball systems and Bethe ansatz"};
  app.require_subcommand(1);
  Output out;
  app.add_option("--out", out.path, "write JSON here instead of stdout");
  app.add_option("--format", out.format, "json|pretty")
      ->check(CLI::IsMember({"json", "pretty"}));

  // ---- rc ----
  auto* rc_cmd = app.add_subcommand("rc", "rigged configuration utilities");
  rc_cmd->require_subcommand(1);
  std::string rc_algebra = "A", rc_mu;
  int rc_rank = 1, rc_maxcells = -1;
  auto* rc_enum = rc_cmd->add_subcommand("enumerate",
                                         "all highest-weight configurations");
  rc_enum->add_option("--algebra", rc_algebra)->required();
  rc_enum->add_option("--rank", rc_rank)->required();
  rc_enum->add_option("--mu", rc_mu)->required();
  rc_enum->add_option("--max-cells", rc_maxcells);

  std::string pm_text;
  int pm_r = 1, pm_s = 1, pm_rank = 4;
  auto* rc_pm = rc_cmd->add_subcommand("pm", "plus-minus diagram image");
  rc_pm->add_option("--diagram", pm_text, "tokens height:signs")->required();
  rc_pm->add_option("--r", pm_r)->required();
  rc_pm->add_option("--s", pm_s)->required();
  rc_pm->add_option("--rank", pm_rank)->required();

  // ---- bijection ----
  auto* bij = app.add_subcommand("bijection", "the bijection and its inverse");
  std::string bij_dir = "fwd", bij_algebra = "A", bij_path, bij_rc, bij_order;
  int bij_rank = 1;
  bool bij_trace = false;
  bij->add_option("direction", bij_dir, "fwd|inv")
      ->check(CLI::IsMember({"fwd", "inv"}));
  bij->add_option("--algebra", bij_algebra);
  bij->add_option("--rank", bij_rank);
  bij->add_option("--path", bij_path, "path text or @file (fwd)");
  bij->add_option("--rc", bij_rc, "configuration JSON or @file (inv)");
  bij->add_option("--order", bij_order, "height:width,height:width,... picks");
  bij->add_flag("--trace", bij_trace);

  // ---- rmatrix ----
  auto* rmx = app.add_subcommand("rmatrix", "combinatorial R via the bijection");
  std::string rmx_algebra = "A", rmx_path;
  int rmx_rank = 1;
  rmx->add_option("--algebra", rmx_algebra);
  rmx->add_option("--rank", rmx_rank);
  rmx->add_option("--path", rmx_path)->required();

  // ---- bbs ----
  auto* bbs = app.add_subcommand("bbs", "box-ball systems");
  bbs->require_subcommand(1);
  std::string bbs_state, bbs_op = "1,3", bbs_algebra = "A";
  int bbs_steps = 1, bbs_rank = 1, bbs_l = 1;
  auto* bbs_evolve = bbs->add_subcommand("evolve", "apply T^{a,l}");
  bbs_evolve->add_option("--state", bbs_state)->required();
  bbs_evolve->add_option("--op", bbs_op, "a,l with l=0 for infinity");
  bbs_evolve->add_option("--steps", bbs_steps);
  bbs_evolve->add_option("--algebra", bbs_algebra);
  bbs_evolve->add_option("--rank", bbs_rank);
  auto* bbs_spec = bbs->add_subcommand("spectrum", "action-angle data");
  bbs_spec->add_option("--state", bbs_state)->required();
  bbs_spec->add_option("--algebra", bbs_algebra);
  bbs_spec->add_option("--rank", bbs_rank);
  auto* bbs_per = bbs->add_subcommand("periodic", "periodic evolution");
  bbs_per->add_option("--state", bbs_state)->required();
  bbs_per->add_option("--l", bbs_l);
  bbs_per->add_option("--steps", bbs_steps);
  std::string bbb_state;
  int bbb_l = 0;
  auto* bbs_bbb = bbs->add_subcommand("bbb", "box-basket-ball evolution");
  bbs_bbb->add_option("--state", bbb_state, "sites a,b,c separated by spaces")
      ->required();
  bbs_bbb->add_option("--l", bbb_l, "carrier size, 0 for infinity");
  bbs_bbb->add_option("--steps", bbs_steps);

  // ---- bethe ----
  auto* bethe = app.add_subcommand("bethe", "XXX Bethe ansatz");
  bethe->require_subcommand(1);
  int bn = 3, bell = 1;
  std::string bseeds = "both", broots;
  auto* bsolve = bethe->add_subcommand("solve", "find Bethe roots");
  bsolve->add_option("--N", bn)->required();
  bsolve->add_option("--ell", bell)->required();
  bsolve->add_option("--seeds", bseeds)
      ->check(CLI::IsMember({"rc", "random", "both"}));
  auto* baudit = bethe->add_subcommand("audit", "completeness audit");
  baudit->add_option("--N", bn)->required();
  auto* bqnum = bethe->add_subcommand("qnum", "Bethe quantum numbers");
  bqnum->add_option("--N", bn)->required();
  bqnum->add_option("--roots", broots, "JSON [[re,im],...] or @file")
      ->required();

  // ---- loopschur ----
  auto* ls = app.add_subcommand("loopschur", "loop Schur functions");
  std::string ls_shape, ls_inner, ls_eval;
  int ls_cyl = 0, ls_r = 0, ls_letters = 1, ls_n = 2;
  bool ls_trop = false;
  ls->add_option("--shape", ls_shape)->required();
  ls->add_option("--inner", ls_inner);
  ls->add_option("--cylindric", ls_cyl, "shift index a (0 = plain)");
  ls->add_option("--r", ls_r);
  ls->add_option("--letters", ls_letters)->required();
  ls->add_option("--n", ls_n)->required();
  ls->add_flag("--trop", ls_trop);
  ls->add_option("--eval", ls_eval, "JSON {\"i,j\": value} or @file");

  // ---- fill ----
  auto* fl = app.add_subcommand("fill", "type D KR tableau of u_lambda");
  int fl_r = 1, fl_s = 1, fl_n = 4;
  std::string fl_lambda;
  fl->add_option("--r", fl_r)->required();
  fl->add_option("--s", fl_s)->required();
  fl->add_option("--rank", fl_n)->required();
  fl->add_option("--lambda", fl_lambda, "partition rows, comma separated");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }

  try {
    if (*rc_cmd) {
      if (*rc_enum) {
        Algebra g = algebra_from_name(rc_algebra);
        auto mu = parse_mu(rc_mu, rc_rank);
        auto all = rc::enumerate_hw(g, rc_rank, mu, rc_maxcells);
        Json j = Json::array();
        for (auto& x : all) j.push_back(to_json(x));
        out.emit(j);
      } else {
        auto diagram = crystal_d::PmDiagram::parse(pm_text);
        out.emit(to_json(crystal_d::pm_to_rc(diagram, pm_r, pm_s, pm_rank)));
      }
    } else if (*bij) {
      Algebra g = algebra_from_name(bij_algebra);
      if (bij_dir == "fwd") {
        CrystalPath p;
        std::string text = slurp(bij_path);
        if (!text.empty() && text[0] == '{')
          p = path_from_json(Json::parse(text));
        else {
          p.algebra = g;
          p.n = bij_rank;
          PathA pa = PathA::parse(text, bij_rank);
          p.factors = pa.factors;
        }
        bijection::Trace trace;
        auto rcimg = bijection::phi(p, bij_trace ? &trace : nullptr);
        Json j;
        j["rc"] = to_json(rcimg);
        if (bij_trace) j["trace"] = to_json(trace);
        out.emit(j);
      } else {
        auto rcin = rc_from_json(Json::parse(slurp(bij_rc)));
        std::vector<bijection::FactorPick> order;
        if (!bij_order.empty()) {
          std::stringstream ss(bij_order);
          std::string tok;
          while (std::getline(ss, tok, ',')) {
            auto colon = tok.find(':');
            order.push_back({std::stoi(tok.substr(0, colon)),
                             std::stoi(tok.substr(colon + 1))});
          }
        }
        bijection::Trace trace;
        auto path =
            bijection::phi_inverse(rcin, order, bij_trace ? &trace : nullptr);
        Json j;
        j["path"] = to_json(path);
        j["text"] = path.str();
        if (bij_trace) j["trace"] = to_json(trace);
        out.emit(j);
      }
    } else if (*rmx) {
      CrystalPath p;
      std::string text = slurp(rmx_path);
      if (!text.empty() && text[0] == '{')
        p = path_from_json(Json::parse(text));
      else {
        PathA pa = PathA::parse(text, rmx_rank);
        p.algebra = algebra_from_name(rmx_algebra);
        p.n = rmx_rank;
        p.factors = pa.factors;
      }
      auto swapped = bijection::r_matrix_via_rc(p);
      Json j;
      j["path"] = to_json(swapped);
      j["text"] = swapped.str();
      out.emit(j);
    } else if (*bbs) {
      if (*bbs_evolve || *bbs_spec) {
        CrystalPath p = boxball::parse_state(slurp(bbs_state), bbs_rank);
        if (bbs_algebra != "A")
          throw std::invalid_argument("text states are type A");
        if (*bbs_spec) {
          out.emit(to_json(bijection::phi(p)));
        } else {
          auto comma = bbs_op.find(',');
          int a = std::stoi(bbs_op.substr(0, comma));
          int l = std::stoi(bbs_op.substr(comma + 1));
          if (l == 0) l = boxball::kInf;
          Json hist = Json::array();
          for (int t = 0; t < bbs_steps; ++t) {
            p = boxball::evolve(p, a, l);
            hist.push_back(boxball::state_str(p));
          }
          Json j;
          j["state"] = boxball::state_str(p);
          j["history"] = hist;
          out.emit(j);
        }
      } else if (*bbs_per) {
        std::string s = slurp(bbs_state);
        Json hist = Json::array();
        for (int t = 0; t < bbs_steps; ++t) {
          s = boxball::periodic_evolve(s, bbs_l);
          hist.push_back(s);
        }
        Json j;
        j["state"] = s;
        j["history"] = hist;
        out.emit(j);
      } else {
        std::vector<boxball::BBBSite> sites;
        std::stringstream ss(slurp(bbb_state));
        std::string tok;
        while (ss >> tok) {
          auto c1 = tok.find(',');
          auto c2 = tok.find(',', c1 + 1);
          sites.push_back({std::stoll(tok.substr(0, c1)),
                           std::stoll(tok.substr(c1 + 1, c2 - c1 - 1)),
                           std::stoll(tok.substr(c2 + 1))});
        }
        for (int t = 0; t < bbs_steps; ++t)
          sites = boxball::evolve_bbb(sites,
                                      bbb_l == 0 ? boxball::kInf : bbb_l);
        Json j = Json::array();
        for (auto& s : sites)
          j.push_back(Json::array({s.spaces, s.baskets, s.balls}));
        out.emit(j);
      }
    } else if (*bethe) {
      if (*bsolve) {
        spinchain::SeedMode mode = bseeds == "rc" ? spinchain::SeedMode::RC
                                   : bseeds == "random"
                                       ? spinchain::SeedMode::Random
                                       : spinchain::SeedMode::Both;
        auto sols = spinchain::solve_bethe(bn, bell, mode);
        Json j = Json::array();
        for (auto& s : sols) j.push_back(to_json(s));
        out.emit(j);
      } else if (*baudit) {
        auto rep = spinchain::completeness_audit(bn, bethe_tol(1e-6));
        Json j;
        j["N"] = rep.N;
        j["all_match"] = rep.all_match;
        Json rows = Json::array();
        for (auto& r : rep.rows) {
          Json row;
          row["ell"] = r.ell;
          row["expected"] = r.expected;
          row["regular"] = r.regular;
          row["physical_singular"] = r.physical_singular;
          row["rank"] = r.rank;
          row["max_eigen_residual"] = r.max_eigen_residual;
          row["counts_match"] = r.counts_match;
          rows.push_back(row);
        }
        j["rows"] = rows;
        out.emit(j);
        if (!rep.all_match) return 3;
      } else {
        Json in = Json::parse(slurp(broots));
        std::vector<spinchain::Complex> roots;
        for (auto& z : in)
          roots.push_back({z.at(0).get<double>(), z.at(1).get<double>()});
        auto rep = spinchain::quantum_numbers(bn, roots);
        Json j;
        j["J"] = rep.j;
        Json strings = Json::array();
        for (auto& s : rep.strings) {
          Json g;
          g["members"] = s.members;
          g["center"] = s.center;
          g["J_string"] = s.j_string;
          strings.push_back(g);
        }
        j["strings"] = strings;
        out.emit(j);
      }
    } else if (*ls) {
      auto parse_partition = [](const std::string& text) {
        std::vector<int> rows;
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ','))
          if (!tok.empty()) rows.push_back(std::stoi(tok));
        return Partition::sorted(std::move(rows));
      };
      Partition outer = parse_partition(ls_shape);
      Partition inner =
          ls_inner.empty() ? Partition{} : parse_partition(ls_inner);
      auto poly = ls_cyl > 0
                      ? loopschur::cylindric_loop_schur(outer, inner, ls_cyl,
                                                        ls_r, ls_letters, ls_n)
                      : loopschur::loop_schur(outer, inner, ls_r, ls_letters,
                                              ls_n);
      Json j;
      Json monomials = Json::array();
      for (auto& m : poly) {
        Json mm = Json::array();
        for (auto& [key, e] : m.exponents)
          mm.push_back(Json::array({key.first, key.second, e}));
        monomials.push_back(mm);
      }
      j["monomials"] = monomials;
      j["terms"] = poly.size();
      if (ls_trop && !ls_eval.empty()) {
        Json assign = Json::parse(slurp(ls_eval));
        auto value = [&](int i, int res) -> long long {
          std::string key = std::to_string(i) + "," + std::to_string(res);
          return assign.contains(key) ? assign.at(key).get<long long>() : 0;
        };
        j["trop"] = loopschur::tropical_eval(poly, value);
      }
      out.emit(j);
    } else if (*fl) {
      std::vector<int> rows;
      std::stringstream ss(fl_lambda);
      std::string tok;
      while (std::getline(ss, tok, ','))
        if (!tok.empty()) rows.push_back(std::stoi(tok));
      auto t = crystal_d::fill(fl_r, fl_s, fl_n,
                               Partition::sorted(std::move(rows)));
      Json j;
      j["tableau"] = to_json(t);
      j["text"] = t.str();
      out.emit(j);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
