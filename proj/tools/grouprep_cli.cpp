#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "acceptance/checks.hpp"
#include "grouprep/coupling.hpp"
#include "grouprep/euler.hpp"
#include "grouprep/gelfand.hpp"
#include "grouprep/repmat.hpp"
#include "grouprep/su2.hpp"
#include "grouprep/su3basis.hpp"
#include "json.hpp"

using json = nlohmann::ordered_json;
using namespace grouprep;

namespace {

struct Config {
  int degree_cap = 12;
  int quad_order = 10;
  int max_lm = 4;
  uint64_t seed = 20240611;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::vector<int> int_list(const std::string& s, size_t want = 0) {
  std::vector<int> v;
  for (const auto& t : split(s, ',')) {
    try {
      size_t used = 0;
      v.push_back(std::stoi(t, &used));
      if (used != t.size()) throw UsageError("bad integer '" + t + "'");
    } catch (const std::logic_error&) {
      throw UsageError("bad integer '" + t + "'");
    }
  }
  if (want && v.size() != want) throw UsageError("expected " + std::to_string(want) + " integers in '" + s + "'");
  return v;
}

// "3/2" or "1" or "-1/2" as twice the value
int doubled(const std::string& t) {
  const auto parts = split(t, '/');
  if (parts.size() == 1) return 2 * int_list(parts[0], 1)[0];
  if (parts.size() == 2 && parts[1] == "2") return int_list(parts[0], 1)[0];
  throw UsageError("expected an integer or half-integer, got '" + t + "'");
}

std::vector<int> doubled_list(const std::string& s, size_t want) {
  std::vector<int> v;
  for (const auto& t : split(s, ',')) v.push_back(doubled(t));
  if (v.size() != want) throw UsageError("expected " + std::to_string(want) + " values in '" + s + "'");
  return v;
}

// an existing JSON file holding an array of reals, or an inline comma list
std::vector<double> angle_list(const std::string& s) {
  std::vector<double> v;
  if (std::filesystem::exists(s)) {
    std::ifstream in(s);
    try {
      for (const auto& x : json::parse(in)) v.push_back(x.get<double>());
    } catch (const json::exception& e) {
      throw UsageError("angle file " + s + ": " + e.what());
    }
    return v;
  }
  for (const auto& t : split(s, ',')) {
    try {
      v.push_back(std::stod(t));
    } catch (const std::logic_error&) {
      throw UsageError("bad angle '" + t + "'");
    }
  }
  return v;
}

json exact_json(const RadicalScalar& x) {
  json terms = json::array();
  for (const auto& t : serialize(x)) terms.push_back({{"coeff", t.coeff}, {"radicand", t.radicand.get_str()}});
  return {{"text", x.str()}, {"terms", terms}};
}

json matrix_json(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(row);
  }
  return rows;
}

Su3Label su3_label(int l, int m, const std::string& pqr) {
  const auto v = int_list(pqr, 3);
  const Su3Label x{l, m, v[0], v[1], v[2]};
  if (!valid(x)) throw DomainError("invalid label " + x.str());
  return x;
}

std::array<Su3Label, 3> su3_states(const RepTriple& reps, const std::string& s) {
  const auto parts = split(s, ';');
  if (parts.size() != 3) throw UsageError("expected three states p,q,r;p,q,r;p,q,r");
  std::array<Su3Label, 3> out;
  for (int i = 0; i < 3; ++i) out[i] = su3_label(reps[i].lambda, reps[i].mu, parts[i]);
  return out;
}

Su3Angles su3_angles(const std::vector<double>& v) {
  if (v.size() != 8) throw UsageError("SU(3) angles need 8 values: psi,theta,phi,chi,nu,psi',theta',phi'");
  Su3Angles a;
  a.omega = {v[0], v[1], v[2]};
  a.chi = v[3];
  a.nu = v[4];
  a.omega_prime = {v[5], v[6], v[7]};
  return a;
}

void load_config(const std::string& path, Config& c, const CLI::App& app) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("config " + path + ": " + e.what());
  }
  auto take = [&](const char* key, const char* flag, auto& field) {
    if (j.contains(key) && app.count(flag) == 0) field = j[key].get<std::remove_reference_t<decltype(field)>>();
  };
  take("degree_cap", "--degree-cap", c.degree_cap);
  take("quad_order", "--order", c.quad_order);
  take("max_lm", "--max-lm", c.max_lm);
  take("seed", "--seed", c.seed);
  if (c.degree_cap <= 0 || c.quad_order <= 0 || c.max_lm < 0) throw UsageError("config caps must be positive");
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  std::string config_path;
  CLI::App app{"Exact and numerical tools for SU(n) and SO(n) representations"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--order", cfg.quad_order, "quadrature order")->check(CLI::PositiveNumber);
  app.add_option("--max-lm", cfg.max_lm, "lambda+mu bound")->check(CLI::NonNegativeNumber);
  app.add_option("--degree-cap", cfg.degree_cap, "series truncation degree")->check(CLI::PositiveNumber);
  app.add_option("--config", config_path, "JSON file with degree_cap, quad_order, max_lm, seed");

  json inputs = json::object();
  std::string command;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
    CLI::App* s = parent->add_subcommand(name, desc);
    s->callback([&command, parent, name] { command = parent->get_name() + " " + name; });
    return s;
  };

  // gelfand
  CLI::App* gel = app.add_subcommand("gelfand", "Gel'fand patterns")->require_subcommand(1);
  std::string top;
  {
    auto* d = leaf(gel, "dim", "number of patterns with the given top row");
    d->add_option("--top", top)->required();
    auto* e = leaf(gel, "enum", "list the patterns");
    e->add_option("--top", top)->required();
  }

  // euler
  CLI::App* eu = app.add_subcommand("euler", "Euler parametrization of SO(n) and SU(n)")->require_subcommand(1);
  int n = 2, m = 1, count = 1;
  std::string family = "su", angles, entry;
  {
    auto* c = leaf(eu, "count", "number of parameters N(n,m)");
    c->add_option("--n", n)->required()->check(CLI::Range(1, 1000));
    c->add_option("--m", m)->required()->check(CLI::Range(0, 2));
    auto* mx = leaf(eu, "matrix", "group element from angles");
    mx->add_option("--family", family)->check(CLI::IsMember({"su", "so"}));
    mx->add_option("--n", n)->required()->check(CLI::Range(2, 64));
    mx->add_option("--angles", angles, "JSON file or comma list")->required();
    auto* sm = leaf(eu, "sample", "Haar-random angles and matrices");
    sm->add_option("--family", family)->check(CLI::IsMember({"su", "so"}));
    sm->add_option("--n", n)->required()->check(CLI::Range(2, 64));
    sm->add_option("--count", count)->check(CLI::Range(1, 10000));
    auto* in = leaf(eu, "integrate", "integral of 1 or of u_ij conj(u_kl) over the grid");
    in->add_option("--family", family)->check(CLI::IsMember({"su", "so"}));
    in->add_option("--n", n)->required()->check(CLI::Range(2, 6));
    in->add_option("--entry", entry, "i,j,k,l (1-based)");
  }

  // su2
  CLI::App* s2 = app.add_subcommand("su2", "SU(2) coupling and D matrices")->require_subcommand(1);
  std::string js, ms;
  {
    auto* t = leaf(s2, "threej", "3j symbol");
    t->add_option("--j", js, "j1,j2,j3 (half-integers as 1/2)")->required();
    t->add_option("--m", ms, "m1,m2,m3")->required();
    auto* c = leaf(s2, "cg", "Clebsch-Gordan coefficient <j1 m1 j2 m2|j m>");
    c->add_option("--j", js, "j1,j2,j")->required();
    c->add_option("--m", ms, "m1,m2,m")->required();
    auto* d = leaf(s2, "dmat", "D matrix");
    d->add_option("--j", js, "j")->required();
    d->add_option("--angles", angles, "psi,theta,phi")->required();
  }

  // su3
  CLI::App* s3 = app.add_subcommand("su3", "SU(3) basis and coupling")->require_subcommand(1);
  std::string lm, label, reps, states, rows, cols, pq, method = "closed";
  int rho = 0, draws = 10, gf_degree = 6;
  {
    auto* b = leaf(s3, "basis", "labels, or one normalized state");
    b->add_option("--lm", lm, "lambda,mu")->required();
    b->add_option("--label", label, "p,q,r");
    auto* d = leaf(s3, "dmat", "representation matrix");
    d->add_option("--lm", lm)->required();
    d->add_option("--angles", angles, "JSON file or comma list of 8 angles")->required();
    d->add_option("--method", method)->check(CLI::IsMember({"oracle", "closed"}));
    auto* t = leaf(s3, "threej", "3j symbol");
    t->add_option("--reps", reps, "l,m;l,m;l,m")->required();
    t->add_option("--states", states, "p,q,r;p,q,r;p,q,r")->required();
    t->add_option("--rho", rho)->check(CLI::NonNegativeNumber);
    auto* i = leaf(s3, "isoscalar", "isoscalar factor");
    i->add_option("--reps", reps)->required();
    i->add_option("--pq", pq, "p,q;p,q;p,q")->required();
    i->add_option("--rho", rho)->check(CLI::NonNegativeNumber);
    auto* g = leaf(s3, "gaunt", "integral of three representation matrix entries");
    g->add_option("--reps", reps)->required();
    g->add_option("--rows", rows, "p,q,r;p,q,r;p,q,r")->required();
    g->add_option("--cols", cols, "p,q,r;p,q,r;p,q,r")->required();
    auto* gc = leaf(s3, "gfcheck", "generating-function identity on random arguments");
    gc->add_option("--draws", draws)->check(CLI::Range(1, 1000));
    auto* gr = leaf(s3, "gfreport", "compare the closed generating function with projected invariants");
    gr->add_option("--degree", gf_degree)->check(CLI::Range(0, 8));
  }

  CLI::App* ver = app.add_subcommand("verify", "acceptance suite")->require_subcommand(1);
  leaf(ver, "all", "run every acceptance check");

  try {
    app.parse(argc, argv);
    if (!config_path.empty()) load_config(config_path, cfg, app);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  const auto t0 = std::chrono::steady_clock::now();
  json out;
  out["command"] = command;
  int status = 0;
  try {
    if (command == "gelfand dim" || command == "gelfand enum") {
      const auto t = int_list(top);
      inputs["top"] = t;
      const auto ps = enumerate(t);
      if (command == "gelfand dim") {
        out["value"] = ps.size();
      } else {
        json tab = json::array();
        for (const auto& p : ps) tab.push_back(p.str());
        out["table"] = tab;
      }
    } else if (command == "euler count") {
      inputs = {{"n", n}, {"m", m}};
      out["value"] = param_count(n, m);
      out["exact"] = std::to_string(param_count(n, m));
    } else if (command == "euler matrix") {
      const Family f = parse_family(family);
      GroupPoint p{f, n, angle_list(angles)};
      inputs = {{"family", family_name(f)}, {"n", n}, {"angles", p.angles}};
      if (p.angles.size() != angle_count(f, n))
        throw UsageError("expected " + std::to_string(angle_count(f, n)) + " angles");
      out["matrix"] = matrix_json(group_matrix(p));
    } else if (command == "euler sample") {
      const Family f = parse_family(family);
      inputs = {{"family", family_name(f)}, {"n", n}, {"count", count}, {"seed", cfg.seed}};
      std::mt19937_64 rng(cfg.seed);
      json tab = json::array();
      for (int k = 0; k < count; ++k) {
        const GroupPoint p = haar_sample(f, n, rng);
        tab.push_back({{"angles", p.angles}, {"matrix", matrix_json(group_matrix(p))}});
      }
      out["table"] = tab;
    } else if (command == "euler integrate") {
      const Family f = parse_family(family);
      inputs = {{"family", family_name(f)}, {"n", n}, {"order", cfg.quad_order}};
      const QuadratureGrid g = quad_grid(f, n, cfg.quad_order);
      if (g.size() > 50'000'000) throw DomainError("grid too large; lower --order");
      std::complex<double> v;
      if (entry.empty()) {
        v = integrate([](const GroupPoint&) { return std::complex<double>(1); }, g);
      } else {
        const auto e = int_list(entry, 4);
        for (int x : e)
          if (x < 1 || x > n) throw DomainError("entry indices must lie in 1.." + std::to_string(n));
        inputs["entry"] = e;
        v = integrate_matrix(
            [&](const Eigen::MatrixXcd& U) { return U(e[0] - 1, e[1] - 1) * std::conj(U(e[2] - 1, e[3] - 1)); }, g);
      }
      out["value"] = {v.real(), v.imag()};
    } else if (command == "su2 threej" || command == "su2 cg") {
      const auto j = doubled_list(js, 3), mm = doubled_list(ms, 3);
      inputs = {{"j", js}, {"m", ms}};
      const RadicalScalar r = command == "su2 threej" ? wigner3j(j[0], j[1], j[2], mm[0], mm[1], mm[2])
                                                      : clebsch(j[0], mm[0], j[1], mm[1], j[2], mm[2]);
      out["value"] = r.to_double();
      out["exact"] = exact_json(r);
    } else if (command == "su2 dmat") {
      const int j2 = doubled_list(js, 1)[0];
      const auto a = angle_list(angles);
      if (a.size() != 3) throw UsageError("expected psi,theta,phi");
      inputs = {{"j", js}, {"angles", a}};
      out["matrix"] = matrix_json(d_matrix_closed(j2, a[0], a[1], a[2]));
    } else if (command == "su3 basis") {
      const auto v = int_list(lm, 2);
      inputs["lm"] = v;
      if (label.empty()) {
        json tab = json::array();
        for (const auto& x : labels(v[0], v[1]))
          tab.push_back({{"label", x.str()}, {"Y", x.y()}, {"2T", x.t2()}, {"2T0", x.t02()}});
        out["table"] = tab;
      } else {
        const Su3Label x = su3_label(v[0], v[1], label);
        inputs["label"] = label;
        const Su3State s = state_poly(x);
        out["value"] = to_string(s.poly());
        out["exact"] = {{"shape", to_string(s.shape)}, {"norm_sq", s.norm_sq.get_str()}};
      }
    } else if (command == "su3 dmat") {
      const auto v = int_list(lm, 2);
      const Su3Angles a = su3_angles(angle_list(angles));
      inputs = {{"lm", v}, {"method", method}};
      const RepMatrix r =
          method == "oracle" ? rep_matrix_oracle(v[0], v[1], angles_to_unitary(a)) : dmatrix_closed(v[0], v[1], a);
      json ls = json::array();
      for (const auto& x : labels(v[0], v[1])) ls.push_back(x.str());
      out["labels"] = ls;
      out["matrix"] = matrix_json(r.entries);
    } else if (command == "su3 threej") {
      const RepTriple r = parse_reps(reps);
      inputs = {{"reps", reps}, {"states", states}, {"rho", rho}};
      const RadicalScalar x = su3_3j(r, su3_states(r, states), rho);
      out["value"] = x.to_double();
      out["exact"] = exact_json(x);
    } else if (command == "su3 isoscalar") {
      const RepTriple r = parse_reps(reps);
      const auto parts = split(pq, ';');
      if (parts.size() != 3) throw UsageError("expected p,q;p,q;p,q");
      std::array<std::array<int, 2>, 3> b;
      for (int i = 0; i < 3; ++i) {
        const auto v = int_list(parts[i], 2);
        b[i] = {v[0], v[1]};
      }
      inputs = {{"reps", reps}, {"pq", pq}, {"rho", rho}};
      const IsoscalarResult x = isoscalar_factor(r, b, rho);
      out["value"] = x.value.to_double();
      out["exact"] = exact_json(x.value);
      out["substates_checked"] = x.substates_checked;
    } else if (command == "su3 gaunt") {
      const RepTriple r = parse_reps(reps);
      inputs = {{"reps", reps}, {"rows", rows}, {"cols", cols}, {"order", cfg.quad_order}};
      const auto R = su3_states(r, rows), C = su3_states(r, cols);
      const RadicalScalar x = gaunt_exact(r, R, C);
      const auto v = gaunt_numeric(r, R, C, quad_grid(Family::unitary, 3, cfg.quad_order));
      out["value"] = {v.real(), v.imag()};
      out["exact"] = exact_json(x);
    } else if (command == "su3 gfcheck") {
      inputs = {{"draws", draws}, {"degree_cap", cfg.degree_cap}, {"seed", cfg.seed}};
      std::mt19937_64 rng(cfg.seed);
      auto vec = [&](double s) {
        std::uniform_real_distribution<double> u(-s, s);
        Eigen::Vector3cd v;
        for (int i = 0; i < 3; ++i) v(i) = {u(rng), u(rng)};
        return v;
      };
      double worst = 0;
      for (int k = 0; k < draws; ++k) {
        const Eigen::Vector3cd a = vec(0.5), ap = vec(0.5), l = vec(0.4), lp = vec(0.4);
        worst = std::max(worst, gf_identity_check(a, ap, l, lp, cfg.degree_cap));
      }
      out["value"] = worst;
    } else if (command == "su3 gfreport") {
      inputs = {{"degree", gf_degree}, {"max_lm", cfg.max_lm}};
      const GfReport r = special_gf_report(gf_degree, cfg.max_lm);
      json tab = json::array();
      for (const auto& e : r.entries)
        tab.push_back({{"degree", e.degree},
                       {"scalars", e.scalars},
                       {"parameters", e.parameters},
                       {"coefficient", e.coefficient.get_str()},
                       {"status", e.status},
                       {"detail", e.detail},
                       {"projection", e.projection}});
      out["table"] = tab;
      out["summary"] = {{"geometric_ok", r.geometric_ok},
                        {"agreements", r.agreements},
                        {"disagreements", r.disagreements},
                        {"skipped", r.skipped}};
    } else if (command == "verify all") {
      acceptance::CheckConfig c;
      c.max_lm = cfg.max_lm;
      c.order = cfg.quad_order;
      c.seed = cfg.seed;
      inputs = {{"max_lm", c.max_lm}, {"order", c.order}, {"seed", c.seed}};
      json tab = json::array();
      bool all = true;
      for (const auto& r : acceptance::run_all(c)) {
        std::cerr << acceptance::format_line(r) << std::endl;
        tab.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"seconds", r.seconds}, {"detail", r.detail}});
        all = all && r.pass;
      }
      out["table"] = tab;
      out["value"] = all;
      status = all ? 0 : 1;
    } else {
      throw UsageError("unknown command");
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 1;
  } catch (const StructuralError& e) {
    std::cerr << "structural error: " << e.what() << "\n";
    return 1;
  }
  out["inputs"] = inputs;
  out["elapsed_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  std::cout << out.dump() << std::endl;
  return status;
}
