#include "grouprep/coupling.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

#include "grouprep/repmat.hpp"
#include "grouprep/su2.hpp"

namespace grouprep {

namespace {

constexpr int kScalars = 7;
const char* const kScalarIds[kScalars] = {"1·34", "12·3", "1·56", "12·5", "3·56", "5·34", "det"};

// (factor, row) pairs touched by each scalar, rows 0/1
const int kScalarRows[kScalars][3][2] = {
    {{0, 0}, {1, 0}, {1, 1}}, {{0, 0}, {0, 1}, {1, 0}}, {{0, 0}, {2, 0}, {2, 1}}, {{0, 0}, {0, 1}, {2, 0}},
    {{1, 0}, {2, 0}, {2, 1}}, {{2, 0}, {1, 0}, {1, 1}}, {{0, 0}, {1, 0}, {2, 0}}};

RationalPoly zvar(int a, int i, int k) { return RationalPoly::variable(coupling_space(), a * 6 + i * 3 + k); }

RationalPoly triple_det(const std::array<std::pair<int, int>, 3>& v) {
  RationalPoly d(coupling_space());
  const int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  for (int s = 0; s < 6; ++s) {
    RationalPoly t = zvar(v[0].first, v[0].second, perm[s][0]) * zvar(v[1].first, v[1].second, perm[s][1]) *
                     zvar(v[2].first, v[2].second, perm[s][2]);
    d += s < 3 ? t : t * Rational(-1);
  }
  return d;
}

std::array<std::array<int, 2>, 3> signature(const std::array<int, 7>& e) {
  std::array<std::array<int, 2>, 3> deg{};
  for (int s = 0; s < kScalars; ++s)
    for (const auto& fr : kScalarRows[s]) deg[fr[0]][fr[1]] += e[s];
  return deg;
}

void check_state(const Irrep& rep, const Su3Label& l) {
  if (l.lambda != rep.lambda || l.mu != rep.mu || !valid(l))
    throw DomainError("state " + l.str() + " does not belong to the requested representation");
}

}  // namespace

SpacePtr coupling_space() {
  static const SpacePtr s = [] {
    std::vector<std::string> names;
    for (int a = 1; a <= 3; ++a)
      for (int i = 1; i <= 2; ++i)
        for (int k = 1; k <= 3; ++k)
          names.push_back("z" + std::to_string(a) + std::to_string(i) + "_" + std::to_string(k));
    return make_space(names);
  }();
  return s;
}

Blocks coupling_blocks() {
  Blocks b;
  for (int r = 0; r < 6; ++r) b.push_back({3 * r, 3 * r + 1, 3 * r + 2});
  return b;
}

const std::vector<ElementaryScalar>& elementary_scalars() {
  static const std::vector<ElementaryScalar> scalars = [] {
    std::vector<ElementaryScalar> out;
    const std::array<std::array<std::pair<int, int>, 3>, kScalars> vecs{{{{{0, 0}, {1, 0}, {1, 1}}},
                                                                         {{{0, 0}, {0, 1}, {1, 0}}},
                                                                         {{{0, 0}, {2, 0}, {2, 1}}},
                                                                         {{{0, 0}, {0, 1}, {2, 0}}},
                                                                         {{{1, 0}, {2, 0}, {2, 1}}},
                                                                         {{{2, 0}, {1, 0}, {1, 1}}},
                                                                         {{{0, 0}, {1, 0}, {2, 0}}}}};
    for (int s = 0; s < kScalars; ++s) out.push_back({kScalarIds[s], triple_det(vecs[s])});
    return out;
  }();
  return scalars;
}

std::string str(const RepTriple& r) {
  std::string s;
  for (int i = 0; i < 3; ++i) {
    if (i) s += ";";
    s += std::to_string(r[i].lambda) + "," + std::to_string(r[i].mu);
  }
  return s;
}

RepTriple parse_reps(const std::string& text) {
  RepTriple r;
  std::stringstream ss(text);
  std::string part;
  int i = 0;
  while (std::getline(ss, part, ';')) {
    if (i >= 3) throw DomainError("expected three representations");
    int l = 0, m = 0;
    char comma = 0;
    std::stringstream ps(part);
    if (!(ps >> l >> comma >> m) || comma != ',' || l < 0 || m < 0)
      throw DomainError("bad representation '" + part + "'");
    r[i++] = {l, m};
  }
  if (i != 3) throw DomainError("expected three representations");
  return r;
}

ExactPoly Invariant::poly() const { return to_exact(shape, sqrt_rational(norm_sq)); }

std::vector<std::array<int, 7>> compatible_monomials(const RepTriple& reps) {
  std::array<std::array<int, 2>, 3> want;
  int bound = 0;
  for (int a = 0; a < 3; ++a) {
    if (reps[a].lambda < 0 || reps[a].mu < 0) throw DomainError("negative representation label");
    want[a] = {reps[a].lambda + reps[a].mu, reps[a].mu};
    bound = std::max(bound, want[a][0]);
  }
  std::vector<std::array<int, 7>> out;
  std::array<int, 7> e{};
  std::function<void(int)> rec = [&](int s) {
    const auto deg = signature(e);
    for (int a = 0; a < 3; ++a)
      for (int r = 0; r < 2; ++r)
        if (deg[a][r] > want[a][r]) return;
    if (s == kScalars) {
      if (deg == want) out.push_back(e);
      return;
    }
    for (int v = 0; v <= bound; ++v) {
      e[s] = v;
      rec(s + 1);
    }
    e[s] = 0;
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

const MultiplicityBasis& enumerate_invariants(const RepTriple& reps) {
  static std::mutex mu;
  static std::map<RepTriple, MultiplicityBasis> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(reps);
    if (it != cache.end()) return it->second;
  }
  MultiplicityBasis mb;
  mb.reps = reps;
  mb.monomials = compatible_monomials(reps);
  const auto& sc = elementary_scalars();
  std::vector<Rational> gram;  // <u_j, u_j>
  for (const auto& e : mb.monomials) {
    RationalPoly v = RationalPoly::constant(coupling_space(), Rational(1));
    for (int s = 0; s < kScalars; ++s)
      if (e[s]) v = v * pow(sc[s].poly, e[s]);
    RationalPoly w = v;
    for (size_t j = 0; j < mb.invariants.size(); ++j) {
      const Rational proj = bargmann_inner(mb.invariants[j].shape, v) / gram[j];
      if (proj != 0) w -= mb.invariants[j].shape * proj;
    }
    if (w.is_zero()) continue;
    const Rational n = bargmann_inner(w, w);
    gram.push_back(n);
    mb.invariants.push_back({e, w, Rational(1) / n});
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(reps, std::move(mb)).first->second;
}

RadicalScalar su3_3j(const RepTriple& reps, const std::array<Su3Label, 3>& states, int rho) {
  for (int a = 0; a < 3; ++a) check_state(reps[a], states[a]);
  const MultiplicityBasis& mb = enumerate_invariants(reps);
  if (rho < 0 || rho >= static_cast<int>(mb.multiplicity()))
    throw DomainError("multiplicity index " + std::to_string(rho) + " out of range (multiplicity " +
                      std::to_string(mb.multiplicity()) + ")");
  const Invariant& h = mb.invariants[rho];
  std::array<Su3State, 3> st{state_poly(states[0]), state_poly(states[1]), state_poly(states[2])};
  Rational sum = 0;
  for (const auto& [m, c] : h.shape.terms()) {
    Rational prod = c * Rational(monomial_weight(m));
    for (int a = 0; a < 3 && prod != 0; ++a) {
      Monomial part;
      for (int v = 0; v < 6; ++v) part.e[v] = m.e[6 * a + v];
      prod *= st[a].shape.coeff(part);
    }
    sum += prod;
  }
  if (sum == 0) return {};
  return RadicalScalar(sum) * sqrt_rational(st[0].norm_sq * st[1].norm_sq * st[2].norm_sq * h.norm_sq);
}

bool selection_rule(int lambda1, int lambda2, int lambda3) { return (lambda1 + lambda2 + lambda3) % 2 == 0; }

IsoscalarResult isoscalar_factor(const RepTriple& reps, const std::array<std::array<int, 2>, 3>& pq, int rho) {
  std::array<int, 3> t2{};
  for (int a = 0; a < 3; ++a) {
    const Su3Label probe{reps[a].lambda, reps[a].mu, pq[a][0], pq[a][1], 0};
    if (!valid(probe)) throw DomainError("block (p,q) outside the representation");
    t2[a] = probe.t2();
  }
  IsoscalarResult res;
  bool have = false;
  for (int r0 = 0; r0 <= t2[0]; ++r0)
    for (int r1 = 0; r1 <= t2[1]; ++r1)
      for (int r2 = 0; r2 <= t2[2]; ++r2) {
        const std::array<int, 3> r{r0, r1, r2};
        std::array<Su3Label, 3> st;
        std::array<int, 3> m2{};
        for (int a = 0; a < 3; ++a) {
          st[a] = {reps[a].lambda, reps[a].mu, pq[a][0], pq[a][1], r[a]};
          m2[a] = st[a].t02();
        }
        if (m2[0] + m2[1] + m2[2] != 0) continue;
        const RadicalScalar w = wigner3j(t2[0], t2[1], t2[2], m2[0], m2[1], m2[2]);
        const RadicalScalar s = su3_3j(reps, st, rho);
        if (w.is_zero()) {
          if (!s.is_zero()) throw StructuralError("SU(3) 3j is nonzero where the SU(2) 3j vanishes");
          continue;
        }
        const RadicalScalar ratio = s / w;
        ++res.substates_checked;
        if (!have) {
          res.value = ratio;
          have = true;
        } else if (ratio != res.value) {
          throw StructuralError("isoscalar ratio depends on the magnetic substate");
        }
      }
  if (!have) throw DomainError("isoscalar factor undefined: every SU(2) 3j in the block vanishes");
  return res;
}

cplx gaunt_numeric(const RepTriple& reps, const std::array<Su3Label, 3>& rows, const std::array<Su3Label, 3>& cols,
                   const QuadratureGrid& grid) {
  std::vector<EntryExpansion> factors;
  for (int a = 0; a < 3; ++a) {
    check_state(reps[a], rows[a]);
    check_state(reps[a], cols[a]);
    const auto ls = labels(reps[a].lambda, reps[a].mu);
    const int i = static_cast<int>(std::find(ls.begin(), ls.end(), rows[a]) - ls.begin());
    const int j = static_cast<int>(std::find(ls.begin(), ls.end(), cols[a]) - ls.begin());
    factors.push_back(rep_entry_expansion(reps[a].lambda, reps[a].mu, i, j));
  }
  return haar_integral(factors, {}, grid);
}

RadicalScalar gaunt_exact(const RepTriple& reps, const std::array<Su3Label, 3>& rows,
                          const std::array<Su3Label, 3>& cols) {
  RadicalScalar s;
  const int mult = static_cast<int>(enumerate_invariants(reps).multiplicity());
  for (int rho = 0; rho < mult; ++rho) s += su3_3j(reps, rows, rho) * su3_3j(reps, cols, rho);
  return s;
}

cplx gaunt_su2(const std::array<int, 3>& j2, const std::array<int, 3>& row_m2, const std::array<int, 3>& col_m2,
               const QuadratureGrid& grid) {
  if (grid.family != Family::unitary || grid.n != 2) throw DomainError("gaunt_su2 expects an SU(2) grid");
  for (int a = 0; a < 3; ++a)
    if (!valid_jm(j2[a], row_m2[a]) || !valid_jm(j2[a], col_m2[a])) throw DomainError("invalid (j, m)");
  return integrate_matrix(
      [&](const Eigen::MatrixXcd& U) {
        const auto ang = angles_from_matrix(U);
        cplx v = 1.0;
        for (int a = 0; a < 3; ++a) {
          const Eigen::MatrixXcd D = d_matrix_closed(j2[a], ang[0], ang[1], ang[2]);
          v *= D((j2[a] - row_m2[a]) / 2, (j2[a] - col_m2[a]) / 2);
        }
        return v;
      },
      grid);
}

namespace {

// formal symbols for the special-case generating function
enum : int { kX1 = 0, kX2 = 3, kY1 = 6, kY2 = 9, kTau = 12, kS = 15, kGfVars = 22 };

SpacePtr gf_space() {
  static const SpacePtr s = [] {
    std::vector<std::string> n;
    for (const char* base : {"x1", "x2", "y1", "y2"})
      for (int i = 1; i <= 3; ++i) n.push_back(base + ("[" + std::to_string(i) + "]"));
    for (int i = 1; i <= 3; ++i) n.push_back("tau" + std::to_string(i));
    for (int s = 0; s < kScalars; ++s) n.push_back(std::string("[") + kScalarIds[s] + "]");
    return make_space(n);
  }();
  return s;
}

int scalar_degree(const Monomial& m) {
  int d = 0;
  for (int s = 0; s < kScalars; ++s) d += m.e[kS + s];
  return d;
}

RationalPoly mul_scalar_capped(const RationalPoly& a, const RationalPoly& b, int cap) {
  RationalPoly r(a.space());
  for (const auto& [ma, ca] : a.terms()) {
    const int da = scalar_degree(ma);
    for (const auto& [mb, cb] : b.terms()) {
      if (da + scalar_degree(mb) > cap) continue;
      Monomial m;
      for (int k = 0; k < kGfVars; ++k) m.e[k] = static_cast<uint8_t>(ma.e[k] + mb.e[k]);
      r.add(m, ca * cb);
    }
  }
  return r;
}

std::string monomial_text(const Monomial& m, int from, int to) {
  const auto s = gf_space();
  std::string out;
  for (int v = from; v < to; ++v) {
    if (!m.e[v]) continue;
    if (!out.empty()) out += " ";
    out += s->name(v);
    if (m.e[v] > 1) out += "^" + std::to_string(m.e[v]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace

GfReport special_gf_report(int degree_cap, int max_lm) {
  if (degree_cap < 0 || degree_cap > 8) throw DomainError("degree cap outside [0, 8]");
  const auto sp = gf_space();
  auto v = [&](int i) { return RationalPoly::variable(sp, i); };
  auto S = [&](int s) { return v(kS + s); };
  const RationalPoly one = RationalPoly::constant(sp, Rational(1));
  // transcription of the printed special-case expression; scalar order 1.34, 12.3, 1.56, 12.5, 3.56, 5.34, det
  const RationalPoly A = v(kX2 + 1) * S(4) + v(kX2 + 0) * S(2);
  const RationalPoly B = v(kX1 + 0) * v(kY2 + 1) * v(kY1 + 2) * (v(kTau + 1) * S(2) + v(kTau + 0) * S(4)) * Rational(-1);
  const RationalPoly C = one - v(kY1 + 2) * v(kTau + 1) * v(kX1 + 0) * S(2) - v(kY1 + 2) * v(kTau + 0) * v(kX1 + 1) * S(4);
  const RationalPoly D = (v(kX2 + 0) * v(kTau + 0) * v(kX1 + 2) * v(kX1 + 1) -
                          v(kX2 + 1) * v(kTau + 1) * v(kX1 + 0) * v(kX1 + 2) +
                          v(kX2 + 2) * v(kTau + 2) * v(kX1 + 0) * v(kX1 + 1)) *
                         S(6);
  const RationalPoly F = v(kX2 + 2) * (v(kY2 + 1) * S(5) + v(kY2 + 0) * S(3) + v(kX2 + 1) * v(kY2 + 0) * S(1) +
                                       v(kX2 + 0) * v(kY2 + 1) * S(0));
  const RationalPoly X = A * B + v(kY2 + 2) * C * D + F;
  const RationalPoly den = one - v(kTau + 0) * v(kY1 + 2) * v(kX1 + 1) * S(4) - v(kTau + 1) * v(kX1 + 0) * v(kY1 + 2) * S(2);

  const int cap = degree_cap;
  RationalPoly ex = one, term = one;
  for (int k = 1; k <= cap; ++k) {
    term = mul_scalar_capped(term, X, cap) * Rational(1, k);
    if (term.is_zero()) break;
    ex += term;
  }
  const RationalPoly q = one - den;
  RationalPoly geo = one, qp = one;
  for (int k = 1; k <= cap; ++k) {
    qp = mul_scalar_capped(qp, q, cap);
    if (qp.is_zero()) break;
    geo += qp;
  }
  GfReport rep;
  rep.degree_cap = cap;
  {
    const RationalPoly check = mul_scalar_capped(den, geo, cap) - one;
    rep.geometric_ok = check.is_zero();
  }
  const RationalPoly G = mul_scalar_capped(ex, geo, cap);

  std::map<std::pair<RepTriple, std::array<std::array<int, 2>, 3>>, std::pair<std::string, std::string>> memo;
  for (const auto& [m, c] : G.terms()) {
    GfReportEntry e;
    e.degree = scalar_degree(m);
    e.scalars = monomial_text(m, kS, kGfVars);
    e.parameters = monomial_text(m, 0, kS);
    e.coefficient = c;
    std::array<int, 7> ex7{};
    for (int s = 0; s < kScalars; ++s) ex7[s] = m.e[kS + s];
    const auto deg = signature(ex7);
    RepTriple reps;
    std::array<std::array<int, 2>, 3> pq{};
    std::string why;
    int lm = 0;
    for (int a = 0; a < 3 && why.empty(); ++a) {
      reps[a] = {deg[a][0] - deg[a][1], deg[a][1]};
      lm = std::max(lm, deg[a][0]);
      const int x1 = m.e[kX1 + a], x2 = m.e[kX2 + a], y1 = m.e[kY1 + a], y2 = m.e[kY2 + a];
      if (x1 + x2 != reps[a].lambda || y1 + y2 != reps[a].mu) {
        why = "factor " + std::to_string(a + 1) + ": parameter powers x1+x2=" + std::to_string(x1 + x2) +
              ", y1+y2=" + std::to_string(y1 + y2) + " do not match (lambda,mu)=(" + std::to_string(reps[a].lambda) +
              "," + std::to_string(reps[a].mu) + ")";
        break;
      }
      pq[a] = {x1, y2};
    }
    if (why.empty()) {
      const int k1 = m.e[kTau], k2 = m.e[kTau + 1], k3 = m.e[kTau + 2];
      const std::array<int, 3> from_tau{k1 + k2, k1 + k3, k2 + k3};
      for (int a = 0; a < 3; ++a) {
        const int t2 = reps[a].mu + pq[a][0] - pq[a][1];
        if (t2 != from_tau[a]) {
          why = "factor " + std::to_string(a + 1) + ": tau powers give 2t=" + std::to_string(from_tau[a]) +
                " but the decoded block has 2t=" + std::to_string(t2);
          break;
        }
      }
    }
    if (!why.empty()) {
      e.status = "undecodable";
      e.detail = why;
    } else if (lm > max_lm) {
      e.status = "beyond-cap";
      e.detail = "representation degree above max_lm";
    } else {
      auto key = std::make_pair(reps, pq);
      auto it = memo.find(key);
      if (it == memo.end()) {
        std::pair<std::string, std::string> res;
        if (enumerate_invariants(reps).multiplicity() == 0) {
          res = {"projection-zero", "no invariant in the elementary-scalar span"};
        } else {
          try {
            const IsoscalarResult iso = isoscalar_factor(reps, pq, 0);
            res = iso.value.is_zero() ? std::make_pair(std::string("projection-zero"), std::string("isoscalar factor vanishes"))
                                      : std::make_pair(std::string("agree"), iso.value.str());
          } catch (const DomainError& err) {
            res = {"projection-zero", err.what()};
          } catch (const StructuralError& err) {
            res = {"projection-inconsistent", err.what()};
          }
        }
        it = memo.emplace(key, res).first;
      }
      e.status = it->second.first;
      if (e.status == "agree") {
        e.projection = it->second.second;
        e.detail = "reps " + str(reps) + ", support matches; coefficient carries unnormalized weights";
      } else {
        e.detail = "reps " + str(reps) + ": " + it->second.second;
      }
    }
    if (e.status == "agree") ++rep.agreements;
    else if (e.status == "beyond-cap") ++rep.skipped;
    else ++rep.disagreements;
    rep.entries.push_back(std::move(e));
  }
  std::stable_sort(rep.entries.begin(), rep.entries.end(),
                   [](const GfReportEntry& a, const GfReportEntry& b) { return a.degree < b.degree; });
  return rep;
}

}  // namespace grouprep
