#ifndef NULLCONE_REPORT_HPP
#define NULLCONE_REPORT_HPP

// Verification suites and the report format.
//
// Structured reports are JSON lines: a header record, one record per check
// sorted by check_id, and a summary record. Nothing time-dependent is written,
// so identical configurations give byte-identical reports.

#include "nullcone/appendix.hpp"
#include "nullcone/variety.hpp"

#include <json.hpp>

#include <chrono>
#include <functional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace nullcone {

inline constexpr const char* kReportSchema = "nullcone-report/1";
inline constexpr const char* kToolVersion = "1.0.0";

using Json = nlohmann::json;

enum class Status { pass, fail, undecided, skipped };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::undecided: return "undecided";
    case Status::skipped: return "skipped";
  }
  return "?";
}

enum class Suite { roots, appendix, invariants, geometry };

inline const char* to_string(Suite s) {
  switch (s) {
    case Suite::roots: return "roots";
    case Suite::appendix: return "appendix";
    case Suite::invariants: return "invariants";
    case Suite::geometry: return "geometry";
  }
  return "?";
}

inline std::optional<Suite> parse_suite(const std::string& s) {
  for (Suite x : {Suite::roots, Suite::appendix, Suite::invariants, Suite::geometry})
    if (s == to_string(x)) return x;
  return std::nullopt;
}

enum class OutputFormat { text, structured };

struct CheckResult {
  std::string check_id;
  std::string claim;
  Status status = Status::pass;
  Json witness;  // always present for fail and undecided
  std::chrono::nanoseconds elapsed{0};
};

struct RunConfig {
  std::set<Suite> suites{Suite::roots, Suite::appendix, Suite::invariants, Suite::geometry};
  std::vector<std::string> types = default_types();
  std::uint64_t seed = 1;
  std::size_t samples = 8;
  std::uint64_t max_weyl_order = WeylGroup::default_max_order;
  OutputFormat format = OutputFormat::text;
  std::optional<std::string> tables_dir;

  static std::vector<std::string> default_types() {
    return {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4", "E6", "E7", "E8"};
  }
};

struct Report {
  RunConfig config;
  std::vector<CheckResult> results;

  std::size_t count(Status s) const {
    return static_cast<std::size_t>(
        std::count_if(results.begin(), results.end(), [&](const CheckResult& r) { return r.status == s; }));
  }
  bool any_failed() const { return count(Status::fail) > 0; }
  const CheckResult* find(const std::string& id) const {
    for (const auto& r : results)
      if (r.check_id == id) return &r;
    return nullptr;
  }
};

// ---------------------------------------------------------------------------
// Helpers

namespace detail {

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline Json to_json(const Root& r) { return r.coords; }

inline Json to_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(q.get_str());
  return a;
}

inline Json to_json(const Matrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    a.push_back(row);
  }
  return a;
}

struct Outcome {
  Status status = Status::pass;
  Json witness;
};

inline Outcome pass(Json w = Json()) { return {Status::pass, std::move(w)}; }
inline Outcome fail(Json w) { return {Status::fail, std::move(w)}; }
inline Outcome skipped(std::string why) { return {Status::skipped, Json{{"reason", std::move(why)}}}; }
inline Outcome verdict(bool ok, Json w) { return {ok ? Status::pass : Status::fail, std::move(w)}; }

class Runner {
 public:
  explicit Runner(const RunConfig& c) : config_(c) {}

  /// Runs one check with its own generator seeded from the run seed and the id.
  void check(const std::string& id, const std::string& claim, const std::function<Outcome(Rng&)>& fn) {
    CheckResult r;
    r.check_id = id;
    r.claim = claim;
    Rng rng(config_.seed ^ fnv1a(id));
    const auto t0 = std::chrono::steady_clock::now();
    try {
      Outcome o = fn(rng);
      r.status = o.status;
      r.witness = std::move(o.witness);
    } catch (const std::exception& e) {
      r.status = Status::fail;
      r.witness = Json{{"exception", e.what()}};
    }
    r.elapsed = std::chrono::steady_clock::now() - t0;
    if ((r.status == Status::fail || r.status == Status::undecided) && r.witness.is_null())
      r.witness = Json{{"detail", "no witness recorded"}};
    results_.push_back(std::move(r));
  }

  std::vector<CheckResult> take() { return std::move(results_); }
  const RunConfig& config() const { return config_; }

 private:
  const RunConfig& config_;
  std::vector<CheckResult> results_;
};

inline bool realizable(const SimpleType& t) {
  return (t.family == Family::A && t.rank <= 8) || (t.family == Family::B && t.rank <= 4) ||
         (t.family == Family::C && t.rank <= 4);
}

inline WeylElement random_weyl_element(const RootSystem& rs, Rng& rng) {
  std::vector<int> word;
  const long len = rng.uniform(0, 3 * static_cast<long>(rs.rank()));
  for (long k = 0; k < len; ++k) word.push_back(static_cast<int>(rng.uniform(0, static_cast<long>(rs.rank()) - 1)));
  return WeylElement::from_word(rs, word);
}

/// Random subset of R+ ∩ w(R+).
inline std::vector<Root> random_support(const RootSystem& rs, const WeylElement& w, Rng& rng) {
  const WeylElement inv = w.inverse(rs);
  std::vector<Root> S;
  for (const Root& g : rs.positive_roots())
    if (inv.apply(g).positive() && rng.uniform(0, 3) == 0) S.push_back(g);
  return S;
}

/// Full check of the chain conditions, independent of chain_of_lines' own checks.
inline std::optional<std::string> chain_defect(const RootSystem& rs, const std::vector<Root>& S,
                                              const WeylElement& w, const std::vector<WeylElement>& chain) {
  if (chain.empty() || !chain.front().is_identity()) return "chain does not start at e";
  if (!(chain.back() == w)) return "chain does not end at w";
  if (chain.size() > w.length() + 1) return "chain longer than l(w)+1";
  for (std::size_t k = 1; k < chain.size(); ++k) {
    bool one_step = false;
    for (std::size_t a = 0; a < rs.rank() && !one_step; ++a)
      if (chain[k - 1].right_multiply(rs, a) == chain[k]) {
        one_step = true;
        const WeylElement inv = chain[k - 1].inverse(rs);
        for (const Root& g : S) {
          const Root back = inv.apply(g);
          if (!back.positive() || back == rs.simple_root(a)) return "support leaves the nilradical at step " + std::to_string(k);
        }
      }
    if (!one_step) return "step " + std::to_string(k) + " is not a simple reflection";
    if (!TorusBorel{chain[k]}.contains_support(rs, S)) return "intermediate Borel loses the support";
  }
  return std::nullopt;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Suites

inline void run_roots_suite(detail::Runner& run, const SimpleType& t) {
  using namespace detail;
  const std::string p = "roots." + t.name() + ".";
  const RootSystem rs(t);
  const auto cap = run.config().max_weyl_order;
  const std::size_t samples = run.config().samples;

  run.check(p + "positive_roots", "positive root count equals the classical count", [&](Rng&) {
    return verdict(rs.positive_roots().size() == classical_positive_root_count(t),
                   Json{{"count", rs.positive_roots().size()},
                        {"expected", classical_positive_root_count(t)},
                        {"highest_root", to_json(rs.highest_root())},
                        {"dim_borel", rs.dim_borel()}});
  });

  run.check(p + "reflections", "simple reflections permute the other positive roots", [&](Rng&) {
    for (std::size_t i = 0; i < rs.rank(); ++i)
      for (const Root& g : rs.positive_roots()) {
        const Root s = rs.reflect(g, i);
        const bool ok = g == rs.simple_root(i) ? s == -g : rs.is_positive_root(s);
        if (!ok) return fail(Json{{"i", i + 1}, {"root", to_json(g)}, {"image", to_json(s)}});
      }
    return pass();
  });

  run.check(p + "rho", "rho is half the sum of positive roots, and rho and rho+theta are regular dominant", [&](Rng&) {
    std::vector<Rational> sum(rs.rank());
    for (const Root& g : rs.positive_roots()) {
      const Weight w = rs.weight_of_root(g);
      for (std::size_t i = 0; i < rs.rank(); ++i) sum[i] += w.pairings[i];
    }
    bool ok = true;
    for (const auto& s : sum) ok = ok && s == 2;
    const Weight top = rs.rho() + rs.weight_of_root(rs.highest_root());
    ok = ok && rs.is_regular(rs.rho()) && rs.is_dominant(rs.rho()) && rs.is_regular(top) && rs.is_dominant(top);
    return verdict(ok, Json{{"twice_rho_pairings", to_json(sum)}});
  });

  std::unique_ptr<WeylGroup> group;
  const std::uint64_t order = classical_weyl_order(t);
  run.check(p + "weyl_group", "Weyl group order, and length equals inversion count", [&](Rng&) {
    if (order > cap)
      return skipped("order " + std::to_string(order) + " exceeds max_weyl_order " + std::to_string(cap));
    group = std::make_unique<WeylGroup>(rs, cap);
    for (const WeylElement& w : group->elements())
      if (w.inversions(rs).size() != w.length()) return fail(Json{{"element", w.str()}});
    return verdict(group->order() == order, Json{{"order", group->order()}, {"expected", order}});
  });

  run.check(p + "torus_borels", "Borel subalgebras containing h are counted by W", [&](Rng&) {
    if (!group) return skipped("Weyl group not enumerated");
    const std::size_t n = borels_containing_torus(*group);
    return verdict(n == group->order(), Json{{"borels", n}, {"order", group->order()}});
  });

  run.check(p + "chains", "chains of projective lines between torus Borels containing S", [&](Rng& rng) {
    std::size_t built = 0, rejected = 0;
    for (std::size_t k = 0; k < 4 * samples; ++k) {
      const WeylElement w = random_weyl_element(rs, rng);
      const auto S = random_support(rs, w, rng);
      const auto chain = chain_of_lines(rs, S, w);
      if (auto d = chain_defect(rs, S, w, chain)) return fail(Json{{"w", w.str()}, {"defect", *d}});
      ++built;
      // Transport: for v, w containing S, the chain for v^{-1} w from v^{-1}(S) connects them.
      const WeylElement v = random_weyl_element(rs, rng);
      if (TorusBorel{v}.contains_support(rs, S) && TorusBorel{w}.contains_support(rs, S)) {
        const WeylElement vi = v.inverse(rs);
        std::vector<Root> T;
        for (const Root& g : S) T.push_back(vi.apply(g));
        const WeylElement u = vi.compose(rs, w);
        const auto c = chain_of_lines(rs, T, u);
        if (auto d = chain_defect(rs, T, u, c)) return fail(Json{{"v", v.str()}, {"w", w.str()}, {"defect", *d}});
      }
      // A support outside w(R+) is rejected.
      if (!w.is_identity()) {
        const WeylElement wi = w.inverse(rs);
        for (const Root& g : rs.positive_roots())
          if (!wi.apply(g).positive()) {
            try {
              chain_of_lines(rs, {g}, w);
              return fail(Json{{"w", w.str()}, {"detail", "precondition violation accepted"}});
            } catch (const ChainPreconditionError&) {
              ++rejected;
            }
            break;
          }
      }
    }
    return pass(Json{{"chains", built}, {"rejected_inputs", rejected}});
  });
}

inline void run_appendix_suite(detail::Runner& run, const SimpleType& t, const TableSet* tables) {
  using namespace detail;
  const std::string p = "appendix." + t.name() + ".";
  const RootSystem rs(t);
  std::optional<AppendixReport> rep;

  run.check(p + "classification", "case analysis of rho-alpha and rho+alpha agrees with the pairing oracle",
            [&](Rng&) {
              rep = verify_appendix(rs, tables);
              Json verdicts = Json::array();
              for (const auto* side : {&rep->minus, &rep->plus})
                for (const auto& v : *side) {
                  Json e{{"shift", to_string(v.shift)}, {"alpha", to_json(v.alpha)}, {"status", to_string(v.status)}};
                  if (v.simple) e["reflection"] = *v.simple + 1;
                  if (v.witness) e["witness"] = to_json(*v.witness);
                  verdicts.push_back(e);
                }
              Json w{{"roots", rs.positive_roots().size()}, {"agreements", rep->agreements}, {"checked", rep->total},
                     {"verdicts", verdicts}};
              Json bad = Json::array();
              for (const auto& d : rep->discrepancies)
                if (d.kind == "verdict" || d.kind == "unresolved") bad.push_back(d.detail);
              if (!bad.empty()) w["discrepancies"] = bad;
              Json notes = Json::array();
              for (const auto& n : rep->notes) notes.push_back(n.kind + ": " + n.detail);
              if (!notes.empty()) w["case_notes"] = notes;
              return verdict(rep->classifier_agrees() && bad.empty(), w);
            });

  run.check(p + "plus_regular_count", "number of non-highest alpha with rho+alpha regular", [&](Rng&) {
    if (!rep) rep = verify_appendix(rs, tables);
    Json roots = Json::array();
    for (const Root& r : rep->plus_regular_non_biggest) roots.push_back(to_json(r));
    Json w{{"observed", rep->plus_regular_non_biggest.size()},
           {"expected", *rep->expected_plus_regular},
           {"roots", roots}};
    Json claims = Json::array();
    for (const auto& d : rep->discrepancies)
      if (d.kind == "case-claim") claims.push_back(d.detail);
    if (!claims.empty()) w["case_claims_contradicted"] = claims;
    return verdict(rep->count_matches() && claims.empty(), w);
  });

  if (t.simply_laced())
    run.check(p + "equalities", "the two neighbour-sum equalities are exactly the fixed-point conditions",
              [&](Rng&) {
                std::size_t holds4 = 0, holds5 = 0;
                for (const Root& a : rs.positive_roots())
                  for (std::size_t i = 0; i < rs.rank(); ++i) {
                    const Weight m = rho_shift(rs, a, -1), q = rho_shift(rs, a, 1);
                    const bool e4 = equality4_holds(rs, a, i), e5 = equality5_holds(rs, a, i);
                    holds4 += e4;
                    holds5 += e5;
                    if (e4 != (rs.reflect(m, i) == m) || e5 != (rs.reflect(q, i) == q))
                      return fail(Json{{"alpha", to_json(a)}, {"i", i + 1}});
                  }
                return pass(Json{{"minus_pairs", holds4}, {"plus_pairs", holds5}});
              });

  if (tables && tables->find(t))
    run.check(p + "tables", "transcribed root tables decode and every row satisfies its equality", [&](Rng&) {
      const auto findings = verify_table_file(*tables->find(t));
      Json failing = Json::array();
      std::size_t rows = 0, decoded = 0;
      for (const auto& f : findings) {
        if (f.kind == "row" || f.kind == "reduction") ++rows;
        if (f.kind == "decode" && f.ok) ++decoded;
        if (!f.ok)
          failing.push_back(
              Json{{"table", f.table}, {"kind", f.kind}, {"i", f.i}, {"j", f.j}, {"detail", f.detail}});
      }
      Json w{{"assignments", rows}, {"decoded_roots", decoded}};
      if (!failing.empty()) w["failing"] = failing;
      return verdict(failing.empty(), w);
    });
}

inline void run_invariants_suite(detail::Runner& run, const SimpleType& t) {
  using namespace detail;
  const std::string p = "invariants." + t.name() + ".";
  if (!realizable(t)) {
    run.check(p + "realization", "matrix realization", [&](Rng&) {
      return skipped("no matrix realization for " + t.name());
    });
    return;
  }
  const MatrixLieAlgebra alg(t);
  const std::size_t samples = run.config().samples;
  const auto cap = run.config().max_weyl_order;

  run.check(p + "degree_sum", "sum of invariant degrees equals dim b", [&](Rng&) {
    int sum = 0;
    for (int d : alg.degrees()) sum += d;
    return verdict(static_cast<std::size_t>(sum) == alg.dim_borel() &&
                       alg.sigma_length() == alg.dim_borel() + alg.rank(),
                   Json{{"degrees", alg.degrees()}, {"sum", sum}, {"dim_borel", alg.dim_borel()},
                        {"sigma_length", alg.sigma_length()}});
  });

  run.check(p + "polarization", "p_i(ax+by) expands into the polarizations", [&](Rng& rng) {
    for (std::size_t s = 0; s < samples; ++s) {
      const Matrix x = alg.random_element(rng), y = alg.random_element(rng);
      const Rational a = rng.rational(-4, 4, 3), b = rng.rational(-4, 4, 3);
      for (std::size_t i = 0; i < alg.rank(); ++i) {
        const auto pol = polarize(alg, i, x, y);
        Rational rhs = 0, ap = 1;
        const long d = alg.degree(i);
        std::vector<Rational> bp(static_cast<std::size_t>(d) + 1, Rational(1));
        for (long n = 1; n <= d; ++n) bp[static_cast<std::size_t>(n)] = bp[static_cast<std::size_t>(n - 1)] * b;
        for (long n = d; n >= 0; --n, ap *= a) rhs += ap * bp[static_cast<std::size_t>(n)] * pol[static_cast<std::size_t>(n)];
        if (eval_p(alg, i, x * a + y * b) != rhs)
          return fail(Json{{"sample", s}, {"i", i + 1}, {"x", to_json(x)}, {"y", to_json(y)}});
      }
    }
    return pass(Json{{"samples", samples}});
  });

  run.check(p + "sigma_group_invariance", "sigma is invariant under conjugation by the group", [&](Rng& rng) {
    for (std::size_t s = 0; s < samples; ++s) {
      const Matrix x = alg.random_element(rng), y = alg.random_element(rng);
      const Matrix g = random_group_element(alg, rng);
      if (sigma(alg, MatrixLieAlgebra::conjugate(g, x), MatrixLieAlgebra::conjugate(g, y)) != sigma(alg, x, y))
        return fail(Json{{"sample", s}, {"g", to_json(g)}});
    }
    return pass(Json{{"samples", samples}});
  });

  run.check(p + "sigma_borel_reduction", "sigma(x, y) = sigma(x_0, y_0) on b x b", [&](Rng& rng) {
    for (std::size_t s = 0; s < samples; ++s) {
      const Matrix x = alg.random_borel(rng), y = alg.random_borel(rng);
      if (sigma(alg, x, y) != sigma(alg, alg.cartan_part(x), alg.cartan_part(y)))
        return fail(Json{{"x", to_json(x)}, {"y", to_json(y)}});
    }
    return pass(Json{{"samples", samples}});
  });

  run.check(p + "sigma_weyl_invariance", "sigma is invariant under the diagonal W action on h x h", [&](Rng& rng) {
    if (classical_weyl_order(t) > cap) return skipped("Weyl group above max_weyl_order");
    const WeylGroup group(alg.root_system(), cap);
    const auto& rs = alg.root_system();
    const std::size_t n = group.order() > 200 ? 1 : std::min<std::size_t>(samples, 3);
    for (std::size_t s = 0; s < n; ++s) {
      HPoint x(rs.rank()), y(rs.rank());
      for (auto& c : x) c = rng.uniform(-4, 4);
      for (auto& c : y) c = rng.uniform(-4, 4);
      const auto ref = sigma(alg, alg.cartan_element(x), alg.cartan_element(y));
      for (const auto& w : group.elements())
        if (sigma(alg, alg.cartan_element(w.apply(rs, x)), alg.cartan_element(w.apply(rs, y))) != ref)
          return fail(Json{{"w", w.str()}, {"x", to_json(x)}, {"y", to_json(y)}});
    }
    return pass(Json{{"pairs", n}, {"group_order", group.order()}});
  });

  run.check(p + "gradient", "epsilon_i is the trace-form gradient of p_i, with the Euler identity", [&](Rng& rng) {
    const std::size_t n = std::min<std::size_t>(samples, 2);
    for (std::size_t s = 0; s < n; ++s) {
      const Matrix x = alg.random_element(rng), v = alg.random_element(rng);
      for (std::size_t i = 0; i < alg.rank(); ++i) {
        const Matrix e = epsilon(alg, i, x);
        if (alg.trace_form(e, v) != directional_derivative(alg, i, x, v))
          return fail(Json{{"i", i + 1}, {"detail", "directional derivative mismatch"}});
        if (alg.trace_form(e, x) != alg.degree(i) * eval_p(alg, i, x))
          return fail(Json{{"i", i + 1}, {"detail", "Euler identity fails"}});
      }
    }
    return pass(Json{{"samples", n}, {"killing_over_trace", alg.killing_ratio()}});
  });

  run.check(p + "borel_span", "the polarized gradients at a regular pencil in b span b", [&](Rng& rng) {
    if (alg.dim() > 36) return skipped("borel_span sampled only up to dimension 36");
    std::size_t accepted = 0, tried = 0;
    while (accepted < std::min<std::size_t>(samples, 2) && tried < 20) {
      ++tried;
      const Matrix x = alg.random_borel(rng), y = alg.random_borel(rng);
      if (pencil_irregularity(alg, x, y)) continue;
      ++accepted;
      const auto span = borel_span(alg, x, y);
      auto all = alg.b_basis();
      all.insert(all.end(), span.basis.begin(), span.basis.end());
      if (span.dim() != alg.dim_borel() || span_dimension(all) != alg.dim_borel())
        return fail(Json{{"dim", span.dim()}, {"x", to_json(x)}, {"y", to_json(y)}});
    }
    if (accepted == 0) return Outcome{Status::undecided, Json{{"detail", "no sampled pair passed the pencil precondition"}}};
    return pass(Json{{"pairs", accepted}, {"tried", tried}, {"dim", alg.dim_borel()},
                     {"precondition", "pencil regularity certified"}});
  });
}

inline void run_geometry_suite(detail::Runner& run, const SimpleType& t) {
  using namespace detail;
  const std::string p = "geometry." + t.name() + ".";
  const RootSystem rs(t);
  const std::size_t samples = run.config().samples;
  const auto cap = run.config().max_weyl_order;
  const std::uint64_t order = classical_weyl_order(t);

  run.check(p + "gamma_complement", "pairs in h x h whose pencil misses h' lie on a common root hyperplane",
            [&](Rng& rng) {
              std::size_t outside = 0;
              for (std::size_t s = 0; s < 25 * samples; ++s) {
                HPoint x(rs.rank()), y(rs.rank());
                for (auto& c : x) c = rng.uniform(-1, 1);
                for (auto& c : y) c = rng.uniform(-1, 1);
                const auto g = gamma_membership(rs, x, y);
                if (g.in_gamma) continue;
                ++outside;
                Rational vx = 0, vy = 0;
                for (std::size_t i = 0; i < rs.rank(); ++i) {
                  vx += x[i] * g.root_x->coords[i];
                  vy += y[i] * g.root_y->coords[i];
                }
                if (vx != 0 || vy != 0) return fail(Json{{"x", to_json(x)}, {"y", to_json(y)}});
              }
              return pass(Json{{"pairs", 25 * samples}, {"outside_gamma", outside}});
            });

  if (!realizable(t)) {
    run.check(p + "realization", "matrix realization", [&](Rng&) {
      return skipped("no matrix realization for " + t.name());
    });
    return;
  }
  const MatrixLieAlgebra alg(t);
  const std::size_t b = alg.dim_borel(), rk = alg.rank();
  const bool small = alg.matrix_size() <= 9;
  std::unique_ptr<WeylGroup> group;
  if (order <= cap && order <= 1152) group = std::make_unique<WeylGroup>(rs, cap);

  auto regular_cartan = [&] {
    HPoint v(rk);
    for (std::size_t i = 0; i < rk; ++i) v[i] = static_cast<long>(i + 1);
    return alg.cartan_element(v);
  };

  run.check(p + "rank_borel_pair", "tangent rank of G x b x b -> g x g reaches 3b - rk", [&](Rng& rng) {
    if (!small) return skipped("tangent ranks computed up to matrix size 5");
    Json ranks = Json::array();
    for (std::size_t s = 0; s < 3; ++s) {
      const Matrix x = regular_cartan() + alg.principal_nilpotent();
      const Matrix y = alg.random_borel(rng);
      const auto r = rank_borel_pair(alg, x, y);
      ranks.push_back(r.rank);
      if (r.rank > 3 * b - rk || !r.rank_nullity()) return fail(Json{{"rank", r.rank}, {"bound", 3 * b - rk}});
      if (r.rank == 3 * b - rk) return pass(Json{{"rank", r.rank}, {"expected", 3 * b - rk}, {"domain", r.domain_dim}});
    }
    return fail(Json{{"ranks", ranks}, {"expected", 3 * b - rk}});
  });

  run.check(p + "rank_nullcone_pair", "tangent rank of G x u x u -> g x g reaches 3(b - rk)", [&](Rng& rng) {
    if (!small) return skipped("tangent ranks computed up to matrix size 5");
    const auto r = rank_nullcone_pair(alg, alg.principal_nilpotent(), alg.random_nilradical(rng));
    return verdict(r.rank == 3 * (b - rk) && r.rank_nullity(),
                   Json{{"rank", r.rank}, {"expected", 3 * (b - rk)}, {"domain", r.domain_dim}});
  });

  run.check(p + "mu_kernel", "kernel of mu at a regular nilpotent x has dimension b", [&](Rng& rng) {
    if (!small) return skipped("tangent ranks computed up to matrix size 5");
    const auto r = mu_kernel(alg, alg.principal_nilpotent(), alg.random_nilradical(rng));
    return verdict(r.kernel_dim == b, Json{{"kernel_dim", r.kernel_dim}, {"expected", b}});
  });

  run.check(p + "tangent_annihilation", "p_i'(x+ty)(v+tw) = 0 on nullcone tangent directions", [&](Rng& rng) {
    if (!small) return skipped("tangent directions computed up to matrix size 5");
    const Matrix x = alg.principal_nilpotent(), y = alg.random_nilradical(rng);
    const auto dirs = nullcone_tangent_directions(alg, x, y);
    std::vector<Rational> ts;
    for (long k = 0; k <= 5; ++k) ts.push_back(k);
    std::size_t evals = 0;
    for (std::size_t s = 0; s < samples; ++s) {
      const std::size_t N = alg.matrix_size();
      Matrix v(N, N), w(N, N);
      for (const auto& [dv, dw] : dirs) {
        const Rational c = rng.uniform(-3, 3);
        v += dv * c;
        w += dw * c;
      }
      const auto r = tangent_annihilation_check(alg, x, y, v, w, ts);
      evals += r.evaluations;
      if (!r.ok) return fail(Json{{"detail", r.failure}});
    }
    return pass(Json{{"directions", samples}, {"evaluations", evals}});
  });

  run.check(p + "closedness", "beta(sigma(x, y)) equals the values of pi along the pencil", [&](Rng& rng) {
    std::vector<Rational> ts;
    for (long k = 0; k <= alg.max_degree(); ++k) ts.push_back(k);
    for (std::size_t s = 0; s < samples; ++s)
      if (!closedness_diagram_check(alg, alg.random_cartan(rng), alg.random_cartan(rng), ts))
        return fail(Json{{"sample", s}});
    return pass(Json{{"samples", samples}});
  });

  run.check(p + "commuting_image", "sigma on commuting pairs agrees with sigma on h x h", [&](Rng& rng) {
    const auto r = commuting_image_check(alg, rng, std::min<std::size_t>(samples, 4));
    Json w{{"cartan_pairs", r.cartan_pairs}, {"nilpotent_pairs", r.nilpotent_pairs}};
    if (!r.ok()) w["failures"] = r.failures;
    return verdict(r.ok(), w);
  });

  run.check(p + "tau_weyl", "h-component of (n_w b)(x) equals w(x_0)", [&](Rng& rng) {
    for (std::size_t s = 0; s < samples; ++s) {
      const WeylElement w = random_weyl_element(rs, rng);
      const Matrix bel = alg.random_torus(rng) * alg.random_unipotent(rng);
      if (!tau_weyl_relation_check(alg, alg.random_borel(rng), w, bel)) return fail(Json{{"w", w.str()}});
    }
    return pass(Json{{"samples", samples}});
  });

  run.check(p + "h_grading", "ad h grades b by root height with x_0 in degree 0", [&](Rng& rng) {
    for (std::size_t s = 0; s < samples; ++s) {
      const auto d = h_grading_limit_check(alg, alg.random_borel(rng));
      if (!d.ok) return fail(Json{{"sample", s}});
    }
    return pass(Json{{"samples", samples}});
  });

  run.check(p + "torus_fiber_count", "Borels containing a regular element of h number |W|", [&](Rng&) {
    if (!group) return skipped("Weyl group above 1152 elements or max_weyl_order");
    const std::size_t n = torus_borels_containing(alg, *group, regular_cartan());
    const std::size_t c = borels_containing_torus(*group);
    return verdict(n == group->order() && c == group->order(),
                   Json{{"matrix_count", n}, {"combinatorial_count", c}, {"order", group->order()}});
  });

  run.check(p + "sigma_fiber", "sigma fibers on h x h are diagonal W orbits", [&](Rng& rng) {
    if (!group || group->order() > 384) return skipped("Weyl group above 384 elements or max_weyl_order");
    std::size_t equal = 0, different = 0;
    for (std::size_t s = 0; s < samples; ++s) {
      HPoint x(rk), y(rk);
      for (auto& c : x) c = rng.uniform(-3, 3);
      for (auto& c : y) c = rng.uniform(-3, 3);
      const auto& w = group->elements()[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(group->order()) - 1))];
      const auto& v = group->elements()[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(group->order()) - 1))];
      for (const HPair& q : {HPair{w.apply(rs, x), w.apply(rs, y)}, HPair{w.apply(rs, x), v.apply(rs, y)}}) {
        const auto r = sigma_fiber_is_weyl_orbit(alg, *group, {x, y}, q);
        if (!r.consistent())
          return fail(Json{{"x", to_json(x)}, {"y", to_json(y)}, {"sigma_equal", r.sigma_equal}, {"in_orbit", r.in_orbit}});
        (r.sigma_equal ? equal : different) += 1;
      }
    }
    return pass(Json{{"same_fiber", equal}, {"different_fiber", different}});
  });

  if (t.family == Family::A && alg.matrix_size() <= 4) {
    run.check(p + "nullcone_membership", "constructed nullcone pairs are never rejected", [&](Rng& rng) {
      std::size_t member = 0, undecided = 0;
      for (std::size_t s = 0; s < samples; ++s) {
        const Matrix g = random_group_element(alg, rng), gi = inverse(g);
        const Matrix x = g * alg.random_nilradical(rng) * gi, y = g * alg.random_nilradical(rng) * gi;
        const auto m = nullcone_membership(alg, x, y, rng);
        if (m.kind == MembershipKind::Rejected) return fail(Json{{"x", to_json(x)}, {"y", to_json(y)}, {"reason", m.reason}});
        (m.kind == MembershipKind::Member ? member : undecided) += 1;
      }
      return pass(Json{{"member", member}, {"undecided", undecided}});
    });
  }

  if (t.family == Family::A && t.rank <= 2) {
    run.check(p + "singular_locus", "measured singular locus against the non-regular complement", [&](Rng& rng) {
      const auto m = singular_locus_measurement(alg, rng, samples);
      Json w{{"dim_nullcone", m.dim_nullcone},
             {"nonregular_image_dim", m.nonregular_image_bound},
             {"certified_codim_at_least", m.certified_codim_lower},
             {"span_of_samples", m.span_of_samples},
             {"origin_singular", m.origin_singular},
             {"tangent_ranks_nonregular", m.tangent_ranks_nonregular}};
      if (m.codim_upper) w["codim_at_most"] = *m.codim_upper;
      w["codim_4_claim"] = m.codim_upper && *m.codim_upper < 4 ? "refuted by the singular vertex" : "not decided";
      return verdict(!m.codim_upper || *m.codim_upper >= m.certified_codim_lower, w);
    });
  }
}

// ---------------------------------------------------------------------------
// Driver

inline Report run(const RunConfig& config) {
  Report rep;
  rep.config = config;
  detail::Runner runner(rep.config);
  std::optional<TableSet> custom;
  const TableSet* tables = nullptr;
  bool tables_loaded = false;

  for (const std::string& name : config.types) {
    SimpleType t;
    try {
      t = parse_type(name);
    } catch (const std::exception& e) {
      runner.check("input." + name, "requested type", [&](Rng&) {
        return detail::fail(Json{{"error", e.what()}});
      });
      continue;
    }
    if (config.suites.count(Suite::appendix) && !tables_loaded) {
      tables_loaded = true;
      try {
        if (config.tables_dir) {
          custom = TableSet::load(*config.tables_dir);
          tables = &*custom;
        } else {
          tables = &TableSet::builtin();
        }
      } catch (const std::exception& e) {
        runner.check("input.tables", "appendix tables", [&](Rng&) { return detail::fail(Json{{"error", e.what()}}); });
      }
    }
    if (config.suites.count(Suite::roots)) run_roots_suite(runner, t);
    if (config.suites.count(Suite::appendix)) run_appendix_suite(runner, t, tables);
    if (config.suites.count(Suite::invariants)) run_invariants_suite(runner, t);
    if (config.suites.count(Suite::geometry)) run_geometry_suite(runner, t);
  }
  rep.results = runner.take();
  std::stable_sort(rep.results.begin(), rep.results.end(),
                   [](const CheckResult& a, const CheckResult& b) { return a.check_id < b.check_id; });
  return rep;
}

inline Json config_json(const RunConfig& c) {
  Json suites = Json::array();
  for (Suite s : c.suites) suites.push_back(to_string(s));
  Json j{{"suites", suites},
         {"types", c.types},
         {"seed", c.seed},
         {"samples", c.samples},
         {"max_weyl_order", c.max_weyl_order}};
  j["tables"] = c.tables_dir ? Json(*c.tables_dir) : Json("builtin");
  return j;
}

inline void write_structured(std::ostream& out, const Report& rep) {
  out << Json{{"schema", kReportSchema}, {"tool_version", kToolVersion}, {"config", config_json(rep.config)}}.dump()
      << '\n';
  for (const auto& r : rep.results) {
    Json j{{"check_id", r.check_id}, {"claim", r.claim}, {"status", to_string(r.status)}};
    if (!r.witness.is_null()) j["witness"] = r.witness;
    out << j.dump() << '\n';
  }
  out << Json{{"summary",
               {{"total", rep.results.size()},
                {"pass", rep.count(Status::pass)},
                {"fail", rep.count(Status::fail)},
                {"undecided", rep.count(Status::undecided)},
                {"skipped", rep.count(Status::skipped)}}}}
             .dump()
      << '\n';
}

inline void write_text(std::ostream& out, const Report& rep, bool timings) {
  std::size_t width = 0;
  for (const auto& r : rep.results) width = std::max(width, r.check_id.size());
  for (const auto& r : rep.results) {
    std::string status = to_string(r.status);
    for (auto& ch : status) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    out << status << std::string(10 - status.size(), ' ') << r.check_id << std::string(width + 2 - r.check_id.size(), ' ')
        << r.claim;
    if (timings) out << "  (" << std::chrono::duration_cast<std::chrono::milliseconds>(r.elapsed).count() << " ms)";
    out << '\n';
    if (r.status == Status::fail || r.status == Status::undecided || r.status == Status::skipped) {
      std::string w = r.witness.dump();
      if (w.size() > 400) w = w.substr(0, 400) + "...";
      out << "          " << w << '\n';
    }
  }
  out << rep.results.size() << " checks: " << rep.count(Status::pass) << " pass, " << rep.count(Status::fail)
      << " fail, " << rep.count(Status::undecided) << " undecided, " << rep.count(Status::skipped) << " skipped\n";
}

}  // namespace nullcone

#endif  // NULLCONE_REPORT_HPP
