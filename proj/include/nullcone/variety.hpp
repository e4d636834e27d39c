#ifndef NULLCONE_VARIETY_HPP
#define NULLCONE_VARIETY_HPP

// Tangent ranks, fibers and pointwise identities for the variety of pairs in a
// common Borel subalgebra and for the nullcone.

#include "nullcone/invariants.hpp"

#include <functional>
#include <map>
#include <set>

namespace nullcone {

enum class MapKind { BorelPair, NullconePair, Mu };

inline const char* to_string(MapKind k) {
  switch (k) {
    case MapKind::BorelPair: return "borel_pair";
    case MapKind::NullconePair: return "nullcone_pair";
    case MapKind::Mu: return "mu_map";
  }
  return "?";
}

struct TangentReport {
  Matrix x, y;
  MapKind kind;
  std::size_t domain_dim = 0;
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;
  bool rank_nullity() const { return rank + kernel_dim == domain_dim; }
};

namespace detail {

inline std::vector<Rational> stack(const Matrix& a, const Matrix& b) {
  std::vector<Rational> v(a.flat().begin(), a.flat().end());
  v.insert(v.end(), b.flat().begin(), b.flat().end());
  return v;
}

/// Columns of (xi, v, w) -> ([xi, x] + v, [xi, y] + w) for xi in g and v, w in `fiber`.
inline Matrix pair_map(const MatrixLieAlgebra& alg, const Matrix& x, const Matrix& y,
                       const std::vector<Matrix>& fiber) {
  const Matrix zero(alg.matrix_size(), alg.matrix_size());
  std::vector<std::vector<Rational>> cols;
  for (const Matrix& xi : alg.basis()) cols.push_back(stack(commutator(xi, x), commutator(xi, y)));
  for (const Matrix& v : fiber) cols.push_back(stack(v, zero));
  for (const Matrix& w : fiber) cols.push_back(stack(zero, w));
  Matrix m(cols.front().size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < cols[j].size(); ++i) m(i, j) = cols[j][i];
  return m;
}

inline TangentReport report(const Matrix& x, const Matrix& y, MapKind kind, const Matrix& m) {
  TangentReport r{x, y, kind};
  r.domain_dim = m.cols();
  r.rank = nullcone::rank(m);
  r.kernel_dim = nullspace(m).size();
  return r;
}

}  // namespace detail

/// Tangent map of G x b x b -> g x g, (g, x, y) -> (g(x), g(y)) at the identity.
inline TangentReport rank_borel_pair(const MatrixLieAlgebra& alg, const Matrix& x, const Matrix& y) {
  if (!alg.in_borel(x) || !alg.in_borel(y)) throw std::invalid_argument("rank_borel_pair: x and y must lie in b");
  return detail::report(x, y, MapKind::BorelPair, detail::pair_map(alg, x, y, alg.b_basis()));
}

/// Same map restricted to u x u.
inline TangentReport rank_nullcone_pair(const MatrixLieAlgebra& alg, const Matrix& x, const Matrix& y) {
  if (!alg.in_nilradical(x) || !alg.in_nilradical(y))
    throw std::invalid_argument("rank_nullcone_pair: x and y must lie in u");
  return detail::report(x, y, MapKind::NullconePair, detail::pair_map(alg, x, y, alg.u_basis()));
}

/// mu(xi, w1, w2) = ([xi, x] + w1, [xi, y] + w2) on g x u x u, for x regular nilpotent in u.
inline TangentReport mu_kernel(const MatrixLieAlgebra& alg, const Matrix& x, const Matrix& y) {
  if (!alg.in_nilradical(x) || !alg.is_regular(x))
    throw std::invalid_argument("mu_kernel: x must be a regular nilpotent element of u");
  if (!alg.in_nilradical(y)) throw std::invalid_argument("mu_kernel: y must lie in u");
  return detail::report(x, y, MapKind::Mu, detail::pair_map(alg, x, y, alg.u_basis()));
}

using TangentPair = std::pair<Matrix, Matrix>;

/// A basis of the image of the nullcone tangent parametrization at (x, y).
inline std::vector<TangentPair> nullcone_tangent_directions(const MatrixLieAlgebra& alg, const Matrix& x,
                                                            const Matrix& y) {
  const Matrix m = detail::pair_map(alg, x, y, alg.u_basis());
  const auto ech = rref(m);
  const std::size_t N = alg.matrix_size();
  std::vector<TangentPair> out;
  for (std::size_t c : ech.pivots) {
    Matrix v(N, N), w(N, N);
    for (std::size_t k = 0; k < N * N; ++k) {
      v(k / N, k % N) = m(k, c);
      w(k / N, k % N) = m(N * N + k, c);
    }
    out.emplace_back(std::move(v), std::move(w));
  }
  return out;
}

struct TangentAnnihilation {
  bool ok = true;
  std::size_t evaluations = 0;
  std::string failure;
};

/// p_i'(x + t y)(v + t w) = 0 for every i and t.
inline TangentAnnihilation tangent_annihilation_check(const MatrixLieAlgebra& alg, const Matrix& x, const Matrix& y, const Matrix& v,
                                   const Matrix& w, const std::vector<Rational>& ts) {
  {
    const Matrix m = detail::pair_map(alg, x, y, alg.u_basis());
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    const auto col = detail::stack(v, w);
    for (std::size_t i = 0; i < m.rows(); ++i) aug(i, m.cols()) = col[i];
    if (nullcone::rank(aug) != nullcone::rank(m))
      throw std::invalid_argument("tangent_annihilation_check: (v, w) is not in the tangent image at (x, y)");
  }
  TangentAnnihilation r;
  for (const auto& t : ts)
    for (std::size_t i = 0; i < alg.rank(); ++i) {
      ++r.evaluations;
      const Rational d = directional_derivative(alg, i, x + y * t, v + w * t);
      if (d != 0 && r.ok) {
        r.ok = false;
        r.failure = "p" + std::to_string(i + 1) + "' at t=" + t.get_str() + " is " + d.get_str();
      }
    }
  return r;
}

// ---------------------------------------------------------------------------
// Nullcone membership for sl(n), n <= 4

enum class MembershipKind { Member, Rejected, Undecided };

inline const char* to_string(MembershipKind k) {
  switch (k) {
    case MembershipKind::Member: return "member";
    case MembershipKind::Rejected: return "rejected";
    case MembershipKind::Undecided: return "undecided";
  }
  return "?";
}

struct Membership {
  MembershipKind kind = MembershipKind::Undecided;
  /// Columns f_1..f_N with x, y mapping span(f_1..f_k) into span(f_1..f_{k-1}).
  std::optional<Matrix> flag;
  std::string reason;
  std::size_t nodes = 0;
};

/// True iff the columns of f form a basis in which x and y are strictly upper triangular.
inline bool is_common_flag(const Matrix& x, const Matrix& y, const Matrix& f) {
  if (!f.square() || f.rows() != x.rows() || determinant(f) == 0) return false;
  const Matrix fi = inverse(f);
  return (fi * x * f).is_strictly_upper_triangular() && (fi * y * f).is_strictly_upper_triangular();
}

namespace detail {

using Vec = std::vector<Rational>;

inline Matrix cols(const std::vector<Vec>& vs, std::size_t n) {
  Matrix m(n, vs.size());
  for (std::size_t j = 0; j < vs.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = vs[j][i];
  return m;
}

inline std::vector<Vec> column_basis(const Matrix& m) {
  std::vector<Vec> out;
  for (std::size_t c : rref(m).pivots) {
    Vec v(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, c);
    out.push_back(v);
  }
  return out;
}

inline std::vector<Vec> kernel(const Matrix& m) { return nullspace(m); }

inline std::vector<Vec> intersect(const std::vector<Vec>& a, const std::vector<Vec>& b, std::size_t n) {
  if (a.empty() || b.empty()) return {};
  Matrix m(n, a.size() + b.size());
  for (std::size_t j = 0; j < a.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = a[j][i];
  for (std::size_t j = 0; j < b.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, a.size() + j) = -b[j][i];
  std::vector<Vec> out;
  for (const Vec& c : nullspace(m)) {
    Vec v(n);
    for (std::size_t j = 0; j < a.size(); ++j)
      for (std::size_t i = 0; i < n; ++i) v[i] += c[j] * a[j][i];
    out.push_back(v);
  }
  return column_basis(cols(out, n));
}

inline std::size_t span_rank(const std::vector<Vec>& vs, std::size_t n) {
  return vs.empty() ? 0 : nullcone::rank(cols(vs, n));
}

/// {v : x v, y v in span(V)}.
inline std::vector<Vec> admissible(const Matrix& x, const Matrix& y, const std::vector<Vec>& V) {
  const std::size_t n = x.rows(), k = V.size();
  Matrix m(2 * n, n + 2 * k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = x(i, j);
      m(n + i, j) = y(i, j);
    }
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      m(i, n + j) = -V[j][i];
      m(n + i, n + k + j) = -V[j][i];
    }
  std::vector<Vec> out;
  for (const Vec& c : nullspace(m)) out.emplace_back(c.begin(), c.begin() + static_cast<long>(n));
  return out.empty() ? out : column_basis(cols(out, n));
}

struct FlagSearch {
  const Matrix& x;
  const Matrix& y;
  Rng& rng;
  std::size_t budget;
  std::size_t nodes = 0;
  bool complete = true;
  std::vector<std::vector<Vec>> special;

  std::optional<std::vector<Vec>> run(std::vector<Vec> V) {
    const std::size_t n = x.rows();
    if (V.size() == n) return V;
    if (++nodes > budget) {
      complete = false;
      return std::nullopt;
    }
    const auto W = admissible(x, y, V);
    const std::size_t gap = span_rank(W, n) - V.size();
    if (gap == 0) return std::nullopt;
    if (gap > 1) complete = false;

    std::vector<Vec> candidates;
    std::set<std::vector<Rational>> seen;
    auto offer = [&](const Vec& v) {
      auto ext = V;
      ext.push_back(v);
      if (span_rank(ext, n) != V.size() + 1) return;
      // Canonical representative of the line modulo span(V).
      const auto key = rref(cols(ext, n).transpose()).reduced;
      std::vector<Rational> k(key.flat().begin(), key.flat().end());
      if (seen.insert(k).second) candidates.push_back(v);
    };
    for (const auto& s : special)
      for (const Vec& v : intersect(s, W, n)) offer(v);
    for (const Vec& v : W) offer(v);
    for (int r = 0; r < 2 && gap > 1; ++r) {
      Vec v(n);
      for (const Vec& w : W) {
        const Rational c = rng.uniform(-3, 3);
        for (std::size_t i = 0; i < n; ++i) v[i] += c * w[i];
      }
      offer(v);
    }
    for (const Vec& v : candidates) {
      auto next = V;
      next.push_back(v);
      if (auto found = run(std::move(next))) return found;
    }
    return std::nullopt;
  }
};

}  // namespace detail

/// Search for a common flag strictly decreased by x and y. Never returns a false Member;
/// Rejected only when every step of the search was forced.
inline Membership common_flag_search(const Matrix& x, const Matrix& y, Rng& rng, std::size_t budget = 4000) {
  const std::size_t n = x.rows();
  std::vector<Matrix> words = {x, y, x * x, x * y, y * x, y * y};
  detail::FlagSearch s{x, y, rng, budget, 0, true, {}};
  for (const Matrix& m : words) {
    s.special.push_back(detail::kernel(m));
    s.special.push_back(detail::column_basis(m));
  }
  Membership out;
  auto found = s.run({});
  out.nodes = s.nodes;
  if (found) {
    const Matrix f = detail::cols(*found, n);
    if (!is_common_flag(x, y, f)) throw std::logic_error("common_flag_search: produced an invalid flag");
    out.kind = MembershipKind::Member;
    out.flag = f;
    out.reason = "common flag found";
  } else if (s.complete) {
    out.kind = MembershipKind::Rejected;
    out.reason = "no common flag (every step forced)";
  } else {
    out.kind = MembershipKind::Undecided;
    out.reason = "flag search exhausted";
  }
  return out;
}

/// x^2 = y^2 = xy = 0 for 2 x 2 matrices.
inline bool sl2_nullcone_criterion(const Matrix& x, const Matrix& y) {
  return (x * x).is_zero() && (y * y).is_zero() && (x * y).is_zero();
}

inline Membership nullcone_membership(const MatrixLieAlgebra& alg, const Matrix& x, const Matrix& y, Rng& rng) {
  if (alg.type().family != Family::A || alg.matrix_size() > 4)
    throw UnsupportedAlgebra("nullcone_membership: only sl2, sl3, sl4 are supported");
  if (!alg.contains(x) || !alg.contains(y)) throw std::invalid_argument("nullcone_membership: elements not in g");
  Membership out;
  if (!is_nilpotent(x)) {
    out.kind = MembershipKind::Rejected;
    out.reason = "x is not nilpotent";
    return out;
  }
  if (!is_nilpotent(y)) {
    out.kind = MembershipKind::Rejected;
    out.reason = "y is not nilpotent";
    return out;
  }
  const auto s = sigma(alg, x, y);
  for (std::size_t k = 0; k < s.size(); ++k)
    if (s[k] != 0) {
      out.kind = MembershipKind::Rejected;
      out.reason = "sigma component " + std::to_string(k) + " is " + s[k].get_str();
      return out;
    }
  if (alg.matrix_size() == 2) {
    if (!sl2_nullcone_criterion(x, y)) {
      out.kind = MembershipKind::Rejected;
      out.reason = "x^2 = y^2 = xy = 0 fails";
      return out;
    }
    out = common_flag_search(x, y, rng);
    if (out.kind != MembershipKind::Member) throw std::logic_error("nullcone_membership: sl2 criterion without a flag");
    return out;
  }
  return common_flag_search(x, y, rng);
}

// ---------------------------------------------------------------------------
// Fibers of sigma on h x h

struct FiberCheck {
  bool sigma_equal = false;
  bool in_orbit = false;
  std::optional<WeylElement> relating;
  bool consistent() const { return sigma_equal == in_orbit; }
};

/// Pairs are given by simple-root values. Exhaustive over the group.
inline FiberCheck sigma_fiber_is_weyl_orbit(const MatrixLieAlgebra& alg, const WeylGroup& group, const HPair& p,
                                            const HPair& q) {
  const auto& rs = alg.root_system();
  FiberCheck r;
  r.sigma_equal = sigma(alg, alg.cartan_element(p.first), alg.cartan_element(p.second)) ==
                  sigma(alg, alg.cartan_element(q.first), alg.cartan_element(q.second));
  for (const WeylElement& w : group.elements())
    if (w.apply(rs, p.first) == q.first && w.apply(rs, p.second) == q.second) {
      r.in_orbit = true;
      r.relating = w;
      break;
    }
  return r;
}

/// beta(sigma(x, y)) = (pi(x + t_k y))_k for x, y in h.
inline bool closedness_diagram_check(const MatrixLieAlgebra& alg, const Matrix& x, const Matrix& y,
                                     const std::vector<Rational>& ts) {
  if (!alg.in_cartan(x) || !alg.in_cartan(y)) throw std::invalid_argument("closedness_diagram_check: need x, y in h");
  if (ts.size() != static_cast<std::size_t>(alg.max_degree()) + 1)
    throw std::invalid_argument("closedness_diagram_check: need max degree + 1 parameters");
  for (std::size_t a = 0; a < ts.size(); ++a)
    for (std::size_t b = a + 1; b < ts.size(); ++b)
      if (ts[a] == ts[b]) throw std::invalid_argument("closedness_diagram_check: parameters must be distinct");
  const auto s = sigma(alg, x, y);
  for (const auto& t : ts) {
    std::size_t off = 0;
    for (std::size_t i = 0; i < alg.rank(); ++i) {
      const std::size_t d = static_cast<std::size_t>(alg.degree(i));
      Rational lhs = 0, tp = 1;
      for (std::size_t j = 0; j <= d; ++j, tp *= t) lhs += tp * s[off + j];
      off += d + 1;
      if (lhs != eval_p(alg, i, x + y * t)) return false;
    }
  }
  return true;
}

struct CommutingImageReport {
  std::size_t cartan_pairs = 0, cartan_ok = 0;
  std::size_t nilpotent_pairs = 0, nilpotent_ok = 0;
  std::vector<std::string> failures;
  bool ok() const { return cartan_ok == cartan_pairs && nilpotent_ok == nilpotent_pairs; }
};

/// Random group element: torus times upper and lower unipotents.
inline Matrix random_group_element(const MatrixLieAlgebra& alg, Rng& rng) {
  return alg.random_torus(rng) * alg.random_unipotent(rng, true) * alg.random_unipotent(rng, false);
}

/// q(n) with q(0) = 0; odd powers only outside type A so that q(n) stays in g.
inline Matrix commuting_polynomial(const MatrixLieAlgebra& alg, const Matrix& n, Rng& rng) {
  const bool odd_only = alg.type().family != Family::A;
  Matrix q(n.rows(), n.cols()), p = n;
  for (unsigned k = 1; k <= n.rows(); ++k, p = p * n)
    if (!odd_only || k % 2 == 1) q += p * Rational(rng.uniform(-2, 2));
  return q;
}

inline CommutingImageReport commuting_image_check(const MatrixLieAlgebra& alg, Rng& rng, std::size_t samples) {
  CommutingImageReport r;
  for (std::size_t s = 0; s < samples; ++s) {
    const Matrix g = random_group_element(alg, rng), gi = inverse(g);
    const Matrix h1 = alg.random_cartan(rng), h2 = alg.random_cartan(rng);
    const Matrix x = g * h1 * gi, y = g * h2 * gi;
    ++r.cartan_pairs;
    if (commutator(x, y).is_zero() && sigma(alg, x, y) == sigma(alg, h1, h2))
      ++r.cartan_ok;
    else
      r.failures.push_back("conjugated Cartan pair " + std::to_string(s));

    const Matrix n = g * alg.random_nilradical(rng) * gi;
    const Matrix qn = commuting_polynomial(alg, n, rng);
    ++r.nilpotent_pairs;
    const auto z = sigma(alg, n, qn);
    const bool zero = std::all_of(z.begin(), z.end(), [](const Rational& c) { return c == 0; });
    if (alg.contains(qn) && commutator(n, qn).is_zero() && zero)
      ++r.nilpotent_ok;
    else
      r.failures.push_back("nilpotent pair " + std::to_string(s));
  }
  return r;
}

/// h-component of (n_w b)(x) equals w(x_0).
inline bool tau_weyl_relation_check(const MatrixLieAlgebra& alg, const Matrix& x, const WeylElement& w,
                                    const Matrix& b_element) {
  if (!alg.in_borel(x)) throw std::invalid_argument("tau_weyl_relation_check: x must lie in b");
  if (!b_element.is_upper_triangular() || determinant(b_element) == 0)
    throw std::invalid_argument("tau_weyl_relation_check: group element must lie in the Borel subgroup");
  const Matrix g = alg.weyl_representative(w) * b_element;
  const Matrix z = MatrixLieAlgebra::conjugate(g, x);
  const auto& rs = alg.root_system();
  return alg.root_values(z.diagonal_part()) == w.apply(rs, alg.root_values(x.diagonal_part()));
}

struct GradingDecomposition {
  /// Component of x in the ad h eigenspace for each eigenvalue that occurs.
  std::map<int, Matrix> components;
  /// Heights of the positive roots whose coordinate in x is nonzero.
  std::multiset<int> root_heights;
  bool ok = false;
};

/// Decomposition of x in b under ad h for the grading element h; the
/// eigenvalue 0 part is the limit of h(t)(x) as t -> 0.
inline GradingDecomposition h_grading_limit_check(const MatrixLieAlgebra& alg, const Matrix& x) {
  if (!alg.in_borel(x)) throw std::invalid_argument("h_grading_limit_check: x must lie in b");
  const auto c = alg.coordinates(x);
  const auto& roots = alg.root_system().positive_roots();
  GradingDecomposition d;
  const std::size_t N = alg.matrix_size();
  Matrix x0(N, N);
  for (std::size_t k = 0; k < alg.rank(); ++k) x0 += alg.coroot(k) * c[k];
  if (!x0.is_zero()) d.components.emplace(0, x0);
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const Rational& a = c[alg.rank() + k];
    if (a == 0) continue;
    const int ht = roots[k].height();
    d.root_heights.insert(ht);
    auto [it, fresh] = d.components.emplace(ht, Matrix(N, N));
    it->second += alg.positive_root_vector(k) * a;
  }
  const Matrix h = alg.grading_element();
  d.ok = x0 == x.diagonal_part();
  for (const auto& [ev, comp] : d.components) {
    if (ev < 0) d.ok = false;
    if (!(commutator(h, comp) == comp * Rational(ev))) d.ok = false;
  }
  return d;
}

// ---------------------------------------------------------------------------
// Torus Borels and the complement of Gamma

/// Number of distinct Borel subalgebras n_w b n_w^{-1} containing x, over the whole group.
inline std::size_t torus_borels_containing(const MatrixLieAlgebra& alg, const WeylGroup& group, const Matrix& x) {
  std::set<std::vector<Rational>> seen;
  const auto bb = alg.b_basis();
  for (const WeylElement& w : group.elements()) {
    const Matrix n = alg.weyl_representative(w), ni = inverse(n);
    if (!alg.in_borel(ni * x * n)) continue;
    std::vector<Matrix> conj;
    for (const Matrix& b : bb) conj.push_back(n * b * ni);
    const auto key = rref(columns_of(conj).transpose()).reduced;
    seen.insert(std::vector<Rational>(key.flat().begin(), key.flat().end()));
  }
  return seen.size();
}

struct GammaWitness {
  /// True iff span{x, y} meets the regular elements of h.
  bool in_gamma = false;
  /// For pairs outside Gamma: a positive root vanishing on each coordinate.
  std::optional<Root> root_x, root_y;
};

/// Exact decision of span{x, y} meeting the regular set, for x, y in h given by simple-root values.
inline GammaWitness gamma_membership(const RootSystem& rs, const HPoint& x, const HPoint& y) {
  auto value = [&](const Root& g, const HPoint& p) {
    Rational s = 0;
    for (std::size_t i = 0; i < rs.rank(); ++i) s += p[i] * g.coords[i];
    return s;
  };
  GammaWitness r;
  // Roots vanishing on both x and y force every element of the pencil to be singular.
  for (const Root& g : rs.positive_roots())
    if (value(g, x) == 0 && value(g, y) == 0) {
      r.root_x = r.root_y = g;
      return r;
    }
  // Otherwise each root vanishes on at most a line of the pencil, and finitely
  // many lines do not cover it.
  r.in_gamma = true;
  return r;
}

struct SingularLocusMeasurement {
  std::size_t dim_nullcone = 0;
  /// dim G x_B (u \ u') x (u \ u'), from the exact codimension of u \ u' in u.
  std::size_t nonregular_image_bound = 0;
  std::size_t codim_nonregular_in_u = 0;
  /// Dimension of the linear span of sampled nullcone points.
  std::size_t span_of_samples = 0;
  /// The origin is singular iff the cone is not a linear subspace.
  bool origin_singular = false;
  std::vector<std::size_t> tangent_ranks_nonregular;
  /// Certified lower bound on the codimension of the singular locus.
  std::size_t certified_codim_lower = 0;
  /// Upper bound from a known singular point, if any.
  std::optional<std::size_t> codim_upper;
};

inline SingularLocusMeasurement singular_locus_measurement(const MatrixLieAlgebra& alg, Rng& rng,
                                                           std::size_t samples) {
  SingularLocusMeasurement m;
  const std::size_t b = alg.dim_borel(), rk = alg.rank(), u = alg.dim_nilradical();
  m.dim_nullcone = 3 * (b - rk);
  // u \ u' is the union of the hyperplanes where a simple root coordinate vanishes.
  m.codim_nonregular_in_u = 1;
  m.nonregular_image_bound = (alg.dim() - b) + 2 * (u - m.codim_nonregular_in_u);
  m.certified_codim_lower = m.dim_nullcone - m.nonregular_image_bound;

  std::vector<Matrix> points;
  const std::size_t draws = std::max(samples, m.dim_nullcone + 1);
  for (std::size_t s = 0; s < draws; ++s) {
    const Matrix g = random_group_element(alg, rng), gi = inverse(g);
    const Matrix x = alg.random_nilradical(rng), y = alg.random_nilradical(rng);
    Matrix pair(2 * alg.matrix_size(), alg.matrix_size());
    const Matrix gx = g * x * gi, gy = g * y * gi;
    for (std::size_t i = 0; i < alg.matrix_size(); ++i)
      for (std::size_t j = 0; j < alg.matrix_size(); ++j) {
        pair(i, j) = gx(i, j);
        pair(alg.matrix_size() + i, j) = gy(i, j);
      }
    points.push_back(pair);
    if (s >= samples) continue;

    // Non-regular pair: zero a random simple root coordinate of each factor.
    auto nonregular = [&](Matrix z) {
      const auto c = alg.coordinates(z);
      auto cc = c;
      const std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(rk) - 1));
      cc[rk + alg.root_system().index_of(alg.root_system().simple_root(i))] = 0;
      return alg.from_coordinates(cc);
    };
    m.tangent_ranks_nonregular.push_back(rank_nullcone_pair(alg, nonregular(x), nonregular(y)).rank);
  }
  m.span_of_samples = span_dimension(points);
  m.origin_singular = m.span_of_samples > m.dim_nullcone;
  if (m.origin_singular) m.codim_upper = m.dim_nullcone;
  return m;
}

}  // namespace nullcone

#endif  // NULLCONE_VARIETY_HPP
