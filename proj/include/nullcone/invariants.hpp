#ifndef NULLCONE_INVARIANTS_HPP
#define NULLCONE_INVARIANTS_HPP

// Matrix realizations of sl(n+1), so(2n+1), sp(2n) with the upper triangular
// Borel, characteristic polynomial invariants, their polarizations, gradient
// maps and the map sigma.

#include "nullcone/interpolation.hpp"
#include "nullcone/linalg.hpp"
#include "nullcone/modular.hpp"
#include "nullcone/rootsys.hpp"
#include "nullcone/weylgrp.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nullcone {

class UnsupportedAlgebra : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(const std::string& what, std::string witness)
      : std::invalid_argument(what), witness_(std::move(witness)) {}
  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

/// exp(x) for nilpotent x, as a finite sum.
inline Matrix exp_nilpotent(const Matrix& x) {
  Matrix result = Matrix::identity(x.rows());
  Matrix term = Matrix::identity(x.rows());
  for (std::size_t k = 1; k <= x.rows(); ++k) {
    term = term * x * (Rational(1) / static_cast<long>(k));
    if (term.is_zero()) return result;
    result += term;
  }
  if (!(term * x).is_zero()) throw std::invalid_argument("exp_nilpotent: matrix is not nilpotent");
  return result;
}

inline bool is_nilpotent(const Matrix& x) { return power(x, static_cast<unsigned>(x.rows())).is_zero(); }

using SigmaVector = std::vector<Rational>;

class MatrixLieAlgebra {
 public:
  explicit MatrixLieAlgebra(SimpleType t) : type_(t), rs_(check(t)) {
    const int n = t.rank;
    switch (t.family) {
      case Family::A: size_ = static_cast<std::size_t>(n + 1); break;
      case Family::B: size_ = static_cast<std::size_t>(2 * n + 1); break;
      case Family::C: size_ = static_cast<std::size_t>(2 * n); break;
      default: break;
    }
    build_form();
    build_basis();
    for (int k = 0; k < n; ++k) degrees_.push_back(t.family == Family::A ? k + 2 : 2 * (k + 1));
  }

  const SimpleType& type() const { return type_; }
  const RootSystem& root_system() const { return rs_; }
  std::size_t matrix_size() const { return size_; }
  std::size_t rank() const { return rs_.rank(); }
  std::size_t dim() const { return basis_.size(); }
  std::size_t dim_borel() const { return rs_.dim_borel(); }
  std::size_t dim_nilradical() const { return rs_.positive_roots().size(); }
  const std::vector<int>& degrees() const { return degrees_; }
  int degree(std::size_t i) const { return degrees_.at(i); }
  int max_degree() const { return degrees_.back(); }
  std::size_t sigma_length() const {
    std::size_t s = 0;
    for (int d : degrees_) s += static_cast<std::size_t>(d) + 1;
    return s;
  }

  /// Bilinear form preserved by the group (absent for type A).
  const std::optional<Matrix>& form() const { return form_; }

  /// Basis ordered as h (coroots H_i), positive root vectors in root order, negative root vectors.
  const std::vector<Matrix>& basis() const { return basis_; }
  std::vector<Matrix> h_basis() const { return {basis_.begin(), basis_.begin() + rank()}; }
  std::vector<Matrix> u_basis() const {
    return {basis_.begin() + rank(), basis_.begin() + rank() + dim_nilradical()};
  }
  std::vector<Matrix> b_basis() const { return {basis_.begin(), basis_.begin() + rank() + dim_nilradical()}; }
  const Matrix& coroot(std::size_t i) const { return basis_.at(i); }
  const Matrix& positive_root_vector(std::size_t k) const { return basis_.at(rank() + k); }
  const Matrix& negative_root_vector(std::size_t k) const { return basis_.at(rank() + dim_nilradical() + k); }
  const Matrix& simple_e(std::size_t i) const { return positive_root_vector(rs_.index_of(rs_.simple_root(i))); }
  const Matrix& simple_f(std::size_t i) const { return negative_root_vector(rs_.index_of(rs_.simple_root(i))); }

  /// Trace form of the defining representation. The Killing form equals
  /// killing_ratio() times this form.
  Rational trace_form(const Matrix& x, const Matrix& y) const { return (x * y).trace(); }
  /// Basis dual to basis() under the trace form.
  const std::vector<Matrix>& dual_basis() const {
    std::call_once(*dual_once_, [this] {
      const std::size_t n = basis_.size();
      Matrix gram(n, n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) gram(a, b) = trace_form(basis_[a], basis_[b]);
      const Matrix inv = inverse(gram);
      dual_.resize(n, Matrix(size_, size_));
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t m = 0; m < n; ++m)
          if (inv(m, k) != 0) dual_[k] += basis_[m] * inv(m, k);
    });
    return dual_;
  }

  long killing_ratio() const {
    const long n = type_.rank;
    switch (type_.family) {
      case Family::A: return 2 * (n + 1);
      case Family::B: return 2 * n - 1;
      case Family::C: return 2 * n + 2;
      default: return 0;
    }
  }

  bool contains(const Matrix& x) const {
    if (x.rows() != size_ || x.cols() != size_) return false;
    if (!form_) return x.trace() == 0;
    return (x.transpose() * *form_ + *form_ * x).is_zero();
  }
  bool in_borel(const Matrix& x) const { return contains(x) && x.is_upper_triangular(); }
  bool in_nilradical(const Matrix& x) const { return contains(x) && x.is_strictly_upper_triangular(); }
  bool in_cartan(const Matrix& x) const { return contains(x) && x == x.diagonal_part(); }

  /// x_0 and x_+ for x in b.
  Matrix cartan_part(const Matrix& x) const {
    require_borel(x);
    return x.diagonal_part();
  }
  Matrix nilpotent_part(const Matrix& x) const {
    require_borel(x);
    return x - x.diagonal_part();
  }

  /// Coordinates of x in basis().
  std::vector<Rational> coordinates(const Matrix& x) const {
    if (!contains(x)) throw std::invalid_argument("coordinates: matrix is not in " + name());
    auto c = solve(basis_matrix_, x.flat());
    if (!c) throw std::logic_error("coordinates: basis does not span");
    return *c;
  }

  Matrix from_coordinates(const std::vector<Rational>& c) const {
    Matrix x(size_, size_);
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (c.at(k) != 0) x += basis_[k] * c[k];
    return x;
  }

  /// beta_i(x) for x in h.
  HPoint root_values(const Matrix& x) const {
    if (!in_cartan(x)) throw std::invalid_argument("root_values: matrix is not in h");
    HPoint v(rank());
    for (std::size_t i = 0; i < rank(); ++i) v[i] = x(i, i) - x(i + 1, i + 1);
    return v;
  }

  /// The element of h with beta_i(x) = v_i.
  Matrix cartan_element(const HPoint& v) const {
    // beta_i(H_j) = C[j][i]
    Matrix m(rank(), rank());
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < rank(); ++j) m(i, j) = rs_.cartan(j, i);
    auto c = solve(m, v);
    if (!c) throw std::logic_error("cartan_element: singular Cartan matrix");
    Matrix x(size_, size_);
    for (std::size_t j = 0; j < rank(); ++j) x += coroot(j) * (*c)[j];
    return x;
  }

  /// The element h of h with beta(h) = 1 for every simple root beta.
  Matrix grading_element() const { return cartan_element(HPoint(rank(), Rational(1))); }

  /// n_{s_i} = exp(E_i) exp(-F_i) exp(E_i), a representative of s_i in N_G(h).
  Matrix weyl_representative(std::size_t i) const {
    const Matrix e = exp_nilpotent(simple_e(i));
    return e * exp_nilpotent(-simple_f(i)) * e;
  }

  Matrix weyl_representative(const WeylElement& w) const {
    Matrix n = Matrix::identity(size_);
    for (int i : w.word()) n = n * weyl_representative(static_cast<std::size_t>(i));
    return n;
  }

  /// Dimension of the centralizer of x in g.
  std::size_t centralizer_dim(const Matrix& x) const {
    std::vector<Matrix> images;
    images.reserve(basis_.size());
    for (const Matrix& b : basis_) images.push_back(commutator(x, b));
    return dim() - nullcone::rank(columns_of(images));
  }

  bool is_regular(const Matrix& x) const { return centralizer_dim(x) == rank(); }

  bool is_regular_nilpotent(const Matrix& x) const { return is_nilpotent(x) && is_regular(x); }

  /// Sum of the simple root vectors.
  Matrix principal_nilpotent() const {
    Matrix e(size_, size_);
    for (std::size_t i = 0; i < rank(); ++i) e += simple_e(i);
    return e;
  }

  std::string name() const {
    const int n = type_.rank;
    switch (type_.family) {
      case Family::A: return "sl" + std::to_string(n + 1);
      case Family::B: return "so" + std::to_string(2 * n + 1);
      case Family::C: return "sp" + std::to_string(2 * n);
      default: return type_.name();
    }
  }

  // Random elements with small integer coordinates.

  Matrix random_element(Rng& rng, long bound = 3) const { return random_combination(basis_, rng, bound); }
  Matrix random_borel(Rng& rng, long bound = 3) const { return random_combination(b_basis(), rng, bound); }
  Matrix random_nilradical(Rng& rng, long bound = 3) const { return random_combination(u_basis(), rng, bound); }
  Matrix random_cartan(Rng& rng, long bound = 3) const { return random_combination(h_basis(), rng, bound); }

  /// exp of a random element of u (upper) or of the negative nilradical (lower).
  Matrix random_unipotent(Rng& rng, bool upper = true, long bound = 2) const {
    std::vector<Matrix> vs;
    for (std::size_t k = 0; k < dim_nilradical(); ++k)
      vs.push_back(upper ? positive_root_vector(k) : negative_root_vector(k));
    return exp_nilpotent(random_combination(vs, rng, bound));
  }

  /// Diagonal element of the group with entries in {+-1, +-2, +-1/2, ...}.
  Matrix random_torus(Rng& rng) const {
    std::vector<Rational> d(size_, Rational(1));
    auto draw = [&] { return make_rational(rng.nonzero(-3, 3), rng.uniform(1, 3)); };
    if (type_.family == Family::A) {
      Rational prod = 1;
      for (std::size_t k = 0; k + 1 < size_; ++k) {
        d[k] = draw();
        prod *= d[k];
      }
      d[size_ - 1] = 1 / prod;
    } else {
      for (std::size_t k = 0; k < size_ / 2; ++k) {
        d[k] = draw();
        d[size_ - 1 - k] = 1 / d[k];
      }
    }
    return Matrix::diagonal(d);
  }

  /// g x g^{-1}.
  static Matrix conjugate(const Matrix& g, const Matrix& x) { return g * x * inverse(g); }

 private:
  static RootSystem check(const SimpleType& t) {
    validate(t);
    const bool ok = (t.family == Family::A && t.rank <= 8) || (t.family == Family::B && t.rank <= 4) ||
                    (t.family == Family::C && t.rank <= 4);
    if (!ok) throw UnsupportedAlgebra("no matrix realization shipped for " + t.name());
    return RootSystem(t);
  }

  void require_borel(const Matrix& x) const {
    if (!in_borel(x)) throw std::invalid_argument("element is not in the standard Borel subalgebra");
  }

  void build_form() {
    const std::size_t N = size_;
    if (type_.family == Family::B) {
      Matrix j(N, N);
      for (std::size_t k = 0; k < N; ++k) j(k, N - 1 - k) = 1;
      form_ = j;
    } else if (type_.family == Family::C) {
      Matrix j(N, N);
      const std::size_t n = N / 2;
      for (std::size_t k = 0; k < n; ++k) {
        j(k, N - 1 - k) = 1;
        j(N - 1 - k, k) = -1;
      }
      form_ = j;
    }
  }

  /// Projection onto g along the complement fixed by X -> -J^{-1} X^T J.
  Matrix project(const Matrix& x) const {
    if (!form_) {
      Matrix y = x;
      const Rational t = x.trace() / static_cast<long>(size_);
      for (std::size_t k = 0; k < size_; ++k) y(k, k) -= t;
      return y;
    }
    const Matrix s = -(inverse(*form_) * x.transpose() * *form_);
    return (x + s) * make_rational(1, 2);
  }

  void build_basis() {
    const std::size_t N = size_, r = rank();
    // Root functional of position (i, j): diagonal entry i minus entry j.
    auto functional_values = [&](std::size_t i, std::size_t j, const std::vector<Matrix>& hs) {
      std::vector<Rational> v;
      for (const Matrix& h : hs) v.push_back(h(i, i) - h(j, j));
      return v;
    };
    std::vector<Matrix> hs;
    for (std::size_t k = 0; k < N; ++k) hs.push_back(project(Matrix::unit(N, k, k)));
    hs = span_basis(hs);
    if (hs.size() != r) throw std::logic_error("realization: Cartan subalgebra has wrong dimension");

    // Simple roots are the functionals of (i, i+1).
    Matrix simple(r, r);
    for (std::size_t i = 0; i < r; ++i) {
      auto v = functional_values(i, i + 1, hs);
      for (std::size_t k = 0; k < r; ++k) simple(k, i) = v[k];
    }

    const auto& roots = rs_.positive_roots();
    std::vector<std::optional<Matrix>> pos(roots.size()), neg(roots.size());
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = i + 1; j < N; ++j) {
        const Matrix x = project(Matrix::unit(N, i, j));
        if (x.is_zero()) continue;
        auto c = solve(simple, functional_values(i, j, hs));
        if (!c) throw std::logic_error("realization: weight outside the root lattice");
        Root root{std::vector<int>(r)};
        for (std::size_t k = 0; k < r; ++k) {
          if ((*c)[k].get_den() != 1) throw std::logic_error("realization: non-integral root coordinates");
          root.coords[k] = static_cast<int>((*c)[k].get_num().get_si());
        }
        const std::size_t idx = rs_.index_of(root);
        if (!pos[idx]) {
          pos[idx] = x;
          neg[idx] = project(Matrix::unit(N, j, i));
        }
      }
    for (std::size_t k = 0; k < roots.size(); ++k)
      if (!pos[k]) throw std::logic_error("realization: missing root vector for " + roots[k].str());

    // Normalise sl2 triples on simple roots; scale the other negative vectors by the same rule.
    std::vector<Matrix> coroots(r);
    for (std::size_t k = 0; k < roots.size(); ++k) {
      const Matrix h = commutator(*pos[k], *neg[k]);
      // gamma(h) for the root gamma of this pair: find a position with nonzero entry.
      Rational value = 0;
      for (std::size_t i = 0; i < N && value == 0; ++i)
        for (std::size_t j = i + 1; j < N; ++j)
          if ((*pos[k])(i, j) != 0) {
            value = h(i, i) - h(j, j);
            break;
          }
      if (value == 0) throw std::logic_error("realization: degenerate root pair");
      *neg[k] = *neg[k] * (Rational(2) / value);
      if (roots[k].height() == 1) {
        const std::size_t i = static_cast<std::size_t>(std::find(roots[k].coords.begin(), roots[k].coords.end(), 1) -
                                                        roots[k].coords.begin());
        coroots[i] = commutator(*pos[k], *neg[k]);
      }
    }
    basis_ = coroots;
    for (auto& p : pos) basis_.push_back(*p);
    for (auto& q : neg) basis_.push_back(*q);
    basis_matrix_ = columns_of(basis_);
    if (nullcone::rank(basis_matrix_) != basis_.size()) throw std::logic_error("realization: basis is dependent");
  }

  static Matrix random_combination(const std::vector<Matrix>& vs, Rng& rng, long bound) {
    Matrix x(vs.front().rows(), vs.front().cols());
    for (const Matrix& v : vs) {
      const long c = rng.uniform(-bound, bound);
      if (c != 0) x += v * Rational(c);
    }
    return x;
  }

  SimpleType type_;
  RootSystem rs_;
  std::size_t size_ = 0;
  std::optional<Matrix> form_;
  std::vector<Matrix> basis_;
  Matrix basis_matrix_;
  std::vector<int> degrees_;
  mutable std::vector<Matrix> dual_;
  std::shared_ptr<std::once_flag> dual_once_ = std::make_shared<std::once_flag>();
};

inline MatrixLieAlgebra build_algebra(const SimpleType& t) { return MatrixLieAlgebra(t); }

// ---------------------------------------------------------------------------
// Invariants

/// p_i(x): the coefficient of t^{N - d_i} in det(tI - x).
inline Rational eval_p(const MatrixLieAlgebra& alg, std::size_t i, const Matrix& x) {
  const int d = alg.degree(i);
  return characteristic_coefficients(x)[static_cast<std::size_t>(d)];
}

/// p_i^{(n)}(x, y), n = 0..d_i: p_i(ax + by) = sum_n a^{d_i - n} b^n p_i^{(n)}(x, y).
inline std::vector<Rational> polarize(const MatrixLieAlgebra& alg, std::size_t i, const Matrix& x, const Matrix& y) {
  const std::size_t d = static_cast<std::size_t>(alg.degree(i));
  const auto nodes = integer_nodes(d + 1);
  std::vector<Rational> values;
  for (const auto& t : nodes) values.push_back(eval_p(alg, i, x + y * t));
  return interpolate<Rational>(nodes, values);
}

inline SigmaVector sigma(const MatrixLieAlgebra& alg, const Matrix& x, const Matrix& y) {
  SigmaVector out;
  out.reserve(alg.sigma_length());
  for (std::size_t i = 0; i < alg.rank(); ++i) {
    const auto p = polarize(alg, i, x, y);
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

/// p_i'(x)(v), the derivative of s -> p_i(x + s v) at 0.
inline Rational directional_derivative(const MatrixLieAlgebra& alg, std::size_t i, const Matrix& x, const Matrix& v) {
  const std::size_t d = static_cast<std::size_t>(alg.degree(i));
  const auto nodes = integer_nodes(d + 1);
  std::vector<Rational> values;
  for (const auto& s : nodes) values.push_back(eval_p(alg, i, x + v * s));
  return interpolate<Rational>(nodes, values)[1];
}

/// epsilon_i(x) in g with <epsilon_i(x), v> = p_i'(x)(v) for the trace form.
inline Matrix epsilon(const MatrixLieAlgebra& alg, std::size_t i, const Matrix& x) {
  const auto& basis = alg.basis();
  const auto& dual = alg.dual_basis();
  Matrix e(alg.matrix_size(), alg.matrix_size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Rational d = directional_derivative(alg, i, x, basis[k]);
    if (d != 0) e += dual[k] * d;
  }
  return e;
}

/// epsilon_i^{(m)}(x, y), m = 0..d_i - 1.
inline std::vector<Matrix> epsilon_polarize(const MatrixLieAlgebra& alg, std::size_t i, const Matrix& x,
                                            const Matrix& y) {
  const std::size_t d = static_cast<std::size_t>(alg.degree(i));
  const auto nodes = integer_nodes(d);
  std::vector<Matrix> values;
  for (const auto& t : nodes) values.push_back(epsilon(alg, i, x + y * t));
  return interpolate<Matrix>(nodes, values);
}

/// Parameters t at which x + t y is tested for regularity.
/// Exact test that every nonzero element of span{x, y} is regular.
/// Returns a description of the first failure, if any.
///
/// The non-regular t in x + ty are the common roots of the r-minors of
/// ad(x) + t ad(y), r = dim g - rk. Each f = det(P (ad x + t ad y) Q) for integer
/// P, Q is a combination of those minors. The gcd is taken modulo a large prime
/// over combinations whose leading coefficient survives reduction, so its degree
/// bounds the degree of the rational gcd; a constant gcd certifies the whole
/// affine pencil. A non-constant gcd is reported as a failure even when the
/// random combinations were merely unlucky.
inline std::optional<std::string> pencil_irregularity(const MatrixLieAlgebra& alg, const Matrix& x, const Matrix& y) {
  if (span_dimension(std::vector<Matrix>{x, y}) != 2) return "x and y are linearly dependent";
  if (!alg.is_regular(x)) return "x is not regular";
  if (!alg.is_regular(y)) return "y is not regular";

  std::vector<Matrix> ix, iy;
  for (const Matrix& b : alg.basis()) {
    ix.push_back(commutator(x, b));
    iy.push_back(commutator(y, b));
  }
  const auto A = modp::reduce(columns_of(ix)), B = modp::reduce(columns_of(iy));
  if (!A || !B) return "entries are not reducible modulo the certificate prime";
  const std::size_t r = alg.dim() - alg.rank();
  Rng rng(0x70656e63696cull);
  std::optional<std::vector<std::uint64_t>> g;
  for (int attempt = 0; attempt < 8; ++attempt) {
    modp::Mat P(r, A->n), Q(A->m, r);
    for (auto& v : P.a) v = static_cast<std::uint64_t>(rng.uniform(0, 1L << 40));
    for (auto& v : Q.a) v = static_cast<std::uint64_t>(rng.uniform(0, 1L << 40));
    const modp::Mat a = P * *A * Q, b = P * *B * Q;
    // det(a + tb) = det(b) det(tI + b^{-1} a); b invertible keeps the degree at r.
    const auto bi = modp::inverse(b);
    if (!bi) continue;
    modp::Mat m = *bi * a;
    for (auto& v : m.a) v = modp::sub(0, v);
    auto f = modp::charpoly(m);
    g = g ? modp::gcd(*g, f) : f;
    if (g->size() == 1) return std::nullopt;
  }
  if (!g) return "no combination of full degree found";
  return "x + t y may fail to be regular at a root of a degree " + std::to_string(g->size() - 1) + " factor";
}

struct BorelSpan {
  std::vector<Matrix> basis;
  std::size_t dim() const { return basis.size(); }
};

/// span{epsilon_i^{(m)}(x, y)} for (x, y) in b x b with a regular pencil.
inline BorelSpan borel_span(const MatrixLieAlgebra& alg, const Matrix& x, const Matrix& y) {
  if (!alg.in_borel(x) || !alg.in_borel(y)) throw PreconditionError("borel_span: x and y must lie in b", "");
  if (auto why = pencil_irregularity(alg, x, y))
    throw PreconditionError("borel_span: pencil precondition fails", *why);
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < alg.rank(); ++i)
    for (auto& e : epsilon_polarize(alg, i, x, y)) gens.push_back(std::move(e));
  return BorelSpan{span_basis(gens)};
}

}  // namespace nullcone

#endif  // NULLCONE_INVARIANTS_HPP
