#ifndef NULLCONE_ROOTSYS_HPP
#define NULLCONE_ROOTSYS_HPP

// Root systems of simple Lie algebras in Bourbaki labelling.
//
// Roots are integer coordinate vectors in the basis of simple roots. Weights
// are stored by their pairings with the simple coroots, so rho is the all-ones
// weight and regularity/dominance are sign tests on exact values.

#include "nullcone/rational.hpp"

#include <algorithm>
#include <cctype>
#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace nullcone {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleType {
  Family family = Family::A;
  int rank = 1;

  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;

  std::string name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

  bool simply_laced() const {
    return family == Family::A || family == Family::D || family == Family::E;
  }
};

class InvalidType : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws InvalidType unless the rank is in the Bourbaki range for the family.
/// B starts at rank 2 (covering B2 = C2); C starts at rank 3.
inline void validate(const SimpleType& t) {
  bool ok = false;
  switch (t.family) {
    case Family::A: ok = t.rank >= 1; break;
    case Family::B: ok = t.rank >= 2; break;
    case Family::C: ok = t.rank >= 3; break;
    case Family::D: ok = t.rank >= 4; break;
    case Family::E: ok = t.rank >= 6 && t.rank <= 8; break;
    case Family::F: ok = t.rank == 4; break;
    case Family::G: ok = t.rank == 2; break;
  }
  if (!ok) throw InvalidType("unsupported simple type " + t.name());
}

/// Parses names such as "A3", "e8", "G2".
inline SimpleType parse_type(const std::string& s) {
  if (s.size() < 2) throw InvalidType("cannot parse simple type '" + s + "'");
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (std::string("ABCDEFG").find(f) == std::string::npos)
    throw InvalidType("unknown family in '" + s + "'");
  int rank = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw InvalidType("bad rank in '" + s + "'");
    rank = rank * 10 + (s[i] - '0');
    if (rank > 1000) throw InvalidType("rank too large in '" + s + "'");
  }
  SimpleType t{static_cast<Family>(f), rank};
  validate(t);
  return t;
}

struct Root {
  std::vector<int> coords;

  int height() const {
    int h = 0;
    for (int c : coords) h += c;
    return h;
  }
  bool positive() const {
    return std::any_of(coords.begin(), coords.end(), [](int c) { return c > 0; }) &&
           std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
  }
  bool negative() const {
    return std::any_of(coords.begin(), coords.end(), [](int c) { return c < 0; }) &&
           std::all_of(coords.begin(), coords.end(), [](int c) { return c <= 0; });
  }
  Root operator-() const {
    Root r = *this;
    for (int& c : r.coords) c = -c;
    return r;
  }
  std::string str() const { return "[" + join(coords) + "]"; }

  friend auto operator<=>(const Root&, const Root&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Root& r) { return os << r.str(); }

struct Weight {
  std::vector<Rational> pairings;  // <lambda, beta_i^vee>

  std::string str() const { return "(" + join(pairings) + ")"; }
  friend bool operator==(const Weight&, const Weight&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.str(); }

inline Weight operator+(Weight a, const Weight& b) {
  for (std::size_t i = 0; i < a.pairings.size(); ++i) a.pairings[i] += b.pairings[i];
  return a;
}
inline Weight operator-(Weight a, const Weight& b) {
  for (std::size_t i = 0; i < a.pairings.size(); ++i) a.pairings[i] -= b.pairings[i];
  return a;
}

/// Cartan matrix with cartan[i][j] = <beta_j, beta_i^vee>, Bourbaki labelling.
inline std::vector<std::vector<int>> cartan_matrix(const SimpleType& t) {
  validate(t);
  const int n = t.rank;
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto link = [&](int a, int b) { c[a][b] = c[b][a] = -1; };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::B:  // beta_n short
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 1][n - 2] = -2;
      break;
    case Family::C:  // beta_n long
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 2][n - 1] = -2;
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Family::E:
      link(0, 2);
      link(2, 3);
      link(3, 4);
      link(1, 3);
      for (int i = 4; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::F:  // beta_1, beta_2 long
      link(0, 1);
      link(2, 3);
      c[1][2] = -1;
      c[2][1] = -2;
      break;
    case Family::G:  // beta_1 short
      c[0][1] = -3;
      c[1][0] = -1;
      break;
  }
  return c;
}

/// Classical number of positive roots.
inline std::size_t classical_positive_root_count(const SimpleType& t) {
  const std::size_t n = static_cast<std::size_t>(t.rank);
  switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

class RootSystem {
 public:
  explicit RootSystem(SimpleType t) : type_(t), cartan_(cartan_matrix(t)) {
    build_lengths();
    enumerate();
  }

  const SimpleType& type() const { return type_; }
  std::size_t rank() const { return static_cast<std::size_t>(type_.rank); }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  int cartan(std::size_t i, std::size_t j) const { return cartan_[i][j]; }

  /// Positive roots sorted by height, then coordinates.
  const std::vector<Root>& positive_roots() const { return positive_; }
  const Root& highest_root() const { return positive_.back(); }
  std::size_t dim_borel() const { return positive_.size() + rank(); }

  Root simple_root(std::size_t i) const {
    check_index(i);
    Root r{std::vector<int>(rank(), 0)};
    r.coords[i] = 1;
    return r;
  }

  /// Squared length of beta_i, normalised so that long roots have length 2.
  const Rational& simple_length(std::size_t i) const { return lengths_[i]; }

  /// Simple-root indices adjacent to i in the Dynkin diagram.
  std::vector<std::size_t> neighbours(std::size_t i) const {
    check_index(i);
    std::vector<std::size_t> nb;
    for (std::size_t j = 0; j < rank(); ++j)
      if (j != i && cartan_[i][j] != 0) nb.push_back(j);
    return nb;
  }

  /// Invariant form (gamma, delta) on the root lattice.
  Rational inner(const Root& a, const Root& b) const {
    Rational s = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (a.coords[i] == 0) continue;
      for (std::size_t j = 0; j < rank(); ++j)
        if (b.coords[j] != 0) s += lengths_[i] * cartan_[i][j] * a.coords[i] * b.coords[j];
    }
    return s / 2;
  }

  Rational length2(const Root& r) const { return inner(r, r); }

  /// <r, beta_i^vee> for each simple i.
  Weight weight_of_root(const Root& r) const {
    require_root(r);
    return weight_of_combination(r.coords);
  }

  /// Same map without the root-membership check: any integer combination.
  Weight weight_of_combination(const std::vector<int>& coords) const {
    Weight w{std::vector<Rational>(rank())};
    for (std::size_t i = 0; i < rank(); ++i) {
      long s = 0;
      for (std::size_t j = 0; j < rank(); ++j) s += static_cast<long>(coords[j]) * cartan_[i][j];
      w.pairings[i] = s;
    }
    return w;
  }

  /// <lambda, gamma^vee> for a root gamma.
  Rational coroot_pairing(const Weight& lambda, const Root& gamma) const {
    // gamma^vee = sum_j n_j (|beta_j|^2 / |gamma|^2) beta_j^vee
    Rational s = 0;
    for (std::size_t j = 0; j < rank(); ++j)
      if (gamma.coords[j] != 0) s += lambda.pairings[j] * lengths_[j] * gamma.coords[j];
    return s / length2(gamma);
  }

  Weight rho() const { return Weight{std::vector<Rational>(rank(), Rational(1))}; }

  /// s_{beta_i}(lambda).
  Weight reflect(const Weight& lambda, std::size_t i) const {
    check_index(i);
    Weight out = lambda;
    const Rational c = lambda.pairings[i];
    for (std::size_t k = 0; k < rank(); ++k) out.pairings[k] -= c * cartan_[k][i];
    return out;
  }

  /// s_{beta_i}(r) for a root (or any lattice vector) in simple-root coordinates.
  Root reflect(const Root& r, std::size_t i) const {
    check_index(i);
    long p = 0;
    for (std::size_t k = 0; k < rank(); ++k) p += static_cast<long>(r.coords[k]) * cartan_[i][k];
    Root out = r;
    out.coords[i] -= static_cast<int>(p);
    return out;
  }

  bool is_regular(const Weight& lambda) const { return !singular_witness(lambda).has_value(); }

  /// A positive root gamma with <lambda, gamma^vee> = 0, if any.
  std::optional<Root> singular_witness(const Weight& lambda) const {
    for (const Root& g : positive_)
      if (coroot_pairing(lambda, g) == 0) return g;
    return std::nullopt;
  }

  bool is_dominant(const Weight& lambda) const {
    return std::all_of(lambda.pairings.begin(), lambda.pairings.end(),
                       [](const Rational& q) { return q >= 0; });
  }

  bool is_root(const Root& r) const {
    if (r.coords.size() != rank()) return false;
    if (r.positive()) return index_.count(r.coords) > 0;
    if (r.negative()) return index_.count((-r).coords) > 0;
    return false;
  }

  bool is_positive_root(const Root& r) const { return r.coords.size() == rank() && index_.count(r.coords) > 0; }

  std::size_t index_of(const Root& r) const {
    auto it = index_.find(r.coords);
    if (it == index_.end()) throw std::invalid_argument(r.str() + " is not a positive root of " + type_.name());
    return it->second;
  }

  bool is_simple(const Root& r) const { return r.positive() && r.height() == 1; }

  void require_root(const Root& r) const {
    if (!is_root(r)) throw std::invalid_argument(r.str() + " is not a root of " + type_.name());
  }
  void require_positive_root(const Root& r) const {
    if (!is_positive_root(r)) throw std::invalid_argument(r.str() + " is not a positive root of " + type_.name());
  }

  void check_index(std::size_t i) const {
    if (i >= rank()) throw std::out_of_range("simple index " + std::to_string(i) + " out of range for " + type_.name());
  }

 private:
  void build_lengths() {
    const std::size_t n = rank();
    lengths_.assign(n, Rational(0));
    lengths_[0] = 1;
    // Propagate l_i c_ij = l_j c_ji along the (connected) Dynkin diagram.
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < n; ++i) {
        if (lengths_[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (lengths_[j] == 0 && cartan_[i][j] != 0) {
            lengths_[j] = lengths_[i] * make_rational(cartan_[i][j], cartan_[j][i]);
            changed = true;
          }
      }
    }
    const Rational longest = *std::max_element(lengths_.begin(), lengths_.end());
    for (auto& l : lengths_) l = 2 * l / longest;
  }

  void enumerate() {
    std::set<std::vector<int>> seen;
    std::vector<Root> frontier;
    for (std::size_t i = 0; i < rank(); ++i) {
      Root s = simple_root(i);
      seen.insert(s.coords);
      frontier.push_back(s);
    }
    while (!frontier.empty()) {
      std::vector<Root> next;
      for (const Root& r : frontier)
        for (std::size_t i = 0; i < rank(); ++i) {
          Root s = reflect(r, i);
          if (s.positive() && seen.insert(s.coords).second) next.push_back(s);
        }
      frontier = std::move(next);
    }
    for (const auto& c : seen) positive_.push_back(Root{c});
    std::sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
      if (a.height() != b.height()) return a.height() < b.height();
      return a.coords < b.coords;
    });
    for (std::size_t k = 0; k < positive_.size(); ++k) index_[positive_[k].coords] = k;
  }

  SimpleType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Rational> lengths_;
  std::vector<Root> positive_;
  std::map<std::vector<int>, std::size_t> index_;
};

inline RootSystem build_root_system(const SimpleType& t) {
  validate(t);
  return RootSystem(t);
}

/// rho plus or minus a root, as a weight.
inline Weight rho_shift(const RootSystem& rs, const Root& alpha, int sign) {
  const Weight a = rs.weight_of_root(alpha);
  return sign > 0 ? rs.rho() + a : rs.rho() - a;
}

}  // namespace nullcone

#endif  // NULLCONE_ROOTSYS_HPP
