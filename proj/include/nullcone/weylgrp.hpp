#ifndef NULLCONE_WEYLGRP_HPP
#define NULLCONE_WEYLGRP_HPP

// Weyl groups acting on simple-root coordinates, weights and points of h.

#include "nullcone/rootsys.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nullcone {

/// A point of h, stored by its values beta_i(x) on the simple roots.
using HPoint = std::vector<Rational>;
using HPair = std::pair<HPoint, HPoint>;

class GroupTooLarge : public std::runtime_error {
 public:
  GroupTooLarge(const std::string& type, std::uint64_t order, std::uint64_t cap)
      : std::runtime_error("Weyl group of " + type + " has order " + std::to_string(order) +
                           ", above the cap " + std::to_string(cap)),
        order_(order) {}
  std::uint64_t order() const { return order_; }

 private:
  std::uint64_t order_;
};

inline std::uint64_t classical_weyl_order(const SimpleType& t) {
  validate(t);
  auto fact = [](int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
    return f;
  };
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return fact(n + 1);
    case Family::B:
    case Family::C: return (std::uint64_t{1} << n) * fact(n);
    case Family::D: return (std::uint64_t{1} << (n - 1)) * fact(n);
    case Family::E: return n == 6 ? 51840u : n == 7 ? 2903040u : 696729600u;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

/// Element of W with its integer matrix on simple-root coordinates and its
/// lexicographically smallest reduced word.
class WeylElement {
 public:
  WeylElement() = default;

  static WeylElement identity(const RootSystem& rs) {
    WeylElement e;
    e.n_ = rs.rank();
    e.action_.assign(e.n_ * e.n_, 0);
    for (std::size_t i = 0; i < e.n_; ++i) e.action_[i * e.n_ + i] = 1;
    return e;
  }

  /// s_{w[0]} s_{w[1]} ... ; the word need not be reduced.
  static WeylElement from_word(const RootSystem& rs, const std::vector<int>& word) {
    WeylElement e = identity(rs);
    for (int i : word) e = e.times_simple(rs, static_cast<std::size_t>(i));
    e.word_ = canonical_word(rs, e);
    return e;
  }

  const std::vector<int>& word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  const std::vector<long>& action() const { return action_; }
  bool is_identity() const { return word_.empty(); }

  /// w s_i, keeping the word canonical.
  WeylElement right_multiply(const RootSystem& rs, std::size_t i) const {
    WeylElement e = times_simple(rs, i);
    e.word_ = canonical_word(rs, e);
    return e;
  }

  WeylElement inverse(const RootSystem& rs) const {
    return from_word(rs, std::vector<int>(word_.rbegin(), word_.rend()));
  }

  WeylElement compose(const RootSystem& rs, const WeylElement& o) const {
    std::vector<int> w = word_;
    w.insert(w.end(), o.word_.begin(), o.word_.end());
    return from_word(rs, w);
  }

  Root apply(const Root& r) const {
    Root out{std::vector<int>(n_, 0)};
    for (std::size_t i = 0; i < n_; ++i) {
      long s = 0;
      for (std::size_t k = 0; k < n_; ++k) s += action_[i * n_ + k] * r.coords[k];
      out.coords[i] = static_cast<int>(s);
    }
    return out;
  }

  Weight apply(const RootSystem& rs, const Weight& lam) const {
    Weight out = lam;
    for (auto it = word_.rbegin(); it != word_.rend(); ++it) out = rs.reflect(out, static_cast<std::size_t>(*it));
    return out;
  }

  /// w(x) for x in h given by simple-root values.
  HPoint apply(const RootSystem& rs, const HPoint& x) const {
    HPoint out = x;
    for (auto it = word_.rbegin(); it != word_.rend(); ++it) out = reflect_point(rs, out, static_cast<std::size_t>(*it));
    return out;
  }

  /// Positive roots sent to negative roots.
  std::vector<Root> inversions(const RootSystem& rs) const {
    std::vector<Root> inv;
    for (const Root& g : rs.positive_roots())
      if (apply(g).negative()) inv.push_back(g);
    return inv;
  }

  std::string str() const {
    if (word_.empty()) return "e";
    std::string s;
    for (int i : word_) s += (s.empty() ? "s" : " s") + std::to_string(i + 1);
    return s;
  }

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.action_ == b.action_; }

  static HPoint reflect_point(const RootSystem& rs, const HPoint& x, std::size_t j) {
    rs.check_index(j);
    HPoint out = x;
    for (std::size_t i = 0; i < rs.rank(); ++i) out[i] -= x[j] * rs.cartan(j, i);
    return out;
  }

 private:
  WeylElement times_simple(const RootSystem& rs, std::size_t j) const {
    rs.check_index(j);
    // (M_w M_{s_j})[r][k] = M_w[r][k] - M_w[r][j] C[j][k]
    WeylElement e = *this;
    e.word_.clear();
    for (std::size_t r = 0; r < n_; ++r) {
      const long mj = action_[r * n_ + j];
      for (std::size_t k = 0; k < n_; ++k) e.action_[r * n_ + k] = action_[r * n_ + k] - mj * rs.cartan(j, k);
    }
    return e;
  }

  /// Greedy choice of the smallest left descent gives the lexicographically
  /// smallest reduced word. s_i is a left descent of w iff <w(rho), beta_i^vee> < 0.
  static std::vector<int> canonical_word(const RootSystem& rs, const WeylElement& w) {
    const std::size_t n = rs.rank();
    std::vector<long> two_rho(n, 0);
    for (const Root& g : rs.positive_roots())
      for (std::size_t k = 0; k < n; ++k) two_rho[k] += g.coords[k];
    std::vector<int> word;
    WeylElement cur = w;
    for (;;) {
      std::vector<long> u(n, 0);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k) u[r] += cur.action_[r * n + k] * two_rho[k];
      std::size_t descent = n;
      for (std::size_t i = 0; i < n && descent == n; ++i) {
        long p = 0;
        for (std::size_t k = 0; k < n; ++k) p += u[k] * rs.cartan(i, k);
        if (p < 0) descent = i;
      }
      if (descent == n) break;
      word.push_back(static_cast<int>(descent));
      cur = left_simple(rs, cur, descent);
    }
    return word;
  }

  static WeylElement left_simple(const RootSystem& rs, const WeylElement& w, std::size_t i) {
    // s_i w: row r of M_{s_i} M_w = row r of M_w - delta_ri * sum_k C[i][k] row k.
    WeylElement e = w;
    const std::size_t n = w.n_;
    for (std::size_t c = 0; c < n; ++c) {
      long s = 0;
      for (std::size_t k = 0; k < n; ++k) s += rs.cartan(i, k) * w.action_[k * n + c];
      e.action_[i * n + c] = w.action_[i * n + c] - s;
    }
    return e;
  }

  friend class WeylGroup;

  std::size_t n_ = 0;
  std::vector<long> action_;
  std::vector<int> word_;
};

/// Fully enumerated Weyl group, elements ordered by length then word.
class WeylGroup {
 public:
  static constexpr std::uint64_t default_max_order = 1000000;

  WeylGroup(const RootSystem& rs, std::uint64_t max_order = default_max_order) : rs_(&rs) {
    const std::uint64_t order = classical_weyl_order(rs.type());
    if (order > max_order) throw GroupTooLarge(rs.type().name(), order, max_order);
    enumerate();
    if (elements_.size() != order)
      throw std::logic_error("Weyl group enumeration of " + rs.type().name() + " gave " +
                             std::to_string(elements_.size()) + " elements");
  }

  const RootSystem& root_system() const { return *rs_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<WeylElement>& elements() const { return elements_; }

  const WeylElement* find(const std::vector<long>& action) const {
    auto it = index_.find(action);
    return it == index_.end() ? nullptr : &elements_[it->second];
  }

  const WeylElement& longest() const { return elements_.back(); }

 private:
  void enumerate() {
    const RootSystem& rs = *rs_;
    WeylElement e = WeylElement::identity(rs);
    elements_.push_back(e);
    index_[e.action()] = 0;
    std::size_t begin = 0, end = 1;
    // Layer k+1 is found from layer k in word order with letters ascending, so
    // the first word reaching an element is its lexicographically smallest
    // reduced word.
    while (begin < end) {
      for (std::size_t k = begin; k < end; ++k)
        for (std::size_t i = 0; i < rs.rank(); ++i) {
          WeylElement v = raw_right(rs, elements_[k], i);
          if (index_.count(v.action())) continue;
          index_[v.action()] = elements_.size();
          elements_.push_back(std::move(v));
        }
      begin = end;
      end = elements_.size();
    }
  }

  static WeylElement raw_right(const RootSystem& rs, const WeylElement& w, std::size_t i) {
    WeylElement v = w.times_simple(rs, i);
    v.word_ = w.word_;
    v.word_.push_back(static_cast<int>(i));
    return v;
  }

  const RootSystem* rs_;
  std::vector<WeylElement> elements_;
  std::map<std::vector<long>, std::size_t> index_;
};

/// Borel subalgebra w(b) containing h.
struct TorusBorel {
  WeylElement w;

  /// w(b) contains a nilpotent supported on S iff w^{-1}(S) consists of positive roots.
  bool contains_support(const RootSystem& rs, const std::vector<Root>& S) const {
    const WeylElement inv = w.inverse(rs);
    for (const Root& g : S)
      if (!inv.apply(g).positive()) return false;
    return true;
  }

  /// The positive system w(R+), sorted.
  std::vector<Root> positive_system(const RootSystem& rs) const {
    std::vector<Root> out;
    for (const Root& g : rs.positive_roots()) out.push_back(w.apply(g));
    std::sort(out.begin(), out.end());
    return out;
  }
};

/// Number of distinct Borel subalgebras containing h, counted by their positive systems.
inline std::size_t borels_containing_torus(const WeylGroup& group) {
  const RootSystem& rs = group.root_system();
  std::set<std::vector<Root>> systems;
  for (const WeylElement& w : group.elements()) systems.insert(TorusBorel{w}.positive_system(rs));
  return systems.size();
}

class ChainPreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Chain w_0 = e, ..., w_q = w through prefixes of the reduced word of w. At
/// each step S stays in the nilradical of w_{i-1}(p_{alpha_i}) and in w_i(R+).
inline std::vector<WeylElement> chain_of_lines(const RootSystem& rs, const std::vector<Root>& S,
                                               const WeylElement& w) {
  for (const Root& g : S) rs.require_positive_root(g);
  if (!TorusBorel{w}.contains_support(rs, S))
    throw ChainPreconditionError("chain_of_lines: w^{-1}(S) is not contained in R+ for w = " + w.str());

  const std::vector<int>& word = w.word();
  std::vector<WeylElement> chain{WeylElement::identity(rs)};
  if (!word.empty()) {
    // Recursion on the last letter, unrolled: the chain for w s_a extends the chain for w.
    std::vector<int> prefix;
    for (int a : word) {
      prefix.push_back(a);
      chain.push_back(WeylElement::from_word(rs, prefix));
    }
  }

  for (std::size_t k = 1; k < chain.size(); ++k) {
    const std::size_t a = static_cast<std::size_t>(word[k - 1]);
    const WeylElement prev_inv = chain[k - 1].inverse(rs);
    const Root alpha = rs.simple_root(a);
    if (!(chain[k - 1].right_multiply(rs, a) == chain[k]))
      throw std::logic_error("chain_of_lines: consecutive elements do not differ by s_alpha");
    for (const Root& g : S) {
      const Root back = prev_inv.apply(g);
      if (!back.positive() || back == alpha)
        throw std::logic_error("chain_of_lines: support leaves the nilradical at step " + std::to_string(k));
    }
    if (!TorusBorel{chain[k]}.contains_support(rs, S))
      throw std::logic_error("chain_of_lines: intermediate Borel loses the support at step " + std::to_string(k));
  }
  return chain;
}

inline std::vector<HPair> weyl_orbit_pairs(const WeylGroup& group, const HPair& p) {
  const RootSystem& rs = group.root_system();
  std::set<std::pair<std::vector<std::string>, std::vector<std::string>>> seen;
  std::vector<HPair> out;
  auto key = [](const HPoint& v) {
    std::vector<std::string> k;
    for (const auto& q : v) k.push_back(q.get_str());
    return k;
  };
  for (const WeylElement& w : group.elements()) {
    HPair q{w.apply(rs, p.first), w.apply(rs, p.second)};
    if (seen.insert({key(q.first), key(q.second)}).second) out.push_back(std::move(q));
  }
  return out;
}

}  // namespace nullcone

#endif  // NULLCONE_WEYLGRP_HPP
