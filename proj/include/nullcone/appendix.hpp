#ifndef NULLCONE_APPENDIX_HPP
#define NULLCONE_APPENDIX_HPP

// Classification of rho - alpha and rho + alpha for positive roots alpha.
//
// The classifier follows a fixed case analysis per type: each positive root is
// sent to a route (a simple reflection fixing the weight, a reflection onto
// another already classified weight, or a dominance argument). Routes are
// checked as exact identities of weights and then compared with the direct
// pairing oracle of RootSystem, which is the ground truth.

#include "nullcone/rootsys.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#ifndef NULLCONE_DATA_DIR
#define NULLCONE_DATA_DIR "data/tables"
#endif

namespace nullcone {

enum class Shift { minus, plus };

inline const char* to_string(Shift s) { return s == Shift::minus ? "minus" : "plus"; }
inline int sign_of(Shift s) { return s == Shift::minus ? -1 : +1; }

// ---------------------------------------------------------------------------
// Table files

class TableFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TableRow {
  int i = 0;  // 1-based simple index
  std::vector<int> js;
};

struct TableReduction {
  int i = 0;
  int j = 0;
  std::optional<int> target_j;  // target given as r(k) of the same root list
  std::vector<int> target_l;    // or as explicit L-coordinates
};

struct AppendixTable {
  std::string name;
  std::string rootlist;
  Shift shift = Shift::minus;
  std::vector<TableRow> rows;
  std::vector<TableReduction> reductions;
};

struct AppendixTableFile {
  SimpleType type;
  std::string ordering;  // "L-E" swaps the first two coordinates, "L-F" is the identity
  std::map<std::string, std::vector<std::vector<int>>> rootlists;
  std::vector<AppendixTable> tables;
  std::string source;

  const AppendixTable* find(Shift s) const {
    for (const auto& t : tables)
      if (t.shift == s) return &t;
    return nullptr;
  }

  /// Simple-root coordinates from a transcribed L-coordinate list.
  std::vector<int> decode(const std::vector<int>& l) const {
    std::vector<int> c = l;
    if (ordering == "L-E" && c.size() >= 2) std::swap(c[0], c[1]);
    return c;
  }

  std::vector<int> target_coords(const AppendixTable& t, const TableReduction& r) const {
    if (r.target_j) return decode(rootlists.at(t.rootlist).at(static_cast<std::size_t>(*r.target_j - 1)));
    return decode(r.target_l);
  }
};

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline int parse_int(const std::string& s, const std::string& where) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(trim(s), &pos);
    if (pos != trim(s).size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw TableFormatError(where + ": expected an integer, got '" + s + "'");
  }
}

inline std::vector<int> parse_int_list(const std::string& s, const std::string& where, bool ranges) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw TableFormatError(where + ": empty list entry");
    const auto dots = item.find("..");
    if (ranges && dots != std::string::npos) {
      const int a = parse_int(item.substr(0, dots), where), b = parse_int(item.substr(dots + 2), where);
      if (b < a) throw TableFormatError(where + ": descending range " + item);
      for (int k = a; k <= b; ++k) out.push_back(k);
    } else {
      out.push_back(parse_int(item, where));
    }
  }
  return out;
}

}  // namespace detail

/// Parses the table format:
///
///   format nullcone-appendix-table 1
///   type E6
///   ordering L-E | L-F
///   rootlist <name>
///   r <j> = <c1>,<c2>,...
///   end
///   table <name> rootlist=<name> shift=minus|plus
///   i <k> : <j>,<j>,<a>..<b>
///   reduce <k> <j> -> r <j'>   |   reduce <k> <j> -> [c1,...]
///   end
///
/// Blank lines and lines starting with '#' are ignored.
inline AppendixTableFile parse_table_file(std::istream& in, const std::string& source) {
  AppendixTableFile f;
  f.source = source;
  bool have_format = false, have_type = false;
  std::string line;
  int lineno = 0;
  enum class Block { none, rootlist, table } block = Block::none;
  std::string current_list;
  AppendixTable current_table;

  while (std::getline(in, line)) {
    ++lineno;
    const std::string where = source + ":" + std::to_string(lineno);
    line = detail::trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;

    if (block == Block::rootlist) {
      if (head == "end") {
        block = Block::none;
        continue;
      }
      if (head != "r") throw TableFormatError(where + ": expected 'r <j> = ...' or 'end'");
      const auto eq = line.find('=');
      if (eq == std::string::npos) throw TableFormatError(where + ": missing '='");
      const int j = detail::parse_int(line.substr(1, eq - 1), where);
      auto& list = f.rootlists[current_list];
      if (j != static_cast<int>(list.size()) + 1) throw TableFormatError(where + ": root labels must be consecutive");
      list.push_back(detail::parse_int_list(line.substr(eq + 1), where, false));
      if (static_cast<int>(list.back().size()) != f.type.rank)
        throw TableFormatError(where + ": coordinate count differs from the rank");
      continue;
    }

    if (block == Block::table) {
      if (head == "end") {
        f.tables.push_back(current_table);
        block = Block::none;
        continue;
      }
      if (head == "i") {
        const auto colon = line.find(':');
        if (colon == std::string::npos) throw TableFormatError(where + ": missing ':'");
        TableRow row;
        row.i = detail::parse_int(line.substr(1, colon - 1), where);
        const std::string rest = detail::trim(line.substr(colon + 1));
        if (!rest.empty()) row.js = detail::parse_int_list(rest, where, true);
        current_table.rows.push_back(row);
        continue;
      }
      if (head == "reduce") {
        const auto arrow = line.find("->");
        if (arrow == std::string::npos) throw TableFormatError(where + ": missing '->'");
        std::istringstream lhs(line.substr(6, arrow - 6));
        TableReduction r;
        std::string a, b;
        lhs >> a >> b;
        r.i = detail::parse_int(a, where);
        r.j = detail::parse_int(b, where);
        std::string rhs = detail::trim(line.substr(arrow + 2));
        if (!rhs.empty() && rhs[0] == '[') {
          if (rhs.back() != ']') throw TableFormatError(where + ": unterminated coordinate list");
          r.target_l = detail::parse_int_list(rhs.substr(1, rhs.size() - 2), where, false);
        } else if (rhs.size() > 1 && rhs[0] == 'r') {
          r.target_j = detail::parse_int(rhs.substr(1), where);
        } else {
          throw TableFormatError(where + ": bad reduction target '" + rhs + "'");
        }
        current_table.reductions.push_back(r);
        continue;
      }
      throw TableFormatError(where + ": unexpected '" + head + "' in table block");
    }

    if (head == "format") {
      std::string name;
      int version = 0;
      ls >> name >> version;
      if (name != "nullcone-appendix-table" || version != 1)
        throw TableFormatError(where + ": unsupported format '" + name + " " + std::to_string(version) + "'");
      have_format = true;
    } else if (head == "type") {
      std::string t;
      ls >> t;
      try {
        f.type = parse_type(t);
      } catch (const InvalidType& e) {
        throw TableFormatError(where + ": " + e.what());
      }
      have_type = true;
    } else if (head == "ordering") {
      ls >> f.ordering;
      if (f.ordering != "L-E" && f.ordering != "L-F") throw TableFormatError(where + ": unknown ordering " + f.ordering);
    } else if (head == "rootlist") {
      if (!have_format || !have_type) throw TableFormatError(where + ": 'format' and 'type' must come first");
      ls >> current_list;
      if (f.rootlists.count(current_list)) throw TableFormatError(where + ": duplicate root list " + current_list);
      f.rootlists[current_list];
      block = Block::rootlist;
    } else if (head == "table") {
      if (!have_format || !have_type) throw TableFormatError(where + ": 'format' and 'type' must come first");
      current_table = AppendixTable{};
      ls >> current_table.name;
      std::string kv;
      while (ls >> kv) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw TableFormatError(where + ": expected key=value");
        const std::string k = kv.substr(0, eq), v = kv.substr(eq + 1);
        if (k == "rootlist") {
          current_table.rootlist = v;
        } else if (k == "shift") {
          if (v != "minus" && v != "plus") throw TableFormatError(where + ": shift must be minus or plus");
          current_table.shift = v == "minus" ? Shift::minus : Shift::plus;
        } else {
          throw TableFormatError(where + ": unknown key " + k);
        }
      }
      if (!f.rootlists.count(current_table.rootlist))
        throw TableFormatError(where + ": unknown root list '" + current_table.rootlist + "'");
      block = Block::table;
    } else {
      throw TableFormatError(where + ": unknown directive '" + head + "'");
    }
  }
  if (block != Block::none) throw TableFormatError(source + ": missing 'end'");
  if (!have_format || !have_type) throw TableFormatError(source + ": missing header");

  for (const auto& t : f.tables) {
    const auto n = static_cast<int>(f.rootlists.at(t.rootlist).size());
    for (const auto& row : t.rows) {
      if (row.i < 1 || row.i > f.type.rank) throw TableFormatError(source + ": row index out of range");
      for (int j : row.js)
        if (j < 1 || j > n) throw TableFormatError(source + ": root label " + std::to_string(j) + " out of range");
    }
    for (const auto& r : t.reductions)
      if (r.j < 1 || r.j > n || (r.target_j && (*r.target_j < 1 || *r.target_j > n)) || r.i < 1 || r.i > f.type.rank)
        throw TableFormatError(source + ": reduction label out of range");
  }
  return f;
}

inline AppendixTableFile load_table_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw TableFormatError("cannot open table file " + p.string());
  return parse_table_file(in, p.filename().string());
}

class TableSet {
 public:
  TableSet() = default;

  /// Loads e6.tbl, e7.tbl, e8.tbl and f4.tbl from dir.
  static TableSet load(const std::filesystem::path& dir) {
    TableSet s;
    for (const char* name : {"e6.tbl", "e7.tbl", "e8.tbl", "f4.tbl"}) s.add(load_table_file(dir / name));
    return s;
  }

  static const TableSet& builtin() {
    static const TableSet s = load(NULLCONE_DATA_DIR);
    return s;
  }

  void add(AppendixTableFile f) { files_[f.type] = std::move(f); }

  const AppendixTableFile* find(const SimpleType& t) const {
    auto it = files_.find(t);
    return it == files_.end() ? nullptr : &it->second;
  }

  const std::map<SimpleType, AppendixTableFile>& files() const { return files_; }

 private:
  std::map<SimpleType, AppendixTableFile> files_;
};

// ---------------------------------------------------------------------------
// Equalities for simply-laced types

inline void require_simply_laced(const RootSystem& rs) {
  if (!rs.type().simply_laced()) throw std::invalid_argument(rs.type().name() + " is not simply laced");
}

inline long neighbour_sum(const RootSystem& rs, const Root& alpha, std::size_t i) {
  long s = 0;
  for (std::size_t j : rs.neighbours(i)) s += alpha.coords[j];
  return s;
}

/// 2 n_i - 1 = sum of n_j over the Dynkin neighbours j of i.
inline bool equality4_holds(const RootSystem& rs, const Root& alpha, std::size_t i) {
  require_simply_laced(rs);
  return 2L * alpha.coords[i] - 1 == neighbour_sum(rs, alpha, i);
}

/// 2 n_i + 1 = sum of n_j over the Dynkin neighbours j of i.
inline bool equality5_holds(const RootSystem& rs, const Root& alpha, std::size_t i) {
  require_simply_laced(rs);
  return 2L * alpha.coords[i] + 1 == neighbour_sum(rs, alpha, i);
}

/// The explicit F4 conditions for s_i(rho - alpha) = rho - alpha.
inline bool f4_minus_condition(const Root& a, std::size_t i) {
  const auto& n = a.coords;
  switch (i) {
    case 0: return n[1] == 2 * n[0] - 1;
    case 1: return n[0] + n[2] == 2 * n[1] - 1;
    case 2: return 2 * n[1] + n[3] == 2 * n[2] - 1;
    case 3: return n[2] == 2 * n[3] - 1;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Verdicts

enum class VerdictStatus { RegularDominant, RegularAfterOneReflection, NotRegular, Unresolved };

inline const char* to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::RegularDominant: return "RegularDominant";
    case VerdictStatus::RegularAfterOneReflection: return "RegularAfterOneReflection";
    case VerdictStatus::NotRegular: return "NotRegular";
    case VerdictStatus::Unresolved: return "Unresolved";
  }
  return "?";
}

/// One step of the case analysis.
struct Route {
  enum class Kind {
    fixed,           // s_i fixes the weight
    reduce,          // s_i maps the weight onto rho -+ target, classified recursively
    dominant,        // alpha is dominant, so rho + alpha is regular dominant
    one_reflection,  // s_i maps the weight onto rho + target with target dominant (or zero)
    none
  };
  Kind kind = Kind::none;
  std::size_t simple = 0;
  std::vector<int> target;  // simple-root coordinates; all zero means rho itself
  std::string tag;
  bool expects_regular = false;  // for reduce: whether the case analysis expects a regular target
};

struct Note {
  std::string kind;
  std::string detail;
};

struct RhoShiftVerdict {
  Shift shift = Shift::minus;
  Root alpha;
  VerdictStatus status = VerdictStatus::Unresolved;
  std::optional<std::size_t> simple;  // for RegularAfterOneReflection
  std::optional<Root> witness;        // for NotRegular
  Route route;
  std::vector<Note> notes;

  bool has_note(const std::string& kind) const {
    return std::any_of(notes.begin(), notes.end(), [&](const Note& n) { return n.kind == kind; });
  }
};

struct OracleVerdict {
  bool regular = false;
  bool dominant = false;
  std::optional<Root> witness;
  std::vector<std::size_t> one_reflection;  // simple beta with s_beta(lambda) regular dominant
};

inline OracleVerdict oracle_verdict(const RootSystem& rs, const Weight& lam) {
  OracleVerdict o;
  o.witness = rs.singular_witness(lam);
  o.regular = !o.witness.has_value();
  o.dominant = rs.is_dominant(lam);
  if (o.regular && !o.dominant)
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      const Weight s = rs.reflect(lam, i);
      if (rs.is_dominant(s)) o.one_reflection.push_back(i);
    }
  return o;
}

/// Whether a verdict is consistent with the oracle, and its witnesses sound.
inline bool verdict_matches_oracle(const RootSystem& rs, const RhoShiftVerdict& v, const OracleVerdict& o,
                                   std::string* why = nullptr) {
  const Weight lam = rho_shift(rs, v.alpha, sign_of(v.shift));
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  switch (v.status) {
    case VerdictStatus::RegularDominant:
      if (!(o.regular && o.dominant)) return fail("oracle: not regular dominant");
      return true;
    case VerdictStatus::RegularAfterOneReflection: {
      if (!o.regular) return fail("oracle: not regular");
      if (o.dominant) return fail("oracle: already dominant");
      if (!v.simple) return fail("missing reflection witness");
      const Weight s = rs.reflect(lam, *v.simple);
      if (!(rs.is_regular(s) && rs.is_dominant(s))) return fail("reflection witness does not give a regular dominant weight");
      return true;
    }
    case VerdictStatus::NotRegular:
      if (o.regular) return fail("oracle: regular");
      if (!v.witness || !rs.is_positive_root(*v.witness)) return fail("missing or invalid root witness");
      if (rs.coroot_pairing(lam, *v.witness) != 0) return fail("witness pairing is nonzero");
      return true;
    case VerdictStatus::Unresolved:
      return fail("classifier unresolved");
  }
  return fail("unknown status");
}

// ---------------------------------------------------------------------------
// Case analysis

namespace detail {

/// 1-based interval helper: adds c to coordinates a..b.
inline void add_range(std::vector<int>& v, int a, int b, int c) {
  for (int k = a; k <= b; ++k) v[static_cast<std::size_t>(k - 1)] += c;
}

inline Route fixed(int i, std::string tag) {
  Route r;
  r.kind = Route::Kind::fixed;
  r.simple = static_cast<std::size_t>(i - 1);
  r.tag = std::move(tag);
  return r;
}

inline Route reduce(int i, std::vector<int> target, std::string tag, bool expects_regular = false) {
  Route r;
  r.kind = Route::Kind::reduce;
  r.simple = static_cast<std::size_t>(i - 1);
  r.target = std::move(target);
  r.tag = std::move(tag);
  r.expects_regular = expects_regular;
  return r;
}

inline Route dominant(std::string tag) {
  Route r;
  r.kind = Route::Kind::dominant;
  r.tag = std::move(tag);
  return r;
}

inline Route one_reflection(int i, std::vector<int> target, std::string tag) {
  Route r;
  r.kind = Route::Kind::one_reflection;
  r.simple = static_cast<std::size_t>(i - 1);
  r.target = std::move(target);
  r.tag = std::move(tag);
  return r;
}

using RouteMap = std::map<std::vector<int>, Route>;

/// Registers a family member if it is a root and not yet assigned; earlier
/// registrations take precedence.
inline void put(const RootSystem& rs, RouteMap& m, const std::vector<int>& c, Route r) {
  if (!rs.is_positive_root(Root{c})) return;
  m.emplace(c, std::move(r));
}

inline bool distinct_sum(const Root& a) {
  return std::all_of(a.coords.begin(), a.coords.end(), [](int c) { return c <= 1; });
}

/// Sum of distinct simple roots ordered along a path ending at a leaf i
/// with s_i(beta_prev) = beta_prev + beta_i: s_i fixes rho - alpha.
inline std::optional<std::size_t> distinct_sum_minus_leaf(const RootSystem& rs, const Root& a) {
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    if (a.coords[i] != 1) continue;
    std::vector<std::size_t> in_support;
    for (std::size_t j : rs.neighbours(i))
      if (a.coords[j] == 1) in_support.push_back(j);
    if (in_support.size() == 1 && rs.cartan(i, in_support[0]) == -1) return i;
  }
  return std::nullopt;
}

/// Sum of l < rank distinct simple roots extended by an outside simple root j
/// joined to the support by a single edge: s_j fixes rho + alpha.
inline std::optional<std::size_t> distinct_sum_plus_extension(const RootSystem& rs, const Root& a) {
  for (std::size_t j = 0; j < rs.rank(); ++j) {
    if (a.coords[j] != 0) continue;
    long s = 0;
    for (std::size_t k : rs.neighbours(j)) s += static_cast<long>(a.coords[k]) * -rs.cartan(j, k);
    if (s == 1) return j;
  }
  return std::nullopt;
}

inline RouteMap minus_families(const RootSystem& rs) {
  RouteMap m;
  const int n = static_cast<int>(rs.rank());
  auto zero = [&] { return std::vector<int>(static_cast<std::size_t>(n), 0); };
  switch (rs.type().family) {
    case Family::B:
      for (int i = 1; i < n; ++i)
        for (int k = i; k < n; ++k) {
          auto c = zero();
          add_range(c, i, k, 1);
          add_range(c, k + 1, n, 2);
          if (i < k) {
            put(rs, m, c, fixed(i, "rho-minus/B/i<k"));
          } else if (k < n - 1) {
            put(rs, m, c, fixed(i + 1, "rho-minus/B/i=k<rank-1"));
          } else {
            auto t = zero();
            add_range(t, n - 1, n, 1);
            put(rs, m, c, reduce(n, t, "rho-minus/B/beta(rank-1)+2beta(rank)"));
          }
        }
      break;
    case Family::C:
      for (int i = 1; i < n; ++i)
        for (int k = i; k < n; ++k) {
          auto c = zero();
          add_range(c, i, k, 1);
          add_range(c, k + 1, n - 1, 2);
          add_range(c, n, n, 1);
          if (i < k) put(rs, m, c, fixed(i, "rho-minus/C/i<k"));
          else put(rs, m, c, fixed(i + 1, "rho-minus/C/i=k"));
        }
      for (int k = 1; k < n; ++k) {
        auto c = zero();
        add_range(c, k, n - 1, 2);
        add_range(c, n, n, 1);
        auto t = zero();
        if (k < n - 1) {
          add_range(t, k, k, 1);
          add_range(t, k + 1, n - 1, 2);
          add_range(t, n, n, 1);
          put(rs, m, c, reduce(k, t, "rho-minus/C/2(beta(k)..)+beta(rank)"));
        } else {
          add_range(t, n - 1, n, 1);
          put(rs, m, c, reduce(n - 1, t, "rho-minus/C/2beta(rank-1)+beta(rank)"));
        }
      }
      break;
    case Family::D:
      for (int i = 1; i < n - 2; ++i)
        for (int k = i; k < n - 2; ++k) {
          auto c = zero();
          add_range(c, i, k, 1);
          add_range(c, k + 1, n - 2, 2);
          add_range(c, n - 1, n, 1);
          if (i < k) put(rs, m, c, fixed(i, "rho-minus/D/i<k"));
          else if (k < n - 3) put(rs, m, c, fixed(i + 1, "rho-minus/D/i=k<rank-3"));
          else put(rs, m, c, fixed(n - 2, "rho-minus/D/i=k=rank-3"));
        }
      break;
    case Family::G:
      put(rs, m, {2, 1}, fixed(1, "rho-minus/G2"));
      put(rs, m, {3, 2}, fixed(2, "rho-minus/G2"));
      put(rs, m, {3, 1}, reduce(1, {1, 1}, "rho-minus/G2"));
      break;
    default:
      break;
  }
  return m;
}

inline RouteMap plus_families(const RootSystem& rs) {
  RouteMap m;
  const int n = static_cast<int>(rs.rank());
  auto zero = [&] { return std::vector<int>(static_cast<std::size_t>(n), 0); };
  auto seg = [&](int a, int b) {
    auto c = zero();
    add_range(c, a, b, 1);
    return c;
  };
  switch (rs.type().family) {
    case Family::B: {
      put(rs, m, seg(1, n), dominant("rho-plus/B/sum-of-simple-roots"));
      put(rs, m, seg(1, n - 1), one_reflection(n, seg(1, n), "rho-plus/B/sum-of-long-simple-roots"));
      for (int i = 2; i <= n; ++i) put(rs, m, seg(i, n), fixed(i - 1, "rho-plus/B/family-1"));
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          if (j < n) put(rs, m, seg(i, j - 1), fixed(j, "rho-plus/B/family-2"));
          else if (i > 1) put(rs, m, seg(i, j - 1), fixed(i - 1, "rho-plus/B/family-2"));
        }
      for (int i = 2; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          auto c = seg(i, j - 1);
          add_range(c, j, n, 2);
          put(rs, m, c, fixed(i - 1, "rho-plus/B/family-3"));
        }
      for (int j = 2; j < n; ++j) {
        auto c = seg(1, j);
        add_range(c, j + 1, n, 2);
        put(rs, m, c, fixed(j, "rho-plus/B/family-4"));
      }
      break;
    }
    case Family::C: {
      auto a1 = seg(1, n);
      add_range(a1, 2, n - 1, 1);
      put(rs, m, a1, dominant("rho-plus/C/beta1+2(...)+beta(rank)"));
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) put(rs, m, seg(i, j - 1), fixed(j, "rho-plus/C/family-1"));
      for (int i = 2; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          auto c = seg(i, j - 1);
          add_range(c, j, n - 1, 2);
          add_range(c, n, n, 1);
          put(rs, m, c, fixed(i - 1, "rho-plus/C/family-2"));
        }
      for (int j = 2; j <= n - 1; ++j) {
        auto c = seg(1, j);
        add_range(c, j + 1, n - 1, 2);
        add_range(c, n, n, 1);
        put(rs, m, c, fixed(j, "rho-plus/C/family-3"));
      }
      for (int i = 2; i <= n; ++i) {
        auto c = zero();
        add_range(c, i, n - 1, 2);
        add_range(c, n, n, 1);
        auto t = c;
        t[static_cast<std::size_t>(i - 2)] += 1;
        put(rs, m, c, reduce(i - 1, t, "rho-plus/C/family-4"));
      }
      break;
    }
    case Family::D: {
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          const auto c = seg(i, j - 1);
          if (i != 1 && i != n - 2 && i != n - 1) put(rs, m, c, fixed(i - 1, "rho-plus/D/family-1"));
          else if (i == 1 && j != n - 2 && j != n - 1 && j != n) put(rs, m, c, fixed(j, "rho-plus/D/family-1"));
          else if (i == 1 && j == n - 2) put(rs, m, c, fixed(n - 2, "rho-plus/D/family-1"));
          else if (i == 1) put(rs, m, c, fixed(n, "rho-plus/D/family-1"));
          else if (i == n - 2) put(rs, m, c, fixed(n, "rho-plus/D/family-1"));
          else put(rs, m, c, fixed(n - 2, "rho-plus/D/family-1"));
        }
      for (int i = 1; i < n; ++i) {
        const auto c = seg(i, n);
        if (i == 1) put(rs, m, c, fixed(n - 2, "rho-plus/D/family-2"));
        else if (i != n - 1) put(rs, m, c, fixed(i - 1, "rho-plus/D/family-2"));
        else put(rs, m, c, reduce(n - 2, seg(n - 2, n), "rho-plus/D/family-2"));
      }
      for (int i = 2; i < n - 1; ++i)
        for (int j = i + 1; j < n - 1; ++j) {
          auto c = seg(i, j - 1);
          add_range(c, j, n - 2, 2);
          add_range(c, n - 1, n, 1);
          put(rs, m, c, fixed(i - 1, "rho-plus/D/family-3"));
        }
      for (int j = 2; j < n - 2; ++j) {
        auto c = seg(1, j);
        add_range(c, j + 1, n - 2, 2);
        add_range(c, n - 1, n, 1);
        put(rs, m, c, fixed(j, "rho-plus/D/family-4"));
      }
      break;
    }
    case Family::F:
      put(rs, m, {1, 2, 3, 2}, dominant("rho-plus/F4/[1,2,3,2]"));
      put(rs, m, {1, 2, 2, 2}, one_reflection(3, {1, 2, 3, 2}, "rho-plus/F4/[1,2,2,2]"));
      break;
    case Family::G:
      put(rs, m, {2, 1}, dominant("rho-plus/G2/2beta1+beta2"));
      put(rs, m, {0, 1}, one_reflection(1, {2, 1}, "rho-plus/G2/beta2"));
      put(rs, m, {1, 0}, fixed(2, "rho-plus/G2"));
      put(rs, m, {1, 1}, fixed(1, "rho-plus/G2"));
      put(rs, m, {3, 1}, fixed(2, "rho-plus/G2"));
      break;
    default:
      break;
  }
  return m;
}

}  // namespace detail

/// The classifier for one root system. Holds the per-type family maps and,
/// for E and F4, the transcribed tables.
class AppendixClassifier {
 public:
  explicit AppendixClassifier(const RootSystem& rs, const TableSet* tables = &TableSet::builtin())
      : rs_(rs), tables_(tables) {
    minus_ = detail::minus_families(rs);
    plus_ = detail::plus_families(rs);
    if (needs_tables()) {
      const AppendixTableFile* f = tables ? tables->find(rs.type()) : nullptr;
      if (!f) throw std::invalid_argument("no appendix tables loaded for " + rs.type().name());
      load_table_routes(*f);
    }
    if (rs.type().family == Family::E && rs.rank() > 6) {
      sub_rs_ = std::make_unique<RootSystem>(SimpleType{Family::E, static_cast<int>(rs.rank()) - 1});
      sub_ = std::make_unique<AppendixClassifier>(*sub_rs_, tables);
    }
  }

  const RootSystem& root_system() const { return rs_; }

  RhoShiftVerdict classify(const Root& alpha, Shift shift) const {
    rs_.require_positive_root(alpha);
    return resolve(alpha, shift, route_for(alpha, shift), 0);
  }

  /// The route chosen by the case analysis, before any checking.
  Route route_for(const Root& alpha, Shift shift) const {
    return shift == Shift::minus ? minus_route(alpha) : plus_route(alpha);
  }

 private:
  bool needs_tables() const {
    return rs_.type().family == Family::E || rs_.type().family == Family::F;
  }

  void load_table_routes(const AppendixTableFile& f) {
    for (const AppendixTable& t : f.tables) {
      auto& rows = t.shift == Shift::minus ? minus_rows_ : plus_rows_;
      auto& red = t.shift == Shift::minus ? minus_red_ : plus_red_;
      const auto& list = f.rootlists.at(t.rootlist);
      for (const TableRow& row : t.rows)
        for (int j : row.js) rows[f.decode(list.at(static_cast<std::size_t>(j - 1)))].push_back(row.i);
      for (const TableReduction& r : t.reductions)
        red.emplace(f.decode(list.at(static_cast<std::size_t>(r.j - 1))), std::make_pair(r.i, f.target_coords(t, r)));
    }
  }

  Route minus_route(const Root& a) const {
    if (rs_.is_simple(a)) {
      Route r = detail::one_reflection(static_cast<int>(std::find(a.coords.begin(), a.coords.end(), 1) - a.coords.begin()) + 1,
                                       std::vector<int>(rs_.rank(), 0), "rho-minus/simple-root");
      return r;
    }
    if (detail::distinct_sum(a)) {
      if (auto i = detail::distinct_sum_minus_leaf(rs_, a))
        return detail::fixed(static_cast<int>(*i) + 1, "rho-minus/distinct-simple-roots");
      return Route{Route::Kind::none, 0, {}, "rho-minus/distinct-simple-roots/no-leaf", false};
    }
    if (auto it = minus_.find(a.coords); it != minus_.end()) return it->second;
    if (auto r = table_route(a, Shift::minus)) return *r;
    if (auto r = subsystem_route(a, Shift::minus)) return *r;
    return Route{Route::Kind::none, 0, {}, "rho-minus/uncovered", false};
  }

  Route plus_route(const Root& a) const {
    if (a == rs_.highest_root()) return detail::dominant("rho-plus/highest-root");
    const Family fam = rs_.type().family;
    if (fam == Family::A || fam == Family::E) {
      if (detail::distinct_sum(a)) {
        if (a.height() < static_cast<int>(rs_.rank())) {
          if (auto j = detail::distinct_sum_plus_extension(rs_, a))
            return detail::fixed(static_cast<int>(*j) + 1, "rho-plus/distinct-simple-roots");
        } else if (fam == Family::E) {
          return detail::fixed(4, "rho-plus/E/all-coordinates-one");
        }
      }
    }
    if (auto it = plus_.find(a.coords); it != plus_.end()) return it->second;
    if (auto r = table_route(a, Shift::plus)) return *r;
    if (auto r = subsystem_route(a, Shift::plus)) return *r;
    return Route{Route::Kind::none, 0, {}, "rho-plus/uncovered", false};
  }

  std::optional<Route> table_route(const Root& a, Shift s) const {
    const auto& rows = s == Shift::minus ? minus_rows_ : plus_rows_;
    const auto& red = s == Shift::minus ? minus_red_ : plus_red_;
    const std::string tag = std::string("rho-") + to_string(s) + "/" + rs_.type().name() + "/table";
    if (auto it = rows.find(a.coords); it != rows.end()) {
      Route r = detail::fixed(it->second.front(), tag);
      return r;
    }
    if (auto it = red.find(a.coords); it != red.end())
      return detail::reduce(it->second.first, it->second.second, tag + "/reduction");
    return std::nullopt;
  }

  /// E7/E8 roots with vanishing last coordinate are handled in E_{rank-1}.
  std::optional<Route> subsystem_route(const Root& a, Shift s) const {
    if (!sub_ || a.coords.back() != 0) return std::nullopt;
    const Root sa{std::vector<int>(a.coords.begin(), a.coords.end() - 1)};
    const std::string tag = std::string("rho-") + to_string(s) + "/" + rs_.type().name() + "/subsystem";
    if (s == Shift::plus && sa == sub_rs_->highest_root())
      return detail::fixed(static_cast<int>(rs_.rank()), tag + "/highest-root");
    Route r = sub_->route_for(sa, s);
    if (r.kind == Route::Kind::fixed || r.kind == Route::Kind::reduce) {
      if (!r.target.empty()) r.target.push_back(0);
      r.tag = tag + "[" + r.tag + "]";
      return r;
    }
    return std::nullopt;
  }

  RhoShiftVerdict resolve(const Root& alpha, Shift shift, const Route& route, int depth) const {
    RhoShiftVerdict v;
    v.shift = shift;
    v.alpha = alpha;
    v.route = route;
    const int sg = sign_of(shift);
    const Weight lam = rho_shift(rs_, alpha, sg);

    switch (route.kind) {
      case Route::Kind::fixed: {
        if (rs_.reflect(lam, route.simple) == lam) {
          v.status = VerdictStatus::NotRegular;
          v.witness = rs_.simple_root(route.simple);
          return v;
        }
        v.notes.push_back({"route-identity-failed", route.tag + ": s_" + std::to_string(route.simple + 1) +
                                                        " does not fix rho" + (sg < 0 ? "-" : "+") + alpha.str()});
        break;
      }
      case Route::Kind::reduce: {
        const Root target{route.target};
        const Weight image = rho_shift(rs_, target, sg);
        if (!rs_.is_positive_root(target) || !(rs_.reflect(lam, route.simple) == image)) {
          v.notes.push_back({"route-identity-failed", route.tag + ": s_" + std::to_string(route.simple + 1) +
                                                          " does not send " + alpha.str() + " to " + target.str()});
          break;
        }
        if (depth > 8) {
          v.notes.push_back({"route-depth", route.tag});
          break;
        }
        const RhoShiftVerdict t = resolve(target, shift, route_for(target, shift), depth + 1);
        if (t.status == VerdictStatus::NotRegular) {
          Root g = rs_.reflect(*t.witness, route.simple);
          if (g.negative()) g = -g;
          v.status = VerdictStatus::NotRegular;
          v.witness = g;
          return v;
        }
        if (t.status == VerdictStatus::RegularDominant) {
          v.status = VerdictStatus::RegularAfterOneReflection;
          v.simple = route.simple;
          if (!route.expects_regular)
            v.notes.push_back({"case-claim", route.tag + ": reduction target " + target.str() +
                                                  " is regular dominant, so rho" + (sg < 0 ? "-" : "+") +
                                                  alpha.str() + " is regular"});
          return v;
        }
        v.notes.push_back({"route-target-unresolved", route.tag + ": target " + target.str()});
        break;
      }
      case Route::Kind::dominant: {
        if (shift == Shift::plus && rs_.is_dominant(rs_.weight_of_root(alpha))) {
          v.status = VerdictStatus::RegularDominant;
          return v;
        }
        v.notes.push_back({"route-identity-failed", route.tag + ": " + alpha.str() + " is not dominant"});
        break;
      }
      case Route::Kind::one_reflection: {
        const Root target{route.target};
        const bool zero = std::all_of(target.coords.begin(), target.coords.end(), [](int c) { return c == 0; });
        const Weight image = zero ? rs_.rho() : rho_shift(rs_, target, +1);
        const bool target_ok = zero || (rs_.is_positive_root(target) && rs_.is_dominant(rs_.weight_of_root(target)));
        if (target_ok && rs_.reflect(lam, route.simple) == image) {
          v.status = VerdictStatus::RegularAfterOneReflection;
          v.simple = route.simple;
          return v;
        }
        v.notes.push_back({"route-identity-failed", route.tag + ": reflection does not reach a dominant target"});
        break;
      }
      case Route::Kind::none:
        v.notes.push_back({"case-gap", route.tag + ": " + alpha.str() + " is not covered by the case analysis"});
        break;
    }

    // Fallback: any simple reflection fixing the weight.
    for (std::size_t i = 0; i < rs_.rank(); ++i)
      if (rs_.reflect(lam, i) == lam) {
        v.status = VerdictStatus::NotRegular;
        v.witness = rs_.simple_root(i);
        v.notes.push_back({"fallback", "s_" + std::to_string(i + 1) + " fixes the weight"});
        return v;
      }
    v.status = VerdictStatus::Unresolved;
    return v;
  }

  const RootSystem& rs_;
  const TableSet* tables_;
  detail::RouteMap minus_, plus_;
  std::map<std::vector<int>, std::vector<int>> minus_rows_, plus_rows_;
  std::map<std::vector<int>, std::pair<int, std::vector<int>>> minus_red_, plus_red_;
  std::unique_ptr<RootSystem> sub_rs_;
  std::unique_ptr<AppendixClassifier> sub_;
};

inline RhoShiftVerdict classify_rho_minus(const RootSystem& rs, const Root& alpha,
                                          const TableSet* tables = &TableSet::builtin()) {
  return AppendixClassifier(rs, tables).classify(alpha, Shift::minus);
}

inline RhoShiftVerdict classify_rho_plus(const RootSystem& rs, const Root& alpha,
                                         const TableSet* tables = &TableSet::builtin()) {
  return AppendixClassifier(rs, tables).classify(alpha, Shift::plus);
}

// ---------------------------------------------------------------------------
// Table verification

struct TableFinding {
  std::string table;  // "<type>/<table name>"
  std::string kind;   // decode, row, reduction, coverage, rootlist
  int i = 0;
  int j = 0;
  bool ok = true;
  std::string detail;
};

/// Roots the root list of a table is expected to contain, computed directly.
inline std::vector<Root> expected_rootlist(const RootSystem& rs, const AppendixTable& t) {
  std::vector<Root> out;
  const Family fam = rs.type().family;
  for (const Root& r : rs.positive_roots()) {
    const bool big = !detail::distinct_sum(r);
    if (fam == Family::E) {
      if (big && (rs.rank() == 6 || r.coords.back() != 0)) out.push_back(r);
    } else if (fam == Family::F) {
      if (t.shift == Shift::minus) {
        if (big) out.push_back(r);
      } else if (!(r == rs.highest_root()) && r.coords != std::vector<int>{1, 2, 3, 2} &&
                 r.coords != std::vector<int>{1, 2, 2, 2}) {
        out.push_back(r);
      }
    }
  }
  return out;
}

inline std::vector<TableFinding> verify_table_file(const AppendixTableFile& f) {
  std::vector<TableFinding> out;
  RootSystem rs(f.type);
  for (const AppendixTable& t : f.tables) {
    const std::string name = f.type.name() + "/" + t.name;
    const auto& list = f.rootlists.at(t.rootlist);
    const int sg = sign_of(t.shift);

    std::vector<bool> valid(list.size());
    for (std::size_t k = 0; k < list.size(); ++k) {
      const Root r{f.decode(list[k])};
      valid[k] = rs.is_positive_root(r);
      out.push_back({name, "decode", 0, static_cast<int>(k + 1), valid[k],
                     "r(" + std::to_string(k + 1) + ") = " + Root{list[k]}.str() + " -> " + r.str()});
    }

    std::vector<int> assigned(list.size(), 0);
    for (const TableRow& row : t.rows)
      for (int j : row.js) {
        const std::size_t k = static_cast<std::size_t>(j - 1);
        ++assigned[k];
        TableFinding tf{name, "row", row.i, j, false, ""};
        if (!valid[k]) {
          tf.detail = "root does not decode";
          out.push_back(tf);
          continue;
        }
        const Root a{f.decode(list[k])};
        const std::size_t i = static_cast<std::size_t>(row.i - 1);
        bool eq = true;
        std::string eq_name = "fixed point only";
        if (rs.type().simply_laced()) {
          eq = t.shift == Shift::minus ? equality4_holds(rs, a, i) : equality5_holds(rs, a, i);
          eq_name = t.shift == Shift::minus ? "2n_i-1=sum" : "2n_i+1=sum";
        } else if (rs.type().family == Family::F && t.shift == Shift::minus) {
          eq = f4_minus_condition(a, i);
          eq_name = "F4 condition";
        }
        const Weight lam = rho_shift(rs, a, sg);
        const bool fixed = rs.reflect(lam, i) == lam;
        tf.ok = eq && fixed;
        std::ostringstream d;
        d << eq_name << (eq ? " holds" : " fails") << ", s_" << row.i << (fixed ? " fixes" : " does not fix")
          << " rho" << (sg < 0 ? "-" : "+") << "r(" << j << "), pairing " << rs.coroot_pairing(
                 rs.weight_of_root(a), rs.simple_root(i)).get_str();
        if (!tf.ok) {
          std::vector<int> better;
          for (std::size_t q = 0; q < rs.rank(); ++q)
            if (rs.reflect(lam, q) == lam) better.push_back(static_cast<int>(q + 1));
          if (!better.empty()) d << "; fixed by s_i for i in {" << join(better) << "}";
        }
        tf.detail = d.str();
        out.push_back(tf);
      }

    for (const TableReduction& r : t.reductions) {
      const std::size_t k = static_cast<std::size_t>(r.j - 1);
      ++assigned[k];
      TableFinding tf{name, "reduction", r.i, r.j, false, ""};
      const Root a{f.decode(list[k])};
      const Root target{f.target_coords(t, r)};
      if (!valid[k] || !rs.is_positive_root(target)) {
        tf.detail = "root or target does not decode";
      } else {
        tf.ok = rs.reflect(rho_shift(rs, a, sg), static_cast<std::size_t>(r.i - 1)) == rho_shift(rs, target, sg);
        tf.detail = "s_" + std::to_string(r.i) + "(rho" + (sg < 0 ? "-" : "+") + a.str() + ") = rho" +
                    (sg < 0 ? "-" : "+") + target.str() + (tf.ok ? "" : " fails");
      }
      out.push_back(tf);
    }

    // Coverage: every listed root is handled, except the highest root on the plus side.
    for (std::size_t k = 0; k < list.size(); ++k) {
      const Root a{f.decode(list[k])};
      if (t.shift == Shift::plus && a == rs.highest_root()) continue;
      if (assigned[k] == 0)
        out.push_back({name, "coverage", 0, static_cast<int>(k + 1), false,
                       "r(" + std::to_string(k + 1) + ") is not assigned to any row"});
      else if (assigned[k] > 1)
        out.push_back({name, "coverage", 0, static_cast<int>(k + 1), true,
                       "r(" + std::to_string(k + 1) + ") is assigned " + std::to_string(assigned[k]) + " times"});
    }

    // The root list matches the set it is meant to describe.
    std::set<std::vector<int>> listed, expected;
    for (const auto& l : list) listed.insert(f.decode(l));
    for (const auto& r : expected_rootlist(rs, t)) expected.insert(r.coords);
    out.push_back({name, "rootlist", 0, 0, listed == expected,
                   std::to_string(listed.size()) + " listed, " + std::to_string(expected.size()) + " expected"});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Whole-type verification

struct AppendixDiscrepancy {
  std::string kind;  // verdict, count, case-claim, table, unresolved
  std::string detail;
};

struct AppendixReport {
  SimpleType type;
  std::vector<RhoShiftVerdict> minus, plus;
  std::size_t agreements = 0;
  std::size_t total = 0;
  std::vector<Root> plus_regular_non_biggest;
  std::optional<std::size_t> expected_plus_regular;
  std::vector<TableFinding> table_findings;
  std::vector<AppendixDiscrepancy> discrepancies;
  std::vector<AppendixDiscrepancy> notes;  // case gaps and fallbacks (informational)

  bool classifier_agrees() const { return agreements == total; }
  bool count_matches() const {
    return expected_plus_regular && plus_regular_non_biggest.size() == *expected_plus_regular;
  }
  bool tables_ok() const {
    return std::all_of(table_findings.begin(), table_findings.end(), [](const TableFinding& f) { return f.ok; });
  }
};

/// Number of non-highest positive roots alpha with rho + alpha regular, as
/// stated by the case analysis for each family.
inline std::size_t expected_plus_regular_count(Family f) {
  switch (f) {
    case Family::A:
    case Family::E: return 0;
    case Family::B:
    case Family::F:
    case Family::G: return 2;
    case Family::C:
    case Family::D: return 1;
  }
  return 0;
}

inline AppendixReport verify_appendix(const RootSystem& rs, const TableSet* tables = &TableSet::builtin()) {
  AppendixReport rep;
  rep.type = rs.type();
  AppendixClassifier cls(rs, tables);
  for (Shift s : {Shift::minus, Shift::plus})
    for (const Root& a : rs.positive_roots()) {
      RhoShiftVerdict v = cls.classify(a, s);
      const OracleVerdict o = oracle_verdict(rs, rho_shift(rs, a, sign_of(s)));
      std::string why;
      ++rep.total;
      if (verdict_matches_oracle(rs, v, o, &why)) ++rep.agreements;
      else rep.discrepancies.push_back({"verdict", std::string("rho-") + to_string(s) + " " + a.str() + " " +
                                                       to_string(v.status) + " via " + v.route.tag + ": " + why});
      if (v.status == VerdictStatus::Unresolved)
        rep.discrepancies.push_back({"unresolved", std::string("rho-") + to_string(s) + " " + a.str()});
      for (const Note& n : v.notes) {
        const std::string d = std::string("rho-") + to_string(s) + " " + a.str() + ": " + n.detail;
        if (n.kind == "case-claim" || n.kind == "route-identity-failed") rep.discrepancies.push_back({n.kind, d});
        else rep.notes.push_back({n.kind, d});
      }
      if (s == Shift::plus && o.regular && !(a == rs.highest_root())) rep.plus_regular_non_biggest.push_back(a);
      (s == Shift::minus ? rep.minus : rep.plus).push_back(std::move(v));
    }

  rep.expected_plus_regular = expected_plus_regular_count(rs.type().family);
  if (!rep.count_matches()) {
    std::vector<std::string> roots;
    for (const auto& r : rep.plus_regular_non_biggest) roots.push_back(r.str());
    rep.discrepancies.push_back({"count", rs.type().name() + ": rho+alpha regular for " +
                                              std::to_string(rep.plus_regular_non_biggest.size()) +
                                              " non-highest roots {" + join(roots, " ") + "}, expected " +
                                              std::to_string(*rep.expected_plus_regular)});
  }

  if (tables)
    if (const AppendixTableFile* f = tables->find(rs.type())) {
      rep.table_findings = verify_table_file(*f);
      for (const auto& tf : rep.table_findings)
        if (!tf.ok)
          rep.discrepancies.push_back({"table", tf.table + " " + tf.kind + " i=" + std::to_string(tf.i) +
                                                    " j=" + std::to_string(tf.j) + ": " + tf.detail});
    }
  return rep;
}

}  // namespace nullcone

#endif  // NULLCONE_APPENDIX_HPP
