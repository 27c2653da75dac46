#include "groupwalk/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "groupwalk/omp_compat.hpp"

namespace groupwalk {

Permutation Permutation::identity(int n) {
  Permutation p;
  p.image.resize(n);
  std::iota(p.image.begin(), p.image.end(), 0);
  return p;
}

bool Permutation::is_bijection() const {
  const int n = size();
  std::vector<bool> seen(n, false);
  for (int v : image) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Permutation Permutation::compose(const Permutation& other) const {
  Permutation r;
  r.image.resize(other.image.size());
  for (std::size_t j = 0; j < other.image.size(); ++j) {
    r.image[j] = image[other.image[j]];
  }
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.image.resize(image.size());
  for (std::size_t j = 0; j < image.size(); ++j) {
    r.image[image[j]] = static_cast<int>(j);
  }
  return r;
}

namespace {

std::string elem(int i) { return std::to_string(i + 1); }

void check_entries_in_range(const CayleyTable& t) {
  const std::size_t n = static_cast<std::size_t>(t.n);
  if (t.n <= 0 || t.table.size() != n * n) {
    throw InvalidParameterError("table is not n x n");
  }
  for (auto v : t.table) {
    if (v < 0 || v >= t.n) {
      throw InvalidParameterError("table entry out of range [1," + std::to_string(t.n) + "]");
    }
  }
}

// Index e whose row and column are both the identity map; -1 if none.
// A two-sided identity is unique when it exists.
int find_identity(const CayleyTable& t) {
  for (int e = 0; e < t.n; ++e) {
    bool ok = true;
    for (int j = 0; j < t.n && ok; ++j) {
      if (t.at(e, j) != j || t.at(j, e) != j) ok = false;
    }
    if (ok) return e;
  }
  return -1;
}

std::optional<std::array<int, 3>> associativity_witness_parallel(const CayleyTable& t) {
  const int n = t.n;
  std::array<int, 3> best{n, n, n};
  bool found = false;
#pragma omp parallel
  {
    std::array<int, 3> local{n, n, n};
    bool local_found = false;
// Static schedule gives each thread ascending i, so the first hit per
// thread is that thread's lexicographic minimum.
#pragma omp for schedule(static)
    for (int i = 0; i < n; ++i) {
      if (local_found) continue;
      for (int j = 0; j < n && !local_found; ++j) {
        for (int k = 0; k < n; ++k) {
          if (t.at(t.at(i, j), k) != t.at(i, t.at(j, k))) {
            local = {i, j, k};
            local_found = true;
            break;
          }
        }
      }
    }
#pragma omp critical
    {
      if (local_found && (!found || local < best)) {
        best = local;
        found = true;
      }
    }
  }
  if (!found) return std::nullopt;
  return best;
}

}  // namespace

namespace reference {

std::optional<std::array<int, 3>> associativity_witness(const CayleyTable& t) {
  for (int i = 0; i < t.n; ++i) {
    for (int j = 0; j < t.n; ++j) {
      for (int k = 0; k < t.n; ++k) {
        if (t.at(t.at(i, j), k) != t.at(i, t.at(j, k))) {
          return std::array<int, 3>{i, j, k};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace reference

GroupValidationReport validate_group(const CayleyTable& t, const ValidateOptions& opts) {
  check_entries_in_range(t);
  const int n = t.n;
  GroupValidationReport report;

  // Latin square: first duplicate in any row, then in any column.
  bool latin_ok = true;
  {
    std::vector<int> first_at(n);
    for (int i = 0; i < n && latin_ok; ++i) {
      std::fill(first_at.begin(), first_at.end(), -1);
      for (int j = 0; j < n; ++j) {
        const int v = t.at(i, j);
        if (first_at[v] >= 0) {
          report.violations.push_back(
              {"latin_row",
               {i, first_at[v], j},
               "row " + elem(i) + ": entry " + elem(v) + " repeats at columns " +
                   elem(first_at[v]) + " and " + elem(j)});
          latin_ok = false;
          break;
        }
        first_at[v] = j;
      }
    }
    for (int j = 0; j < n && latin_ok; ++j) {
      std::fill(first_at.begin(), first_at.end(), -1);
      for (int i = 0; i < n; ++i) {
        const int v = t.at(i, j);
        if (first_at[v] >= 0) {
          report.violations.push_back(
              {"latin_col",
               {j, first_at[v], i},
               "column " + elem(j) + ": entry " + elem(v) + " repeats at rows " +
                   elem(first_at[v]) + " and " + elem(i)});
          latin_ok = false;
          break;
        }
        first_at[v] = i;
      }
    }
  }

  const int e = find_identity(t);
  if (e < 0) {
    report.violations.push_back({"identity", {}, "no two-sided identity element"});
  } else {
    for (int i = 0; i < n; ++i) {
      bool has_inverse = false;
      for (int j = 0; j < n; ++j) {
        if (t.at(i, j) == e && t.at(j, i) == e) {
          has_inverse = true;
          break;
        }
      }
      if (!has_inverse) {
        report.violations.push_back(
            {"inverse", {i}, "element " + elem(i) + " has no two-sided inverse"});
        break;
      }
    }
  }

  if (n <= opts.assoc_order_limit || opts.force_assoc) {
    if (auto w = associativity_witness_parallel(t)) {
      const auto [i, j, k] = *w;
      report.violations.push_back(
          {"associativity",
           {i, j, k},
           "(" + elem(i) + "*" + elem(j) + ")*" + elem(k) + " != " + elem(i) + "*(" +
               elem(j) + "*" + elem(k) + ")"});
    }
  } else {
    report.associativity_checked = false;
  }

  report.is_group = report.violations.empty();
  return report;
}

GroupValidationError::GroupValidationError(GroupValidationReport r)
    : Error([&r] {
        std::string msg = "not a group:";
        for (const auto& v : r.violations) msg += " [" + v.axiom + "] " + v.detail + ";";
        return msg;
      }()),
      report(std::move(r)) {}

namespace {

void check_order_cap(long order, const std::string& what) {
  if (order > FiniteGroup::kMaxOrder) {
    throw InvalidParameterError(what + " exceeds the order cap " +
                                std::to_string(FiniteGroup::kMaxOrder));
  }
}

}  // namespace

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw InvalidParameterError("cyclic group order must be >= 1");
  check_order_cap(n, "cyclic group of order " + std::to_string(n));
  CayleyTable t;
  t.n = n;
  t.table.resize(static_cast<std::size_t>(n) * n);
  t.names.resize(n);
  for (int i = 0; i < n; ++i) {
    t.names[i] = std::to_string(i);
    for (int j = 0; j < n; ++j) t.set(i, j, (i + j) % n);
  }
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[i] = (n - i) % n;
  return FiniteGroup(std::move(t), 0, std::move(inv));
}

FiniteGroup FiniteGroup::dihedral(int m) {
  if (m < 1) throw InvalidParameterError("dihedral parameter must be >= 1");
  check_order_cap(2L * m, "dihedral group of order " + std::to_string(2L * m));
  const int n = 2 * m;
  CayleyTable t;
  t.n = n;
  t.table.resize(static_cast<std::size_t>(n) * n);
  t.names.resize(n);
  // Elements: r^a for a in [0, m), then s*r^a. Relations r^m = s^2 = e,
  // s*r = r^-1*s, hence r^a * s*r^b = s*r^(b-a) and s*r^a * s*r^b = r^(b-a).
  for (int a = 0; a < m; ++a) {
    t.names[a] = a == 0 ? "e" : (a == 1 ? "r" : "r" + std::to_string(a));
    t.names[m + a] = a == 0 ? "s" : (a == 1 ? "sr" : "sr" + std::to_string(a));
    for (int b = 0; b < m; ++b) {
      t.set(a, b, (a + b) % m);                  // r^a * r^b
      t.set(a, m + b, m + (((b - a) % m) + m) % m);  // r^a * s r^b
      t.set(m + a, b, m + (a + b) % m);          // s r^a * r^b
      t.set(m + a, m + b, (((b - a) % m) + m) % m);  // s r^a * s r^b
    }
  }
  std::vector<int> inv(n);
  for (int a = 0; a < m; ++a) {
    inv[a] = (m - a) % m;  // rotations
    inv[m + a] = m + a;    // reflections are involutions
  }
  return FiniteGroup(std::move(t), 0, std::move(inv));
}

namespace {

// Lexicographic rank of a permutation of [0, k) via its Lehmer code.
int lehmer_rank(const std::vector<int>& p, const std::vector<int>& factorial) {
  const int k = static_cast<int>(p.size());
  int rank = 0;
  for (int j = 0; j < k; ++j) {
    int smaller_later = 0;
    for (int l = j + 1; l < k; ++l) {
      if (p[l] < p[j]) ++smaller_later;
    }
    rank += smaller_later * factorial[k - 1 - j];
  }
  return rank;
}

}  // namespace

FiniteGroup FiniteGroup::symmetric(int k) {
  if (k < 1 || k > 8) {
    throw InvalidParameterError("symmetric group parameter must be in [1, 8]");
  }
  std::vector<int> factorial(k + 1, 1);
  for (int i = 1; i <= k; ++i) factorial[i] = factorial[i - 1] * i;
  const int n = factorial[k];

  std::vector<std::vector<int>> perms;
  perms.reserve(n);
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  CayleyTable t;
  t.n = n;
  t.table.resize(static_cast<std::size_t>(n) * n);
  t.names.resize(n);
  for (int i = 0; i < n; ++i) {
    // One-line notation, 1-based, e.g. "231" for the cycle (1 2 3).
    std::string name;
    for (int v : perms[i]) name += std::to_string(v + 1);
    t.names[i] = name;
  }
  std::vector<int> composed(k);
#pragma omp parallel for schedule(static) firstprivate(composed)
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int x = 0; x < k; ++x) composed[x] = perms[i][perms[j][x]];
      t.table[static_cast<std::size_t>(i) * n + j] =
          static_cast<std::int32_t>(lehmer_rank(composed, factorial));
    }
  }
  std::vector<int> inv(n);
  std::vector<int> q(k);
  for (int i = 0; i < n; ++i) {
    for (int x = 0; x < k; ++x) q[perms[i][x]] = x;
    inv[i] = lehmer_rank(q, factorial);
  }
  return FiniteGroup(std::move(t), 0, std::move(inv));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const long order = static_cast<long>(g.order()) * h.order();
  check_order_cap(order, "direct product of order " + std::to_string(order));
  const int gn = g.order(), hn = h.order(), n = static_cast<int>(order);
  CayleyTable t;
  t.n = n;
  t.table.resize(static_cast<std::size_t>(n) * n);
  t.names.resize(n);
  for (int a = 0; a < gn; ++a) {
    for (int b = 0; b < hn; ++b) {
      t.names[a * hn + b] = g.name(a) + "." + h.name(b);
    }
  }
  for (int a1 = 0; a1 < gn; ++a1) {
    for (int b1 = 0; b1 < hn; ++b1) {
      const int i = a1 * hn + b1;
      for (int a2 = 0; a2 < gn; ++a2) {
        const int ga = g.table().at(a1, a2);
        for (int b2 = 0; b2 < hn; ++b2) {
          t.set(i, a2 * hn + b2, ga * hn + h.table().at(b1, b2));
        }
      }
    }
  }
  const int e = g.identity() * hn + h.identity();
  std::vector<int> inv(n);
  for (int a = 0; a < gn; ++a) {
    for (int b = 0; b < hn; ++b) {
      inv[a * hn + b] = g.inverse(a) * hn + h.inverse(b);
    }
  }
  return FiniteGroup(std::move(t), e, std::move(inv));
}

FiniteGroup FiniteGroup::from_table(CayleyTable t, const ValidateOptions& opts) {
  check_order_cap(t.n, "table of order " + std::to_string(t.n));
  auto report = validate_group(t, opts);
  if (!report.is_group) throw GroupValidationError(std::move(report));
  const int e = find_identity(t);
  if (e < 0) throw StructureError("validated table has no identity");  // unreachable
  std::vector<int> inv(t.n, -1);
  for (int i = 0; i < t.n; ++i) {
    for (int j = 0; j < t.n; ++j) {
      if (t.at(i, j) == e && t.at(j, i) == e) {
        inv[i] = j;
        break;
      }
    }
  }
  return FiniteGroup(std::move(t), e, std::move(inv));
}

Permutation FiniteGroup::left_translation(int k) const {
  check_index(k);
  Permutation p;
  p.image.resize(t_.n);
  for (int j = 0; j < t_.n; ++j) p.image[j] = t_.at(k, j);
  return p;
}

std::string FiniteGroup::name(int i) const {
  check_index(i);
  if (!t_.names.empty() && !t_.names[i].empty()) return t_.names[i];
  return "g" + std::to_string(i + 1);
}

CayleyTable parse_cayley_table_raw(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  CayleyTable t;
  std::vector<std::string> names;
  int names_line = 0;
  int rows_read = 0;
  bool have_n = false;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      std::istringstream cs(line.substr(first + 1));
      std::string tag;
      cs >> tag;
      if (tag == "names:") {
        std::string name;
        while (cs >> name) names.push_back(name);
        names_line = lineno;
      }
      continue;
    }
    std::istringstream ls(line);
    if (!have_n) {
      long n = 0;
      if (!(ls >> n)) throw ParseError(lineno, "expected the group order");
      std::string extra;
      if (ls >> extra) throw ParseError(lineno, "unexpected token '" + extra + "' after the order");
      if (n < 1) throw ParseError(lineno, "order must be >= 1");
      if (n > FiniteGroup::kMaxOrder) {
        throw ParseError(lineno, "order " + std::to_string(n) + " exceeds the cap " +
                                     std::to_string(FiniteGroup::kMaxOrder));
      }
      t.n = static_cast<int>(n);
      t.table.assign(static_cast<std::size_t>(t.n) * t.n, 0);
      have_n = true;
      continue;
    }
    if (rows_read == t.n) throw ParseError(lineno, "unexpected data after the table");
    for (int j = 0; j < t.n; ++j) {
      long v = 0;
      if (!(ls >> v)) {
        throw ParseError(lineno, "row " + std::to_string(rows_read + 1) + " has fewer than " +
                                     std::to_string(t.n) + " entries");
      }
      if (v < 1 || v > t.n) {
        throw ParseError(lineno, "entry " + std::to_string(v) + " out of range [1," +
                                     std::to_string(t.n) + "]");
      }
      t.set(rows_read, j, static_cast<int>(v) - 1);
    }
    std::string extra;
    if (ls >> extra) throw ParseError(lineno, "unexpected token '" + extra + "' after row");
    ++rows_read;
  }
  if (!have_n) throw ParseError(lineno, "missing group order");
  if (rows_read != t.n) {
    throw ParseError(lineno, "expected " + std::to_string(t.n) + " table rows, found " +
                                 std::to_string(rows_read));
  }
  if (!names.empty()) {
    if (static_cast<int>(names.size()) != t.n) {
      throw ParseError(names_line, "names line has " + std::to_string(names.size()) +
                                       " entries, expected " + std::to_string(t.n));
    }
    t.names = std::move(names);
  }
  return t;
}

FiniteGroup parse_cayley_table(const std::string& text, const ValidateOptions& opts) {
  return FiniteGroup::from_table(parse_cayley_table_raw(text), opts);
}

std::string serialize_cayley_table(const FiniteGroup& g) {
  const CayleyTable& t = g.table();
  std::string out = std::to_string(t.n);
  out += '\n';
  for (int i = 0; i < t.n; ++i) {
    for (int j = 0; j < t.n; ++j) {
      if (j) out += ' ';
      out += std::to_string(t.at(i, j) + 1);
    }
    out += '\n';
  }
  if (!t.names.empty()) {
    out += "# names:";
    for (const auto& name : t.names) {
      out += ' ';
      out += name;
    }
    out += '\n';
  }
  return out;
}

bool same_group(const FiniteGroup& a, const FiniteGroup& b) {
  return &a == &b || a == b;
}

int element_order(const FiniteGroup& g, int k) {
  int x = k;
  int order = 1;
  while (x != g.identity()) {
    x = g.mul(x, k);
    ++order;
  }
  return order;
}

}  // namespace groupwalk
