#include "qgal/fingrp.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qgal {

// ---------------------------------------------------------------------------
// Gaussian rationals
// ---------------------------------------------------------------------------

GaussQ& GaussQ::operator+=(const GaussQ& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussQ& GaussQ::operator-=(const GaussQ& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussQ GaussQ::operator*(const GaussQ& o) const {
  return GaussQ(re * o.re - im * o.im, re * o.im + im * o.re);
}

GaussQ GaussQ::inverse() const {
  Rat n = re * re + im * im;
  if (qgal::is_zero(n))
    throw std::domain_error("inverse of zero Gaussian rational");
  return GaussQ(re / n, -im / n);
}

std::string GaussQ::to_string() const {
  if (im == 0) return qgal::to_string(re);
  std::string imag;
  Rat ai = abs(im);
  imag = (ai == 1) ? "i" : qgal::to_string(ai) + "*i";
  if (re == 0) return (im < 0 ? "-" : "") + imag;
  return qgal::to_string(re) + (im < 0 ? " - " : " + ") + imag;
}

// ---------------------------------------------------------------------------
// FiniteGroup
// ---------------------------------------------------------------------------

FiniteGroup FiniteGroup::from_table(std::string name,
                                    std::vector<std::vector<int>> table,
                                    std::vector<std::string> element_names) {
  FiniteGroup g;
  g.name_ = std::move(name);
  g.table_ = std::move(table);
  g.names_ = std::move(element_names);
  const int n = g.size();
  if (n == 0) throw std::invalid_argument("empty group table");
  if (static_cast<int>(g.names_.size()) != n)
    throw std::invalid_argument("element name count does not match order");

  // Locate the two-sided identity.
  g.identity_ = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      ok = g.mul(e, a) == a && g.mul(a, e) == a;
    if (ok) {
      g.identity_ = e;
      break;
    }
  }
  if (g.identity_ < 0)
    throw std::invalid_argument("group table has no identity");

  g.inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (g.mul(a, b) == g.identity_ && g.mul(b, a) == g.identity_) {
        g.inverse_[a] = b;
        break;
      }
    }
    if (g.inverse_[a] < 0)
      throw std::invalid_argument("group element without inverse: " +
                                  g.names_[a]);
  }
  g.validate();
  return g;
}

void FiniteGroup::validate() const {
  const int n = size();
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table_[a].size()) != n)
      throw std::invalid_argument("group table is not square");
    for (int b = 0; b < n; ++b) {
      int c = table_[a][b];
      if (c < 0 || c >= n)
        throw std::invalid_argument("group table entry out of range");
    }
  }
  // Each row and column is a permutation (cancellation).
  for (int a = 0; a < n; ++a) {
    std::vector<bool> row(n, false), col(n, false);
    for (int b = 0; b < n; ++b) {
      if (row[table_[a][b]] || col[table_[b][a]])
        throw std::invalid_argument("group table violates cancellation");
      row[table_[a][b]] = col[table_[b][a]] = true;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw std::invalid_argument("group table is not associative");
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 2 || n > 12)
    throw std::invalid_argument("cyclic group order must lie in 2..12");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    names[a] = std::to_string(a);
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return from_table("Z" + std::to_string(n), std::move(t), std::move(names));
}

FiniteGroup FiniteGroup::symmetric3() {
  // One-line permutations of {1,2,3} in lexicographic order.
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p = {1, 2, 3};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int n = static_cast<int>(perms.size());
  auto index_of = [&](const std::array<int, 3>& q) {
    for (int k = 0; k < n; ++k)
      if (perms[k] == q) return k;
    throw std::logic_error("permutation not found");
  };
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    names[a] = std::to_string(perms[a][0]) + std::to_string(perms[a][1]) +
               std::to_string(perms[a][2]);
    for (int b = 0; b < n; ++b) {
      std::array<int, 3> c;  // (a o b)(x) = a(b(x))
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x] - 1];
      t[a][b] = index_of(c);
    }
  }
  return from_table("S3", std::move(t), std::move(names));
}

FiniteGroup FiniteGroup::dihedral4() {
  // Elements s^a r^b with a in {0,1}, b in {0,..,3}; index = 4a + b.
  // Relations: r^4 = s^2 = e and r s = s r^{-1}.
  auto idx = [](int a, int b) { return 4 * a + ((b % 4) + 4) % 4; };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 4; ++d) {
          int bp = c ? -b : b;  // move r^b across s^c
          t[idx(a, b)][idx(c, d)] = idx((a + c) % 2, bp + d);
        }
  std::vector<std::string> names = {"e",  "r",  "r2",  "r3",
                                    "s",  "sr", "sr2", "sr3"};
  return from_table("D4", std::move(t), std::move(names));
}

FiniteGroup FiniteGroup::quaternion8() {
  // Encode +-1, +-i, +-j, +-k as (axis, sign): index = 2*axis + (sign < 0).
  auto axis_mul = [](int a, int b, int& sign) -> int {
    if (a == 0) return b;
    if (b == 0) return a;
    if (a == b) {
      sign = -sign;
      return 0;
    }
    // i*j = k, j*k = i, k*i = j; reversed order flips the sign.
    static const int next[4] = {0, 2, 3, 1};
    if (next[a] == b) return 6 - a - b;
    sign = -sign;
    return 6 - a - b;
  };
  auto idx = [](int axis, int sign) { return 2 * axis + (sign < 0 ? 1 : 0); };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int p = 0; p < 8; ++p)
    for (int q = 0; q < 8; ++q) {
      int sign = ((p % 2) ? -1 : 1) * ((q % 2) ? -1 : 1);
      int axis = axis_mul(p / 2, q / 2, sign);
      t[p][q] = idx(axis, sign);
    }
  std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return from_table("Q8", std::move(t), std::move(names));
}

FiniteGroup FiniteGroup::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open group file: " + path);
  int n = 0;
  if (!(in >> n) || n <= 0)
    throw std::invalid_argument("group file must start with a positive order");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    names[a] = std::to_string(a + 1);
    for (int b = 0; b < n; ++b) {
      int v = 0;
      if (!(in >> v))
        throw std::invalid_argument("group file ended before the table did");
      if (v < 1 || v > n)
        throw std::invalid_argument("group file entry out of range: " +
                                    std::to_string(v));
      t[a][b] = v - 1;  // table entries are 1-based in the file
    }
  }
  return from_table(path, std::move(t), std::move(names));
}

std::vector<int> subgroup_closure(const FiniteGroup& g,
                                  const std::vector<int>& gens) {
  std::set<int> out = {g.identity()};
  std::deque<int> work(out.begin(), out.end());
  for (int x : gens)
    if (out.insert(x).second) work.push_back(x);
  while (!work.empty()) {
    int a = work.front();
    work.pop_front();
    for (int b : std::vector<int>(out.begin(), out.end())) {
      for (int c : {g.mul(a, b), g.mul(b, a)})
        if (out.insert(c).second) work.push_back(c);
    }
  }
  return std::vector<int>(out.begin(), out.end());
}

std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g) {
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> work;
  std::vector<int> trivial{g.identity()};
  found.insert(trivial);
  work.push_back(trivial);
  // Every subgroup arises from a smaller one by adjoining one element, so
  // saturating single-element extensions enumerates them all.
  while (!work.empty()) {
    std::vector<int> h = std::move(work.back());
    work.pop_back();
    for (int x = 0; x < g.size(); ++x) {
      if (std::binary_search(h.begin(), h.end(), x)) continue;
      std::vector<int> gens = h;
      gens.push_back(x);
      std::vector<int> c = subgroup_closure(g, gens);
      if (found.insert(c).second) work.push_back(c);
    }
  }
  std::vector<std::vector<int>> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

CosetSpace right_cosets(const FiniteGroup& g, const std::vector<int>& k) {
  CosetSpace cs;
  cs.subgroup = k;
  std::sort(cs.subgroup.begin(), cs.subgroup.end());
  // Sanity: K must be a subgroup.
  if (subgroup_closure(g, cs.subgroup) != cs.subgroup)
    throw std::invalid_argument("coset base is not a subgroup");
  cs.coset_index.assign(g.size(), -1);
  for (int x = 0; x < g.size(); ++x) {
    if (cs.coset_index[x] >= 0) continue;
    int j = static_cast<int>(cs.reps.size());
    cs.reps.push_back(x);  // ascending scan makes x the smallest member
    for (int h : cs.subgroup) cs.coset_index[g.mul(h, x)] = j;
  }
  return cs;
}

// ---------------------------------------------------------------------------
// Matrices over the Gaussian rationals
// ---------------------------------------------------------------------------

Matrix identity_matrix(int n) {
  Matrix m(n, std::vector<GaussQ>(n));
  for (int i = 0; i < n; ++i) m[i][i] = GaussQ(Rat(1));
  return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  const int n = static_cast<int>(a.size());
  const int k = static_cast<int>(b.size());
  if (n == 0 || k == 0 || static_cast<int>(a[0].size()) != k)
    throw std::invalid_argument("matrix dimension mismatch");
  const int m = static_cast<int>(b[0].size());
  Matrix c(n, std::vector<GaussQ>(m));
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (int j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

GaussQ mat_trace(const Matrix& a) {
  GaussQ t;
  for (size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

bool mat_eq(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

static Matrix conj_transpose(const Matrix& a) {
  if (a.empty()) return a;
  Matrix c(a[0].size(), std::vector<GaussQ>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) c[j][i] = a[i][j].conj();
  return c;
}

int nullspace_dim(Matrix m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (!m[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    GaussQ inv = m[rank][col].inverse();
    for (int c = col; c < cols; ++c) m[rank][c] = m[rank][c] * inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      GaussQ f = m[r][col];
      for (int c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return cols - rank;
}

// ---------------------------------------------------------------------------
// Representations and characters
// ---------------------------------------------------------------------------

FiniteRep::FiniteRep(const FiniteGroup& g, std::vector<int> domain, int dim,
                     std::map<int, Matrix> mats)
    : group_(&g), domain_(std::move(domain)), dim_(dim),
      mats_(std::move(mats)) {
  if (dim_ <= 0) throw std::invalid_argument("representation dimension");
  if (!std::is_sorted(domain_.begin(), domain_.end()))
    throw std::invalid_argument("representation domain must be sorted");
  if (subgroup_closure(g, domain_) != domain_)
    throw std::invalid_argument("representation domain is not a subgroup");
  if (mats_.size() != domain_.size())
    throw std::invalid_argument("one matrix per domain element required");
  for (int a : domain_) {
    auto it = mats_.find(a);
    if (it == mats_.end())
      throw std::invalid_argument("missing matrix for a domain element");
    const Matrix& m = it->second;
    if (static_cast<int>(m.size()) != dim_)
      throw std::invalid_argument("matrix size mismatch");
    for (const auto& row : m)
      if (static_cast<int>(row.size()) != dim_)
        throw std::invalid_argument("matrix size mismatch");
  }
  if (!mat_eq(mats_.at(g.identity()), identity_matrix(dim_)))
    throw std::invalid_argument("identity does not act as the unit matrix");
  for (int a : domain_)
    for (int b : domain_)
      if (!mat_eq(mat_mul(mats_.at(a), mats_.at(b)), mats_.at(g.mul(a, b))))
        throw std::invalid_argument(
            "matrices do not respect the group multiplication");
}

GaussQ char_inner(const GroupChar& a, const GroupChar& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("character domains differ");
  GaussQ s;
  for (const auto& [g, va] : a) {
    auto it = b.find(g);
    if (it == b.end())
      throw std::invalid_argument("character domains differ");
    s += va * it->second.conj();
  }
  Rat inv = rat(1, static_cast<long>(a.size()));
  return GaussQ(s.re * inv, s.im * inv);
}

GroupChar rep_character(const FiniteRep& rep) {
  GroupChar chi;
  for (int a : rep.domain()) chi[a] = mat_trace(rep.at(a));
  return chi;
}

GroupChar restrict_char(const GroupChar& chi, const std::vector<int>& k) {
  GroupChar out;
  for (int a : k) {
    auto it = chi.find(a);
    if (it == chi.end())
      throw std::invalid_argument("character restriction leaves the domain");
    out[a] = it->second;
  }
  return out;
}

GroupChar induce_character(const FiniteGroup& g, const CosetSpace& cs,
                           const GroupChar& chi) {
  GroupChar out;
  for (int x = 0; x < g.size(); ++x) {
    GaussQ v;
    for (int r : cs.reps) {
      int h = g.mul(g.mul(r, x), g.inverse(r));
      auto it = chi.find(h);
      if (it != chi.end()) v += it->second;
    }
    out[x] = v;
  }
  return out;
}

std::vector<GroupChar> one_dim_characters(const FiniteGroup& g,
                                          const std::vector<int>& k) {
  std::vector<int> sub = k;
  std::sort(sub.begin(), sub.end());
  if (subgroup_closure(g, sub) != sub)
    throw std::invalid_argument("character domain is not a subgroup");

  // Greedy generating sequence.
  std::vector<int> gens;
  std::vector<int> have = {g.identity()};
  for (int x : sub) {
    if (std::binary_search(have.begin(), have.end(), x)) continue;
    gens.push_back(x);
    have = subgroup_closure(g, gens);
  }

  const GaussQ roots[4] = {GaussQ(Rat(1)), GaussQ::i(), GaussQ(Rat(-1)),
                           GaussQ(Rat(0), Rat(-1))};
  std::vector<GroupChar> out;
  const int ng = static_cast<int>(gens.size());
  long total = 1;
  for (int t = 0; t < ng; ++t) total *= 4;
  for (long mask = 0; mask < total; ++mask) {
    // Extend the generator assignment multiplicatively.
    GroupChar chi;
    chi[g.identity()] = GaussQ(Rat(1));
    std::deque<int> work = {g.identity()};
    long m = mask;
    std::map<int, GaussQ> assign;
    for (int t = 0; t < ng; ++t) {
      assign[gens[t]] = roots[m % 4];
      m /= 4;
    }
    bool ok = true;
    while (ok && !work.empty()) {
      int a = work.front();
      work.pop_front();
      for (int t = 0; t < ng; ++t) {
        int b = g.mul(a, gens[t]);
        GaussQ v = chi.at(a) * assign.at(gens[t]);
        auto it = chi.find(b);
        if (it == chi.end()) {
          chi[b] = v;
          work.push_back(b);
        } else if (!(it->second == v)) {
          ok = false;
          break;
        }
      }
    }
    if (!ok || chi.size() != sub.size()) continue;
    for (int a : sub)
      if (!chi.count(a)) ok = false;
    if (!ok) continue;
    // Full verification of multiplicativity.
    for (int a : sub) {
      for (int b : sub)
        if (!(chi.at(g.mul(a, b)) == chi.at(a) * chi.at(b))) {
          ok = false;
          break;
        }
      if (!ok) break;
    }
    if (!ok) continue;
    if (std::find(out.begin(), out.end(), chi) == out.end())
      out.push_back(chi);
  }
  return out;
}

static void validate_irreducible_set(
    const FiniteGroup& g,
    const std::vector<std::pair<std::string, GroupChar>>& set) {
  Rat dimsum(0);
  for (const auto& [name, chi] : set) {
    if (static_cast<int>(chi.size()) != g.size())
      throw std::logic_error("character table domain mismatch: " + name);
    GaussQ d = chi.at(g.identity());
    if (!is_zero(d.im) || d.re < 1 || d.re.get_den() != 1)
      throw std::logic_error("character degree is not a positive integer: " +
                             name);
    dimsum += d.re * d.re;
    for (int a = 0; a < g.size(); ++a)
      for (int b = 0; b < g.size(); ++b) {
        int conj_b = g.mul(g.mul(a, b), g.inverse(a));
        if (!(chi.at(conj_b) == chi.at(b)))
          throw std::logic_error("character is not a class function: " + name);
      }
  }
  if (dimsum != Rat(g.size()))
    throw std::logic_error("character degrees do not exhaust the group order");
  for (size_t i = 0; i < set.size(); ++i)
    for (size_t j = 0; j < set.size(); ++j) {
      GaussQ p = char_inner(set[i].second, set[j].second);
      GaussQ expect(Rat(i == j ? 1 : 0));
      if (!(p == expect))
        throw std::logic_error("character table is not orthonormal");
    }
}

std::vector<std::pair<std::string, GroupChar>> irreducible_characters(
    const FiniteGroup& g) {
  std::vector<std::pair<std::string, GroupChar>> set;
  const GaussQ one(Rat(1)), none(Rat(-1)), two(Rat(2)), ntwo(Rat(-2));
  if (g.name() == "Z2" || g.name() == "Z4") {
    const int n = g.size();
    const GaussQ roots[4] = {one, GaussQ::i(), none, GaussQ(Rat(0), Rat(-1))};
    for (int m = 0; m < n; ++m) {
      GroupChar chi;
      for (int a = 0; a < n; ++a) chi[a] = roots[(m * a * (4 / n)) % 4];
      set.emplace_back("chi" + std::to_string(m), chi);
    }
  } else if (g.name() == "S3") {
    GroupChar triv, sgn, std2;
    const bool even[6] = {true, false, false, true, true, false};
    for (int a = 0; a < 6; ++a) {
      triv[a] = one;
      sgn[a] = even[a] ? one : none;
      if (a == 0)
        std2[a] = two;
      else
        std2[a] = even[a] ? none : GaussQ();
    }
    set.emplace_back("trivial", triv);
    set.emplace_back("sign", sgn);
    set.emplace_back("standard", std2);
  } else if (g.name() == "D4") {
    for (int lr : {1, -1})
      for (int ls : {1, -1}) {
        GroupChar chi;
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 4; ++b) {
            int v = (a ? ls : 1) * (b % 2 ? lr : 1);
            chi[4 * a + b] = v == 1 ? one : none;
          }
        std::string nm = std::string("chi_r") + (lr > 0 ? "+" : "-") + "s" +
                         (ls > 0 ? "+" : "-");
        set.emplace_back(nm, chi);
      }
    GroupChar twod;
    for (int x = 0; x < 8; ++x) twod[x] = GaussQ();
    twod[0] = two;
    twod[2] = ntwo;
    set.emplace_back("two-dimensional", twod);
  } else if (g.name() == "Q8") {
    for (int li : {1, -1})
      for (int lj : {1, -1}) {
        GroupChar chi;
        for (int x = 0; x < 8; ++x) {
          int axis = x / 2;
          int v = axis == 0 ? 1 : axis == 1 ? li : axis == 2 ? lj : li * lj;
          chi[x] = v == 1 ? one : none;
        }
        std::string nm = std::string("chi_i") + (li > 0 ? "+" : "-") + "j" +
                         (lj > 0 ? "+" : "-");
        set.emplace_back(nm, chi);
      }
    GroupChar twod;
    for (int x = 0; x < 8; ++x) twod[x] = GaussQ();
    twod[0] = two;
    twod[1] = ntwo;
    set.emplace_back("two-dimensional", twod);
  } else {
    return set;  // no table known for this group
  }
  validate_irreducible_set(g, set);
  return set;
}

FiniteRep char_rep(const FiniteGroup& g, const std::vector<int>& k,
                   const GroupChar& chi) {
  std::vector<int> sub = k;
  std::sort(sub.begin(), sub.end());
  std::map<int, Matrix> mats;
  for (int a : sub) mats[a] = Matrix{{chi.at(a)}};
  return FiniteRep(g, std::move(sub), 1, std::move(mats));
}

FiniteRep permutation_rep(const FiniteGroup& g, const CosetSpace& cs) {
  std::vector<int> all(g.size());
  for (int a = 0; a < g.size(); ++a) all[a] = a;
  const int n = cs.size();
  std::map<int, Matrix> mats;
  for (int x : all) {
    Matrix m(n, std::vector<GaussQ>(n));
    // (x acting on f)(coset) = f(coset * x).
    for (int j = 0; j < n; ++j)
      m[j][cs.coset_index[g.mul(cs.reps[j], x)]] = GaussQ(Rat(1));
    mats[x] = std::move(m);
  }
  return FiniteRep(g, std::move(all), n, std::move(mats));
}

FiniteRep induce_rep(const FiniteRep& k_rep, const CosetSpace& cs) {
  const FiniteGroup& g = k_rep.group();
  const int d = k_rep.dim();
  const int m = cs.size();
  std::vector<int> all(g.size());
  for (int a = 0; a < g.size(); ++a) all[a] = a;
  std::map<int, Matrix> mats;
  for (int x : all) {
    Matrix mat(d * m, std::vector<GaussQ>(d * m));
    for (int j = 0; j < m; ++j) {
      int tj = cs.coset_index[g.mul(cs.reps[j], x)];
      int h = g.mul(g.mul(cs.reps[j], x), g.inverse(cs.reps[tj]));
      if (!std::binary_search(cs.subgroup.begin(), cs.subgroup.end(), h))
        throw std::logic_error("coset defect does not land in the subgroup");
      const Matrix& blk = k_rep.at(h);
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) mat[j * d + r][tj * d + c] = blk[r][c];
    }
    mats[x] = std::move(mat);
  }
  return FiniteRep(g, std::move(all), d * m, std::move(mats));
}

bool rep_is_unitary(const FiniteRep& rep, const StarFn& star,
                    std::string* witness) {
  const FiniteGroup& g = rep.group();
  for (int a : rep.domain()) {
    int s = star(g, a);
    if (!std::binary_search(rep.domain().begin(), rep.domain().end(), s)) {
      if (witness) *witness = "star leaves the domain at " + g.element_name(a);
      return false;
    }
    if (!mat_eq(conj_transpose(rep.at(s)), rep.at(a))) {
      if (witness)
        *witness = "adjointness fails at element " + g.element_name(a);
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Check suites
// ---------------------------------------------------------------------------

static StarFn inverse_star() {
  return [](const FiniteGroup& g, int a) { return g.inverse(a); };
}

Report check_group_builtins() {
  Report rep("finite group builtins");

  int cases = 0;
  bool ok = true;
  std::string detail;
  std::vector<FiniteGroup> groups;
  for (int n : {2, 3, 4, 6, 12}) groups.push_back(FiniteGroup::cyclic(n));
  groups.push_back(FiniteGroup::symmetric3());
  groups.push_back(FiniteGroup::dihedral4());
  groups.push_back(FiniteGroup::quaternion8());
  for (const auto& g : groups) {
    try {
      g.validate();
      ++cases;
    } catch (const std::exception& e) {
      ok = false;
      detail = g.name() + std::string(": ") + e.what();
    }
  }
  rep.add("built-in tables satisfy the group axioms", ok, cases, detail);

  {
    FiniteGroup s3 = FiniteGroup::symmetric3();
    bool pass = true;
    // Even permutations 123, 231, 312 close under multiplication and are
    // generated by either three-cycle.
    std::vector<int> a3 = {0, 3, 4};
    pass = pass && subgroup_closure(s3, {3}) == a3;
    pass = pass && subgroup_closure(s3, {4}) == a3;
    // Transpositions square to the identity; three-cycles cube to it.
    for (int t : {1, 2, 5}) pass = pass && s3.mul(t, t) == 0;
    for (int c : {3, 4})
      pass = pass && s3.mul(c, s3.mul(c, c)) == 0 && s3.mul(c, c) != 0;
    rep.add("even permutations form the alternating subgroup", pass, 7);
  }

  {
    FiniteGroup d4 = FiniteGroup::dihedral4();
    const int r = 1, s = 4, e = 0;
    bool pass = d4.mul(r, d4.mul(r, d4.mul(r, r))) == e;   // r^4 = e
    pass = pass && d4.mul(s, s) == e;                      // s^2 = e
    // r s = s r^{-1}
    pass = pass && d4.mul(r, s) == d4.mul(s, d4.inverse(r));
    pass = pass && d4.mul(r, r) != e;
    rep.add("dihedral relations hold", pass, 4);
  }

  {
    FiniteGroup q8 = FiniteGroup::quaternion8();
    const int m1 = 1, qi = 2, qj = 4, qk = 6;
    bool pass = q8.mul(qi, qi) == m1 && q8.mul(qj, qj) == m1 &&
                q8.mul(qk, qk) == m1;
    pass = pass && q8.mul(qi, qj) == qk;             // ij = k
    pass = pass && q8.mul(qj, qi) == q8.inverse(qk); // ji = -k
    pass = pass && q8.mul(qi, q8.mul(qj, qk)) == m1; // ijk = -1
    rep.add("quaternion relations hold", pass, 6);
  }

  {
    int cnt = 0;
    bool pass = true;
    std::string detail;
    for (const auto& g :
         {FiniteGroup::cyclic(2), FiniteGroup::cyclic(4),
          FiniteGroup::symmetric3(), FiniteGroup::dihedral4(),
          FiniteGroup::quaternion8()}) {
      try {
        auto set = irreducible_characters(g);
        if (set.empty()) {
          pass = false;
          detail = "no table for " + g.name();
        }
        cnt += static_cast<int>(set.size());
      } catch (const std::exception& ex) {
        pass = false;
        detail = g.name() + std::string(": ") + ex.what();
      }
    }
    rep.add("irreducible tables pass orthonormality and completeness", pass,
            cnt, detail);
  }

  {
    // Counts of fourth-root-valued one-dimensional characters.
    FiniteGroup z4 = FiniteGroup::cyclic(4);
    FiniteGroup s3 = FiniteGroup::symmetric3();
    FiniteGroup d4 = FiniteGroup::dihedral4();
    bool pass = true;
    std::vector<int> all4 = {0, 1, 2, 3};
    pass = pass && one_dim_characters(z4, all4).size() == 4;
    pass = pass && one_dim_characters(z4, {0, 2}).size() == 2;
    // The alternating subgroup is cyclic of order three: over the Gaussian
    // rationals only the trivial character of it is expressible.
    pass = pass && one_dim_characters(s3, {0, 3, 4}).size() == 1;
    pass = pass && one_dim_characters(s3, {0, 2}).size() == 2;
    std::vector<int> rot = {0, 1, 2, 3};
    pass = pass && one_dim_characters(d4, rot).size() == 4;
    // Every enumerated character is multiplicative by construction; spot
    // check values on the rotation subgroup.
    auto chis = one_dim_characters(d4, rot);
    int with_i = 0;
    for (const auto& chi : chis)
      if (!is_zero(chi.at(1).im)) ++with_i;
    pass = pass && with_i == 2;
    rep.add("one-dimensional characters are the fourth-root homomorphisms",
            pass, 6);
  }

  {
    bool pass = true;
    int cnt = 0;
    FiniteGroup s3 = FiniteGroup::symmetric3();
    FiniteGroup d4 = FiniteGroup::dihedral4();
    struct Setting {
      const FiniteGroup* g;
      std::vector<int> k;
    };
    std::vector<Setting> settings = {{&s3, {0, 3, 4}},
                                     {&s3, {0, 2}},
                                     {&d4, {0, 1, 2, 3}},
                                     {&d4, {0, 2}}};
    for (const auto& st : settings) {
      CosetSpace cs = right_cosets(*st.g, st.k);
      pass = pass && static_cast<int>(st.k.size()) * cs.size() == st.g->size();
      std::vector<int> seen;
      for (int j = 0; j < cs.size(); ++j) {
        // The representative is the smallest member of its coset.
        for (int h : cs.subgroup) {
          int member = st.g->mul(h, cs.reps[j]);
          pass = pass && member >= cs.reps[j];
          pass = pass && cs.coset_index[member] == j;
          seen.push_back(member);
          ++cnt;
        }
      }
      std::sort(seen.begin(), seen.end());
      for (int x = 0; x < st.g->size(); ++x) pass = pass && seen[x] == x;
    }
    rep.add("coset spaces partition the group with minimal representatives",
            pass, cnt);
  }

  return rep;
}

namespace {

struct InductionSetting {
  FiniteGroup g;
  std::vector<int> k;
  std::string label;
};

std::vector<InductionSetting> stock_settings() {
  std::vector<InductionSetting> out;
  out.push_back({FiniteGroup::cyclic(4), {0, 2}, "Z4 from Z2"});
  out.push_back({FiniteGroup::symmetric3(), {0, 3, 4}, "S3 from A3"});
  out.push_back({FiniteGroup::symmetric3(), {0, 2}, "S3 from Z2"});
  out.push_back({FiniteGroup::dihedral4(), {0, 1, 2, 3}, "D4 from Z4"});
  return out;
}

}  // namespace

namespace {

struct FrobeniusTally {
  bool trace_ok = true, recip_ok = true, decomp_ok = true;
  long trace_cases = 0, recip_cases = 0, decomp_cases = 0;
  std::string detail;
};

// Runs every one-dimensional induction from K up to G against the full
// reciprocity battery, accumulating into the tally.
void frobenius_cases(
    const FiniteGroup& g,
    const std::vector<std::pair<std::string, GroupChar>>& irr,
    const std::vector<int>& k, const std::string& label, FrobeniusTally& t) {
  CosetSpace cs = right_cosets(g, k);
  for (const auto& chi : one_dim_characters(g, k)) {
    FiniteRep ind = induce_rep(char_rep(g, k, chi), cs);
    GroupChar ind_chi = rep_character(ind);
    GroupChar formula = induce_character(g, cs, chi);
    if (!(ind_chi == formula)) {
      t.trace_ok = false;
      t.detail = label;
    }
    ++t.trace_cases;

    Rat dim_total(0);
    for (const auto& [nm, sigma] : irr) {
      GaussQ lhs = char_inner(ind_chi, sigma);
      GaussQ rhs = char_inner(chi, restrict_char(sigma, cs.subgroup));
      if (!(lhs == rhs)) {
        t.recip_ok = false;
        t.detail = label + " / " + nm;
      }
      ++t.recip_cases;
      // Multiplicities must be nonnegative integers that exhaust the
      // induced dimension.
      if (!is_zero(lhs.im) || lhs.re < 0 || lhs.re.get_den() != 1)
        t.decomp_ok = false;
      dim_total += lhs.re * sigma.at(g.identity()).re;
    }
    if (dim_total != Rat(cs.size())) t.decomp_ok = false;
    ++t.decomp_cases;
  }
}

void add_frobenius_lines(Report& rep, const std::string& label,
                         const FrobeniusTally& t) {
  rep.add("induced character matches the induced block trace (" + label + ")",
          t.trace_ok, t.trace_cases, t.trace_ok ? "" : t.detail);
  rep.add("reciprocity pairs induction with restriction (" + label + ")",
          t.recip_ok, t.recip_cases, t.recip_ok ? "" : t.detail);
  rep.add("multiplicities are integral and exhaust the dimension (" + label +
              ")",
          t.decomp_ok, t.decomp_cases);
}

}  // namespace

Report check_frobenius() {
  Report rep("Frobenius reciprocity");
  for (const auto& st : stock_settings()) {
    auto irr = irreducible_characters(st.g);
    FrobeniusTally t;
    frobenius_cases(st.g, irr, st.k, st.label, t);
    add_frobenius_lines(rep, st.label, t);
  }

  // Exhaustive sweep: every subgroup of each table-backed group, every
  // one-dimensional character of the subgroup.
  struct Sweep {
    FiniteGroup g;
    std::string label;
  };
  std::vector<Sweep> sweeps;
  sweeps.push_back({FiniteGroup::cyclic(4), "Z4"});
  sweeps.push_back({FiniteGroup::symmetric3(), "S3"});
  sweeps.push_back({FiniteGroup::dihedral4(), "D4"});
  for (const auto& sw : sweeps) {
    auto irr = irreducible_characters(sw.g);
    FrobeniusTally t;
    long subgroups = 0;
    for (const auto& k : all_subgroups(sw.g)) {
      ++subgroups;
      std::string label = sw.label + " K={";
      for (std::size_t i = 0; i < k.size(); ++i)
        label += (i ? "," : "") + sw.g.element_name(k[i]);
      label += "}";
      frobenius_cases(sw.g, irr, k, label, t);
    }
    add_frobenius_lines(
        rep, "all " + std::to_string(subgroups) + " subgroups of " + sw.label,
        t);
  }
  return rep;
}

Report check_invariant_integral() {
  Report rep("invariant integral");
  struct Carrier {
    FiniteGroup g;
    std::vector<int> k;
    std::string label;
  };
  std::vector<Carrier> carriers;
  carriers.push_back({FiniteGroup::cyclic(4), {0}, "regular Z4"});
  carriers.push_back({FiniteGroup::symmetric3(), {0, 3, 4}, "S3 cosets of A3"});
  carriers.push_back(
      {FiniteGroup::dihedral4(), {0, 1, 2, 3}, "D4 cosets of Z4"});

  for (const auto& c : carriers) {
    CosetSpace cs = right_cosets(c.g, c.k);
    FiniteRep pi = permutation_rep(c.g, cs);
    const int n = cs.size();

    // Invariance of the uniform functional: all column sums are one.
    bool inv_ok = true;
    int inv_cases = 0;
    for (int x : pi.domain()) {
      const Matrix& m = pi.at(x);
      for (int col = 0; col < n; ++col) {
        GaussQ sum;
        for (int row = 0; row < n; ++row) sum += m[row][col];
        if (!(sum == GaussQ(Rat(1)))) inv_ok = false;
        ++inv_cases;
      }
    }
    // Normalisation on the constant function.
    GaussQ h_one;
    Rat w = rat(1, n);
    for (int j = 0; j < n; ++j) h_one += GaussQ(w);
    inv_ok = inv_ok && h_one == GaussQ(Rat(1));
    rep.add("uniform integral is invariant and normalised (" + c.label + ")",
            inv_ok, inv_cases + 1);

    // Uniqueness: stack (pi(x)^T - id) for all x; nullspace dimension one.
    Matrix stacked;
    for (int x : pi.domain()) {
      const Matrix& m = pi.at(x);
      for (int col = 0; col < n; ++col) {
        std::vector<GaussQ> row(n);
        for (int r = 0; r < n; ++r) {
          row[r] = m[r][col];
          if (r == col) row[r] -= GaussQ(Rat(1));
        }
        stacked.push_back(std::move(row));
      }
    }
    int dim = nullspace_dim(std::move(stacked));
    rep.add("invariant functional is unique up to scale (" + c.label + ")",
            dim == 1, 1,
            dim == 1 ? ""
                     : "nullspace dimension " + std::to_string(dim));
  }

  // Every transitive permutation carrier of the built-in groups: the coset
  // spaces of all their subgroups.
  {
    std::vector<std::pair<FiniteGroup, std::string>> groups;
    groups.emplace_back(FiniteGroup::cyclic(2), "Z2");
    groups.emplace_back(FiniteGroup::cyclic(3), "Z3");
    groups.emplace_back(FiniteGroup::cyclic(4), "Z4");
    groups.emplace_back(FiniteGroup::cyclic(6), "Z6");
    groups.emplace_back(FiniteGroup::cyclic(12), "Z12");
    groups.emplace_back(FiniteGroup::symmetric3(), "S3");
    groups.emplace_back(FiniteGroup::dihedral4(), "D4");
    groups.emplace_back(FiniteGroup::quaternion8(), "Q8");
    bool ok = true;
    long cases = 0;
    std::string det;
    for (const auto& [g, label] : groups) {
      for (const auto& k : all_subgroups(g)) {
        ++cases;
        CosetSpace cs = right_cosets(g, k);
        FiniteRep pi = permutation_rep(g, cs);
        const int n = cs.size();
        Matrix stacked;
        for (int x : pi.domain()) {
          const Matrix& m = pi.at(x);
          for (int col = 0; col < n; ++col) {
            std::vector<GaussQ> row(n);
            for (int r2 = 0; r2 < n; ++r2) {
              row[r2] = m[r2][col];
              if (r2 == col) row[r2] -= GaussQ(Rat(1));
            }
            stacked.push_back(std::move(row));
          }
        }
        int dim = nullspace_dim(std::move(stacked));
        if (dim != 1) {
          ok = false;
          det = label + " with a subgroup of order " +
                std::to_string(k.size()) + ": nullspace dimension " +
                std::to_string(dim);
        }
      }
    }
    rep.add(
        "invariant functional is unique on every built-in transitive carrier",
        ok, cases, det);
  }
  return rep;
}

Report check_unitarity_suite() {
  Report rep("unitarity");
  StarFn inv = inverse_star();

  {
    FiniteGroup z4 = FiniteGroup::cyclic(4);
    CosetSpace cs = right_cosets(z4, {0});
    FiniteRep reg = permutation_rep(z4, cs);
    std::string w;
    rep.add("inverse star is adjoint on the regular cyclic action",
            rep_is_unitary(reg, inv, &w), z4.size(), w);

    // Deliberately mutated star: the identity map. The regular action of an
    // order-four element is a nontrivial rotation, so adjointness must fail.
    StarFn mutated = [](const FiniteGroup&, int a) { return a; };
    bool caught = !rep_is_unitary(reg, mutated, &w);
    rep.add("mutated identity star is rejected on the cyclic regular action",
            caught, 1, caught ? w : "mutation went undetected");
  }

  {
    FiniteGroup s3 = FiniteGroup::symmetric3();
    CosetSpace cs = right_cosets(s3, {0});
    std::string w;
    rep.add("inverse star is adjoint on the regular symmetric action",
            rep_is_unitary(permutation_rep(s3, cs), inv, &w), s3.size(), w);
  }

  {
    // Induced one-dimensional characters carry genuinely complex entries.
    FiniteGroup d4 = FiniteGroup::dihedral4();
    CosetSpace cs = right_cosets(d4, {0, 1, 2, 3});
    bool pass = true;
    int cases = 0;
    std::string w;
    for (const auto& chi : one_dim_characters(d4, cs.subgroup)) {
      FiniteRep ind = induce_rep(char_rep(d4, cs.subgroup, chi), cs);
      if (!rep_is_unitary(ind, inv, &w)) pass = false;
      cases += d4.size();
    }
    rep.add("inverse star is adjoint on induced block actions", pass, cases,
            pass ? "" : w);
  }
  return rep;
}

namespace {

// Function on the whole group as a value vector indexed by element.
using GroupFn = std::vector<GaussQ>;

GroupFn carrier_basis_fn(const FiniteGroup& g, const CosetSpace& cs,
                         const GroupChar& chi, int j) {
  GroupFn f(g.size());
  for (int h : cs.subgroup) f[g.mul(h, cs.reps[j])] = chi.at(h);
  return f;
}

bool satisfies_twisted_law(const FiniteGroup& g, const CosetSpace& cs,
                           const GroupChar& chi, const GroupFn& f) {
  for (int h : cs.subgroup)
    for (int x = 0; x < g.size(); ++x)
      if (!(f[g.mul(h, x)] == chi.at(h) * f[x])) return false;
  return true;
}

GroupFn translate(const FiniteGroup& g, const GroupFn& f, int x) {
  GroupFn out(g.size());
  for (int y = 0; y < g.size(); ++y) out[y] = f[g.mul(y, x)];
  return out;
}

}  // namespace

Report check_function_model_suite() {
  Report rep("function-space induction");
  for (const auto& st : stock_settings()) {
    CosetSpace cs = right_cosets(st.g, st.k);
    const int n = st.g.size();
    const int m = cs.size();

    auto chis = one_dim_characters(st.g, st.k);
    for (size_t ci = 0; ci < chis.size(); ++ci) {
      const GroupChar& chi = chis[ci];
      std::string tag = st.label + ", chi" + std::to_string(ci);
      // Carrier dimension by direct linear algebra on the constraint
      // phi(h x) = chi(h) phi(x).
      Matrix constraints;
      for (int h : cs.subgroup)
        for (int x = 0; x < n; ++x) {
          std::vector<GaussQ> row(n);
          row[st.g.mul(h, x)] += GaussQ(Rat(1));
          row[x] -= chi.at(h);
          constraints.push_back(std::move(row));
        }
      int dim = nullspace_dim(std::move(constraints));
      rep.add("twisted carrier has one dimension per coset (" + tag + ")",
              dim == m, 1,
              dim == m ? "" : "dimension " + std::to_string(dim));

      // Coset basis functions satisfy the law and reconstruct translations.
      std::vector<GroupFn> basis;
      bool law_ok = true;
      for (int j = 0; j < m; ++j) {
        basis.push_back(carrier_basis_fn(st.g, cs, chi, j));
        law_ok = law_ok && satisfies_twisted_law(st.g, cs, chi, basis[j]);
      }
      rep.add("coset basis functions obey the twisted law (" + tag + ")",
              law_ok, m);

      FiniteRep ind = induce_rep(char_rep(st.g, st.k, chi), cs);
      bool preserved = true, determined = true, entry_ok = true;
      for (int x = 0; x < n; ++x) {
        const Matrix& bm = ind.at(x);
        for (int j = 0; j < m; ++j) {
          GroupFn psi = translate(st.g, basis[j], x);
          preserved =
              preserved && satisfies_twisted_law(st.g, cs, chi, psi);
          // Expansion through representative values.
          GroupFn recon(n);
          for (int l = 0; l < m; ++l)
            for (int y = 0; y < n; ++y)
              recon[y] += psi[cs.reps[l]] * basis[l][y];
          determined = determined && recon == psi;
          // Coefficient of phi_l in the translate of phi_j must equal the
          // (l, j) entry of the induced block matrix.
          for (int l = 0; l < m; ++l)
            if (!(bm[l][j] == psi[cs.reps[l]])) entry_ok = false;
        }
      }
      rep.add("right translation preserves the twisted carrier (" + tag + ")",
              preserved, n * m);
      rep.add("carrier functions are set by representative values (" + tag +
                  ")",
              determined, n * m);
      rep.add("translation action equals block induction (" + tag + ")",
              entry_ok, n * m * m);
    }
  }
  return rep;
}

Report check_comodule_suite() {
  Report rep("comodule induction");
  for (const auto& st : stock_settings()) {
    CosetSpace cs = right_cosets(st.g, st.k);
    const int n = st.g.size();
    const int m = cs.size();
    auto chis = one_dim_characters(st.g, st.k);
    for (size_t ci = 0; ci < chis.size(); ++ci) {
      const GroupChar& chi = chis[ci];
      std::string tag = st.label + ", chi" + std::to_string(ci);
      std::vector<GroupFn> basis;
      for (int j = 0; j < m; ++j)
        basis.push_back(carrier_basis_fn(st.g, cs, chi, j));

      // Coaction coefficient functions F[l][j](x) = phi_j(r_l x).
      std::vector<std::vector<GroupFn>> F(
          m, std::vector<GroupFn>(m, GroupFn(n)));
      for (int l = 0; l < m; ++l)
        for (int j = 0; j < m; ++j)
          for (int x = 0; x < n; ++x)
            F[l][j][x] = basis[j][st.g.mul(cs.reps[l], x)];

      bool counit_ok = true;
      for (int l = 0; l < m; ++l)
        for (int j = 0; j < m; ++j) {
          GaussQ expect(Rat(l == j ? 1 : 0));
          counit_ok = counit_ok && F[l][j][st.g.identity()] == expect;
        }
      rep.add("coaction satisfies the counit law (" + tag + ")", counit_ok,
              m * m);

      bool coassoc_ok = true;
      for (int l = 0; l < m && coassoc_ok; ++l)
        for (int j = 0; j < m && coassoc_ok; ++j)
          for (int x = 0; x < n && coassoc_ok; ++x)
            for (int y = 0; y < n; ++y) {
              GaussQ lhs = F[l][j][st.g.mul(x, y)];
              GaussQ rhs;
              for (int t = 0; t < m; ++t) rhs += F[l][t][x] * F[t][j][y];
              if (!(lhs == rhs)) {
                coassoc_ok = false;
                break;
              }
            }
      rep.add("coaction satisfies coassociativity (" + tag + ")", coassoc_ok,
              m * m * n * n);

      bool subgroup_leg_ok = true;
      for (int h : cs.subgroup)
        for (int j = 0; j < m; ++j)
          for (int x = 0; x < n; ++x)
            if (!(basis[j][st.g.mul(h, x)] == chi.at(h) * basis[j][x]))
              subgroup_leg_ok = false;
      rep.add("subgroup leg of the coaction reads the character (" + tag + ")",
              subgroup_leg_ok, static_cast<int>(cs.subgroup.size()) * m * n);

      FiniteRep ind = induce_rep(char_rep(st.g, st.k, chi), cs);
      bool dual_ok = true;
      for (int x = 0; x < n; ++x) {
        const Matrix& bm = ind.at(x);
        for (int l = 0; l < m; ++l)
          for (int j = 0; j < m; ++j)
            if (!(bm[l][j] == F[l][j][x])) dual_ok = false;
      }
      rep.add("coaction dualises to the induced blocks (" + tag + ")", dual_ok,
              n * m * m);
    }
  }
  return rep;
}

Report check_finite_all() {
  Report rep("finite induction apparatus");
  rep.merge(check_group_builtins());
  rep.merge(check_frobenius());
  rep.merge(check_invariant_integral());
  rep.merge(check_unitarity_suite());
  rep.merge(check_function_model_suite());
  rep.merge(check_comodule_suite());
  return rep;
}

}  // namespace qgal
