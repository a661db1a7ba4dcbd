#include "qgal/ncelement.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qgal/presentation.hpp"

namespace qgal {

namespace {

void check_same_pres(const Presentation* a, const Presentation* b) {
  if (a != b)
    throw std::logic_error("operands belong to different presentations");
}

// Renders one additive term and appends it to the stream with sign-aware
// joining. `mono` is the rendered monomial part ("" for the unit).
void append_term(std::ostringstream& os, bool& first, const CoeffPoly& coeff,
                 const std::string& mono) {
  const bool unit_mono = mono.empty();
  const bool composite = coeff.terms().size() > 1;
  std::string joined;
  if (composite) {
    if (unit_mono)
      joined = first ? coeff.to_string()
                     : "(" + coeff.to_string() + ")";
    else
      joined = "(" + coeff.to_string() + ") * " + mono;
    os << (first ? "" : " + ") << joined;
  } else {
    // Single-term coefficient: fold its sign into the join.
    const Rat& c = coeff.terms().begin()->second;
    bool neg = sgn(c) < 0;
    CoeffPoly mag = neg ? -coeff : coeff;
    std::string body;
    if (unit_mono)
      body = mag.to_string();
    else if (mag == CoeffPoly(Rat(1)))
      body = mono;
    else
      body = mag.to_string() + " * " + mono;
    if (first)
      os << (neg ? "-" : "") << body;
    else
      os << (neg ? " - " : " + ") << body;
  }
  first = false;
}

}  // namespace

int mono_degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

std::string mono_to_string(const Monomial& m, const Presentation& pres,
                           bool unicode) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << "*";
    first = false;
    os << pres.gen_name(static_cast<int>(i), unicode);
    if (m[i] != 1) os << "^" << m[i];
  }
  return os.str();
}

bool MonoLess::operator()(const Monomial& l, const Monomial& r) const {
  int dl = mono_degree(l), dr = mono_degree(r);
  if (dl != dr) return dl > dr;
  return l > r;
}

std::vector<Monomial> enumerate_monomials(int num_gens, int max_deg,
                                          int min_deg) {
  std::vector<Monomial> out;
  Monomial cur(num_gens, 0);
  // Ascending degree, then ascending lex within a degree.
  for (int d = min_deg; d <= max_deg; ++d) {
    std::vector<Monomial> level;
    std::function<void(int, int)> rec = [&](int pos, int left) {
      if (pos == num_gens - 1) {
        cur[pos] = left;
        level.push_back(cur);
        return;
      }
      for (int e = 0; e <= left; ++e) {
        cur[pos] = e;
        rec(pos + 1, left - e);
      }
    };
    if (num_gens == 0) {
      if (d == 0) out.push_back(cur);
      continue;
    }
    rec(0, d);
    std::sort(level.begin(), level.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Straightening engine
// ---------------------------------------------------------------------------

namespace {

using TermMap = std::map<Monomial, CoeffPoly, MonoLess>;

void map_add(TermMap& dst, const Monomial& m, const CoeffPoly& c,
             const std::optional<int>& a_order) {
  CoeffPoly v = a_order ? c.truncate_a(*a_order) : c;
  if (v.is_zero()) return;
  auto it = dst.find(m);
  if (it == dst.end()) {
    dst.emplace(m, std::move(v));
  } else {
    it->second += v;
    if (a_order) it->second = it->second.truncate_a(*a_order);
    if (it->second.is_zero()) dst.erase(it);
  }
}

TermMap mul_mono_mono(const Presentation& pres, const Monomial& m1,
                      const Monomial& m2);

}  // namespace

const std::map<Monomial, CoeffPoly, MonoLess>& Presentation::mul_mono_gen(
    const Monomial& m, int g) const {
  auto key = std::make_pair(m, g);
  auto it = straighten_cache_.find(key);
  if (it != straighten_cache_.end()) return it->second;

  TermMap result;
  int j = -1;
  for (int k = num_gens() - 1; k > g; --k)
    if (m[k] > 0) {
      j = k;
      break;
    }
  if (j < 0) {
    Monomial nm = m;
    nm[g] += 1;
    map_add(result, nm, CoeffPoly(Rat(1)), a_order_);
  } else {
    Monomial prefix = m;
    prefix[j] -= 1;
    const NCElement& rhs = rule(j, g);
    for (const auto& [rm, rc] : rhs.terms()) {
      TermMap part = mul_mono_mono(*this, prefix, rm);
      for (const auto& [pm, pc] : part) map_add(result, pm, pc * rc, a_order_);
    }
  }
  auto [ins, ok] = straighten_cache_.emplace(std::move(key), std::move(result));
  (void)ok;
  return ins->second;
}

namespace {

TermMap mul_mono_mono(const Presentation& pres, const Monomial& m1,
                      const Monomial& m2) {
  TermMap cur;
  map_add(cur, m1, CoeffPoly(Rat(1)), pres.a_order());
  for (int g = 0; g < pres.num_gens(); ++g) {
    for (int rep = 0; rep < m2[g]; ++rep) {
      TermMap next;
      for (const auto& [m, c] : cur) {
        const TermMap& prod = pres.mul_mono_gen(m, g);
        for (const auto& [pm, pc] : prod)
          map_add(next, pm, pc * c, pres.a_order());
      }
      cur = std::move(next);
    }
  }
  return cur;
}

}  // namespace

// ---------------------------------------------------------------------------
// NCElement
// ---------------------------------------------------------------------------

NCElement NCElement::zero(const Presentation& pres) {
  return NCElement(&pres);
}

NCElement NCElement::unit(const Presentation& pres) {
  NCElement e(&pres);
  e.add_term(Monomial(pres.num_gens(), 0), CoeffPoly(Rat(1)));
  return e;
}

NCElement NCElement::gen(const Presentation& pres, int index) {
  if (index < 0 || index >= pres.num_gens())
    throw std::out_of_range("generator index out of range");
  NCElement e(&pres);
  Monomial m(pres.num_gens(), 0);
  m[index] = 1;
  e.add_term(m, CoeffPoly(Rat(1)));
  return e;
}

NCElement NCElement::monomial(const Presentation& pres, const Monomial& m,
                              const CoeffPoly& c) {
  if (static_cast<int>(m.size()) != pres.num_gens())
    throw std::invalid_argument("monomial width mismatch");
  NCElement e(&pres);
  e.add_term(m, c);
  return e;
}

NCElement NCElement::word(const Presentation& pres,
                          const std::vector<int>& letters,
                          const CoeffPoly& c) {
  NCElement e = unit(pres);
  for (int g : letters) e *= gen(pres, g);
  e.scale(c);
  return e;
}

int NCElement::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
  return d;
}

CoeffPoly NCElement::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? CoeffPoly() : it->second;
}

CoeffPoly NCElement::unit_coefficient() const {
  if (!pres_) return CoeffPoly();
  return coefficient(Monomial(pres_->num_gens(), 0));
}

void NCElement::add_term(const Monomial& m, const CoeffPoly& c) {
  if (!pres_) throw std::logic_error("element without a presentation");
  map_add(terms_, m, c, pres_->a_order());
}

NCElement& NCElement::operator+=(const NCElement& o) {
  check_same_pres(pres_, o.pres_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

NCElement& NCElement::operator-=(const NCElement& o) {
  check_same_pres(pres_, o.pres_);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

NCElement NCElement::operator-() const {
  NCElement e(pres_);
  for (const auto& [m, c] : terms_) e.terms_[m] = -c;
  return e;
}

NCElement NCElement::operator*(const NCElement& o) const {
  check_same_pres(pres_, o.pres_);
  NCElement out(pres_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      TermMap prod = mul_mono_mono(*pres_, m1, m2);
      CoeffPoly cc = c1 * c2;
      for (const auto& [pm, pc] : prod) out.add_term(pm, pc * cc);
    }
  return out;
}

NCElement& NCElement::scale(const CoeffPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  TermMap next;
  for (const auto& [m, v] : terms_) map_add(next, m, v * c, pres_->a_order());
  terms_ = std::move(next);
  return *this;
}

NCElement NCElement::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power of an element");
  NCElement r = unit(*pres_);
  for (int i = 0; i < e; ++i) r *= *this;
  return r;
}

bool NCElement::operator==(const NCElement& o) const {
  check_same_pres(pres_, o.pres_);
  return terms_ == o.terms_;
}

std::optional<int> NCElement::a_max_degree() const {
  std::optional<int> m;
  for (const auto& [mono, c] : terms_) {
    auto d = c.a_max_degree();
    if (d && (!m || *d > *m)) m = *d;
  }
  return m;
}

std::string NCElement::to_string(bool unicode) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_)
    append_term(os, first, c, mono_to_string(m, *pres_, unicode));
  return os.str();
}

NCElement truncate_a(const NCElement& e, int k) {
  NCElement out(e.pres());
  for (const auto& [m, c] : e.terms()) {
    CoeffPoly t = c.truncate_a(k);
    if (!t.is_zero()) out.add_term(m, t);
  }
  return out;
}

CoeffPoly truncate_a(const CoeffPoly& c, int k) { return c.truncate_a(k); }

int mono_weight(const Presentation& pres, const Monomial& m) {
  int w = 0;
  for (size_t i = 0; i < m.size(); ++i)
    w += m[i] * pres.gen_weight(static_cast<int>(i));
  return w;
}

std::vector<Monomial> enumerate_monomials_weighted(const Presentation& pres,
                                                   int max_weight) {
  for (int g = 0; g < pres.num_gens(); ++g)
    if (pres.gen_weight(g) < 1)
      throw std::logic_error("weighted enumeration needs positive weights");
  std::vector<Monomial> out;
  for (auto& m : enumerate_monomials(pres.num_gens(), max_weight))
    if (mono_weight(pres, m) <= max_weight) out.push_back(std::move(m));
  return out;
}

std::optional<int> homogeneous_weight(const NCElement& e) {
  std::optional<int> w;
  for (const auto& [m, c] : e.terms()) {
    int base = mono_weight(*e.pres(), m);
    for (const auto& [key, r] : c.terms()) {
      int total = base + e.pres()->a_weight() * key[CoeffPoly::A];
      if (!w)
        w = total;
      else if (*w != total)
        return std::nullopt;
    }
  }
  return w ? w : std::optional<int>(0);
}

// ---------------------------------------------------------------------------
// Tensor2
// ---------------------------------------------------------------------------

bool Mono2Less::operator()(const std::pair<Monomial, Monomial>& l,
                           const std::pair<Monomial, Monomial>& r) const {
  MonoLess less;
  if (less(l.first, r.first)) return true;
  if (less(r.first, l.first)) return false;
  return less(l.second, r.second);
}

bool Mono3Less::operator()(const std::array<Monomial, 3>& l,
                           const std::array<Monomial, 3>& r) const {
  MonoLess less;
  for (int i = 0; i < 3; ++i) {
    if (less(l[i], r[i])) return true;
    if (less(r[i], l[i])) return false;
  }
  return false;
}

Tensor2 Tensor2::zero(const Presentation& pres) { return Tensor2(&pres); }

Tensor2 Tensor2::unit(const Presentation& pres) {
  Tensor2 t(&pres);
  Monomial u(pres.num_gens(), 0);
  t.add_term(u, u, CoeffPoly(Rat(1)));
  return t;
}

Tensor2 Tensor2::simple(const NCElement& l, const NCElement& r) {
  check_same_pres(l.pres(), r.pres());
  Tensor2 t(l.pres());
  for (const auto& [m1, c1] : l.terms())
    for (const auto& [m2, c2] : r.terms()) t.add_term(m1, m2, c1 * c2);
  return t;
}

void Tensor2::add_term(const Monomial& m1, const Monomial& m2,
                       const CoeffPoly& c) {
  if (!pres_) throw std::logic_error("tensor without a presentation");
  CoeffPoly v = pres_->a_order() ? c.truncate_a(*pres_->a_order()) : c;
  if (v.is_zero()) return;
  auto key = std::make_pair(m1, m2);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), std::move(v));
  } else {
    it->second += v;
    if (pres_->a_order())
      it->second = it->second.truncate_a(*pres_->a_order());
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Tensor2& Tensor2::operator+=(const Tensor2& o) {
  check_same_pres(pres_, o.pres_);
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& o) {
  check_same_pres(pres_, o.pres_);
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

Tensor2 Tensor2::operator-() const {
  Tensor2 t(pres_);
  for (const auto& [k, c] : terms_) t.terms_[k] = -c;
  return t;
}

Tensor2 Tensor2::operator*(const Tensor2& o) const {
  check_same_pres(pres_, o.pres_);
  Tensor2 out(pres_);
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) {
      TermMap left = mul_mono_mono(*pres_, k1.first, k2.first);
      TermMap right = mul_mono_mono(*pres_, k1.second, k2.second);
      CoeffPoly cc = c1 * c2;
      for (const auto& [lm, lc] : left)
        for (const auto& [rm, rc] : right)
          out.add_term(lm, rm, lc * rc * cc);
    }
  return out;
}

Tensor2& Tensor2::scale(const CoeffPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  std::map<std::pair<Monomial, Monomial>, CoeffPoly, Mono2Less> next;
  for (const auto& [k, v] : terms_) {
    CoeffPoly nv = v * c;
    if (pres_->a_order()) nv = nv.truncate_a(*pres_->a_order());
    if (!nv.is_zero()) next[k] = nv;
  }
  terms_ = std::move(next);
  return *this;
}

Tensor2 Tensor2::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power of a tensor");
  Tensor2 r = unit(*pres_);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

Tensor2 Tensor2::twist() const {
  Tensor2 t(pres_);
  for (const auto& [k, c] : terms_) t.add_term(k.second, k.first, c);
  return t;
}

bool Tensor2::operator==(const Tensor2& o) const {
  check_same_pres(pres_, o.pres_);
  return terms_ == o.terms_;
}

std::string Tensor2::to_string(bool unicode) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::string m1 = mono_to_string(k.first, *pres_, unicode);
    std::string m2 = mono_to_string(k.second, *pres_, unicode);
    std::string mono =
        (m1.empty() ? "1" : m1) + " @ " + (m2.empty() ? "1" : m2);
    append_term(os, first, c, mono);
  }
  return os.str();
}

Tensor2 truncate_a(const Tensor2& t, int k) {
  Tensor2 out(t.pres());
  for (const auto& [key, c] : t.terms()) {
    CoeffPoly v = c.truncate_a(k);
    if (!v.is_zero()) out.add_term(key.first, key.second, v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tensor3
// ---------------------------------------------------------------------------

void Tensor3::add_term(const std::array<Monomial, 3>& key,
                       const CoeffPoly& c) {
  if (!pres_) throw std::logic_error("tensor without a presentation");
  CoeffPoly v = pres_->a_order() ? c.truncate_a(*pres_->a_order()) : c;
  if (v.is_zero()) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, std::move(v));
  } else {
    it->second += v;
    if (pres_->a_order())
      it->second = it->second.truncate_a(*pres_->a_order());
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Tensor3& Tensor3::operator+=(const Tensor3& o) {
  check_same_pres(pres_, o.pres_);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& o) {
  check_same_pres(pres_, o.pres_);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

bool Tensor3::operator==(const Tensor3& o) const {
  check_same_pres(pres_, o.pres_);
  return terms_ == o.terms_;
}

std::string Tensor3::to_string(bool unicode) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::string parts[3];
    for (int i = 0; i < 3; ++i) {
      parts[i] = mono_to_string(k[i], *pres_, unicode);
      if (parts[i].empty()) parts[i] = "1";
    }
    append_term(os, first, c, parts[0] + " @ " + parts[1] + " @ " + parts[2]);
  }
  return os.str();
}

}  // namespace qgal
