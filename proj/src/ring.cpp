#include "bicolor/ring.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <limits>

namespace bicolor {

namespace {

constexpr std::size_t kSlots = kMaxZ + 1;

void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

void check_num_z(int num_z) {
  if (num_z < 1 || num_z > kMaxZ) {
    throw DimensionError("number of z variables must be in 1.." + std::to_string(kMaxZ) +
                         ", got " + std::to_string(num_z));
  }
}

// Sorts by monomial, merges equal monomials and drops zero coefficients.
void canonicalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono < b.mono; });
  std::size_t out = 0;
  for (std::size_t k = 0; k < terms.size();) {
    std::size_t j = k + 1;
    Coeff sum = std::move(terms[k].coeff);
    while (j < terms.size() && terms[j].mono == terms[k].mono) {
      sum += terms[j].coeff;
      ++j;
    }
    if (!sum.is_zero()) {
      terms[out].mono = terms[k].mono;
      terms[out].coeff = std::move(sum);
      ++out;
    }
    k = j;
  }
  terms.resize(out);
}

template <typename Combine>
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b,
                              Combine&& combine_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono < b[j].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono < a[i].mono) {
      out.push_back({b[j].mono, combine_b(Coeff(0), b[j].coeff)});
      ++j;
    } else {
      Coeff c = combine_b(a[i].coeff, b[j].coeff);
      if (!c.is_zero()) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

int parse_int(std::string_view s, std::string_view context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("bad integer '" + std::string(s) + "' in " + std::string(context));
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::size_t Monomial::hash() const {
  std::size_t seed = 0;
  for (auto e : exps_) hash_combine(seed, std::hash<std::int32_t>{}(e));
  return seed;
}

LaurentPoly::LaurentPoly(int num_z) : num_z_(num_z) { check_num_z(num_z); }

LaurentPoly LaurentPoly::constant(int num_z, const Coeff& c) { return term(num_z, c, 0); }

LaurentPoly LaurentPoly::term(int num_z, const Coeff& c, int t_exp, int i, int z_exp) {
  LaurentPoly p(num_z);
  if (i < 0 || i > num_z) throw IndexError("z index " + std::to_string(i) + " out of range");
  if (c.is_zero()) return p;
  Monomial m;
  m.set_t_exp(t_exp);
  if (i > 0) m.set_z_exp(i, z_exp);
  p.terms_.push_back({m, c});
  return p;
}

LaurentPoly LaurentPoly::from_terms(int num_z, std::vector<Term> terms) {
  LaurentPoly p(num_z);
  for (const auto& t : terms) {
    for (int k = num_z + 1; k <= kMaxZ; ++k) {
      if (t.mono.z_exp(k) != 0) throw DimensionError("term uses a z variable beyond num_z");
    }
  }
  canonicalize(terms);
  p.terms_ = std::move(terms);
  return p;
}

bool LaurentPoly::is_t_polynomial() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.mono.t_exp() >= 0; });
}

void LaurentPoly::check_same_ring(const LaurentPoly& o) const {
  if (num_z_ != o.num_z_) {
    throw DimensionError("ring mismatch: " + std::to_string(num_z_) + " vs " +
                         std::to_string(o.num_z_) + " z variables");
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_same_ring(o);
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, [](const Coeff& x, const Coeff& y) { return Coeff(x + y); });
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_same_ring(o);
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, [](const Coeff& x, const Coeff& y) { return Coeff(x - y); });
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_same_ring(b);
  LaurentPoly r(a.num_z_);
  if (a.is_zero() || b.is_zero()) return r;
  if (b.size() == 1) return a.mul_term(b.terms_[0].mono, b.terms_[0].coeff);
  if (a.size() == 1) return b.mul_term(a.terms_[0].mono, a.terms_[0].coeff);
  std::vector<Term> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) prod.push_back({x.mono * y.mono, x.coeff * y.coeff});
  }
  canonicalize(prod);
  r.terms_ = std::move(prod);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::mul_term(const Monomial& m, const Coeff& c) const {
  LaurentPoly r(num_z_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the order of a group-compatible total order.
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (k > 0) out += " + ";
    const auto& t = terms_[k];
    out += t.coeff.str();
    if (t.mono.t_exp() != 0) out += "*t^" + std::to_string(t.mono.t_exp());
    for (int i = 1; i <= num_z_; ++i) {
      if (t.mono.z_exp(i) != 0) {
        out += "*z" + std::to_string(i) + "^" + std::to_string(t.mono.z_exp(i));
      }
    }
  }
  return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text, int num_z) {
  LaurentPoly p(num_z);
  text = trim(text);
  if (text.empty()) throw ParseError("empty polynomial text");
  if (text == "0") return p;
  std::vector<Term> terms;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(" + ", pos);
    std::string_view chunk = trim(text.substr(pos, next == std::string_view::npos ? text.npos : next - pos));
    if (chunk.empty()) throw ParseError("empty term in '" + std::string(text) + "'");
    Term term{Monomial{}, Coeff(1)};
    bool first = true;
    std::size_t fpos = 0;
    while (fpos <= chunk.size()) {
      std::size_t star = chunk.find('*', fpos);
      std::string_view factor = chunk.substr(fpos, star == std::string_view::npos ? chunk.npos : star - fpos);
      if (factor.empty()) throw ParseError("empty factor in '" + std::string(chunk) + "'");
      char head = factor.front();
      if (head == 't' || head == 'z') {
        std::size_t caret = factor.find('^');
        std::string_view name = factor.substr(0, caret);
        int e = caret == std::string_view::npos ? 1 : parse_int(factor.substr(caret + 1), chunk);
        if (name == "t") {
          term.mono.set_t_exp(term.mono.t_exp() + e);
        } else {
          int i = parse_int(name.substr(1), chunk);
          if (i < 1 || i > num_z) throw ParseError("variable " + std::string(name) + " out of range");
          term.mono.set_z_exp(i, term.mono.z_exp(i) + e);
        }
      } else if (first) {
        try {
          term.coeff = Coeff(std::string(factor));
        } catch (const std::exception&) {
          throw ParseError("bad coefficient '" + std::string(factor) + "'");
        }
      } else {
        throw ParseError("unexpected factor '" + std::string(factor) + "'");
      }
      first = false;
      if (star == std::string_view::npos) break;
      fpos = star + 1;
    }
    terms.push_back(std::move(term));
    if (next == std::string_view::npos) break;
    pos = next + 3;
  }
  return from_terms(num_z, std::move(terms));
}

std::size_t LaurentPoly::hash() const {
  std::size_t seed = std::hash<int>{}(num_z_);
  for (const auto& t : terms_) {
    hash_combine(seed, t.mono.hash());
    hash_combine(seed, std::hash<std::string>{}(t.coeff.str()));
  }
  return seed;
}

LaurentPoly monomial(int num_z, const Coeff& coeff, int t_exp, std::span<const int> z_exps) {
  if (static_cast<int>(z_exps.size()) != num_z) {
    throw DimensionError("monomial: expected " + std::to_string(num_z) + " z exponents, got " +
                         std::to_string(z_exps.size()));
  }
  LaurentPoly p = LaurentPoly::term(num_z, coeff, t_exp);
  if (p.is_zero()) return p;
  Monomial m;
  for (int i = 1; i <= num_z; ++i) m.set_z_exp(i, z_exps[static_cast<std::size_t>(i - 1)]);
  return p.mul_term(m, 1);
}

LaurentPoly swap_z(const LaurentPoly& p, int i) {
  if (i < 1 || i >= p.num_z()) {
    throw IndexError("swap_z: index " + std::to_string(i) + " outside 1.." + std::to_string(p.num_z() - 1));
  }
  std::vector<Term> terms = p.terms();
  for (auto& t : terms) {
    int a = t.mono.z_exp(i);
    t.mono.set_z_exp(i, t.mono.z_exp(i + 1));
    t.mono.set_z_exp(i + 1, a);
  }
  return LaurentPoly::from_terms(p.num_z(), std::move(terms));
}

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& d) {
  if (p.num_z() != d.num_z()) throw DimensionError("exact_div: ring mismatch");
  if (d.is_zero()) throw Error("exact_div: division by zero");
  const int num_z = p.num_z();
  if (p.is_zero()) return LaurentPoly(num_z);

  // Every exponent of an exact quotient lies in [min_p - min_d, max_p - max_d]
  // slot by slot, which bounds the search and guarantees termination.
  std::array<int, kSlots> lo{}, hi{};
  auto slot = [](const Monomial& m, std::size_t k) {
    return k == 0 ? m.t_exp() : m.z_exp(static_cast<int>(k));
  };
  for (std::size_t k = 0; k < kSlots; ++k) {
    int pmin = std::numeric_limits<int>::max(), pmax = std::numeric_limits<int>::min();
    int dmin = pmin, dmax = pmax;
    for (const auto& t : p.terms()) {
      pmin = std::min(pmin, slot(t.mono, k));
      pmax = std::max(pmax, slot(t.mono, k));
    }
    for (const auto& t : d.terms()) {
      dmin = std::min(dmin, slot(t.mono, k));
      dmax = std::max(dmax, slot(t.mono, k));
    }
    lo[k] = pmin - dmin;
    hi[k] = pmax - dmax;
  }

  const Term& lead = d.leading();
  LaurentPoly rem = p;
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const Term& lt = rem.leading();
    Monomial qm = lt.mono / lead.mono;
    bool in_box = true;
    for (std::size_t k = 0; k < kSlots && in_box; ++k) {
      int e = slot(qm, k);
      in_box = lo[k] <= e && e <= hi[k];
    }
    Coeff qc, r;
    boost::multiprecision::divide_qr(lt.coeff, lead.coeff, qc, r);
    if (!in_box || !r.is_zero()) {
      throw ExactnessError("exact_div: (" + p.to_string() + ") is not divisible by (" +
                               d.to_string() + ")",
                           rem);
    }
    rem -= d.mul_term(qm, qc);
    quotient.push_back({qm, std::move(qc)});
  }
  return LaurentPoly::from_terms(num_z, std::move(quotient));
}

LaurentPoly divided_diff(int k, int i, const LaurentPoly& p) {
  const int n = p.num_z();
  if (i < 1 || i >= n) {
    throw IndexError("divided_diff: index " + std::to_string(i) + " outside 1.." + std::to_string(n - 1));
  }
  if (k < 1 || k > 4) throw IndexError("divided_diff: operator id must be 1..4");
  const LaurentPoly zi = LaurentPoly::var_z(n, i);
  const LaurentPoly zj = LaurentPoly::var_z(n, i + 1);
  const LaurentPoly sp = swap_z(p, i);
  const LaurentPoly& a = (k == 1 || k == 2) ? zi : zj;
  const LaurentPoly& b = (k == 1 || k == 3) ? zi : zj;
  LaurentPoly numer = a * p - b * sp;
  return exact_div(numer, zi - zj);
}

LaurentPoly t_geometric(int num_z, int n) {
  std::vector<Term> terms;
  for (int e = 0; e <= n; ++e) {
    Monomial m;
    m.set_t_exp(e);
    terms.push_back({m, 1});
  }
  return LaurentPoly::from_terms(num_z, std::move(terms));
}

LaurentPoly z_product_power(int num_z, int e) {
  std::vector<int> exps(static_cast<std::size_t>(num_z), e);
  return monomial(num_z, 1, 0, exps);
}

}  // namespace bicolor
