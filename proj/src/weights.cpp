#include "bicolor/weights.hpp"

#include <algorithm>
#include <charconv>

namespace bicolor {

namespace {

LaurentPoly t_power(int num_z, int n) { return LaurentPoly::term(num_z, 1, n); }

LaurentPoly one_minus_t_times(int num_z, int i, int z_exp = 1, int j = 0, int zj_exp = 0) {
  LaurentPoly z = LaurentPoly::term(num_z, 1, 0, i, z_exp);
  if (j != 0) z *= LaurentPoly::term(num_z, 1, 0, j, zj_exp);
  return z - z * LaurentPoly::var_t(num_z);
}

void check_boson(BosonType b, int s, int r) {
  if (b.color < 1 || b.color > s || b.dolor < 1 || b.dolor > r) {
    throw IndexError("boson (c" + std::to_string(b.color) + ",d" + std::to_string(b.dolor) +
                     ") outside " + std::to_string(s) + " colors, " + std::to_string(r) + " dolors");
  }
}

}  // namespace

std::string Spin::to_string() const {
  return (is_color() ? "c" : "d") + std::to_string(index);
}

Spin Spin::parse(std::string_view text) {
  if (text.size() < 2 || (text[0] != 'c' && text[0] != 'd')) {
    throw ParseError("bad spin '" + std::string(text) + "', expected cI or dJ");
  }
  int i = 0;
  auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), i);
  if (ec != std::errc() || ptr != text.data() + text.size() || i < 1) {
    throw ParseError("bad spin index in '" + std::string(text) + "'");
  }
  return text[0] == 'c' ? color(i) : dolor(i);
}

std::vector<Spin> all_spins(int s, int r) {
  std::vector<Spin> out;
  for (int c = 1; c <= s; ++c) out.push_back(Spin::color(c));
  for (int d = 1; d <= r; ++d) out.push_back(Spin::dolor(d));
  return out;
}

int boson_rank(BosonType b, int s, int r) {
  check_boson(b, s, r);
  return (r - b.dolor) * s + b.color;
}

BosonType boson_from_rank(int rank, int s, int r) {
  if (rank < 1 || rank > s * r) throw IndexError("boson rank out of range");
  return {(rank - 1) % s + 1, r - (rank - 1) / s};
}

BosonType boson_succ(BosonType b, int s, int r) {
  check_boson(b, s, r);
  if (b.color < s) return {b.color + 1, b.dolor};
  if (b.dolor > 1) return {1, b.dolor - 1};
  return {1, r};
}

bool boson_less(BosonType a, BosonType b) {
  return a.dolor > b.dolor || (a.dolor == b.dolor && a.color < b.color);
}

EdgeContent::EdgeContent(int s, int r) : s_(s), r_(r), counts_(static_cast<std::size_t>(s * r), 0) {
  if (s < 1 || r < 1) throw DimensionError("edge content needs at least one color and one dolor");
}

int EdgeContent::count(BosonType b) const { return count_at_rank(boson_rank(b, s_, r_)); }

void EdgeContent::set(BosonType b, int n) {
  if (n < 0) throw InvariantError("negative boson count");
  set_at_rank(boson_rank(b, s_, r_), n);
}

void EdgeContent::add(BosonType b, int n) { set(b, count(b) + n); }

int EdgeContent::total() const {
  int t = 0;
  for (int n : counts_) t += n;
  return t;
}

int EdgeContent::color_total(int c) const {
  int t = 0;
  for (int d = 1; d <= r_; ++d) t += count({c, d});
  return t;
}

int EdgeContent::dolor_total(int d) const {
  int t = 0;
  for (int c = 1; c <= s_; ++c) t += count({c, d});
  return t;
}

std::vector<std::pair<std::string, int>> EdgeContent::entries() const {
  std::vector<std::pair<std::string, int>> out;
  for (int k = 1; k <= s_ * r_; ++k) {
    if (count_at_rank(k) == 0) continue;
    BosonType b = boson_from_rank(k, s_, r_);
    out.emplace_back("c" + std::to_string(b.color) + ".d" + std::to_string(b.dolor), count_at_rank(k));
  }
  return out;
}

std::string EdgeContent::to_string() const {
  std::string s = "{";
  bool first = true;
  for (const auto& [key, n] : entries()) {
    if (!first) s += ",";
    s += key + ":" + std::to_string(n);
    first = false;
  }
  return s + "}";
}

std::vector<EdgeContent> all_contents(int s, int r, int nmax) {
  std::vector<EdgeContent> out;
  EdgeContent cur(s, r);
  const int slots = s * r;
  for (;;) {
    out.push_back(cur);
    int k = slots;
    while (k >= 1 && cur.count_at_rank(k) == nmax) {
      cur.set_at_rank(k, 0);
      --k;
    }
    if (k < 1) break;
    cur.set_at_rank(k, cur.count_at_rank(k) + 1);
  }
  return out;
}

LaurentPoly unfused_weight(const UnfusedConfig& cfg, int num_z) {
  const int c = cfg.boson.color;
  const int d = cfg.boson.dolor;
  const int n = cfg.top;
  LaurentPoly zero(num_z);
  if (cfg.top < 0 || cfg.bottom < 0) return zero;
  const LaurentPoly z = LaurentPoly::var_z(num_z, cfg.row);

  if (cfg.left == cfg.right) {
    if (cfg.top != cfg.bottom) return zero;
    if (cfg.left.is_dolor()) {
      const int x = cfg.left.index;
      if (x == d) return LaurentPoly::one(num_z);
      if (x < d) return c == 1 ? t_power(num_z, n) * z : t_power(num_z, n);
      return c == 1 ? z : LaurentPoly::one(num_z);
    }
    const int a = cfg.left.index;
    if (a > c) return LaurentPoly::one(num_z);
    if (a == c) return z;
    return t_power(num_z, n);
  }
  if (cfg.left == Spin::dolor(d) && cfg.right == Spin::color(c) && cfg.top == cfg.bottom + 1) {
    return t_geometric(num_z, cfg.bottom);
  }
  if (cfg.left == Spin::color(c) && cfg.right == Spin::dolor(d) && cfg.bottom == cfg.top + 1) {
    return one_minus_t_times(num_z, cfg.row);
  }
  return zero;
}

namespace {

void complete_from(int rank, Spin carried, const EdgeContent& top, EdgeContent& bottom,
                   const LaurentPoly& weight, int row, int num_z, const UnfusedWeightFn& fn,
                   std::vector<FusedCompletion>& out) {
  if (rank == 0) {
    out.push_back({carried, bottom, weight});
    return;
  }
  const int s = top.colors();
  const int r = top.dolors();
  const BosonType b = boson_from_rank(rank, s, r);
  const int n = top.count_at_rank(rank);
  auto step = [&](Spin left, int below) {
    UnfusedConfig cfg{b, row, left, carried, n, below};
    LaurentPoly w = fn ? fn(cfg, num_z) : unfused_weight(cfg, num_z);
    if (w.is_zero()) return;
    bottom.set_at_rank(rank, below);
    complete_from(rank - 1, left, top, bottom, weight * w, row, num_z, fn, out);
    bottom.set_at_rank(rank, 0);
  };
  step(carried, n);
  if (carried == Spin::color(b.color) && n >= 1) step(Spin::dolor(b.dolor), n - 1);
  if (carried == Spin::dolor(b.dolor)) step(Spin::color(b.color), n + 1);
}

}  // namespace

std::vector<FusedCompletion> fused_completions(const EdgeContent& top, Spin right, int row,
                                               int num_z, const UnfusedWeightFn& unfused) {
  std::vector<FusedCompletion> out;
  EdgeContent bottom(top.colors(), top.dolors());
  complete_from(top.colors() * top.dolors(), right, top, bottom, LaurentPoly::one(num_z), row,
                num_z, unfused, out);
  std::stable_sort(out.begin(), out.end(), [](const FusedCompletion& a, const FusedCompletion& b) {
    return a.bottom < b.bottom;
  });
  return out;
}

LaurentPoly fused_weight(const FusedConfig& cfg, int num_z, const UnfusedWeightFn& unfused) {
  const int s = cfg.top.colors();
  const int r = cfg.top.dolors();
  if (cfg.bottom.colors() != s || cfg.bottom.dolors() != r) {
    throw DimensionError("fused_weight: top and bottom contents have different shapes");
  }
  LaurentPoly w = LaurentPoly::one(num_z);
  Spin carried = cfg.right;
  for (int rank = s * r; rank >= 1; --rank) {
    const BosonType b = boson_from_rank(rank, s, r);
    const int n = cfg.top.count_at_rank(rank);
    const int m = cfg.bottom.count_at_rank(rank);
    Spin left = carried;
    if (m == n - 1) {
      left = Spin::dolor(b.dolor);
    } else if (m == n + 1) {
      left = Spin::color(b.color);
    } else if (m != n) {
      return LaurentPoly(num_z);
    }
    UnfusedConfig u{b, cfg.row, left, carried, n, m};
    LaurentPoly f = unfused ? unfused(u, num_z) : unfused_weight(u, num_z);
    if (f.is_zero()) return f;
    w *= f;
    carried = left;
  }
  if (carried != cfg.left) return LaurentPoly(num_z);
  return w;
}

LaurentPoly fused_R_weight(const RConfig& cfg, int num_z) {
  const LaurentPoly zi = LaurentPoly::var_z(num_z, cfg.zi);
  const LaurentPoly zj = LaurentPoly::var_z(num_z, cfg.zj);
  const LaurentPoly t = LaurentPoly::var_t(num_z);
  if (cfg.nw == cfg.sw && cfg.sw == cfg.ne && cfg.ne == cfg.se) return zi - t * zj;

  if (cfg.sw == cfg.ne && cfg.nw == cfg.se) {
    const Spin a = cfg.sw, b = cfg.nw;
    bool with_t;
    if (a.kind == b.kind) {
      with_t = a.is_color() ? a.index < b.index : a.index > b.index;
    } else {
      with_t = a.is_dolor();
    }
    return with_t ? t * (zi - zj) : zi - zj;
  }
  if (cfg.nw == cfg.ne && cfg.sw == cfg.se) {
    const Spin a = cfg.sw, b = cfg.nw;
    bool on_i = a.kind == b.kind ? a.index < b.index : a.is_color();
    return on_i ? one_minus_t_times(num_z, cfg.zi) : one_minus_t_times(num_z, cfg.zj);
  }
  return LaurentPoly(num_z);
}

LaurentPoly unfused_R_weight(const RConfig& cfg, BosonType cd, int num_z) {
  const LaurentPoly zi = LaurentPoly::var_z(num_z, cfg.zi);
  const LaurentPoly zj = LaurentPoly::var_z(num_z, cfg.zj);
  const LaurentPoly t = LaurentPoly::var_t(num_z);
  const int c = cd.color;
  const int d = cd.dolor;
  if (cfg.nw == cfg.sw && cfg.sw == cfg.ne && cfg.ne == cfg.se) return zi - t * zj;

  if (cfg.sw == cfg.ne && cfg.nw == cfg.se) {
    const Spin a = cfg.sw, b = cfg.nw;
    bool with_t;
    if (a.kind == b.kind) {
      with_t = a.is_color() ? a.index < b.index : a.index > b.index;
    } else {
      with_t = a.is_dolor();
    }
    return with_t ? t * (zi - zj) : zi - zj;
  }
  if (!(cfg.nw == cfg.ne && cfg.sw == cfg.se)) return LaurentPoly(num_z);

  const Spin top = cfg.nw, bottom = cfg.sw;
  auto on_i = [&](bool i_side) {
    return i_side ? one_minus_t_times(num_z, cfg.zi) : one_minus_t_times(num_z, cfg.zj);
  };
  if (top.is_color() && bottom.is_color()) {
    const int a = bottom.index, b = top.index;
    const bool zi_case = (c <= a && a < b) || (a < b && b < c) || (b < c && c <= a);
    return on_i(zi_case);
  }
  if (top.is_dolor() && bottom.is_dolor()) {
    const int x = bottom.index, y = top.index;
    const bool zi_case = (x < y && y < d) || (d < x && x < y) || (y < d && d < x) ||
                         (y == d && c == 1) || (x == d && c > 1);
    return on_i(zi_case);
  }
  // Mixed horizontal pass: one color and one dolor.
  const int a = top.is_color() ? top.index : bottom.index;
  const int x = top.is_dolor() ? top.index : bottom.index;
  const bool plain = c == 1 || a == 1 || c > a || x == d;
  if (top.is_dolor()) {
    return plain ? on_i(true) : one_minus_t_times(num_z, cfg.zi, 2, cfg.zj, -1);
  }
  return plain ? on_i(false) : one_minus_t_times(num_z, cfg.zj, 2, cfg.zi, -1);
}

LaurentPoly embed_row(const LaurentPoly& p, int row, int num_z) {
  if (p.num_z() != 1) throw DimensionError("embed_row expects a one-variable polynomial");
  if (row < 1 || row > num_z) throw IndexError("embed_row: row out of range");
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m;
    m.set_t_exp(t.mono.t_exp());
    m.set_z_exp(row, t.mono.z_exp(1));
    terms.push_back({m, t.coeff});
  }
  return LaurentPoly::from_terms(num_z, std::move(terms));
}

}  // namespace bicolor
