#include "bicolor/lattice.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <map>
#include <sstream>

#include "bicolor/parallel.hpp"

namespace bicolor {

void SystemSpec::validate() const {
  if (r < 1 || r > kMaxZ) {
    throw DimensionError("r must be in 1.." + std::to_string(kMaxZ) + ", got " + std::to_string(r));
  }
  if (N < 1) throw InvariantError("N must be positive");
  if (static_cast<int>(lambda.size()) != r) {
    throw InvariantError("lambda must have length r = " + std::to_string(r));
  }
  for (int k = 0; k < r; ++k) {
    if (lambda[static_cast<std::size_t>(k)] < 0) throw InvariantError("lambda entries must be >= 0");
    if (k > 0 && lambda[static_cast<std::size_t>(k)] > lambda[static_cast<std::size_t>(k - 1)]) {
      throw InvariantError("lambda must be weakly decreasing");
    }
  }
  if (lambda[0] >= N) throw InvariantError("lambda_1 must be smaller than N");
  for (const Perm* w : {&w1, &w2, &w3, &w4}) {
    if (w->degree() != r) throw DimensionError("boundary permutations must have degree r");
  }
}

void Boundary::validate() const {
  if (rows < 1 || rows > kMaxZ) throw DimensionError("row count out of range");
  if (N < 1 || colors < 1 || dolors < 1) throw InvariantError("grid dimensions must be positive");
  if (static_cast<int>(right.size()) != rows || static_cast<int>(left.size()) != rows) {
    throw DimensionError("side boundaries must have one spin per row");
  }
  if (static_cast<int>(top.size()) != N) throw DimensionError("top boundary must have N contents");
  for (const auto& c : top) {
    if (c.colors() != colors || c.dolors() != dolors) throw DimensionError("top content shape mismatch");
  }
  for (const auto* side : {&right, &left}) {
    for (Spin x : *side) {
      int bound = x.is_color() ? colors : dolors;
      if (x.index < 1 || x.index > bound) throw IndexError("boundary spin out of range");
    }
  }
}

std::vector<EdgeContent> top_boundary(const SystemSpec& spec) {
  spec.validate();
  const int r = spec.r;
  const Perm w0 = Perm::longest(r);
  const Perm w3inv = spec.w3.inverse();
  const Perm w4inv = spec.w4.inverse();
  std::vector<EdgeContent> top(static_cast<std::size_t>(spec.N), EdgeContent(r, r));
  for (int i = 1; i <= r; ++i) {
    BosonType b{w3inv(i), w4inv(w0(i))};
    top[static_cast<std::size_t>(spec.lambda[static_cast<std::size_t>(i - 1)])].add(b);
  }
  return top;
}

Boundary system_boundary(const SystemSpec& spec) {
  Boundary b;
  b.rows = spec.r;
  b.N = spec.N;
  b.colors = spec.r;
  b.dolors = spec.r;
  b.top = top_boundary(spec);
  const Perm w1inv = spec.w1.inverse();
  const Perm w2inv = spec.w2.inverse();
  for (int i = 1; i <= spec.r; ++i) {
    b.right.push_back(Spin::color(w1inv(i)));
    b.left.push_back(Spin::dolor(w2inv(i)));
  }
  return b;
}

namespace {

// Completions of one fused vertex in the one-variable ring, cached by
// (top content, right spin).
class VertexCache {
 public:
  struct Entry {
    Spin left;
    EdgeContent bottom;
    LaurentPoly weight;  // in z_1; embed into the row afterwards
  };

  const std::vector<Entry>& get(const EdgeContent& top, Spin right) {
    auto key = std::make_pair(top.counts(), right);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    std::vector<Entry> entries;
    for (auto& c : fused_completions(top, right, 1, 1)) {
      entries.push_back({c.left, std::move(c.bottom), std::move(c.weight)});
    }
    return cache_.emplace(std::move(key), std::move(entries)).first->second;
  }

 private:
  std::map<std::pair<std::vector<int>, Spin>, std::vector<Entry>> cache_;
};

using Layer = std::vector<EdgeContent>;

// Depth-first completion of one row. `visit(spins, below, weights)` is called
// for every admissible row; weights[j] points at the one-variable weight of
// column j. When `fixed_below` is given the bottom contents must match it.
template <typename Visit>
void row_dfs(const Boundary& b, VertexCache& cache, int row, const Layer& above,
             const Layer* fixed_below, Visit&& visit) {
  const int N = b.N;
  const bool last = row == b.rows;
  std::vector<Spin> spins(static_cast<std::size_t>(N) + 1);
  Layer below(static_cast<std::size_t>(N));
  std::vector<const LaurentPoly*> weights(static_cast<std::size_t>(N));
  spins[0] = b.right[static_cast<std::size_t>(row - 1)];
  const Spin target = b.left[static_cast<std::size_t>(row - 1)];

  auto rec = [&](auto&& self, int j) -> void {
    if (j == N) {
      if (spins[static_cast<std::size_t>(N)] == target) visit(spins, below, weights);
      return;
    }
    const auto& options = cache.get(above[static_cast<std::size_t>(j)], spins[static_cast<std::size_t>(j)]);
    for (const auto& e : options) {
      if (fixed_below) {
        if (e.bottom != (*fixed_below)[static_cast<std::size_t>(j)]) continue;
      } else if (last && !e.bottom.empty()) {
        continue;
      }
      spins[static_cast<std::size_t>(j) + 1] = e.left;
      below[static_cast<std::size_t>(j)] = e.bottom;
      weights[static_cast<std::size_t>(j)] = &e.weight;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
}

LaurentPoly product_one_var(const std::vector<const LaurentPoly*>& ws) {
  LaurentPoly p = LaurentPoly::one(1);
  for (const auto* w : ws) p *= *w;
  return p;
}

void enumerate_from(const Boundary& b, VertexCache& cache, int row, State& st, std::vector<State>& out) {
  if (row > b.rows) {
    out.push_back(st);
    return;
  }
  const Layer above = st.vcontent[static_cast<std::size_t>(row - 1)];
  row_dfs(b, cache, row, above, nullptr,
          [&](const std::vector<Spin>& spins, const Layer& below, const std::vector<const LaurentPoly*>&) {
            st.hspin[static_cast<std::size_t>(row - 1)] = spins;
            st.vcontent[static_cast<std::size_t>(row)] = below;
            enumerate_from(b, cache, row + 1, st, out);
          });
}

State empty_state(const Boundary& b) {
  State st;
  st.vcontent.assign(static_cast<std::size_t>(b.rows) + 1,
                     Layer(static_cast<std::size_t>(b.N), EdgeContent(b.colors, b.dolors)));
  st.vcontent[0] = b.top;
  st.hspin.assign(static_cast<std::size_t>(b.rows), std::vector<Spin>(static_cast<std::size_t>(b.N) + 1));
  return st;
}

}  // namespace

FusedConfig vertex_at(const State& st, int i, int j) {
  FusedConfig cfg;
  cfg.row = i;
  cfg.right = st.hspin[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
  cfg.left = st.hspin[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j) + 1];
  cfg.top = st.vcontent[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
  cfg.bottom = st.vcontent[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return cfg;
}

void check_state(const State& st, const Boundary& b) {
  b.validate();
  if (st.vcontent.size() != static_cast<std::size_t>(b.rows) + 1 ||
      st.hspin.size() != static_cast<std::size_t>(b.rows)) {
    throw AdmissibilityError("state has the wrong number of layers or rows");
  }
  for (const auto& layer : st.vcontent) {
    if (layer.size() != static_cast<std::size_t>(b.N)) throw AdmissibilityError("layer has the wrong width");
    for (const auto& c : layer) {
      if (c.colors() != b.colors || c.dolors() != b.dolors) throw AdmissibilityError("content shape mismatch");
    }
  }
  if (st.vcontent[0] != b.top) throw AdmissibilityError("top layer differs from the boundary");
  for (const auto& c : st.vcontent[static_cast<std::size_t>(b.rows)]) {
    if (!c.empty()) throw AdmissibilityError("bottom layer must be empty");
  }
  for (int i = 1; i <= b.rows; ++i) {
    const auto& row = st.hspin[static_cast<std::size_t>(i - 1)];
    if (row.size() != static_cast<std::size_t>(b.N) + 1) throw AdmissibilityError("row has the wrong width");
    if (row.front() != b.right[static_cast<std::size_t>(i - 1)] ||
        row.back() != b.left[static_cast<std::size_t>(i - 1)]) {
      throw AdmissibilityError("row " + std::to_string(i) + " side spins differ from the boundary");
    }
    for (int j = 0; j < b.N; ++j) {
      FusedConfig cfg = vertex_at(st, i, j);
      cfg.row = 1;
      if (fused_weight(cfg, 1).is_zero()) {
        throw AdmissibilityError("vertex (row " + std::to_string(i) + ", column " + std::to_string(j) +
                                 ") is inadmissible");
      }
    }
  }
}

std::vector<State> enumerate_states(const Boundary& b, int jobs) {
  b.validate();
  State st = empty_state(b);
  if (jobs <= 1) {
    VertexCache cache;
    std::vector<State> out;
    enumerate_from(b, cache, 1, st, out);
    return out;
  }
  // Fan out over the admissible first rows; concatenating in order keeps the
  // sequential depth-first order.
  std::vector<State> seeds;
  {
    VertexCache cache;
    row_dfs(b, cache, 1, b.top, nullptr,
            [&](const std::vector<Spin>& spins, const Layer& below, const std::vector<const LaurentPoly*>&) {
              State s = st;
              s.hspin[0] = spins;
              s.vcontent[1] = below;
              seeds.push_back(std::move(s));
            });
  }
  std::vector<std::vector<State>> parts(seeds.size());
  parallel_for(seeds.size(), jobs, [&](std::size_t k) {
    VertexCache cache;
    enumerate_from(b, cache, 2, seeds[k], parts[k]);
  });
  std::vector<State> out;
  for (auto& p : parts) {
    for (auto& s : p) out.push_back(std::move(s));
  }
  return out;
}

std::vector<State> enumerate_states(const SystemSpec& spec, int jobs) {
  return enumerate_states(system_boundary(spec), jobs);
}

namespace {

// Row-transfer recursion: value(row, layer above) summed over completions.
template <typename Value, typename Combine, typename Unit>
Value transfer(const Boundary& b, Combine&& combine, Unit&& unit) {
  b.validate();
  VertexCache cache;
  std::vector<std::map<Layer, Value>> memo(static_cast<std::size_t>(b.rows) + 2);
  auto rec = [&](auto&& self, int row, const Layer& above) -> Value {
    if (row > b.rows) return unit();
    auto& m = memo[static_cast<std::size_t>(row)];
    auto it = m.find(above);
    if (it != m.end()) return it->second;
    // Group row completions by the layer they leave below.
    std::map<Layer, std::vector<std::vector<const LaurentPoly*>>> by_below;
    row_dfs(b, cache, row, above, nullptr,
            [&](const std::vector<Spin>&, const Layer& below, const std::vector<const LaurentPoly*>& ws) {
              by_below[below].push_back(ws);
            });
    Value total = combine(row, by_below, self);
    m.emplace(above, total);
    return total;
  };
  return rec(rec, 1, b.top);
}

}  // namespace

Coeff count_states(const Boundary& b) {
  return transfer<Coeff>(
      b,
      [&](int row, const auto& by_below, auto&& self) {
        Coeff total = 0;
        for (const auto& [below, rows] : by_below) total += Coeff(rows.size()) * self(self, row + 1, below);
        return total;
      },
      [] { return Coeff(1); });
}

Coeff count_states(const SystemSpec& spec) { return count_states(system_boundary(spec)); }

LaurentPoly partition_function(const Boundary& b) {
  const int nz = b.rows;
  return transfer<LaurentPoly>(
      b,
      [&](int row, const auto& by_below, auto&& self) {
        LaurentPoly total(nz);
        for (const auto& [below, rows] : by_below) {
          LaurentPoly rest = self(self, row + 1, below);
          if (rest.is_zero()) continue;
          LaurentPoly row_sum(1);
          for (const auto& ws : rows) row_sum += product_one_var(ws);
          total += embed_row(row_sum, row, nz) * rest;
        }
        return total;
      },
      [&] { return LaurentPoly::one(nz); });
}

LaurentPoly partition_function(const SystemSpec& spec) { return partition_function(system_boundary(spec)); }

LaurentPoly state_weight(const State& st, const Boundary& b) {
  check_state(st, b);
  LaurentPoly w = LaurentPoly::one(b.rows);
  for (int i = 1; i <= b.rows; ++i) {
    LaurentPoly row = LaurentPoly::one(1);
    for (int j = 0; j < b.N; ++j) {
      FusedConfig cfg = vertex_at(st, i, j);
      cfg.row = 1;
      row *= fused_weight(cfg, 1);
    }
    w *= embed_row(row, i, b.rows);
  }
  return w;
}

LaurentPoly state_weight(const State& st, const SystemSpec& spec) {
  return state_weight(st, system_boundary(spec));
}

LaurentPoly partition_function_by_enumeration(const Boundary& b) {
  LaurentPoly z(b.rows);
  for (const auto& st : enumerate_states(b)) z += state_weight(st, b);
  return z;
}

std::vector<State> complete_horizontal(const Boundary& b, const std::vector<std::vector<EdgeContent>>& vcontent) {
  b.validate();
  if (vcontent.size() != static_cast<std::size_t>(b.rows) + 1) {
    throw DimensionError("vertical contents must have rows + 1 layers");
  }
  for (const auto& layer : vcontent) {
    if (layer.size() != static_cast<std::size_t>(b.N)) throw DimensionError("layer has the wrong width");
  }
  if (vcontent[0] != b.top) return {};
  VertexCache cache;
  std::vector<std::vector<std::vector<Spin>>> per_row(static_cast<std::size_t>(b.rows));
  for (int i = 1; i <= b.rows; ++i) {
    row_dfs(b, cache, i, vcontent[static_cast<std::size_t>(i - 1)], &vcontent[static_cast<std::size_t>(i)],
            [&](const std::vector<Spin>& spins, const Layer&, const std::vector<const LaurentPoly*>&) {
              per_row[static_cast<std::size_t>(i - 1)].push_back(spins);
            });
    if (per_row[static_cast<std::size_t>(i - 1)].empty()) return {};
  }
  std::vector<State> out;
  State st;
  st.vcontent = vcontent;
  st.hspin.resize(static_cast<std::size_t>(b.rows));
  auto rec = [&](auto&& self, int i) -> void {
    if (i > b.rows) {
      out.push_back(st);
      return;
    }
    for (const auto& spins : per_row[static_cast<std::size_t>(i - 1)]) {
      st.hspin[static_cast<std::size_t>(i - 1)] = spins;
      self(self, i + 1);
    }
  };
  rec(rec, 1);
  return out;
}

bool has_merge_vertex(const State& st, const Boundary& b) {
  for (int i = 1; i <= b.rows; ++i) {
    for (int j = 0; j < b.N; ++j) {
      FusedConfig cfg = vertex_at(st, i, j);
      for (int k = 1; k <= b.colors * b.dolors; ++k) {
        if (cfg.bottom.count_at_rank(k) == cfg.top.count_at_rank(k) + 1) return true;
      }
    }
  }
  return false;
}

std::string render_text(const State& st, const Boundary& b) {
  check_state(st, b);
  std::ostringstream out;
  out << "grid rows=" << b.rows << " N=" << b.N << " colors=" << b.colors << " dolors=" << b.dolors << "\n";
  auto layer_line = [&](int k) {
    out << "layer " << k << ":";
    for (int j = b.N - 1; j >= 0; --j) {
      out << " [" << j << "]" << st.vcontent[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)].to_string();
    }
    out << "\n";
  };
  for (int i = 1; i <= b.rows; ++i) {
    layer_line(i - 1);
    out << "row " << i << " z" << i << ":";
    const auto& spins = st.hspin[static_cast<std::size_t>(i - 1)];
    for (int j = b.N; j >= 0; --j) {
      out << " " << spins[static_cast<std::size_t>(j)].to_string();
      if (j > 0) out << " <" << (j - 1) << ">";
    }
    out << "\n";
  }
  layer_line(b.rows);
  return out.str();
}

namespace {

constexpr std::array<const char*, 8> kPalette = {"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e",
                                                 "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

}  // namespace

std::string render_svg(const State& st, const Boundary& b) {
  check_state(st, b);
  for (int c = 1; c <= b.colors; ++c) {
    int n = 0;
    for (const auto& e : b.top) n += e.color_total(c);
    if (n > 1) throw InvariantError("svg rendering needs every color to appear at most once");
  }
  for (int d = 1; d <= b.dolors; ++d) {
    int n = 0;
    for (const auto& e : b.top) n += e.dolor_total(d);
    if (n > 1) throw InvariantError("svg rendering needs every dolor to appear at most once");
  }
  const double cell = 80.0;
  const double width = (b.N + 1) * cell;
  const double height = (b.rows + 1) * cell;
  auto col_x = [&](int j) { return (b.N - j) * cell; };
  auto row_y = [&](int i) { return i * cell; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
      << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<g stroke=\"#cccccc\" stroke-width=\"1\">\n";
  for (int i = 1; i <= b.rows; ++i) {
    out << "<line x1=\"" << fmt(cell / 2) << "\" y1=\"" << fmt(row_y(i)) << "\" x2=\"" << fmt(width - cell / 2)
        << "\" y2=\"" << fmt(row_y(i)) << "\"/>\n";
  }
  for (int j = 0; j < b.N; ++j) {
    out << "<line x1=\"" << fmt(col_x(j)) << "\" y1=\"" << fmt(cell / 2) << "\" x2=\"" << fmt(col_x(j))
        << "\" y2=\"" << fmt(height - cell / 2) << "\"/>\n";
  }
  out << "</g>\n<g font-family=\"monospace\" font-size=\"11\" fill=\"#333333\">\n";
  for (int j = 0; j < b.N; ++j) {
    out << "<text x=\"" << fmt(col_x(j) - 4) << "\" y=\"" << fmt(height - 6) << "\">" << j << "</text>\n";
  }
  for (int i = 1; i <= b.rows; ++i) {
    out << "<text x=\"2\" y=\"" << fmt(row_y(i) - 4) << "\">" << b.left[static_cast<std::size_t>(i - 1)].to_string()
        << "</text>\n";
    out << "<text x=\"" << fmt(width - cell / 2 + 2) << "\" y=\"" << fmt(row_y(i) - 4) << "\">"
        << b.right[static_cast<std::size_t>(i - 1)].to_string() << "</text>\n";
  }
  out << "</g>\n";

  // Trace each particle: colors leave through the right side, dolors through
  // the left. A small per-index offset keeps shared edges readable.
  auto trace = [&](Spin p) {
    const bool color = p.is_color();
    const double off = (color ? -1.0 : 1.0) * (2.0 + 3.0 * p.index);
    auto has = [&](const EdgeContent& e) { return color ? e.color_total(p.index) > 0 : e.dolor_total(p.index) > 0; };
    int start = -1;
    for (int j = 0; j < b.N; ++j) {
      if (has(b.top[static_cast<std::size_t>(j)])) start = j;
    }
    if (start < 0) return std::string();
    std::vector<std::pair<double, double>> pts;
    int layer = 0, j = start;
    pts.emplace_back(col_x(j) + off, cell / 2);
    for (int guard = 0; guard < 4 * (b.rows + 1) * (b.N + 1); ++guard) {
      const int row = layer + 1;
      pts.emplace_back(col_x(j) + off, row_y(row) + off);
      if (has(st.vcontent[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)])) {
        layer = row;
        if (layer == b.rows) break;
        continue;
      }
      // Sideways along the row until the particle turns down again.
      const int step = color ? -1 : 1;
      int k = j;
      bool down = false;
      for (;;) {
        k += step;
        if (k < 0 || k >= b.N) {
          pts.emplace_back(color ? width - cell / 2 : cell / 2, row_y(row) + off);
          break;
        }
        pts.emplace_back(col_x(k) + off, row_y(row) + off);
        if (has(st.vcontent[static_cast<std::size_t>(row)][static_cast<std::size_t>(k)])) {
          down = true;
          break;
        }
      }
      if (!down) break;
      j = k;
      layer = row;
      if (layer == b.rows) break;
    }
    std::string d;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      d += (k ? " L " : "M ") + fmt(pts[k].first) + " " + fmt(pts[k].second);
    }
    std::string stroke = kPalette[static_cast<std::size_t>(p.index - 1) % kPalette.size()];
    std::string s = "<path d=\"" + d + "\" fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"3\"";
    if (!color) s += " stroke-dasharray=\"6 4\"";
    s += " data-particle=\"" + p.to_string() + "\"/>\n";
    return s;
  };
  for (int c = 1; c <= b.colors; ++c) out << trace(Spin::color(c));
  for (int d = 1; d <= b.dolors; ++d) out << trace(Spin::dolor(d));
  out << "</svg>\n";
  return out.str();
}

}  // namespace bicolor
