#include "bicolor/gt.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "bicolor/errors.hpp"

namespace bicolor {

namespace {

using Row = std::vector<GTEntry>;

std::string pos(int i, int j) { return "row " + std::to_string(i) + " entry " + std::to_string(j); }

struct Checker {
  int s, r;
  std::vector<GTViolation>* out;

  void fail(int axiom, std::string where) const { out->push_back({axiom, std::move(where)}); }

  bool leq(const GTEntry& a, const GTEntry& b) const {
    return boson_rank({a.color, a.dolor}, s, r) <= boson_rank({b.color, b.dolor}, s, r);
  }

  // Conditions on a single row lambda^(i).
  void row(const Row& u, int i) const {
    for (std::size_t j = 0; j < u.size(); ++j) {
      const int jj = static_cast<int>(j) + 1;
      if (u[j].value < 0) fail(0, pos(i, jj) + ": negative value");
      if (u[j].color < 1 || u[j].color > s || u[j].dolor < 1 || u[j].dolor > r) {
        fail(0, pos(i, jj) + ": color or dolor out of range");
        return;
      }
    }
    for (std::size_t j = 0; j + 1 < u.size(); ++j) {
      const int jj = static_cast<int>(j) + 1;
      if (u[j].value < u[j + 1].value) fail(0, pos(i, jj) + ": row not weakly decreasing");
      if (u[j].value == u[j + 1].value && !leq(u[j], u[j + 1])) fail(4, pos(i, jj) + ": equal values out of order");
    }
  }

  // Conditions between u = lambda^(i) and l = lambda^(i-1).
  void pair(const Row& u, const Row& l, int i) const {
    const std::size_t n = u.size();
    for (std::size_t j = 0; j < l.size(); ++j) {
      const int jj = static_cast<int>(j) + 1;
      const std::string at = pos(i - 1, jj);
      if (l[j].value > u[j].value || l[j].value < u[j + 1].value) {
        fail(0, at + ": rows do not interleave");
        continue;
      }
      const std::size_t c_end = l[j].value > u[j + 1].value ? j + 1 : j + 2;
      bool found = false;
      for (std::size_t k = 0; k < c_end; ++k) found = found || u[k].color == l[j].color;
      if (!found) fail(1, at + ": color not available above");

      const std::size_t d_begin = u[j].value == l[j].value ? j : j + 1;
      found = false;
      for (std::size_t k = d_begin; k < n; ++k) found = found || u[k].dolor == l[j].dolor;
      if (!found) fail(2, at + ": dolor not available above");

      if (l[j].value == u[j + 1].value && !leq(l[j], u[j + 1])) fail(5, at + ": above-right entry is smaller");
      if (u[j].value == l[j].value && !leq(u[j], l[j])) fail(5, at + ": above-left entry is larger");
    }
    std::map<int, int> colors, dolors;
    for (auto& e : u) {
      ++colors[e.color];
      ++dolors[e.dolor];
    }
    for (auto& e : l) {
      --colors[e.color];
      --dolors[e.dolor];
    }
    for (auto& [c, d] : colors)
      if (d < 0) fail(3, "row " + std::to_string(i - 1) + ": color c" + std::to_string(c) + " appears more often");
    for (auto& [c, d] : dolors)
      if (d < 0) fail(3, "row " + std::to_string(i - 1) + ": dolor d" + std::to_string(c) + " appears more often");

    auto absent = [&](auto field) {
      std::vector<std::size_t> positions;
      for (std::size_t k = 0; k < n; ++k) {
        bool below = false;
        for (auto& e : l) below = below || field(e) == field(u[k]);
        if (!below) positions.push_back(k);
      }
      return positions;
    };
    const auto gone_c = absent([](const GTEntry& e) { return e.color; });
    const auto gone_d = absent([](const GTEntry& e) { return e.dolor; });
    for (std::size_t k : gone_c)
      for (std::size_t l_pos : gone_d)
        if (l_pos > k) fail(6, pos(i, static_cast<int>(k) + 1) + ": exiting dolor lies right of exiting color");
  }
};

Row top_row(const SystemSpec& spec) {
  const auto top = top_boundary(spec);
  Row out;
  for (int j = spec.N - 1; j >= 0; --j) {
    const EdgeContent& v = top[static_cast<std::size_t>(j)];
    for (int rank = 1; rank <= spec.r * spec.r; ++rank) {
      const BosonType b = boson_from_rank(rank, spec.r, spec.r);
      for (int k = 0; k < v.count_at_rank(rank); ++k) out.push_back({j, b.color, b.dolor});
    }
  }
  return out;
}

Row layer_row(const std::vector<EdgeContent>& layer, int s, int r) {
  Row out;
  for (std::size_t j = layer.size(); j-- > 0;) {
    for (int rank = 1; rank <= s * r; ++rank) {
      const BosonType b = boson_from_rank(rank, s, r);
      for (int k = 0; k < layer[j].count_at_rank(rank); ++k) out.push_back({static_cast<int>(j), b.color, b.dolor});
    }
  }
  return out;
}

// Multiset difference; false when `take` is not in `from`.
bool remove_one(std::vector<int>& from, int take) {
  auto it = std::find(from.begin(), from.end(), take);
  if (it == from.end()) return false;
  from.erase(it);
  return true;
}

}  // namespace

std::vector<std::vector<int>> TwoColoredGT::values() const {
  std::vector<std::vector<int>> out;
  for (auto& row : rows) {
    auto& v = out.emplace_back();
    for (auto& e : row) v.push_back(e.value);
  }
  return out;
}

std::vector<GTViolation> check_axioms(const TwoColoredGT& g, int s, int r) {
  const int n = g.size();
  for (int k = 0; k < n; ++k) {
    if (static_cast<int>(g.rows[static_cast<std::size_t>(k)].size()) != n - k) {
      throw InvariantError("pattern is not triangular: row " + std::to_string(k + 1) + " from the top has " +
                           std::to_string(g.rows[static_cast<std::size_t>(k)].size()) + " entries, expected " +
                           std::to_string(n - k));
    }
  }
  std::vector<GTViolation> out;
  Checker chk{s, r, &out};
  for (int i = n; i >= 1; --i) chk.row(g.row(i), i);
  if (!out.empty()) return out;
  for (int i = n; i >= 2; --i) chk.pair(g.row(i), g.row(i - 1), i);
  return out;
}

TwoColoredGT state_to_pattern(const State& st, const SystemSpec& spec) {
  const Boundary b = system_boundary(spec);
  check_state(st, b);
  TwoColoredGT g;
  for (int i = 1; i <= spec.r; ++i) g.rows.push_back(layer_row(st.vcontent[static_cast<std::size_t>(i - 1)], b.colors, b.dolors));
  return g;
}

State pattern_to_state(const TwoColoredGT& g, const SystemSpec& spec) {
  spec.validate();
  const int r = spec.r;
  if (g.size() != r) throw InvalidPatternError("pattern has " + std::to_string(g.size()) + " rows, expected " + std::to_string(r));
  if (g.rows[0] != top_row(spec)) throw InvalidPatternError("top row does not match the top boundary");
  std::vector<std::vector<EdgeContent>> vcontent(static_cast<std::size_t>(r + 1),
                                                 std::vector<EdgeContent>(static_cast<std::size_t>(spec.N), EdgeContent(r, r)));
  for (int k = 0; k < r; ++k) {
    const auto& row = g.rows[static_cast<std::size_t>(k)];
    if (static_cast<int>(row.size()) != r - k) throw InvalidPatternError("pattern is not triangular");
    for (auto& e : row) {
      if (e.value < 0 || e.value >= spec.N) throw InvalidPatternError("value " + std::to_string(e.value) + " outside the grid");
      if (e.color < 1 || e.color > r || e.dolor < 1 || e.dolor > r) throw InvalidPatternError("color or dolor out of range");
      vcontent[static_cast<std::size_t>(k)][static_cast<std::size_t>(e.value)].add({e.color, e.dolor});
    }
  }
  const auto states = complete_horizontal(system_boundary(spec), vcontent);
  if (states.size() != 1) {
    throw InvalidPatternError("pattern has " + std::to_string(states.size()) + " completions, expected exactly one");
  }
  return states[0];
}

std::vector<TwoColoredGT> enumerate_patterns(const SystemSpec& spec) {
  spec.validate();
  const int r = spec.r;
  const Perm w1_inv = spec.w1.inverse();
  const Perm w2_inv = spec.w2.inverse();
  std::vector<GTViolation> sink;
  Checker chk{r, r, &sink};

  TwoColoredGT cur;
  cur.rows.push_back(top_row(spec));
  std::vector<TwoColoredGT> out;

  // Lattice row i turns pattern row r-i+1 (cur.rows.back()) into row r-i.
  std::function<void(int)> grow = [&](int i) {
    if (i > r) {
      out.push_back(cur);
      return;
    }
    const Row u = cur.rows.back();
    std::vector<int> colors, dolors;
    for (auto& e : u) {
      colors.push_back(e.color);
      dolors.push_back(e.dolor);
    }
    if (!remove_one(colors, w1_inv(i)) || !remove_one(dolors, w2_inv(i))) return;
    if (i == r) {
      out.push_back(cur);
      return;
    }
    std::sort(colors.begin(), colors.end());
    std::sort(dolors.begin(), dolors.end());
    const std::size_t m = u.size() - 1;
    Row l(m);
    std::function<void(std::size_t)> values = [&](std::size_t j) {
      if (j == m) {
        std::vector<int> cs = colors;
        do {
          std::vector<int> ds = dolors;
          do {
            for (std::size_t k = 0; k < m; ++k) {
              l[k].color = cs[k];
              l[k].dolor = ds[k];
            }
            sink.clear();
            chk.row(l, r - i);
            chk.pair(u, l, r - i + 1);
            if (sink.empty()) {
              cur.rows.push_back(l);
              grow(i + 1);
              cur.rows.pop_back();
            }
          } while (std::next_permutation(ds.begin(), ds.end()));
        } while (std::next_permutation(cs.begin(), cs.end()));
        return;
      }
      for (int v = u[j + 1].value; v <= u[j].value; ++v) {
        l[j].value = v;
        values(j + 1);
      }
    };
    values(0);
  };
  grow(1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bicolor
