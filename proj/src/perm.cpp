#include "bicolor/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace bicolor {

namespace {

void check_degrees(const Perm& a, const Perm& b, const char* op) {
  if (a.degree() != b.degree()) {
    throw DimensionError(std::string(op) + ": degree mismatch " + std::to_string(a.degree()) +
                         " vs " + std::to_string(b.degree()));
  }
}

}  // namespace

Perm::Perm(int r) {
  if (r < 1) throw DimensionError("permutation degree must be positive");
  w_.resize(static_cast<std::size_t>(r));
  std::iota(w_.begin(), w_.end(), 1);
}

Perm::Perm(std::vector<int> one_line) : w_(std::move(one_line)) {
  const int r = static_cast<int>(w_.size());
  if (r < 1) throw DimensionError("permutation degree must be positive");
  std::vector<bool> seen(static_cast<std::size_t>(r) + 1, false);
  for (int v : w_) {
    if (v < 1 || v > r || seen[static_cast<std::size_t>(v)]) {
      throw InvariantError("not a permutation of 1.." + std::to_string(r));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Perm Perm::longest(int r) {
  Perm p(r);
  std::reverse(p.w_.begin(), p.w_.end());
  return p;
}

Perm Perm::simple(int i, int r) {
  if (i < 1 || i >= r) {
    throw IndexError("simple reflection index " + std::to_string(i) + " outside 1.." +
                     std::to_string(r - 1));
  }
  Perm p(r);
  std::swap(p.w_[static_cast<std::size_t>(i - 1)], p.w_[static_cast<std::size_t>(i)]);
  return p;
}

Perm Perm::inverse() const {
  std::vector<int> inv(w_.size());
  for (std::size_t k = 0; k < w_.size(); ++k) inv[static_cast<std::size_t>(w_[k] - 1)] = static_cast<int>(k) + 1;
  return Perm(std::move(inv));
}

int Perm::length() const {
  int inv = 0;
  for (std::size_t a = 0; a < w_.size(); ++a) {
    for (std::size_t b = a + 1; b < w_.size(); ++b) inv += w_[a] > w_[b];
  }
  return inv;
}

bool Perm::is_identity() const {
  for (std::size_t k = 0; k < w_.size(); ++k) {
    if (w_[k] != static_cast<int>(k) + 1) return false;
  }
  return true;
}

bool Perm::left_descent(int i) const {
  if (i < 1 || i >= degree()) throw IndexError("descent index out of range");
  int pi = 0, pj = 0;
  for (int k = 1; k <= degree(); ++k) {
    if ((*this)(k) == i) pi = k;
    if ((*this)(k) == i + 1) pj = k;
  }
  return pi > pj;
}

bool Perm::right_descent(int i) const {
  if (i < 1 || i >= degree()) throw IndexError("descent index out of range");
  return (*this)(i) > (*this)(i + 1);
}

std::string Perm::to_one_line_string() const {
  std::string s = "[";
  for (std::size_t k = 0; k < w_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(w_[k]);
  }
  return s + "]";
}

std::string Perm::to_cycle_string() const {
  const int r = degree();
  const bool wide = r > 9;
  std::vector<bool> done(static_cast<std::size_t>(r) + 1, false);
  std::string s;
  for (int start = 1; start <= r; ++start) {
    if (done[static_cast<std::size_t>(start)] || (*this)(start) == start) continue;
    s += "(";
    int x = start;
    bool first = true;
    do {
      if (!first && wide) s += ",";
      s += std::to_string(x);
      done[static_cast<std::size_t>(x)] = true;
      x = (*this)(x);
      first = false;
    } while (x != start);
    s += ")";
  }
  return s.empty() ? "()" : s;
}

Perm compose(const Perm& a, const Perm& b) {
  check_degrees(a, b, "compose");
  std::vector<int> w(static_cast<std::size_t>(a.degree()));
  for (int k = 1; k <= a.degree(); ++k) w[static_cast<std::size_t>(k - 1)] = a(b(k));
  return Perm(std::move(w));
}

bool bruhat_leq(const Perm& a, const Perm& b) {
  check_degrees(a, b, "bruhat_leq");
  const int r = a.degree();
  for (int j = 1; j <= r; ++j) {
    int ca = 0, cb = 0;
    for (int i = 1; i <= r; ++i) {
      ca += a(i) >= j;
      cb += b(i) >= j;
      if (ca > cb) return false;
    }
  }
  return true;
}

Perm parse_cycles(std::string_view text, int r) {
  std::vector<int> w(static_cast<std::size_t>(r));
  std::iota(w.begin(), w.end(), 1);
  std::vector<bool> used(static_cast<std::size_t>(r) + 1, false);
  const bool wide = r > 9;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw ParseError("empty cycle notation");
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '(' in '" + std::string(text) + "'");
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (pos >= text.size()) throw ParseError("unterminated cycle in '" + std::string(text) + "'");
      char ch = text[pos];
      if (ch == ')') {
        ++pos;
        break;
      }
      if (ch == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        throw ParseError("unexpected character '" + std::string(1, ch) + "' in '" + std::string(text) + "'");
      }
      int v = 0;
      if (wide) {
        // Multi-digit entries must be separated by spaces or commas.
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          v = v * 10 + (text[pos] - '0');
          ++pos;
        }
      } else {
        v = ch - '0';
        ++pos;
      }
      if (v < 1 || v > r) {
        throw ParseError("cycle entry " + std::to_string(v) + " outside 1.." + std::to_string(r));
      }
      if (used[static_cast<std::size_t>(v)]) {
        throw ParseError("repeated cycle entry " + std::to_string(v));
      }
      used[static_cast<std::size_t>(v)] = true;
      cycle.push_back(v);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      w[static_cast<std::size_t>(cycle[k] - 1)] = cycle[(k + 1) % cycle.size()];
    }
    skip_ws();
  }
  return Perm(std::move(w));
}

Perm parse_perm(std::string_view text, int r) {
  std::size_t b = text.find_first_not_of(" \t");
  if (b != std::string_view::npos && text[b] == '[') {
    std::size_t e = text.find(']', b);
    if (e == std::string_view::npos || text.find_first_not_of(" \t", e + 1) != std::string_view::npos) {
      throw ParseError("malformed one-line permutation '" + std::string(text) + "'");
    }
    std::vector<int> w;
    std::string cur;
    auto flush = [&] {
      if (cur.empty()) throw ParseError("empty entry in '" + std::string(text) + "'");
      w.push_back(std::stoi(cur));
      cur.clear();
    };
    for (std::size_t k = b + 1; k < e; ++k) {
      char ch = text[k];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        cur += ch;
      } else if (ch == ',') {
        flush();
      } else if (ch != ' ') {
        throw ParseError("unexpected character in '" + std::string(text) + "'");
      }
    }
    flush();
    if (static_cast<int>(w.size()) != r) {
      throw ParseError("one-line permutation has " + std::to_string(w.size()) + " entries, expected " +
                       std::to_string(r));
    }
    try {
      return Perm(std::move(w));
    } catch (const InvariantError& e) {
      throw ParseError(e.what());
    }
  }
  return parse_cycles(text, r);
}

std::vector<Perm> all_perms(int r) {
  std::vector<int> w(static_cast<std::size_t>(r));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Perm> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace bicolor
