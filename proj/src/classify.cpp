#include "bicolor/classify.hpp"

namespace bicolor {

std::string to_string(Category c) {
  switch (c) {
    case Category::NoStates:
      return "NoStates";
    case Category::Monostatic:
      return "Monostatic";
    case Category::General:
      break;
  }
  return "General";
}

std::string to_string(BruhatRelation r) {
  switch (r) {
    case BruhatRelation::Equal:
      return "equal";
    case BruhatRelation::Less:
      return "less";
    case BruhatRelation::GreaterOrIncomparable:
      break;
  }
  return "greater-or-incomparable";
}

std::pair<Perm, Perm> boundary_perms(const SystemSpec& spec) {
  spec.validate();
  const Perm w0 = Perm::longest(spec.r);
  return {spec.w3 * spec.w1.inverse(), w0 * spec.w4 * spec.w2.inverse()};
}

ClassificationResult classify_system(const SystemSpec& spec) {
  auto [wc, wd] = boundary_perms(spec);
  ClassificationResult res{wc, wd, Category::General, BruhatRelation::Less};
  if (wd == wc) {
    res.category = Category::Monostatic;
    res.relation = BruhatRelation::Equal;
  } else if (!bruhat_leq(wd, wc)) {
    res.category = Category::NoStates;
    res.relation = BruhatRelation::GreaterOrIncomparable;
  }
  return res;
}

bool sufficiently_dominant(const std::vector<int>& lambda, int gap) {
  for (std::size_t i = 0; i + 1 < lambda.size(); ++i) {
    if (lambda[i] - lambda[i + 1] < gap) return false;
  }
  return true;
}

int monostatic_t_exponent(const SystemSpec& spec, TExponentRule rule) {
  const auto [wc, wd] = boundary_perms(spec);
  const Perm w0 = Perm::longest(spec.r);
  const Perm wc_inv = wc.inverse();
  const Perm w1_inv = spec.w1.inverse();
  const Perm w2_inv = spec.w2.inverse();
  const Perm w3_inv = spec.w3.inverse();
  const Perm top_dolor = spec.w4.inverse() * w0;
  auto column = [&](int k) { return spec.lambda[static_cast<std::size_t>(k - 1)]; };
  auto rank = [&](int k) { return boson_rank({w3_inv(k), top_dolor(k)}, spec.r, spec.r); };
  int total = 0;
  for (int i = 1; i <= spec.r; ++i) {
    const int j = wc(i);
    for (int k = 1; k <= spec.r; ++k) {
      if (k == j || wc_inv(k) <= i) continue;
      bool right = k > j;
      if (rule == TExponentRule::Crossing) {
        right = column(k) < column(j) || (column(k) == column(j) && rank(k) > rank(j));
      }
      if (right) {
        const bool bigger = rule == TExponentRule::Statement ? spec.w3(k) > spec.w1(i) : w3_inv(k) > w1_inv(i);
        if (bigger) ++total;
      } else {
        const bool bigger = rule == TExponentRule::Crossing ? top_dolor(k) > w2_inv(i) : top_dolor(k) < w2_inv(i);
        if (bigger) ++total;
      }
    }
  }
  return total;
}

LaurentPoly monostatic_partition(const SystemSpec& spec, TExponentRule rule) {
  const auto [wc, wd] = boundary_perms(spec);
  if (wc != wd) {
    throw ClassificationError("system is not monostatic: wc = " + wc.to_cycle_string() +
                              ", wd = " + wd.to_cycle_string());
  }
  std::vector<int> z(static_cast<std::size_t>(spec.r));
  for (int i = 1; i <= spec.r; ++i) {
    z[static_cast<std::size_t>(i - 1)] = spec.N * (spec.r - 1) + spec.lambda[static_cast<std::size_t>(wc(i) - 1)];
  }
  return monomial(spec.r, 1, monostatic_t_exponent(spec, rule), z);
}

}  // namespace bicolor
