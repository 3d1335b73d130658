#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "tura/logreg.h"

namespace tura::oracles {

namespace {

struct Frac {
  __int128 num, den;
};

bool less_than(Frac a, Frac b) { return a.num * b.den < b.num * a.den; }

// Weighted impurity times n: sum over children of (n_c - sumsq_c / n_c).
Frac child_impurity(const std::vector<int>& l, const std::vector<int>& r) {
  auto n_of = [](const std::vector<int>& c) { return std::accumulate(c.begin(), c.end(), 0); };
  auto sq_of = [](const std::vector<int>& c) {
    __int128 s = 0;
    for (int v : c) s += static_cast<__int128>(v) * v;
    return s;
  };
  const __int128 nl = n_of(l), nr = n_of(r);
  return {nl * nl * nr - sq_of(l) * nr + nr * nr * nl - sq_of(r) * nl, nl * nr};
}

void grow(const Dataset& d, const std::vector<std::size_t>& rows, std::vector<TreeNode>& out) {
  const int id = static_cast<int>(out.size());
  out.emplace_back();
  std::vector<int> counts(d.classes, 0);
  for (auto r : rows) ++counts[d.y[r]];
  out[id].class_counts = counts;
  const __int128 n = static_cast<__int128>(rows.size());
  __int128 sq = 0;
  for (int c : counts) sq += static_cast<__int128>(c) * c;
  const Frac parent{n * n - sq, n};

  bool found = false;
  int best_f = -1;
  double best_t = 0.0;
  Frac best{0, 1};
  for (std::size_t f = 0; f < d.cols; ++f) {
    std::vector<double> values;
    for (auto r : rows) values.push_back(d.at(r, f));
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
      const double t = (values[i] + values[i + 1]) / 2;
      std::vector<int> l(d.classes, 0), r(d.classes, 0);
      for (auto row : rows) ++(d.at(row, f) <= t ? l : r)[d.y[row]];
      const Frac imp = child_impurity(l, r);
      if (!found || less_than(imp, best)) {
        found = true;
        best = imp;
        best_f = static_cast<int>(f);
        best_t = t;
      }
    }
  }
  if (!found || !less_than(best, parent)) return;
  std::vector<std::size_t> left, right;
  for (auto r : rows) (d.at(r, best_f) <= best_t ? left : right).push_back(r);
  out[id].feature = best_f;
  out[id].threshold = best_t;
  out[id].left = static_cast<int>(out.size());
  grow(d, left, out);
  out[id].right = static_cast<int>(out.size());
  grow(d, right, out);
}

}  // namespace

double mattr(const std::vector<std::string>& tokens, std::size_t w) {
  const std::size_t n = tokens.size();
  if (n <= w) {
    return static_cast<double>(std::set<std::string>(tokens.begin(), tokens.end()).size()) /
           static_cast<double>(n);
  }
  std::uint64_t total = 0;
  for (std::size_t start = 0; start + w <= n; ++start) {
    total += std::set<std::string>(tokens.begin() + start, tokens.begin() + start + w).size();
  }
  return static_cast<double>(total) /
         (static_cast<double>(w) * static_cast<double>(n - w + 1));
}

double mci_expectation(const std::vector<std::string>& inv, std::size_t k, bool replacement) {
  const std::size_t n = inv.size();
  double total = 0.0;
  std::uint64_t count = 0;
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    bool valid = true;
    if (!replacement) {
      std::set<std::size_t> used(idx.begin(), idx.end());
      valid = used.size() == k;
    }
    if (valid) {
      std::set<std::string> distinct;
      for (auto i : idx) distinct.insert(inv[i]);
      total += static_cast<double>(distinct.size()) - 1.0;
      ++count;
    }
    std::size_t pos = 0;
    while (pos < k && ++idx[pos] == n) idx[pos++] = 0;
    if (pos == k) break;
  }
  return total / static_cast<double>(count);
}

std::vector<std::string> random_inventory(Rng& rng, std::size_t n) {
  static const std::vector<std::string> kPool{"lar", "da", "ı", "∅", "ler", "de", "dan"};
  const std::size_t variety = 1 + rng.uniform_index(kPool.size());
  std::vector<std::string> inv;
  for (std::size_t i = 0; i < n; ++i) inv.push_back(kPool[rng.uniform_index(variety)]);
  return inv;
}

std::vector<TreeNode> cart_tree(const Dataset& data, const std::vector<std::size_t>& rows) {
  std::vector<TreeNode> out;
  grow(data, rows, out);
  return out;
}

std::string tree_difference(const DecisionTree& got, const std::vector<TreeNode>& want) {
  std::ostringstream msg;
  if (got.nodes.size() != want.size()) {
    msg << "node count " << got.nodes.size() << " vs " << want.size();
    return msg.str();
  }
  for (std::size_t i = 0; i < want.size(); ++i) {
    const auto& a = got.nodes[i];
    const auto& b = want[i];
    if (a.feature != b.feature || a.threshold != b.threshold || a.left != b.left ||
        a.right != b.right || a.class_counts != b.class_counts) {
      msg << "node " << i << ": split " << a.feature << "@" << a.threshold << " vs "
          << b.feature << "@" << b.threshold;
      return msg.str();
    }
  }
  return {};
}

double logreg_gradient_error(const Dataset& d, const std::vector<double>& params,
                             double lambda) {
  std::vector<double> grad;
  logreg_objective(params, d, lambda, &grad);
  double worst = 0.0;
  for (std::size_t i = 0; i < params.size(); ++i) {
    const double h = 1e-5 * std::max(1.0, std::fabs(params[i]));
    auto plus = params, minus = params;
    plus[i] += h;
    minus[i] -= h;
    const double fd = (logreg_objective(plus, d, lambda, nullptr) -
                       logreg_objective(minus, d, lambda, nullptr)) /
                      (2 * h);
    const double err =
        std::fabs(fd - grad[i]) / std::max(1.0, std::fabs(fd) + std::fabs(grad[i]));
    worst = std::max(worst, err);
  }
  return worst;
}

GradientInstance random_gradient_instance(Rng& rng) {
  GradientInstance g;
  const std::size_t n = 5 + rng.uniform_index(20);
  const std::size_t p = 1 + rng.uniform_index(5);
  g.data.cols = p;
  g.data.classes = 3;
  std::vector<double> row(p);
  for (std::size_t r = 0; r < n; ++r) {
    for (auto& v : row) v = 4 * rng.uniform_real() - 2;
    g.data.add_row(row, static_cast<int>(rng.uniform_index(3)));
  }
  g.params.resize(3 * p + 3);
  for (auto& v : g.params) v = 2 * rng.uniform_real() - 1;
  g.lambda = rng.uniform_real();
  return g;
}

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  auto rank = [](const std::vector<double>& v) {
    std::vector<long double> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      long double less = 0, equal = 0;
      for (double w : v) {
        if (w < v[i]) ++less;
        if (w == v[i]) ++equal;
      }
      r[i] = less + (equal + 1) / 2;
    }
    return r;
  };
  const auto rx = rank(x), ry = rank(y);
  const long double n = static_cast<long double>(x.size());
  long double mx = 0, my = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    mx += rx[i] / n;
    my += ry[i] / n;
  }
  long double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  return static_cast<double>(sxy / std::sqrt(sxx * syy));
}

}  // namespace tura::oracles
