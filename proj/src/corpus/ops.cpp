#include "stancelab/corpus/ops.hpp"

#include <algorithm>
#include <cmath>

#include "stancelab/core/error.hpp"
#include "stancelab/core/log.hpp"
#include "stancelab/core/rng.hpp"

namespace stancelab::corpus {

Distribution class_distribution(const DatasetBundle& bundle) {
  if (bundle.examples.empty())
    throw Error(ErrorKind::domain, "class_distribution on empty bundle");
  Distribution dist;
  for (const auto& ex : bundle.examples) dist.counts[ex.label]++;
  dist.total = static_cast<long>(bundle.examples.size());
  for (const auto& [label, count] : dist.counts)
    dist.percent[label] = 100.0 * static_cast<double>(count) / dist.total;
  return dist;
}

namespace {

// Rounds the class x split target matrix T[c][s] = n_c * n_s / N to integers
// within {floor, ceil} of each target while meeting the row sums (class
// counts) and column sums (split totals) exactly. Greedy by largest
// fractional part, then augmenting swaps for the rare leftovers.
std::vector<std::array<long, 3>> controlled_rounding(const std::vector<long>& class_counts,
                                                     const std::array<long, 3>& split_totals) {
  const size_t k = class_counts.size();
  long total = 0;
  for (long c : class_counts) total += c;

  std::vector<std::array<double, 3>> target(k);
  std::vector<std::array<long, 3>> cell(k);
  std::vector<long> row_deficit(k, 0);
  std::array<long, 3> col_deficit{};
  for (size_t c = 0; c < k; ++c) {
    long got = 0;
    for (int s = 0; s < 3; ++s) {
      target[c][s] = static_cast<double>(class_counts[c]) * split_totals[s] / total;
      cell[c][s] = static_cast<long>(std::floor(target[c][s]));
      got += cell[c][s];
    }
    row_deficit[c] = class_counts[c] - got;
  }
  for (int s = 0; s < 3; ++s) {
    long got = 0;
    for (size_t c = 0; c < k; ++c) got += cell[c][s];
    col_deficit[s] = split_totals[s] - got;
  }

  auto frac = [&](size_t c, int s) { return target[c][s] - std::floor(target[c][s]); };
  auto allowed = [&](size_t c, int s) { return frac(c, s) > 0.0; };

  struct CellRef { double f; size_t c; int s; };
  std::vector<CellRef> order;
  for (size_t c = 0; c < k; ++c)
    for (int s = 0; s < 3; ++s)
      if (allowed(c, s)) order.push_back({frac(c, s), c, s});
  std::stable_sort(order.begin(), order.end(), [](const CellRef& a, const CellRef& b) {
    if (a.f != b.f) return a.f > b.f;
    if (a.c != b.c) return a.c < b.c;
    return a.s < b.s;
  });

  std::vector<std::array<bool, 3>> bumped(k, {false, false, false});
  for (const auto& cr : order) {
    if (row_deficit[cr.c] > 0 && col_deficit[cr.s] > 0) {
      cell[cr.c][cr.s]++;
      bumped[cr.c][cr.s] = true;
      row_deficit[cr.c]--;
      col_deficit[cr.s]--;
    }
  }

  // augmenting swap: move a previous bump from a full column to a deficient
  // one to free capacity for a still-deficient row
  long remaining = 0;
  for (long d : row_deficit) remaining += d;
  size_t guard = 4 * k * (remaining + 1) + 16;
  while (remaining > 0 && guard-- > 0) {
    bool progressed = false;
    for (size_t c = 0; c < k && !progressed; ++c) {
      if (row_deficit[c] == 0) continue;
      for (int s = 0; s < 3 && !progressed; ++s) {
        if (!allowed(c, s) || bumped[c][s]) continue;
        if (col_deficit[s] > 0) {
          cell[c][s]++; bumped[c][s] = true;
          row_deficit[c]--; col_deficit[s]--;
          remaining--; progressed = true;
          break;
        }
        for (size_t c2 = 0; c2 < k && !progressed; ++c2) {
          if (c2 == c || !bumped[c2][s]) continue;
          for (int s2 = 0; s2 < 3; ++s2) {
            if (col_deficit[s2] > 0 && allowed(c2, s2) && !bumped[c2][s2]) {
              cell[c2][s]--; bumped[c2][s] = false;
              cell[c2][s2]++; bumped[c2][s2] = true;
              col_deficit[s2]--;
              cell[c][s]++; bumped[c][s] = true;
              row_deficit[c]--;
              remaining--; progressed = true;
              break;
            }
          }
        }
      }
    }
    if (!progressed) break;
  }
  if (remaining > 0)
    throw Error(ErrorKind::stratification, "controlled rounding failed to converge");
  return cell;
}

}  // namespace

DatasetBundle stratified_split(const DatasetBundle& bundle, const SplitRatios& ratios,
                               uint64_t seed) {
  const double sum = ratios.train + ratios.val + ratios.test;
  if (std::abs(sum - 1.0) > 1e-9)
    throw Error(ErrorKind::domain, "split ratios must sum to 1.0");
  if (ratios.train < 0 || ratios.val < 0 || ratios.test < 0)
    throw Error(ErrorKind::domain, "split ratios must be non-negative");
  if (bundle.examples.empty())
    throw Error(ErrorKind::domain, "cannot split empty bundle");

  // group example indices per class, in stored order
  std::map<StanceLabel, std::vector<size_t>> by_class;
  for (size_t i = 0; i < bundle.examples.size(); ++i)
    by_class[bundle.examples[i].label].push_back(i);
  for (const auto& [label, idxs] : by_class) {
    if (idxs.size() < 3)
      throw Error(ErrorKind::stratification,
                  std::string("class ") + to_string(label) + " has fewer than 3 members");
  }

  const long total = static_cast<long>(bundle.examples.size());
  const long n_test = static_cast<long>(std::ceil(ratios.test * total));
  const long rest = total - n_test;
  const double val_frac = ratios.train + ratios.val > 0
                              ? ratios.val / (ratios.train + ratios.val)
                              : 0.0;
  const long n_val = static_cast<long>(std::ceil(val_frac * rest));
  const long n_train = rest - n_val;
  if (n_train < 0)
    throw Error(ErrorKind::domain, "split ratios leave no training data");

  std::vector<long> class_counts;
  std::vector<StanceLabel> class_order;
  for (const auto& [label, idxs] : by_class) {
    class_order.push_back(label);
    class_counts.push_back(static_cast<long>(idxs.size()));
  }
  auto cells = controlled_rounding(class_counts, {n_train, n_val, n_test});

  DatasetBundle out = bundle;
  for (size_t c = 0; c < class_order.size(); ++c) {
    std::vector<size_t> idxs = by_class[class_order[c]];
    Rng rng(derive_seed(seed, std::string("split/") + to_string(class_order[c])));
    rng.shuffle(idxs);
    size_t pos = 0;
    const std::array<Split, 3> split_of = {Split::train, Split::val, Split::test};
    for (int s = 0; s < 3; ++s) {
      for (long i = 0; i < cells[c][s]; ++i)
        out.examples[idxs[pos++]].split = split_of[s];
    }
  }
  return out;
}

DatasetBundle project_two_class(const DatasetBundle& bundle) {
  if (bundle.scheme == Scheme::two_class)
    throw Error(ErrorKind::precondition, "bundle is already two_class");
  DatasetBundle out;
  out.scheme = Scheme::two_class;
  out.markets = bundle.markets;
  for (const auto& ex : bundle.examples)
    if (ex.label != StanceLabel::Neutral) out.examples.push_back(ex);
  if (out.examples.empty())
    log_warn("two-class projection produced an empty bundle");
  return out;
}

}  // namespace stancelab::corpus
