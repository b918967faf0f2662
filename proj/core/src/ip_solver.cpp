#include <algorithm>
#include <cmath>
#include <limits>

#include "tfed/errors.hpp"
#include "tfed/ip_model.hpp"

namespace tfed {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

/// A row normalized to "sum <= rhs" (and, for equalities, also ">= rhs").
struct Row {
  std::vector<LinearTerm> terms;
  long long rhs = 0;
  bool equality = false;
};

class BranchAndBound {
 public:
  BranchAndBound(const IntegerProgramModel& model, const IpOptions& options)
      : model_(model), options_(options) {
    model.validate();
    const int n = static_cast<int>(model.variables.size());
    for (const auto& c : model.constraints) {
      Row row{c.terms, c.rhs, c.relation == Relation::equal};
      if (c.relation == Relation::greater_equal) {
        for (auto& t : row.terms) t.coef = -t.coef;
        row.rhs = -row.rhs;
      }
      rows_.push_back(std::move(row));
    }
    linear_.assign(n, 0);
    for (const auto& t : model.objective_linear) linear_[t.var] += t.coef;

    // Lagrangian rows: equalities whose coefficients are all nonnegative.
    column_sum_.assign(n, 0);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Row& row = rows_[r];
      if (!row.equality) continue;
      if (std::all_of(row.terms.begin(), row.terms.end(),
                      [](const LinearTerm& t) { return t.coef >= 0; })) {
        dual_rows_.push_back(static_cast<int>(r));
        for (const auto& t : row.terms) column_sum_[t.var] += t.coef;
      }
    }
    if (options.cutoff) incumbent_value_ = *options.cutoff;
  }

  std::optional<IpSolution> run() {
    std::vector<long long> lo, hi;
    for (const auto& v : model_.variables) {
      lo.push_back(v.lower);
      hi.push_back(v.upper);
    }
    search(lo, hi);
    if (!found_) return std::nullopt;
    return IpSolution{best_, incumbent_value_, nodes_};
  }

 private:
  /// Tightens bounds until nothing changes. Returns false on infeasibility.
  bool propagate(std::vector<long long>& lo, std::vector<long long>& hi) const {
    bool changed = true;
    for (int pass = 0; changed && pass < 1000; ++pass) {
      changed = false;
      for (const Row& row : rows_) {
        long long min_act = 0, max_act = 0;
        for (const auto& t : row.terms) {
          min_act += t.coef > 0 ? t.coef * lo[t.var] : t.coef * hi[t.var];
          max_act += t.coef > 0 ? t.coef * hi[t.var] : t.coef * lo[t.var];
        }
        if (min_act > row.rhs) return false;
        if (row.equality && max_act < row.rhs) return false;
        for (const auto& t : row.terms) {
          if (t.coef == 0) continue;
          const long long own_min = t.coef > 0 ? t.coef * lo[t.var] : t.coef * hi[t.var];
          const long long slack = row.rhs - (min_act - own_min);  // coef * x <= slack
          if (t.coef > 0) {
            const long long bound = floor_div(slack, t.coef);
            if (bound < hi[t.var]) {
              hi[t.var] = bound;
              changed = true;
            }
          } else {
            const long long bound = ceil_div(slack, t.coef);
            if (bound > lo[t.var]) {
              lo[t.var] = bound;
              changed = true;
            }
          }
          if (row.equality) {
            const long long own_max = t.coef > 0 ? t.coef * hi[t.var] : t.coef * lo[t.var];
            const long long need = row.rhs - (max_act - own_max);  // coef * x >= need
            if (t.coef > 0) {
              const long long bound = ceil_div(need, t.coef);
              if (bound > lo[t.var]) {
                lo[t.var] = bound;
                changed = true;
              }
            } else {
              const long long bound = floor_div(need, t.coef);
              if (bound < hi[t.var]) {
                hi[t.var] = bound;
                changed = true;
              }
            }
          }
          if (lo[t.var] > hi[t.var]) return false;
        }
      }
    }
    return true;
  }

  static long long product_min(long long coef, long long alo, long long ahi, long long blo,
                               long long bhi) {
    const long long c[4] = {coef * alo * blo, coef * alo * bhi, coef * ahi * blo,
                            coef * ahi * bhi};
    return *std::min_element(c, c + 4);
  }

  long long quadratic_bound(const std::vector<long long>& lo,
                            const std::vector<long long>& hi) const {
    long long total = 0;
    for (const auto& q : model_.objective_quadratic) {
      if (q.a == q.b) {
        const long long l = lo[q.a], h = hi[q.a];
        long long best = std::min(q.coef * l * l, q.coef * h * h);
        if (l <= 0 && h >= 0) best = std::min(best, 0LL);
        total += best;
      } else {
        total += product_min(q.coef, lo[q.a], hi[q.a], lo[q.b], hi[q.b]);
      }
    }
    return total;
  }

  long long corner_bound(const std::vector<long long>& lo, const std::vector<long long>& hi) const {
    long long total = 0;
    for (std::size_t j = 0; j < linear_.size(); ++j) {
      total += std::min(linear_[j] * lo[j], linear_[j] * hi[j]);
    }
    return total;
  }

  /// Multipliers w_i = min over unfixed j in row i of c_j / s_j make every
  /// reduced cost nonnegative; the bound is sum w_i b_i + sum min(r_j x_j).
  long long lagrangian_bound(const std::vector<long long>& lo,
                             const std::vector<long long>& hi) const {
    if (dual_rows_.empty()) return std::numeric_limits<long long>::min();
    const int n = static_cast<int>(linear_.size());
    std::vector<long double> reduced(n);
    for (int j = 0; j < n; ++j) reduced[j] = static_cast<long double>(linear_[j]);
    long double total = 0;
    for (int r : dual_rows_) {
      const Row& row = rows_[r];
      long double w = 0;
      bool any = false;
      for (const auto& t : row.terms) {
        if (t.coef == 0 || lo[t.var] == hi[t.var]) continue;
        const long double ratio =
            static_cast<long double>(linear_[t.var]) / static_cast<long double>(column_sum_[t.var]);
        if (!any || ratio < w) w = ratio;
        any = true;
      }
      if (!any) continue;
      total += w * static_cast<long double>(row.rhs);
      for (const auto& t : row.terms) reduced[t.var] -= w * static_cast<long double>(t.coef);
    }
    for (int j = 0; j < n; ++j) {
      total += std::min(reduced[j] * static_cast<long double>(lo[j]),
                        reduced[j] * static_cast<long double>(hi[j]));
    }
    return static_cast<long long>(std::ceil(total - 1e-6L));
  }

  long long bound(const std::vector<long long>& lo, const std::vector<long long>& hi) const {
    return model_.objective_constant + quadratic_bound(lo, hi) +
           std::max(corner_bound(lo, hi), lagrangian_bound(lo, hi));
  }

  void search(std::vector<long long> lo, std::vector<long long> hi) {
    ++nodes_;
    if (options_.node_limit > 0 && nodes_ > options_.node_limit) {
      throw CapExceeded("integer program search exceeded its node limit");
    }
    if (!propagate(lo, hi)) return;
    if (has_incumbent() && bound(lo, hi) >= incumbent_value_) return;
    int branch = -1;
    for (std::size_t j = 0; j < lo.size(); ++j) {
      if (lo[j] < hi[j]) {
        branch = static_cast<int>(j);
        break;
      }
    }
    if (branch < 0) {
      const long long value = model_.evaluate(lo);
      if (!has_incumbent() || value < incumbent_value_) {
        incumbent_value_ = value;
        best_ = lo;
        found_ = true;
      }
      return;
    }
    const long long top = hi[branch];
    for (long long value = lo[branch]; value <= top; ++value) {
      std::vector<long long> child_lo = lo, child_hi = hi;
      child_lo[branch] = child_hi[branch] = value;
      search(std::move(child_lo), std::move(child_hi));
    }
  }

  bool has_incumbent() const { return found_ || options_.cutoff.has_value(); }

  const IntegerProgramModel& model_;
  IpOptions options_;
  std::vector<Row> rows_;
  std::vector<long long> linear_;
  std::vector<int> dual_rows_;
  std::vector<long long> column_sum_;
  std::vector<long long> best_;
  long long incumbent_value_ = 0;
  bool found_ = false;
  long long nodes_ = 0;
};

}  // namespace

std::optional<IpSolution> solve_ip(const IntegerProgramModel& model, const IpOptions& options) {
  return BranchAndBound(model, options).run();
}

}  // namespace tfed
