// Copyright 2026 The pathilp Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pathilp/pathsolver.h"

#include <algorithm>
#include <set>
#include <string>

#include "pathilp/errors.h"

namespace pathilp {

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kFeasible:
      return "feasible";
    case SolveStatus::kInfeasible:
      return "infeasible";
    case SolveStatus::kResourceExceeded:
      return "resource_exceeded";
  }
  return "unknown";
}

LayeredPath build_layers(const IpInstance& instance) {
  PathReport report = validate_pathlike(instance);
  if (!report.is_path_like) {
    throw InvalidInputError("instance is not path-like: column " +
                            std::to_string(*report.offending_column) +
                            " touches non-consecutive or more than two rows");
  }
  const int num_rows = instance.num_rows();
  std::vector<int> first(instance.num_cols(), -1);
  std::vector<int> last(instance.num_cols(), -1);
  for (int r = 0; r < num_rows; ++r) {
    for (const RowEntry& e : instance.rows[r].entries) {
      if (first[e.col] < 0) first[e.col] = r;
      last[e.col] = r;
    }
  }

  LayeredPath path;
  path.layers.resize(num_rows);
  for (int r = 0; r < num_rows; ++r) path.layers[r].row = r;
  for (int c = 0; c < instance.num_cols(); ++c) {
    const ColumnDef& col = instance.cols[c];
    if (first[c] < 0) {
      if (!col.lower) {
        throw InvalidInputError("unused column '" + col.name + "' has no finite lower bound");
      }
      path.unused_columns.push_back(c);
      continue;
    }
    if (!col.lower || !col.upper) {
      throw InvalidInputError("column '" + col.name + "' appears in a row but is unbounded");
    }
    Layer& intro = path.layers[first[c]];
    intro.introduced.push_back(c);
    if (last[c] != first[c]) {
      intro.carried_out.push_back(c);
      path.layers[last[c]].carried_in.push_back(c);
    } else {
      intro.local.push_back(c);
    }
  }

  for (Layer& layer : path.layers) {
    std::int64_t best = 0;
    for (const RowEntry& e : instance.rows[layer.row].entries) {
      if (!std::binary_search(layer.introduced.begin(), layer.introduced.end(), e.col)) continue;
      std::int64_t magnitude = e.coef < 0 ? -e.coef : e.coef;
      if (magnitude > best) {
        best = magnitude;
        layer.pivot = e.col;
      }
    }
  }
  return path;
}

namespace {

using Tuple = std::vector<Integer>;

struct BackPointer {
  std::size_t prev = 0;
  Tuple introduced_values;
  Integer cost;
};

struct StageStates {
  std::vector<Tuple> states;
  std::vector<BackPointer> pointers;
};

// Column to collect values for at a given layer. from_state picks the
// carried-in tuple, otherwise the introduced values.
struct Watch {
  int col = 0;
  bool from_state = false;
  std::size_t position = 0;
};

class DpEngine {
 public:
  DpEngine(const IpInstance& instance, const LayeredPath& path, const SolverLimits& limits,
           std::span<const Integer> objective)
      : instance_(instance), path_(path), limits_(limits), objective_(objective) {
    if (limits.max_states_per_layer == 0 || limits.max_transitions_total == 0) {
      throw InvalidInputError("solver limits must be positive");
    }
  }

  // watches[t] lists the projections collected while processing layer t.
  SolveStatus run(const std::vector<std::vector<Watch>>& watches,
                  std::map<int, std::set<Integer>>* projections) {
    StageStates start;
    start.states.emplace_back();
    start.pointers.push_back(BackPointer{0, {}, Integer(0)});
    stages_.push_back(std::move(start));
    for (std::size_t t = 0; t < path_.layers.size(); ++t) {
      SolveStatus status = advance(path_.layers[t], watches[t], projections);
      if (status != SolveStatus::kFeasible) return status;
    }
    return SolveStatus::kFeasible;
  }

  // Valid after run() returned kFeasible.
  // Unused columns sit at the bound the objective prefers, lower by default.
  const Integer& unused_value(int c) const {
    const ColumnDef& col = instance_.cols[c];
    if (!objective_.empty() && objective_[c] < 0) {
      if (!col.upper) {
        throw InvalidInputError("objective is unbounded below on unused column '" + col.name +
                                "'");
      }
      return *col.upper;
    }
    return *col.lower;
  }

  std::vector<Integer> witness() const {
    std::vector<Integer> x(instance_.num_cols());
    for (int c : path_.unused_columns) x[c] = unused_value(c);
    std::size_t index = 0;
    for (std::size_t t = path_.layers.size(); t-- > 0;) {
      const BackPointer& bp = stages_[t + 1].pointers[index];
      const Layer& layer = path_.layers[t];
      for (std::size_t k = 0; k < layer.introduced.size(); ++k) {
        x[layer.introduced[k]] = bp.introduced_values[k];
      }
      index = bp.prev;
    }
    return x;
  }

  Integer cost() const {
    Integer total = stages_.back().pointers.front().cost;
    if (!objective_.empty()) {
      for (int c : path_.unused_columns) total += objective_[c] * unused_value(c);
    }
    return total;
  }

 private:
  SolveStatus advance(const Layer& layer, const std::vector<Watch>& watches,
                      std::map<int, std::set<Integer>>* projections) {
    const RowDef& row = instance_.rows[layer.row];
    auto coef_of = [&](int col) {
      for (const RowEntry& e : row.entries) {
        if (e.col == col) return Integer(static_cast<long>(e.coef));
      }
      return Integer(0);
    };

    std::vector<Integer> in_coefs;
    for (int c : layer.carried_in) in_coefs.push_back(coef_of(c));
    std::vector<Integer> intro_coefs;
    std::vector<Integer> intro_cost;
    std::vector<std::size_t> free_positions;
    std::size_t pivot_position = layer.introduced.size();
    for (std::size_t k = 0; k < layer.introduced.size(); ++k) {
      int c = layer.introduced[k];
      intro_coefs.push_back(coef_of(c));
      intro_cost.push_back(objective_.empty() ? Integer(0) : objective_[c]);
      if (c == layer.pivot) {
        pivot_position = k;
      } else {
        free_positions.push_back(k);
      }
    }
    std::vector<std::size_t> out_positions;
    for (int c : layer.carried_out) {
      out_positions.push_back(static_cast<std::size_t>(
          std::lower_bound(layer.introduced.begin(), layer.introduced.end(), c) -
          layer.introduced.begin()));
    }

    // Number of enumeration points per predecessor state.
    Integer box(1);
    for (std::size_t k : free_positions) {
      const ColumnDef& col = instance_.cols[layer.introduced[k]];
      box *= *col.upper - *col.lower + 1;
    }

    const StageStates& previous = stages_.back();
    std::map<Tuple, BackPointer> next;
    Tuple values(layer.introduced.size());
    Integer residual0;
    Integer residual;
    Integer quotient;
    for (std::size_t s = 0; s < previous.states.size(); ++s) {
      const Tuple& state = previous.states[s];
      if (box > Integer(static_cast<unsigned long>(limits_.max_transitions_total - transitions_))) {
        return SolveStatus::kResourceExceeded;
      }
      residual0 = row.rhs;
      for (std::size_t k = 0; k < state.size(); ++k) residual0 -= in_coefs[k] * state[k];
      for (std::size_t k : free_positions) values[k] = *instance_.cols[layer.introduced[k]].lower;

      while (true) {
        ++transitions_;
        residual = residual0;
        for (std::size_t k : free_positions) residual -= intro_coefs[k] * values[k];
        bool ok;
        if (pivot_position < values.size()) {
          const Integer& a = intro_coefs[pivot_position];
          ok = mpz_divisible_p(residual.get_mpz_t(), a.get_mpz_t()) != 0;
          if (ok) {
            mpz_divexact(quotient.get_mpz_t(), residual.get_mpz_t(), a.get_mpz_t());
            const ColumnDef& col = instance_.cols[layer.pivot];
            ok = quotient >= *col.lower && quotient <= *col.upper;
            if (ok) values[pivot_position] = quotient;
          }
        } else {
          ok = residual == 0;
        }

        if (ok) {
          for (const Watch& w : watches) {
            (*projections)[w.col].insert(w.from_state ? state[w.position] : values[w.position]);
          }
          Integer cost = previous.pointers[s].cost;
          if (!objective_.empty()) {
            for (std::size_t k = 0; k < values.size(); ++k) cost += intro_cost[k] * values[k];
          }
          Tuple key;
          key.reserve(out_positions.size());
          for (std::size_t k : out_positions) key.push_back(values[k]);
          auto [it, inserted] = next.try_emplace(std::move(key));
          if (inserted) {
            it->second = BackPointer{s, values, std::move(cost)};
            if (next.size() > limits_.max_states_per_layer) {
              return SolveStatus::kResourceExceeded;
            }
          } else if (cost < it->second.cost) {
            it->second = BackPointer{s, values, std::move(cost)};
          }
        }

        // Odometer over the free columns, last position fastest.
        std::size_t k = free_positions.size();
        while (k > 0) {
          std::size_t pos = free_positions[k - 1];
          const ColumnDef& col = instance_.cols[layer.introduced[pos]];
          if (values[pos] < *col.upper) {
            ++values[pos];
            break;
          }
          values[pos] = *col.lower;
          --k;
        }
        if (k == 0) break;
      }
    }

    if (next.empty()) return SolveStatus::kInfeasible;
    StageStates stage;
    stage.states.reserve(next.size());
    stage.pointers.reserve(next.size());
    for (auto& [key, pointer] : next) {
      stage.states.push_back(key);
      stage.pointers.push_back(std::move(pointer));
    }
    stages_.push_back(std::move(stage));
    return SolveStatus::kFeasible;
  }

  const IpInstance& instance_;
  const LayeredPath& path_;
  SolverLimits limits_;
  std::span<const Integer> objective_;
  std::vector<StageStates> stages_;
  std::uint64_t transitions_ = 0;
};

SolveResult solve_impl(const IpInstance& instance, std::span<const Integer> objective,
                       const SolverLimits& limits) {
  LayeredPath path = build_layers(instance);
  DpEngine engine(instance, path, limits, objective);
  std::vector<std::vector<Watch>> watches(path.layers.size());
  std::map<int, std::set<Integer>> unused;
  SolveResult result;
  result.status = engine.run(watches, &unused);
  if (result.status == SolveStatus::kFeasible) {
    result.witness = engine.witness();
    if (!objective.empty()) result.objective_value = engine.cost();
  }
  return result;
}

}  // namespace

SolveResult solve_feasibility(const IpInstance& instance, const SolverLimits& limits) {
  return solve_impl(instance, {}, limits);
}

SolveResult minimize(const IpInstance& instance, std::span<const Integer> objective,
                     const SolverLimits& limits) {
  if (static_cast<int>(objective.size()) != instance.num_cols()) {
    throw InvalidInputError("objective length " + std::to_string(objective.size()) +
                            " does not match column count " +
                            std::to_string(instance.num_cols()));
  }
  // An empty span would read as "no objective"; zero columns have zero cost.
  if (objective.empty()) {
    SolveResult result = solve_impl(instance, {}, limits);
    if (result.status == SolveStatus::kFeasible) result.objective_value = Integer(0);
    return result;
  }
  return solve_impl(instance, objective, limits);
}

ColumnValues final_column_values(const IpInstance& instance, int col,
                                 const SolverLimits& limits) {
  LayeredPath path = build_layers(instance);
  if (path.layers.empty()) throw InvalidInputError("instance has no rows");
  const Layer& last = path.layers.back();
  std::vector<std::vector<Watch>> watches(path.layers.size());
  auto in = std::lower_bound(last.carried_in.begin(), last.carried_in.end(), col);
  auto intro = std::lower_bound(last.introduced.begin(), last.introduced.end(), col);
  if (in != last.carried_in.end() && *in == col) {
    watches.back().push_back(
        Watch{col, true, static_cast<std::size_t>(in - last.carried_in.begin())});
  } else if (intro != last.introduced.end() && *intro == col) {
    watches.back().push_back(
        Watch{col, false, static_cast<std::size_t>(intro - last.introduced.begin())});
  } else {
    throw InvalidInputError("column " + std::to_string(col) + " is not visible at the last row");
  }

  DpEngine engine(instance, path, limits, {});
  std::map<int, std::set<Integer>> projections;
  ColumnValues result;
  result.status = engine.run(watches, &projections);
  if (result.status == SolveStatus::kFeasible) {
    const auto& values = projections[col];
    result.values.assign(values.begin(), values.end());
  }
  return result;
}

ForwardValues forward_values(const IpInstance& instance, std::span<const int> cols,
                             const SolverLimits& limits) {
  LayeredPath path = build_layers(instance);
  std::vector<std::vector<Watch>> watches(path.layers.size());
  for (int col : cols) {
    bool found = false;
    for (std::size_t t = 0; t < path.layers.size() && !found; ++t) {
      const auto& intro = path.layers[t].introduced;
      auto it = std::lower_bound(intro.begin(), intro.end(), col);
      if (it != intro.end() && *it == col) {
        watches[t].push_back(Watch{col, false, static_cast<std::size_t>(it - intro.begin())});
        found = true;
      }
    }
    if (!found) {
      throw InvalidInputError("column " + std::to_string(col) + " appears in no row");
    }
  }

  DpEngine engine(instance, path, limits, {});
  std::map<int, std::set<Integer>> projections;
  ForwardValues result;
  result.status = engine.run(watches, &projections);
  for (int col : cols) {
    const auto& values = projections[col];
    result.values[col].assign(values.begin(), values.end());
  }
  return result;
}

}  // namespace pathilp
