#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tfed {

struct IpVariable {
  std::string name;
  long long lower = 0;
  long long upper = 0;

  friend bool operator==(const IpVariable&, const IpVariable&) = default;
};

enum class Relation { equal, less_equal, greater_equal };

struct LinearTerm {
  int var = 0;
  long long coef = 0;

  friend bool operator==(const LinearTerm&, const LinearTerm&) = default;
};

struct LinearConstraint {
  std::string name;
  std::vector<LinearTerm> terms;
  Relation relation = Relation::equal;
  long long rhs = 0;

  friend bool operator==(const LinearConstraint&, const LinearConstraint&) = default;
};

/// coef * x[a] * x[b]; a == b encodes a square.
struct QuadraticTerm {
  int a = 0;
  int b = 0;
  long long coef = 0;

  friend bool operator==(const QuadraticTerm&, const QuadraticTerm&) = default;
};

/// Bounded integer minimization program with a linear-plus-quadratic objective.
struct IntegerProgramModel {
  std::vector<IpVariable> variables;
  std::vector<LinearConstraint> constraints;
  long long objective_constant = 0;
  std::vector<LinearTerm> objective_linear;
  std::vector<QuadraticTerm> objective_quadratic;

  int add_variable(std::string name, long long lower, long long upper);
  void add_constraint(std::string name, std::vector<LinearTerm> terms, Relation relation,
                      long long rhs);

  /// Index of the variable called `name`, or -1.
  int find_variable(const std::string& name) const;

  /// Throws MalformedInput on unknown variable indices, empty rows, inverted
  /// bounds or duplicate names.
  void validate() const;

  long long evaluate(std::span<const long long> values) const;
  bool satisfies(std::span<const long long> values) const;

  friend bool operator==(const IntegerProgramModel&, const IntegerProgramModel&) = default;
};

/// LP-format text: Minimize / Subject To / Bounds / Generals / End. Quadratic
/// objective terms use the bracketed "[ 2 x * y ] / 2" notation, so the
/// coefficients inside the brackets are doubled. Byte-deterministic.
std::string emit_model_file(const IntegerProgramModel& model);

/// Reads text produced by emit_model_file. Throws ParseError.
IntegerProgramModel parse_model_file(const std::string& text);

struct IpOptions {
  /// Only solutions with objective strictly below this value are sought.
  std::optional<long long> cutoff;
  /// Search nodes allowed before CapExceeded; 0 means unlimited.
  long long node_limit = 0;
};

struct IpSolution {
  std::vector<long long> values;
  long long objective = 0;
  long long nodes = 0;
};

/// Exact minimization by depth-first branch and bound: bound propagation on
/// the rows to a fixpoint, branching on the first unfixed variable with
/// values in ascending order, and pruning with the better of a corner bound
/// and a Lagrangian bound over nonnegative equality rows. Returns nullopt
/// when no feasible assignment beats the cutoff (infeasible without one).
std::optional<IpSolution> solve_ip(const IntegerProgramModel& model, const IpOptions& options = {});

}  // namespace tfed
