#pragma once

#include "l1plan/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace l1plan::lp {

struct Var {
  int index = -1;
};

/// Sparse affine expression sum(coef * var) + constant.
class LinearExpr {
 public:
  LinearExpr() = default;
  LinearExpr(Var v) { add(v, Rational(1)); }  // NOLINT(google-explicit-constructor)
  LinearExpr(Rational c) : constant_(std::move(c)) {}  // NOLINT(google-explicit-constructor)
  LinearExpr(int c) : constant_(c) {}  // NOLINT(google-explicit-constructor)
  // Accept unevaluated GMP expressions such as a - b.
  template <class T, class U>
  LinearExpr(const __gmp_expr<T, U>& c) : constant_(c) {}  // NOLINT(google-explicit-constructor)

  LinearExpr& add(Var v, const Rational& coef);

  LinearExpr& operator+=(const LinearExpr& o);
  LinearExpr& operator-=(const LinearExpr& o);
  LinearExpr& operator*=(const Rational& s);

  friend LinearExpr operator+(LinearExpr a, const LinearExpr& b) { return a += b; }
  friend LinearExpr operator-(LinearExpr a, const LinearExpr& b) { return a -= b; }
  friend LinearExpr operator*(LinearExpr a, const Rational& s) { return a *= s; }
  friend LinearExpr operator*(const Rational& s, LinearExpr a) { return a *= s; }
  friend LinearExpr operator-(LinearExpr a) { return a *= Rational(-1); }

  const std::vector<std::pair<int, Rational>>& terms() const { return terms_; }
  const Rational& constant() const { return constant_; }

  Rational evaluate(const std::vector<Rational>& values) const;

 private:
  std::vector<std::pair<int, Rational>> terms_;  // sorted by index, no zeros
  Rational constant_ = 0;
};

enum class Sense { LessEq, GreaterEq, Equal };

/// Normalized row: sum(terms) (sense) rhs.
struct Constraint {
  std::vector<std::pair<int, Rational>> terms;
  Sense sense = Sense::LessEq;
  Rational rhs;
  std::string name;
};

enum class Domain { Free, NonNegative };

class LinearProgram {
 public:
  Var add_variable(std::string name = {}, Domain domain = Domain::Free);

  void add_constraint(const LinearExpr& lhs, Sense sense, const LinearExpr& rhs, std::string name = {});
  void add_leq(const LinearExpr& lhs, const LinearExpr& rhs, std::string name = {}) {
    add_constraint(lhs, Sense::LessEq, rhs, std::move(name));
  }
  void add_geq(const LinearExpr& lhs, const LinearExpr& rhs, std::string name = {}) {
    add_constraint(lhs, Sense::GreaterEq, rhs, std::move(name));
  }
  void add_eq(const LinearExpr& lhs, const LinearExpr& rhs, std::string name = {}) {
    add_constraint(lhs, Sense::Equal, rhs, std::move(name));
  }

  void minimize(LinearExpr objective) { objective_ = std::move(objective); }

  int num_variables() const { return static_cast<int>(names_.size()); }
  const std::string& name(Var v) const { return names_.at(v.index); }
  Domain domain(Var v) const { return domains_.at(v.index); }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const LinearExpr& objective() const { return objective_; }

  /// True when every constraint and variable domain holds exactly.
  bool satisfied_by(const std::vector<Rational>& values) const;

  /// CPLEX-LP-like text dump for debugging.
  std::string to_lp_text() const;

 private:
  std::vector<std::string> names_;
  std::vector<Domain> domains_;
  std::vector<Constraint> constraints_;
  LinearExpr objective_;
};

enum class Status { Optimal, Infeasible, Unbounded };

const char* to_string(Status s);

struct LpSolution {
  Status status = Status::Infeasible;
  std::vector<Rational> values;
  Rational objective;

  bool optimal() const { return status == Status::Optimal; }
  const Rational& value(Var v) const { return values.at(v.index); }
  Rational value(const LinearExpr& e) const { return e.evaluate(values); }
};

/// Exact two-phase primal simplex with Bland's rule.
LpSolution solve(const LinearProgram& program);

/// Adds expr <= bound and -expr <= bound, i.e. |expr| <= bound.
void add_abs_leq(LinearProgram& program, const LinearExpr& expr, const LinearExpr& bound);

/// Introduces two nonnegative auxiliaries bounding |dx| and |dy| and returns
/// their sum, an upper bound on the L1 norm of (dx, dy) that is tight at any
/// minimizing solution.
LinearExpr l1_norm_bound(LinearProgram& program, const LinearExpr& dx, const LinearExpr& dy,
                         const std::string& tag = {});

}  // namespace l1plan::lp
