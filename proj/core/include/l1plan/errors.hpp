#pragma once

#include <stdexcept>
#include <string>

namespace l1plan {

/// A configured size or work cap was exceeded.
class ResourceBound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two robots overlap in a configuration that must be feasible.
class InfeasibleConfiguration : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Start or target placement does not fit the domain.
class OutsideDomain : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Start and target do not share an ordering.
class NotCommonlyOrdered : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Requested makespan is below the diameter of the instance.
class DBelowDiameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// No placement satisfies the state's trapezoids and relation.
class StateInfeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace l1plan
