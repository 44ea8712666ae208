#include "l1plan/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <type_traits>
#include <sstream>
#include <stdexcept>

namespace l1plan::lp {

LinearExpr& LinearExpr::add(Var v, const Rational& coef) {
  if (v.index < 0) throw std::invalid_argument("LinearExpr: undeclared variable");
  if (coef == 0) return *this;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), v.index,
                             [](const auto& t, int idx) { return t.first < idx; });
  if (it != terms_.end() && it->first == v.index) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, {v.index, coef});
  }
  return *this;
}

LinearExpr& LinearExpr::operator+=(const LinearExpr& o) {
  for (const auto& [idx, c] : o.terms_) add(Var{idx}, c);
  constant_ += o.constant_;
  return *this;
}

LinearExpr& LinearExpr::operator-=(const LinearExpr& o) {
  for (const auto& [idx, c] : o.terms_) add(Var{idx}, -c);
  constant_ -= o.constant_;
  return *this;
}

LinearExpr& LinearExpr::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    constant_ = 0;
    return *this;
  }
  for (auto& t : terms_) t.second *= s;
  constant_ *= s;
  return *this;
}

Rational LinearExpr::evaluate(const std::vector<Rational>& values) const {
  Rational r = constant_;
  for (const auto& [idx, c] : terms_) r += c * values.at(idx);
  return r;
}

Var LinearProgram::add_variable(std::string name, Domain domain) {
  if (name.empty()) name = "v" + std::to_string(names_.size());
  names_.push_back(std::move(name));
  domains_.push_back(domain);
  return Var{static_cast<int>(names_.size()) - 1};
}

void LinearProgram::add_constraint(const LinearExpr& lhs, Sense sense, const LinearExpr& rhs, std::string name) {
  LinearExpr diff = lhs - rhs;
  for (const auto& t : diff.terms())
    if (t.first >= num_variables()) throw std::invalid_argument("constraint references undeclared variable");
  Constraint c;
  c.terms = diff.terms();
  c.sense = sense;
  c.rhs = -diff.constant();
  c.name = std::move(name);
  constraints_.push_back(std::move(c));
}

bool LinearProgram::satisfied_by(const std::vector<Rational>& values) const {
  if (static_cast<int>(values.size()) != num_variables()) return false;
  for (int i = 0; i < num_variables(); ++i)
    if (domains_[i] == Domain::NonNegative && values[i] < 0) return false;
  for (const auto& c : constraints_) {
    Rational lhs = 0;
    for (const auto& [idx, coef] : c.terms) lhs += coef * values[idx];
    switch (c.sense) {
      case Sense::LessEq:
        if (lhs > c.rhs) return false;
        break;
      case Sense::GreaterEq:
        if (lhs < c.rhs) return false;
        break;
      case Sense::Equal:
        if (lhs != c.rhs) return false;
        break;
    }
  }
  return true;
}

std::string LinearProgram::to_lp_text() const {
  std::ostringstream os;
  auto write_terms = [&](const std::vector<std::pair<int, Rational>>& terms) {
    if (terms.empty()) os << "0";
    bool first = true;
    for (const auto& [idx, c] : terms) {
      if (c < 0)
        os << (first ? "-" : " - ");
      else if (!first)
        os << " + ";
      Rational a = abs(c);
      if (a != 1) os << l1plan::to_string(a) << " ";
      os << names_[idx];
      first = false;
    }
  };
  os << "Minimize\n obj: ";
  write_terms(objective_.terms());
  if (objective_.constant() != 0) os << " + " << l1plan::to_string(objective_.constant());
  os << "\nSubject To\n";
  for (std::size_t i = 0; i < constraints_.size(); ++i) {
    const auto& c = constraints_[i];
    os << " " << (c.name.empty() ? "c" + std::to_string(i) : c.name) << ": ";
    write_terms(c.terms);
    os << (c.sense == Sense::LessEq ? " <= " : c.sense == Sense::GreaterEq ? " >= " : " = ")
       << l1plan::to_string(c.rhs) << "\n";
  }
  os << "Bounds\n";
  for (int i = 0; i < num_variables(); ++i)
    if (domains_[i] == Domain::Free) os << " " << names_[i] << " free\n";
  os << "End\n";
  return os.str();
}

const char* to_string(Status s) {
  switch (s) {
    case Status::Optimal: return "optimal";
    case Status::Infeasible: return "infeasible";
    case Status::Unbounded: return "unbounded";
  }
  return "?";
}

namespace {

// Zero tests: exact for rationals, with a small tolerance for the floating
// point pass that only proposes a basis.
inline bool is_zero(const Rational& v) { return v == 0; }
inline bool is_zero(double v) { return std::abs(v) < 1e-11; }
inline bool is_neg(const Rational& v) { return v < 0; }
inline bool is_neg(double v) { return v < -1e-9; }
inline bool is_pos(const Rational& v) { return v > 0; }
inline bool is_pos(double v) { return v > 1e-9; }

// Dense tableau in equality standard form: A x = b, x >= 0, b >= 0.
template <class T>
class Tableau {
 public:
  Tableau(int rows, int cols) : m_(rows), n_(cols), a_(rows, std::vector<T>(cols + 1)), basis_(rows, -1) {}

  T& at(int r, int c) { return a_[r][c]; }
  T& rhs(int r) { return a_[r][n_]; }
  int rows() const { return m_; }
  int cols() const { return n_; }
  std::vector<int>& basis() { return basis_; }

  // Minimizes cost over the current basis; columns flagged in `blocked` never enter.
  // Returns false when unbounded.
  bool optimize(const std::vector<T>& cost, const std::vector<char>& blocked) {
    std::vector<T> reduced(n_ + 1);
    for (int j = 0; j < n_; ++j) reduced[j] = cost[j];
    reduced[n_] = 0;
    for (int r = 0; r < m_; ++r) {
      const T& cb = cost[basis_[r]];
      if (is_zero(cb)) continue;
      for (int j = 0; j <= n_; ++j)
        if (!is_zero(a_[r][j])) reduced[j] -= cb * a_[r][j];
    }
    // Dantzig pricing until a run of degenerate pivots suggests stalling, then
    // Bland's rule, which cannot cycle.
    int degenerate_run = 0;
    bool bland = false;
    long budget = 50L * (m_ + n_) + 1000;
    for (;;) {
      if (--budget < 0) throw std::runtime_error("simplex iteration limit");
      int enter = -1;
      for (int j = 0; j < n_; ++j) {
        if (blocked[j] || !is_neg(reduced[j])) continue;
        if (enter < 0 || (!bland && reduced[j] < reduced[enter])) enter = j;
        if (bland) break;
      }
      if (enter < 0) return true;

      int leave = -1;
      T best_ratio{};
      for (int r = 0; r < m_; ++r) {
        if (!is_pos(a_[r][enter])) continue;
        T ratio = a_[r][n_] / a_[r][enter];
        if (leave < 0 || ratio < best_ratio || (ratio == best_ratio && basis_[r] < basis_[leave])) {
          leave = r;
          best_ratio = ratio;
        }
      }
      if (leave < 0) return false;
      if (is_zero(best_ratio)) {
        if (++degenerate_run > 2 * m_) bland = true;
      } else {
        degenerate_run = 0;
      }
      pivot(leave, enter);
      if (!is_zero(reduced[enter])) {
        T f = reduced[enter];
        for (int j : nonzero_) reduced[j] -= f * a_[leave][j];
      }
    }
  }

  void pivot(int row, int col) {
    auto& pr = a_[row];
    T inv = T(1) / pr[col];
    nonzero_.clear();
    for (int j = 0; j <= n_; ++j) {
      if (is_zero(pr[j])) {
        pr[j] = 0;
      } else {
        pr[j] *= inv;
        nonzero_.push_back(j);
      }
    }
    pr[col] = 1;
    for (int r = 0; r < m_; ++r) {
      if (r == row) continue;
      auto& rr = a_[r];
      if (is_zero(rr[col])) continue;
      T f = rr[col];
      for (int j : nonzero_) rr[j] -= f * pr[j];
      rr[col] = 0;
    }
    basis_[row] = col;
  }

  void drop_row(int row) {
    a_.erase(a_.begin() + row);
    basis_.erase(basis_.begin() + row);
    --m_;
  }

 private:
  int m_;
  int n_;
  std::vector<std::vector<T>> a_;
  std::vector<int> basis_;
  std::vector<int> nonzero_;
};

// A x = b, x >= 0, b >= 0 with an initial slack/artificial basis.
struct StandardForm {
  int m = 0;
  int total = 0;
  int art0 = 0;
  std::vector<std::vector<std::pair<int, Rational>>> rows;
  std::vector<Rational> b;
  std::vector<int> start_basis;
  std::vector<Rational> cost;  // phase-2 cost
  std::vector<int> pos_col;
  std::vector<int> neg_col;
};

StandardForm standard_form(const LinearProgram& program) {
  StandardForm f;
  const int nv = program.num_variables();
  // Column layout: structural columns (free vars split into +/-), then slacks, then artificials.
  f.pos_col.assign(nv, 0);
  f.neg_col.assign(nv, -1);
  int ncols = 0;
  for (int i = 0; i < nv; ++i) {
    f.pos_col[i] = ncols++;
    if (program.domain(Var{i}) == Domain::Free) f.neg_col[i] = ncols++;
  }
  const auto& cons = program.constraints();
  f.m = static_cast<int>(cons.size());
  std::vector<Sense> senses;
  int nslack = 0;
  int nart = 0;
  for (const auto& c : cons) {
    std::vector<std::pair<int, Rational>> terms;
    for (const auto& [idx, coef] : c.terms) {
      terms.emplace_back(f.pos_col[idx], coef);
      if (f.neg_col[idx] >= 0) terms.emplace_back(f.neg_col[idx], -coef);
    }
    Sense sense = c.sense;
    Rational rhs = c.rhs;
    if (rhs < 0) {
      for (auto& t : terms) t.second = -t.second;
      rhs = -rhs;
      if (sense == Sense::LessEq)
        sense = Sense::GreaterEq;
      else if (sense == Sense::GreaterEq)
        sense = Sense::LessEq;
    }
    if (sense != Sense::Equal) ++nslack;
    if (sense != Sense::LessEq) ++nart;
    f.rows.push_back(std::move(terms));
    f.b.push_back(std::move(rhs));
    senses.push_back(sense);
  }
  const int slack0 = ncols;
  f.art0 = ncols + nslack;
  f.total = f.art0 + nart;
  int s = slack0;
  int a = f.art0;
  f.start_basis.assign(f.m, -1);
  for (int r = 0; r < f.m; ++r) {
    switch (senses[r]) {
      case Sense::LessEq:
        f.rows[r].emplace_back(s, 1);
        f.start_basis[r] = s++;
        break;
      case Sense::GreaterEq:
        f.rows[r].emplace_back(s++, -1);
        f.rows[r].emplace_back(a, 1);
        f.start_basis[r] = a++;
        break;
      case Sense::Equal:
        f.rows[r].emplace_back(a, 1);
        f.start_basis[r] = a++;
        break;
    }
  }
  f.cost.assign(f.total, Rational(0));
  for (const auto& [idx, coef] : program.objective().terms()) {
    f.cost[f.pos_col[idx]] += coef;
    if (f.neg_col[idx] >= 0) f.cost[f.neg_col[idx]] -= coef;
  }
  return f;
}

template <class T>
T convert(const Rational& r) {
  if constexpr (std::is_same_v<T, double>) {
    return r.get_d();
  } else {
    return r;
  }
}

template <class T>
Tableau<T> make_tableau(const StandardForm& f) {
  Tableau<T> t(f.m, f.total);
  for (int r = 0; r < f.m; ++r) {
    for (const auto& [col, coef] : f.rows[r]) t.at(r, col) += convert<T>(coef);
    t.rhs(r) = convert<T>(f.b[r]);
    t.basis()[r] = f.start_basis[r];
  }
  return t;
}

struct PhaseResult {
  Status status = Status::Infeasible;
  // Final basis, one column per row of the standard form (floating pass only).
  std::vector<int> basis;
  std::vector<Rational> colval;  // exact pass only
};

// Two-phase simplex. The exact instantiation drops redundant rows; the
// floating one keeps them so its basis lines up with the standard form.
template <class T>
PhaseResult two_phase(const StandardForm& f) {
  constexpr bool exact = std::is_same_v<T, Rational>;
  Tableau<T> t = make_tableau<T>(f);
  PhaseResult res;
  std::vector<char> blocked(f.total, 0);
  if (f.art0 < f.total) {
    std::vector<T> phase1(f.total);
    for (int j = f.art0; j < f.total; ++j) phase1[j] = 1;
    t.optimize(phase1, blocked);
    T infeas = 0;
    for (int r = 0; r < t.rows(); ++r)
      if (t.basis()[r] >= f.art0) infeas += t.rhs(r);
    if (is_pos(infeas)) {
      res.status = Status::Infeasible;
      res.basis = t.basis();
      return res;
    }
    // Drive zero-valued artificials out of the basis; drop redundant rows.
    for (int r = 0; r < t.rows();) {
      if (t.basis()[r] < f.art0) {
        ++r;
        continue;
      }
      int col = -1;
      for (int j = 0; j < f.art0; ++j)
        if (!is_zero(t.at(r, j))) {
          col = j;
          break;
        }
      if (col >= 0) {
        t.pivot(r, col);
        ++r;
      } else if (exact) {
        t.drop_row(r);
      } else {
        ++r;
      }
    }
    for (int j = f.art0; j < f.total; ++j) blocked[j] = 1;
  }
  std::vector<T> cost(f.total);
  for (int j = 0; j < f.total; ++j) cost[j] = convert<T>(f.cost[j]);
  if (!t.optimize(cost, blocked)) {
    res.status = Status::Unbounded;
    return res;
  }
  res.status = Status::Optimal;
  res.basis = t.basis();
  if constexpr (exact) {
    res.colval.assign(f.total, Rational(0));
    for (int r = 0; r < t.rows(); ++r) res.colval[t.basis()[r]] = t.rhs(r);
  }
  return res;
}

// Machine-word rational for the certificate; any overflow throws and the
// caller repeats the work with GMP.
struct Overflow {};

class Small {
 public:
  Small() = default;
  Small(long n) : n_(n) {}
  explicit Small(const Rational& r) {
    if (!r.get_num().fits_slong_p() || !r.get_den().fits_slong_p()) throw Overflow{};
    n_ = r.get_num().get_si();
    d_ = r.get_den().get_si();
  }
  Rational to_rational() const { return Rational(n_, d_); }

  friend Small operator+(const Small& a, const Small& b) {
    return make(static_cast<__int128>(a.n_) * b.d_ + static_cast<__int128>(b.n_) * a.d_,
                static_cast<__int128>(a.d_) * b.d_);
  }
  friend Small operator-(const Small& a, const Small& b) {
    return make(static_cast<__int128>(a.n_) * b.d_ - static_cast<__int128>(b.n_) * a.d_,
                static_cast<__int128>(a.d_) * b.d_);
  }
  friend Small operator*(const Small& a, const Small& b) {
    return make(static_cast<__int128>(a.n_) * b.n_, static_cast<__int128>(a.d_) * b.d_);
  }
  friend Small operator/(const Small& a, const Small& b) {
    if (b.n_ == 0) throw std::domain_error("division by zero");
    return make(static_cast<__int128>(a.n_) * b.d_, static_cast<__int128>(a.d_) * b.n_);
  }
  Small operator-() const { return make(-static_cast<__int128>(n_), d_); }
  Small& operator+=(const Small& o) { return *this = *this + o; }
  Small& operator-=(const Small& o) { return *this = *this - o; }
  Small& operator*=(const Small& o) { return *this = *this * o; }
  friend bool operator==(const Small& a, const Small& b) { return a.n_ == b.n_ && a.d_ == b.d_; }
  friend bool operator!=(const Small& a, const Small& b) { return !(a == b); }
  friend bool operator<(const Small& a, const Small& b) {
    return static_cast<__int128>(a.n_) * b.d_ < static_cast<__int128>(b.n_) * a.d_;
  }
  friend bool operator==(const Small& a, long v) { return a.d_ == 1 && a.n_ == v; }
  friend bool operator!=(const Small& a, long v) { return !(a == v); }
  friend bool operator<(const Small& a, long v) { return a.n_ < 0 && v >= 0 ? true : a < Small(v); }
  friend bool operator<=(const Small& a, long v) { return !(Small(v) < a); }

 private:
  static Small make(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr __int128 lim = std::numeric_limits<long>::max();
    if (n > lim || n < -lim || d > lim) throw Overflow{};
    Small s;
    s.n_ = static_cast<long>(n);
    s.d_ = static_cast<long>(d);
    return s;
  }
  static __int128 gcd(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  long n_ = 0;
  long d_ = 1;
};

template <class T>
T from_rational(const Rational& r) {
  if constexpr (std::is_same_v<T, Rational>) {
    return r;
  } else {
    return T(r);
  }
}

inline Rational as_rational(const Rational& r) { return r; }
inline Rational as_rational(const Small& s) { return s.to_rational(); }

template <class T>
using SparseRow = std::vector<std::pair<int, T>>;

template <class T>
const T* entry(const SparseRow<T>& row, int col) {
  auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, int c) { return e.first < c; });
  return it != row.end() && it->first == col ? &it->second : nullptr;
}

// row -= f * p, both sorted by column.
template <class T>
void axpy(SparseRow<T>& row, const T& f, const SparseRow<T>& p) {
  SparseRow<T> out;
  out.reserve(row.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < p.size()) {
    if (j == p.size() || (i < row.size() && row[i].first < p[j].first)) {
      out.push_back(std::move(row[i++]));
    } else if (i == row.size() || p[j].first < row[i].first) {
      out.emplace_back(p[j].first, -f * p[j].second);
      ++j;
    } else {
      T v = row[i].second - f * p[j].second;
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  row = std::move(out);
}

// Solves M z = rhs for square sparse M; nullopt when singular.
template <class T>
std::optional<std::vector<T>> solve_square(std::vector<SparseRow<T>> a, std::vector<T> rhs) {
  const int n = static_cast<int>(a.size());
  std::vector<int> row_of(n, -1);
  std::vector<char> used(n, 0);
  // Columns with few entries first: slack singletons then cause no updates.
  std::vector<int> count(n, 0), order(n);
  for (const auto& row : a)
    for (const auto& e : row) ++count[e.first];
  for (int c = 0; c < n; ++c) order[c] = c;
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return count[x] < count[y]; });
  for (int c : order) {
    // Sparsest remaining row with an entry in column c keeps fill-in low.
    int p = -1;
    for (int r = 0; r < n; ++r)
      if (!used[r] && entry(a[r], c) && (p < 0 || a[r].size() < a[p].size())) p = r;
    if (p < 0) return std::nullopt;
    used[p] = 1;
    row_of[c] = p;
    T inv = T(1) / *entry(a[p], c);
    if (inv != 1) {
      for (auto& e : a[p]) e.second *= inv;
      rhs[p] *= inv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == p) continue;
      const T* v = entry(a[r], c);
      if (!v) continue;
      T f = *v;
      axpy(a[r], f, a[p]);
      if (rhs[p] != 0) rhs[r] -= f * rhs[p];
    }
  }
  std::vector<T> z(n);
  for (int c = 0; c < n; ++c) z[c] = rhs[row_of[c]];
  return z;
}

// Exact optimality certificate for a proposed basis: primal feasibility of
// B x_B = b and nonnegative reduced costs over the allowed columns. Returns the
// exact column values on success.
template <class T>
std::optional<std::vector<Rational>> certify_in(const StandardForm& f, const std::vector<int>& basis,
                                                const std::vector<Rational>& cost, int allowed_end) {
  const int m = f.m;
  if (static_cast<int>(basis.size()) != m) return std::nullopt;
  std::vector<int> pos(f.total, -1);
  for (int k = 0; k < m; ++k) {
    if (basis[k] < 0 || pos[basis[k]] >= 0) return std::nullopt;
    pos[basis[k]] = k;
  }
  std::vector<SparseRow<T>> bm(m), bt(m);
  for (int r = 0; r < m; ++r)
    for (const auto& [col, coef] : f.rows[r])
      if (pos[col] >= 0) {
        bm[r].emplace_back(pos[col], from_rational<T>(coef));
        bt[pos[col]].emplace_back(r, from_rational<T>(coef));
      }
  for (auto& row : bm) std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<T> rhs;
  for (const auto& v : f.b) rhs.push_back(from_rational<T>(v));
  auto xb = solve_square<T>(std::move(bm), std::move(rhs));
  if (!xb) return std::nullopt;
  for (int k = 0; k < m; ++k) {
    if ((*xb)[k] < 0) return std::nullopt;
    if (basis[k] >= allowed_end && (*xb)[k] != 0) return std::nullopt;
  }
  std::vector<T> cb(m);
  for (int k = 0; k < m; ++k) cb[k] = from_rational<T>(cost[basis[k]]);
  auto y = solve_square<T>(std::move(bt), std::move(cb));
  if (!y) return std::nullopt;
  std::vector<T> reduced;
  for (int j = 0; j < allowed_end; ++j) reduced.push_back(from_rational<T>(cost[j]));
  for (int r = 0; r < m; ++r) {
    if ((*y)[r] == 0) continue;
    for (const auto& [col, coef] : f.rows[r])
      if (col < allowed_end) reduced[col] -= (*y)[r] * from_rational<T>(coef);
  }
  for (int j = 0; j < allowed_end; ++j)
    if (pos[j] < 0 && reduced[j] < 0) return std::nullopt;
  std::vector<Rational> colval(f.total);
  for (int k = 0; k < m; ++k) colval[basis[k]] = as_rational((*xb)[k]);
  return colval;
}

std::optional<std::vector<Rational>> certify(const StandardForm& f, const std::vector<int>& basis,
                                             const std::vector<Rational>& cost, int allowed_end) {
  try {
    return certify_in<Small>(f, basis, cost, allowed_end);
  } catch (const Overflow&) {
    return certify_in<Rational>(f, basis, cost, allowed_end);
  }
}

std::optional<PhaseResult> guided(const StandardForm& f) {
  PhaseResult guess;
  try {
    guess = two_phase<double>(f);
  } catch (const std::runtime_error&) {
    return std::nullopt;
  }
  if (guess.status == Status::Optimal) {
    auto colval = certify(f, guess.basis, f.cost, f.art0);
    if (!colval) return std::nullopt;
    guess.colval = std::move(*colval);
    return guess;
  }
  if (guess.status == Status::Infeasible) {
    // Certified phase-one optimum with positive artificial total.
    std::vector<Rational> phase1(f.total);
    for (int j = f.art0; j < f.total; ++j) phase1[j] = 1;
    auto colval = certify(f, guess.basis, phase1, f.total);
    if (!colval) return std::nullopt;
    Rational infeas = 0;
    for (int j = f.art0; j < f.total; ++j) infeas += (*colval)[j];
    if (infeas <= 0) return std::nullopt;
    guess.colval.clear();
    return guess;
  }
  return std::nullopt;
}

}  // namespace

LpSolution solve(const LinearProgram& program) {
  StandardForm f = standard_form(program);
  auto res = guided(f);
  if (!res) res = two_phase<Rational>(f);

  LpSolution sol;
  sol.status = res->status;
  if (sol.status != Status::Optimal) return sol;
  const int nv = program.num_variables();
  sol.values.resize(nv);
  for (int i = 0; i < nv; ++i) {
    sol.values[i] = res->colval[f.pos_col[i]];
    if (f.neg_col[i] >= 0) sol.values[i] -= res->colval[f.neg_col[i]];
  }
  sol.objective = program.objective().evaluate(sol.values);
  return sol;
}

void add_abs_leq(LinearProgram& program, const LinearExpr& expr, const LinearExpr& bound) {
  program.add_leq(expr, bound);
  program.add_leq(-expr, bound);
}

LinearExpr l1_norm_bound(LinearProgram& program, const LinearExpr& dx, const LinearExpr& dy, const std::string& tag) {
  Var ax = program.add_variable(tag.empty() ? std::string{} : tag + "_ax", Domain::NonNegative);
  Var ay = program.add_variable(tag.empty() ? std::string{} : tag + "_ay", Domain::NonNegative);
  add_abs_leq(program, dx, ax);
  add_abs_leq(program, dy, ay);
  return LinearExpr(ax) + LinearExpr(ay);
}

}  // namespace l1plan::lp
