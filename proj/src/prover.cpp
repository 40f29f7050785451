#include "indexlab/prover.hpp"

#include <algorithm>
#include <exception>
#include <set>
#include <sstream>
#include <stdexcept>

namespace indexlab {

namespace {

using Int = std::int64_t;

int mod2(Int v) { return static_cast<int>(((v % 2) + 2) % 2); }

// Renders rationals as p/q and irrationals in wire form, for statements.
std::string pretty(const ExactReal& x) {
  if (x.is_irrational()) return x.to_string();
  return x.c() == 1 ? x.a().str() : x.a().str() + "/" + x.c().str();
}

std::string set_string(const std::vector<Int>& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << "}";
  return os.str();
}

std::vector<Int> iota_set(Int lo, Int hi) {
  std::vector<Int> out;
  for (Int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

bool is_subset(std::vector<Int> sub, std::vector<Int> sup) {
  std::sort(sub.begin(), sub.end());
  std::sort(sup.begin(), sup.end());
  return std::includes(sup.begin(), sup.end(), sub.begin(), sub.end());
}

// Records a claim and insists the replay agrees with the expected truth.
Comparison expect(const ExactReal& lhs, Relation op, const ExactReal& rhs, bool expected) {
  const bool holds = evaluate(lhs, op, rhs);
  if (holds != expected) {
    throw std::logic_error("replay claim " + lhs.to_string() + " " + to_string(op) + " " +
                           rhs.to_string() + " evaluated to " + (holds ? "true" : "false"));
  }
  return {lhs, op, rhs, holds};
}

Inclusion expect_subset(std::vector<Int> sub, std::vector<Int> sup, bool expected) {
  const bool holds = is_subset(sub, sup);
  if (holds != expected) throw std::logic_error("replay inclusion " + set_string(sub) + " in " + set_string(sup));
  return {std::move(sub), std::move(sup), holds};
}

const Violation* find_violation(const std::vector<Violation>& all, Int q, Violation::Kind kind) {
  for (const auto& v : all) {
    if (v.q == q && v.kind == kind) return &v;
  }
  return nullptr;
}

SymbolicFact pointwise_fact(int n, const MorseTable& table, FactKind kind, std::string rule,
                            std::string statement) {
  const Int q = n - 1;
  const auto violations = check_morse_inequalities(table, betti_table(n, q), q);
  const Violation* v = find_violation(violations, q, Violation::Kind::kPointwise);
  if (v == nullptr) throw std::logic_error("expected a pointwise violation at q = n-1");
  SymbolicFact f{kind, std::move(rule), std::move(statement), {}, {}, {*v}};
  f.values["q"] = std::to_string(q);
  f.values["M_q"] = std::to_string(v->lhs);
  f.values["b_q"] = std::to_string(v->rhs);
  f.claims.emplace_back(expect(ExactReal(v->lhs), Relation::kGe, ExactReal(v->rhs), false));
  return f;
}

// Smallest admissible rotation count of each case shape, or none.
std::optional<int> min_rotations(NcgCase ncg) {
  switch (ncg) {
    case NcgCase::kNcg2: return 2;
    case NcgCase::kNcg3: return 3;
    case NcgCase::kNcg4: return 1;
    default: return std::nullopt;
  }
}

bool shape_feasible(int n, NcgCase ncg) {
  for (int r = 0; 2 * r <= n - 1; ++r) {
    const int free = n - 2 * r - 1;
    for (int k = 0; k <= free; ++k) {
      const int h = free - k;
      bool ok = false;
      switch (ncg) {
        case NcgCase::kNcg1: ok = h == 0 && k >= 1; break;
        case NcgCase::kNcg2: ok = h >= 1 && k >= 2 && k % 2 == 0; break;
        case NcgCase::kNcg3: ok = h >= 1 && k >= 3 && k % 2 == 1; break;
        case NcgCase::kNcg4: ok = h >= 1 && k == 1; break;
        case NcgCase::kNcg5: ok = k == 0 && (h >= 1 || r >= 1); break;
      }
      if (ok) return true;
    }
  }
  return false;
}

std::string shape_text(NcgCase ncg) {
  switch (ncg) {
    case NcgCase::kNcg1: return "n-2r-1 rotations and no hyperbolic block";
    case NcgCase::kNcg2: return "an even rotation count k with 2 <= k <= n-2r-2";
    case NcgCase::kNcg3: return "an odd rotation count k with 3 <= k <= n-2r-2";
    case NcgCase::kNcg4: return "one rotation and at least one hyperbolic block";
    case NcgCase::kNcg5: return "no rotation";
  }
  return {};
}

SymbolicFact shape_fact(int n, NcgCase ncg, bool feasible) {
  SymbolicFact f{FactKind::kShapeConstraint, "case-shape", "", {}, {}, {}};
  f.values["n"] = std::to_string(n);
  f.statement = to_string(ncg) + " needs " + shape_text(ncg);
  if (const auto kmin = min_rotations(ncg)) {
    // r = 0 gives the widest room: k <= n-2.
    f.claims.emplace_back(expect(ExactReal(*kmin), Relation::kLe, ExactReal(n - 2), feasible));
    f.statement += feasible ? "; satisfiable for n = " + std::to_string(n)
                            : "; unsatisfiable for n = " + std::to_string(n) + " since n-2 = " +
                                  std::to_string(n - 2) + " < " + std::to_string(*kmin);
  } else {
    f.statement += "; satisfiable for n = " + std::to_string(n);
  }
  return f;
}

class TraceBuilder {
 public:
  TraceBuilder(int n, NcgCase ncg, std::optional<int> p_parity)
      : n_(n), ncg_(ncg), p_parity_(p_parity), base_(n - 1) {
    trace_.n = n;
    trace_.ncg = ncg;
    trace_.p_parity = p_parity;
  }

  ProofTrace build() {
    push(shape_fact(n_, ncg_, true));
    witness_ = witness_model(n_, ncg_, p_parity_.value_or(0));
    if (!witness_) throw std::logic_error("feasible shape without witness");
    parity_and_identity();
    if (pinned_.sign() <= 0) {
      sign_contradiction();
    } else {
      switch (ncg_) {
        case NcgCase::kNcg1: pigeonhole(); break;
        case NcgCase::kNcg2:
        case NcgCase::kNcg3: rotation_count_bound(); break;
        case NcgCase::kNcg4: irrational_mean(); break;
        case NcgCase::kNcg5: integer_mean(); break;
      }
    }
    return std::move(trace_);
  }

 private:
  void push(SymbolicFact f) { trace_.steps.push_back(std::move(f)); }

  void close(std::string kind, SymbolicFact f) {
    f.kind = FactKind::kContradiction;
    push(std::move(f));
    trace_.verdict = {Verdict::Type::kContradiction, std::move(kind)};
  }

  ParityShape shape() const {
    const int k_par = ncg_ == NcgCase::kNcg3 || ncg_ == NcgCase::kNcg4 ? 1
                      : ncg_ == NcgCase::kNcg1                         ? mod2(n_ - 1)
                                                                       : 0;
    return {ncg_, n_, p_parity_.value_or(0), k_par};
  }

  void parity_and_identity() {
    const ParityShape ps = shape();
    const int period = ps.analytic_period();
    const int sign_sum = ps.sign_sum();

    SymbolicFact pat{FactKind::kParityPattern, "critical-type-parity", "", {}, {}, {}};
    std::ostringstream os;
    os << (p_parity_ ? (*p_parity_ == 0 ? "p even: " : "p odd: ") : "") << "N = " << period;
    for (int m = 1; m <= period; ++m) {
      const auto ct = ps.critical_type(m);
      os << "; i(c^" << m << ") " << (ps.index_parity(m) == 0 ? "even" : "odd")
         << ", epsilon = " << (ct.epsilon > 0 ? "+1" : "-1") << ", k0 = " << ct.k0;
      pat.values["parity_m" + std::to_string(m)] = ps.index_parity(m) == 0 ? "even" : "odd";
      pat.values["k0_m" + std::to_string(m)] = std::to_string(ct.k0);
    }
    os << "; sign sum S = " << sign_sum;
    pat.statement = os.str();
    pat.values["N"] = std::to_string(period);
    pat.values["S"] = std::to_string(sign_sum);
    pat.values["witness_p"] = std::to_string(witness_->p());
    pat.claims.emplace_back(
        expect(ExactReal(witness_->analytic_period()), Relation::kEq, ExactReal(period), true));
    pat.claims.emplace_back(
        expect(ExactReal(identity_sign_sum(*witness_)), Relation::kEq, ExactReal(sign_sum), true));
    push(std::move(pat));

    pinned_ = pinned_mean_index(n_, sign_sum, period);
    const ExactReal euler = euler_limit(n_);
    SymbolicFact id{FactKind::kMeanIndexEquals, "mean-index-identity", "", {}, {}, {}};
    id.statement = "single-geodesic identity S/(N * mean) = " + pretty(euler) + " gives mean index " +
                   pretty(pinned_);
    id.values["S"] = std::to_string(sign_sum);
    id.values["N"] = std::to_string(period);
    id.values["euler"] = euler.to_string();
    id.values["mean"] = pinned_.to_string();
    id.claims.emplace_back(
        expect(ExactReal(sign_sum) / (ExactReal(period) * pinned_), Relation::kEq, euler, true));
    push(std::move(id));
  }

  void sign_contradiction() {
    push(check_positive_mean_index(n_));
    SymbolicFact f{FactKind::kContradiction, "mean-index-sign", "", {}, {}, {}};
    f.statement = "the identity forces mean index " + pretty(pinned_) +
                  " <= 0, contradicting mean index > 0";
    f.claims.emplace_back(expect(pinned_, Relation::kGt, ExactReal(0), false));
    close("sign", std::move(f));
  }

  // Pins i(c) = n-1 from the parity of the non-zero critical modules.
  void index_pinned_to_base(const std::string& who) {
    const int p_par = ncg_ == NcgCase::kNcg1 ? mod2(n_ - 1) : *p_parity_;
    SymbolicFact zero{FactKind::kMorseZeroParity, "parity-of-nonzero-modules", "", {}, {}, {}};
    zero.statement = "iterates with k0 = 1 have i(c^m) of the parity of i(c), so M_q = 0 for every q " +
                     std::string(p_par == 0 ? "odd" : "even") + "; this parity matches n-1";
    zero.claims.emplace_back(expect(ExactReal(p_par), Relation::kEq, ExactReal(mod2(n_ - 1)), true));
    push(std::move(zero));
    push(check_index_upper_bound(n_));
    push(check_index_lower_bound(
        n_, n_ % 2 == 0 ? ParityConfig::kOddIndicesEvenN : ParityConfig::kEvenIndicesOddN));
    SymbolicFact eq{FactKind::kIndexEquals, "index-pinned", who + " = n-1 = " + std::to_string(base_),
                    {}, {}, {}};
    eq.values["i(c)"] = std::to_string(base_);
    push(std::move(eq));
  }

  void pigeonhole() {
    const bool even = n_ % 2 == 0;
    index_pinned_to_base("i(c)");

    SymbolicFact pr{FactKind::kIndexEquals, "ncg1-index", "2p + (n-2r-1) = n-1 gives p = r", {}, {}, {}};
    push(std::move(pr));

    SymbolicFact bound{FactKind::kMeanIndexBound, "ncg1-mean-bound", "", {}, {}, {}};
    bound.statement = "2p < 2p + 2*sum(rho) = mean index = " + pretty(pinned_) +
                      " < 2, so p = r = 0 and all n-1 blocks are rotations";
    bound.claims.emplace_back(expect(pinned_, Relation::kLt, ExactReal(2), true));
    bound.claims.emplace_back(expect(pinned_, Relation::kGt, ExactReal(2), false));
    push(std::move(bound));

    const Int terms = n_ - 1;
    const ExactReal rho_sum = pinned_ / ExactReal(2);
    SymbolicFact sum{FactKind::kMeanIndexEquals, "rotation-sum", "", {}, {}, {}};
    sum.statement = "the n-1 rotation numbers sum to " + pretty(rho_sum);
    sum.values["sum_rho"] = rho_sum.to_string();
    sum.claims.emplace_back(expect(rho_sum, Relation::kLt, ExactReal(1), true));
    sum.claims.emplace_back(expect(rho_sum, Relation::kGt, ExactReal(0), true));
    push(std::move(sum));

    if (terms == 1) {
      SymbolicFact single{FactKind::kMeanIndexEquals, "single-rotation", "", {}, {}, {}};
      single.statement = "with one rotation, rho = " + pretty(rho_sum) +
                         " is rational, which the irrational rotation number cannot be";
      single.claims.emplace_back(Rationality{rho_sum, true});
      push(std::move(single));
    }

    SymbolicFact hyp{FactKind::kFloorSumRange, "floor-sum-range", "", {}, {}, {}};
    hyp.statement = "for every m, sum_i m*rho_i = m*" + pretty(rho_sum) +
                    " < m, so (i(c^m) - i(c))/2 lies in {0, ..., m-1}";
    hyp.claims.emplace_back(expect(rho_sum, Relation::kLt, ExactReal(1), true));
    push(std::move(hyp));

    // Induction on m: each new iterate must take the one fresh degree.
    const Int m_claim = even ? n_ - 1 : (n_ - 1) / 2;
    std::map<Int, Int> index_values;
    std::vector<Int> taken;
    for (Int m = 1; m <= m_claim; ++m) {
      const auto range = floor_sum_range(m, terms, rho_sum * ExactReal(m));
      std::vector<Int> fresh;
      for (Int s : range) {
        const Int deg = base_ + 2 * s;
        if (std::find(taken.begin(), taken.end(), deg) == taken.end()) fresh.push_back(deg);
      }
      const Int target = base_ + 2 * (m - 1);
      SymbolicFact step{FactKind::kFloorSumRange, "iterate-induction", "", {}, {}, {}};
      step.statement = "m = " + std::to_string(m) + ": floor sum in " + set_string(range) +
                       "; every value except " + std::to_string(target) +
                       " repeats an earlier iterate, so i(c^" + std::to_string(m) + ") = " +
                       std::to_string(target);
      step.claims.emplace_back(expect_subset(range, iota_set(0, m - 1), true));
      step.claims.emplace_back(expect_subset(fresh, {target}, true));
      step.claims.emplace_back(expect_subset({target}, fresh, true));
      push(std::move(step));
      index_values[m] = target;
      taken.push_back(target);
    }

    auto unique = check_iterate_uniqueness(n_, index_values, m_claim - 1);
    if (!unique.unique) throw std::logic_error("induction values must be unique");
    push(std::move(unique.fact));

    const Int m_star = even ? n_ : (n_ + 1) / 2;
    const std::string where = even ? "pigeonhole at m = n" : "pigeonhole at m₂ = (n+1)/2";
    const ExactReal total = rho_sum * ExactReal(m_star);
    const auto range = floor_sum_range(m_star, terms, total);
    const auto stated = even ? iota_set(0, n_ - 2) : iota_set(0, (n_ - 1) / 2 - 1);

    SymbolicFact at{FactKind::kFloorSumRange, "floor-sum-range", "", {}, {}, {}};
    at.statement = where + " = " + std::to_string(m_star) + ": sum_i m*rho_i = " + pretty(total) +
                   " is an integer while every m*rho_i is irrational, so the floor sum lies in " +
                   set_string(range) + " (stated set " + set_string(stated) + ")";
    at.values["sharper_than_stated"] = range.size() < stated.size() ? "yes" : "no";
    at.claims.emplace_back(expect(total, Relation::kEq, ExactReal(total.floor().convert_to<Int>()), true));
    at.claims.emplace_back(expect_subset(range, stated, true));
    push(std::move(at));

    std::vector<Int> admissible;
    for (Int s : range) admissible.push_back(base_ + 2 * s);
    SymbolicFact collide{FactKind::kIndexRange, "iterate-collision", "", {}, {}, {}};
    collide.statement = "i(c^" + std::to_string(m_star) + ") in " + set_string(admissible) +
                        ", all of them indices of c^1..c^" + std::to_string(m_claim);
    collide.claims.emplace_back(expect_subset(admissible, taken, true));
    push(std::move(collide));

    for (Int s : range) {
      auto values = index_values;
      values[m_star] = base_ + 2 * s;
      auto dup = check_iterate_uniqueness(n_, values, s);
      if (dup.unique) throw std::logic_error("duplicate degree not detected");
      push(std::move(dup.fact));
    }

    Int fresh = 0;
    for (Int v : admissible) fresh += std::find(taken.begin(), taken.end(), v) == taken.end() ? 1 : 0;
    SymbolicFact end{FactKind::kContradiction, "pigeonhole", "", {}, {}, {}};
    end.statement = where + ": every admissible value of i(c^" + std::to_string(m_star) +
                    ") repeats the index of an earlier iterate, contradicting uniqueness";
    if (range.empty()) end.statement += "; here no admissible value exists at all";
    end.claims.emplace_back(expect(ExactReal(fresh), Relation::kGt, ExactReal(0), false));
    close("pigeonhole", std::move(end));
  }

  void rotation_count_bound() {
    index_pinned_to_base("i(c) = p");
    const int k_par = ncg_ == NcgCase::kNcg2 ? 0 : 1;
    const int diff_par = mod2(*p_parity_ - k_par);

    SymbolicFact mean{FactKind::kMeanIndexEquals, "rotation-mean", "", {}, {}, {}};
    mean.statement = "mean index = p - k + 2*sum(rho) = " + pretty(pinned_) +
                     " with sum(rho) > 0, so p - k < " + pretty(pinned_);
    push(std::move(mean));

    Int top = pinned_.ceil().convert_to<Int>() - 1;
    if (mod2(top) != diff_par) --top;
    const Int k_min = base_ - top;
    SymbolicFact range{FactKind::kIndexRange, "rotation-count", "", {}, {}, {}};
    range.statement = "p - k is " + std::string(diff_par == 0 ? "even" : "odd") +
                      " and below " + pretty(pinned_) + ", so p - k <= " + std::to_string(top) +
                      " and k >= " + std::to_string(k_min);
    range.values["k_min"] = std::to_string(k_min);
    range.claims.emplace_back(expect(ExactReal(top), Relation::kLt, pinned_, true));
    range.claims.emplace_back(expect(ExactReal(top + 2), Relation::kLt, pinned_, false));
    push(std::move(range));

    SymbolicFact end{FactKind::kContradiction, "shape-bound", "", {}, {}, {}};
    end.statement = "k >= " + std::to_string(k_min) + " gives n−2<k, contradicting k <= n-2r-2";
    end.claims.emplace_back(expect(ExactReal(k_min), Relation::kGt, ExactReal(n_ - 2), true));
    end.claims.emplace_back(expect(ExactReal(k_min), Relation::kLe, ExactReal(n_ - 2), false));
    close("shape", std::move(end));
  }

  void irrational_mean() {
    SymbolicFact mean{FactKind::kMeanIndexEquals, "ncg4-mean", "", {}, {}, {}};
    mean.statement = "mean index = (p-1) + 2*rho_1 must equal " + pretty(pinned_);
    push(std::move(mean));

    SymbolicFact end{FactKind::kContradiction, "irrationality", "", {}, {}, {}};
    end.statement = "2*rho_1 = " + pretty(pinned_) +
                    " - (p-1) would be rational, but rho_1 is irrational (witness mean " +
                    witness_->mean_index().to_string() + ")";
    end.claims.emplace_back(Rationality{pinned_, true});
    end.claims.emplace_back(Rationality{witness_->mean_index(), false});
    close("irrationality", std::move(end));
  }

  void integer_mean() {
    SymbolicFact mean{FactKind::kMeanIndexEquals, "ncg5-mean", "mean index = p = " + pretty(pinned_),
                      {}, {}, {}};
    push(std::move(mean));

    SymbolicFact end{FactKind::kContradiction, "integrality", "", {}, {}, {}};
    if (*p_parity_ == 0) {
      const ExactReal half = pinned_ / ExactReal(2);
      end.statement = "p is even and p = mean index > 0, so 1 > " + pretty(half) + " = p/2 ≥ 1";
      end.claims.emplace_back(expect(half, Relation::kLt, ExactReal(1), true));
      end.claims.emplace_back(expect(half, Relation::kGe, ExactReal(1), false));
    } else {
      const Int fl = pinned_.floor().convert_to<Int>();
      end.statement = "p = " + pretty(pinned_) + " lies strictly between " + std::to_string(fl) +
                      " and " + std::to_string(fl + 1) + ", so p is not an integer";
      end.claims.emplace_back(expect(ExactReal(fl), Relation::kLt, pinned_, true));
      end.claims.emplace_back(expect(pinned_, Relation::kLt, ExactReal(fl + 1), true));
      end.claims.emplace_back(expect(ExactReal(fl), Relation::kEq, pinned_, false));
    }
    close("integrality", std::move(end));
  }

  int n_;
  NcgCase ncg_;
  std::optional<int> p_parity_;
  Int base_;
  ProofTrace trace_;
  std::optional<GeodesicModel> witness_;
  ExactReal pinned_;
};

ProofTrace vacuous_trace(int n, NcgCase ncg) {
  ProofTrace t;
  t.n = n;
  t.ncg = ncg;
  auto f = shape_fact(n, ncg, false);
  t.verdict = {Verdict::Type::kVacuous, f.statement};
  t.steps.push_back(std::move(f));
  return t;
}

}  // namespace

std::string to_string(Relation r) {
  switch (r) {
    case Relation::kLt: return "<";
    case Relation::kLe: return "<=";
    case Relation::kEq: return "==";
    case Relation::kNe: return "!=";
    case Relation::kGe: return ">=";
    case Relation::kGt: return ">";
  }
  return "?";
}

Relation parse_relation(const std::string& text) {
  for (auto r : {Relation::kLt, Relation::kLe, Relation::kEq, Relation::kNe, Relation::kGe, Relation::kGt}) {
    if (to_string(r) == text) return r;
  }
  throw ParseError("op", "unknown relation '" + text + "'");
}

bool evaluate(const ExactReal& lhs, Relation op, const ExactReal& rhs) {
  const auto c = compare(lhs, rhs);
  switch (op) {
    case Relation::kLt: return c < 0;
    case Relation::kLe: return c <= 0;
    case Relation::kEq: return c == 0;
    case Relation::kNe: return c != 0;
    case Relation::kGe: return c >= 0;
    case Relation::kGt: return c > 0;
  }
  return false;
}

namespace {
constexpr std::pair<FactKind, const char*> kFactNames[] = {
    {FactKind::kShapeConstraint, "ShapeConstraint"}, {FactKind::kParityPattern, "ParityPattern"},
    {FactKind::kIndexEquals, "IndexEquals"},         {FactKind::kIndexRange, "IndexRange"},
    {FactKind::kMeanIndexEquals, "MeanIndexEquals"}, {FactKind::kMeanIndexBound, "MeanIndexBound"},
    {FactKind::kMorseZeroParity, "MorseZeroParity"}, {FactKind::kFloorSumRange, "FloorSumRange"},
    {FactKind::kContradiction, "Contradiction"},
};
}  // namespace

std::string to_string(FactKind kind) {
  for (const auto& [k, name] : kFactNames) {
    if (k == kind) return name;
  }
  return "?";
}

FactKind parse_fact_kind(const std::string& text) {
  for (const auto& [k, name] : kFactNames) {
    if (text == name) return k;
  }
  throw ParseError("kind", "unknown fact kind '" + text + "'");
}

std::string ProofTrace::subcase() const {
  if (!p_parity) return "";
  return *p_parity == 0 ? "p even" : "p odd";
}

bool ThetaSet::contains(std::int64_t q) const {
  return std::find(members.begin(), members.end(), q) != members.end();
}

ThetaSet theta_set(int n) {
  if (n < 2) throw RangeError("sphere dimension must be at least 2");
  ThetaSet t{n, {}};
  const Int hi = n % 2 == 0 ? 3 * n - 5 : 2 * n - 4;
  for (Int j = n - 1; j <= hi; j += 2) t.members.push_back(j);
  return t;
}

std::vector<std::int64_t> floor_sum_range(std::int64_t m, std::int64_t terms, const ExactReal& total) {
  if (m < 1 || terms < 1) throw RangeError("m and terms must be positive");
  if (total.sign() <= 0 || total >= ExactReal(m * terms)) {
    throw InconsistentConstraint("total " + total.to_string() + " outside (0, m*terms)");
  }
  const ExactReal lower = total - ExactReal(terms);
  const Int lo = std::max<Int>(0, lower.floor().convert_to<Int>() + 1);
  const Int hi = total.ceil().convert_to<Int>() - 1;
  return iota_set(lo, hi);
}

SymbolicFact check_positive_mean_index(int n) {
  if (n < 2) throw RangeError("sphere dimension must be at least 2");
  // Mean index 0 puts every iterate in degree 0; one entry stands for all.
  MorseTable table{std::vector<Int>(static_cast<std::size_t>(n), 0)};
  table.values[0] = 1;
  return pointwise_fact(n, table, FactKind::kMeanIndexBound, "positive-mean-index",
                        "mean index 0 would give i(c^m) = 0 for all m, so M_{n-1} = 0 >= b_{n-1} = 1 "
                        "fails; hence mean index > 0");
}

SymbolicFact check_index_upper_bound(int n) {
  if (n < 2) throw RangeError("sphere dimension must be at least 2");
  // i(c^m) >= i(c) > n-1 leaves every degree up to n-1 empty.
  MorseTable table{std::vector<Int>(static_cast<std::size_t>(n), 0)};
  return pointwise_fact(n, table, FactKind::kIndexRange, "index-upper-bound",
                        "i(c) > n-1 would keep every i(c^m) above n-1, so M_{n-1} = 0 >= b_{n-1} = 1 "
                        "fails; hence i(c) <= n-1");
}

SymbolicFact check_index_lower_bound(int n, ParityConfig config) {
  const bool odd_config = config == ParityConfig::kOddIndicesEvenN;
  if (odd_config != (n % 2 == 0)) {
    throw PreconditionError("parity configuration matches n",
                            "configuration does not apply to n = " + std::to_string(n));
  }
  SymbolicFact f{FactKind::kIndexRange, "index-lower-bound", "", {}, {}, {}};
  std::vector<Int> hypotheses;
  for (Int i0 = odd_config ? 1 : 0; i0 <= n - 3; i0 += 2) {
    MorseTable table{std::vector<Int>(static_cast<std::size_t>(i0 + 2), 0)};
    table.values[static_cast<std::size_t>(i0)] = 1;
    const auto violations = check_morse_inequalities(table, betti_table(n, i0 + 1), i0 + 1);
    const Violation* v = find_violation(violations, i0 + 1, Violation::Kind::kAlternating);
    if (v == nullptr) throw std::logic_error("expected an alternating violation");
    f.evidence.push_back(*v);
    f.claims.emplace_back(expect(ExactReal(v->lhs), Relation::kGe, ExactReal(v->rhs), false));
    hypotheses.push_back(i0);
  }
  f.values["refuted_indices"] = set_string(hypotheses);
  if (hypotheses.empty()) {
    f.statement = "i(c) >= n-1: no index of the required parity lies below n-1 (vacuous)";
  } else {
    f.statement = "i(c) >= n-1: each i(c) in " + set_string(hypotheses) +
                  " leaves M empty one degree above it, and the alternating inequality there reads "
                  "-1 >= 0";
  }
  return f;
}

UniquenessOutcome check_iterate_uniqueness(int n, const std::map<std::int64_t, std::int64_t>& index_values,
                                           std::int64_t k) {
  const Int base = n - 1;
  const auto first = index_values.find(1);
  if (first == index_values.end() || first->second != base) {
    throw PreconditionError("i(c) = n-1", "index of c^1 must be " + std::to_string(base));
  }
  for (const auto& [m, i] : index_values) {
    const Int d = i - base;
    if (m < 1 || d < 0 || d % 2 != 0 || d / 2 > m - 1) {
      throw PreconditionError("(i(c^m) - i(c))/2 in {0, ..., m-1}",
                              "i(c^" + std::to_string(m) + ") = " + std::to_string(i));
    }
  }
  if (k < 0) throw RangeError("k must be non-negative");
  const auto theta = theta_set(n);
  const Int t_max = std::min<Int>(k, (theta.members.back() - base) / 2);
  for (Int m = 1; m <= t_max + 1; ++m) {
    if (!index_values.contains(m)) {
      throw PreconditionError("index values cover m = 1..k+1",
                              "missing i(c^" + std::to_string(m) + ")");
    }
  }

  UniquenessOutcome out;
  out.fact = {FactKind::kIndexEquals, "iterate-uniqueness", "", {}, {}, {}};
  for (Int t = 0; t <= t_max; ++t) {
    const Int deg = base + 2 * t;
    std::vector<Int> hits;
    for (const auto& [m, i] : index_values) {
      if (i == deg) hits.push_back(m);
    }
    if (hits.empty()) throw std::logic_error("degree without iterate despite contiguous data");
    if (hits.size() >= 2) {
      MorseTable table{std::vector<Int>(static_cast<std::size_t>(deg + 2), 0)};
      for (const auto& [m, i] : index_values) {
        if (i <= deg + 1) ++table.values[static_cast<std::size_t>(i)];
      }
      const auto violations = check_morse_inequalities(table, betti_table(n, deg + 1), deg + 1);
      const Violation* v = find_violation(violations, deg + 1, Violation::Kind::kAlternating);
      if (v == nullptr) throw std::logic_error("expected an alternating violation above the duplicate");
      out.unique = false;
      out.duplicate_degree = deg;
      out.contradiction = *v;
      out.fact.kind = FactKind::kIndexRange;
      out.fact.statement = "degree " + std::to_string(deg) + " is reached by iterates m in " +
                           set_string(hits) + "; the alternating inequality at q = " +
                           std::to_string(deg + 1) + " reads " + std::to_string(v->lhs) +
                           " >= " + std::to_string(v->rhs) + ", which fails";
      out.fact.values["duplicate_degree"] = std::to_string(deg);
      out.fact.claims.emplace_back(expect(ExactReal(v->lhs), Relation::kGe, ExactReal(v->rhs), false));
      out.fact.evidence.push_back(*v);
      return out;
    }
    out.fact.values["degree_" + std::to_string(deg)] = "m=" + std::to_string(hits.front());
    out.fact.claims.emplace_back(
        expect(ExactReal(static_cast<Int>(hits.size())), Relation::kEq, ExactReal(1), true));
  }
  out.fact.statement = "each degree n-1+2t of Theta(n) with t <= " + std::to_string(t_max) +
                       " is the index of exactly one iterate";
  return out;
}

std::optional<GeodesicModel> witness_model(int n, NcgCase ncg, int p_parity) {
  if (!shape_feasible(n, ncg)) return std::nullopt;
  const ExactReal rho = ExactReal::make(0, 1, 2, 2);  // sqrt(2)/2
  int k = 0;
  switch (ncg) {
    case NcgCase::kNcg1: k = n - 1; break;
    case NcgCase::kNcg2: k = 2; break;
    case NcgCase::kNcg3: k = 3; break;
    case NcgCase::kNcg4: k = 1; break;
    case NcgCase::kNcg5: k = 0; break;
  }
  std::vector<Block> blocks;
  for (int i = 0; i < k; ++i) blocks.emplace_back(Rotation{rho});
  for (int i = k; i < n - 1; ++i) blocks.emplace_back(Hyperbolic{ExactReal(2)});
  const Int p = ncg == NcgCase::kNcg1 ? 0 : (p_parity == 0 ? 2 : 1);
  return GeodesicModel(n, NormalFormDecomposition(std::move(blocks)), p, ncg);
}

std::vector<ProofTrace> replay(int n, std::optional<NcgCase> only) {
  if (n < 2) throw RangeError("sphere dimension must be at least 2");
  std::vector<ProofTrace> out;
  for (int c = 1; c <= 5; ++c) {
    const auto ncg = static_cast<NcgCase>(c);
    if (only && *only != ncg) continue;
    if (!shape_feasible(n, ncg)) {
      out.push_back(vacuous_trace(n, ncg));
    } else if (ncg == NcgCase::kNcg1) {
      out.push_back(TraceBuilder(n, ncg, std::nullopt).build());
    } else {
      for (int parity = 0; parity <= 1; ++parity) out.push_back(TraceBuilder(n, ncg, parity).build());
    }
  }
  return out;
}

std::vector<std::vector<ProofTrace>> replay_range_serial(int lo, int hi) {
  std::vector<std::vector<ProofTrace>> out;
  for (int n = lo; n <= hi; ++n) out.push_back(replay(n));
  return out;
}

std::vector<std::vector<ProofTrace>> replay_range(int lo, int hi) {
  if (hi < lo) return {};
  std::vector<std::vector<ProofTrace>> out(static_cast<std::size_t>(hi - lo + 1));
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (int n = lo; n <= hi; ++n) {
    try {
      out[static_cast<std::size_t>(n - lo)] = replay(n);
    } catch (...) {
#pragma omp critical(indexlab_replay_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::vector<std::string> verify_trace(const ProofTrace& trace) {
  std::vector<std::string> problems;
  auto where = [&](std::size_t i) { return "step " + std::to_string(i) + ": "; };
  if (trace.steps.empty()) problems.push_back("trace has no steps");

  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& step = trace.steps[i];
    if (step.rule.empty()) problems.push_back(where(i) + "missing justification");
    for (const auto& claim : step.claims) {
      try {
        if (const auto* c = std::get_if<Comparison>(&claim)) {
          if (evaluate(c->lhs, c->op, c->rhs) != c->holds) {
            problems.push_back(where(i) + c->lhs.to_string() + " " + to_string(c->op) + " " +
                               c->rhs.to_string() + " has the wrong truth value");
          }
        } else if (const auto* s = std::get_if<Inclusion>(&claim)) {
          if (is_subset(s->subset, s->superset) != s->holds) {
            problems.push_back(where(i) + "inclusion " + set_string(s->subset) + " in " +
                               set_string(s->superset) + " has the wrong truth value");
          }
        } else if (const auto* r = std::get_if<Rationality>(&claim)) {
          if (r->value.is_rational() != r->rational) {
            problems.push_back(where(i) + "rationality of " + r->value.to_string() + " is wrong");
          }
        }
      } catch (const Error& e) {
        problems.push_back(where(i) + e.what());
      }
    }
    for (const auto& v : step.evidence) {
      if (v.lhs >= v.rhs) problems.push_back(where(i) + "evidence " + v.describe() + " is not a violation");
    }
  }

  if (trace.steps.empty()) return problems;
  const auto& last = trace.steps.back();
  if (trace.verdict.type == Verdict::Type::kContradiction) {
    if (last.kind != FactKind::kContradiction) {
      problems.push_back("contradiction verdict without a final contradiction step");
    }
    bool refuted = false, saw_rational = false, saw_irrational = false;
    for (const auto& claim : last.claims) {
      if (const auto* c = std::get_if<Comparison>(&claim)) refuted |= !c->holds;
      if (const auto* r = std::get_if<Rationality>(&claim)) {
        (r->rational ? saw_rational : saw_irrational) = true;
      }
    }
    if (!refuted && !(saw_rational && saw_irrational)) {
      problems.push_back("final step does not refute anything");
    }
  } else {
    bool unsatisfiable = false;
    for (const auto& step : trace.steps) {
      if (step.kind != FactKind::kShapeConstraint) continue;
      for (const auto& claim : step.claims) {
        if (const auto* c = std::get_if<Comparison>(&claim)) unsatisfiable |= !c->holds;
      }
    }
    if (!unsatisfiable) problems.push_back("vacuous verdict without an unsatisfiable shape constraint");
  }
  return problems;
}

bool is_closed(const ProofTrace& trace) { return verify_trace(trace).empty(); }

}  // namespace indexlab
