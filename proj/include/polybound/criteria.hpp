#ifndef POLYBOUND_CRITERIA_HPP
#define POLYBOUND_CRITERIA_HPP

// Degree-driven bounds on the number of irreducible factors of
// f = a_0 + a_1 y + ... + a_n y^n over K[x], and their s-variate analogues.
//
// Every check runs its hypotheses in the same order (arity, n >= 2,
// a_0 a_n != 0, content, degree inequalities, factor-count conditions) and
// reports the first one that fails. Failure tags never mention a direction,
// so a check on f and its mirror on reciprocal_y(f) produce identical verdicts.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polybound/bipoly.hpp"
#include "polybound/multivariate.hpp"
#include "polybound/parser.hpp"
#include "polybound/uni_factor.hpp"

namespace polybound {

enum class CriterionId { T1F, T1R, T2F, T2R, C2F, C2R, PGEN, PBI, WGEN, WBI, M4, M5 };

inline constexpr std::array<CriterionId, 10> kBivariateCriteria{
    CriterionId::T1F,  CriterionId::T1R, CriterionId::T2F,  CriterionId::T2R, CriterionId::C2F,
    CriterionId::C2R, CriterionId::PGEN, CriterionId::PBI, CriterionId::WGEN, CriterionId::WBI};
inline constexpr std::array<CriterionId, 2> kMultivariateCriteria{CriterionId::M4, CriterionId::M5};

constexpr std::string_view criterion_name(CriterionId id) noexcept {
  constexpr std::array<std::string_view, 12> names{"T1F", "T1R",  "T2F", "T2R",  "C2F", "C2R",
                                                   "PGEN", "PBI", "WGEN", "WBI", "M4",  "M5"};
  return names[static_cast<std::size_t>(id)];
}

inline std::optional<CriterionId> criterion_from_name(std::string_view name) {
  for (int k = 0; k < 12; ++k)
    if (criterion_name(static_cast<CriterionId>(k)) == name) return static_cast<CriterionId>(k);
  return std::nullopt;
}

/// One-line statement of what the criterion checks and the bound it yields.
constexpr std::string_view criterion_summary(CriterionId id) noexcept {
  switch (id) {
    case CriterionId::T1F: return "a_0 has the largest degree: bound nu_0";
    case CriterionId::T1R: return "a_n has the largest degree: bound nu_n";
    case CriterionId::T2F: return "reducible dominant a_0, deg a_n >= deg a_0 - deg q: bound min(nu_0, nu_n)";
    case CriterionId::T2R: return "reducible dominant a_n, deg a_0 >= deg a_n - deg q: bound min(nu_0, nu_n)";
    case CriterionId::C2F: return "dominant a_0 with an irreducible end coefficient: irreducible";
    case CriterionId::C2R: return "dominant a_n with an irreducible end coefficient: irreducible";
    case CriterionId::PGEN: return "Perron type, one dominant a_j and constant a_n: bound n-j";
    case CriterionId::PBI: return "Perron type, one dominant a_j and constant a_0, a_n: bound min(j, n-j)";
    case CriterionId::WGEN: return "weighted dominant a_j: bound n-j";
    case CriterionId::WBI: return "two-sided weighted dominant a_j: bound min(j, n-j)";
    case CriterionId::M4: return "dominant a_j in the pivot variable, a_n free of the pivot: bound n-j";
    case CriterionId::M5: return "weighted dominant a_j in the pivot variable: bound n-j";
  }
  return "";
}

namespace hypothesis {
inline constexpr std::string_view kArity = "arity";
inline constexpr std::string_view kDegreeY = "n>=2";
inline constexpr std::string_view kEndsNonzero = "a0*an!=0";
inline constexpr std::string_view kContent = "content";
inline constexpr std::string_view kContentUnverifiable = "content-unverifiable";
inline constexpr std::string_view kLeadConstant = "an-constant";
inline constexpr std::string_view kTailConstant = "a0-constant";
inline constexpr std::string_view kLeadFreeOfPivot = "an-free-of-pivot";
inline constexpr std::string_view kDegreeInequality = "degree-inequality";
inline constexpr std::string_view kReducible = "coefficient-reducible";
inline constexpr std::string_view kDegQ = "deg-q-condition";
inline constexpr std::string_view kIrreducible = "coefficient-irreducible";
inline constexpr std::string_view kDegreeCap = "degree-cap";
}  // namespace hypothesis

struct Witness {
  std::int64_t n = 0;
  std::optional<std::int64_t> j;
  std::vector<Degree> degrees;
  std::optional<std::int64_t> nu0, nun, deg_q;
  std::vector<std::string> checks;
};

struct CriterionVerdict {
  CriterionId id{};
  bool applicable = false;
  std::int64_t bound = 0;
  std::string failed_hypothesis;
  Witness witness;

  /// Same status, bound and failure tag; the witness is not compared.
  bool same_outcome(const CriterionVerdict& o) const {
    return applicable == o.applicable && bound == o.bound && failed_hypothesis == o.failed_hypothesis;
  }
};

/// Factor data of an end coefficient.
struct EndInfo {
  std::int64_t nu = 0;
  std::int64_t min_degree = 0;  // 0 for constants
};

namespace detail {

inline std::string deg_str(Degree d) { return d.to_string(); }

inline Degree shifted(Degree d, std::int64_t k) { return d.is_finite() ? Degree(d.value() + k) : d; }

/// Unique j in [lo, hi] with d_j > d_i for every i != j.
inline std::optional<std::int64_t> strict_max_index(std::span<const Degree> d, std::int64_t lo, std::int64_t hi) {
  for (std::int64_t j = lo; j <= hi; ++j) {
    bool ok = d[j].is_finite();
    for (std::size_t i = 0; ok && i < d.size(); ++i)
      if (static_cast<std::int64_t>(i) != j && !(d[j] > d[i])) ok = false;
    if (ok) return j;
  }
  return std::nullopt;
}

/// Unique j in [lo, hi] with d_j > d_i + penalty(i, j) for every i != j.
template <typename Penalty>
std::optional<std::int64_t> weighted_index(std::span<const Degree> d, std::int64_t lo, std::int64_t hi,
                                           Penalty penalty) {
  for (std::int64_t j = lo; j <= hi; ++j) {
    bool ok = d[j].is_finite();
    for (std::size_t i = 0; ok && i < d.size(); ++i) {
      const auto ii = static_cast<std::int64_t>(i);
      if (ii != j && !(d[j] > shifted(d[i], penalty(ii, j)))) ok = false;
    }
    if (ok) return j;
  }
  return std::nullopt;
}

inline Degree max_except(std::span<const Degree> d, std::size_t skip) {
  Degree m;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (i != skip) m = std::max(m, d[i]);
  return m;
}

template <typename Penalty>
Degree weighted_max_except(std::span<const Degree> d, std::int64_t j, Penalty penalty) {
  Degree m;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto ii = static_cast<std::int64_t>(i);
    if (ii != j) m = std::max(m, shifted(d[i], penalty(ii, j)));
  }
  return m;
}

/// Degree data and cached factor information shared by the checks.
class CheckBase {
 public:
  std::int64_t n() const noexcept { return n_; }
  std::span<const Degree> degrees() const noexcept { return degrees_; }
  const std::string& label() const noexcept { return label_; }

 protected:
  std::int64_t n_ = 0;
  std::vector<Degree> degrees_;
  std::string label_ = "deg";
};

}  // namespace detail

/// Everything the bivariate checks read from f, computed once.
template <FieldElement E>
class BivariateContext : public detail::CheckBase {
 public:
  explicit BivariateContext(BiPoly<E> f) : f_(std::move(f)) {
    if (f_.is_zero()) throw Error(Errc::ZeroPolynomial, "criteria need a nonzero polynomial");
    n_ = f_.deg_y().value();
    for (const auto& a : f_.coefficients()) degrees_.push_back(a.degree());
  }
  const BiPoly<E>& poly() const noexcept { return f_; }

  bool content_free() const {
    if (!content_free_) content_free_ = content_y(f_).is_constant();
    return *content_free_;
  }
  /// Factor data of a_0 (lead = false) or a_n; nullopt when the factorizer cap is exceeded.
  const std::optional<EndInfo>& end_info(bool lead) const {
    auto& slot = lead ? lead_ : tail_;
    if (!slot.first) {
      slot.first = true;
      const UniPoly<E> a = f_.coeff(lead ? static_cast<std::size_t>(n_) : 0);
      try {
        const auto fm = factor_uni(a);
        EndInfo info{static_cast<std::int64_t>(fm.count()), 0};
        if (!fm.factors.empty()) info.min_degree = fm.factors.front().first.degree().value();
        slot.second = info;
      } catch (const Error& e) {
        if (e.code() != Errc::DegreeCapExceeded) throw;
      }
    }
    return slot.second;
  }

 private:
  BiPoly<E> f_;
  mutable std::optional<bool> content_free_;
  mutable std::pair<bool, std::optional<EndInfo>> lead_, tail_;
};

/// The s-variate view: coefficients in x_s with degrees taken in x_{s-1}.
template <FieldElement E>
class MultivariateContext : public detail::CheckBase {
 public:
  MultivariateContext(const MultiPoly<E>& f, VariableFrame frame, bool assume_primitive)
      : f_(f), frame_(std::move(frame)), assume_primitive_(assume_primitive) {
    coeffs_ = coefficients_in_main(f_, frame_);
    n_ = static_cast<std::int64_t>(coeffs_.size()) - 1;
    for (const auto& a : coeffs_) degrees_.push_back(a.deg(frame_.pivot_index()));
    label_ = "deg_" + std::to_string(frame_.pivot_index());
  }
  const VariableFrame& frame() const noexcept { return frame_; }
  std::span<const MultiPoly<E>> coefficients() const noexcept { return coeffs_; }
  bool assume_primitive() const noexcept { return assume_primitive_; }

  /// nullopt when the content cannot be computed for this arity.
  std::optional<bool> content_free() const {
    if (frame_.arity() != 3) return std::nullopt;
    if (!content_free_) content_free_ = content_pivot_ring(f_, frame_).is_constant();
    return content_free_;
  }

 private:
  MultiPoly<E> f_;
  VariableFrame frame_;
  bool assume_primitive_;
  std::vector<MultiPoly<E>> coeffs_;
  mutable std::optional<bool> content_free_;
};

namespace detail {

class VerdictBuilder {
 public:
  VerdictBuilder(CriterionId id, const CheckBase& ctx) {
    v_.id = id;
    v_.witness.n = ctx.n();
    v_.witness.degrees.assign(ctx.degrees().begin(), ctx.degrees().end());
  }
  CriterionVerdict fail(std::string_view tag) {
    v_.applicable = false;
    v_.failed_hypothesis = std::string(tag);
    return std::move(v_);
  }
  CriterionVerdict pass(std::int64_t bound) {
    v_.applicable = true;
    v_.bound = bound;
    return std::move(v_);
  }
  void note(std::string s) { v_.witness.checks.push_back(std::move(s)); }
  Witness& witness() { return v_.witness; }

 private:
  CriterionVerdict v_;
};

/// n >= 2 and a_0 a_n != 0; returns the failure tag if any.
inline std::optional<std::string_view> check_shape(const CheckBase& ctx, VerdictBuilder& b) {
  if (ctx.n() < 2) {
    b.note("n = " + std::to_string(ctx.n()) + " < 2");
    return hypothesis::kDegreeY;
  }
  const auto d = ctx.degrees();
  if (!d.front().is_finite() || !d.back().is_finite()) {
    b.note("a_0 a_n = 0");
    return hypothesis::kEndsNonzero;
  }
  b.note("n = " + std::to_string(ctx.n()) + " >= 2, a_0 a_n != 0");
  return std::nullopt;
}

inline std::string end_name(bool lead) { return lead ? "a_n" : "a_0"; }
inline std::string nu_name(bool lead) { return lead ? "nu_n" : "nu_0"; }

/// deg a_e > max_{i != e} deg a_i for the end e (a_n when lead).
inline bool check_end_dominant(const CheckBase& ctx, bool lead, VerdictBuilder& b) {
  const auto d = ctx.degrees();
  const std::size_t e = lead ? d.size() - 1 : 0;
  const Degree m = max_except(d, e);
  const bool ok = d[e] > m;
  b.note(ctx.label() + " " + end_name(lead) + " = " + deg_str(d[e]) + (ok ? " > " : " <= ") + deg_str(m) +
         " = max of the other degrees");
  return ok;
}

inline void record_end(const EndInfo& info, bool lead, VerdictBuilder& b) {
  (lead ? b.witness().nun : b.witness().nu0) = info.nu;
  b.note(nu_name(lead) + " = " + std::to_string(info.nu));
}

template <FieldElement E>
CriterionVerdict check_t1(CriterionId id, const BivariateContext<E>& ctx, bool lead) {
  VerdictBuilder b(id, ctx);
  if (auto tag = check_shape(ctx, b)) return b.fail(*tag);
  if (!ctx.content_free()) return b.fail(hypothesis::kContent);
  if (!check_end_dominant(ctx, lead, b)) return b.fail(hypothesis::kDegreeInequality);
  const auto& info = ctx.end_info(lead);
  if (!info) return b.fail(hypothesis::kDegreeCap);
  record_end(*info, lead, b);
  return b.pass(info->nu);
}

/// deg a_other >= deg a_e - deg q, q a smallest irreducible factor of a_e.
inline bool check_deg_q(const CheckBase& ctx, bool lead, const EndInfo& dominant, VerdictBuilder& b) {
  const auto d = ctx.degrees();
  const Degree de = lead ? d.back() : d.front();
  const Degree dother = lead ? d.front() : d.back();
  b.witness().deg_q = dominant.min_degree;
  const std::int64_t rhs = de.value() - dominant.min_degree;
  const bool ok = dother >= Degree(rhs);
  b.note(ctx.label() + " " + end_name(!lead) + " = " + deg_str(dother) + (ok ? " >= " : " < ") + std::to_string(rhs) +
         " = " + ctx.label() + " " + end_name(lead) + " - deg q");
  return ok;
}

template <FieldElement E>
CriterionVerdict check_t2(CriterionId id, const BivariateContext<E>& ctx, bool lead) {
  VerdictBuilder b(id, ctx);
  if (auto tag = check_shape(ctx, b)) return b.fail(*tag);
  if (!ctx.content_free()) return b.fail(hypothesis::kContent);
  if (!check_end_dominant(ctx, lead, b)) return b.fail(hypothesis::kDegreeInequality);
  const auto& dom = ctx.end_info(lead);
  if (!dom) return b.fail(hypothesis::kDegreeCap);
  record_end(*dom, lead, b);
  if (dom->nu < 2) return b.fail(hypothesis::kReducible);
  if (!check_deg_q(ctx, lead, *dom, b)) return b.fail(hypothesis::kDegQ);
  const auto& other = ctx.end_info(!lead);
  if (!other) return b.fail(hypothesis::kDegreeCap);
  record_end(*other, !lead, b);
  return b.pass(std::min(dom->nu, other->nu));
}

template <FieldElement E>
CriterionVerdict check_c2(CriterionId id, const BivariateContext<E>& ctx, bool lead) {
  VerdictBuilder b(id, ctx);
  if (auto tag = check_shape(ctx, b)) return b.fail(*tag);
  if (!ctx.content_free()) return b.fail(hypothesis::kContent);
  if (!check_end_dominant(ctx, lead, b)) return b.fail(hypothesis::kDegreeInequality);
  const auto& dom = ctx.end_info(lead);
  if (!dom) return b.fail(hypothesis::kDegreeCap);
  record_end(*dom, lead, b);
  if (dom->nu == 1) {
    b.note(end_name(lead) + " is irreducible");
    return b.pass(1);
  }
  const auto& other = ctx.end_info(!lead);
  if (!other) return b.fail(hypothesis::kDegreeCap);
  record_end(*other, !lead, b);
  if (other->nu != 1) return b.fail(hypothesis::kIrreducible);
  b.note(end_name(!lead) + " is irreducible");
  if (!check_deg_q(ctx, lead, *dom, b)) return b.fail(hypothesis::kDegQ);
  return b.pass(1);
}

inline bool check_constant(const CheckBase& ctx, bool lead, VerdictBuilder& b) {
  const auto d = ctx.degrees();
  const Degree de = lead ? d.back() : d.front();
  const bool ok = de == Degree(0);
  b.note(ctx.label() + " " + end_name(lead) + " = " + deg_str(de) + (ok ? ", constant" : ", not constant"));
  return ok;
}

/// Unique strictly dominant a_j with j in [lo, hi]; records j.
inline std::optional<std::int64_t> find_dominant(const CheckBase& ctx, std::int64_t lo, std::int64_t hi,
                                                 VerdictBuilder& b) {
  const auto d = ctx.degrees();
  const auto j = strict_max_index(d, lo, hi);
  if (!j) {
    b.note("no j in [" + std::to_string(lo) + ", " + std::to_string(hi) + "] with " + ctx.label() +
           " a_j > max_{i!=j} " + ctx.label() + " a_i");
    return std::nullopt;
  }
  b.witness().j = *j;
  b.note(ctx.label() + " a_" + std::to_string(*j) + " = " + deg_str(d[*j]) + " > " +
         deg_str(max_except(d, static_cast<std::size_t>(*j))) + " = max_{i!=j} " + ctx.label() + " a_i");
  return j;
}

/// Unique j in [lo, hi] with deg a_j > deg a_i + penalty(i, j) for all i != j; records j.
template <typename Penalty>
std::optional<std::int64_t> find_weighted(const CheckBase& ctx, std::int64_t lo, std::int64_t hi, Penalty penalty,
                                          std::string_view form, VerdictBuilder& b) {
  const auto d = ctx.degrees();
  const auto j = weighted_index(d, lo, hi, penalty);
  if (!j) {
    b.note("no j in [" + std::to_string(lo) + ", " + std::to_string(hi) + "] with " + ctx.label() + " a_j > " +
           std::string(form));
    return std::nullopt;
  }
  b.witness().j = *j;
  b.note(ctx.label() + " a_" + std::to_string(*j) + " = " + deg_str(d[*j]) + " > " +
         deg_str(weighted_max_except(d, *j, penalty)) + " = " + std::string(form));
  return j;
}

inline CriterionVerdict check_perron(CriterionId id, const CheckBase& ctx) {
  VerdictBuilder b(id, ctx);
  if (auto tag = check_shape(ctx, b)) return b.fail(*tag);
  if (!check_constant(ctx, true, b)) return b.fail(hypothesis::kLeadConstant);
  const auto j = find_dominant(ctx, 0, ctx.n() - 1, b);
  if (!j) return b.fail(hypothesis::kDegreeInequality);
  return b.pass(ctx.n() - *j);
}

inline CriterionVerdict check_perron_two_sided(CriterionId id, const CheckBase& ctx) {
  VerdictBuilder b(id, ctx);
  if (auto tag = check_shape(ctx, b)) return b.fail(*tag);
  if (!check_constant(ctx, false, b)) return b.fail(hypothesis::kTailConstant);
  if (!check_constant(ctx, true, b)) return b.fail(hypothesis::kLeadConstant);
  const auto j = find_dominant(ctx, 1, ctx.n() - 1, b);
  if (!j) return b.fail(hypothesis::kDegreeInequality);
  return b.pass(std::min(*j, ctx.n() - *j));
}

/// Penalty (j - i) deg a_n used by the one-sided weighted conditions.
inline auto lead_penalty(const CheckBase& ctx) {
  const std::int64_t dn = ctx.degrees().back().value();
  return [dn](std::int64_t i, std::int64_t j) { return (j - i) * dn; };
}

inline std::optional<std::int64_t> find_weighted_one_sided(const CheckBase& ctx, VerdictBuilder& b) {
  const std::string form = "max_{i!=j}(" + ctx.label() + " a_i + (j-i) " + ctx.label() + " a_n)";
  return find_weighted(ctx, 0, ctx.n() - 1, lead_penalty(ctx), form, b);
}

template <FieldElement E>
CriterionVerdict check_weighted(CriterionId id, const BivariateContext<E>& ctx) {
  VerdictBuilder b(id, ctx);
  if (auto tag = check_shape(ctx, b)) return b.fail(*tag);
  if (!ctx.content_free()) return b.fail(hypothesis::kContent);
  const auto j = find_weighted_one_sided(ctx, b);
  if (!j) return b.fail(hypothesis::kDegreeInequality);
  return b.pass(ctx.n() - *j);
}

template <FieldElement E>
CriterionVerdict check_weighted_two_sided(CriterionId id, const BivariateContext<E>& ctx) {
  VerdictBuilder b(id, ctx);
  if (auto tag = check_shape(ctx, b)) return b.fail(*tag);
  if (!ctx.content_free()) return b.fail(hypothesis::kContent);
  const std::int64_t d0 = ctx.degrees().front().value();
  const std::int64_t dn = ctx.degrees().back().value();
  auto penalty = [d0, dn](std::int64_t i, std::int64_t j) { return i < j ? (j - i) * dn : (i - j) * d0; };
  const auto j = find_weighted(ctx, 1, ctx.n() - 1, penalty,
                               "max(max_{i<j}(deg a_i + (j-i) deg a_n), max_{i>j}(deg a_i + (i-j) deg a_0))", b);
  if (!j) return b.fail(hypothesis::kDegreeInequality);
  return b.pass(std::min(*j, ctx.n() - *j));
}

}  // namespace detail

template <FieldElement E>
CriterionVerdict check_criterion(CriterionId id, const BivariateContext<E>& ctx) {
  switch (id) {
    case CriterionId::T1F: return detail::check_t1(id, ctx, false);
    case CriterionId::T1R: return detail::check_t1(id, ctx, true);
    case CriterionId::T2F: return detail::check_t2(id, ctx, false);
    case CriterionId::T2R: return detail::check_t2(id, ctx, true);
    case CriterionId::C2F: return detail::check_c2(id, ctx, false);
    case CriterionId::C2R: return detail::check_c2(id, ctx, true);
    case CriterionId::PGEN: return detail::check_perron(id, ctx);
    case CriterionId::PBI: return detail::check_perron_two_sided(id, ctx);
    case CriterionId::WGEN: return detail::check_weighted(id, ctx);
    case CriterionId::WBI: return detail::check_weighted_two_sided(id, ctx);
    default: break;
  }
  throw Error(Errc::ArityMismatch, std::string(criterion_name(id)) + " needs at least three variables");
}

template <FieldElement E>
CriterionVerdict check_criterion(CriterionId id, const MultivariateContext<E>& ctx) {
  if (id == CriterionId::M4) {
    detail::VerdictBuilder b(id, ctx);
    if (auto tag = detail::check_shape(ctx, b)) return b.fail(*tag);
    const bool free = is_free_of_pivot(ctx.coefficients().back(), ctx.frame());
    b.note(std::string("a_n ") + (free ? "is" : "is not") + " free of the pivot variable");
    if (!free) return b.fail(hypothesis::kLeadFreeOfPivot);
    const auto j = detail::find_dominant(ctx, 0, ctx.n() - 1, b);
    if (!j) return b.fail(hypothesis::kDegreeInequality);
    return b.pass(ctx.n() - *j);
  }
  if (id == CriterionId::M5) {
    detail::VerdictBuilder b(id, ctx);
    if (auto tag = detail::check_shape(ctx, b)) return b.fail(*tag);
    if (const auto cf = ctx.content_free()) {
      if (!*cf) return b.fail(hypothesis::kContent);
    } else if (ctx.assume_primitive()) {
      b.note("content assumed trivial (not verified)");
    } else {
      return b.fail(hypothesis::kContentUnverifiable);
    }
    const auto j = detail::find_weighted_one_sided(ctx, b);
    if (!j) return b.fail(hypothesis::kDegreeInequality);
    return b.pass(ctx.n() - *j);
  }
  throw Error(Errc::ArityMismatch, std::string(criterion_name(id)) + " needs a bivariate input");
}

/// Checks one criterion on f as given; no y-power is stripped.
template <FieldElement E>
CriterionVerdict check_criterion(CriterionId id, const BiPoly<E>& f) {
  return check_criterion(id, BivariateContext<E>(f));
}

template <FieldElement E>
CriterionVerdict check_criterion(CriterionId id, const MultiPoly<E>& f, const VariableFrame& frame,
                                 bool assume_primitive = false) {
  return check_criterion(id, MultivariateContext<E>(f, frame, assume_primitive));
}

struct AnalyzeOptions {
  bool assume_primitive = false;
};

struct AnalysisReport {
  std::string input;
  std::string field;
  std::vector<std::string> variables;
  std::size_t stripped_power = 0;
  std::optional<std::string> content;  // nullopt when not computable
  std::vector<CriterionVerdict> verdicts;
  std::optional<std::int64_t> best_bound;
  std::optional<CriterionId> certificate;
  std::vector<std::string> assumptions;
};

namespace detail {
// The certificate names C2F or C2R when either reaches bound 1, else
// the first criterion in id order reaching bound 1.
inline void finish_report(AnalysisReport& r) {
  for (const auto& v : r.verdicts) {
    if (!v.applicable) continue;
    if (!r.best_bound || v.bound < *r.best_bound) r.best_bound = v.bound;
    if (v.bound != 1) continue;
    const bool direct = v.id == CriterionId::C2F || v.id == CriterionId::C2R;
    const bool have_direct = r.certificate == CriterionId::C2F || r.certificate == CriterionId::C2R;
    if (!r.certificate || (direct && !have_direct)) r.certificate = v.id;
  }
}
}  // namespace detail

/// Strips the power of the last variable, computes the content and runs every
/// criterion valid for the arity (two variables, or three and more).
template <FieldElement E>
AnalysisReport analyze(const MultiPoly<E>& f, std::span<const std::string> vars, const AnalyzeOptions& opt = {}) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "cannot analyze the zero polynomial");
  AnalysisReport r;
  r.input = format_poly(f, vars);
  r.field = f.field().to_string();
  r.variables.assign(vars.begin(), vars.end());
  if (vars.size() == 2) {
    auto [k, g] = strip_y_power(to_bipoly(f));
    r.stripped_power = k;
    r.content = format_poly(content_y(g), vars[0]);
    const BivariateContext<E> ctx(std::move(g));
    for (CriterionId id : kBivariateCriteria) r.verdicts.push_back(check_criterion(id, ctx));
  } else if (vars.size() >= 3) {
    const VariableFrame frame(r.variables);
    auto [k, g] = strip_main_power(f, frame);
    r.stripped_power = k;
    if (frame.arity() == 3) {
      r.content = format_poly(content_pivot_ring(g, frame), vars);
    } else if (opt.assume_primitive) {
      r.assumptions.push_back("content in the coefficient ring asserted trivial by --assume-primitive");
    }
    const MultivariateContext<E> ctx(g, frame, opt.assume_primitive);
    for (CriterionId id : kMultivariateCriteria) r.verdicts.push_back(check_criterion(id, ctx));
  } else {
    throw Error(Errc::ArityMismatch, "analysis needs at least two variables");
  }
  detail::finish_report(r);
  return r;
}

}  // namespace polybound

#endif  // POLYBOUND_CRITERIA_HPP
