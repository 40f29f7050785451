#include "indexlab/iteration.hpp"

#include <algorithm>
#include <cctype>

namespace indexlab {

namespace {

int mod2(std::int64_t v) { return static_cast<int>(((v % 2) + 2) % 2); }

}  // namespace

std::string to_string(NcgCase c) { return "NCG" + std::to_string(static_cast<int>(c)); }

NcgCase parse_ncg_case(std::string_view text) {
  std::string t;
  for (char ch : text) {
    if (ch != '-' && ch != '_') t.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
  }
  if (t.size() == 4 && t.rfind("NCG", 0) == 0 && t[3] >= '1' && t[3] <= '5') {
    return static_cast<NcgCase>(t[3] - '0');
  }
  throw ParseError("case", "unknown case '" + std::string(text) + "'");
}

NcgCase classify(int n, const NormalFormDecomposition& dec) {
  if (n < 2) throw InvalidModel("sphere dimension must be at least 2, got " + std::to_string(n));
  if (dec.total_dim() != 2 * (n - 1)) {
    throw DimensionMismatch("decomposition has dimension " + std::to_string(dec.total_dim()) +
                            ", expected 2(n-1) = " + std::to_string(2 * (n - 1)));
  }
  const auto k = dec.rotation_count();
  const auto h = dec.hyperbolic_count();
  if (h == 0) return k >= 1 ? NcgCase::kNcg1 : NcgCase::kNcg5;
  if (k == 0) return NcgCase::kNcg5;
  if (k == 1) return NcgCase::kNcg4;
  return k % 2 == 0 ? NcgCase::kNcg2 : NcgCase::kNcg3;
}

GeodesicModel::GeodesicModel(int n, NormalFormDecomposition dec, std::int64_t p,
                             std::optional<NcgCase> declared)
    : n_(n), dec_(std::move(dec)), p_(p), case_(classify(n_, dec_)) {
  if (declared && *declared != case_) {
    throw InvalidModel("declared case " + to_string(*declared) + " but blocks form " +
                       to_string(case_));
  }
  r_ = static_cast<int>(dec_.n_block_count());
  k_ = static_cast<int>(dec_.rotation_count());
  h_ = static_cast<int>(dec_.hyperbolic_count());
  rotations_ = dec_.rotation_numbers();

  // One quadratic field per model.
  std::optional<ExactReal> witness;
  for (const auto& b : dec_.blocks()) {
    const ExactReal* rho = nullptr;
    if (const auto* rot = std::get_if<Rotation>(&b)) rho = &rot->rho;
    if (const auto* nb = std::get_if<NBlock>(&b)) rho = &nb->rho;
    if (rho == nullptr) continue;
    if (witness && !same_field(*witness, *rho)) {
      throw UnsupportedField("rotation numbers " + witness->to_string() + " and " +
                             rho->to_string() + " lie in different quadratic fields");
    }
    witness = *rho;
  }

  if (case_ == NcgCase::kNcg1) {
    if (2 * p_ + (n_ - 2 * r_ - 1) < 0) {
      throw InvalidModel("NCG1 requires i(c) = 2p + (n-2r-1) >= 0");
    }
  } else if (p_ < 0) {
    throw InvalidModel(to_string(case_) + " requires p >= 0");
  }

  ExactReal rot_sum;
  for (const auto& rho : rotations_) rot_sum += rho;
  const ExactReal P(p_);
  switch (case_) {
    case NcgCase::kNcg1: mean_ = ExactReal(2) * P + ExactReal(2) * rot_sum; break;
    case NcgCase::kNcg2:
    case NcgCase::kNcg3: mean_ = P - ExactReal(k_) + ExactReal(2) * rot_sum; break;
    case NcgCase::kNcg4: mean_ = P - ExactReal(1) + ExactReal(2) * rot_sum; break;
    case NcgCase::kNcg5: mean_ = P; break;
  }
  if (mean_.sign() < 0) {
    throw InvalidModel("mean index " + mean_.to_string() + " is negative");
  }
}

std::int64_t GeodesicModel::floor_sum(std::int64_t m) const {
  BigInt total = 0;
  for (const auto& rho : rotations_) total += rho.floor_scaled(m);
  return total.convert_to<std::int64_t>();
}

IterateIndex GeodesicModel::index_of_iterate(std::int64_t m) const {
  if (m < 1) throw RangeError("iterate number must be positive");
  std::int64_t i = 0;
  switch (case_) {
    case NcgCase::kNcg1: i = 2 * m * p_ + 2 * floor_sum(m) + (n_ - 2 * r_ - 1); break;
    case NcgCase::kNcg2:
    case NcgCase::kNcg3: i = m * (p_ - k_) + 2 * floor_sum(m) + k_; break;
    case NcgCase::kNcg4: i = m * (p_ - 1) + 2 * floor_sum(m) + 1; break;
    case NcgCase::kNcg5: i = m * p_; break;
  }
  return {i, 0};
}

int GeodesicModel::analytic_period() const noexcept {
  const bool p_even = mod2(p_) == 0;
  switch (case_) {
    case NcgCase::kNcg1: return 1;
    case NcgCase::kNcg2:
    case NcgCase::kNcg5: return p_even ? 1 : 2;
    case NcgCase::kNcg3:
    case NcgCase::kNcg4: return p_even ? 2 : 1;
  }
  return 1;
}

CriticalType GeodesicModel::critical_type(std::int64_t m) const {
  const int eps = mod2(index_of_iterate(m).i - i1()) == 0 ? 1 : -1;
  return {eps, eps == 1 ? 1 : 0};
}

int GeodesicModel::critical_module_dim(std::int64_t m, std::int64_t q) const {
  const auto im = index_of_iterate(m).i;
  return (q == im && mod2(im - i1()) == 0) ? 1 : 0;
}

IterateIndex index_of_iterate(const GeodesicModel& g, std::int64_t m) { return g.index_of_iterate(m); }
ExactReal mean_index(const GeodesicModel& g) { return g.mean_index(); }
int analytic_period(const GeodesicModel& g) { return g.analytic_period(); }
CriticalType critical_type(const GeodesicModel& g, std::int64_t m) { return g.critical_type(m); }
int critical_module_dim(const GeodesicModel& g, std::int64_t m, std::int64_t q) {
  return g.critical_module_dim(m, q);
}

IndexProfile::IndexProfile(GeodesicModel model, std::int64_t horizon) : model_(std::move(model)) {
  table_.reserve(static_cast<std::size_t>(std::max<std::int64_t>(horizon, 0)));
  for (std::int64_t m = 1; m <= horizon; ++m) table_.push_back(model_.index_of_iterate(m).i);
}

std::int64_t IndexProfile::i(std::int64_t m) const {
  if (m >= 1 && m <= horizon()) return table_[static_cast<std::size_t>(m - 1)];
  return model_.index_of_iterate(m).i;
}

CriticalType IndexProfile::critical_type(std::int64_t m) const {
  const int eps = mod2(i(m) - i1()) == 0 ? 1 : -1;
  return {eps, eps == 1 ? 1 : 0};
}

ParityShape ParityShape::of(const GeodesicModel& g) {
  return {g.ncg_case(), g.n(), mod2(g.p()), mod2(g.k())};
}

int ParityShape::index_parity(std::int64_t m) const {
  switch (ncg) {
    case NcgCase::kNcg1: return mod2(n - 1);
    case NcgCase::kNcg2:
    case NcgCase::kNcg3: return mod2(m * (p_parity - k_parity) + k_parity);
    case NcgCase::kNcg4: return mod2(m * (p_parity - 1) + 1);
    case NcgCase::kNcg5: return mod2(m * p_parity);
  }
  return 0;
}

CriticalType ParityShape::critical_type(std::int64_t m) const {
  const int eps = index_parity(m) == index_parity(1) ? 1 : -1;
  return {eps, eps == 1 ? 1 : 0};
}

int ParityShape::analytic_period() const {
  return critical_type(2) == critical_type(1) ? 1 : 2;
}

int ParityShape::sign_sum() const {
  int s = 0;
  for (int m = 1; m <= analytic_period(); ++m) {
    s += (index_parity(m) == 0 ? 1 : -1) * critical_type(m).k0;
  }
  return s;
}

}  // namespace indexlab
