#include "indexlab/symplectic.hpp"

#include <string>

namespace indexlab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void validate_rotation_number(const ExactReal& rho, const char* what) {
  if (!rho.is_irrational()) {
    throw InvalidBlock(std::string(what) + " rotation number " + rho.to_string() +
                       " must be irrational");
  }
  if (rho.sign() <= 0 || rho >= ExactReal(1)) {
    throw InvalidBlock(std::string(what) + " rotation number " + rho.to_string() +
                       " must lie in (0, 1)");
  }
}

}  // namespace

int block_dimension(const Block& block) { return std::holds_alternative<NBlock>(block) ? 4 : 2; }

void validate_block(const Block& block) {
  std::visit(overloaded{
                 [](const Rotation& r) { validate_rotation_number(r.rho, "R"); },
                 [](const NBlock& nb) {
                   validate_rotation_number(nb.rho, "N");
                   for (const auto& row : nb.coupling) {
                     for (const auto& entry : row) {
                       if (!entry.is_rational()) {
                         throw InvalidBlock("N coupling entry " + entry.to_string() +
                                            " must be rational");
                       }
                     }
                   }
                 },
                 [](const Hyperbolic& h) {
                   if (!h.d.is_rational()) {
                     throw InvalidBlock("H parameter " + h.d.to_string() + " must be rational");
                   }
                   if (h.d == ExactReal(0) || h.d == ExactReal(1) || h.d == ExactReal(-1)) {
                     throw InvalidBlock("H parameter must avoid 0, 1 and -1");
                   }
                 },
             },
             block);
}

NormalFormDecomposition::NormalFormDecomposition(std::vector<Block> blocks)
    : blocks_(std::move(blocks)) {
  for (const auto& b : blocks_) {
    validate_block(b);
    total_dim_ += block_dimension(b);
  }
}

std::vector<ExactReal> NormalFormDecomposition::rotation_numbers() const {
  std::vector<ExactReal> out;
  for (const auto& b : blocks_) {
    if (const auto* r = std::get_if<Rotation>(&b)) out.push_back(r->rho);
  }
  return out;
}

NormalFormDecomposition diamond_sum(const NormalFormDecomposition& lhs,
                                    const NormalFormDecomposition& rhs) {
  std::vector<Block> blocks = lhs.blocks();
  blocks.insert(blocks.end(), rhs.blocks().begin(), rhs.blocks().end());
  return NormalFormDecomposition(std::move(blocks));
}

std::vector<ExactReal> OmegaSignature::gamma() const {
  std::vector<ExactReal> out;
  out.reserve(nu.size());
  for (const auto& [point, mult] : nu) out.push_back(point);
  return out;
}

OmegaSignature omega_signature(const NormalFormDecomposition& dec) {
  OmegaSignature sig;
  auto add_pair = [&sig](const ExactReal& rho) {
    sig.nu[rho] += 1;
    sig.nu[ExactReal(1) - rho] += 1;
  };
  for (const auto& b : dec.blocks()) {
    std::visit(overloaded{
                   [&](const Rotation& r) { add_pair(r.rho); },
                   [&](const NBlock& nb) { add_pair(nb.rho); },
                   [](const Hyperbolic&) {},
               },
               b);
  }
  return sig;
}

OmegaSignature merge(const OmegaSignature& lhs, const OmegaSignature& rhs) {
  OmegaSignature out = lhs;
  for (const auto& [point, mult] : rhs.nu) out.nu[point] += mult;
  return out;
}

bool same_omega_component_data(const NormalFormDecomposition& lhs,
                               const NormalFormDecomposition& rhs) {
  return omega_signature(lhs) == omega_signature(rhs);
}

}  // namespace indexlab
