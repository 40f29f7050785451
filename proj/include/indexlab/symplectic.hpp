#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <variant>
#include <vector>

#include "indexlab/exact.hpp"

namespace indexlab {

// Normal-form blocks. Rotation numbers rho stand for theta/(2*pi) and must be
// irrational points of (0, 1).

/// R(theta), symplectic dimension 2.
struct Rotation {
  ExactReal rho;
  friend bool operator==(const Rotation&, const Rotation&) = default;
};

/// N(alpha, B), symplectic dimension 4. `coupling` is the rational 2x2 block B.
struct NBlock {
  ExactReal rho;
  std::array<std::array<ExactReal, 2>, 2> coupling;
  friend bool operator==(const NBlock&, const NBlock&) = default;
};

/// H(d) = diag(d, 1/d), symplectic dimension 2, d rational outside {0, 1, -1}.
struct Hyperbolic {
  ExactReal d;
  friend bool operator==(const Hyperbolic&, const Hyperbolic&) = default;
};

using Block = std::variant<Rotation, NBlock, Hyperbolic>;

int block_dimension(const Block& block);

/// Throws InvalidBlock when a block breaks its invariant.
void validate_block(const Block& block);

/// An ordered diamond-sum of normal-form blocks. The block list is the
/// representation; matrices are never materialized.
class NormalFormDecomposition {
 public:
  NormalFormDecomposition() = default;
  explicit NormalFormDecomposition(std::vector<Block> blocks);

  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  int total_dim() const noexcept { return total_dim_; }
  bool empty() const noexcept { return blocks_.empty(); }

  std::size_t rotation_count() const { return count<Rotation>(); }
  std::size_t n_block_count() const { return count<NBlock>(); }
  std::size_t hyperbolic_count() const { return count<Hyperbolic>(); }

  /// Rotation numbers of the R blocks, in block order.
  std::vector<ExactReal> rotation_numbers() const;

  friend bool operator==(const NormalFormDecomposition&, const NormalFormDecomposition&) = default;

 private:
  template <class T>
  std::size_t count() const {
    std::size_t k = 0;
    for (const auto& b : blocks_) k += std::holds_alternative<T>(b) ? 1 : 0;
    return k;
  }

  std::vector<Block> blocks_;
  int total_dim_ = 0;
};

NormalFormDecomposition diamond_sum(const NormalFormDecomposition& lhs,
                                    const NormalFormDecomposition& rhs);

/// Unit-circle spectrum with geometric multiplicities. A key rho denotes
/// the eigenvalue exp(2*pi*i*rho); keys are normalized into (0, 1).
struct OmegaSignature {
  std::map<ExactReal, int, ExactReal::StructuralLess> nu;

  std::vector<ExactReal> gamma() const;
  friend bool operator==(const OmegaSignature&, const OmegaSignature&) = default;
};

// N blocks contribute multiplicity 1 at exp(+-i*alpha). This is the value for
// couplings B that keep N(alpha, B) non-diagonalizable, which is the form the
// classification uses; it is not recomputed from B.
OmegaSignature omega_signature(const NormalFormDecomposition& dec);

/// Multiplicity-wise union.
OmegaSignature merge(const OmegaSignature& lhs, const OmegaSignature& rhs);

/// Equal unit-circle data, a necessary condition for sharing a homotopy set.
bool same_omega_component_data(const NormalFormDecomposition& lhs,
                               const NormalFormDecomposition& rhs);

}  // namespace indexlab
