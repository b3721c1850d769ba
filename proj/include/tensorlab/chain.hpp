#ifndef TENSORLAB_CHAIN_HPP
#define TENSORLAB_CHAIN_HPP

/// \file chain.hpp
/// Chain covers for two partitions of [n].
///
/// Given partitions S and T of [n] with no common sub-union other than the
/// empty set and [n], the blocks can be ordered L_1, ..., L_l so that every
/// L_{p+1} meets L_1 ∪ ... ∪ L_p and together they cover [n]. Blocks carry an
/// origin tag so that a set occurring in both families is two distinct blocks.

#include <cstdint>
#include <optional>
#include <vector>

#include "tensorlab/combinatorics.hpp"

namespace tensorlab {

enum class Origin { S, T };

struct TaggedBlock {
  Origin origin = Origin::S;
  std::size_t index = 0;  // position within its family
  IndexSet block;

  friend bool operator==(const TaggedBlock&, const TaggedBlock&) = default;
};

struct ChainProblem {
  std::size_t ground = 0;
  std::vector<IndexSet> s_blocks;
  std::vector<IndexSet> t_blocks;
};

struct Chain {
  std::vector<TaggedBlock> sequence;
};

/// Sub-families θ_S, θ_T (indices into the families) whose unions agree on a
/// set Γ other than ∅ and [n].
struct LemmaViolation {
  IndexSet theta_s;
  IndexSet theta_t;
  IndexSet gamma;
};

inline constexpr std::size_t kMaxChainGround = 64;
inline constexpr std::size_t kMaxChainFamily = 20;

/// Throws NotAPartition when either family is not a partition of [n].
void validate_chain_problem(const ChainProblem& cp);

/// nullopt when the common-union condition holds.
std::optional<LemmaViolation> check_lemma_conditions(const ChainProblem& cp);

/// Deterministic chain construction: start from the S block containing index
/// 0, then repeatedly append the unused block meeting the running union with
/// the smallest minimum element (S before T on ties) until none is eligible.
/// Throws ConditionsViolated if check_lemma_conditions fails, Stalled if the
/// result does not cover [n].
Chain build_chain(const ChainProblem& cp);

/// Cover and overlapping-prefix properties, l >= 2.
bool chain_invariants_hold(const ChainProblem& cp, const Chain& chain);

/// Seeded generator of problems that pass check_lemma_conditions.
ChainProblem random_valid_chain_problem(std::size_t n, std::uint64_t seed);

}  // namespace tensorlab

#endif  // TENSORLAB_CHAIN_HPP
