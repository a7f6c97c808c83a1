#pragma once
// The collapses of Bx(Omega'_{2k+1}(G)) onto Bx(Omega_{2k+1}(G)) and onto the
// copy of Bx(Omega_{2k-1}(G)) induced by im phi, with their runtime checks.

#include "omegalab/box.hpp"
#include "omegalab/functors.hpp"
#include "omegalab/homology.hpp"
#include "omegalab/morse.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace omegalab {

/// Everything the matchings read: Omega'_{2k+1}(G) (vertices in canonical
/// Omega order), Bx of it, the target Bx(Omega_{2k+1}(G)), and im phi.
struct OmegaPrimeSetup {
  Graph base;
  std::size_t k = 1;
  FunctorResult omega_prime;
  Graph omega_graph;
  Z2Complex box;
  Z2Complex target;
  std::vector<bool> in_image;
  std::vector<std::size_t> phi_index;
  std::vector<Simplex> simplices;
  /// clash_last_last[a] holds c with A_k not joined to C_k; clash_last_prev the same against C_{k-1}.
  std::vector<Bitset> clash_last_last;
  std::vector<Bitset> clash_last_prev;

  /// Omega indices of a simplex, split by shore.
  std::pair<std::vector<std::size_t>, std::vector<std::size_t>> shores(const Simplex& s) const;
  const OmegaVertex& tuple(std::size_t omega_index) const { return omega_prime.omega_vertices[omega_index]; }
};

/// Builds the setup for Omega'_{2k+1}, k >= 1. G must be loopless.
OmegaPrimeSetup prepare_omega_prime(const Graph& g, std::size_t k, std::size_t vertex_budget = kDefaultVertexBudget,
                                    std::size_t simplex_budget = kDefaultSimplexBudget);

struct OffenseClass {
  bool type_i = false;
  bool type_ii = false;
  bool offending() const { return type_i || type_ii; }
};

OffenseClass classify_simplex(const OmegaPrimeSetup& setup, const Simplex& s);

/// Membership in Bx(Omega_{2k+1}) by the graph predicate and by the target's facets.
/// Throws ContractError when the two disagree.
bool in_target(const OmegaPrimeSetup& setup, const Simplex& s);

struct ClassifierReport {
  std::size_t simplices = 0;
  std::size_t type_i = 0;
  std::size_t type_ii = 0;
  std::size_t both = 0;
  std::size_t outside_target = 0;
  /// Simplices where "offending" and "outside the target" disagree.
  std::size_t mismatches = 0;
};

ClassifierReport check_classifier(const OmegaPrimeSetup& setup);

struct PhaseResult {
  std::string name;
  MorseMatching matching;
  CollapseCertificate certificate;
  std::size_t removed = 0;
};

struct CollapseRun {
  std::vector<PhaseResult> phases;
  /// Surviving simplices after the last phase.
  std::vector<Simplex> result;
  bool result_matches_expected = false;
};

/// mu(sigma) = sigma Δ {phi(A)^s}, A the smallest vertex of sigma outside im phi.
MorseMatching lemma52_matching(const OmegaPrimeSetup& setup);
CollapseRun lemma52_collapse(const OmegaPrimeSetup& setup);

/// The three phases, each matched and collapsed on what the previous phase left.
CollapseRun lemma54_collapse(const OmegaPrimeSetup& setup);

/// Whether the im phi subcomplex equals Bx(Omega_{2k-1}(G)) under truncation.
bool image_subcomplex_matches(const OmegaPrimeSetup& setup, const std::vector<Simplex>& image_simplices,
                              std::size_t simplex_budget = kDefaultSimplexBudget);

struct Theorem55Report {
  std::size_t k = 1;
  BettiVector betti_omega_prime;
  BettiVector betti_omega;
  BettiVector betti_omega_prev;
  std::size_t simplices_omega_prime = 0;
  std::size_t lemma54_pairs[3] = {0, 0, 0};
  std::size_t lemma52_pairs = 0;
  bool lemma54_reaches_target = false;
  bool lemma52_reaches_image = false;
  bool image_is_previous_box = false;
  bool collapses_preserve_betti = false;
  ClassifierReport classifier;

  bool betti_equal() const { return betti_omega_prime == betti_omega && betti_omega == betti_omega_prev; }
  bool ok() const {
    return betti_equal() && lemma54_reaches_target && lemma52_reaches_image && image_is_previous_box &&
           collapses_preserve_betti && classifier.mismatches == 0;
  }
};

Theorem55Report theorem55_pipeline(const Graph& g, std::size_t k, std::size_t vertex_budget = kDefaultVertexBudget,
                                   std::size_t simplex_budget = kDefaultSimplexBudget);

} // namespace omegalab
