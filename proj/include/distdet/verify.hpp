// Copyright 2026 The distdet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <gmpxx.h>

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "distdet/blocks.hpp"
#include "distdet/closed_form.hpp"
#include "distdet/error.hpp"
#include "distdet/generators.hpp"
#include "distdet/graph.hpp"
#include "distdet/matrix.hpp"

namespace distdet {

/// (det, cof) of the BFS distance matrix by exact elimination. Total over
/// connected graphs; K1 gives (0, 1).
inline DetCof det_cof_oracle(const Graph& g) {
  return det_cof(matrix_cast<mpz_class>(distance_matrix(g)));
}

inline IntMatrix exact_distance_matrix(const Graph& g) {
  return matrix_cast<mpz_class>(distance_matrix(g));
}

// ---------------------------------------------------------------------------
// Identities behind the theta proofs. Indices are 0-based throughout; a
// 1-based e_i in the usual notation is index i-1 here.

/// Cyclic shift with C(i, i+1) = 1, indices mod n.
inline RatMatrix cyclic_permutation(std::size_t n) {
  RatMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i) c(i, (i + 1) % n) = 1;
  return c;
}

/// Closed-form inverse of D(C_{2k+1}):
/// -2I - C^k - C^(k+1) + (2k+1)/(k(k+1)) J.
inline RatMatrix odd_cycle_inverse_formula(std::size_t k) {
  const std::size_t n = 2 * k + 1;
  const RatMatrix c = cyclic_permutation(n);
  RatMatrix ck = RatMatrix::identity(n);
  for (std::size_t i = 0; i < k; ++i) ck = ck * c;
  const RatMatrix ck1 = ck * c;
  const mpz_class K = static_cast<unsigned long>(k);
  RatMatrix out = RatMatrix::identity(n) * mpq_class(-2) - ck - ck1;
  out += RatMatrix::ones(n, n) * rational(2 * K + 1, K * (K + 1));
  return out;
}

/// D(C_{2k+1}) times the closed-form inverse is I, and det D(C_{2k+1}) = k(k+1).
inline bool cycle_inverse_identity(std::size_t k) {
  if (k < 1) throw InvalidArgument("cycle_inverse_identity needs k >= 1");
  const IntMatrix d = exact_distance_matrix(build_cycle(2 * k + 1));
  const RatMatrix product = matrix_cast<mpq_class>(d) * odd_cycle_inverse_formula(k);
  const unsigned long kk = k;
  return product == RatMatrix::identity(2 * k + 1) &&
         bareiss_det(d) == mpz_class(kk * (kk + 1));
}

/// Distances (1, 2, ..., k, k+1, k, ..., 2, 1) from the apex of
/// theta(1, 2, 2k) to the cycle vertices, as a column.
inline RatMatrix apex_distance_vector(std::size_t k) {
  RatMatrix v(2 * k + 1, 1);
  for (std::size_t i = 0; i < 2 * k + 1; ++i)
    v(i, 0) = static_cast<unsigned long>(i <= k ? i + 1 : 2 * k + 1 - i);
  return v;
}

/// Quadratic forms of D(C_{2k+1})^{-1}, the inverse computed by elimination:
///   v^t D^-1 v = (k+1)/k,  v^t D^-1 1 = (k+1)/k,  1^t D^-1 1 = (2k+1)/(k(k+1)).
/// Also checks that v is the apex row of the (1,2,2k) labelled layout.
inline bool scalar_identity_checks(std::size_t k) {
  if (k < 1) throw InvalidArgument("scalar_identity_checks needs k >= 1");
  const std::size_t n = 2 * k + 1;
  const RatMatrix inv = rat_inverse(exact_distance_matrix(build_cycle(n)));
  const RatMatrix v = apex_distance_vector(k);
  const RatMatrix one = RatMatrix::ones(n, 1);

  const IntMatrix layout = exact_distance_matrix(
      build_labeled_theta_family(LabeledFamily::kTheta_1_2_2k, k));
  for (std::size_t i = 0; i < n; ++i)
    if (mpq_class(layout(0, i + 1)) != v(i, 0)) return false;

  const mpz_class K = static_cast<unsigned long>(k);
  const mpq_class vv = (v.transpose() * inv * v)(0, 0);
  const mpq_class v1 = (v.transpose() * inv * one)(0, 0);
  const mpq_class oo = (one.transpose() * inv * one)(0, 0);
  return vv == rational(K + 1, K) && v1 == rational(K + 1, K) &&
         oo == rational(2 * K + 1, K * (K + 1));
}

/// Matrices of the congruence between theta(1, 2s, 2k) (H) and
/// theta(1, 2s-2, 2k+2) (G), optionally with the pendant vertex at index 0.
struct CongruenceWitness {
  IntMatrix d_h;
  IntMatrix d_g;
  IntMatrix path;      // distance matrix of the path on k+s vertices
  IntMatrix a;         // lower-left block of D(G)
  IntMatrix b;         // lower-left block of D(H)
  IntMatrix m;         // shift matrix
  RatMatrix n;         // [[I, 0], [(A - M B) P^-1, M]], bordered by 1 if pendant
  bool blocks_match_path = false;
};

/// M = e1 e1^t + e2 e_{k+1}^t - e2 e_{k+s}^t + sum_{i>=2} e_i e_{i-1}^t.
inline IntMatrix congruence_shift(std::size_t k, std::size_t s) {
  const std::size_t h = k + s;
  IntMatrix m(h, h);
  m(0, 0) += 1;
  m(1, k) += 1;
  m(1, h - 1) -= 1;
  for (std::size_t i = 1; i < h; ++i) m(i, i - 1) += 1;
  return m;
}

inline CongruenceWitness build_congruence(std::size_t k, std::size_t s, bool pendant) {
  if (k < 2 || s < 2) throw InvalidArgument("congruence checks need k >= 2 and s >= 2");
  using F = LabeledFamily;
  const std::size_t h = k + s;
  CongruenceWitness w;
  w.d_h = exact_distance_matrix(build_labeled_theta_family(
      pendant ? F::kPendant_1_2s_2k : F::kTheta_1_2s_2k, k, s));
  w.d_g = exact_distance_matrix(build_labeled_theta_family(
      pendant ? F::kPendant_1_2sm2_2kp2 : F::kTheta_1_2sm2_2kp2, k, s));
  w.path = exact_distance_matrix(build_path(h - 1));
  w.blocks_match_path = w.d_h.block(0, 0, h, h) == w.path &&
                        w.d_h.block(h, h, h, h) == w.path &&
                        w.d_g.block(0, 0, h, h) == w.path &&
                        w.d_g.block(h, h, h, h) == w.path;
  w.a = w.d_g.block(h, 0, h, h);
  w.b = w.d_h.block(h, 0, h, h);
  w.m = congruence_shift(k, s);

  const RatMatrix lower =
      matrix_cast<mpq_class>(w.a - w.m * w.b) * rat_inverse(w.path);
  const std::size_t dim = pendant ? 2 * h + 1 : 2 * h;
  w.n = RatMatrix(dim, dim);
  w.n.set_block(0, 0, RatMatrix::identity(h));
  w.n.set_block(h, 0, lower);
  w.n.set_block(h, h, matrix_cast<mpq_class>(w.m));
  if (pendant) w.n(2 * h, 2 * h) = 1;
  return w;
}

namespace detail {

inline bool congruence_holds(const CongruenceWitness& w) {
  if (!w.blocks_match_path) return false;
  const RatMatrix lhs = w.n * matrix_cast<mpq_class>(w.d_h) * w.n.transpose();
  return lhs == matrix_cast<mpq_class>(w.d_g) &&
         rat_det(w.n) * rat_det(w.n.transpose()) == 1;
}

}  // namespace detail

/// D(G) = N D(H) N^t with det N det N^t = 1, G and H as in build_congruence.
inline bool congruence_check_theta(std::size_t k, std::size_t s) {
  return detail::congruence_holds(build_congruence(k, s, false));
}

/// Same congruence for the pendant versions, N bordered by a trailing 1.
inline bool congruence_check_theta_prime(std::size_t k, std::size_t s) {
  return detail::congruence_holds(build_congruence(k, s, true));
}

struct ProofCheckSummary {
  std::size_t inverse_pass = 0, inverse_total = 0;
  std::size_t scalar_pass = 0, scalar_total = 0;
  std::size_t congruence_pass = 0, congruence_total = 0;
  std::size_t congruence_prime_pass = 0, congruence_prime_total = 0;

  bool all_pass() const {
    return inverse_pass == inverse_total && scalar_pass == scalar_total &&
           congruence_pass == congruence_total &&
           congruence_prime_pass == congruence_prime_total;
  }
};

/// Inverse and scalar identities for 1 <= k <= max_k, congruences for
/// 2 <= k, s <= max_ks.
inline ProofCheckSummary run_proof_checks(std::size_t max_k = 12, std::size_t max_ks = 6) {
  ProofCheckSummary out;
  for (std::size_t k = 1; k <= max_k; ++k) {
    ++out.inverse_total;
    out.inverse_pass += cycle_inverse_identity(k);
    ++out.scalar_total;
    out.scalar_pass += scalar_identity_checks(k);
  }
  for (std::size_t k = 2; k <= max_ks; ++k)
    for (std::size_t s = 2; s <= max_ks; ++s) {
      ++out.congruence_total;
      out.congruence_pass += congruence_check_theta(k, s);
      ++out.congruence_prime_total;
      out.congruence_prime_pass += congruence_check_theta_prime(k, s);
    }
  return out;
}

// ---------------------------------------------------------------------------
// Three-way verification of single graphs.

struct VerifyReport {
  enum class ClosedStatus { kOk, kUnsupported, kError };

  std::size_t n = 0;
  std::size_t edges = 0;
  std::vector<std::string> blocks;  // BlockKind::to_string per block
  DetCof oracle;
  DetCof ghh;                       // composition of per-block oracle values
  std::optional<DetCof> closed;
  ClosedStatus closed_status = ClosedStatus::kOk;
  std::string closed_note;
  Provenance provenance = Provenance::kBlockComposition;
  bool pass = false;
  std::int64_t oracle_micros = 0;
  std::int64_t closed_micros = 0;
};

struct VerifyOptions {
  ClosedFormOptions closed_form;
};

/// Oracle, closed form (when every block is supported) and block
/// composition over per-block oracle values. Passes when everything that
/// could be computed agrees; a graph outside the supported class can still
/// pass on oracle vs composition.
inline VerifyReport verify_graph(const Graph& g, VerifyOptions options = {}) {
  using Clock = std::chrono::steady_clock;
  auto micros = [](Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration_cast<std::chrono::microseconds>(b - a).count();
  };

  VerifyReport r;
  r.n = g.order();
  r.edges = g.size();

  auto t0 = Clock::now();
  r.oracle = det_cof_oracle(g);
  r.oracle_micros = micros(t0, Clock::now());

  const auto blocks = decompose(g);
  std::vector<DetCof> per_block;
  for (const auto& cb : blocks) {
    r.blocks.push_back(cb.kind.to_string());
    per_block.push_back(det_cof_oracle(cb.block.as_graph()));
  }
  // no blocks (K1): empty sum and empty product
  r.ghh = per_block.empty() ? DetCof{0, 1} : compose_ghh(per_block);

  t0 = Clock::now();
  try {
    FormulaResult f = det_cof_closed(g, options.closed_form);
    r.closed = f.value;
    r.provenance = f.provenance;
  } catch (const UnsupportedGraphError& e) {
    r.closed_status = VerifyReport::ClosedStatus::kUnsupported;
    r.closed_note = e.what();
  } catch (const InvariantError& e) {
    r.closed_status = VerifyReport::ClosedStatus::kError;
    r.closed_note = e.what();
  }
  r.closed_micros = micros(t0, Clock::now());

  const bool ghh_ok = r.ghh == r.oracle;
  bool closed_ok = false;
  switch (r.closed_status) {
    case VerifyReport::ClosedStatus::kOk: closed_ok = *r.closed == r.oracle; break;
    case VerifyReport::ClosedStatus::kUnsupported: closed_ok = true; break;
    case VerifyReport::ClosedStatus::kError: closed_ok = false; break;
  }
  r.pass = ghh_ok && closed_ok;
  return r;
}

struct CampaignOptions {
  RequestOptions request;
  VerifyOptions verify;
};

struct CampaignSummary {
  std::size_t count = 0;
  std::size_t passed = 0;
  std::vector<VerifyReport> reports;  // in instance order

  bool all_pass() const { return passed == count; }
};

/// Seed of instance `index` in a campaign, independent of evaluation order.
inline std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

/// Graph number `index` of a campaign.
inline Graph campaign_graph(std::uint64_t seed, std::uint64_t index, std::size_t max_n,
                            RequestOptions options = {}) {
  const std::uint64_t s = instance_seed(seed, index);
  return random_block_graph(random_block_request(max_n, s, options), s ^ 0x9e3779b97f4a7c15ULL);
}

inline CampaignSummary fuzz_campaign(std::size_t count, std::size_t max_n, std::uint64_t seed,
                                     CampaignOptions options = {}) {
  if (count < 1) throw InvalidArgument("fuzz campaign needs count >= 1");
  CampaignSummary out;
  out.count = count;
  for (std::size_t i = 0; i < count; ++i) {
    VerifyReport r = verify_graph(campaign_graph(seed, i, max_n, options.request), options.verify);
    out.passed += r.pass;
    out.reports.push_back(std::move(r));
  }
  return out;
}

}  // namespace distdet
