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

#include <cstddef>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "distdet/blocks.hpp"
#include "distdet/error.hpp"
#include "distdet/graph.hpp"
#include "distdet/matrix.hpp"
#include "distdet/theta.hpp"

namespace distdet {

/// Which closed form produced a value.
enum class Provenance {
  kSingleVertex,
  kEdge,
  kOddCycle,
  kEvenCycle,
  kThetaOneEvenEven,
  kThetaTwoTwoTwo,
  kThetaTwoTwoOdd,
  kThetaSingular,
  kBlockComposition,
};

inline std::string_view provenance_name(Provenance p) {
  switch (p) {
    case Provenance::kSingleVertex: return "single vertex";
    case Provenance::kEdge: return "edge";
    case Provenance::kOddCycle: return "odd cycle";
    case Provenance::kEvenCycle: return "even cycle";
    case Provenance::kThetaOneEvenEven: return "theta(1,even,even)";
    case Provenance::kThetaTwoTwoTwo: return "theta(2,2,2)";
    case Provenance::kThetaTwoTwoOdd: return "theta(2,2,odd)";
    case Provenance::kThetaSingular: return "singular theta";
    case Provenance::kBlockComposition: return "block composition";
  }
  return "?";
}

namespace detail {

/// base^exp over the rationals; exp may be negative.
inline mpq_class rational_pow(long base, long exp) {
  mpz_class b = base;
  mpz_class pw;
  mpz_pow_ui(pw.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp < 0 ? -exp : exp));
  return exp < 0 ? rational(1, pw) : mpq_class(pw);
}

inline mpz_class require_integer(const mpq_class& x, std::string_view what) {
  if (x.get_den() != 1)
    throw InvariantError(std::string(what) + " is not an integer: " + x.get_str());
  return x.get_num();
}

inline mpz_class z(std::size_t x) { return mpz_class(static_cast<unsigned long>(x)); }

}  // namespace detail

/// D(K2) = [[0,1],[1,0]].
inline DetCof edge_detcof() { return {-1, -2}; }

/// Odd n: ((n^2 - 1)/4, n). Even n: (0, 0).
inline DetCof cycle_detcof(std::size_t n) {
  if (n < 3) throw InvalidArgument("cycle length must be at least 3");
  if (n % 2 == 0) return {0, 0};
  const mpz_class nn = detail::z(n);
  return {(nn * nn - 1) / 4, nn};
}

/// Cycle of length l with m further edges hanging off it (any placement).
inline mpz_class unicyclic_det(std::size_t l, std::size_t m) {
  if (l < 3) throw InvalidArgument("cycle length must be at least 3");
  if (l % 2 == 0) return 0;
  const mpz_class L = detail::z(l), M = detail::z(m);
  mpq_class v = detail::rational_pow(-2, static_cast<long>(m)) *
                rational(L * L + 2 * M * L - 1, 4);
  return detail::require_integer(v, "unicyclic determinant");
}

/// Cactus with the given cycle lengths plus m bridge edges.
inline mpz_class cactus_det(std::span<const std::size_t> cycle_lengths,
                            std::size_t m) {
  mpz_class prod = 1;
  mpq_class sum = rational(detail::z(m), 2);
  for (std::size_t l : cycle_lengths) {
    if (l < 3) throw InvalidArgument("cycle length must be at least 3");
    if (l % 2 == 0) return 0;
    const mpz_class L = detail::z(l);
    prod *= L;
    sum += rational(L * L - 1, 4 * L);
  }
  mpq_class v = detail::rational_pow(-2, static_cast<long>(m)) * prod * sum;
  return detail::require_integer(v, "cactus determinant");
}

/// (det, cof) of D(theta(l,p,q)); the triple may be given in any order.
inline DetCof theta_detcof(const ThetaTriple& triple) {
  const ThetaTriple t = triple.sorted();
  switch (theta_case(t)) {
    case ThetaCase::kOneEvenEven: {
      const mpz_class n = detail::z(t.p + t.q);
      return {-(n * n) / 4, -n};
    }
    case ThetaCase::kTwoTwoTwo:
      return {-16, -16};
    case ThetaCase::kTwoTwoOdd: {
      const mpz_class q = detail::z(t.q);
      return {q * q - 5, 4 * q - 8};
    }
    case ThetaCase::kZero:
      break;
  }
  return {0, 0};
}

inline DetCof theta_detcof(std::size_t l, std::size_t p, std::size_t q) {
  return theta_detcof(ThetaTriple{l, p, q});
}

/// det D of a theta graph plus one pendant edge. The value does not depend
/// on where the pendant edge is attached.
inline mpz_class theta_prime_det(const ThetaTriple& triple) {
  const ThetaTriple t = triple.sorted();
  switch (theta_case(t)) {
    case ThetaCase::kOneEvenEven: {
      const mpz_class n1 = detail::z(1 + t.p + t.q);
      return (n1 * n1 - 1) / 2;
    }
    case ThetaCase::kTwoTwoTwo:
      // -2 det - cof of theta(2,2,2) = 32 + 16
      return 48;
    case ThetaCase::kTwoTwoOdd: {
      const mpz_class q = detail::z(t.q);
      return -2 * (q * q + 2 * q - 9);
    }
    case ThetaCase::kZero:
      break;
  }
  return 0;
}

inline mpz_class theta_prime_det(std::size_t l, std::size_t p, std::size_t q) {
  return theta_prime_det(ThetaTriple{l, p, q});
}

/// det D of theta(1,p,q), p and q even, with a path of m edges hung from a
/// branch vertex: -n (n + 2m) (-2)^(m-2), n = p + q.
inline mpz_class theta_path_det(std::size_t p, std::size_t q, std::size_t m) {
  if (p < 2 || q < 2 || p % 2 || q % 2)
    throw InvalidArgument("theta_path_det needs even p, q >= 2");
  const mpz_class n = detail::z(p + q), M = detail::z(m);
  mpq_class v = mpq_class(-n * (n + 2 * M)) *
                detail::rational_pow(-2, static_cast<long>(m) - 2);
  return detail::require_integer(v, "theta path determinant");
}

/// Block composition: det = sum_i det_i prod_{j != i} cof_j, cof = prod cof_i.
inline DetCof compose_ghh(std::span<const DetCof> blocks) {
  if (blocks.empty()) throw InvalidArgument("compose_ghh needs at least one block");
  DetCof acc = blocks.front();
  for (std::size_t i = 1; i < blocks.size(); ++i) {
    const DetCof& b = blocks[i];
    acc = {acc.det * b.cof + b.det * acc.cof, acc.cof * b.cof};
  }
  return acc;
}

inline DetCof compose_ghh(std::initializer_list<DetCof> blocks) {
  return compose_ghh(std::span<const DetCof>(blocks.begin(), blocks.size()));
}

struct BlockFormula {
  BlockKind kind;
  DetCof value;
  Provenance provenance;
};

/// Closed-form value of one supported block.
inline BlockFormula block_formula(const BlockKind& kind) {
  switch (kind.tag) {
    case BlockKind::Tag::kEdge:
      return {kind, edge_detcof(), Provenance::kEdge};
    case BlockKind::Tag::kCycle:
      return {kind, cycle_detcof(kind.cycle_length),
              kind.cycle_length % 2 ? Provenance::kOddCycle : Provenance::kEvenCycle};
    case BlockKind::Tag::kTheta: {
      Provenance p = Provenance::kThetaSingular;
      switch (theta_case(kind.theta)) {
        case ThetaCase::kOneEvenEven: p = Provenance::kThetaOneEvenEven; break;
        case ThetaCase::kTwoTwoTwo: p = Provenance::kThetaTwoTwoTwo; break;
        case ThetaCase::kTwoTwoOdd: p = Provenance::kThetaTwoTwoOdd; break;
        case ThetaCase::kZero: break;
      }
      return {kind, theta_detcof(kind.theta), p};
    }
    case BlockKind::Tag::kUnsupported:
      break;
  }
  throw InvalidArgument("no closed form for block kind " + kind.to_string());
}

namespace detail {

inline DetCof whole_graph_formula(const BlockInventory& inv, bool negate_cycle_term) {
  if (inv.single_vertex) return {0, 1};
  if (inv.has_zero_block()) return {0, 0};
  const mpz_class m = z(inv.m());

  mpz_class cof = 1;
  mpz_pow_ui(cof.get_mpz_t(), mpz_class(-2).get_mpz_t(), inv.m());
  if (inv.r() % 2) cof = -cof;
  mpz_class s16;
  mpz_pow_ui(s16.get_mpz_t(), mpz_class(-16).get_mpz_t(), inv.s());
  cof *= s16;

  mpq_class sum = rational(m, 2);
  for (std::size_t l : inv.odd_cycle_lengths) {
    const mpz_class L = z(l);
    cof *= L;
    mpq_class term = rational(L * L - 1, 4 * L);
    sum += negate_cycle_term ? mpq_class(-term) : term;
  }
  for (const auto& [p, q] : inv.one_even_even) {
    cof *= z(p + q);
    sum += rational(z(p + q), 4);
  }
  sum += z(inv.s());
  for (std::size_t q : inv.two_two_odd) {
    const mpz_class Q = z(q);
    cof *= 4 * Q - 8;
    sum += rational(Q * Q - 5, 4 * Q - 8);
  }
  return {require_integer(sum * cof, "whole-graph determinant"), cof};
}

}  // namespace detail

/// Direct whole-graph formula from the block census: cof is a product over
/// blocks and det is cof times a sum of per-block det/cof ratios.
inline DetCof whole_graph_formula(const BlockInventory& inv) {
  return detail::whole_graph_formula(inv, false);
}

struct FormulaResult {
  DetCof value;
  Provenance provenance = Provenance::kBlockComposition;
  std::vector<BlockFormula> blocks;
};

struct ClosedFormOptions {
  /// Test hook: flips the sign of every odd-cycle determinant so a
  /// verification harness can prove it notices a wrong formula.
  bool negate_cycle_det = false;
};

/// det and cof of D(G) for a connected graph whose blocks are edges, cycles
/// and thetas. Evaluates both the whole-graph formula and the block
/// composition of per-block formulas and throws InvariantError if they
/// differ. Throws UnsupportedGraphError for any other block.
inline FormulaResult det_cof_closed(const Graph& g, ClosedFormOptions options = {}) {
  auto blocks = decompose(g);
  BlockInventory inv = census(blocks);
  inv.single_vertex = g.order() == 1;

  FormulaResult result;
  if (inv.single_vertex) {
    result.value = {0, 1};
    result.provenance = Provenance::kSingleVertex;
    return result;
  }

  std::vector<DetCof> values;
  for (const auto& cb : blocks) {
    BlockFormula f = block_formula(cb.kind);
    if (options.negate_cycle_det && f.provenance == Provenance::kOddCycle)
      f.value.det = -f.value.det;
    values.push_back(f.value);
    result.blocks.push_back(std::move(f));
  }
  result.provenance = result.blocks.size() == 1 ? result.blocks.front().provenance
                                                : Provenance::kBlockComposition;

  if (inv.has_zero_block()) {
    result.value = {0, 0};
    for (const auto& f : result.blocks)
      if (f.value.det == 0 && f.value.cof == 0) {
        result.provenance = f.provenance;
        break;
      }
    return result;
  }

  DetCof direct = detail::whole_graph_formula(inv, options.negate_cycle_det);
  DetCof composed = compose_ghh(values);
  if (!(direct == composed)) {
    std::ostringstream msg;
    msg << "whole-graph formula " << direct << " disagrees with block composition "
        << composed;
    throw InvariantError(msg.str());
  }
  result.value = direct;
  return result;
}

}  // namespace distdet
