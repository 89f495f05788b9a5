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


// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "distdet/closed_form.hpp"
#include "distdet/generators.hpp"
#include "distdet/verify.hpp"
#include "test_oracles.hpp"

namespace {

using namespace distdet;

struct Outcome {
  bool pass = true;
  std::size_t checked = 0;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::string str(const DetCof& dc) {
  std::ostringstream os;
  os << dc;
  return os.str();
}

Outcome cycle_table() {
  Outcome o;
  for (std::size_t n = 3; n <= 30; ++n) {
    // table values written out independently of cycle_detcof
    DetCof want = n % 2 ? DetCof{mpz_class(static_cast<unsigned long>((n * n - 1) / 4)),
                                 mpz_class(static_cast<unsigned long>(n))}
                        : DetCof{0, 0};
    DetCof got = det_cof_oracle(build_cycle(n));
    o.expect(got == want && cycle_detcof(n) == want, "C" + std::to_string(n) + " " + str(got));
  }
  return o;
}

Outcome tree_formula() {
  Outcome o;
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 2 + rng() % 11;
    Graph t = random_block_graph({.edges = n - 1}, rng());
    DetCof got = det_cof_oracle(t);
    o.expect(got.det == distdet::testing::tree_det(n) && got.cof == distdet::testing::tree_cof(n),
             "tree n=" + std::to_string(n) + " " + str(got));
  }
  return o;
}

Outcome unicyclic() {
  Outcome o;
  for (std::size_t l : {3u, 5u, 7u, 9u})
    for (std::size_t m = 0; m <= 5; ++m)
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = random_block_graph({.edges = m, .cycles = {l}}, seed);
        mpz_class det = det_cof_oracle(g).det;
        o.expect(det == unicyclic_det(l, m),
                 "l=" + std::to_string(l) + " m=" + std::to_string(m) + " det=" + det.get_str());
        Graph e = random_block_graph({.edges = m, .cycles = {l + 1}}, seed);
        o.expect(det_cof_oracle(e).det == 0, "even l=" + std::to_string(l + 1));
      }
  return o;
}

template <class F>
void each_triple(std::size_t max_sum, F f) {
  for (std::size_t l = 1; l <= max_sum; ++l)
    for (std::size_t p = std::max<std::size_t>(l, 2); l + p <= max_sum; ++p)
      for (std::size_t q = p; l + p + q <= max_sum; ++q) f(ThetaTriple{l, p, q});
}

Outcome theta_exhaustive() {
  Outcome o;
  const std::vector<std::pair<ThetaTriple, DetCof>> named{
      {{1, 2, 2}, {-4, -4}}, {{2, 2, 2}, {-16, -16}}, {{2, 2, 3}, {4, 4}}, {{2, 2, 5}, {20, 12}}};
  for (const auto& [t, want] : named) {
    o.expect(theta_detcof(t) == want, "named " + t.to_string());
    o.expect(det_cof_oracle(build_theta(t.l, t.p, t.q)) == want, "named oracle " + t.to_string());
  }
  each_triple(20, [&](ThetaTriple t) {
    DetCof got = det_cof_oracle(build_theta(t.l, t.p, t.q));
    o.expect(got == theta_detcof(t), t.to_string() + " oracle " + str(got));
    if (theta_case(t) == ThetaCase::kZero) o.expect(got == DetCof{0, 0}, t.to_string() + " not zero");
  });
  return o;
}

Outcome theta_prime() {
  Outcome o;
  each_triple(14, [&](ThetaTriple t) {
    Graph g = build_theta(t.l, t.p, t.q);
    const mpz_class want = theta_prime_det(t);
    mpz_class prime = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      prime = det_cof_oracle(attach_path(g, v, 1)).det;
      o.expect(prime == want, t.to_string() + " at " + std::to_string(v) + " det=" + prime.get_str());
    }
    DetCof th = det_cof_oracle(g);
    o.expect(th.cof == -2 * th.det - prime, t.to_string() + " cof relation");
  });
  return o;
}

Outcome theta_path_family() {
  Outcome o;
  for (std::size_t p : {2u, 4u, 6u})
    for (std::size_t q : {2u, 4u, 6u})
      for (std::size_t m = 0; m <= 5; ++m) {
        Graph g = attach_path(build_theta(1, p, q), 0, m);
        // -n(n+2m)(-2)^(m-2), evaluated as a rational then checked integral
        const long n = static_cast<long>(p + q);
        mpq_class want = mpq_class(-n * (n + 2 * static_cast<long>(m)));
        const long e = static_cast<long>(m) - 2;
        for (long i = 0; i < (e < 0 ? -e : e); ++i) want = e < 0 ? mpq_class(want / -2) : mpq_class(want * -2);
        want.canonicalize();
        mpz_class det = det_cof_oracle(g).det;
        o.expect(want.get_den() == 1 && det == want.get_num() && det == theta_path_det(p, q, m),
                 "p=" + std::to_string(p) + " q=" + std::to_string(q) + " m=" + std::to_string(m));
      }
  return o;
}

Outcome proof_identities() {
  Outcome o;
  for (std::size_t k = 1; k <= 12; ++k) {
    o.expect(cycle_inverse_identity(k), "inverse k=" + std::to_string(k));
    o.expect(scalar_identity_checks(k), "scalar k=" + std::to_string(k));
  }
  for (std::size_t k = 2; k <= 6; ++k)
    for (std::size_t s = 2; s <= 6; ++s) {
      const std::string ks = " k=" + std::to_string(k) + " s=" + std::to_string(s);
      o.expect(congruence_check_theta(k, s), "congruence" + ks);
      o.expect(congruence_check_theta_prime(k, s), "congruence prime" + ks);
    }
  return o;
}

Outcome three_way() {
  Outcome o;
  Graph worked = random_block_graph({.edges = 1, .cycles = {3}, .thetas = {{1, 2, 2}}}, 7);
  o.expect(det_cof_oracle(worked) == DetCof{52, 24}, "worked instance oracle");
  o.expect(det_cof_closed(worked).value == DetCof{52, 24}, "worked instance closed form");
  for (std::uint64_t i = 0; i < 200; ++i) {
    Graph g = campaign_graph(1, i, 40);
    const auto blocks = decompose(g);
    std::vector<DetCof> parts;
    for (const auto& cb : blocks) parts.push_back(block_formula(cb.kind).value);
    const DetCof whole = whole_graph_formula(census(blocks));
    const DetCof ghh = compose_ghh(parts);
    const DetCof oracle = det_cof_oracle(g);
    o.expect(g.order() <= 40, "instance " + std::to_string(i) + " too large");
    o.expect(whole == ghh && ghh == oracle,
             "instance " + std::to_string(i) + " " + str(whole) + " " + str(ghh) + " " + str(oracle));
  }
  return o;
}

Outcome linear_algebra() {
  Outcome o;
  std::mt19937_64 rng(99);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng() % 6;
    IntMatrix a = distdet::testing::random_int_matrix(n, rng);
    const std::string tag = "matrix " + std::to_string(i);
    o.expect(bareiss_det(a) == distdet::testing::laplace_det(a), tag + " det");
    const mpz_class cs = cof_sum(a);
    o.expect(cs == cof_sum_minors(a), tag + " cof_sum");
    for (long x : {-3L, 1L, 7L}) {
      IntMatrix shifted = a + IntMatrix::ones(n, n) * mpz_class(x);
      o.expect(bareiss_det(shifted) - bareiss_det(a) == x * cs, tag + " x=" + std::to_string(x));
    }
  }
  return o;
}

Outcome performance() {
  Outcome o;
  const cli::BenchRow row = cli::bench_one(200, 5);
  o.expect(row.match, "closed form and oracle disagree at n=200");
  const bool fast = row.closed_micros * 100 <= row.oracle_micros;
  std::ostringstream os;
  os << "closed " << row.closed_micros << "us, oracle " << row.oracle_micros << "us";
  o.expect(fast, os.str());
  o.detail = os.str();
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"cycle table", cycle_table},
      {"tree formula", tree_formula},
      {"unicyclic", unicyclic},
      {"theta exhaustive", theta_exhaustive},
      {"theta prime", theta_prime},
      {"theta path family", theta_path_family},
      {"proof identities", proof_identities},
      {"three-way agreement", three_way},
      {"linear algebra kernel", linear_algebra},
      {"performance", performance},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << i + 1 << ' ' << criteria[i].first << " ("
              << o.checked << " checks)";
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    std::cout << std::endl;
  }
  std::cout << criteria.size() - failed << '/' << criteria.size() << " criteria pass" << std::endl;
  return failed == 0 ? 0 : 1;
}
