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


// Command-line front end. Kept in a header so the integration tests can
// drive every subcommand in-process.

#pragma once

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "distdet/blocks.hpp"
#include "distdet/closed_form.hpp"
#include "distdet/error.hpp"
#include "distdet/generators.hpp"
#include "distdet/graph.hpp"
#include "distdet/report_json.hpp"
#include "distdet/verify.hpp"

namespace distdet::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2 };

namespace detail {

inline Graph load_graph(const std::string& path, std::istream& in) {
  if (path == "-") return read_edge_list(in);
  std::ifstream file(path);
  if (!file) throw Error("cannot open " + path);
  return read_edge_list(file);
}

inline std::string join(const std::vector<std::size_t>& xs, char sep = ';') {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i)
    s += (i ? std::string(1, sep) : "") + std::to_string(xs[i]);
  return s;
}

inline std::size_t parse_count(const std::string& s, const std::string& what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw InvalidArgument("bad " + what + " \"" + s + "\"");
  return value;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

inline void print_inventory(std::ostream& out, const BlockInventory& inv) {
  out << "inventory: m=" << inv.m() << " c=" << inv.c() << " r=" << inv.r()
      << " s=" << inv.s() << " t=" << inv.t();
  if (!inv.cycle_lengths.empty()) out << " cycles=" << join(inv.cycle_lengths);
  if (!inv.theta_triples.empty()) {
    out << " thetas=";
    for (std::size_t i = 0; i < inv.theta_triples.size(); ++i) {
      const auto& t = inv.theta_triples[i];
      out << (i ? ";" : "") << t.l << '-' << t.p << '-' << t.q;
    }
  }
  out << '\n';
}

}  // namespace detail

/// Parses a block spec such as "edges=3,cycles=3;5,thetas=1-2-2;2-2-3".
inline BlockRequest parse_block_spec(const std::string& spec) {
  BlockRequest req;
  for (const std::string& part : detail::split(spec, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw InvalidArgument("expected key=value in \"" + part + "\"");
    const std::string key = part.substr(0, eq), value = part.substr(eq + 1);
    if (key == "edges") {
      req.edges += detail::parse_count(value, "edge count");
    } else if (key == "cycles") {
      for (const auto& c : detail::split(value, ';')) {
        std::size_t len = detail::parse_count(c, "cycle length");
        if (len < 3) throw InvalidArgument("cycle length must be at least 3");
        req.cycles.push_back(len);
      }
    } else if (key == "thetas") {
      for (const auto& t : detail::split(value, ';')) {
        auto xs = detail::split(t, '-');
        if (xs.size() != 3) throw InvalidArgument("theta must be l-p-q, got \"" + t + "\"");
        ThetaTriple triple{detail::parse_count(xs[0], "theta length"),
                           detail::parse_count(xs[1], "theta length"),
                           detail::parse_count(xs[2], "theta length")};
        if (!triple.valid()) throw InvalidArgument("invalid theta triple " + triple.to_string());
        req.thetas.push_back(triple);
      }
    } else {
      throw InvalidArgument("unknown block spec key \"" + key + "\"");
    }
  }
  if (req.block_count() == 0) throw InvalidArgument("block spec names no blocks");
  return req;
}

inline int cmd_det(const std::string& path, const std::string& format, std::istream& in,
                   std::ostream& out) {
  const Graph g = detail::load_graph(path, in);
  if (!is_connected(g)) throw ConnectivityError();
  const bool json = format == "json";
  nlohmann::json j;
  j["n"] = g.order();
  j["blocks"] = nlohmann::json::array();
  try {
    const FormulaResult f = det_cof_closed(g);
    if (json) {
      j["det"] = f.value.det.get_str();
      j["cof"] = f.value.cof.get_str();
      j["provenance"] = std::string(provenance_name(f.provenance));
      for (const auto& b : f.blocks)
        j["blocks"].push_back({{"kind", b.kind.to_string()},
                               {"det", b.value.det.get_str()},
                               {"cof", b.value.cof.get_str()},
                               {"provenance", std::string(provenance_name(b.provenance))}});
      out << j.dump() << '\n';
      return kOk;
    }
    out << "det=" << f.value.det << " cof=" << f.value.cof << " via "
        << provenance_name(f.provenance) << '\n';
    out << "n=" << g.order() << " edges=" << g.size() << " blocks=" << f.blocks.size() << '\n';
    detail::print_inventory(out, inventory(g));
    for (const auto& b : f.blocks)
      out << "  " << b.kind.to_string() << " det=" << b.value.det << " cof=" << b.value.cof
          << " via " << provenance_name(b.provenance) << '\n';
    return kOk;
  } catch (const UnsupportedGraphError& e) {
    const DetCof o = det_cof_oracle(g);
    if (json) {
      j["det"] = o.det.get_str();
      j["cof"] = o.cof.get_str();
      j["provenance"] = "oracle";
      for (const auto& cb : decompose(g)) j["blocks"].push_back({{"kind", cb.kind.to_string()}});
      j["note"] = std::string("closed-form unavailable: ") + e.what();
      out << j.dump() << '\n';
      return kOk;
    }
    out << "det=" << o.det << " cof=" << o.cof << " via oracle\n";
    out << "note: closed-form unavailable: " << e.what() << '\n';
    return kOk;
  }
}

inline int cmd_classify(const std::string& path, const std::string& format, std::istream& in,
                        std::ostream& out) {
  const Graph g = detail::load_graph(path, in);
  const auto blocks = decompose(g);
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& cb : blocks) {
    const std::string kind = cb.kind.to_string();
    if (cb.kind.tag == BlockKind::Tag::kUnsupported) {
      std::vector<std::size_t> vs(cb.block.vertices.begin(), cb.block.vertices.end());
      if (format == "json")
        rows.push_back({{"kind", kind}, {"vertices", vs}});
      else
        out << kind << " vertices=" << detail::join(vs, ',') << '\n';
      continue;
    }
    const BlockFormula f = block_formula(cb.kind);
    if (format == "json")
      rows.push_back({{"kind", kind},
                      {"det", f.value.det.get_str()},
                      {"cof", f.value.cof.get_str()},
                      {"provenance", std::string(provenance_name(f.provenance))}});
    else
      out << kind << " det=" << f.value.det << " cof=" << f.value.cof << '\n';
  }
  if (format == "json") out << nlohmann::json{{"n", g.order()}, {"blocks", rows}}.dump() << '\n';
  return kOk;
}

struct VerifyArgs {
  std::uint64_t seed = 1;
  std::size_t count = 200;
  std::size_t max_n = 40;
  bool allow_zero_blocks = false;
  bool allow_unsupported = false;
  bool skip_proofs = false;
  bool inject_fault = false;
  std::string jsonl;
};

inline int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  if (a.count < 1) throw InvalidArgument("--count must be at least 1");
  CampaignOptions opt;
  opt.request.allow_zero_blocks = a.allow_zero_blocks;
  opt.request.allow_unsupported = a.allow_unsupported;
  opt.verify.closed_form.negate_cycle_det = a.inject_fault;
  const CampaignSummary sum = fuzz_campaign(a.count, a.max_n, a.seed, opt);

  if (!a.jsonl.empty()) {
    std::ofstream f(a.jsonl);
    if (!f) throw Error("cannot write " + a.jsonl);
    for (const auto& r : sum.reports) f << to_json(r).dump() << '\n';
  }
  for (std::size_t i = 0; i < sum.reports.size(); ++i) {
    const auto& r = sum.reports[i];
    if (r.pass) continue;
    out << "FAIL graph " << i << ": n=" << r.n << " oracle=" << r.oracle << " ghh=" << r.ghh;
    if (r.closed) out << " closed=" << *r.closed;
    if (!r.closed_note.empty()) out << " note: " << r.closed_note;
    out << '\n';
  }

  out << sum.passed << '/' << sum.count << " graphs pass";
  bool ok = sum.all_pass();
  if (!a.skip_proofs) {
    const ProofCheckSummary p = run_proof_checks();
    out << "; " << p.inverse_pass << '/' << p.inverse_total << " inverse; " << p.scalar_pass
        << '/' << p.scalar_total << " scalar; " << p.congruence_pass << '/'
        << p.congruence_total << " congruence; " << p.congruence_prime_pass << '/'
        << p.congruence_prime_total << " congruence-prime";
    ok = ok && p.all_pass();
  }
  out << '\n';
  return ok ? kOk : kFailed;
}

inline int cmd_gen(const std::string& spec, std::uint64_t seed, const std::string& path,
                   std::ostream& out) {
  const BlockRequest req = parse_block_spec(spec);
  const Graph g = random_block_graph(req, seed);
  auto emit = [&](std::ostream& os) {
    os << "# blocks: " << spec << " seed=" << seed << '\n';
    write_edge_list(os, g);
  };
  if (path.empty() || path == "-") {
    emit(out);
  } else {
    std::ofstream f(path);
    if (!f) throw Error("cannot write " + path);
    emit(f);
  }
  return kOk;
}

/// Median wall time of `reps` runs of det_cof_closed and of the oracle on
/// block_chain(n).
struct BenchRow {
  std::size_t n = 0;
  std::int64_t closed_micros = 0;
  std::int64_t oracle_micros = 0;
  bool match = false;
};

inline BenchRow bench_one(std::size_t n, std::size_t reps) {
  using Clock = std::chrono::steady_clock;
  const Graph g = block_chain(n);
  std::vector<std::int64_t> closed, oracle;
  DetCof c, o;
  for (std::size_t r = 0; r < reps; ++r) {
    auto t0 = Clock::now();
    c = det_cof_closed(g).value;
    auto t1 = Clock::now();
    o = det_cof_oracle(g);
    auto t2 = Clock::now();
    closed.push_back(std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count());
    oracle.push_back(std::chrono::duration_cast<std::chrono::microseconds>(t2 - t1).count());
  }
  auto median = [](std::vector<std::int64_t> v) {
    std::nth_element(v.begin(), v.begin() + v.size() / 2, v.end());
    return v[v.size() / 2];
  };
  return {n, median(closed), median(oracle), c == o};
}

inline int cmd_bench(std::size_t max_n, std::size_t reps, std::ostream& out) {
  if (max_n < 10) throw InvalidArgument("--max-n must be at least 10");
  if (reps < 1) throw InvalidArgument("--reps must be at least 1");
  std::vector<std::size_t> sizes;
  for (std::size_t n = 10; n < max_n; n *= 2) sizes.push_back(n);
  sizes.push_back(max_n);
  out << "n,closed_micros,oracle_micros,match\n";
  bool ok = true;
  for (std::size_t n : sizes) {
    BenchRow row = bench_one(n, reps);
    ok = ok && row.match;
    out << row.n << ',' << row.closed_micros << ',' << row.oracle_micros << ','
        << (row.match ? "true" : "false") << '\n';
  }
  return ok ? kOk : kFailed;
}

/// Entry point shared by main() and the tests. args[0] is the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Exact determinants of graph distance matrices"};
  app.require_subcommand(1);

  std::string input = "-", format = "text";
  auto* det = app.add_subcommand("det", "det and cof of D(G) for an edge-list file");
  det->add_option("input", input, "edge-list file, '-' for stdin");
  det->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* classify = app.add_subcommand("classify", "list the blocks of a graph");
  classify->add_option("input", input, "edge-list file, '-' for stdin");
  classify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "fuzz campaign plus identity checks");
  verify->add_option("--seed", va.seed);
  verify->add_option("--count", va.count);
  verify->add_option("--max-n", va.max_n);
  verify->add_flag("--allow-zero-blocks", va.allow_zero_blocks, "include singular blocks");
  verify->add_flag("--allow-unsupported", va.allow_unsupported, "include K4 blocks");
  verify->add_flag("--skip-proofs", va.skip_proofs, "only run the graph campaign");
  verify->add_option("--jsonl", va.jsonl, "write one JSON report per graph");
  verify->add_flag("--inject-fault", va.inject_fault)->group("");

  std::string spec, out_path;
  std::uint64_t gen_seed = 0;
  auto* gen = app.add_subcommand("gen", "write a random graph with the given blocks");
  gen->add_option("spec", spec, "e.g. edges=3,cycles=3;5,thetas=1-2-2")->required();
  gen->add_option("--seed", gen_seed);
  gen->add_option("-o,--out", out_path);

  std::size_t bench_max_n = 200, reps = 5;
  auto* bench = app.add_subcommand("bench", "closed form vs oracle timings as CSV");
  bench->add_option("--max-n", bench_max_n);
  bench->add_option("--reps", reps);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*det) return cmd_det(input, format, in, out);
    if (*classify) return cmd_classify(input, format, in, out);
    if (*verify) return cmd_verify(va, out);
    if (*gen) return cmd_gen(spec, gen_seed, out_path, out);
    if (*bench) return cmd_bench(bench_max_n, reps, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace distdet::cli
