// Copyright 2026 The rmpsd Authors
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

// Command line interface for the sharp multi-demand envy-free pricing
// toolkit. See README.md for the file formats.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rmpsd/algorithms.hpp"
#include "rmpsd/gadgets.hpp"
#include "rmpsd/io.hpp"
#include "rmpsd/oracle.hpp"
#include "rmpsd/pricing.hpp"
#include "rmpsd/random_gen.hpp"

namespace {

using namespace rmpsd;

std::string describe(const EnvyReport& report) {
  switch (report.kind) {
    case EnvyReport::Kind::kEnvyFree:
      return "envy-free";
    case EnvyReport::Kind::kInfeasibleBuyer:
      return "violation: InfeasibleBuyer buyer=" + std::to_string(report.buyer + 1);
    case EnvyReport::Kind::kItemSwap:
      return "violation: ItemSwap buyer=" + std::to_string(report.buyer + 1) +
             " item=" + std::to_string(report.item + 1) +
             " preferred=" + std::to_string(report.other_item + 1);
    case EnvyReport::Kind::kLoserPositiveBundle: {
      std::string s = "violation: LoserPositiveBundle buyer=" + std::to_string(report.buyer + 1) +
                      " bundle=[";
      for (std::size_t t = 0; t < report.bundle.size(); ++t) {
        if (t) s += ' ';
        s += std::to_string(report.bundle[t] + 1);
      }
      return s + "]";
    }
  }
  return "?";
}

// Witness indices are canonical; report them 1-based in input order.
EnvyReport to_input_order(const Instance& inst, EnvyReport r) {
  if (r.buyer >= 0) r.buyer = inst.original_buyer(r.buyer);
  if (r.item >= 0) r.item = inst.original_item(r.item);
  if (r.other_item >= 0) r.other_item = inst.original_item(r.other_item);
  for (int& j : r.bundle) j = inst.original_item(j);
  std::sort(r.bundle.begin(), r.bundle.end());
  return r;
}

void write_or_print(const std::optional<std::string>& path, const nlohmann::json& j) {
  if (path) {
    save_json(*path, j);
  } else {
    std::cout << j.dump(2) << '\n';
  }
}

std::vector<Rational> parse_number_list(const std::string& csv) {
  std::vector<Rational> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(Rational::parse(tok));
  }
  return out;
}

struct OracleFlags {
  int max_items = 8;
  int max_buyers = 5;
  long max_allocations = 2000000;
  bool no_monotone_pruning = false;
  bool no_overpricing = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--max-items", max_items, "largest item count the oracle accepts");
    cmd->add_option("--max-buyers", max_buyers, "largest buyer count the oracle accepts");
    cmd->add_option("--max-allocations", max_allocations, "enumeration budget");
    cmd->add_flag("--no-monotone-pruning", no_monotone_pruning,
                  "also enumerate non-monotone allocations");
    cmd->add_flag("--no-overpricing", no_overpricing,
                  "cap every price at the owner's valuation");
  }
  OracleLimits limits() const {
    OracleLimits l;
    l.max_items = max_items;
    l.max_buyers = max_buyers;
    l.max_enumerated_allocations = max_allocations;
    l.monotone_pruning = !no_monotone_pruning;
    return l;
  }
};

// Runs prefix/best (as applicable) plus optionally the oracle on one file.
std::vector<BenchRecord> bench_one(const std::filesystem::path& file, bool with_oracle,
                                   const OracleFlags& flags) {
  const InstanceData data = load_instance(file.string());
  const Instance inst(data);
  std::optional<Rational> opt;
  if (with_oracle) {
    try {
      opt = oracle_opt(inst, flags.limits(), !flags.no_overpricing).optimum;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kLimitExceeded) throw;
      std::cerr << file.filename().string() << ": oracle skipped (" << e.what() << ")\n";
    }
  }

  std::vector<BenchRecord> rows;
  auto run_algo = [&](const std::string& algo, const std::function<Outcome()>& fn) {
    BenchRecord rec;
    rec.instance = file.filename().string();
    rec.algo = algo;
    const auto start = std::chrono::steady_clock::now();
    Outcome out = fn();
    rec.time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    rec.revenue = revenue(out);
    rec.envy_free = check_envy_free(inst, out).envy_free();
    if (opt) {
      rec.opt = opt;
      rec.ratio = rec.revenue.is_zero() ? Rational(1) : *opt / rec.revenue;
    }
    rows.push_back(std::move(rec));
  };
  if (inst.related()) {
    run_algo("prefix", [&] { return prefix_algorithm(inst); });
  }
  run_algo("best", [&] { return best_algorithm(inst).outcome; });
  return rows;
}

int run(int argc, char** argv) {
  CLI::App app{"envy-free revenue maximization with sharp multi-demands"};
  app.require_subcommand(1);

  std::string instance_path, outcome_path, second_path;
  std::optional<std::string> out_path;

  // solve
  auto* solve = app.add_subcommand("solve", "run an approximation algorithm");
  std::string algo = "prefix";
  solve->add_option("instance", instance_path, "instance file")->required();
  solve->add_option("--algo", algo, "prefix | best")
      ->check(CLI::IsMember({"prefix", "best"}));
  solve->add_option("-o,--output", out_path, "write the outcome here");
  solve->callback([&] {
    Instance inst(load_instance(instance_path));
    Outcome out = algo == "prefix" ? prefix_algorithm(inst) : best_algorithm(inst).outcome;
    if (out_path) save_json(*out_path, outcome_to_json(inst, out));
    std::cout << revenue(out).str() << '\n';
  });

  // price
  auto* price = app.add_subcommand("price", "apply the closed-form prices to an allocation");
  price->add_option("instance", instance_path, "instance file")->required();
  price->add_option("outcome", second_path, "outcome file (prices ignored)")->required();
  price->add_option("-o,--output", out_path, "write the priced outcome here");
  price->callback([&] {
    Instance inst(load_instance(instance_path));
    Outcome given = outcome_from_json(load_json(second_path), inst);
    Outcome priced{given.allocation, tilde_prices(inst, given.allocation)};
    write_or_print(out_path, outcome_to_json(inst, priced));
    std::cerr << "revenue " << revenue(priced).str() << '\n';
  });

  // verify
  auto* verify = app.add_subcommand("verify", "check an outcome for envy-freeness");
  verify->add_option("instance", instance_path, "instance file")->required();
  verify->add_option("outcome", outcome_path, "outcome file")->required();
  verify->callback([&] {
    Instance inst(load_instance(instance_path));
    Outcome out = outcome_from_json(load_json(outcome_path), inst);
    std::cout << describe(to_input_order(inst, check_envy_free(inst, out))) << '\n';
  });

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exact optimum by enumeration (small instances)");
  OracleFlags oracle_flags;
  oracle->add_option("instance", instance_path, "instance file")->required();
  oracle_flags.attach(oracle);
  oracle->add_option("-o,--output", out_path, "write the optimal outcome here");
  oracle->callback([&] {
    Instance inst(load_instance(instance_path));
    OracleResult r = oracle_opt(inst, oracle_flags.limits(), !oracle_flags.no_overpricing);
    std::cout << r.optimum.str() << '\n';
    if (!r.attained) {
      std::cerr << "note: supremum only; it needs a zero price and is not attained\n";
    }
    write_or_print(out_path, outcome_to_json(inst, r.outcome));
  });

  // check-proper
  auto* check = app.add_subcommand("check-proper", "report properness violators");
  check->add_option("instance", instance_path, "instance file")->required();
  check->callback([&] {
    Instance inst(load_instance(instance_path));
    ProperReport r = is_proper(inst);
    if (r.proper) {
      std::cout << "proper\n";
    } else {
      std::cout << "improper violators=[";
      for (std::size_t t = 0; t < r.violators.size(); ++t) {
        if (t) std::cout << ' ';
        std::cout << inst.original_buyer(r.violators[t]) + 1;
      }
      std::cout << "]\n";
    }
  });

  // properize
  auto* prop = app.add_subcommand("properize", "drop buyers that can never win");
  prop->add_option("instance", instance_path, "instance file")->required();
  prop->add_option("-o,--output", out_path, "write the proper instance here");
  prop->callback([&] {
    Instance inst(load_instance(instance_path));
    ProperizeResult r = properize(inst);
    std::cout << "removed " << r.removed.size() << " buyer(s):";
    for (int i : r.removed) std::cout << ' ' << inst.original_buyer(i) + 1;
    std::cout << '\n';
    write_or_print(out_path, instance_to_json(r.instance.data()));
  });

  // gen
  auto* gen = app.add_subcommand("gen", "instance generators");
  gen->require_subcommand(1);

  auto* random = gen->add_subcommand("random", "random instance family");
  std::string family = "related";
  RandomParams rparams;
  std::uint64_t seed = 0;
  random->add_option("--family", family, "related | unrelated | proper")
      ->check(CLI::IsMember({"related", "unrelated", "proper"}));
  random->add_option("--buyers", rparams.buyers);
  random->add_option("--items", rparams.items);
  random->add_option("--max-value", rparams.max_value);
  random->add_option("--max-quality", rparams.max_quality);
  random->add_option("--max-demand", rparams.max_demand);
  random->add_option("--seed", seed);
  random->add_option("-o,--output", out_path, "write the instance here");
  random->callback([&] {
    const RandomFamily f = family == "related"     ? RandomFamily::kRelatedUniform
                           : family == "unrelated" ? RandomFamily::kUnrelatedUniform
                                                   : RandomFamily::kProperForced;
    write_or_print(out_path, instance_to_json(random_instance(f, rparams, seed)));
  });

  GadgetParams gparams;
  std::string numbers_csv, cp_path;
  std::optional<std::string> witness_path;
  long lambda_opt = 0;
  std::string eps_text;
  auto add_gadget_inputs = [&](CLI::App* cmd) {
    cmd->add_option("--k", gparams.k, "reduction parameter (>= 3)");
    cmd->add_option("--lambda", lambda_opt, "explicit lambda");
    cmd->add_option("--epsilon", eps_text, "derive lambda from epsilon");
    cmd->add_option("--numbers", numbers_csv, "constrained-partition numbers, comma separated");
    cmd->add_option("--cp", cp_path, "constrained-partition JSON file");
    cmd->add_option("-o,--output", out_path, "write the instance here");
    cmd->add_option("--witness-out", witness_path,
                    "also decide the embedded instance and write the witness outcome");
  };
  auto gadget_cp = [&]() {
    ConstrainedPartitionInstance cp;
    if (!cp_path.empty()) {
      cp = cp_from_json(load_json(cp_path));
    } else if (!numbers_csv.empty()) {
      cp.numbers = parse_number_list(numbers_csv);
    } else {
      fail(ErrorCode::kParseError, "give the numbers via --numbers or --cp");
    }
    return cp;
  };
  auto run_gadget = [&](bool proper) {
    if (lambda_opt > 0) gparams.lambda = lambda_opt;
    if (!eps_text.empty()) gparams.epsilon = Rational::parse(eps_text);
    ConstrainedPartitionInstance cp = gadget_cp();
    Gadget g = proper ? build_proper_gadget(cp, gparams) : build_m_gadget(cp, gparams);
    write_or_print(out_path, instance_to_json(g.data));
    if (witness_path) {
      auto answer = cp_brute_decide(cp);
      if (!answer) fail(ErrorCode::kInvalidWitness, "the embedded instance has no answer");
      Outcome w = gadget_witness(g, *answer);
      save_json(*witness_path, outcome_to_json(g.instance, w));
      std::cerr << "witness revenue " << revenue(w).str() << '\n';
    }
  };
  auto* gm = gen->add_subcommand("gadget-m", "five-buyer hardness instance");
  add_gadget_inputs(gm);
  gm->callback([&] { run_gadget(false); });
  auto* gp = gen->add_subcommand("gadget-proper", "proper hardness instance");
  add_gadget_inputs(gp);
  gp->callback([&] { run_gadget(true); });

  auto* cpgen = gen->add_subcommand("cp-from-partition", "lift a partition instance");
  cpgen->add_option("--numbers", numbers_csv, "partition numbers, comma separated")->required();
  cpgen->add_option("-o,--output", out_path, "write the lifted instance here");
  cpgen->callback([&] {
    PartitionInstance p;
    p.numbers = parse_number_list(numbers_csv);
    write_or_print(out_path, cp_to_json(partition_to_constrained(p)));
  });

  // bench
  auto* bench = app.add_subcommand("bench", "run the algorithms over a directory");
  std::string dir, csv_out;
  bool with_oracle = false;
  int jobs = 4;
  OracleFlags bench_flags;
  bench->add_option("--dir", dir, "directory of instance .json files")->required();
  bench->add_option("--csv", csv_out, "output CSV path")->required();
  bench->add_flag("--with-oracle", with_oracle, "also compute the exact optimum");
  bench->add_option("--jobs", jobs, "parallel jobs");
  bench_flags.attach(bench);
  bench->callback([&] {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
      if (entry.path().extension() == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    std::vector<std::future<std::vector<BenchRecord>>> futures;
    futures.reserve(files.size());
    // Independent jobs; aggregation stays in file order.
    for (const auto& file : files) {
      futures.push_back(std::async(
          jobs > 1 ? std::launch::async : std::launch::deferred,
          [&, file] { return bench_one(file, with_oracle, bench_flags); }));
    }
    std::ofstream out(csv_out);
    if (!out) fail(ErrorCode::kParseError, "cannot write " + csv_out);
    out << kBenchCsvHeader << '\n';
    for (auto& f : futures) {
      for (const BenchRecord& rec : f.get()) out << to_csv_row(rec) << '\n';
    }
    std::cout << "wrote " << csv_out << " (" << files.size() << " instance(s))\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // 2 on usage errors, 0 for --help
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.name() << ": " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: Internal: " << e.what() << '\n';
    return 1;
  }
}
