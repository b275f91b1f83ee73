// Copyright 2026 The sdt Authors
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


// Command-line front end. Talks to the library only through sdt/sdt.h.

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sdt/sdt.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

// Carries a library status out of a worker or command body.
struct Failure {
  sdt_status status;
  std::string message;
};

void Check(sdt_status status, const std::string& context) {
  if (status != SDT_OK) {
    throw Failure{status, context + ": " + sdt_status_name(status) + ": " +
                              sdt_last_error()};
  }
}

struct GraphDeleter {
  void operator()(sdt_graph* g) const { sdt_graph_free(g); }
};
struct GroupDeleter {
  void operator()(sdt_group* g) const { sdt_group_free(g); }
};
using GraphPtr = std::unique_ptr<sdt_graph, GraphDeleter>;
using GroupPtr = std::unique_ptr<sdt_group, GroupDeleter>;

std::string TakeString(char* raw) {
  std::string out(raw);
  sdt_string_free(raw);
  return out;
}

std::string ReadSource(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{SDT_E_IO, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteTarget(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Failure{SDT_E_IO, "cannot write " + path};
}

struct Input {
  std::string name;
  std::string graph6;  // empty for corpus entries
  std::string corpus_name;
};

GraphPtr Load(const Input& in) {
  sdt_graph* raw = nullptr;
  if (in.corpus_name.empty()) {
    Check(sdt_graph_from_graph6(in.graph6.c_str(), &raw), in.name);
  } else {
    Check(sdt_graph_from_corpus(in.corpus_name.c_str(), &raw), in.name);
  }
  return GraphPtr(raw);
}

std::vector<Input> StreamInputs(const std::string& path) {
  const std::string text = ReadSource(path);
  const std::string label = path == "-" ? "stdin" : path;
  std::vector<Input> out;
  std::istringstream lines(text);
  std::string line;
  int number = 0;
  while (std::getline(lines, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back({label + ":" + std::to_string(number), line, ""});
  }
  if (out.empty()) throw Failure{SDT_E_PARSE, label + ": no graph6 lines"};
  return out;
}

// Group selection shared by the analysis commands.
struct GroupChoice {
  std::string generator_file;
  std::string subgroup;
  std::string generator_text;  // loaded once

  void Load() {
    if (!generator_file.empty()) generator_text = ReadSource(generator_file);
  }

  std::string Name() const {
    if (!subgroup.empty()) return subgroup;
    if (!generator_file.empty()) return generator_file;
    return "Aut";
  }

  GroupPtr Build(const sdt_graph* g, const Input& in) const {
    sdt_group* raw = nullptr;
    if (!subgroup.empty()) {
      Check(sdt_group_named(in.corpus_name.c_str(), subgroup.c_str(), &raw),
            in.name);
    } else if (!generator_file.empty()) {
      Check(sdt_group_from_text(g, generator_text.c_str(), &raw), in.name);
    } else {
      Check(sdt_group_automorphisms(g, &raw), in.name);
    }
    return GroupPtr(raw);
  }
};

// Runs work(0..count-1) on up to `jobs` threads; results keep input order.
// The first failure in input order is rethrown.
template <typename Result, typename Fn>
std::vector<Result> RunAll(size_t count, int jobs, Fn work) {
  std::vector<Result> results(count);
  std::vector<std::optional<Failure>> failures(count);
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < count; i = next++) {
      try {
        results[i] = work(i);
      } catch (const Failure& f) {
        failures[i] = f;
      }
    }
  };
  const int threads =
      std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& f : failures) {
    if (f) throw *f;
  }
  return results;
}

int DefaultJobs() {
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

struct Analysis {
  json report;
  bool violation = false;
};

bool ReportHasViolation(const json& report) {
  return report.at("verdict").at("verdict") == "violation" ||
         !report.at("findings").empty();
}

std::string SummaryLine(const json& r) {
  std::ostringstream out;
  const json& graph = r.at("graph");
  out << graph.at("name").get<std::string>() << ": n=" << graph.at("order")
      << " m=" << graph.at("size");
  if (!graph.at("valency").is_null()) out << " k=" << graph.at("valency");
  const json& girth = r.at("girth").at("girth");
  out << " girth=" << (girth.is_null() ? "inf" : girth.dump());
  const json& array = r.at("distance_regularity").at("array");
  out << " dr=" << (array.is_null() ? std::string("no") : [&] {
    std::string b, c;
    for (const auto& x : array.at("b")) b += (b.empty() ? "" : ",") + x.dump();
    for (const auto& x : array.at("c")) c += (c.empty() ? "" : ",") + x.dump();
    return "{" + b + ";" + c + "}";
  }());
  out << " |G|=" << r.at("group").at("order").get<std::string>()
      << " verdict=" << r.at("verdict").at("verdict").get<std::string>()
      << " findings=" << r.at("findings").size() << "\n";
  return out.str();
}

struct SourceOptions {
  std::string name;
  std::string graph6;

  void Attach(CLI::App* cmd) {
    auto* by_name = cmd->add_option("--name", name, "Corpus graph name");
    auto* by_file =
        cmd->add_option("--graph6", graph6, "graph6 file, one graph per line, or -");
    by_name->excludes(by_file);
  }

  std::vector<Input> Inputs() const {
    if (!name.empty()) return {{name, "", name}};
    if (!graph6.empty()) return StreamInputs(graph6);
    throw Failure{SDT_E_ARGUMENT, "one of --name or --graph6 is required"};
  }
};

int Analyze(const SourceOptions& source, GroupChoice group,
            const std::string& json_out, bool timing, int jobs) {
  if (!group.subgroup.empty() && source.name.empty()) {
    throw Failure{SDT_E_ARGUMENT, "--subgroup needs --name"};
  }
  group.Load();
  const auto inputs = source.Inputs();
  const auto results = RunAll<Analysis>(inputs.size(), jobs, [&](size_t i) {
    const Input& in = inputs[i];
    GraphPtr g = Load(in);
    GroupPtr G = group.Build(g.get(), in);
    char* raw = nullptr;
    Check(sdt_analyze_json(g.get(), G.get(), in.name.c_str(),
                           group.Name().c_str(), timing ? 1 : 0, &raw),
          in.name);
    Analysis a;
    a.report = json::parse(TakeString(raw));
    a.violation = ReportHasViolation(a.report);
    return a;
  });
  bool violation = false;
  for (const auto& a : results) violation = violation || a.violation;
  if (!json_out.empty()) {
    json doc;
    if (source.name.empty()) {
      doc = json::array();
      for (const auto& a : results) doc.push_back(a.report);
    } else {
      doc = results.front().report;
    }
    WriteTarget(json_out, doc.dump(2) + "\n");
  } else {
    for (const auto& a : results) std::cout << SummaryLine(a.report);
  }
  return violation ? kExitViolation : kExitOk;
}

struct Verification {
  json result;
  bool violation = false;
};

std::string VerifyLine(const std::string& graph, const std::string& group,
                       const json& v) {
  const json& verdict = v.at("verdict");
  std::ostringstream out;
  out << graph << " / " << group << ": "
      << verdict.at("verdict").get<std::string>()
      << " clause=" << verdict.at("clause").get<std::string>()
      << " d=" << verdict.at("diameter")
      << " dr=" << (verdict.at("distance_regular").get<bool>() ? "yes" : "no")
      << " girth-clause=" << verdict.at("girth_clause").get<std::string>()
      << " findings=" << v.at("findings").size() << "\n";
  return out.str();
}

int Verify(bool corpus, const SourceOptions& source, GroupChoice group,
           const std::string& json_out, int jobs) {
  std::vector<Input> inputs;
  std::vector<std::string> subgroups;
  if (corpus) {
    char* raw = nullptr;
    Check(sdt_corpus_json(&raw), "corpus");
    for (const auto& e : json::parse(TakeString(raw))) {
      const std::string name = e.at("name");
      inputs.push_back({name, "", name});
      subgroups.emplace_back();
      for (const auto& s : e.at("subgroups")) {
        inputs.push_back({name, "", name});
        subgroups.push_back(s.at("name"));
      }
    }
  } else {
    group.Load();
    inputs = source.Inputs();
    subgroups.assign(inputs.size(), group.subgroup);
  }
  const auto results =
      RunAll<Verification>(inputs.size(), jobs, [&](size_t i) {
        const Input& in = inputs[i];
        GroupChoice choice = group;
        choice.subgroup = subgroups[i];
        GraphPtr g = Load(in);
        GroupPtr G = choice.Build(g.get(), in);
        char* raw = nullptr;
        Check(sdt_verify_json(g.get(), G.get(), in.name.c_str(),
                              choice.Name().c_str(), &raw),
              in.name);
        Verification v;
        v.result = json::parse(TakeString(raw));
        v.violation = v.result.at("violation").get<bool>();
        return v;
      });
  bool violation = false;
  json all = json::array();
  for (size_t i = 0; i < results.size(); ++i) {
    violation = violation || results[i].violation;
    const std::string group_name =
        subgroups[i].empty() ? (corpus ? "Aut" : group.Name()) : subgroups[i];
    if (json_out.empty()) {
      std::cout << VerifyLine(inputs[i].name, group_name, results[i].result);
    }
    all.push_back(results[i].result);
  }
  if (!json_out.empty()) WriteTarget(json_out, all.dump(2) + "\n");
  return violation ? kExitViolation : kExitOk;
}

void PrintSmallDesigns(int points) {
  std::cout << "1-designs on " << points << " points\n";
  for (int c = 1; c <= points; ++c) {
    char* raw = nullptr;
    Check(sdt_small_designs_json(points, c, &raw), "tables");
    for (const auto& row : json::parse(TakeString(raw))) {
      std::cout << "  " << row.at("parameters").get<std::string>()
                << "  blocks=" << row.at("block_count")
                << "  strongest=" << row.at("strongest").get<std::string>()
                << "  labelings=" << row.at("labelings").size() << "  canonical=";
      for (const auto& block : row.at("labelings").front()) {
        std::cout << "{";
        for (size_t i = 0; i < block.size(); ++i) {
          std::cout << (i ? "," : "") << block[i];
        }
        std::cout << "}";
      }
      std::cout << "\n";
    }
  }
}

int Designs(const SourceOptions& source, GroupChoice group, bool tables,
            const std::string& json_out) {
  if (tables) {
    PrintSmallDesigns(3);
    PrintSmallDesigns(4);
    if (source.name.empty() && source.graph6.empty()) return kExitOk;
  }
  group.Load();
  json all = json::array();
  bool violation = false;
  for (const Input& in : source.Inputs()) {
    GraphPtr g = Load(in);
    GroupPtr G = group.Build(g.get(), in);
    char* raw = nullptr;
    Check(sdt_designs_json(g.get(), G.get(), &raw), in.name);
    json doc = json::parse(TakeString(raw));
    doc["name"] = in.name;
    for (const auto& radius : doc.at("radii")) {
      for (const auto& orbit : radius.at("orbits")) {
        std::ostringstream line;
        line << in.name << " s=" << radius.at("s") << " orbit "
             << orbit.at("index") << " |D|=" << orbit.at("size")
             << " b'=" << orbit.at("b_prime") << " c'=" << orbit.at("c_prime");
        if (orbit.contains("design")) {
          const json& d = orbit.at("design");
          line << " t=" << d.at("strength")
               << " blocks=" << d.at("blocks").size()
               << " e=" << d.at("block_class_size")
               << " violations=" << d.at("violations").size();
          if (!d.at("violations").empty()) violation = true;
          if (orbit.contains("table_row") && !orbit.at("table_row").is_null()) {
            line << " table=" << orbit.at("table_row").at("parameters").get<std::string>()
                 << " strongest="
                 << orbit.at("table_row").at("strongest").get<std::string>();
          }
        } else {
          line << " skipped: " << orbit.value("skipped", std::string());
        }
        if (json_out.empty()) std::cout << line.str() << "\n";
      }
    }
    all.push_back(std::move(doc));
  }
  if (!json_out.empty()) WriteTarget(json_out, all.dump(2) + "\n");
  return violation ? kExitViolation : kExitOk;
}

int Orders(const std::string& json_out) {
  char* raw = nullptr;
  Check(sdt_orders_json(&raw), "orders");
  const std::string text = TakeString(raw);
  if (!json_out.empty()) {
    WriteTarget(json_out, text);
    return kExitOk;
  }
  const json doc = json::parse(text);
  std::cout << "order 11*3^(d-2)-1\n  d:    ";
  for (const auto& e : doc.at("case_orders")) std::cout << "\t" << e.at("d");
  std::cout << "\n  order:";
  for (const auto& e : doc.at("case_orders")) std::cout << "\t" << e.at("order");
  std::cout << "\norder (6+12/c_d)*3^(d-2)-1\n  c_d\\d:";
  for (const auto& e : doc.at("case_orders")) std::cout << "\t" << e.at("d");
  int row = 0;
  for (const auto& e : doc.at("girth_orders")) {
    if (e.at("c_d") != row) {
      row = e.at("c_d");
      std::cout << "\n  " << row << ":    ";
    }
    std::cout << "\t" << e.at("order");
  }
  const json& f = doc.at("factorization");
  std::cout << "\n" << f.at("n") << " =";
  bool first = true;
  for (const auto& p : f.at("factors")) {
    std::cout << (first ? " " : " * ") << p;
    first = false;
  }
  std::cout << "\n";
  return kExitOk;
}

int Oracle(const SourceOptions& source) {
  bool disagree = false;
  for (const Input& in : source.Inputs()) {
    GraphPtr g = Load(in);
    char* raw = nullptr;
    Check(sdt_oracle_json(g.get(), &raw), in.name);
    const json c = json::parse(TakeString(raw));
    std::cout << in.name << ": |Aut| brute=" << c.at("brute_group_order").get<std::string>()
              << " search=" << c.at("search_group_order").get<std::string>()
              << " array brute=" << c.at("brute_array").get<std::string>()
              << " core=" << c.at("core_array").get<std::string>()
              << (c.at("agrees").get<bool>() ? " agree" : " DISAGREE") << "\n";
    disagree = disagree || !c.at("agrees").get<bool>();
  }
  return disagree ? kExitViolation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance-transitivity and local design analysis of graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", sdt_version());

  SourceOptions source;
  GroupChoice group;
  std::string json_out;
  bool timing = false;
  bool corpus = false;
  bool tables = false;
  int jobs = DefaultJobs();

  auto add_group = [&](CLI::App* cmd) {
    auto* file = cmd->add_option("--group", group.generator_file,
                                 "Generator file (cycle notation, one per line)");
    auto* named = cmd->add_option("--subgroup", group.subgroup,
                                  "Subgroup shipped with a corpus entry");
    file->excludes(named);
  };

  auto* analyze = app.add_subcommand("analyze", "Full analysis report");
  source.Attach(analyze);
  add_group(analyze);
  analyze->add_option("--json", json_out, "Write the JSON report to a file or -");
  analyze->add_flag("--timing", timing, "Include elapsed time in the report");
  analyze->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Check the theorem harness");
  verify->add_flag("--corpus", corpus, "Every corpus graph and shipped subgroup");
  source.Attach(verify);
  add_group(verify);
  verify->add_option("--json", json_out, "Write verdicts as JSON to a file or -");
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* designs = app.add_subcommand("designs", "Local designs per orbit");
  source.Attach(designs);
  add_group(designs);
  designs->add_flag("--tables", tables, "Print the 1-designs on 3 and 4 points");
  designs->add_option("--json", json_out, "Write designs as JSON to a file or -");

  auto* orders = app.add_subcommand("orders", "Candidate orders for tetravalent graphs");
  orders->add_option("--json", json_out, "Write the orders as JSON to a file or -");

  auto* oracle = app.add_subcommand("oracle", "Exhaustive cross-checks, n <= 12");
  source.Attach(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) return Analyze(source, group, json_out, timing, jobs);
    if (*verify) {
      if (corpus && (!source.name.empty() || !source.graph6.empty())) {
        throw Failure{SDT_E_ARGUMENT, "--corpus excludes --name and --graph6"};
      }
      return Verify(corpus, source, group, json_out, jobs);
    }
    if (*designs) return Designs(source, group, tables, json_out);
    if (*orders) return Orders(json_out);
    if (*oracle) return Oracle(source);
  } catch (const Failure& f) {
    std::cerr << "sdt: " << f.message << "\n";
    return f.status == SDT_E_THEOREM_VIOLATION ? kExitViolation : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "sdt: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
