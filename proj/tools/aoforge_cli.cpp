#include "aoforge/aoforge.h"

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitVerdictFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitError = 3;

class CliError : public std::runtime_error {
public:
  CliError(int code, const std::string& message) : std::runtime_error(message), code_(code) {}
  int code() const { return code_; }

private:
  int code_;
};

// Bytes that identify the run: argv plus every input file read.
class InputDigest {
public:
  explicit InputDigest(const std::vector<std::string>& argv) {
    for (const std::string& a : argv) {
      data_ += a;
      data_.push_back('\0');
    }
  }

  void add(const std::string& bytes) {
    data_ += bytes;
    data_.push_back('\0');
  }

  std::string hex() const {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(data_.data(), data_.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
      throw CliError(kExitError, "SHA-256 digest failed");
    }
    std::ostringstream out;
    for (unsigned int i = 0; i < length; ++i) out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    return out.str();
  }

private:
  std::string data_;
};

void check(aof_status status) {
  if (status != AOF_OK) throw CliError(kExitError, aof_last_error());
}

std::string read_file(const std::string& path, InputDigest& digest) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError(kExitUsage, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  digest.add(buffer.str());
  return buffer.str();
}

struct GraphHandle {
  aof_graph* ptr = nullptr;
  GraphHandle() = default;
  GraphHandle(const GraphHandle&) = delete;
  GraphHandle& operator=(const GraphHandle&) = delete;
  ~GraphHandle() { aof_graph_free(ptr); }
};

struct GraphSource {
  std::string file;
  std::string family;

  void add_to(CLI::App* cmd) {
    auto* f = cmd->add_option("--graph", file, "graph JSON file {\"n\":..,\"edges\":[[i,j],..]}")->check(CLI::ExistingFile);
    auto* n = cmd->add_option("--family", family, "named graph: P<n>, C<n>, K<n>, S<n>, E<n>, grid<r>x<c>, petersen");
    f->excludes(n);
  }

  void load(GraphHandle& g, InputDigest& digest) const {
    if (!file.empty()) {
      std::string text = read_file(file, digest);
      check(aof_graph_from_json(text.c_str(), &g.ptr));
    } else if (!family.empty()) {
      check(aof_graph_from_family(family.c_str(), &g.ptr));
    } else {
      throw CliError(kExitUsage, "one of --graph or --family is required");
    }
  }
};

struct RawReport {
  std::string json;
  bool passed = true;
};

using Producer = std::function<RawReport(InputDigest&)>;

template <class F>
RawReport call(F&& f) {
  char* json = nullptr;
  int passed = 0;
  check(f(&json, &passed));
  RawReport out{json, passed != 0};
  aof_string_free(json);
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw CliError(kExitUsage, "invalid integer '" + item + "' in list '" + text + "'");
    }
  }
  return out;
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  std::string text = v.dump();
  if (text.size() > 96) text = text.substr(0, 93) + "...";
  return text;
}

void render_table(const Json& report, std::ostream& out) {
  out << "command: " << scalar_text(report["command"]) << "\n";
  out << "version: " << report["version"].get<std::string>() << "\n";
  out << "input_digest: " << report["input_digest"].get<std::string>() << "\n";
  if (report.contains("timestamp")) out << "timestamp: " << report["timestamp"].get<std::string>() << "\n";
  out << "\nresults\n";
  for (const auto& [key, value] : report["results"].items()) {
    std::string text = value.is_array() ? "[" + std::to_string(value.size()) + " entries]" : scalar_text(value);
    if (value.is_array() && value.dump().size() <= 96) text = value.dump();
    out << "  " << std::left << std::setw(32) << key << text << "\n";
  }
  const Json& verdicts = report["verdicts"];
  std::size_t failed = 0;
  out << "\nverdicts\n";
  for (const Json& v : verdicts) {
    bool pass = v["pass"].get<bool>();
    if (!pass) ++failed;
    out << "  " << (pass ? "PASS" : "FAIL") << "  " << v["name"].get<std::string>();
    if (!pass) out << "  expected " << scalar_text(v["expected"]) << ", got " << scalar_text(v["actual"]);
    out << "\n";
  }
  out << "\n" << verdicts.size() - failed << "/" << verdicts.size() << " verdicts passed\n";
}

std::string utc_now() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

int run(int argc, char** argv) {
  CLI::App app{"Exact combinatorics of acyclic orientations"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(aof_version()));

  std::string format = "json";
  std::string out_path;
  int jobs = 1;
  bool timestamp = false;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--out", out_path, "write the report to a file instead of stdout");
  app.add_option("--jobs", jobs, "worker threads for parallel checks")->check(CLI::PositiveNumber);
  app.add_flag("--timestamp", timestamp, "include a UTC timestamp in the report");

  Producer producer;
  GraphSource source;

  auto graph_command = [&](const std::string& name, const std::string& help,
                           std::function<RawReport(const aof_graph*)> body) {
    auto* cmd = app.add_subcommand(name, help);
    source.add_to(cmd);
    cmd->callback([&source, &producer, body] {
      producer = [&source, body](InputDigest& digest) {
        GraphHandle g;
        source.load(g, digest);
        return body(g.ptr);
      };
    });
    return cmd;
  };

  graph_command("graph", "graph summary and acyclic orientations",
                [](const aof_graph* g) { return call([&](char** j, int* p) { return aof_report_graph(g, j, p); }); });
  graph_command("paos", "partial acyclic orientations and their ideal families",
                [](const aof_graph* g) { return call([&](char** j, int* p) { return aof_report_paos(g, j, p); }); });

  std::string complex_kind = "Z";
  graph_command("complexes", "labelled cell complexes Z, Y, X", [&complex_kind](const aof_graph* g) {
    return call([&](char** j, int* p) { return aof_report_complex(g, complex_kind.c_str(), j, p); });
  })->add_option("--kind", complex_kind, "complex")->check(CLI::IsMember({"Z", "Y", "X"}));

  graph_command("ideals", "A_G, T_G, decompositions and Betti counts",
                [](const aof_graph* g) { return call([&](char** j, int* p) { return aof_report_ideals(g, j, p); }); });
  graph_command("duality", "Alexander duality between A_G and T_G",
                [](const aof_graph* g) { return call([&](char** j, int* p) { return aof_report_duality(g, j, p); }); });

  // nct
  auto* nct = app.add_subcommand("nct", "non-crossing trees, monomials, orientations and chains");
  nct->require_subcommand(1);
  auto nct_graph_command = [&](const std::string& name, const std::string& help,
                               std::function<RawReport(const aof_graph*, InputDigest&)> body) {
    auto* cmd = nct->add_subcommand(name, help);
    source.add_to(cmd);
    cmd->callback([&source, &producer, body] {
      producer = [&source, body](InputDigest& digest) {
        GraphHandle g;
        source.load(g, digest);
        return body(g.ptr, digest);
      };
    });
    return cmd;
  };
  nct_graph_command("roundtrip", "monomial <-> tree roundtrips over all standard monomials and trees",
                    [](const aof_graph* g, InputDigest&) {
                      return call([&](char** j, int* p) { return aof_report_nct_roundtrip(g, j, p); });
                    });
  std::string monomial;
  nct_graph_command("to-tree", "standard monomial to tree with the construction trace",
                    [&monomial](const aof_graph* g, InputDigest&) {
                      std::vector<int> a = parse_int_list(monomial);
                      return call([&](char** j, int* p) { return aof_report_nct_to_tree(g, a.data(), a.size(), j, p); });
                    })
      ->add_option("--monomial", monomial, "exponent list, e.g. 1,0,2")
      ->required();
  std::string tree_file;
  nct_graph_command("to-monomial", "tree to standard monomial",
                    [&tree_file](const aof_graph* g, InputDigest& digest) {
                      std::string text = read_file(tree_file, digest);
                      return call([&](char** j, int* p) { return aof_report_nct_to_monomial(g, text.c_str(), j, p); });
                    })
      ->add_option("--tree", tree_file, "tree JSON file {\"parent\": {\"1\": \"r\", ..}}")
      ->required()
      ->check(CLI::ExistingFile);
  nct_graph_command("orientations", "flagged trees and acyclic orientations", [](const aof_graph* g, InputDigest&) {
    return call([&](char** j, int* p) { return aof_report_nct_orientations(g, j, p); });
  });
  int nct_n = 3;
  auto* chains_cmd = nct->add_subcommand("chains", "maximal chains of non-crossing partitions");
  chains_cmd->add_option("--n", nct_n, "size")->required();
  chains_cmd->callback([&] {
    producer = [&](InputDigest&) { return call([&](char** j, int* p) { return aof_report_nct_chains(nct_n, j, p); }); };
  });
  std::string chain_file;
  auto* chain_tree_cmd = nct->add_subcommand("chain-to-tree", "maximal chain to tree");
  chain_tree_cmd->add_option("--chain", chain_file, "chain JSON file")->required()->check(CLI::ExistingFile);
  chain_tree_cmd->callback([&] {
    producer = [&](InputDigest& digest) {
      std::string text = read_file(chain_file, digest);
      return call([&](char** j, int* p) { return aof_report_nct_chain_to_tree(text.c_str(), j, p); });
    };
  });
  int forest_n = 4;
  auto* forest_cmd = nct->add_subcommand("forest", "finite forest identity");
  forest_cmd->add_option("--n", forest_n, "size")->required();
  forest_cmd->callback([&] {
    producer = [&](InputDigest&) { return call([&](char** j, int* p) { return aof_report_nct_forest(forest_n, j, p); }); };
  });

  // chains
  auto* chains = app.add_subcommand("chains", "Markov chains on acyclic orientations");
  chains->require_subcommand(1);
  std::string chain_kind = "CS";
  auto chain_command = [&](const std::string& name, const std::string& help,
                           std::function<RawReport(const aof_graph*)> body, std::vector<std::string> kinds) {
    auto* cmd = chains->add_subcommand(name, help);
    source.add_to(cmd);
    if (!kinds.empty()) cmd->add_option("--kind", chain_kind, "chain")->required()->check(CLI::IsMember(kinds));
    cmd->callback([&source, &producer, body] {
      producer = [&source, body](InputDigest& digest) {
        GraphHandle g;
        source.load(g, digest);
        return body(g.ptr);
      };
    });
    return cmd;
  };
  const std::vector<std::string> all_kinds{"CS", "ELR", "SL", "CR", "IR"};
  chain_command("verify", "exact stationary law against its closed form", [&chain_kind](const aof_graph* g) {
    return call([&](char** j, int* p) { return aof_report_chain_verify(g, chain_kind.c_str(), j, p); });
  }, all_kinds);
  std::uint64_t seed = 42, steps = 100000, burn_in = 0;
  double tolerance = 0;
  auto* sim = chain_command("simulate", "empirical occupation frequencies", [&](const aof_graph* g) {
    return call([&](char** j, int* p) {
      return aof_report_chain_simulate(g, chain_kind.c_str(), seed, steps, burn_in, tolerance, j, p);
    });
  }, all_kinds);
  sim->add_option("--seed", seed, "64-bit seed");
  sim->add_option("--steps", steps, "counted steps")->check(CLI::PositiveNumber);
  sim->add_option("--burn-in", burn_in, "discarded initial steps");
  sim->add_option("--tolerance", tolerance, "fail unless total variation to the exact law is below this");
  chain_command("flip-graph", "cover or interval reversal graph", [&chain_kind](const aof_graph* g) {
    return call([&](char** j, int* p) { return aof_report_flip_graph(g, chain_kind.c_str(), j, p); });
  }, {"CR", "IR"});
  chain_command("interval-reversal", "acyclicity, involution and injectivity of interval reversal",
                [](const aof_graph* g) {
                  return call([&](char** j, int* p) { return aof_report_interval_reversal(g, j, p); });
                },
                {});

  // expected-ao
  int expected_n = 3;
  std::string p_text = "1/2";
  bool oracle = false;
  auto* expected = app.add_subcommand("expected-ao", "expected number of acyclic orientations of G(n,p)");
  expected->add_option("--n", expected_n, "vertices")->required();
  expected->add_option("--p", p_text, "edge probability as a rational, e.g. 1/3")->required();
  expected->add_flag("--oracle", oracle, "also sum over all graphs on [n]");
  expected->callback([&] {
    producer = [&](InputDigest&) {
      return call([&](char** j, int* p) { return aof_report_expected_ao(expected_n, p_text.c_str(), oracle ? 1 : 0, jobs, j, p); });
    };
  });

  // percolation
  int k = 2;
  bool min_size = false, all_sets = false;
  std::string closure_set;
  auto* perc = graph_command("percolation", "k-neighbour bootstrap percolation", [&](const aof_graph* g) {
    return call([&](char** j, int* p) {
      return aof_report_percolation(g, k, min_size ? 1 : 0, all_sets ? 1 : 0,
                                    closure_set.empty() ? nullptr : closure_set.c_str(), j, p);
    });
  });
  perc->add_option("--k", k, "threshold")->required();
  auto* f1 = perc->add_flag("--min-size", min_size, "minimal percolating set size");
  auto* f2 = perc->add_flag("--all-sets", all_sets, "list every percolating set");
  auto* f3 = perc->add_option("--closure", closure_set, "closure of a vertex list, e.g. 1,3");
  f1->excludes(f2)->excludes(f3);
  f2->excludes(f3);

  // verify-all
  int n_max = 4;
  auto* verify = app.add_subcommand("verify-all", "every check over the built-in corpus");
  verify->add_option("--n-max", n_max, "largest corpus graph")->check(CLI::Range(1, 8));
  verify->callback([&] {
    producer = [&](InputDigest&) {
      return call([&](char** j, int* p) { return aof_report_verify_all(n_max, jobs, j, p); });
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  std::vector<std::string> args(argv + 1, argv + argc);
  InputDigest digest(args);
  RawReport raw = producer(digest);
  Json inner = Json::parse(raw.json);
  Json report;
  report["command"] = args;
  report["version"] = aof_version();
  report["input_digest"] = digest.hex();
  if (timestamp) report["timestamp"] = utc_now();
  report["results"] = inner["results"];
  report["verdicts"] = inner["verdicts"];

  std::ostringstream text;
  if (format == "table") {
    render_table(report, text);
  } else {
    text << report.dump(2) << "\n";
  }
  if (out_path.empty()) {
    std::cout << text.str();
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw CliError(kExitUsage, "cannot write " + out_path);
    out << text.str();
  }
  return raw.passed ? 0 : kExitVerdictFailed;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
