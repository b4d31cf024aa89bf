#include <deque>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pvertex/decision.hpp"
#include "pvertex/exact_linalg.hpp"
#include "pvertex/families.hpp"
#include "pvertex/json_io.hpp"
#include "pvertex/numeric_search.hpp"
#include "pvertex/structure.hpp"
#include "pvertex/witness.hpp"

namespace {

using nlohmann::json;

// exit codes: 0/1/2 are semantic per subcommand; then the sysexits-style trio
constexpr int kExitUsage = 64;
constexpr int kExitBadInput = 65;
constexpr int kExitInternal = 70;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoOpts {
  std::string format = "auto";
  std::string output;
};

void add_io(CLI::App* cmd, IoOpts& io) {
  cmd->add_option("--format", io.format, "graph document encoding")
      ->check(CLI::IsMember({"auto", "json", "edgelist"}));
  cmd->add_option("--output", io.output, "write results to this file instead of stdout");
}

pvertex::GraphFormat to_format(const std::string& name) {
  if (name == "json") return pvertex::GraphFormat::Json;
  if (name == "edgelist") return pvertex::GraphFormat::EdgeList;
  return pvertex::GraphFormat::Auto;
}

std::string read_text(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw pvertex::ParseError("cannot open " + path);
    ss << in.rdbuf();
  }
  return ss.str();
}

void emit(const IoOpts& io, const std::string& text) {
  if (io.output.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(io.output);
  if (!out) throw pvertex::ParseError("cannot write " + io.output);
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
}

pvertex::GraphDocument load_graph(const std::string& path, const IoOpts& io) {
  return pvertex::parse_graph_document(read_text(path), to_format(io.format));
}

long parse_long(const std::string& tok, const std::string& what) {
  try {
    std::size_t pos = 0;
    const long value = std::stol(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return value;
  } catch (const std::exception&) {
    throw UsageError(what + " expects an integer, got \"" + tok + "\"");
  }
}

pvertex::FamilySpec parse_family(std::deque<std::string>& toks) {
  static const std::map<std::string, std::pair<pvertex::Family, int>> kFamilies = {
      {"path", {pvertex::Family::Path, 1}},
      {"cycle", {pvertex::Family::Cycle, 1}},
      {"complete", {pvertex::Family::Complete, 1}},
      {"complete-bipartite", {pvertex::Family::CompleteBipartite, 2}},
      {"star", {pvertex::Family::Star, 1}},
      {"hypercube", {pvertex::Family::Hypercube, 1}},
      {"grid", {pvertex::Family::Grid, 2}},
      {"gen-petersen", {pvertex::Family::GenPetersen, 2}},
      {"lollipop", {pvertex::Family::Lollipop, 2}},
      {"barbell", {pvertex::Family::Barbell, 1}},
      {"gen-barbell", {pvertex::Family::GenBarbell, 3}},
      {"corona", {pvertex::Family::Corona, 1}},
  };
  if (toks.empty()) throw UsageError("missing family name");
  const std::string name = toks.front();
  toks.pop_front();
  const auto it = kFamilies.find(name);
  if (it == kFamilies.end()) throw UsageError("unknown family \"" + name + "\"");
  pvertex::FamilySpec spec;
  spec.family = it->second.first;
  for (int i = 0; i < it->second.second; ++i) {
    if (toks.empty()) throw UsageError(name + " needs " + std::to_string(it->second.second) + " parameter(s)");
    spec.params.push_back(parse_long(toks.front(), name + " parameter"));
    toks.pop_front();
  }
  if (spec.family == pvertex::Family::Corona) {
    spec.base = std::make_shared<const pvertex::FamilySpec>(parse_family(toks));
  }
  return spec;
}

json numeric_witness_to_json(const pvertex::NumericWitness& nw) {
  json j;
  j["n"] = nw.matrix.rows();
  j["entries"] = json::array();
  for (Eigen::Index i = 0; i < nw.matrix.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < nw.matrix.cols(); ++k) row.push_back(nw.matrix(i, k));
    j["entries"].push_back(std::move(row));
  }
  j["residual"] = nw.residual;
  j["detEstimate"] = nw.det_estimate;
  j["conditionEstimate"] = nw.condition_estimate;
  j["restartIndex"] = nw.restart_index;
  j["seed"] = nw.seed;
  return j;
}

std::vector<int> parse_bails(const std::string& text, std::size_t count) {
  std::vector<int> bails(count, 0);
  if (text.empty()) return bails;
  std::stringstream ss(text);
  std::string tok;
  std::size_t i = 0;
  while (std::getline(ss, tok, ',')) {
    if (i >= count) throw UsageError("more bail vertices than components");
    bails[i++] = static_cast<int>(parse_long(tok, "--bails entry"));
  }
  if (i != count) throw UsageError("--bails needs one entry per component");
  return bails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decide, certify, and construct matrices whose principal (n-1)-minors all vanish"};
  app.require_subcommand(1);
  bool deterministic = false;
  app.add_flag("--deterministic", deterministic, "fail instead of running randomized steps without --seed");

  int exit_code = 0;
  std::function<void()> action;

  // ---- decide ----
  auto* cmd_decide = app.add_subcommand("decide", "run the rule cascade; exit 0 Yes, 1 No, 2 Unknown");
  IoOpts decide_io;
  std::string decide_input = "-";
  bool decide_numeric = false;
  std::uint64_t decide_seed = 1;
  bool decide_seed_given = false;
  int decide_restarts = 16;
  double decide_tol = 1e-10;
  cmd_decide->add_option("graph", decide_input, "graph file, or - for stdin");
  cmd_decide->add_flag("--numeric", decide_numeric, "let the fallback rule call the numeric search");
  cmd_decide->add_option("--seed", decide_seed, "numeric search seed")->each([&](const std::string&) {
    decide_seed_given = true;
  });
  cmd_decide->add_option("--restarts", decide_restarts, "numeric search restarts");
  cmd_decide->add_option("--tol", decide_tol, "numeric search residual tolerance");
  add_io(cmd_decide, decide_io);
  cmd_decide->callback([&] {
    action = [&] {
      if (decide_numeric && deterministic && !decide_seed_given) {
        throw UsageError("--deterministic requires an explicit --seed with --numeric");
      }
      const auto doc = load_graph(decide_input, decide_io);
      pvertex::DecideOptions opts;
      if (decide_numeric) {
        pvertex::SearchConfig cfg;
        cfg.seed = decide_seed;
        cfg.restarts = decide_restarts;
        cfg.residual_tol = decide_tol;
        opts.numeric_prober = [cfg](const pvertex::Graph& g) -> std::optional<double> {
          const auto nw = pvertex::search_witness(g, cfg);
          if (nw) return nw->residual;
          return std::nullopt;
        };
      }
      const auto cert = pvertex::decide(doc.graph, opts);
      emit(decide_io, pvertex::certificate_to_json(cert).dump(2));
      exit_code = cert.status == pvertex::Status::Yes ? 0 : cert.status == pvertex::Status::No ? 1 : 2;
    };
  });

  // ---- verify ----
  auto* cmd_verify = app.add_subcommand("verify", "exact check of a rational matrix; exit 0 pass, 1 fail");
  IoOpts verify_io;
  std::string verify_graph, verify_matrix;
  cmd_verify->add_option("graph", verify_graph, "graph file, or -")->required();
  cmd_verify->add_option("matrix", verify_matrix, "matrix JSON file")->required();
  add_io(cmd_verify, verify_io);
  cmd_verify->callback([&] {
    action = [&] {
      const auto doc = load_graph(verify_graph, verify_io);
      json mj = json::parse(read_text(verify_matrix), nullptr, false);
      if (mj.is_discarded()) throw pvertex::ParseError("matrix file is not valid JSON");
      const auto m = pvertex::matrix_from_json(mj);
      json out;
      try {
        const auto v = pvertex::verify_property_p(m, doc.graph);
        out = pvertex::verification_to_json(v);
        exit_code = v.property_p() ? 0 : 1;
      } catch (const std::invalid_argument& e) {
        out["propertyP"] = false;
        out["error"] = e.what();
        exit_code = 1;
      }
      emit(verify_io, out.dump(2));
    };
  });

  // ---- witness ----
  auto* cmd_witness = app.add_subcommand("witness", "print an exact witness when a constructive rule applies");
  IoOpts witness_io;
  std::string witness_input = "-";
  cmd_witness->add_option("graph", witness_input, "graph file, or -");
  add_io(cmd_witness, witness_io);
  cmd_witness->callback([&] {
    action = [&] {
      const auto doc = load_graph(witness_input, witness_io);
      const auto cert = pvertex::decide(doc.graph);
      if (cert.status == pvertex::Status::Yes && cert.witness) {
        emit(witness_io, pvertex::witness_to_json(*cert.witness).dump(2));
        exit_code = 0;
      } else {
        json out;
        out["status"] = pvertex::to_string(cert.status);
        out["reason"] = cert.reason.empty() ? "no constructive rule applies" : cert.reason;
        emit(witness_io, out.dump(2));
        exit_code = 2;
      }
    };
  });

  // ---- generate ----
  auto* cmd_generate = app.add_subcommand("generate", "emit a graph from a named family");
  IoOpts generate_io;
  std::vector<std::string> generate_args;
  cmd_generate->add_option("family", generate_args, "family name and parameters (corona: t, then base family)")
      ->expected(-1);
  add_io(cmd_generate, generate_io);
  cmd_generate->callback([&] {
    action = [&] {
      std::deque<std::string> toks(generate_args.begin(), generate_args.end());
      const auto spec = parse_family(toks);
      if (!toks.empty()) throw UsageError("unused trailing arguments after the family spec");
      pvertex::GraphDocument doc;
      doc.graph = pvertex::generate(spec);
      if (generate_io.format == "json") {
        emit(generate_io, pvertex::to_json(doc).dump(2));
      } else {
        emit(generate_io, pvertex::to_edgelist(doc));
      }
    };
  });

  // ---- reduce ----
  auto* cmd_reduce = app.add_subcommand("reduce", "run the pendant-deletion pipeline and print its trace");
  IoOpts reduce_io;
  std::string reduce_input = "-";
  cmd_reduce->add_option("graph", reduce_input, "graph file, or -");
  add_io(cmd_reduce, reduce_io);
  cmd_reduce->callback([&] {
    action = [&] {
      const auto doc = load_graph(reduce_input, reduce_io);
      emit(reduce_io, pvertex::trace_to_json(pvertex::pendant_reduce(doc.graph)).dump(2));
    };
  });

  // ---- thread ----
  auto* cmd_thread = app.add_subcommand("thread", "assemble and verify a witness for a threaded union");
  IoOpts thread_io;
  std::string thread_base;
  std::vector<std::string> thread_comps;
  std::string thread_bails;
  std::string thread_coupling = "1";
  cmd_thread->add_option("base", thread_base, "base graph file (tree-cycle block graph)")->required();
  cmd_thread->add_option("components", thread_comps, "one graph file per base vertex")->required()->expected(-1);
  cmd_thread->add_option("--bails", thread_bails, "comma-separated bail vertex per component (default all 0)");
  cmd_thread->add_option("-c,--coupling", thread_coupling, "joining weight, as a rational like 3/2");
  add_io(cmd_thread, thread_io);
  cmd_thread->callback([&] {
    action = [&] {
      pvertex::ThreadSpec spec;
      spec.base = load_graph(thread_base, thread_io).graph;
      spec.coupling = pvertex::rational_from_string(thread_coupling);
      const auto bails = parse_bails(thread_bails, thread_comps.size());
      for (std::size_t i = 0; i < thread_comps.size(); ++i) {
        const auto comp = load_graph(thread_comps[i], thread_io);
        const auto cert = pvertex::decide(comp.graph);
        if (cert.status != pvertex::Status::Yes || !cert.witness) {
          throw pvertex::ParseError("component " + thread_comps[i] + " has no exact witness (status " +
                                    pvertex::to_string(cert.status) + ")");
        }
        spec.components.push_back({*cert.witness, bails[i]});
      }
      const auto w = pvertex::thread_over(spec);
      json out;
      pvertex::GraphDocument doc;
      doc.graph = w.graph;
      out["graph"] = pvertex::to_json(doc);
      out["witness"] = pvertex::witness_to_json(w);
      emit(thread_io, out.dump(2));
    };
  });

  // ---- search ----
  auto* cmd_search = app.add_subcommand("search", "numeric witness search; exit 0 found, 2 not found");
  IoOpts search_io;
  std::string search_input = "-";
  pvertex::SearchConfig search_cfg;
  bool search_seed_given = false;
  bool search_rationalize = false;
  cmd_search->add_option("graph", search_input, "graph file, or -");
  cmd_search->add_option("--seed", search_cfg.seed, "restart seed")->each([&](const std::string&) {
    search_seed_given = true;
  });
  cmd_search->add_option("--restarts", search_cfg.restarts, "number of restarts");
  cmd_search->add_option("--tol", search_cfg.residual_tol, "residual tolerance");
  cmd_search->add_option("--max-iters", search_cfg.max_iters, "iteration budget per restart");
  cmd_search->add_option("--det-floor", search_cfg.det_floor, "minimum accepted |det|");
  cmd_search->add_flag("--rationalize", search_rationalize, "also try exact recovery by continued fractions");
  cmd_search->add_option("--rationalize-max-den", search_cfg.rationalize_max_denominator,
                         "denominator bound for --rationalize");
  add_io(cmd_search, search_io);
  cmd_search->callback([&] {
    action = [&] {
      if (deterministic && !search_seed_given) {
        throw UsageError("--deterministic requires an explicit --seed");
      }
      const auto doc = load_graph(search_input, search_io);
      const auto nw = pvertex::search_witness(doc.graph, search_cfg);
      if (!nw) {
        emit(search_io, "no witness found");
        exit_code = 2;
        return;
      }
      json out = numeric_witness_to_json(*nw);
      if (search_rationalize) {
        const auto exact = pvertex::rationalize(*nw, doc.graph, search_cfg.rationalize_max_denominator);
        out["exact"] = exact ? pvertex::witness_to_json(*exact) : json(nullptr);
      }
      emit(search_io, out.dump(2));
      exit_code = 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    action();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  return exit_code;
}
