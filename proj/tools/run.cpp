#include "run.hpp"

#include <chrono>
#include <condition_variable>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <thread>

#include <CLI11.hpp>

#include "fpush/frobenius.hpp"
#include "fpush/homology.hpp"

namespace fpush::cli {

void Report::discrepancy(const std::string& what, json expected, json computed) {
  discrepancies.push_back({{"item", what}, {"expected", std::move(expected)}, {"computed", std::move(computed)}});
  status = "discrepancy";
}

int Report::exit_code() const {
  if (status == "discrepancy") return kDiscrepancy;
  if (status == "undecided") return kUndecided;
  return kOk;
}

namespace {

using Command = std::function<Report(const ProblemDocument&, const Options&)>;

// Task-block values fill in flags the user left at their defaults.
Options with_task(Options o, const ProblemDocument& doc, const std::string& command) {
  const json& t = doc.task;
  if (!t.contains("command") || t["command"] == command) {
    if (o.module.empty() && t.contains("module")) o.module = t["module"].get<std::string>();
    if (o.target.empty() && t.contains("in")) o.target = t["in"].get<std::string>();
    if (o.q == 0 && t.contains("q")) o.q = t["q"].get<std::uint64_t>();
    if (o.index == 0 && t.contains("index")) o.index = t["index"].get<int>();
    if (t.contains("max_steps") && o.max_steps == 20) o.max_steps = t["max_steps"].get<int>();
    if (t.contains("seed") && o.seed == 1) o.seed = t["seed"].get<std::uint64_t>();
    if (t.contains("threads") && o.threads == 1) o.threads = t["threads"].get<int>();
    if (t.contains("budget_ms") && o.budget_ms == 0) o.budget_ms = t["budget_ms"].get<std::int64_t>();
  }
  if (o.q == 0) o.q = doc.ring->characteristic();
  return o;
}

GradedModule pick_module(const ProblemDocument& doc, const std::string& name) {
  if (!name.empty()) return doc.module(name);
  if (!doc.order.empty()) return doc.module(doc.order.front());
  return free_module(doc.ring, {0});
}

void check_expectations(Report& r, const ProblemDocument& doc, const std::string& command) {
  const json& t = doc.task;
  if (!t.contains("expect") || (t.contains("command") && t["command"] != command)) return;
  for (auto it = t["expect"].begin(); it != t["expect"].end(); ++it) {
    if (!r.results.contains(it.key())) {
      r.discrepancy(it.key(), it.value(), nullptr);
      continue;
    }
    if (r.results[it.key()] != it.value()) r.discrepancy(it.key(), it.value(), r.results[it.key()]);
  }
}

Report cmd_pushforward(const ProblemDocument& doc, const Options& o) {
  Report r;
  auto m = pick_module(doc, o.module);
  auto pieces = pushforward_pieces(m, o.q);
  auto f = pushforward(m, o.q);
  auto block = pushforward_matrix(m, o.q);
  bool free = f.relations().empty();
  json gdeg = json::array(), rdeg = json::array();
  for (const auto& d : block.generator_degrees) gdeg.push_back(degree_json(d));
  for (const auto& d : block.relation_degrees) rdeg.push_back(degree_json(d));
  r.results = {{"q", o.q},
               {"generators", f.num_generators()},
               {"relations", f.relations().size()},
               {"free", free},
               {"degree_classes", pieces.size()},
               {"module", module_json(f)},
               {"block_matrix", {{"generator_degrees", gdeg},
                                 {"relation_degrees", rdeg},
                                 {"matrix", matrix_json(m.ring().ambient(), block.matrix)}}}};
  r.text.push_back("F_* with q = " + std::to_string(o.q) + ": " + std::to_string(f.num_generators()) +
                   " generators, " + std::to_string(f.relations().size()) + " relations" + (free ? " (free)" : ""));
  r.text.push_back("Hilbert series " + f.hilbert_series().str());
  r.text.push_back("block matrix " + std::to_string(block.matrix.size()) + " x " +
                   std::to_string(block.generator_degrees.size()) + ":");
  r.text.push_back(dense_text(m.ring().ambient(), block.matrix));
  return r;
}

Report cmd_paracanonical(const ProblemDocument& doc, const Options& o) {
  Report r;
  auto m = pick_module(doc, o.module);
  auto w = para_canonical(m, o.index);
  r.results = {{"index", o.index}, {"zero", w.is_zero()}, {"module", module_json(w)}};
  if (!w.is_zero()) {
    r.results["dimension"] = dimension(w);
    r.results["depth"] = depth(w);
  }
  r.text.push_back("omega^" + std::to_string(o.index) + ": " +
                   (w.is_zero() ? std::string("zero") : "Hilbert series " + w.hilbert_series().str()));
  return r;
}

json certificate_json(const McmCertificate& c) {
  return {{"module", module_json(c.module)}, {"depth", c.depth}, {"h", c.h}, {"betti", c.betti}};
}

Report cmd_mcm(const ProblemDocument& doc, const Options& o) {
  Report r;
  auto c = mcm_from_module(pick_module(doc, o.module));
  r.results = certificate_json(c);
  r.results["depth"] = c.depth;
  r.text.push_back("omega^0 has depth " + std::to_string(c.depth));
  r.text.push_back(c.betti);
  return r;
}

Report cmd_decompose(const ProblemDocument& doc, const Options& o) {
  Report r;
  auto d = decompose(pick_module(doc, o.module), o.seed);
  r.results = decomposition_json(d);
  r.results["classes_count"] = d.classes.size();
  if (!d.complete) r.status = "undecided";
  r.text.push_back(std::to_string(d.summands.size()) + " summands in " + std::to_string(d.classes.size()) +
                   " classes, free rank " + std::to_string(d.free_rank()) + (d.verified ? ", verified" : "") +
                   (d.complete ? "" : ", UNDECIDED"));
  for (const auto& c : d.classes)
    r.text.push_back("  " + std::to_string(c.multiplicity()) + " x [" +
                     std::to_string(c.representative.num_generators()) + " generators, Hilbert series " +
                     c.representative.hilbert_series().str() + "]");
  return r;
}

Report summand_report(const SummandTest& s, const GradedModule& q, const GradedModule& m) {
  Report r;
  r.results = {{"answer", s.is_summand}, {"decided", s.decided}};
  if (s.is_summand) {
    r.results["shift"] = degree_json(s.shift);
    r.results["summand"] = module_json(q.shifted(s.shift));
    r.results["target"] = module_json(m);
    r.results["phi"] = matrix_json(m.ring().ambient(), s.phi);
    r.results["psi"] = matrix_json(m.ring().ambient(), s.psi);
  }
  if (!s.decided) r.status = "undecided";
  r.text.push_back(std::string(s.is_summand ? "direct summand" : "not a direct summand") +
                   (s.is_summand ? " (shift " + s.shift.str() + ")" : "") + (s.decided ? "" : ", UNDECIDED"));
  return r;
}

Report cmd_summand(const ProblemDocument& doc, const Options& o) {
  auto q = pick_module(doc, o.module);
  if (o.target.empty()) throw DocumentError("summand needs --in <module>");
  auto m = doc.module(o.target);
  return summand_report(is_direct_summand(q, m, o.seed), q, m);
}

Report cmd_fsplit(const ProblemDocument& doc, const Options& o) {
  auto q = pick_module(doc, o.module);
  auto f = pushforward(q, o.q);
  auto r = summand_report(is_direct_summand(q, f, o.seed), q, f);
  r.results["q"] = o.q;
  r.text.front() = std::string(r.results["answer"].get<bool>() ? "F-split" : "not F-split") + " for q = " +
                   std::to_string(o.q);
  return r;
}

Report cmd_fedder(const ProblemDocument& doc, const Options&) {
  Report r;
  bool pure = fedder_check(*doc.ring);
  r.results = {{"answer", pure}};
  r.text.push_back(pure ? "F-pure" : "not F-pure");
  return r;
}

json net_json(const FNet& net) {
  json classes = json::array();
  for (const auto& c : net.classes) classes.push_back(module_json(c));
  json trans = json::array();
  for (std::size_t i = 0; i < net.transitions.size(); ++i) {
    json row = json::array();
    for (const auto& [k, mult] : net.transitions[i]) row.push_back({{"class", k}, {"multiplicity", mult}});
    trans.push_back({{"class", i}, {"expanded", bool(net.expanded[i])}, {"pushforward", row}});
  }
  return {{"q", net.q},       {"class_count", net.classes.size()}, {"closed", net.closed},
          {"complete", net.complete}, {"steps", net.steps},         {"classes", classes},
          {"transitions", trans}};
}

Report cmd_net(const ProblemDocument& doc, const Options& o) {
  Report r;
  auto net = net_explore(pick_module(doc, o.module), o.max_steps, o.q, o.seed, o.threads);
  r.results = net_json(net);
  if (!net.complete) r.status = "undecided";
  r.text.push_back(std::to_string(net.classes.size()) + " indecomposable classes after " + std::to_string(net.steps) +
                   " steps, " + (net.closed ? "closed" : "budget exhausted (partial net)"));
  for (std::size_t i = 0; i < net.classes.size(); ++i) {
    std::string line = "  [" + std::to_string(i) + "] Hilbert series " + net.classes[i].hilbert_series().str();
    if (net.expanded[i]) {
      line += "  F_* ->";
      for (const auto& [k, mult] : net.transitions[i]) line += " " + std::to_string(mult) + "x[" + std::to_string(k) + "]";
    }
    r.text.push_back(line);
  }
  return r;
}

Report cmd_mcm_search(const ProblemDocument& doc, const Options& o) {
  Report r;
  auto s = mcm_search(doc.ring, o.max_steps, o.seed, o.threads);
  r.results = {{"found", s.found}, {"route", s.route}, {"min_h", s.min_h}, {"h_values", s.h_values}};
  if (s.certificate) r.results["certificate"] = certificate_json(*s.certificate);
  if (s.route == "net") r.results["census"] = net_json(s.net);
  r.text.push_back(s.found ? "MCM module found via " + s.route + " route, depth " + std::to_string(s.certificate->depth)
                           : "no h = 0 module within budget; minimal h = " + std::to_string(s.min_h));
  return r;
}

Report cmd_invariants(const ProblemDocument& doc, const Options& o) {
  Report r;
  auto m = pick_module(doc, o.module);
  r.results = {{"module", module_json(m)}, {"zero", m.is_zero()}};
  if (!m.is_zero()) {
    auto res = free_resolution(m);
    r.results["dimension"] = dimension(m);
    r.results["depth"] = depth(m);
    r.results["projective_dimension"] = projective_dimension(m);
    r.results["betti"] = res.betti_table();
    r.results["lambda0"] = lambda0(m);
    if (dimension(m) == m.ring().dimension()) r.results["h"] = h_invariant(m);
    r.text.push_back("dimension " + std::to_string(dimension(m)) + ", depth " + std::to_string(depth(m)));
    r.text.push_back(res.betti_table());
  } else {
    r.text.push_back("zero module");
  }
  return r;
}

void emit(const Report& r, const Options& o, const json* document, std::ostream& out) {
  if (o.json) {
    json j = {{"command", r.command}, {"status", r.status}};
    j["flags"] = {{"module", o.module}, {"in", o.target}, {"q", o.q}, {"index", o.index}, {"max_steps", o.max_steps},
                  {"seed", o.seed}, {"threads", o.threads}, {"budget_ms", o.budget_ms}};
    if (document) j["document"] = *document;
    j["results"] = r.results;
    if (!r.discrepancies.empty()) j["discrepancies"] = r.discrepancies;
    out << j.dump(2) << "\n";
    return;
  }
  out << r.command << ": " << r.status << "\n";
  for (const auto& line : r.text) out << line << "\n";
  for (const auto& d : r.discrepancies)
    out << "DISCREPANCY " << d["item"].get<std::string>() << ": expected " << d["expected"].dump() << ", computed "
        << d["computed"].dump() << "\n";
}

// Runs fn under the time budget; returns nullopt-equivalent via `timed_out`.
Report with_budget(const std::function<Report()>& fn, std::int64_t budget_ms, bool& timed_out) {
  timed_out = false;
  if (budget_ms <= 0) return fn();
  struct Shared {
    std::mutex mu;
    std::condition_variable cv;
    bool done = false;
    Report report;
    std::exception_ptr error;
  };
  auto sh = std::make_shared<Shared>();
  std::thread worker([sh, fn] {
    Report r;
    std::exception_ptr e;
    try {
      r = fn();
    } catch (...) {
      e = std::current_exception();
    }
    std::lock_guard lock(sh->mu);
    sh->report = std::move(r);
    sh->error = e;
    sh->done = true;
    sh->cv.notify_all();
  });
  std::unique_lock lock(sh->mu);
  if (!sh->cv.wait_for(lock, std::chrono::milliseconds(budget_ms), [&] { return sh->done; })) {
    worker.detach();
    timed_out = true;
    return {};
  }
  lock.unlock();
  worker.join();
  if (sh->error) std::rethrow_exception(sh->error);
  return sh->report;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frobenius pushforwards, decompositions and para-canonical modules over F_p graded rings"};
  app.name("fpush");
  app.require_subcommand(1);
  Options opts;

  const std::map<std::string, std::pair<std::string, Command>> commands{
      {"pushforward", {"F_* of a module, minimally presented", cmd_pushforward}},
      {"paracanonical", {"para-canonical module omega^i (--index)", cmd_paracanonical}},
      {"mcm", {"omega^0 with a depth certificate", cmd_mcm}},
      {"decompose", {"Krull-Schmidt decomposition with split maps", cmd_decompose}},
      {"summand", {"direct-summand test of --module in --in", cmd_summand}},
      {"fsplit", {"whether the module is a summand of its pushforward", cmd_fsplit}},
      {"fedder", {"Fedder's criterion for a hypersurface", cmd_fedder}},
      {"net-explore", {"F-net generated by a module", cmd_net}},
      {"mcm-search", {"search for an MCM module", cmd_mcm_search}},
      {"invariants", {"dimension, depth, Betti table, h", cmd_invariants}},
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--q", opts.q, "Frobenius power q = p^e");
    sub->add_option("--index", opts.index, "para-canonical index i");
    sub->add_option("--max-steps", opts.max_steps, "net exploration budget");
    sub->add_option("--seed", opts.seed, "random seed");
    sub->add_option("--threads", opts.threads, "worker threads");
    sub->add_flag("--json", opts.json, "JSON report");
    sub->add_option("--budget-ms", opts.budget_ms, "wall-clock budget; exceeding it reports undecided");
  };
  for (const auto& [name, entry] : commands) {
    auto* sub = app.add_subcommand(name, entry.first);
    sub->add_option("document", opts.document, "problem document (JSON)")->required();
    sub->add_option("--module", opts.module, "module name in the document");
    if (name == "summand") sub->add_option("--in", opts.target, "module to split");
    add_common(sub);
  }
  auto* suite = app.add_subcommand("example-suite", "regression over the worked examples");
  add_common(suite);
  auto* task = app.add_subcommand("run", "the task block of a document");
  task->add_option("document", opts.document, "problem document (JSON)")->required();
  task->add_option("--module", opts.module, "module name in the document");
  add_common(task);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  const auto start = std::chrono::steady_clock::now();
  Report report;
  std::optional<ProblemDocument> doc;
  std::string command;
  try {
    bool timed_out = false;
    if (suite->parsed()) {
      command = "example-suite";
      report = with_budget([o = opts] { return example_suite(o); }, opts.budget_ms, timed_out);
    } else {
      for (const auto& [name, entry] : commands)
        if (app.got_subcommand(name)) command = name;
      doc = load_document(opts.document);
      if (task->parsed()) {
        if (!doc->task.contains("command") || !doc->task["command"].is_string())
          throw DocumentError("task.command: expected a subcommand name");
        command = doc->task["command"].get<std::string>();
        if (!commands.count(command)) throw DocumentError("task.command: unknown command '" + command + "'");
      }
      opts = with_task(opts, *doc, command);
      const Command& fn = commands.at(command).second;
      ProblemDocument d = *doc;
      Options o = opts;
      report = with_budget([d, o, fn] { return fn(d, o); }, opts.budget_ms, timed_out);
      if (!timed_out) check_expectations(report, *doc, command);
    }
    if (timed_out) {
      report = Report{};
      report.status = "undecided";
      report.results = {{"reason", "budget exhausted"}, {"budget_ms", opts.budget_ms}};
      report.text.push_back("budget of " + std::to_string(opts.budget_ms) + " ms exhausted");
    }
  } catch (const TheoremViolation& e) {
    report = Report{};
    report.discrepancy("theorem", "depth bound", e.what());
    report.results = {{"bundle", e.bundle()}};
    report.text.push_back(e.what());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    if (opts.json) out << json{{"command", command}, {"status", "error"}, {"message", e.what()}}.dump(2) << "\n";
    return kError;
  }
  report.command = command;
  emit(report, opts, doc ? &doc->source : nullptr, out);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  err << "elapsed_ms: " << ms.count() << "\n";
  return report.exit_code();
}

}  // namespace fpush::cli
