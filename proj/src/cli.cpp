#include "qalcove/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qalcove/characters.hpp"
#include "qalcove/correspondence.hpp"
#include "qalcove/crystal_graph.hpp"
#include "qalcove/errors.hpp"
#include "qalcove/perfectness.hpp"
#include "qalcove/serialization.hpp"

namespace qalcove::cli {

namespace {

struct Options {
  std::string type;
  int rank = 0;
  std::string weight;
  std::string node_order;
  std::string relabel;
  int jobs = 1;
  std::string format;
  std::string output;
  std::string chain_file;
  std::string node;
  int level = 1;
  std::string path;
  std::string source = "alcove";
  bool tensor = false;
  double budget = 2e7;
};

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size() && item.find_first_not_of(' ', used) != std::string::npos) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw InvalidInput("cannot parse " + what + " '" + text + "': expected comma-separated integers");
    }
  }
  return out;
}

class Session {
 public:
  Session(const Options& o, std::ostream& out) : o_(o), out_(out) {
    if (o.type.size() != 1) throw InvalidInput("--type must be one of A,B,C,D,E,F,G");
    W_ = std::make_unique<WeylGroup>(RootDatum::build(static_cast<char>(std::toupper(o.type[0])), o.rank));
    const int r = W_->rank();
    relabel_.resize(r);
    for (int i = 0; i < r; ++i) relabel_[i] = i + 1;
    if (!o.relabel.empty()) {
      relabel_ = parse_int_list(o.relabel, "--relabel");
      std::vector<int> sorted = relabel_;
      std::sort(sorted.begin(), sorted.end());
      for (int i = 0; i < r; ++i)
        if (static_cast<int>(sorted.size()) != r || sorted[i] != i + 1)
          throw InvalidInput("--relabel must be a permutation of 1.." + std::to_string(r));
    }
  }

  const WeylGroup& W() const { return *W_; }
  const RootDatum& datum() const { return W_->datum(); }

  /// User node k is Bourbaki node relabel[k-1].
  int node(int user) const {
    if (user < 1 || user > W_->rank()) throw InvalidInput("node " + std::to_string(user) + " is out of range");
    return relabel_[user - 1];
  }

  Weight lambda() const {
    if (o_.weight.empty()) throw InvalidInput("--weight is required");
    const auto c = parse_int_list(o_.weight, "--weight");
    if (static_cast<int>(c.size()) != W_->rank())
      throw InvalidInput("--weight needs " + std::to_string(W_->rank()) + " coordinates, got " + std::to_string(c.size()));
    Weight mu(W_->rank());
    for (int k = 0; k < W_->rank(); ++k) {
      if (c[k] < 0) throw InvalidInput("--weight must be dominant (nonnegative coordinates)");
      mu[node(k + 1) - 1] = c[k];
    }
    return mu;
  }

  std::vector<int> node_order() const {
    if (o_.node_order.empty()) return {};
    std::vector<int> out;
    for (int k : parse_int_list(o_.node_order, "--node-order")) out.push_back(node(k));
    return out;
  }

  std::optional<int> node_option() const {
    if (o_.node.empty()) return std::nullopt;
    if (o_.node == "long" || o_.node == "short") {
      std::vector<int> hits;
      for (int i = 1; i <= W_->rank(); ++i)
        if (datum().is_long(datum().simple_root(i)) == (o_.node == "long")) hits.push_back(i);
      if (hits.size() != 1)
        throw InvalidInput("--node " + o_.node + " does not name a unique node of " + datum().name() + "; give a number");
      return hits.front();
    }
    const auto v = parse_int_list(o_.node, "--node");
    if (v.size() != 1) throw InvalidInput("--node takes one node");
    return node(v.front());
  }

  /// Rough cost |W| * (chain length + 1), refused above --budget.
  void guard(const Weight& lambda) const {
    long double m = 1;
    for (int a = 0; a < datum().num_positive_roots(); ++a) m += datum().pairing(a, lambda);
    const long double cost = static_cast<long double>(W_->order()) * m;
    if (cost > o_.budget)
      throw InvalidInput("estimated work |W|*m = " + std::to_string(static_cast<long long>(cost)) +
                         " exceeds the budget " + std::to_string(static_cast<long long>(o_.budget)) +
                         " (raise --budget to proceed)");
  }

  std::string format(const char* fallback) const { return o_.format.empty() ? fallback : o_.format; }

  void emit(const std::string& text) const {
    if (o_.output.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(o_.output);
    if (!file) throw InvalidInput("cannot open --output file " + o_.output);
    file << text;
  }
  void emit(const Json& j) const { emit(j.dump(2) + "\n"); }

 private:
  const Options& o_;
  std::ostream& out_;
  std::unique_ptr<WeylGroup> W_;
  std::vector<int> relabel_;
};

void require_format(const std::string& f, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (f == a) return;
  throw InvalidInput("unsupported --format " + f);
}

int cmd_roots(const Session& s) {
  const auto f = s.format("json");
  require_format(f, {"json", "text"});
  if (f == "json") {
    s.emit(roots_json(s.datum()));
    return kOk;
  }
  std::ostringstream os;
  const auto& d = s.datum();
  os << d.name() << ", |W| = " << s.W().order() << "\n";
  for (int a = 0; a < d.num_positive_roots(); ++a)
    os << format_root(d, {a, 1}) << (d.is_long(a) ? "  long" : "  short") << "\n";
  for (int i = 1; i <= d.rank(); ++i) os << "c_" << i << " = " << to_string(d.c_r(i)) << "\n";
  s.emit(os.str());
  return kOk;
}

LambdaChain chain_for(const Session& s, const Options& o, const Weight& lambda) {
  if (o.chain_file.empty()) return lex_chain(s.datum(), lambda, s.node_order());
  std::ifstream in(o.chain_file);
  if (!in) throw InvalidInput("cannot read --chain-file " + o.chain_file);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidInput("--chain-file is not valid JSON: " + std::string(ex.what()));
  }
  return user_chain(s.datum(), lambda, chain_entries_from_json(s.datum(), j));
}

int cmd_chain(const Session& s, const Options& o) {
  const Weight lambda = s.lambda();
  const auto chain = chain_for(s, o, lambda);
  const auto f = s.format("json");
  require_format(f, {"json", "text"});
  if (f == "json") {
    s.emit(chain_json(s.datum(), chain));
    return kOk;
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < chain.size(); ++i)
    os << i + 1 << ": (" << format_root(s.datum(), {chain.entries[i].root, 1}) << ", " << chain.entries[i].level << ")\n";
  s.emit(os.str());
  return kOk;
}

int cmd_admissible(const Session& s, const Options& o) {
  const Weight lambda = s.lambda();
  s.guard(lambda);
  AlcoveModel model(s.W(), chain_for(s, o, lambda));
  const auto all = model.enumerate(o.jobs);
  const auto f = s.format("json");
  require_format(f, {"json", "text"});
  if (f == "json") {
    Json list = Json::array();
    for (const auto& A : all) list.push_back(subset_json(model, A));
    s.emit(Json{{"lambda", weight_json(lambda)}, {"count", all.size()}, {"subsets", list}});
    return kOk;
  }
  std::ostringstream os;
  for (const auto& A : all) {
    os << "{";
    for (std::size_t h = 0; h < A.positions.size(); ++h) os << (h ? "," : "") << A.positions[h] + 1;
    os << "}  wt=" << format_weight(model.weight(A)) << "  height=" << model.height(A) << "\n";
  }
  os << all.size() << " admissible subsets\n";
  s.emit(os.str());
  return kOk;
}

int cmd_qls(const Session& s, const Options& o) {
  const Weight lambda = s.lambda();
  s.guard(lambda);
  QLSModel model(s.W(), lambda);
  const auto f = s.format("json");
  require_format(f, {"json", "text"});
  std::vector<QLSPath> paths;
  if (!o.path.empty()) {
    const QLSPath raw = parse_path(s.W(), o.path);
    paths.push_back(model.validate(raw.directions, raw.breaks));
  } else {
    paths = model.enumerate();
  }
  if (f == "json") {
    Json list = Json::array();
    for (const auto& eta : paths) list.push_back(path_json(model, eta));
    s.emit(Json{{"lambda", weight_json(lambda)}, {"count", paths.size()}, {"paths", list}});
    return kOk;
  }
  std::ostringstream os;
  for (const auto& eta : paths)
    os << format_path(s.W(), eta) << "  wt=" << format_weight(model.weight(eta)) << "  Deg=" << model.deg(eta) << "\n";
  if (o.path.empty()) os << paths.size() << " QLS paths\n";
  s.emit(os.str());
  return kOk;
}

int cmd_crystal(const Session& s, const Options& o) {
  const Weight lambda = s.lambda();
  s.guard(lambda);
  CrystalGraph g;
  if (o.tensor) {
    g = build_isomorphism_to_tensor(s.W(), lambda).target;
  } else {
    g = crystal_from_qls(QLSModel(s.W(), lambda));
  }
  const auto f = s.format("json");
  require_format(f, {"json", "dot", "text"});
  if (f == "json") s.emit(crystal_json(g));
  else if (f == "dot") s.emit(to_dot(g));
  else
    s.emit(std::to_string(g.size()) + " vertices, " + std::to_string(g.num_arrows()) + " arrows, " +
           (g.connected() ? "connected" : "not connected") + "\n");
  return kOk;
}

int cmd_character(const Session& s, const Options& o) {
  const Weight lambda = s.lambda();
  s.guard(lambda);
  GradedCharacter chi;
  if (o.source == "alcove") {
    chi = character_from_alcove(AlcoveModel(s.W(), chain_for(s, o, lambda)), o.jobs);
  } else if (o.source == "qls") {
    if (!o.chain_file.empty()) throw InvalidInput("--chain-file applies to --source alcove only");
    chi = character_from_qls(QLSModel(s.W(), lambda));
  } else if (o.source == "weyl") {
    chi = weyl_character(s.datum(), lambda);
  } else {
    throw InvalidInput("--source must be alcove, qls or weyl");
  }
  const auto dec = decompose(s.datum(), chi);
  const auto f = s.format("json");
  require_format(f, {"json", "text"});
  if (f == "json") {
    Json j = character_json(chi);
    j["decomposition"] = decomposition_json(dec);
    j["polynomial"] = format_decomposition(dec);
    s.emit(j);
  } else {
    s.emit(format_character(chi) + format_decomposition(dec) + "\n");
  }
  return kOk;
}

int cmd_verify_px(const Session& s, const Options& o) {
  const Weight lambda = s.lambda();
  s.guard(lambda);
  const auto rep = verify_p_equals_x(s.W(), lambda, o.jobs);
  const auto f = s.format("text");
  require_format(f, {"json", "text"});
  if (f == "json") {
    s.emit(px_json(rep));
  } else {
    std::ostringstream os;
    os << "X = " << format_decomposition(rep.decomposition) << "\n";
    auto line = [&](const char* what, bool ok) { os << (ok ? "PASS " : "FAIL ") << what << "\n"; };
    line("alcove sum = QLS sum", rep.alcove_equals_qls);
    line("q^0 layer = Weyl character", rep.bottom_layer_is_weyl);
    line("W-invariance", rep.weyl_invariant);
    line("q=1 factorization", rep.factorizes_at_q_one);
    for (const auto& msg : rep.failures) os << "  " << msg << "\n";
    s.emit(os.str());
  }
  return rep.ok() ? kOk : kVerificationFailed;
}

int cmd_verify_crystal(const Session& s, const Options& o) {
  const Weight lambda = s.lambda();
  s.guard(lambda);
  Correspondence corr(s.W(), lambda, s.node_order());
  std::vector<Report> reports;
  reports.push_back(corr.verify_bijection(o.jobs));
  reports.push_back(corr.verify_intertwining(o.jobs));
  reports.push_back(corr.verify_energy(o.jobs));
  std::vector<QLSPath> paths;
  const CrystalGraph g = crystal_from_qls(corr.qls(), &paths);
  Report axioms{"crystal axioms", g.size(), check_axioms(s.datum(), g)};
  if (!g.connected()) axioms.violations.push_back("QLS crystal graph is not connected");
  reports.push_back(axioms);
  reports.push_back(verify_degree_recursion(corr.qls(), paths));
  reports.push_back(verify_lusztig(corr.qls(), paths));
  reports.push_back(build_isomorphism_to_tensor(s.W(), lambda).report);
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.ok();
  const auto f = s.format("text");
  require_format(f, {"json", "text"});
  if (f == "json") {
    Json list = Json::array();
    for (const auto& r : reports) list.push_back(report_json(r));
    s.emit(Json{{"lambda", weight_json(lambda)},
                {"counts", {{"admissible", corr.subsets().size()}, {"qls", paths.size()}}},
                {"reports", list},
                {"ok", ok}});
  } else {
    std::ostringstream os;
    for (const auto& r : reports) {
      os << (r.ok() ? "PASS " : "FAIL ") << r.name << " (" << r.checked << " checked)\n";
      for (const auto& v : r.violations) os << "  " << v << "\n";
    }
    s.emit(os.str());
  }
  return ok ? kOk : kVerificationFailed;
}

int cmd_perfect(const Session& s, const Options& o) {
  std::vector<int> nodes;
  if (auto n = s.node_option()) nodes.push_back(*n);
  else
    for (int i = 1; i <= s.W().rank(); ++i) nodes.push_back(i);
  for (int i : nodes) s.guard(s.datum().fundamental_weight(i));
  std::vector<PerfectnessReport> reps;
  for (int i : nodes) reps.push_back(check_perfect(s.W(), i, o.level));
  const auto f = s.format("text");
  require_format(f, {"json", "text"});
  bool agree = true;
  for (const auto& r : reps) agree = agree && r.agrees_with_prediction();
  if (f == "json") {
    Json list = Json::array();
    for (const auto& r : reps) list.push_back(perfectness_json(s.datum(), r));
    s.emit(nodes.size() == 1 ? list[0] : list);
  } else {
    std::ostringstream os;
    for (const auto& r : reps) {
      if (nodes.size() > 1) os << "node " << r.node << " (c_r = " << to_string(r.c_r) << "): ";
      os << (r.perfect ? "perfect" : "not perfect") << ", level " << r.level;
      if (!r.agrees_with_prediction()) os << "  [differs from the c_r prediction]";
      os << "\n";
    }
    s.emit(os.str());
  }
  return agree ? kOk : kVerificationFailed;
}

int cmd_qbg(const Session& s, const Options& o) {
  NodeSet J;
  if (!o.weight.empty()) J = s.datum().stabilizer(s.lambda());
  QuantumBruhatGraph g(s.W(), J);
  const auto f = s.format("json");
  require_format(f, {"json", "dot"});
  if (f == "json") s.emit(qbg_json(g));
  else s.emit(to_dot(g));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Quantum alcove model and quantum LS paths: enumeration, bijection and P = X verification"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML/INI file with option values");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.add_option("--type", o.type, "Cartan type letter A-G");
  app.add_option("--rank", o.rank, "rank");
  app.add_option("--weight", o.weight, "dominant weight as comma-separated fundamental-weight coefficients");
  app.add_option("--node-order", o.node_order, "total order on the nodes for the lex chain, e.g. 2,1");
  app.add_option("--relabel", o.relabel, "user node k means Bourbaki node relabel[k], e.g. 2,1");
  app.add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", o.format, "json, text or dot");
  app.add_option("--output", o.output, "write output to this file");
  app.add_option("--chain-file", o.chain_file, "JSON lambda-chain (list of [root, level])");
  app.add_option("--node", o.node, "node number, or long/short");
  app.add_option("--level", o.level, "perfectness level");
  app.add_option("--path", o.path, "validate one QLS path, e.g. \"s1, e; 0, 1/2, 1\"");
  app.add_option("--source", o.source, "character source: alcove, qls or weyl");
  app.add_flag("--tensor", o.tensor, "crystal: build the tensor product of fundamental factors");
  app.add_option("--budget", o.budget, "refuse jobs with |W|*m above this");

  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {{"chain", "print the lex lambda-chain"},
                      {"admissible", "enumerate admissible subsets"},
                      {"qls", "enumerate or validate QLS paths"},
                      {"crystal", "build the crystal graph of QLS(lambda)"},
                      {"character", "graded character"},
                      {"verify-px", "verify P = X and print the graded decomposition"},
                      {"verify-crystal", "verify bijection, intertwining, energy and tensor isomorphism"},
                      {"perfect", "check perfectness of QLS(varpi_r)"},
                      {"roots", "root system data"},
                      {"qbg", "parabolic quantum Bruhat graph"}};
  for (const auto& sub : subs) app.add_subcommand(sub.name, sub.help);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return kUsageError;
  }

  try {
    Session session(o, out);
    const std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "chain") return cmd_chain(session, o);
    if (cmd == "admissible") return cmd_admissible(session, o);
    if (cmd == "qls") return cmd_qls(session, o);
    if (cmd == "crystal") return cmd_crystal(session, o);
    if (cmd == "character") return cmd_character(session, o);
    if (cmd == "verify-px") return cmd_verify_px(session, o);
    if (cmd == "verify-crystal") return cmd_verify_crystal(session, o);
    if (cmd == "perfect") return cmd_perfect(session, o);
    if (cmd == "roots") return cmd_roots(session);
    if (cmd == "qbg") return cmd_qbg(session, o);
    return kUsageError;
  } catch (const InvalidInput& ex) {
    err << "error: " << ex.what() << "\n";
    return kUsageError;
  } catch (const InternalError& ex) {
    err << "internal error: " << ex.what() << "\n";
    return kVerificationFailed;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace qalcove::cli
