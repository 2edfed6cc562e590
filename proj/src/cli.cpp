// SPDX-License-Identifier: Apache-2.0
#include "chlat/cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "chlat/classifier.hpp"
#include "chlat/completion.hpp"
#include "chlat/errors.hpp"
#include "chlat/families.hpp"
#include "chlat/lattice.hpp"
#include "chlat/pointfile.hpp"
#include "chlat/predicates.hpp"

namespace chlat {

using Json = nlohmann::ordered_json;

namespace {

// Thrown for inputs that ask for something the theory leaves open.
struct Undecided : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InfiniteLattice : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json point_json(const Point& p) {
  Json row = Json::array();
  for (const auto& c : p.coords()) row.push_back(to_string(c));
  return row;
}

Json points_json(const std::vector<Point>& pts) {
  Json out = Json::array();
  for (const auto& p : pts) out.push_back(point_json(p));
  return out;
}

Json spec_json(const FamilySpec& s) {
  Json params = Json::object();
  switch (s.tag) {
    case FamilyTag::L:
    case FamilyTag::T:
      params["n"] = s.n;
      break;
    case FamilyTag::S6:
      break;
    default:
      params["p"] = s.p;
      params["q"] = s.q;
  }
  return params;
}

Json verdict_json(const Verdict& v) {
  Json j;
  j["finite"] = v.finite;
  j["label"] = v.label ? Json(tag_name(v.label->tag)) : Json(nullptr);
  j["name"] = v.label ? Json(v.label->name()) : Json(nullptr);
  j["parameters"] = v.label ? spec_json(*v.label) : Json(nullptr);
  j["embedding"] = v.embedding ? Json(v.embedding->map) : Json(nullptr);
  if (v.witness) {
    Json w;
    w["kind"] = pattern_name(v.witness->kind);
    w["indices"] = v.witness->indices;
    w["derived"] = points_json(v.witness->derived);
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json diagram_json(const LatticeDiagram& D) {
  Json j;
  j["element_count"] = D.size();
  j["atomistic"] = is_atomistic(D);
  j["elements"] = D.elements;
  Json covers = Json::array();
  for (auto [lo, hi] : D.covers) covers.push_back({lo, hi});
  j["covers"] = std::move(covers);
  return j;
}

Point parse_point_arg(const std::string& text) {
  std::vector<Rational> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) coords.push_back(parse_rational(item));
  if (coords.empty()) throw ParseError("empty point \"" + text + "\"");
  return Point(std::move(coords));
}

struct Options {
  std::vector<std::string> inputs;
  std::size_t budget_points = Budget{}.max_points;
  std::size_t budget_rounds = Budget{}.max_rounds;
  std::string format = "json";
  std::string family;
  int p = 0;
  int q = 0;
  int n = 0;
  std::size_t k = 8;
  std::string c;
  std::string h = "1";
  std::string pattern;
  bool timing = false;
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  void run(const std::string& cmd) {
    const auto start = std::chrono::steady_clock::now();
    Json result;
    if (cmd == "complete") {
      result = complete_cmd();
    } else if (cmd == "classify") {
      result = classify_cmd();
    } else if (cmd == "lattice") {
      result = lattice_cmd();
      if (o_.format == "diagram") return;
    } else if (cmd == "gen") {
      out_ << write_point_file(realize(family_spec()));
      return;
    } else if (cmd == "equiv") {
      result = equiv_cmd();
    } else if (cmd == "catalog") {
      result = catalog_cmd();
    } else if (cmd == "count") {
      result = count_cmd();
    } else if (cmd == "cross") {
      result = cross_cmd();
    } else if (cmd == "v5demo") {
      result = v5demo_cmd();
    }
    Json report;
    report["command"] = cmd;
    report["input_digest"] = digest_;
    report["budget"] = budget_used_;
    if (o_.timing) {
      const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
      report["timing"] = {{"elapsed_ms", ms.count()}};
    } else {
      report["timing"] = nullptr;
    }
    report["result"] = std::move(result);
    out_ << report.dump(2) << "\n";
  }

 private:
  Configuration input(std::size_t i = 0) {
    if (o_.inputs.size() <= i) throw ParseError("missing --input");
    const std::string text = read_file(o_.inputs[i]);
    digests_.push_back(sha256_hex(text));
    digest_ = digests_.size() == 1 ? Json(digests_[0]) : Json(digests_);
    return parse_point_file(text);
  }

  Budget budget() {
    Budget b{o_.budget_points, o_.budget_rounds};
    b.validate();
    budget_used_ = {{"max_points", b.max_points}, {"max_rounds", b.max_rounds}};
    return b;
  }

  FamilySpec family_spec() const {
    if (o_.family.empty()) throw PreconditionError("--family is required");
    const FamilyTag tag = parse_tag(o_.family);
    FamilySpec s{tag, o_.n, o_.p, o_.q};
    s.validate();
    return s;
  }

  Json complete_cmd() {
    const Configuration X = input();
    const CompletionResult r = complete(X, budget());
    Json j;
    j["status"] = r.status == CompletionStatus::Complete ? "complete" : "budget_exceeded";
    j["original_count"] = X.size();
    j["added"] = points_json(r.added);
    j["total_count"] = r.points.size();
    j["rounds"] = r.rounds;
    Json certs = Json::array();
    for (const auto& c : r.certificates) certs.push_back(c.generators);
    j["certificates"] = std::move(certs);
    if (X.dim() <= 2) {
      j["family"] = verdict_json(recognize_family(X));
      j["finiteness"] = j["family"]["finite"].get<bool>() ? "finite" : "infinite";
    } else {
      j["family"] = nullptr;
      j["finiteness"] = r.status == CompletionStatus::Complete ? "finite" : "presumed_infinite";
    }
    return j;
  }

  Json classify_cmd() {
    const Configuration X = input();
    if (X.dim() > 2) throw Undecided("3D classification undecided");
    return verdict_json(recognize_family(X));
  }

  Json lattice_cmd() {
    const Configuration X = input();
    const Budget b = budget();
    if (X.dim() == 2 && !recognize_family(X).finite) {
      throw InfiniteLattice("the lattice of this configuration is infinite");
    }
    Configuration Y = X;
    std::vector<Point> added;
    if (X.dim() >= 2) {
      CompletionResult r = complete(X, b);
      if (r.status != CompletionStatus::Complete) {
        throw InfiniteLattice("completion exceeded its budget; the lattice is presumed infinite");
      }
      Y = std::move(r.points);
      added = std::move(r.added);
    }
    const LatticeDiagram D = enumerate_rlat(Y);
    if (o_.format == "diagram") {
      out_ << to_dot(D);
      return {};
    }
    Json j;
    j["added"] = points_json(added);
    j["total_count"] = Y.size();
    const Json diagram = diagram_json(D);
    for (const auto& [key, value] : diagram.items()) j[key] = value;
    return j;
  }

  Json equiv_cmd() {
    if (o_.inputs.size() != 2) throw ParseError("equiv needs exactly two --input files");
    const Configuration A = input(0);
    const Configuration B = input(1);
    const auto m = equivalent(A, B);
    Json j;
    j["equivalent"] = m.has_value();
    j["witness"] = m ? Json(m->map) : Json(nullptr);
    return j;
  }

  Json catalog_cmd() {
    if (o_.n < 1 || o_.n > 5) throw PreconditionError("catalog needs 1 <= n <= 5");
    Json entries = Json::array();
    for (const auto& e : catalog(o_.n)) {
      entries.push_back({{"name", e.name}, {"points", points_json(e.config.points())}});
    }
    Json j;
    j["n"] = o_.n;
    j["count"] = entries.size();
    j["entries"] = std::move(entries);
    return j;
  }

  Json count_cmd() {
    const Configuration X = input();
    if (o_.pattern.empty()) throw PreconditionError("--pattern is required");
    Configuration Z;
    if (std::filesystem::exists(o_.pattern)) {
      Z = parse_point_file(read_file(o_.pattern));
    } else {
      Z = catalog_entry(o_.pattern).config;
    }
    Json j;
    j["pattern"] = o_.pattern;
    j["pattern_size"] = Z.size();
    j["count"] = count_subconfigs(X, Z);
    return j;
  }

  Json cross_cmd() {
    const Configuration X = input();
    if (o_.c.empty()) throw PreconditionError("--c is required");
    const Point c = parse_point_arg(o_.c);
    const Rational h = parse_rational(o_.h);
    const Configuration Y = cross(X, c, h);
    const CompletionResult r = complete(Y, budget());
    Json j;
    j["c"] = point_json(c);
    j["h"] = to_string(h);
    j["points"] = points_json(Y.points());
    j["status"] = r.status == CompletionStatus::Complete ? "complete" : "budget_exceeded";
    j["added"] = points_json(r.added);
    Json bound = nullptr;
    if (X.dim() == 2 && r.status == CompletionStatus::Complete && completion_step(X).empty() &&
        recognize_family(X).finite) {
      const CrossBound cb = cross_bound_check(X, c);
      bound = {{"size_x", cb.size_x}, {"size_xc", cb.size_xc}, {"ok", cb.ok}};
    }
    j["bound"] = std::move(bound);
    return j;
  }

  Json v5demo_cmd() {
    V5Frame v{Point{0, 0}, Point{2, 0}, Point{4, 0}, Point{1, 2}, Point{2, 4}};
    if (!o_.inputs.empty()) {
      const Configuration X = input();
      if (X.size() != 5) throw PreconditionError("v5demo needs 5 points labelled a, b, c, d, e");
      v = V5Frame{X[0], X[1], X[2], X[3], X[4]};
    }
    const std::vector<V5Frame> steps = v5_descent(v, o_.k);
    Json frames = Json::array();
    bool chain = true;
    const Point* prev = &v.e;
    for (const auto& f : steps) {
      chain = chain && between(*prev, f.e, v.b);
      prev = &f.e;
      frames.push_back({{"d", point_json(f.d)}, {"e", point_json(f.e)}});
    }
    Json j;
    j["frame"] = points_json({v.a, v.b, v.c, v.d, v.e});
    j["k"] = o_.k;
    j["steps"] = std::move(frames);
    j["strict_chain_toward_b"] = chain;
    return j;
  }

  const Options& o_;
  std::ostream& out_;
  std::vector<std::string> digests_;
  Json digest_ = nullptr;
  Json budget_used_ = nullptr;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Convex-hull lattices of point configurations"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.add_flag("--timing", o.timing, "Report wall-clock time (breaks byte-identical output)");

  auto add_input = [&](CLI::App* sub) { sub->add_option("--input", o.inputs, "Point file")->required(); };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget-points", o.budget_points, "Maximum number of points");
    sub->add_option("--budget-rounds", o.budget_rounds, "Maximum number of rounds");
  };

  auto* complete_cmd = app.add_subcommand("complete", "Complete a configuration");
  add_input(complete_cmd);
  add_budget(complete_cmd);
  auto* classify_cmd = app.add_subcommand("classify", "Decide finite completability (planar)");
  add_input(classify_cmd);
  auto* lattice_cmd = app.add_subcommand("lattice", "Enumerate the lattice of the completion");
  add_input(lattice_cmd);
  add_budget(lattice_cmd);
  lattice_cmd->add_option("--format", o.format)->check(CLI::IsMember({"json", "diagram"}));
  auto* gen_cmd = app.add_subcommand("gen", "Print the canonical realization of a family");
  gen_cmd->add_option("--family", o.family)->required();
  gen_cmd->add_option("--n", o.n);
  gen_cmd->add_option("--p", o.p);
  gen_cmd->add_option("--q", o.q);
  auto* equiv_cmd = app.add_subcommand("equiv", "Test two configurations for equivalence");
  add_input(equiv_cmd);
  auto* catalog_cmd = app.add_subcommand("catalog", "List the planar classes of n points");
  catalog_cmd->add_option("--n", o.n)->required();
  auto* count_cmd = app.add_subcommand("count", "Count induced copies of a pattern");
  add_input(count_cmd);
  count_cmd->add_option("--pattern", o.pattern, "Catalog name or point file")->required();
  auto* cross_cmd = app.add_subcommand("cross", "Apply the cross operator");
  add_input(cross_cmd);
  add_budget(cross_cmd);
  cross_cmd->add_option("--c", o.c, "Comma-separated coordinates")->required();
  cross_cmd->add_option("--h", o.h, "Positive height");
  auto* v5_cmd = app.add_subcommand("v5demo", "Iterate the V5 descent");
  v5_cmd->add_option("--k", o.k);
  v5_cmd->add_option("--input", o.inputs, "Five points a, b, c, d, e");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    Runner(o, out).run(app.get_subcommands().front()->get_name());
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const Undecided& e) {
    err << e.what() << "\n";
    return kExitUndecided;
  } catch (const InfiniteLattice& e) {
    err << e.what() << "\n";
    return kExitInfiniteLattice;
  }
  return kExitOk;
}

}  // namespace chlat
