#include <gspline/cli/commands.hpp>

#include <gspline/gspline.hpp>
#include <gspline/io/documents.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <optional>

namespace gspline::cli {

namespace {

using io::json;

struct Options {
  std::string graph;
  std::vector<std::string> splines;
  std::size_t vertex = 0;  // 1-based; 0 = unset
  std::size_t to = 0;      // 1-based; 0 = unset
  std::optional<std::size_t> selection;
  std::string format = "json";
  std::size_t max_trails = default_trail_cap;
  bool complete = false;
  std::string out_dir;
};

class Command {
 public:
  Command(const Options& opt, std::ostream& out, std::ostream& err) : opt_(opt), out_(out), err_(err) {}

  int dispatch(const std::string& name) {
    const io::GraphDocument doc = io::parse_graph_document(io::read_json_file(opt_.graph));
    if (doc.domain == "int") return run<Integer>(name, doc);
    return run<Polynomial>(name, doc);
  }

 private:
  bool text() const { return opt_.format == "text"; }

  void emit(const json& j) { out_ << j.dump(2) << '\n'; }

  template <GcdDomain R>
  int run(const std::string& name, const io::GraphDocument& doc) {
    const LabeledGraph<R> g = io::build_graph<R>(doc);
    if (name == "verify") return verify(g);
    if (name == "invariants") return invariants(g);
    if (name == "trails") return trails(g);
    if (name == "selections") return selections(g);
    if (name == "construct") return construct(g);
    if (name == "check-basis") return check_basis_command(g);
    if (name == "flowup") {
      if constexpr (std::is_same_v<R, Integer>) {
        return flowup(g);
      } else {
        err_ << "error: flowup needs an integer graph; flow-up bases are only constructed over the integers\n";
        return kInputError;
      }
    }
    throw precondition_error("unknown subcommand " + name);
  }

  template <GcdDomain R>
  std::size_t vertex_index(const LabeledGraph<R>& g, std::size_t one_based, const char* flag) const {
    if (one_based == 0) throw precondition_error(std::string(flag) + " is required");
    if (one_based > g.vertex_count())
      throw precondition_error(std::string(flag) + " " + std::to_string(one_based) + " is out of range 1.." +
                               std::to_string(g.vertex_count()));
    return one_based - 1;
  }

  template <GcdDomain R>
  json edge_json(const LabeledGraph<R>& g, std::size_t k) const {
    const auto& e = g.edge(k);
    return json{{"u", g.name(e.u)}, {"v", g.name(e.v)}, {"label", e.label.str()}};
  }

  template <GcdDomain R>
  std::vector<Spline<R>> read_splines(const LabeledGraph<R>& g) const {
    std::vector<Spline<R>> out;
    for (const auto& path : opt_.splines) {
      Spline<R> f = io::load_spline<R>(io::read_json_file(path));
      if (static_cast<std::size_t>(f.size()) != g.vertex_count())
        throw input_error("'" + path + "' has " + std::to_string(f.size()) + " values for " +
                          std::to_string(g.vertex_count()) + " vertices");
      out.push_back(std::move(f));
    }
    return out;
  }

  template <GcdDomain R>
  int verify(const LabeledGraph<R>& g) {
    if (opt_.splines.size() != 1) throw precondition_error("verify takes exactly one --spline");
    const Spline<R> f = read_splines(g).front();
    json edges = json::array();
    std::optional<std::size_t> first_bad;
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
      const auto& e = g.edge(k);
      const R diff = f(Eigen::Index(e.u)) - f(Eigen::Index(e.v));
      const bool ok = divides(e.label, diff);
      if (!ok && !first_bad) first_bad = k;
      json row = edge_json(g, k);
      row["difference"] = diff.str();
      row["ok"] = ok;
      edges.push_back(row);
    }
    if (text()) {
      for (const auto& row : edges)
        out_ << "edge " << row["u"].get<std::string>() << row["v"].get<std::string>() << " label "
             << row["label"].get<std::string>() << " difference " << row["difference"].get<std::string>() << ": "
             << (row["ok"].get<bool>() ? "OK" : "FAIL") << '\n';
      if (first_bad)
        out_ << "not a spline: edge " << g.name(g.edge(*first_bad).u) << g.name(g.edge(*first_bad).v) << '\n';
      else
        out_ << "spline\n";
    } else {
      json report{{"is_spline", !first_bad}, {"edges", edges}};
      report["violation"] = first_bad ? edges[*first_bad] : json(nullptr);
      emit(report);
    }
    return first_bad ? kNegative : kSuccess;
  }

  template <GcdDomain R>
  int invariants(const LabeledGraph<R>& g) {
    const auto moduli = flowup_moduli(g, opt_.max_trails);
    R q(1);
    for (const auto& m : moduli) q = q * m;
    q = canonical_associate(q);
    if (text()) {
      for (std::size_t i = 0; i < moduli.size(); ++i) out_ << "L" << i + 1 << " = " << moduli[i] << '\n';
      out_ << "Q_G = " << q << '\n';
    } else {
      json ms = json::array();
      for (const auto& m : moduli) ms.push_back(m.str());
      emit(json{{"moduli", ms}, {"q_g", q.str()}});
    }
    return kSuccess;
  }

  template <GcdDomain R>
  json trail_json(const LabeledGraph<R>& g, const Trail<R>& t) const {
    json edges = json::array();
    json labels = json::array();
    for (std::size_t k : t.edges) {
      edges.push_back(edge_json(g, k));
      labels.push_back(g.edge(k).label.str());
    }
    return json{{"start", g.name(t.start)}, {"end", g.name(t.end)}, {"labels", labels}, {"edges", edges},
                {"gcd", t.gcd.str()}};
  }

  template <GcdDomain R>
  int trails(const LabeledGraph<R>& g) {
    const std::size_t i = vertex_index(g, opt_.vertex, "--vertex");
    std::vector<Trail<R>> ts;
    json report{{"vertex", g.name(i)}};
    if (opt_.to != 0) {
      const std::size_t j = vertex_index(g, opt_.to, "--to");
      ts = enumerate_trails(g, i, j, opt_.max_trails);
      report["to"] = g.name(j);
    } else {
      ts = zero_trails(g, i, opt_.max_trails);
    }
    if (text()) {
      for (const auto& t : ts) {
        out_ << '<';
        for (std::size_t k = 0; k < t.edges.size(); ++k) out_ << (k ? ", " : "") << g.edge(t.edges[k]).label;
        out_ << ">  " << g.name(t.start) << " -> " << g.name(t.end) << "  gcd " << t.gcd << '\n';
      }
    } else {
      json list = json::array();
      for (const auto& t : ts) list.push_back(trail_json(g, t));
      report["trails"] = list;
      emit(report);
    }
    return kSuccess;
  }

  template <GcdDomain R>
  json selection_json(const LabeledGraph<R>& g, const FactorSets<R>& d, const Selection<R>& a,
                      std::size_t id) const {
    json assignment = json::array();
    for (std::size_t t = 0; t < a.chosen.size(); ++t) {
      json row{{"trail", t}, {"edge", edge_json(g, a.chosen[t])}, {"factor", a.factors[t].str()}};
      row["trail_labels"] = trail_json(g, d.sets[t].trail)["labels"];
      assignment.push_back(row);
    }
    json labels = json::array();
    json edges = json::array();
    for (std::size_t k : a.edges) {
      labels.push_back(g.edge(k).label.str());
      edges.push_back(edge_json(g, k));
    }
    return json{{"id", id},           {"label_set", labels},       {"edges", edges},
                {"assignment", assignment}, {"product", a.product.str()}, {"value", a.value().str()}};
  }

  template <GcdDomain R>
  int selections(const LabeledGraph<R>& input) {
    const LabeledGraph<R> g = opt_.complete ? completion(input) : input;
    const std::size_t i = vertex_index(g, opt_.vertex, "--vertex");
    const FactorSets<R> d = factor_sets(g, i, opt_.max_trails);
    const auto list = minimal_selections(d, g.edge_count());
    if (text()) {
      out_ << "vertex " << g.name(i) << ", modulus " << d.modulus << ", " << d.sets.size() << " long zero trails\n";
      for (std::size_t id = 0; id < list.size(); ++id) {
        out_ << "[" << id << "] {";
        for (std::size_t k = 0; k < list[id].edges.size(); ++k)
          out_ << (k ? ", " : "") << g.edge(list[id].edges[k]).label;
        out_ << "}  product " << list[id].product << "  value " << list[id].value() << '\n';
      }
    } else {
      json sel = json::array();
      for (std::size_t id = 0; id < list.size(); ++id) sel.push_back(selection_json(g, d, list[id], id));
      json trails = json::array();
      for (const auto& s : d.sets) {
        json factors = json::array();
        for (const auto& f : s.factors) factors.push_back(f.str());
        json t = trail_json(g, s.trail);
        t["factors"] = factors;
        trails.push_back(t);
      }
      emit(json{{"vertex", g.name(i)}, {"modulus", d.modulus.str()}, {"trails", trails}, {"selections", sel}});
    }
    return kSuccess;
  }

  template <GcdDomain R>
  int construct(const LabeledGraph<R>& input) {
    LabeledGraph<R> k = input;
    if (!input.is_complete()) {
      err_ << "note: graph is not complete; working on its completion (missing edges labelled 1)\n";
      k = completion(input);
    }
    const std::size_t i = vertex_index(k, opt_.vertex, "--vertex");
    Spline<R> f;
    if (i + 1 == k.vertex_count()) {
      f = top_spline(k, opt_.max_trails);
    } else {
      if (!opt_.selection) throw precondition_error("--selection is required for interior vertices");
      const FactorSets<R> d = factor_sets(k, i, opt_.max_trails);
      const auto list = minimal_selections(d, k.edge_count());
      if (*opt_.selection >= list.size())
        throw precondition_error("selection id " + std::to_string(*opt_.selection) + " is out of range 0.." +
                                 std::to_string(list.size() - 1));
      f = selection_spline(k, d, list[*opt_.selection]);
    }
    if (!is_spline(input, f)) throw consistency_error("constructed vector is not a spline on the input graph");
    if (text()) {
      for (Eigen::Index v = 0; v < f.size(); ++v) out_ << (v ? " " : "") << f(v);
      out_ << '\n';
    } else {
      emit(io::spline_to_json(f));
    }
    return kSuccess;
  }

  template <GcdDomain R>
  int check_basis_command(const LabeledGraph<R>& g) {
    const auto candidates = read_splines(g);
    const BasisVerdict<R> v = check_basis(g, std::span<const Spline<R>>(candidates));
    if (text()) {
      out_ << "determinant " << v.determinant << "\nQ_G " << v.q << "\nquotient "
           << (v.quotient ? v.quotient->str() : std::string("none")) << '\n'
           << (v.is_basis ? "basis" : "not a basis") << '\n';
    } else {
      emit(json{{"determinant", v.determinant.str()},
                {"q_g", v.q.str()},
                {"quotient", v.quotient ? json(v.quotient->str()) : json(nullptr)},
                {"is_basis", v.is_basis}});
    }
    return v.is_basis ? kSuccess : kNegative;
  }

  int flowup(const LabeledGraph<Integer>& g) {
    const auto basis = flowup_basis(g);
    json diagonal = json::array();
    json splines = json::array();
    for (std::size_t k = 0; k < basis.size(); ++k) {
      diagonal.push_back(basis[k](Eigen::Index(k)).str());
      splines.push_back(io::spline_to_json(basis[k]));
    }
    if (!opt_.out_dir.empty()) {
      std::filesystem::create_directories(opt_.out_dir);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        const auto path = std::filesystem::path(opt_.out_dir) / ("F" + std::to_string(k + 1) + ".json");
        std::ofstream file(path);
        if (!file) throw input_error("cannot write '" + path.string() + "'");
        file << splines[k].dump(2) << '\n';
      }
    }
    if (text()) {
      out_ << "diagonal";
      for (const auto& d : diagonal) out_ << ' ' << d.get<std::string>();
      out_ << '\n';
      for (const auto& f : basis) {
        for (Eigen::Index v = 0; v < f.size(); ++v) out_ << (v ? " " : "") << f(v);
        out_ << '\n';
      }
    } else {
      emit(json{{"diagonal", diagonal}, {"splines", splines}});
    }
    return kSuccess;
  }

  const Options& opt_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized splines on edge-labelled graphs: invariants, constructions and basis checks"};
  app.name("gspline");
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&opt](CLI::App* sub) {
    sub->add_option("--graph", opt.graph, "graph document (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--max-trails", opt.max_trails, "trail enumeration cap")->check(CLI::PositiveNumber);
  };

  auto* verify = app.add_subcommand("verify", "check the spline condition on every edge");
  add_common(verify);
  verify->add_option("--spline", opt.splines, "spline document")->required()->check(CLI::ExistingFile);

  auto* invariants = app.add_subcommand("invariants", "flow-up moduli L_1..L_n and Q_G");
  add_common(invariants);

  auto* trails = app.add_subcommand("trails", "zero trails of a vertex, or all trails between two vertices");
  add_common(trails);
  trails->add_option("--vertex", opt.vertex, "1-based vertex index")->required();
  trails->add_option("--to", opt.to, "1-based target vertex; lists every trail instead of zero trails");

  auto* selections = app.add_subcommand("selections", "minimal selections of an interior vertex");
  add_common(selections);
  selections->add_option("--vertex", opt.vertex, "1-based vertex index")->required();
  selections->add_flag("--complete", opt.complete, "list selections of the completed graph (as construct uses)");

  auto* construct = app.add_subcommand("construct", "spline of a minimal selection on the completed graph");
  add_common(construct);
  construct->add_option("--vertex", opt.vertex, "1-based vertex index")->required();
  construct->add_option("--selection", opt.selection, "selection id from `selections --complete`");

  auto* check = app.add_subcommand("check-basis", "determinantal basis criterion for n candidate splines");
  add_common(check);
  check->add_option("--spline", opt.splines, "candidate spline documents, in order")->required()->check(
      CLI::ExistingFile);

  auto* flowup = app.add_subcommand("flowup", "flow-up basis over the integers");
  add_common(flowup);
  flowup->add_option("--out-dir", opt.out_dir, "also write F1.json..Fn.json here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    return Command(opt, out, err).dispatch(name);
  } catch (const consistency_error& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace gspline::cli
