#include "tfc/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "tfc/coloring.hpp"
#include "tfc/corpus.hpp"
#include "tfc/decompose.hpp"
#include "tfc/embedding.hpp"
#include "tfc/families.hpp"
#include "tfc/feq.hpp"
#include "tfc/winding.hpp"

namespace tfc {

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

EmbeddedGraph load(const std::string& path) {
  try {
    return parse_emg(read_file(path));
  } catch (const ParseError& e) {
    throw Error(path + ": " + e.what());
  }
}

std::string join_cycle(const Walk& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "-" : "") + std::to_string(w[i]);
  return out;
}

void print_verdict(const ExtensionVerdict& v, std::ostream& out) {
  if (v.extends()) {
    out << "extends\n";
    const Coloring& c = *v.witness;
    for (int u = 0; u < c.size(); ++u) out << "color " << u << ' ' << static_cast<int>(c[u]) << '\n';
  } else {
    out << "fails " << to_string(*v.violated) << '\n';
  }
}

bool cuffs_fully_colored(const EmbeddedGraph& g, const Coloring& psi) {
  for (const Walk& c : g.cuffs) {
    for (int v : c) {
      if (!psi.assigned(v)) return false;
    }
  }
  return is_proper(underlying_graph(g), psi);
}

// Uses a structural decision rule when g satisfies its hypotheses and the
// oracle otherwise.
ExtensionVerdict decide(const EmbeddedGraph& g, const Coloring& psi, const Budget& budget) {
  const bool structured = g.surface == Surface::Cylinder && is_quadrangulation(g) && cuffs_fully_colored(g, psi);
  if (structured && !homomorphism_precondition_failure(g) && is_wide_feq(g)) return decide_wide_feq(g, psi, budget);
  if (structured) {
    const FarRegime regime = far_regime(g);
    if (regime.equal_cuffs || regime.long_middle) return decide_far_quadrangulation(g, psi, budget);
  }
  return oracle_extend(g, psi, budget);
}

// Turns "--key value" / "--key=value" pairs into generator parameters.
std::map<std::string, std::string> gen_params(const std::vector<std::string>& args) {
  std::map<std::string, std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a.rfind("--", 0) != 0 || a.size() < 3) throw Error("unexpected argument '" + a + "'");
    std::string key = a.substr(2);
    std::string value;
    if (const auto eq = key.find('='); eq != std::string::npos) {
      value = key.substr(eq + 1);
      key = key.substr(0, eq);
    } else {
      if (i + 1 >= args.size()) throw Error("missing value for --" + key);
      value = args[++i];
    }
    out[key] = value;
  }
  return out;
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  f << text;
  if (!f) throw Error("cannot write " + path);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Precoloring extension tools for graphs on the disk and the cylinder", "tfc"};
  app.require_subcommand(1);

  std::string file;
  std::string output;
  std::string precoloring;
  std::string coloring;
  std::string family;
  std::string spec_file;
  int budget_vertices = Budget{}.decision_vertices;
  int budget_enumeration = Budget{}.enumeration_vertices;

  auto* gen = app.add_subcommand("gen", "Generate a named graph family");
  gen->add_option("family", family, "Family name")->required();
  gen->add_option("-o,--output", output, "Output file (default: stdout)");
  gen->allow_extras();

  auto* validate_cmd = app.add_subcommand("validate", "Check an EMG file");
  validate_cmd->add_option("file", file)->required();

  auto* wind = app.add_subcommand("wind", "Winding numbers of a total coloring");
  wind->add_option("file", file)->required();
  wind->add_option("--coloring", coloring, "Colors of vertices 0,1,2,... in order")->required();

  auto* feq = app.add_subcommand("feq", "Recognize forced extension quadrangulations");
  feq->add_option("file", file)->required();

  auto* hom = app.add_subcommand("hom", "Homomorphisms to the cuff-length cycle");
  hom->add_option("file", file)->required();

  auto* decide_cmd = app.add_subcommand("decide", "Decide extension of a cuff precoloring");
  auto* oracle = app.add_subcommand("oracle", "Decide extension by exhaustive search");
  for (auto* sub : {decide_cmd, oracle}) {
    sub->add_option("file", file)->required();
    sub->add_option("--precoloring", precoloring, "v:c,v:c,...");
    sub->add_option("--budget", budget_vertices, "Vertex limit for exhaustive search");
  }

  auto* critical = app.add_subcommand("critical", "Check criticality relative to the cuffs");
  critical->add_option("file", file)->required();
  critical->add_option("--budget", budget_enumeration, "Vertex limit for enumeration");

  auto* decompose_cmd = app.add_subcommand("decompose", "Split a cylinder quadrangulation into labelled pieces");
  decompose_cmd->add_option("file", file)->required();

  auto* corpus = app.add_subcommand("corpus", "Write a generated corpus with manifest");
  corpus->add_option("--spec", spec_file, "Corpus spec file (default: built-in)");
  corpus->add_option("-o,--output", output, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kError;
  }

  try {
    const Budget budget{budget_vertices, budget_enumeration};
    if (gen->parsed()) {
      const GenSpec spec{family, family, gen_params(gen->remaining())};
      write_output(output, serialize_emg(generate(spec)), out);
      return kYes;
    }
    if (corpus->parsed()) {
      const std::string text = spec_file.empty() ? default_corpus_spec() : read_file(spec_file);
      const auto entries = build_corpus(parse_corpus_spec(text));
      write_corpus(entries, output);
      out << "wrote " << entries.size() << " instances\n";
      return kYes;
    }

    const EmbeddedGraph g = load(file);
    if (validate_cmd->parsed()) {
      const auto problems = validate(g);
      if (problems.empty()) {
        out << "valid\n";
        return kYes;
      }
      for (const Violation& v : problems) out << "violation " << v.what << " at " << v.locus << '\n';
      return kError;
    }
    require_valid(g, file);

    if (wind->parsed()) {
      std::vector<Color> colors;
      std::stringstream ss(coloring);
      std::string item;
      while (std::getline(ss, item, ',')) {
        int c = 0;
        try {
          c = std::stoi(item);
        } catch (const std::logic_error&) {
          throw Error("malformed color '" + item + "'");
        }
        if (c < 1 || c > 3) throw Error("color out of range: " + item);
        colors.push_back(static_cast<Color>(c));
      }
      if (static_cast<int>(colors.size()) != g.vertex_count) throw Error("--coloring must list one color per vertex");
      const WindingReport report = full_coloring_winding_audit(g, Coloring(colors));
      for (std::size_t i = 0; i < report.omega.size(); ++i) out << "walk " << i << " omega " << report.omega[i] << '\n';
      out << "total " << report.total << '\n';
      return kYes;
    }
    if (feq->parsed()) {
      const FeqResult r = is_feq(g);
      if (!r) {
        out << "feq no reason=" << to_string(r.reason) << '\n';
        return kNo;
      }
      out << "feq yes chain=";
      for (std::size_t i = 0; i < r.witness->chain.size(); ++i) out << (i ? "|" : "") << join_cycle(r.witness->chain[i]);
      out << "\nwide " << (is_wide_feq(g) ? "yes" : "no") << '\n';
      return kYes;
    }
    if (hom->parsed()) {
      const HomomorphismPair h = build_homomorphisms(g);
      for (int v = 0; v < g.vertex_count; ++v) out << "theta " << v << ':' << h.theta(v) << '\n';
      if (h.theta_prime) {
        for (int v = 0; v < g.vertex_count; ++v) out << "theta' " << v << ':' << (*h.theta_prime)(v) << '\n';
      }
      return kYes;
    }
    if (decide_cmd->parsed() || oracle->parsed()) {
      const Coloring psi = parse_precoloring(precoloring, g.vertex_count);
      const ExtensionVerdict v = oracle->parsed() ? oracle_extend(g, psi, budget) : decide(g, psi, budget);
      print_verdict(v, out);
      return v.extends() ? kYes : kNo;
    }
    if (critical->parsed()) {
      const bool yes = is_critical(g, budget);
      out << "critical " << (yes ? "yes" : "no") << '\n';
      return yes ? kYes : kNo;
    }
    if (decompose_cmd->parsed()) {
      const Decomposition d = decompose(g);
      for (std::size_t i = 0; i < d.labels.size(); ++i) {
        out << "piece " << i + 1 << " cycle=" << join_cycle(d.cycles[i]) << '/' << join_cycle(d.cycles[i + 1])
            << " label=" << to_string(d.labels[i]) << " narrow=" << (d.narrow[i] ? "true" : "false") << '\n';
      }
      return kYes;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace tfc
