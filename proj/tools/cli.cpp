#include "cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "orthograph/classify.hpp"
#include "orthograph/graph.hpp"
#include "orthograph/ortho.hpp"
#include "orthograph/pathfinder.hpp"
#include "orthograph/serialize.hpp"
#include "verify.hpp"

namespace orthograph::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

FieldCtx parse_field(const std::string& spec) {
  if (spec == "rational" || spec == "Q") return FieldCtx::rationals();
  std::uint64_t p = 0;
  std::istringstream in(spec);
  if (!(in >> p) || !in.eof()) throw UsageError("--field expects a prime or 'rational', got '" + spec + "'");
  return FieldCtx::prime(p);
}

Algebra parse_algebra(const std::string& name) {
  if (name == "tn") return Algebra::Tn;
  if (name == "mn") return Algebra::Mn;
  throw UsageError("--algebra expects tn or mn, got '" + name + "'");
}

bool json_output(const CliConfig& cfg) {
  if (cfg.format == "json") return true;
  if (cfg.format == "text" || cfg.format == "dot") return false;
  throw UsageError("--format expects text, json or dot, got '" + cfg.format + "'");
}

std::vector<Mat> load_matrices(const CliConfig& cfg, const FieldCtx& ctx, const std::vector<std::string>& given,
                               std::size_t expected) {
  std::vector<std::string> texts = given;
  if (!cfg.file.empty()) {
    std::ifstream in(cfg.file);
    if (!in) throw UsageError("cannot read --file " + cfg.file);
    for (std::string line; std::getline(in, line);) {
      auto start = line.find_first_not_of(" \t\r");
      if (start == std::string::npos || line[start] == '#') continue;
      texts.push_back(line.substr(start));
    }
  }
  if (texts.size() != expected) {
    throw UsageError("expected " + std::to_string(expected) + " matri" + (expected == 1 ? "x" : "ces") + ", got " +
                     std::to_string(texts.size()));
  }
  std::vector<Mat> out;
  for (const auto& t : texts) {
    Mat m = Mat::parse(ctx, t);
    if (!m.is_square()) throw Error(Errc::DimensionMismatch, "matrix '" + t + "' is not square");
    if (cfg.n != 0 && m.rows() != cfg.n) {
      throw Error(Errc::DimensionMismatch, "matrix '" + t + "' is " + std::to_string(m.rows()) + "x" +
                                               std::to_string(m.rows()) + " but --n is " + std::to_string(cfg.n));
    }
    if (!out.empty() && out.front().rows() != m.rows()) {
      throw Error(Errc::DimensionMismatch, "matrices of different sizes");
    }
    out.push_back(std::move(m));
  }
  return out;
}

void print_json(std::ostream& out, const Json& doc) { out << doc.dump() << "\n"; }

int cmd_classify(const CliConfig& cfg, const std::vector<std::string>& args, std::ostream& out) {
  const FieldCtx ctx = parse_field(cfg.field);
  const Algebra algebra = parse_algebra(cfg.algebra);
  const bool json = json_output(cfg);
  const Mat a = load_matrices(cfg, ctx, args, 1).front();
  const std::size_t n = a.n();

  if (algebra == Algebra::Tn && n >= 3) {
    const VertexClass c = classify_tn(a);
    if (json) {
      print_json(out, to_json(c));
    } else {
      out << tag_name(c.tag) << "\n";
    }
    return kOk;
  }
  const bool vertex = is_vertex(a, algebra);
  if (n == 2 && vertex) {
    const ComponentLabel label = algebra == Algebra::Tn ? classify_component_t2(a) : classify_component_m2(a);
    if (json) {
      print_json(out, to_json(label));
    } else {
      out << label.to_string() << "\n";
    }
    return kOk;
  }
  if (json) {
    print_json(out, Json{{"class", vertex ? "vertex" : "not-vertex"}});
  } else {
    out << (vertex ? "vertex" : "not-vertex") << "\n";
  }
  return kOk;
}

int cmd_complement(const CliConfig& cfg, const std::vector<std::string>& args, std::ostream& out) {
  const FieldCtx ctx = parse_field(cfg.field);
  const Algebra algebra = parse_algebra(cfg.algebra);
  const bool json = json_output(cfg);
  const Mat a = load_matrices(cfg, ctx, args, 1).front();

  if (algebra == Algebra::Tn && a.n() >= 3) {
    const VertexTag tag = classify_tn(a).tag;
    if (tag == VertexTag::Bad1 || tag == VertexTag::Bad2) {
      const ComplementRay ray = tag == VertexTag::Bad1 ? complement_bad1(a) : complement_bad2(a);
      if (json) {
        print_json(out, to_json(ray));
      } else {
        out << form_name(ray.form) << " " << ray.generator.to_string() << "\n";
      }
      return kOk;
    }
  }
  if (!ctx.is_finite()) {
    throw Error(Errc::InfiniteField, "no closed form for this matrix; brute force needs a finite field");
  }
  const auto members = complement_bruteforce(a, algebra, cfg.max_size, cfg.jobs);
  if (json) {
    Json doc{{"count", members.size()}, {"complement", Json::array()}};
    for (const Mat& m : members) doc["complement"].push_back(m.to_string());
    print_json(out, doc);
  } else {
    for (const Mat& m : members) out << m.to_string() << "\n";
  }
  return kOk;
}

int cmd_path(const CliConfig& cfg, const std::vector<std::string>& args, bool shortest, std::ostream& out) {
  const FieldCtx ctx = parse_field(cfg.field);
  const Algebra algebra = parse_algebra(cfg.algebra);
  const bool json = json_output(cfg);
  const auto ms = load_matrices(cfg, ctx, args, 2);
  const Mat& a = ms[0];
  const Mat& b = ms[1];

  OrthoPath path;
  if (shortest) {
    if (!ctx.is_finite()) throw UsageError("--shortest needs a finite field; over Q use the constructive path");
    const OrthoGraph g = build_graph(algebra, a.n(), ctx, cfg.max_size, cfg.jobs);
    auto u = g.index_of(a), v = g.index_of(b);
    if (!u) throw Error(Errc::NotAVertex, a.to_string() + " is not a vertex of " + g.title());
    if (!v) throw Error(Errc::NotAVertex, b.to_string() + " is not a vertex of " + g.title());
    const auto indices = shortest_path(g, *u, *v);
    if (indices.empty()) throw Error(Errc::Disconnected, "no path in " + g.title());
    for (std::size_t k : indices) path.vertices.push_back(g.vertices()[k]);
    path.case_tag = "bfs";
  } else {
    if (algebra != Algebra::Tn) throw UsageError("constructive paths exist only in T_n; use --shortest for M_n");
    path = a.n() == 2 ? find_path_t2(a, b) : find_path(a, b);
  }
  if (json) {
    print_json(out, to_json(path));
  } else {
    for (const Mat& m : path.vertices) out << m.to_string() << "\n";
  }
  return kOk;
}

std::string component_tag(const OrthoGraph& g, const std::vector<std::size_t>& members) {
  if (g.n() != 2 || members.empty()) return "";
  const Mat& m = g.vertices()[members.front()];
  return (g.algebra() == Algebra::Tn ? classify_component_t2(m) : classify_component_m2(m)).to_string();
}

int cmd_graph(const CliConfig& cfg, bool want_components, bool want_diameter, const std::string& export_format,
              std::ostream& out) {
  const FieldCtx ctx = parse_field(cfg.field);
  const Algebra algebra = parse_algebra(cfg.algebra);
  if (cfg.n == 0) throw UsageError("graph needs --n");
  std::string format = export_format;
  if (format.empty() && cfg.format == "dot") format = "dot";
  const ExportFormat exporter = format.empty() ? ExportFormat::Dot : parse_export_format(format);
  const bool json = cfg.format == "json";
  if (!json) json_output(cfg);
  if (!ctx.is_finite()) throw UsageError("graph enumeration needs a finite field, not 'rational'");

  const OrthoGraph g = build_graph(algebra, cfg.n, ctx, cfg.max_size, cfg.jobs);
  if (!format.empty()) {
    out << export_graph(g, exporter);
    return kOk;
  }
  if (want_diameter) {
    const DiameterReport report = diameter(g, cfg.jobs);
    if (json) {
      Json doc{{"vertices", g.size()}, {"connected", report.connected}};
      if (report.diameter) doc["diameter"] = *report.diameter;
      doc["components"] = Json::array();
      for (std::size_t k = 0; k < report.components.size(); ++k) {
        Json c{{"size", report.components[k].size()}, {"diameter", report.component_diameters[k]}};
        if (auto tag = component_tag(g, report.components[k]); !tag.empty()) c["label"] = tag;
        doc["components"].push_back(c);
      }
      print_json(out, doc);
      return kOk;
    }
    if (report.connected) {
      out << "connected, diameter = " << *report.diameter << "\n";
      return kOk;
    }
    out << "disconnected, " << report.components.size() << " components\n";
    for (std::size_t k = 0; k < report.components.size(); ++k) {
      out << "component " << k;
      if (auto tag = component_tag(g, report.components[k]); !tag.empty()) out << " [" << tag << "]";
      out << " size " << report.components[k].size() << ": diameter " << report.component_diameters[k] << "\n";
    }
    return kOk;
  }
  if (want_components) {
    const auto comps = components(g);
    if (json) {
      Json doc{{"components", Json::array()}};
      for (const auto& comp : comps) {
        Json c{{"size", comp.size()}};
        if (auto tag = component_tag(g, comp); !tag.empty()) c["label"] = tag;
        c["members"] = Json::array();
        for (std::size_t v : comp) c["members"].push_back(g.vertices()[v].to_string());
        doc["components"].push_back(c);
      }
      print_json(out, doc);
      return kOk;
    }
    out << comps.size() << " component" << (comps.size() == 1 ? "" : "s") << "\n";
    for (std::size_t k = 0; k < comps.size(); ++k) {
      out << "component " << k;
      if (auto tag = component_tag(g, comps[k]); !tag.empty()) out << " [" << tag << "]";
      out << " size " << comps[k].size() << ":";
      for (std::size_t v : comps[k]) out << " " << g.vertices()[v].to_string();
      out << "\n";
    }
    return kOk;
  }
  if (json) {
    print_json(out, Json{{"graph", g.title()}, {"vertices", g.size()}, {"edges", g.edge_count()}});
  } else {
    out << g.title() << ": " << g.size() << " vertices, " << g.edge_count() << " edges\n";
  }
  return kOk;
}

int cmd_verify(const CliConfig& cfg, const std::string& suite, std::ostream& out) {
  const FieldCtx ctx = parse_field(cfg.field);
  if (!ctx.is_finite()) throw UsageError("verify enumerates graphs and needs a finite field, not 'rational'");
  std::size_t n = cfg.n;
  if (suite == "lemma1" || suite == "lemma2") {
    if (n != 0 && n != 2) throw UsageError(suite + " concerns 2x2 matrices; drop --n or pass --n 2");
    n = 2;
  } else if (n == 0) {
    n = 3;
  }
  if ((suite == "lemma3" || suite == "theorem1") && n < 3) throw UsageError(suite + " needs --n >= 3");
  const VerifyOptions options{ctx, n, cfg.jobs, cfg.max_size};
  return run_verification(suite, options, out) ? kOk : kVerifyFailed;
}

}  // namespace

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::ParseError:
    case Errc::InvalidField:
    case Errc::InfiniteField:
    case Errc::TooLarge:
    case Errc::UnsupportedFormat:
    case Errc::DimensionMismatch:
    case Errc::FieldMismatch: return kUsageError;
    default: return kMathError;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orthogonality graphs of upper triangular matrix algebras", "orthograph"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  app.add_option("--field", cfg.field, "prime p or 'rational'")->capture_default_str();
  app.add_option("--n", cfg.n, "matrix dimension (inferred from matrices when omitted)");
  app.add_option("--algebra", cfg.algebra, "tn (upper triangular) or mn (all matrices)")->capture_default_str();
  app.add_option("--format", cfg.format, "text, json or dot")->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "worker threads for enumeration")->capture_default_str();
  app.add_option("--max-size", cfg.max_size, "largest enumeration allowed")->capture_default_str();
  app.add_option("--file", cfg.file, "read matrices from a file, one per line");

  std::vector<std::string> matrices;
  auto* classify = app.add_subcommand("classify", "classify a matrix (taxonomy for n >= 3, component for n = 2)");
  classify->add_option("matrix", matrices, "matrix text, e.g. \"0,1,0;0,1,0;0,0,1\"");

  auto* complement = app.add_subcommand("complement", "orthogonal complement (closed form for bad matrices)");
  complement->add_option("matrix", matrices, "matrix text");

  bool shortest = false;
  auto* path = app.add_subcommand("path", "path between two vertices of O(T_n)");
  path->add_option("matrices", matrices, "two matrices A B");
  path->add_flag("--shortest", shortest, "BFS shortest path (finite fields only)");

  bool want_components = false, want_diameter = false;
  std::string export_format;
  auto* graph = app.add_subcommand("graph", "enumerate the orthogonality graph");
  graph->add_flag("--components", want_components, "list connected components");
  graph->add_flag("--diameter", want_diameter, "component and global diameters");
  graph->add_option("--export", export_format, "dot or json");

  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "lemma1, lemma2, lemma3, lemma4 or theorem1")
      ->required()
      ->check(CLI::IsMember({"lemma1", "lemma2", "lemma3", "lemma4", "theorem1"}));

  std::vector<const char*> argv{"orthograph"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (classify->parsed()) return cmd_classify(cfg, matrices, out);
    if (complement->parsed()) return cmd_complement(cfg, matrices, out);
    if (path->parsed()) return cmd_path(cfg, matrices, shortest, out);
    if (graph->parsed()) return cmd_graph(cfg, want_components, want_diameter, export_format, out);
    if (verify->parsed()) return cmd_verify(cfg, suite, out);
  } catch (const UsageError& e) {
    err << "orthograph: usage: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "orthograph: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kUsageError;
}

}  // namespace orthograph::cli
