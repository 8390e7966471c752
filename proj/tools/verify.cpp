#include "verify.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "orthograph/classify.hpp"
#include "orthograph/graph.hpp"
#include "orthograph/ortho.hpp"
#include "orthograph/pathfinder.hpp"

namespace orthograph::cli {

namespace {

class Report {
 public:
  explicit Report(std::ostream& out) : out_(out) {}

  void check(bool ok, const std::string& what) {
    out_ << (ok ? "PASS " : "FAIL ") << what << "\n";
    ++total_;
    if (ok) ++passed_;
  }
  void note(const std::string& line) { out_ << "  " << line << "\n"; }

  bool finish(const std::string& suite) {
    out_ << suite << ": " << passed_ << "/" << total_ << " checks passed\n";
    return passed_ == total_;
  }

 private:
  std::ostream& out_;
  std::size_t total_ = 0;
  std::size_t passed_ = 0;
};

// Component diameters stated for O(M_2) and O(T_2): the "small" families
// (V2, V3, V6(α,α)) have diameter 0 over GF(2) and 1 otherwise; V1, V4, V5
// have 1 over GF(2) and 2 otherwise; V6(α,β) with α ≠ β has 2.
std::size_t expected_diameter(const ComponentLabel& label, std::uint64_t q) {
  switch (label.family()) {
    case ComponentFamily::V2:
    case ComponentFamily::V3: return q == 2 ? 0 : 1;
    case ComponentFamily::V6: return *label.alpha() == *label.beta() ? (q == 2 ? 0 : 1) : 2;
    default: return q == 2 ? 1 : 2;
  }
}

bool verify_components(Algebra algebra, const VerifyOptions& opt, Report& report) {
  const OrthoGraph g = build_graph(algebra, 2, opt.field, opt.max_size, opt.jobs);
  report.note(g.title() + ": " + std::to_string(g.size()) + " vertices, " + std::to_string(g.edge_count()) +
              " edges");

  std::vector<ComponentLabel> labels;
  std::size_t unclassified = 0;
  for (const Mat& m : g.vertices()) {
    try {
      labels.push_back(algebra == Algebra::Tn ? classify_component_t2(m) : classify_component_m2(m));
    } catch (const Error&) {
      ++unclassified;
      labels.push_back(ComponentLabel::plain(ComponentFamily::V1));
    }
  }
  report.check(unclassified == 0, "every vertex receives a component label");

  const DiameterReport dr = diameter(g, opt.jobs);
  std::map<ComponentLabel, std::size_t> label_sizes;
  for (const auto& l : labels) ++label_sizes[l];
  bool partition_ok = dr.components.size() == label_sizes.size();
  for (const auto& comp : dr.components) {
    const ComponentLabel& first = labels[comp.front()];
    partition_ok = partition_ok && label_sizes[first] == comp.size() &&
                   std::all_of(comp.begin(), comp.end(), [&](std::size_t v) { return labels[v] == first; });
  }
  report.check(partition_ok, std::to_string(dr.components.size()) +
                                 " BFS components coincide with the component label classes");

  bool diameters_ok = true;
  for (std::size_t k = 0; k < dr.components.size(); ++k) {
    const ComponentLabel& label = labels[dr.components[k].front()];
    const std::size_t want = expected_diameter(label, opt.field.characteristic());
    const std::size_t got = dr.component_diameters[k];
    report.note(label.to_string() + ": size " + std::to_string(dr.components[k].size()) + ", diameter " +
                std::to_string(got) + " (expected " + std::to_string(want) + ")");
    diameters_ok = diameters_ok && got == want;
  }
  report.check(diameters_ok, "component diameters match the table");
  return true;
}

void verify_lemma3(const VerifyOptions& opt, Report& report) {
  const OrthoGraph g = build_graph(Algebra::Tn, opt.n, opt.field, opt.max_size, opt.jobs);
  std::size_t bad1 = 0, bad2 = 0, mismatches = 0;
  for (const Mat& m : g.vertices()) {
    const VertexTag tag = classify_tn(m).tag;
    if (tag != VertexTag::Bad1 && tag != VertexTag::Bad2) continue;
    const ComplementRay ray = tag == VertexTag::Bad1 ? complement_bad1(m) : complement_bad2(m);
    (tag == VertexTag::Bad1 ? bad1 : bad2) += 1;
    if (ray.members() != complement_bruteforce(m, Algebra::Tn, opt.max_size)) ++mismatches;
  }
  report.check(mismatches == 0 && bad1 > 0 && bad2 > 0,
               "closed-form complement equals brute force for " + std::to_string(bad1) + " bad-1 and " +
                   std::to_string(bad2) + " bad-2 vertices");
}

void verify_lemma4(const VerifyOptions& opt, Report& report) {
  const OrthoGraph g = build_graph(Algebra::Tn, opt.n, opt.field, opt.max_size, opt.jobs);
  const std::size_t n = opt.n;
  std::size_t checked = 0, orth = 0, rank_one = 0, triangular = 0, first_col = 0, last_row = 0;
  for (const Mat& a : g.vertices()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!a.is_zero_at(i, i)) continue;
      const Mat r = annihilator_rank1(a, i);
      ++checked;
      orth += are_orthogonal(a, r);
      rank_one += rank(r) == 1;
      triangular += is_upper_triangular(r);
      first_col += i == 0 || r.block(0, 0, n, 1).is_zero();
      last_row += i == n - 1 || r.block(n - 1, 0, 1, n).is_zero();
    }
  }
  const std::string of = " for " + std::to_string(checked) + " (vertex, zero index) pairs";
  report.check(checked > 0 && orth == checked, "R_i is orthogonal to A" + of);
  report.check(rank_one == checked, "R_i has rank 1" + of);
  report.check(triangular == checked, "R_i is upper triangular" + of);
  report.check(first_col == checked, "R_i has zero first column when i != 1" + of);
  report.check(last_row == checked, "R_i has zero last row when i != n" + of);
}

void verify_theorem1(const VerifyOptions& opt, Report& report) {
  const std::size_t n = opt.n;
  const FieldCtx& ctx = opt.field;
  const OrthoGraph g = build_graph(Algebra::Tn, n, ctx, opt.max_size, opt.jobs);
  report.note(g.title() + ": " + std::to_string(g.size()) + " vertices, " + std::to_string(g.edge_count()) +
              " edges");
  const DistanceTable dist(g, opt.jobs);

  std::size_t diam = 0;
  bool connected = true;
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (dist.at(u, v) == kUnreachable) {
        connected = false;
      } else {
        diam = std::max(diam, dist.at(u, v));
      }
    }
  }
  report.check(connected, "graph is connected");
  report.check(connected && diam == 4, "diameter = " + std::to_string(diam));

  const Mat a_hat = Mat::identity(ctx, n) - Mat::unit(ctx, n, 0, 0);
  const Mat b_hat = Mat::jordan(ctx, n);
  const auto ia = g.index_of(a_hat), ib = g.index_of(b_hat);
  report.check(ia && ib && dist.at(*ia, *ib) == 4, "d(I - E11, J_n) = 4");
  const ComplementRay e11{Mat::unit(ctx, n, 0, 0), ComplementForm::Bad1Form};
  const ComplementRay e1n{Mat::unit(ctx, n, 0, n - 1), ComplementForm::Bad2Form};
  report.check(complement_bruteforce(a_hat, Algebra::Tn, opt.max_size, opt.jobs) == e11.members() &&
                   complement_bruteforce(b_hat, Algebra::Tn, opt.max_size, opt.jobs) == e1n.members(),
               "O(I - E11) = {a E11} and O(J_n) = {a E1n}");

  struct Tally {
    std::map<std::string, std::size_t> cases;
    std::size_t failures = 0;
    std::vector<std::string> first_failures;
  };
  const std::size_t count = g.size();
  const unsigned workers = std::max(1u, opt.jobs);
  std::vector<Tally> tallies(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  parallel_chunks(workers, workers, [&](std::uint64_t first, std::uint64_t last) {
    for (std::uint64_t w = first; w < last; ++w) {
      Tally& t = tallies[w];
      for (std::size_t u = w * chunk; u < std::min(count, (w + 1) * chunk); ++u) {
        for (std::size_t v = 0; v < count; ++v) {
          std::string problem;
          try {
            const OrthoPath p = find_path(g.vertices()[u], g.vertices()[v]);
            ++t.cases[p.case_tag];
            const PathReport check = verify_path(p);
            if (!check) {
              problem = check.problems.front();
            } else if (!(p.vertices.front() == g.vertices()[u]) || !(p.vertices.back() == g.vertices()[v])) {
              problem = "endpoints differ";
            } else if (dist.at(u, v) > p.length()) {
              problem = "shorter than the BFS distance";
            }
          } catch (const Error& e) {
            problem = e.what();
          }
          if (!problem.empty()) {
            ++t.failures;
            if (t.first_failures.size() < 5) {
              t.first_failures.push_back(g.vertices()[u].to_string() + " -> " + g.vertices()[v].to_string() +
                                         ": " + problem);
            }
          }
        }
      }
    }
  });
  Tally total;
  for (const Tally& t : tallies) {
    for (const auto& [tag, k] : t.cases) total.cases[tag] += k;
    total.failures += t.failures;
    for (const auto& f : t.first_failures) {
      if (total.first_failures.size() < 5) total.first_failures.push_back(f);
    }
  }
  std::ostringstream cases;
  for (const auto& [tag, k] : total.cases) cases << " " << tag << ":" << k;
  report.note("cases" + cases.str());
  for (const auto& f : total.first_failures) report.note(f);
  report.check(total.failures == 0, "find_path verified on " + std::to_string(count * count) +
                                        " ordered pairs (length <= 4, BFS distance <= length)");
}

}  // namespace

bool run_verification(const std::string& suite, const VerifyOptions& options, std::ostream& out) {
  out << "verify " << suite << " over " << options.field.name() << ", n = " << options.n << "\n";
  Report report(out);
  if (suite == "lemma1") {
    verify_components(Algebra::Mn, options, report);
  } else if (suite == "lemma2") {
    verify_components(Algebra::Tn, options, report);
  } else if (suite == "lemma3") {
    verify_lemma3(options, report);
  } else if (suite == "lemma4") {
    verify_lemma4(options, report);
  } else if (suite == "theorem1") {
    verify_theorem1(options, report);
  } else {
    throw Error(Errc::ParseError, "unknown verification suite '" + suite + "'");
  }
  return report.finish(suite);
}

}  // namespace orthograph::cli
