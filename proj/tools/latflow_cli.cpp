// latflow: batch front end for the flow/cut lattice toolkit.
//
//   latflow --cmd verify --input samples/theta.txt --format json
//   latflow --cmd corpus --seed 7 --count 10 --jobs 4
//
// exit status: 0 all checks pass; 1 a theorem check failed (report carries a
// counterexample dump); 2 a resource cap was hit (partial report); 3 bad input.
#include <atomic>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "latflow/covering.hpp"
#include "latflow/graph_io.hpp"
#include "latflow/random_graph.hpp"
#include "latflow/verify.hpp"

using namespace latflow;
using ordered_json = nlohmann::ordered_json;

namespace {

struct HostJob {
  std::string name;
  Multigraph g;
};

// severity: 0 pass, 1 check failure, 2 capped, 3 bad input
struct HostOut {
  ordered_json j;
  std::string text;
  std::string dot;
  int severity = 0;
};

std::string fmt_counts(const std::vector<int>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

ordered_json caps_json(const Caps& caps) {
  ordered_json j;
  j["max_edges"] = caps.max_edges;
  j["max_orient_edges"] = caps.max_orient_edges;
  j["max_poset"] = caps.max_poset;
  j["max_dim"] = caps.max_dim;
  j["max_halfspaces"] = caps.max_halfspaces;
  return j;
}

ordered_json poset_summary_json(const GradedPoset& p) {
  ordered_json j;
  j["elements"] = p.n;
  j["grade_counts"] = grade_counts(p);
  j["poset"] = poset_to_json(p);
  return j;
}

// counterexample dump: the graph, the failing check, and both orientation
// posets when they can still be built, so a violating instance is auditable
ordered_json counterexample_json(const HostJob& h, const std::string& msg, const Caps& caps) {
  ordered_json j;
  j["check_failure"] = msg;
  j["graph"] = graph_to_json(h.g);
  j["graph_text"] = graph_to_text(h.g);
  try {
    j["sc_poset"] = poset_to_json(enumerate_sc(h.g, caps).poset);
  } catch (const std::exception&) {
    j["sc_poset"] = nullptr;
  }
  try {
    j["cac_poset"] = poset_to_json(enumerate_cac(h.g, caps).poset);
  } catch (const std::exception&) {
    j["cac_poset"] = nullptr;
  }
  return j;
}

Rat flow_oracle_max(const Multigraph& g, const Caps& caps) {
  FlowCell cell = voronoi_halfspaces(g, caps);
  if (cell.fb.dim() == 0) return Rat(0);
  PolytopeResult geo = face_lattice_bruteforce(cell.rows, cell.fb.dim(), caps);
  Rat best(0);
  for (const VecQ& v : geo.vertices) best = std::max(best, q_form(flow_embed(g, cell.fb, v)));
  return best;
}

ordered_json phases_json(const VerifyReport& vr) {
  ordered_json arr = ordered_json::array();
  for (const PhaseResult& p : vr.phases) {
    ordered_json pj;
    pj["name"] = p.name;
    pj["ran"] = p.ran;
    pj["pass"] = p.pass;
    pj["capped"] = p.capped;
    pj["message"] = p.message;
    arr.push_back(pj);
  }
  return arr;
}

ordered_json witness_json(const std::vector<std::pair<std::string, std::string>>& w) {
  ordered_json arr = ordered_json::array();
  for (const auto& [comb, geo] : w) arr.push_back(ordered_json::array({comb, geo}));
  return arr;
}

HostOut do_verify(const HostJob& h, const Caps& caps) {
  HostOut out;
  VerifyReport vr = run_verify(h.g, caps);
  bool pass = vr.all_pass();
  out.severity = !pass ? 1 : vr.any_capped() ? 2 : 0;

  out.j["graph"] = graph_to_json(h.g);
  out.j["all_pass"] = pass;
  out.j["capped"] = vr.any_capped();
  out.j["phases"] = phases_json(vr);
  ordered_json flow;
  flow["f_vector"] = vr.flow_f_vector;
  flow["quotient_grade_counts"] = vr.flow_quotient_counts;
  flow["covering"] = to_string(vr.flow_covering);
  flow["adjacency_points_checked"] = vr.flow_points_checked;
  flow["witness"] = witness_json(vr.flow_witness);
  out.j["flow"] = flow;
  ordered_json cut;
  cut["f_vector"] = vr.cut_f_vector;
  cut["quotient_grade_counts"] = vr.cut_quotient_counts;
  cut["covering"] = to_string(vr.cut_covering);
  cut["adjacency_points_checked"] = vr.cut_points_checked;
  cut["witness"] = witness_json(vr.cut_witness);
  out.j["cut"] = cut;
  if (!pass) {
    std::string first;
    for (const PhaseResult& p : vr.phases)
      if (p.ran && !p.pass) {
        first = p.name + ": " + p.message;
        break;
      }
    out.j["counterexample"] = counterexample_json(h, first, caps);
  }

  out.text = h.name + ": " + (pass ? (vr.any_capped() ? "pass (capped)" : "pass") : "FAIL") + "\n";
  for (const PhaseResult& p : vr.phases) {
    std::string status = !p.ran ? "skipped" : p.pass ? "pass" : "FAIL";
    if (p.capped) status += " (capped)";
    out.text += "  " + p.name + ": " + status;
    if (!p.message.empty()) out.text += " - " + p.message;
    out.text += "\n";
  }
  return out;
}

HostOut do_sc_poset(const HostJob& h, const Caps& caps, bool cut_side) {
  HostOut out;
  OrientPoset p = cut_side ? enumerate_cac(h.g, caps) : enumerate_sc(h.g, caps);
  const char* label = cut_side ? "cac" : "sc";
  out.j[label] = poset_summary_json(p.poset);
  out.dot = poset_to_dot(p.poset, h.name + " " + label);
  out.text = h.name + ": " + label + " poset " + std::to_string(p.poset.n) +
             " elements, grade counts " + fmt_counts(grade_counts(p.poset)) + "\n";
  return out;
}

HostOut do_voronoi_flow(const HostJob& h, const Caps& caps) {
  HostOut out;
  CombFacePoset fp = face_poset_combinatorial(h.g, caps);
  out.j["dim"] = genus(h.g);
  out.j["circuits"] = static_cast<int>(fp.circuits.size());
  out.j["vertex_count"] = static_cast<int>(fp.verts.size());
  out.j["f_vector"] = grade_counts(fp.poset);
  ordered_json verts = ordered_json::array();
  for (const VecQ& v : fp.verts) verts.push_back(vec_to_json(v));
  out.j["vertices"] = verts;
  out.j["face_poset"] = poset_to_json(fp.poset);
  out.dot = poset_to_dot(fp.poset, h.name + " flow cell");
  out.text = h.name + ": flow cell dim " + std::to_string(genus(h.g)) + ", " +
             std::to_string(fp.verts.size()) + " vertices, f-vector " +
             fmt_counts(grade_counts(fp.poset)) + "\n";
  return out;
}

HostOut do_voronoi_cut(const HostJob& h, const Caps& caps) {
  HostOut out;
  CombCutFacePoset fp = cut_face_poset_combinatorial(h.g, caps);
  out.j["dim"] = h.g.n - 1;
  out.j["bonds"] = static_cast<int>(fp.bond_list.size());
  out.j["vertex_count"] = static_cast<int>(fp.verts.size());
  out.j["f_vector"] = grade_counts(fp.poset);
  ordered_json verts = ordered_json::array();
  for (const VecQ& v : fp.verts) verts.push_back(vec_to_json(v));
  out.j["vertices"] = verts;
  out.j["face_poset"] = poset_to_json(fp.poset);
  out.dot = poset_to_dot(fp.poset, h.name + " cut cell");
  out.text = h.name + ": cut cell dim " + std::to_string(h.g.n - 1) + ", " +
             std::to_string(fp.verts.size()) + " vertices, f-vector " +
             fmt_counts(grade_counts(fp.poset)) + "\n";
  return out;
}

HostOut do_covering_flow(const HostJob& h, const Caps& caps) {
  HostOut out;
  FlowCoveringReport fc = covering_number_flow(h.g, caps);
  out.j["value"] = to_string(fc.value);
  out.j["value_decimal"] = decimal_string(fc.value);
  out.j["eps"] = fc.eps;
  out.j["inner"] = to_string(fc.inner);
  out.j["argmax"] = arc_key(fc.argmax);
  out.j["argmax_count"] = static_cast<int>(fc.argmax_set.size());
  out.j["lower_bound_only"] = fc.lower_bound_only;
  bool oracle_ok = false;
  if (!fc.lower_bound_only) {
    try {
      Rat oracle = flow_oracle_max(h.g, caps);
      out.j["oracle_value"] = to_string(oracle);
      oracle_ok = true;
      if (oracle != fc.value)
        throw check_error("flow covering " + to_string(fc.value) +
                          " differs from oracle max " + to_string(oracle));
    } catch (const resource_error&) {
      out.j["oracle_value"] = nullptr;
    }
  } else {
    out.j["oracle_value"] = nullptr;
  }
  out.j["closed_form_applies"] = fc.closed_form_applies;
  out.j["closed_form"] = fc.closed_form_applies ? to_string(fc.closed_form) : "";
  out.j["closed_form_matches"] = fc.closed_form_matches;
  out.j["uncorrected_value"] = to_string(fc.uncorrected_value);
  out.j["uncorrected_matches"] = fc.uncorrected_matches;
  out.j["uncorrected_closed_form_matches"] = fc.uncorrected_closed_form_matches;
  if (fc.lower_bound_only || !oracle_ok) out.severity = 2;
  out.text = h.name + ": flow covering " + to_string(fc.value) + " (~" +
             decimal_string(fc.value) + "), eps " + std::to_string(fc.eps) + ", " +
             std::to_string(fc.argmax_set.size()) + " maximizers, argmax " +
             arc_key(fc.argmax) + (fc.lower_bound_only ? " [lower bound only]" : "") + "\n";
  return out;
}

HostOut do_covering_cut(const HostJob& h, const Caps& caps) {
  HostOut out;
  CutCoveringReport cc = covering_number_cut(h.g, caps);
  out.j["value"] = to_string(cc.value);
  out.j["value_decimal"] = decimal_string(cc.value);
  out.j["argmax"] = arc_key(cc.argmax);
  out.j["argmax_count"] = static_cast<int>(cc.argmax_set.size());
  out.j["oracle_value"] = to_string(cc.oracle_value);
  if (cc.value != cc.oracle_value)
    throw check_error("cut covering " + to_string(cc.value) + " differs from oracle max " +
                      to_string(cc.oracle_value));
  out.j["closed_form_applies"] = cc.closed_form_applies;
  out.j["closed_form"] = cc.closed_form_applies ? to_string(cc.closed_form) : "";
  out.j["closed_form_matches"] = cc.closed_form_matches;
  out.j["uncorrected_closed_form_matches"] = cc.uncorrected_closed_form_matches;
  out.text = h.name + ": cut covering " + to_string(cc.value) + " (~" +
             decimal_string(cc.value) + "), " + std::to_string(cc.argmax_set.size()) +
             " maximizers, argmax " + arc_key(cc.argmax) + "\n";
  return out;
}

HostOut do_quotients(const HostJob& h, const Caps& caps) {
  HostOut out;
  QuotientPoset qf = quotient_sc(h.g, enumerate_sc(h.g, caps), caps);
  QuotientPoset qc = quotient_cac(h.g, enumerate_cac(h.g, caps), caps);
  ordered_json flow;
  flow["classes"] = qf.poset.n;
  flow["grade_counts"] = grade_counts(qf.poset);
  out.j["flow"] = flow;
  ordered_json cut;
  cut["classes"] = qc.poset.n;
  cut["grade_counts"] = grade_counts(qc.poset);
  out.j["cut"] = cut;
  out.dot = poset_to_dot(qf.poset, h.name + " flow quotient") + "\n" +
            poset_to_dot(qc.poset, h.name + " cut quotient");
  out.text = h.name + ": flow quotient " + std::to_string(qf.poset.n) + " classes " +
             fmt_counts(grade_counts(qf.poset)) + ", cut quotient " +
             std::to_string(qc.poset.n) + " classes " + fmt_counts(grade_counts(qc.poset)) +
             "\n";
  return out;
}

HostOut process_host(const std::string& cmd, const HostJob& h, const Caps& caps) {
  HostOut out;
  try {
    if (cmd == "verify" || cmd == "corpus") out = do_verify(h, caps);
    else if (cmd == "sc-poset") out = do_sc_poset(h, caps, false);
    else if (cmd == "cac-poset") out = do_sc_poset(h, caps, true);
    else if (cmd == "voronoi-flow") out = do_voronoi_flow(h, caps);
    else if (cmd == "voronoi-cut") out = do_voronoi_cut(h, caps);
    else if (cmd == "covering-flow") out = do_covering_flow(h, caps);
    else if (cmd == "covering-cut") out = do_covering_cut(h, caps);
    else if (cmd == "quotients") out = do_quotients(h, caps);
  } catch (const check_error& e) {
    out = HostOut{};
    out.severity = 1;
    out.j["counterexample"] = counterexample_json(h, e.what(), caps);
    out.text = h.name + ": FAIL - " + e.what() + "\n";
  } catch (const resource_error& e) {
    out = HostOut{};
    out.severity = 2;
    out.j["capped"] = true;
    out.j["error"] = e.what();
    out.text = h.name + ": capped - " + std::string(e.what()) + "\n";
  } catch (const input_error& e) {
    out = HostOut{};
    out.severity = 3;
    out.j["error"] = e.what();
    out.text = h.name + ": input error - " + std::string(e.what()) + "\n";
  }
  ordered_json entry;
  entry["name"] = h.name;
  for (auto& [k, v] : out.j.items()) entry[k] = v;
  out.j = std::move(entry);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Voronoi face posets and covering numbers for graph flow/cut lattices"};
  std::vector<std::string> inputs;
  std::string cmd;
  std::string format = "json";
  int max_edges = 0, max_poset = 0;
  unsigned long long seed = 1;
  int jobs = 1, count = 10;
  app.add_option("-i,--input", inputs, "graph file, text or JSON; repeatable");
  app.add_option("-c,--cmd", cmd,
                 "command: sc-poset | cac-poset | voronoi-flow | voronoi-cut | verify | "
                 "covering-flow | covering-cut | quotients | corpus")
      ->required()
      ->check(CLI::IsMember({"sc-poset", "cac-poset", "voronoi-flow", "voronoi-cut", "verify",
                             "covering-flow", "covering-cut", "quotients", "corpus"}));
  app.add_option("-f,--format", format, "output format: json | dot | text")
      ->check(CLI::IsMember({"json", "dot", "text"}));
  app.add_option("--max-edges", max_edges, "edge-count cap (overrides LATFLOW_CAPS)")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-poset", max_poset, "poset-size cap (overrides LATFLOW_CAPS)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "corpus: random seed");
  app.add_option("--count", count, "corpus: number of random graphs")->check(CLI::PositiveNumber);
  app.add_option("-j,--jobs", jobs, "worker threads")->check(CLI::Range(1, 64));
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  Caps caps;
  std::vector<HostJob> hosts;
  try {
    caps = caps_from_env();
    if (max_edges > 0) caps.max_edges = max_edges;
    if (max_poset > 0) caps.max_poset = max_poset;
    if (cmd == "corpus") {
      if (!inputs.empty()) throw input_error("corpus generates its own graphs; drop --input");
      Rng rng(seed);
      for (int i = 0; i < count; ++i)
        hosts.push_back({"seed" + std::to_string(seed) + "[" + std::to_string(i) + "]",
                         random_connected_multigraph(rng)});
    } else {
      if (inputs.empty()) throw input_error("no --input graphs given");
      for (const std::string& path : inputs) hosts.push_back({path, parse_graph_file(path)});
    }
    bool has_dot = cmd == "sc-poset" || cmd == "cac-poset" || cmd == "voronoi-flow" ||
                   cmd == "voronoi-cut" || cmd == "quotients";
    if (format == "dot" && !has_dot)
      throw input_error("dot output: `" + cmd + "` has no poset to draw");
  } catch (const input_error& e) {
    std::cerr << "latflow: " << e.what() << "\n";
    return 3;
  }

  // worker pool over hosts; report assembly stays single-threaded and ordered
  std::vector<HostOut> results(hosts.size());
  if (jobs <= 1 || hosts.size() <= 1) {
    for (size_t i = 0; i < hosts.size(); ++i) results[i] = process_host(cmd, hosts[i], caps);
  } else {
    std::atomic<size_t> next{0};
    auto worker = [&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= hosts.size()) return;
        results[i] = process_host(cmd, hosts[i], caps);
      }
    };
    std::vector<std::thread> pool;
    int width = std::min<int>(jobs, static_cast<int>(hosts.size()));
    for (int t = 0; t < width; ++t) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }

  bool any_fail = false, any_cap = false, any_bad = false;
  for (const HostOut& r : results) {
    any_fail |= r.severity == 1;
    any_cap |= r.severity == 2;
    any_bad |= r.severity == 3;
  }

  if (format == "json") {
    ordered_json root;
    root["command"] = cmd;
    root["caps"] = caps_json(caps);
    if (cmd == "corpus") {
      root["seed"] = seed;
      root["count"] = count;
    }
    root["all_pass"] = !any_fail && !any_bad;
    ordered_json arr = ordered_json::array();
    for (HostOut& r : results) arr.push_back(std::move(r.j));
    root["hosts"] = arr;
    std::cout << root.dump(2) << "\n";
  } else if (format == "text") {
    std::cout << "latflow " << cmd << "\n";
    for (const HostOut& r : results) std::cout << r.text;
  } else {
    for (const HostOut& r : results) std::cout << r.dot << "\n";
  }

  if (any_fail) return 1;
  if (any_bad) return 3;
  if (any_cap) return 2;
  return 0;
}
