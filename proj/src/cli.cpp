#include "ffg/cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ffg/error.hpp"
#include "ffg/experiments.hpp"
#include "ffg/farey.hpp"
#include "ffg/free_factor.hpp"
#include "ffg/tree.hpp"
#include "ffg/whitehead.hpp"

namespace ffg::cli {

namespace {

struct Options {
  int rank = 2;
  std::string word;
  std::string b;
  std::string out_path;
  std::string csv_path;
  bool cyclic = false;
  bool geometric = false;
  bool dot = false;
  std::vector<std::string> theta;
  std::vector<int> subset{1};
  std::vector<std::string> slopes;
  std::string experiment;
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  int radius = 8;
  std::string a = "x";
  long k_lo = -10;
  long k_hi = 10;
  std::vector<int> ranks{2, 3, 4};
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw DomainError("failed writing '" + path + "'");
}

void maybe_write_json(const Options& o, const Json& j) {
  if (!o.out_path.empty()) write_file(o.out_path, j.dump(2) + "\n");
}

MinimalFillingWord filling_b(const Options& o) {
  if (o.b.empty()) return default_boundary(o.rank);
  return MinimalFillingWord::verify(parse_word(o.b, o.rank));
}

Json chain_json(const WhChain& chain) {
  Json out = Json::array();
  for (const auto& m : chain) out.push_back(m.describe());
  return out;
}

Json certificate_json(const MinimizationCertificate& c) {
  return {{"input", c.input.str()},
          {"image", c.image.str()},
          {"minimized", c.minimized.str()},
          {"minimized_length", c.minimized.length()},
          {"chain", chain_json(c.chain)},
          {"length_trace", c.length_trace}};
}

int run_reduce(const Options& o, std::ostream& out) {
  const Word w = parse_word(o.word, o.rank);
  Json j{{"reduced", w.str()}, {"length", w.length()}};
  if (o.cyclic) {
    const auto d = cyclic_reduce(w);
    out << d.core.str() << "\n";
    out << "conjugator " << d.conjugator.str() << "\n";
    j["cyclic_core"] = d.core.str();
    j["conjugator"] = d.conjugator.str();
  } else {
    out << w.str() << "\n";
  }
  maybe_write_json(o, j);
  return 0;
}

int run_classify(const Options& o, std::ostream& out) {
  const Word w = parse_word(o.word, o.rank);
  const Classification c = classify_with_certificate(w);
  out << to_string(c.verdict) << "\n";
  Json j{{"verdict", to_string(c.verdict)}, {"certificate", certificate_json(c.certificate)}};
  if (c.cut_vertex) j["cut_vertex"] = letter_name(*c.cut_vertex, o.rank);
  maybe_write_json(o, j);
  return 0;
}

int run_minimize(const Options& o, std::ostream& out) {
  const Word w = parse_word(o.word, o.rank);
  const MinimizationCertificate c = minimize_cyclic_length(w);
  out << c.minimized.str() << "\n";
  out << "length " << cyclic_length(w) << " -> " << c.minimized.length() << " in " << c.chain.size()
      << " moves\n";
  maybe_write_json(o, certificate_json(c));
  return 0;
}

int run_index(const Options& o, std::ostream& out) {
  const Word w = parse_word(o.word, o.rank);
  const Word b = parse_word(o.b, o.rank);
  const auto d = b_reduced_decomposition(w, b);
  out << "k = " << d.k << "\n";
  out << "core " << d.core.str() << "\n";
  Json j{{"k", d.k}, {"core", d.core.str()}, {"b", b.str()}, {"word", w.str()}};
  if (o.geometric) {
    const long g = geometric_index(w, b);
    const AxisInterval p = project_axis_to_axis(w, b);
    out << "geometric = " << g << "\n";
    out << "projection [" << p.lo << ", " << p.hi << "]" << (p.meets_axis ? "" : " (bridge)") << "\n";
    j["geometric"] = g;
    j["projection"] = {{"lo", p.lo}, {"hi", p.hi}, {"meets_axis", p.meets_axis}};
    j["agree"] = g == d.k;
  }
  maybe_write_json(o, j);
  if (o.geometric && j["geometric"] != d.k) {
    throw DomainError("geometric and combinatorial indices disagree");
  }
  return 0;
}

int run_factor_invariant(const Options& o, std::ostream& out) {
  const MinimalFillingWord b = filling_b(o);
  std::vector<Word> images;
  if (o.theta.empty()) {
    images = Automorphism::identity(o.rank).images();
  } else {
    if (static_cast<int>(o.theta.size()) != o.rank)
      throw DomainError("--theta needs exactly N images");
    for (const auto& t : o.theta) images.push_back(parse_word(t, o.rank));
  }
  const FreeFactor f = FreeFactor::from_witness({Automorphism(images), o.subset});
  const FactorInvariant inv = factor_invariant(f, b);
  out << "[A]_b = " << inv.value << (inv.tight ? " (tight)" : " (or value + 1)") << "\n";
  out << "samples " << inv.samples << "\n";
  out << "generators";
  for (const auto& g : f.generators()) out << " " << g.str();
  out << "\n";
  if (o.dot) out << f.graph().to_dot();
  Json gens = Json::array();
  for (const auto& g : f.generators()) gens.push_back(g.str());
  Json j{{"value", inv.value},
         {"tight", inv.tight},
         {"misses_axis", inv.misses_axis},
         {"samples", inv.samples},
         {"min_observed", inv.min_observed},
         {"max_observed", inv.max_observed},
         {"generators", gens},
         {"b", b.word().str()}};
  if (const auto ov = axis_overlap(f.graph(), b.word())) j["overlap"] = {{"lo", ov->lo}, {"hi", ov->hi}};
  maybe_write_json(o, j);
  return 0;
}

int run_farey(const Options& o, std::ostream& out) {
  const Slope s = parse_slope(o.slopes.at(0));
  const Slope t = parse_slope(o.slopes.at(1));
  const long d = farey_distance(s, t);
  out << d << "\n";
  maybe_write_json(o, {{"from", s.str()}, {"to", t.str()}, {"distance", d}});
  return 0;
}

int run_experiment(const Options& o, std::ostream& out) {
  ExperimentReport r;
  const std::string& name = o.experiment;
  if (name == "lipschitz") {
    r = exp_lipschitz(filling_b(o), o.trials, o.seed);
  } else if (name == "cancellation") {
    r = exp_cancellation(filling_b(o), o.trials, o.seed);
  } else if (name == "fzero-fiber") {
    r = exp_fzero_fiber(filling_b(o), parse_word(o.a, o.rank), o.k_lo, o.k_hi);
  } else if (name == "basis-change") {
    r = exp_basis_change(filling_b(o), o.trials, o.seed);
  } else if (name == "quasiflat") {
    r = exp_quasiflat(o.radius, o.seed);
  } else if (name == "boundary-length") {
    r = exp_boundary_length(o.ranks);
  } else if (name == "displacement-stability") {
    r = exp_displacement_stability(o.radius, o.seed);
  } else {
    throw DomainError("unknown experiment '" + name + "'");
  }
  out << r.name << ": " << r.records.size() << " records, " << r.violations << " violations\n";
  for (auto it = r.summary.begin(); it != r.summary.end(); ++it) {
    if (it->is_primitive()) out << "  " << it.key() << " = " << it->dump() << "\n";
  }
  for (auto it = r.caveats.begin(); it != r.caveats.end(); ++it)
    out << "  caveat " << it.key() << " = " << it->dump() << "\n";
  if (!o.out_path.empty()) write_file(o.out_path, r.dump());
  if (!o.csv_path.empty()) write_file(o.csv_path, r.csv());
  return r.violations == 0 ? 0 : 1;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Free factor complex computations in free groups", "ffg"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key = value file supplying option defaults");
  Options o;

  auto add_rank = [&](CLI::App* sub) {
    sub->add_option("--n", o.rank, "rank of the free group")->check(CLI::Range(2, 1000));
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", o.out_path, "write JSON here"); };
  std::function<int(std::ostream&)> action;

  auto* reduce = app.add_subcommand("reduce", "free and cyclic reduction");
  add_rank(reduce);
  add_out(reduce);
  reduce->add_flag("--cyclic", o.cyclic, "print the cyclic core and conjugator");
  reduce->add_option("word", o.word, "word")->required();
  reduce->callback([&] { action = [&](std::ostream& s) { return run_reduce(o, s); }; });

  auto* classify_cmd = app.add_subcommand("classify", "primitive / simple / filling verdict");
  add_rank(classify_cmd);
  add_out(classify_cmd);
  classify_cmd->add_option("word", o.word, "word")->required();
  classify_cmd->callback([&] { action = [&](std::ostream& s) { return run_classify(o, s); }; });

  auto* minimize = app.add_subcommand("minimize", "Whitehead descent to minimal cyclic length");
  add_rank(minimize);
  add_out(minimize);
  minimize->add_option("word", o.word, "word")->required();
  minimize->callback([&] { action = [&](std::ostream& s) { return run_minimize(o, s); }; });

  auto* index = app.add_subcommand("index", "b-index [w]_b");
  add_rank(index);
  add_out(index);
  index->add_option("--b", o.b, "cyclically reduced axis word")->required();
  index->add_flag("--geometric", o.geometric, "also compute the index from the Cayley tree");
  index->add_option("word", o.word, "word")->required();
  index->callback([&] { action = [&](std::ostream& s) { return run_index(o, s); }; });

  auto* factor = app.add_subcommand("factor-invariant", "[A]_b for A = theta(<x_i : i in subset>)");
  add_rank(factor);
  add_out(factor);
  factor->add_option("--b", o.b, "minimal filling word (default: surface boundary word)");
  factor->add_option("--theta", o.theta, "images of the generators under theta")->delimiter(',');
  factor->add_option("--subset", o.subset, "basis indices, 1-based")->delimiter(',');
  factor->add_flag("--dot", o.dot, "print the core graph in DOT format");
  factor->callback([&] { action = [&](std::ostream& s) { return run_factor_invariant(o, s); }; });

  auto* farey = app.add_subcommand("farey-dist", "distance in the Farey graph");
  add_out(farey);
  farey->add_option("slopes", o.slopes, "two slopes p/q")->required()->expected(2);
  farey->callback([&] { action = [&](std::ostream& s) { return run_farey(o, s); }; });

  auto* experiment = app.add_subcommand("experiment", "run a named experiment");
  add_rank(experiment);
  add_out(experiment);
  experiment->add_option("name", o.experiment, "experiment name")
      ->required()
      ->check(CLI::IsMember({"lipschitz", "cancellation", "fzero-fiber", "basis-change", "quasiflat",
                             "boundary-length", "displacement-stability"}));
  experiment->add_option("--b", o.b, "minimal filling word (default: surface boundary word)");
  experiment->add_option("--trials", o.trials, "number of trials");
  experiment->add_option("--seed", o.seed, "random seed");
  experiment->add_option("--csv", o.csv_path, "write per-record CSV here");
  experiment->add_option("--radius", o.radius, "grid radius")->check(CLI::Range(0, 64));
  experiment->add_option("--a", o.a, "primitive element for fzero-fiber");
  experiment->add_option("--k-lo", o.k_lo, "first k for fzero-fiber");
  experiment->add_option("--k-hi", o.k_hi, "last k for fzero-fiber");
  experiment->add_option("--ranks", o.ranks, "ranks for boundary-length")->delimiter(',');
  experiment->callback([&] { action = [&](std::ostream& s) { return run_experiment(o, s); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (!action) return 2;
  try {
    return action(out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace ffg::cli
