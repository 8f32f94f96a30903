#include "ffg/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ffg/core_graph.hpp"
#include "ffg/error.hpp"
#include "ffg/farey.hpp"

namespace ffg {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31U);
}

long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

Json word_list(const std::vector<Word>& words) {
  Json out = Json::array();
  for (const Word& w : words) out.push_back(w.str());
  return out;
}

Automorphism conjugation_power(const Word& b, long k) { return Automorphism::inner(b.power(k)); }

Json base_parameters(const MinimalFillingWord& b, std::uint64_t seed) {
  return Json{{"N", b.rank()}, {"b", b.word().str()}, {"seed", seed}};
}

// Smallest distance between a value known to lie in [v, v + slack] for each
// side.
long interval_gap(const FactorInvariant& a, const FactorInvariant& b) {
  const long a_hi = a.value + (a.tight ? 0 : 1);
  const long b_hi = b.value + (b.tight ? 0 : 1);
  return std::max({0L, a.value - b_hi, b.value - a_hi});
}

}  // namespace

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL)));
}

MinimalFillingWord default_boundary(int rank) {
  return MinimalFillingWord::verify(surface_boundary_word(rank));
}

ExperimentReport exp_lipschitz(const MinimalFillingWord& b, std::size_t trials, std::uint64_t seed) {
  const int n = b.rank();
  const long bound = n == 2 ? 2 : 1;
  ExperimentReport report;
  report.name = "lipschitz";
  report.parameters = base_parameters(b, seed);
  report.parameters["trials"] = trials;
  report.parameters["bound"] = bound;

  long slack_trials = 0;
  long strict_violations = 0;
  long widened_violations = 0;
  long errors = 0;
  long max_delta = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    const int chain_length = static_cast<int>(uniform(rng, 0, 4));
    const WhChain chain = random_whitehead_chain(n, chain_length, rng);
    const Word h = random_word(static_cast<std::size_t>(uniform(rng, 0, 3)), n, rng);
    const long k = uniform(rng, -3, 3);
    const Automorphism phi = chain_automorphism(n, chain)
                                 .then(Automorphism::inner(h))
                                 .then(conjugation_power(b.word(), k));
    std::vector<int> small;
    std::vector<int> large;
    if (n == 2) {
      small = {1};
      large = {2};
    } else {
      std::vector<int> all(static_cast<std::size_t>(n));
      std::iota(all.begin(), all.end(), 1);
      std::shuffle(all.begin(), all.end(), rng);
      const auto big = static_cast<std::size_t>(uniform(rng, 2, n - 1));
      const auto little = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(big) - 1));
      large.assign(all.begin(), all.begin() + static_cast<long>(big));
      small.assign(all.begin(), all.begin() + static_cast<long>(little));
    }
    const FreeFactor fa = FreeFactor::standard(n, small).image(phi);
    const FreeFactor fb = FreeFactor::standard(n, large).image(phi);

    Json rec{{"trial", t},
             {"chain_length", chain_length},
             {"conjugator", h.str()},
             {"k", k},
             {"a_generators", word_list(fa.generators())},
             {"b_generators", word_list(fb.generators())},
             {"bound", bound}};
    try {
      const bool adjacent = af_adjacent(fa, fb);
      const FactorInvariant ia = factor_invariant(fa, b);
      const FactorInvariant ib = factor_invariant(fb, b);
      const long delta = std::abs(ia.value - ib.value);
      const bool slack = !ia.tight || !ib.tight;
      const bool violation = !adjacent || (slack ? interval_gap(ia, ib) > bound : delta > bound);
      max_delta = std::max(max_delta, delta);
      slack_trials += slack;
      if (violation) (slack ? widened_violations : strict_violations) += 1;
      rec["adjacent"] = adjacent;
      rec["index_a"] = ia.value;
      rec["index_b"] = ib.value;
      rec["tight_a"] = ia.tight;
      rec["tight_b"] = ib.tight;
      rec["delta"] = delta;
      rec["slack"] = slack;
      rec["violation"] = violation;
    } catch (const DomainError& e) {
      ++errors;
      rec["error"] = e.what();
      rec["violation"] = true;
    }
    report.add(std::move(rec));
  }
  report.summary = {{"max_delta", max_delta},
                    {"strict_violations", strict_violations},
                    {"widened_violations", widened_violations},
                    {"errors", errors}};
  report.caveats = {{"slack_trials", slack_trials}};
  return report;
}

CancellationCheck check_cancellation(const MinimalFillingWord& b, const Word& a) {
  const Word& bw = b.word();
  const std::size_t keep = bw.length() + 1;
  const Word cube = bw.power(3);
  const Word cube_inv = cube.inverse();
  std::vector<Letter> concat(cube.letters().begin(), cube.letters().end());
  concat.insert(concat.end(), a.letters().begin(), a.letters().end());
  concat.insert(concat.end(), cube_inv.letters().begin(), cube_inv.letters().end());
  const Word w = cube * a * cube_inv;
  const auto letters = w.letters();
  const auto k = static_cast<long>(keep);
  CancellationCheck out;
  out.retained = letters.size() >= 2 * keep &&
                 std::equal(concat.begin(), concat.begin() + k, letters.begin()) &&
                 std::equal(concat.end() - k, concat.end(), letters.end() - k);
  out.index = b_index(w, bw);
  out.reduced_length = w.length();
  return out;
}

ExperimentReport exp_cancellation(const MinimalFillingWord& b, std::size_t trials,
                                  std::uint64_t seed) {
  const int n = b.rank();
  const Word& bw = b.word();
  ExperimentReport report;
  report.name = "cancellation";
  report.parameters = base_parameters(b, seed);
  report.parameters["trials"] = trials;
  report.parameters["max_attempts"] = 200;

  long skipped = 0;
  long retention_failures = 0;
  long index_failures = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    std::optional<Word> a;
    int attempts = 0;
    while (!a && attempts < 200) {
      ++attempts;
      const int r = static_cast<int>(uniform(rng, 1, n - 1));
      const FreeFactor f = random_free_factor(n, r, static_cast<int>(uniform(rng, 0, 3)), rng);
      const auto& gens = f.generators();
      const Word g = gens[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(gens.size()) - 1))];
      const Word h = random_word(static_cast<std::size_t>(uniform(rng, 0, 4)), n, rng);
      const Word candidate = g.conjugated_by(h);
      if (b_index(candidate, bw) == 0) a = candidate;
    }
    Json rec{{"trial", t}, {"attempts", attempts}};
    if (!a) {
      ++skipped;
      rec["skipped"] = true;
      rec["violation"] = false;
      report.add(std::move(rec));
      continue;
    }
    const CancellationCheck check = check_cancellation(b, *a);
    const bool retained = check.retained;
    const long index = check.index;
    retention_failures += !retained;
    index_failures += index < 1;
    rec["skipped"] = false;
    rec["a"] = a->str();
    rec["reduced_length"] = check.reduced_length;
    rec["retained"] = retained;
    rec["index"] = index;
    rec["violation"] = !retained || index < 1;
    report.add(std::move(rec));
  }
  report.summary = {{"retention_failures", retention_failures},
                    {"index_failures", index_failures},
                    {"tested", static_cast<long>(trials) - skipped}};
  report.caveats = {{"skipped_trials", skipped}};
  return report;
}

ExperimentReport exp_fzero_fiber(const MinimalFillingWord& b, const Word& a, long k_lo, long k_hi) {
  if (a.rank() != b.rank()) throw DomainError("rank mismatch between a and b");
  if (!is_primitive(a)) throw DomainError("zero-fiber experiment needs a primitive element");
  ExperimentReport report;
  report.name = "fzero-fiber";
  report.parameters = {{"N", b.rank()}, {"b", b.word().str()}, {"a", a.str()},
                       {"k_lo", k_lo},  {"k_hi", k_hi}};
  std::map<long, long> first_k;
  Json zero_fiber = Json::array();
  Json values = Json::array();
  long collisions = 0;
  for (long k = k_lo; k <= k_hi; ++k) {
    const long value = b_index(a.conjugated_by(b.word().power(k)), b.word());
    values.push_back(value);
    Json rec{{"k", k}, {"value", value}};
    bool violation = false;
    if (value == 0) {
      zero_fiber.push_back(k);
      violation = zero_fiber.size() > 3;
    } else if (const auto it = first_k.find(value); it != first_k.end()) {
      rec["collides_with"] = it->second;
      violation = true;
      ++collisions;
    } else {
      first_k.emplace(value, k);
    }
    rec["violation"] = violation;
    report.add(std::move(rec));
  }
  report.summary = {{"values", values},
                    {"zero_fiber", zero_fiber},
                    {"zero_fiber_size", zero_fiber.size()},
                    {"collisions", collisions},
                    {"injective_off_zero", collisions == 0}};
  return report;
}

SecondBasis find_second_basis(const MinimalFillingWord& b, std::uint64_t seed, int max_moves) {
  const int n = b.rank();
  const Word& bw = b.word();
  auto rng = trial_rng(seed, 0x5ecULL);
  WhChain chain;
  Word current = bw;
  const auto& moves = whitehead_moves(n);
  const int count = static_cast<int>(uniform(rng, 1, std::max(1, max_moves)));
  for (int step = 0; step < count; ++step) {
    std::vector<const WhAutomorphism*> neutral;
    for (const auto& m : moves) {
      if (m(current).length() == bw.length()) neutral.push_back(&m);
    }
    if (neutral.empty()) break;
    const auto pick = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(neutral.size()) - 1));
    chain.push_back(*neutral[pick]);
    current = chain.back()(current);
  }
  if (chain.empty()) throw DomainError("no length-neutral Whitehead move on b: no second basis found");
  const auto perms = elementary_permutations(n);
  const long extra = uniform(rng, 0, 2);
  for (long i = 0; i < extra; ++i) {
    chain.push_back(perms[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(perms.size()) - 1))]);
  }
  SecondBasis out{chain, chain_automorphism(n, chain), apply_chain(chain, bw)};
  const auto& images = out.beta.images();
  if (std::all_of(images.begin(), images.end(), [](const Word& w) { return w.length() == 1; }))
    throw DomainError("second basis search produced a signed permutation");
  if (out.rewritten_b.length() != bw.length())
    throw std::logic_error("second basis changed the length of b");
  return out;
}

ExperimentReport exp_basis_change(const MinimalFillingWord& b, std::size_t trials,
                                  std::uint64_t seed) {
  return exp_basis_change(b, find_second_basis(b, seed), trials, seed);
}

ExperimentReport exp_basis_change(const MinimalFillingWord& b, const SecondBasis& basis,
                                  std::size_t trials, std::uint64_t seed) {
  const int n = b.rank();
  const MinimalFillingWord bt = MinimalFillingWord::verify(basis.rewritten_b);
  ExperimentReport report;
  report.name = "basis-change";
  report.parameters = base_parameters(b, seed);
  report.parameters["trials"] = trials;
  report.parameters["rewritten_b"] = bt.word().str();
  report.parameters["beta_images"] = word_list(basis.beta.images());
  Json chain = Json::array();
  for (const auto& m : basis.chain) chain.push_back(m.describe());
  report.parameters["beta_chain"] = chain;

  long running = 0;
  long running_widened = 0;
  long slack_trials = 0;
  long last_increase = -1;
  Json checkpoints = Json::object();
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    const int r = static_cast<int>(uniform(rng, 1, n - 1));
    FreeFactor a = random_free_factor(n, r, static_cast<int>(uniform(rng, 0, 3)), rng);
    const Word h = random_word(static_cast<std::size_t>(uniform(rng, 0, 3)), n, rng);
    a = a.image(Automorphism::inner(h).then(conjugation_power(b.word(), uniform(rng, -3, 3))));
    const FactorInvariant is = factor_invariant(a, b);
    const FactorInvariant it = factor_invariant(a.image(basis.beta), bt);
    const long diff = std::abs(is.value - it.value);
    const bool slack = !is.tight || !it.tight;
    slack_trials += slack;
    if (diff > running) {
      running = diff;
      last_increase = static_cast<long>(t);
    }
    running_widened = std::max(running_widened, diff + (slack ? 1 : 0));
    const std::size_t done = t + 1;
    if (done == 10 || done == 100 || done == 1000 || done == 10000 || done == trials)
      checkpoints[std::to_string(done)] = running;
    report.add({{"trial", t},
                {"generators", word_list(a.generators())},
                {"index_s", is.value},
                {"index_t", it.value},
                {"tight_s", is.tight},
                {"tight_t", it.tight},
                {"diff", diff},
                {"running_max", running},
                {"violation", false}});
  }
  const bool stable = trials >= 100 && checkpoints.contains("100") &&
                      checkpoints["100"] == running;
  report.summary = {{"K", running},
                    {"K_widened", running_widened},
                    {"running_max_at", checkpoints},
                    {"last_increase_trial", last_increase},
                    {"stable_from_100", stable}};
  report.caveats = {{"slack_trials", slack_trials}};
  return report;
}

BoundaryAutomorphism build_boundary_pA() {
  const Word x = parse_word("x", 2);
  const Word y = parse_word("y", 2);
  const Word b = parse_word("xyXY", 2);
  const Automorphism t1({x * y, y});
  const Automorphism t2({x, y * x});
  const Automorphism t1_inv({x * y.inverse(), y});
  const Automorphism t2_inv({x, y * x.inverse()});
  // psi = t1 o t2: apply t2 first.
  const Automorphism psi = t2.then(t1);
  const Automorphism psi_inv = t1_inv.then(t2_inv);
  const Automorphism id = Automorphism::identity(2);

  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("boundary automorphism check failed: ") + what);
  };
  require(psi == Automorphism({x * y, y * x * y}), "psi images are xy, yxy");
  require(t1(b) == b && t2(b) == b, "twists fix b");
  require(t1.then(t1_inv) == id && t2.then(t2_inv) == id, "twist inverses");
  require(psi.then(psi_inv) == id && psi_inv.then(psi) == id, "psi inverse");

  BoundaryAutomorphism out{psi, psi_inv, b};
  out.fixes_b = psi(b) == b;
  for (int j = 0; j < 2; ++j) {
    const auto sums = psi.image(j + 1).exponent_sums();
    for (int i = 0; i < 2; ++i) out.homology[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = sums[static_cast<std::size_t>(i)];
  }
  out.is_pA = std::abs(out.trace()) > 2 && std::abs(out.determinant()) == 1;
  require(out.fixes_b, "psi fixes b");
  require(out.is_pA, "homology trace exceeds 2");
  return out;
}

std::optional<std::vector<Word>> af2_path(const Word& from, const Word& complement,
                                          const Word& to, int max_edges, int exponent_bound) {
  if (from.rank() != 2 || complement.rank() != 2 || to.rank() != 2)
    throw DomainError("AF_2 paths live in F_2");
  if (!is_basis_pair(from, complement)) throw DomainError("start pair is not a basis");
  auto key = [](const Word& w) { return std::min(w, w.inverse()); };
  struct State {
    Word u;
    Word c;
    int depth;
    int parent;
  };
  std::vector<State> states{{from, complement, 0, -1}};
  std::set<Word> seen{key(from)};
  auto unwind = [&](int i) {
    std::vector<Word> path;
    for (; i >= 0; i = states[static_cast<std::size_t>(i)].parent)
      path.push_back(states[static_cast<std::size_t>(i)].u);
    std::reverse(path.begin(), path.end());
    return path;
  };
  if (key(from) == key(to)) return std::vector<Word>{from};
  for (std::size_t head = 0; head < states.size(); ++head) {
    const State s = states[head];
    if (s.depth >= max_edges) break;
    if (is_basis_pair(s.u, to)) {
      auto path = unwind(static_cast<int>(head));
      path.push_back(to);
      return path;
    }
    if (s.depth + 1 >= max_edges) continue;
    for (int i = -exponent_bound; i <= exponent_bound; ++i) {
      for (int j = -exponent_bound; j <= exponent_bound; ++j) {
        const Word w = s.u.power(i) * s.c * s.u.power(j);
        if (!seen.insert(key(w)).second) continue;
        if (!is_basis_pair(s.u, w)) throw std::logic_error("path step is not an AF_2 edge");
        states.push_back({w, s.u, s.depth + 1, static_cast<int>(head)});
      }
    }
  }
  return std::nullopt;
}

namespace {

struct GridPoint {
  long r;
  long k;
  Word generator;
  long index;
  Slope slope;
};

struct Grid {
  int radius;
  std::vector<GridPoint> points;  // r-major, then k

  const GridPoint& at(long r, long k) const {
    const long side = 2L * radius + 1;
    return points[static_cast<std::size_t>((r + radius) * side + (k + radius))];
  }
};

Grid build_grid(int radius, const BoundaryAutomorphism& psi, const MinimalFillingWord& b) {
  if (radius < 0) throw DomainError("grid radius must be nonnegative");
  const Word x = parse_word("x", 2);
  std::map<long, Word> orbit{{0, x}};
  std::map<long, Slope> slopes;
  for (long r = 1; r <= radius; ++r) {
    orbit.emplace(r, psi.phi(orbit.at(r - 1)));
    orbit.emplace(-r, psi.inverse(orbit.at(1 - r)));
  }
  for (const auto& [r, u] : orbit) slopes.emplace(r, slope_of(u));
  const FreeFactor base = FreeFactor::standard(2, {1});
  Automorphism power = Automorphism::identity(2);
  std::map<long, Automorphism> psi_powers{{0, power}};
  for (long r = 1; r <= radius; ++r) {
    psi_powers.emplace(r, psi_powers.at(r - 1).then(psi.phi));
    psi_powers.emplace(-r, psi_powers.at(1 - r).then(psi.inverse));
  }
  Grid grid{radius, {}};
  for (long r = -radius; r <= radius; ++r) {
    for (long k = -radius; k <= radius; ++k) {
      const FreeFactor a = base.image(conjugation_power(b.word(), k).then(psi_powers.at(r)));
      const FactorInvariant inv = factor_invariant(a, b);
      if (!inv.tight) throw std::logic_error("cyclic factor invariant must be tight");
      grid.points.push_back({r, k, a.generators().front(), inv.value, slopes.at(r)});
    }
  }
  return grid;
}

long ceil_half(long v) { return (v + 1) / 2; }

}  // namespace

ExperimentReport exp_quasiflat(int radius, std::uint64_t seed) {
  const BoundaryAutomorphism psi = build_boundary_pA();
  const MinimalFillingWord b = MinimalFillingWord::verify(psi.b);
  const Grid grid = build_grid(radius, psi, b);
  const Word x = parse_word("x", 2);
  const Word y = parse_word("y", 2);

  ExperimentReport report;
  report.name = "quasiflat";
  report.parameters = {{"N", 2},           {"b", b.word().str()},      {"seed", seed},
                       {"radius", radius}, {"psi", word_list(psi.phi.images())}, {"A0", "x"}};

  // Upper bound constant from witnessed paths.
  std::optional<long> c0;
  Json witnesses = Json::object();
  {
    const auto p_psi = af2_path(x, y, psi.phi(x), 4);
    const auto p_adb = af2_path(x, y, x.conjugated_by(b.word()), 4);
    if (p_psi) witnesses["psi"] = word_list(*p_psi);
    if (p_adb) witnesses["ad_b"] = word_list(*p_adb);
    if (p_psi && p_adb)
      c0 = static_cast<long>(std::max(p_psi->size(), p_adb->size())) - 1;
  }

  // Measured analog of M_A for the pure ad_b check.
  long m_a = 0;
  for (const auto& p : grid.points) m_a = std::max(m_a, std::abs(p.index - grid.at(0, p.k).index));

  struct Pair {
    std::size_t i;
    std::size_t j;
    long distance;
    long lower;
  };
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < grid.points.size(); ++i) {
    for (std::size_t j = i + 1; j < grid.points.size(); ++j) {
      const auto& p = grid.points[i];
      const auto& q = grid.points[j];
      const long d = std::abs(p.r - q.r) + std::abs(p.k - q.k);
      const long lower =
          std::max(ceil_half(std::abs(p.index - q.index)), farey_distance(p.slope, q.slope));
      pairs.push_back({i, j, d, lower});
    }
  }

  // Least squares on the lower envelope E(D) = min lower over pairs at
  // distance D, for D <= 3R where every direction (dr, dk) still fits in the
  // grid; C is the largest shortfall of the fitted line on the envelope. The
  // fitted (c, C) are then checked against every pair. A fit on the diagonals
  // alone is kept for reference: the bound grows like max(dr, dk/2), so the
  // diagonals overestimate the slope.
  auto least_squares = [](const std::vector<std::pair<double, double>>& data) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [dx, dy] : data) {
      sx += dx;
      sy += dy;
      sxx += dx * dx;
      sxy += dx * dy;
    }
    const double m = static_cast<double>(data.size());
    const double denom = m * sxx - sx * sx;
    const double slope = (data.size() >= 2 && denom != 0.0) ? (m * sxy - sx * sy) / denom : 0.0;
    double shortfall = 0.0;
    for (const auto& [dx, dy] : data) shortfall = std::max(shortfall, slope * dx - dy);
    return std::pair{slope, shortfall};
  };
  const long window = 3L * radius;
  std::map<long, long> envelope;
  std::vector<std::pair<double, double>> diagonal;
  for (const auto& pr : pairs) {
    if (pr.distance <= window) {
      const auto it = envelope.find(pr.distance);
      if (it == envelope.end()) {
        envelope.emplace(pr.distance, pr.lower);
      } else {
        it->second = std::min(it->second, pr.lower);
      }
    }
    const auto& p = grid.points[pr.i];
    const auto& q = grid.points[pr.j];
    if (std::abs(p.r - q.r) == std::abs(p.k - q.k))
      diagonal.emplace_back(static_cast<double>(pr.distance), static_cast<double>(pr.lower));
  }
  std::vector<std::pair<double, double>> envelope_data;
  Json envelope_json = Json::object();
  for (const auto& [d, l] : envelope) {
    envelope_data.emplace_back(static_cast<double>(d), static_cast<double>(l));
    envelope_json[std::to_string(d)] = l;
  }
  const auto [c, intercept_c] = least_squares(envelope_data);
  const double diagonal_c = least_squares(diagonal).first;
  long diagonal_below = 0;

  long below_fit = 0;
  long above_upper = 0;
  long adb_breaches = 0;
  long max_lower = 0;
  double worst_residual = 0.0;
  for (const auto& pr : pairs) {
    const auto& p = grid.points[pr.i];
    const auto& q = grid.points[pr.j];
    const long dr = std::abs(p.r - q.r);
    const long dk = std::abs(p.k - q.k);
    const double residual = c * static_cast<double>(pr.distance) - static_cast<double>(pr.lower);
    worst_residual = std::max(worst_residual, residual);
    diagonal_below += diagonal_c * static_cast<double>(pr.distance) - static_cast<double>(pr.lower) >
                      intercept_c + 1e-9;
    // Rounding slack on the double comparison only.
    const bool below = residual > intercept_c + 1e-9;
    const bool over = c0 && pr.lower > pr.distance * *c0;
    const bool adb = dr == 0 && pr.lower < ceil_half(std::max(0L, dk - 2 - 2 * m_a));
    below_fit += below;
    above_upper += over;
    adb_breaches += adb;
    max_lower = std::max(max_lower, pr.lower);
    Json rec{{"r1", p.r},
             {"k1", p.k},
             {"r2", q.r},
             {"k2", q.k},
             {"distance", pr.distance},
             {"index_gap", std::abs(p.index - q.index)},
             {"farey", farey_distance(p.slope, q.slope)},
             {"lower", pr.lower},
             {"below_fit", below},
             {"violation", below || over || adb}};
    if (c0) rec["upper"] = pr.distance * *c0;
    report.add(std::move(rec));
  }

  Json pure_psi = Json::array();
  bool increasing = true;
  long prev = 0;
  const Slope s0 = grid.at(0, 0).slope;
  for (long m = 1; m <= radius; ++m) {
    const long d = farey_distance(s0, grid.at(m, 0).slope);
    pure_psi.push_back(d);
    if (d <= prev) increasing = false;
    prev = d;
  }
  if (!increasing) ++report.violations;

  Json points = Json::array();
  for (const auto& p : grid.points) {
    points.push_back({{"r", p.r},
                      {"k", p.k},
                      {"index", p.index},
                      {"slope", p.slope.str()},
                      {"generator_length", p.generator.length()}});
  }
  report.summary = {{"c0", c0 ? Json(*c0) : Json(nullptr)},
                    {"upper_available", c0.has_value()},
                    {"path_witnesses", witnesses},
                    {"fit_c", c},
                    {"fit_C", intercept_c},
                    {"fit_window", window},
                    {"envelope", envelope_json},
                    {"diagonal_fit_c", diagonal_c},
                    {"diagonal_fit_below", diagonal_below},
                    {"fit_positive", c > 0.0},
                    {"worst_residual", worst_residual},
                    {"below_fit", below_fit},
                    {"lower_above_upper", above_upper},
                    {"ad_b_breaches", adb_breaches},
                    {"M", m_a},
                    {"max_lower", max_lower},
                    {"pure_psi_farey", pure_psi},
                    {"pure_psi_increasing", increasing},
                    {"grid", points}};
  if (c <= 0.0) ++report.violations;
  report.caveats = {{"slack_points", 0}};
  return report;
}

ExperimentReport exp_boundary_length(const std::vector<int>& ranks) {
  ExperimentReport report;
  report.name = "boundary-length";
  report.parameters = {{"ranks", ranks}};
  for (const int n : ranks) {
    const Word w = surface_boundary_word(n);
    const Classification c = classify_with_certificate(w);
    const std::size_t length = c.certificate.minimized.length();
    const auto expected = static_cast<std::size_t>(2 * n);
    report.add({{"N", n},
                {"word", w.str()},
                {"minimized", c.certificate.minimized.str()},
                {"minimized_length", length},
                {"expected_length", expected},
                {"verdict", to_string(c.verdict)},
                {"violation", length != expected || c.verdict != WordClass::Filling}});
  }
  return report;
}

ExperimentReport exp_displacement_stability(int radius, std::uint64_t seed) {
  const BoundaryAutomorphism psi = build_boundary_pA();
  const MinimalFillingWord b = MinimalFillingWord::verify(psi.b);
  const Grid grid = build_grid(radius, psi, b);
  ExperimentReport report;
  report.name = "displacement-stability";
  report.parameters = {{"N", 2}, {"b", b.word().str()}, {"seed", seed}, {"radius", radius},
                       {"settle_by", 4}};

  long m_a = 0;
  Json settle = Json::object();
  for (long k = -radius; k <= radius; ++k) {
    for (const long sign : {1L, -1L}) {
      long running = -1;
      long last_rise = 0;
      for (long step = 0; step <= radius; ++step) {
        const long r = sign * step;
        const auto& p = grid.at(r, k);
        const long disp = std::abs(p.index - grid.at(0, k).index);
        m_a = std::max(m_a, disp);
        if (disp > running) {
          running = disp;
          last_rise = step;
        }
        if (sign < 0 && step == 0) continue;
        report.add({{"r", r},
                    {"k", k},
                    {"index", p.index},
                    {"base_index", grid.at(0, k).index},
                    {"displacement", disp},
                    {"running_max", running},
                    {"violation", step > 4 && last_rise == step}});
      }
      settle[std::to_string(k) + (sign > 0 ? "+" : "-")] = last_rise;
    }
  }
  report.summary = {{"M_A", m_a}, {"last_rise", settle}};
  const long at_zero_rise = settle["0+"].get<long>();
  report.summary["k0_settles_by"] = at_zero_rise;
  return report;
}

}  // namespace ffg
