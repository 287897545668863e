#include "tfag/cli/cli.hpp"

#include "tfag/exact/charpoly.hpp"
#include "tfag/exact/primes.hpp"
#include "tfag/factor/factor.hpp"
#include "tfag/groups/groups.hpp"
#include "tfag/groups/iteration.hpp"
#include "tfag/quasi/quasi.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <iostream>
#include <sstream>
#include <thread>

namespace tfag::cli {

namespace {

using json = nlohmann::ordered_json;

// Integers outside the signed 64-bit range are emitted as decimal strings;
// the payload parser reads both forms back.
json enc(const Integer& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

json enc(const Rational& q) {
  if (q.is_integer()) return enc(q.num());
  return json(q.to_string());
}

template <typename T>
json enc(const std::vector<T>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(enc(x));
  return out;
}

template <typename T>
json enc(const Matrix<T>& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(enc(m.row(i)));
  return out;
}

json enc(const RowModule& mod) {
  json out;
  out["p"] = enc(mod.ring().prime());
  out["N"] = mod.ring().precision();
  out["length"] = mod.length();
  out["rows"] = enc(mod.rows());
  out["pivots"] = json::array();
  for (std::size_t i = 0; i < mod.rank(); ++i)
    out["pivots"].push_back({{"column", mod.pivot_cols()[i]}, {"valuation", mod.pivot_vals()[i]}});
  return out;
}

json enc(const IncreasingPresentation& pres) {
  return {{"basis", enc(pres.basis())}, {"alpha", enc(pres.alpha())}, {"stationary", enc(pres.transition())}};
}

struct Options {
  std::vector<std::string> args;
  std::string prime;
  std::string modulus;
  long precision = 64;
  unsigned long stage = 0;
  bool stage_set = false;
  bool verify = false;
  unsigned jobs = 1;
};

Integer require_prime(const Options& o) {
  if (o.prime.empty()) throw UsageError("missing -p <prime>");
  Integer p;
  try {
    p = as_integer(parse_payload(o.prime));
  } catch (const UsageError&) {
    throw UsageError("-p expects an integer");
  }
  if (!is_prime(p)) throw UsageError(o.prime + " is not prime");
  return p;
}

const std::string& arg(const Options& o, std::size_t i, const char* what) {
  if (i >= o.args.size()) throw UsageError(std::string("missing argument: ") + what);
  return o.args[i];
}

void expect_args(const Options& o, std::size_t n) {
  if (o.args.size() > n) throw UsageError("unexpected argument '" + o.args[n] + "'");
}

StationaryPresentation presentation_arg(const Options& o, std::size_t i) {
  return StationaryPresentation(as_int_matrix(parse_payload(arg(o, i, "matrix"))));
}

// Bounded-iteration check that F and z lie in G' and that every f'_i lies
// in <G, z>, i.e. f'_i - c·z is in G for some 0 <= c < order.
bool adjunction_sound(const IncreasingPresentation& before, const RatVector& z, const Adjunction& adj) {
  const StationaryPresentation old_limit = increasing_to_limit(before);
  auto in_group = [](const StationaryPresentation& s, const RatVector& x) {
    return integrality_certificate(s, x, certificate_bound(s, x)).has_value();
  };
  auto in_new = [&](const RatVector& ambient) {
    return in_group(adj.stationary, adj.increasing.to_coordinates(ambient));
  };
  for (std::size_t i = 0; i < before.rank(); ++i)
    if (!in_new(before.basis().row(i))) return false;
  if (!in_new(z)) return false;
  for (std::size_t i = 0; i < adj.increasing.rank(); ++i) {
    const RatVector f = adj.increasing.basis().row(i);
    bool found = false;
    for (Integer c = 0; c < adj.order && !found; ++c) {
      RatVector d(f.size());
      for (std::size_t j = 0; j < f.size(); ++j) d[j] = f[j] - Rational(c) * z[j];
      found = in_group(old_limit, before.to_coordinates(d));
    }
    if (!found) return false;
  }
  return true;
}

json cmd_charpoly(const Options& o) {
  expect_args(o, 1);
  return {{"charpoly", enc(charpoly(as_int_matrix(parse_payload(arg(o, 0, "matrix")))))}};
}

json cmd_divisible(const Options& o) {
  expect_args(o, 1);
  const Integer p = require_prime(o);
  const StationaryPresentation pres = presentation_arg(o, 0);
  const DivisibilityResult d = is_p_divisible(pres, p);
  json out{{"divisible", d.divisible}, {"witness_power", d.witness_power ? json(*d.witness_power) : json(nullptr)}};
  if (o.verify) {
    // G is p-divisible iff every e_i / p lies in G.
    bool all = true;
    const std::size_t r = pres.rank();
    for (std::size_t i = 0; i < r; ++i) {
      RatVector e(r, Rational(0));
      e[i] = Rational(Integer(1), p);
      all = all && integrality_certificate(pres, e, certificate_bound(pres, e)).has_value();
    }
    const bool power = zero_power_witness(pres.matrix(), p, pres.rank()).has_value();
    out["verify"] = {{"power_criterion", power}, {"basis_divisible", all},
                     {"agree", power == d.divisible && all == d.divisible}};
  }
  return out;
}

json cmd_unit_split(const Options& o) {
  expect_args(o, 1);
  const Integer p = require_prime(o);
  const Value payload = parse_payload(arg(o, 0, "matrix or polynomial"));
  if (!payload.is_list() || payload.list().empty()) throw UsageError("expected a matrix or a coefficient list");
  IntVector chi = payload.list().front().is_list() ? charpoly(as_int_matrix(payload)) : as_int_vector(payload);
  const UnitIdealSplit s = hensel_split(chi, p, o.precision);
  json out{{"p", enc(p)},
           {"N", o.precision},
           {"k", s.unit_roots},
           {"chi1", enc(s.chi1.coeffs)},
           {"chi0", enc(s.chi0.coeffs)},
           {"bezout", {{"u", enc(s.u.coeffs)}, {"v", enc(s.v.coeffs)}}}};
  if (o.verify) {
    PadicPoly target{s.ring, {}};
    for (const auto& c : chi) target.coeffs.push_back(s.ring.reduce(c));
    const PadicPoly one{s.ring, {Integer(1)}};
    const bool recon = multiply(s.chi1, s.chi0) == target;
    const bool bez = add(multiply(s.u, s.chi1), multiply(s.v, s.chi0)) == one;
    out["verify"] = {{"reconstruction", recon},
                     {"bezout", bez},
                     {"root_count", unit_root_count(chi, p) == s.unit_roots},
                     {"agree", recon && bez && unit_root_count(chi, p) == s.unit_roots}};
  }
  return out;
}

json cmd_functionals(const Options& o) {
  expect_args(o, 1);
  const Integer p = require_prime(o);
  const StationaryPresentation pres = presentation_arg(o, 0);
  const FunctionalBasis fb = functionals_basis(pres, p, o.precision);
  json out = enc(fb.module);
  out["rank"] = fb.rank();
  if (o.verify) {
    const PadicMatrix a(fb.split.ring, pres.matrix());
    const PadicMatrix annihilator = matrix_poly_eval(fb.split.chi1, a);
    bool kernel = true;
    for (const auto& w : fb.module.rows()) {
      kernel = kernel && annihilator.act_on_row(PadicRowVec(fb.split.ring, w)).is_zero();
    }
    const bool free = fb.module.is_free_of_rank(static_cast<std::size_t>(pro_p_corank(pres, p)));
    out["verify"] = {{"annihilates_chi1", kernel}, {"free_of_corank_rank", free}, {"agree", kernel && free}};
  }
  return out;
}

json cmd_dp(const Options& o) {
  expect_args(o, 3);
  const Integer p = require_prime(o);
  const StationaryPresentation pres = presentation_arg(o, 0);
  const RatVector g = as_rat_vector(parse_payload(arg(o, 1, "g")));
  const RatVector h = as_rat_vector(parse_payload(arg(o, 2, "h")));
  const PadicNorm d = dp_distance(pres, p, o.precision, GroupElement::unchecked(g), GroupElement::unchecked(h));
  json out{{"p", enc(p)}, {"N", o.precision}, {"distance", d.token(p)}};
  if (o.verify) {
    RatVector diff(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) diff[i] = g[i] - h[i];
    const unsigned long bound = metric_bound(pres, diff, o.precision);
    const auto depth = divisibility_depth(pres, diff, p, o.precision, bound);
    if (!depth) throw InvariantError("difference of members has no integral iterate");
    const PadicNorm expected = *depth >= o.precision ? PadicNorm{o.precision, true} : PadicNorm{*depth, false};
    out["verify"] = {{"bound", bound}, {"oracle", expected.token(p)}, {"agree", expected == d}};
  }
  return out;
}

json cmd_member(const Options& o) {
  expect_args(o, 2);
  const StationaryPresentation pres = presentation_arg(o, 0);
  const RatVector v = as_rat_vector(parse_payload(arg(o, 1, "vector")));
  const Membership m = member(pres, v, o.precision);
  json out{{"member", m.member}};
  if (m.member) out["certificate"] = *m.element->cert;
  if (o.verify) {
    const unsigned long bound = certificate_bound(pres, v);
    const bool oracle = integrality_certificate(pres, v, bound).has_value();
    out["verify"] = {{"bound", bound}, {"agree", oracle == m.member}};
  }
  return out;
}

json cmd_corank(const Options& o) {
  expect_args(o, 1);
  const Integer p = require_prime(o);
  const StationaryPresentation pres = presentation_arg(o, 0);
  json out{{"p", enc(p)}, {"corank", pro_p_corank(pres, p)}};
  if (o.verify) {
    const long rank = static_cast<long>(functionals_basis(pres, p, o.precision).rank());
    out["verify"] = {{"functional_rank", rank}, {"agree", rank == pro_p_corank(pres, p)}};
  }
  return out;
}

json cmd_limit_approx(const Options& o) {
  expect_args(o, 1);
  const Integer p = require_prime(o);
  const InductivePrefix prefix(as_matrix_list(parse_payload(arg(o, 0, "matrix list"))));
  const std::size_t stage = o.stage_set ? o.stage : prefix.length();
  json out = enc(limit_prefix_functionals(prefix, p, o.precision, stage));
  out["stage"] = stage;
  return out;
}

json cmd_power_congruence(const Options& o) {
  expect_args(o, 1);
  if (o.modulus.empty()) throw UsageError("missing -m <modulus>");
  const Integer m = as_integer(parse_payload(o.modulus));
  const IntMatrix b = as_int_matrix(parse_payload(arg(o, 0, "matrix")));
  const PowerCongruence pc = power_congruence(b, m);
  json out{{"k", pc.k}, {"l", pc.l}};
  if (o.verify) {
    const IntMatrix diff = b.pow(pc.k) - b.pow(pc.l);
    bool ok = true;
    for (const auto& x : diff.data()) ok = ok && mpz_divisible_p(x.get_mpz_t(), m.get_mpz_t());
    out["verify"] = {{"agree", ok}};
  }
  return out;
}

IncreasingPresentation increasing_arg(const Value& v) {
  if (v.is_object()) return IncreasingPresentation(as_rat_matrix(v.at("basis")), as_rat_matrix(v.at("alpha")));
  return IncreasingPresentation::from_stationary(StationaryPresentation(as_int_matrix(v)));
}

json cmd_adjoin(const Options& o) {
  expect_args(o, 2);
  const IncreasingPresentation pres = increasing_arg(parse_payload(arg(o, 0, "presentation")));
  const RatVector z = as_rat_vector(parse_payload(arg(o, 1, "vector")));
  const Adjunction adj = adjoin_element(pres, z);
  json out = enc(adj.increasing);
  out["order"] = enc(adj.order);
  out["k"] = adj.k;
  out["congruence"] = adj.congruence ? json{{"k", adj.congruence->k}, {"l", adj.congruence->l}} : json(nullptr);
  out["rebased"] = adj.rebased;
  if (o.verify) out["verify"] = {{"agree", adjunction_sound(pres, z, adj)}};
  return out;
}

json cmd_quasi_rebuild(const Options& o) {
  if (o.args.size() < 2) throw UsageError("usage: quasi-rebuild <H> <quasi-data> <reps...>");
  const StationaryPresentation h = presentation_arg(o, 0);
  const Value data = parse_payload(o.args[1]);
  const QuasiIsoData q(as_integer(data.at("n")), as_rat_matrix(data.at("alpha")), as_rat_matrix(data.at("beta")));
  std::vector<RatVector> reps;
  for (std::size_t i = 2; i < o.args.size(); ++i) reps.push_back(as_rat_vector(parse_payload(o.args[i])));
  const QuasiRebuild rebuilt = quasi_to_stationary(h, q, reps);
  json out = enc(rebuilt.increasing);
  out["steps"] = json::array();
  for (const auto& s : rebuilt.steps)
    out["steps"].push_back({{"order", enc(s.order)}, {"k", s.k}, {"rebased", s.rebased}});
  return out;
}

using Handler = json (*)(const Options&);

struct Command {
  const char* name;
  const char* help;
  Handler fn;
};

constexpr Command kCommands[] = {
    {"charpoly", "characteristic polynomial, leading coefficient first", cmd_charpoly},
    {"divisible", "is the stationary group p-divisible", cmd_divisible},
    {"unit-split", "unit/ideal root factorization mod p^N", cmd_unit_split},
    {"functionals", "Howell basis of the p-adic functionals mod p^N", cmd_functionals},
    {"dp", "p-adic divisibility distance between two members", cmd_dp},
    {"member", "membership test with certificate", cmd_member},
    {"corank", "pro-p corank", cmd_corank},
    {"limit-approx", "stage-n approximation of the functionals of an inductive limit", cmd_limit_approx},
    {"power-congruence", "first collision B^k = B^l mod m", cmd_power_congruence},
    {"adjoin", "stationary presentation of <G, z>", cmd_adjoin},
    {"quasi-rebuild", "stationary presentation from a quasi-isomorphic H", cmd_quasi_rebuild},
};

json error_doc(const Error& e) { return {{"error", {{"kind", e.kind()}, {"message", e.what()}}}}; }

int run_batch(unsigned jobs, std::istream& in, std::ostream& out, std::ostream& err);

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computations on torsion-free abelian groups of finite rank", "tfag"};
  app.require_subcommand(1, 1);
  Options o;
  o.precision = default_precision();
  app.add_option("-p,--prime", o.prime, "prime p");
  app.add_option("-N,--precision", o.precision, "p-adic precision N")->check(CLI::Range(1L, 4096L));
  app.add_option("-n,--stage", o.stage, "prefix stage")->each([&](const std::string&) { o.stage_set = true; });
  app.add_option("-m,--modulus", o.modulus, "modulus m");
  app.add_flag("--verify", o.verify, "run the oracle cross-check");
  app.fallthrough();

  const Command* chosen = nullptr;
  for (const auto& c : kCommands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->fallthrough();
    sub->add_option("payloads", o.args, "matrices, vectors, presentations");
    sub->callback([&chosen, &c] { chosen = &c; });
  }
  CLI::App* batch = app.add_subcommand("batch", "one JSON argument array per input line");
  batch->add_option("-j,--jobs", o.jobs, "worker threads")->check(CLI::Range(1U, 256U));

  // CLI11 reads "[a,b]" as a list of values; a leading space keeps bracketed
  // payloads whole (the payload parser skips it).
  std::vector<std::string> reversed;
  for (auto it = args.rbegin(); it != args.rend(); ++it)
    reversed.push_back(!it->empty() && it->front() == '[' ? " " + *it : *it);
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }
  if (batch->parsed()) return run_batch(o.jobs, in, out, err);

  try {
    const json doc = chosen->fn(o);
    out << doc.dump() << '\n';
    return 0;
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    out << error_doc(e).dump() << '\n';
    return exit_code(e);
  }
}

int run_batch(unsigned jobs, std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<std::vector<std::string>> specs;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      specs.push_back(json::parse(line).get<std::vector<std::string>>());
    } catch (const json::exception& e) {
      err << "batch line " << specs.size() + 1 << ": " << e.what() << '\n';
      return 2;
    }
  }
  struct Result {
    int code = 0;
    std::string out, err;
  };
  std::vector<Result> results(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      if (!specs[i].empty() && specs[i].front() == "batch") {
        results[i] = {2, "", "nested batch is not allowed\n"};
        continue;
      }
      std::istringstream none;
      std::ostringstream o, e;
      results[i].code = dispatch(specs[i], none, o, e);
      results[i].out = o.str();
      results[i].err = e.str();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int worst = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const Result& r = results[i];
    json doc{{"job", i}, {"exit", r.code}};
    doc["result"] = r.out.empty() ? json(nullptr) : json::parse(r.out);
    out << doc.dump() << '\n';
    if (!r.err.empty()) err << "job " << i << ": " << r.err;
    worst = std::max(worst, r.code);
  }
  return worst;
}

} // namespace

int exit_code(const Error& e) { return dynamic_cast<const PrecisionError*>(&e) ? 3 : 1; }

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  return dispatch(args, in, out, err);
}

} // namespace tfag::cli
