#include "indexlab/cli.hpp"

#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "indexlab/io.hpp"
#include "indexlab/morse.hpp"
#include "indexlab/parallel.hpp"
#include "indexlab/prover.hpp"

namespace indexlab::cli {

namespace {

using io::json;

void require_positive(std::int64_t v, const char* name) {
  if (v < 1) throw RangeError(std::string("--") + name + " must be positive");
}

int sphere_dimension(std::int64_t n) {
  if (n < 2) throw RangeError("--n must be at least 2");
  return static_cast<int>(n);
}

int exec(const Iterate& c, std::ostream& out) {
  require_positive(c.mmax, "mmax");
  const auto g = io::model_from_json(io::load_file(c.model_path), "model");
  const IndexProfile profile(g, c.mmax);
  if (c.csv) {
    out << "m,i,nu,epsilon,k0\n";
    for (std::int64_t m = 1; m <= c.mmax; ++m) {
      const auto ct = profile.critical_type(m);
      out << m << ',' << profile.i(m) << ',' << profile.nu(m) << ',' << ct.epsilon << ',' << ct.k0 << '\n';
    }
    return kOk;
  }
  json rows = json::array();
  for (std::int64_t m = 1; m <= c.mmax; ++m) {
    const auto ct = profile.critical_type(m);
    rows.push_back({{"m", m}, {"i", profile.i(m)}, {"nu", profile.nu(m)}, {"epsilon", ct.epsilon}, {"k0", ct.k0}});
  }
  out << json{{"case", to_string(g.ncg_case())},
              {"mean_index", io::to_json(g.mean_index())},
              {"period", g.analytic_period()},
              {"rows", rows}}
             .dump()
      << '\n';
  return kOk;
}

int exec(const Betti& c, std::ostream& out) {
  const int n = sphere_dimension(c.n);
  if (c.qmax < 0) throw RangeError("--qmax must be non-negative");
  const auto table = betti_table(n, c.qmax);
  if (c.csv) {
    out << "q,b\n";
    for (std::size_t q = 0; q < table.values.size(); ++q) out << q << ',' << table.values[q] << '\n';
    return kOk;
  }
  out << json{{"b", table.values}}.dump() << '\n';
  return kOk;
}

int exec(const Series& c, std::ostream& out) {
  const int n = sphere_dimension(c.n);
  if (c.degree < 0) throw RangeError("--degree must be non-negative");
  const auto s = poincare_series_truncated(n, c.degree);
  const auto closed = betti_table(n, c.degree);
  const bool match = s.coefficients == closed.values;
  if (c.csv) {
    out << "q,coefficient,betti\n";
    for (std::int64_t q = 0; q <= c.degree; ++q) out << q << ',' << s[q] << ',' << closed.values[q] << '\n';
  } else {
    out << json{{"coefficients", s.coefficients},
                {"matches_betti", match},
                {"euler_limit", io::to_json(euler_limit(n))}}
               .dump()
        << '\n';
  }
  return match ? kOk : kCheckFailed;
}

int exec(const MorseCheck& c, std::ostream& out) {
  if (c.horizon < 0) throw RangeError("--horizon must be non-negative");
  auto set = io::models_from_json(io::load_file(c.models_path));
  if (c.n) {
    if (set.n && *set.n != *c.n) throw InvalidModel("--n disagrees with the models file");
    set.n = sphere_dimension(*c.n);
  }
  if (!set.n) throw InvalidModel("the sphere dimension is unknown: give \"n\" in the file or --n");
  const auto morse = morse_numbers(set.models, c.horizon);
  const auto betti = betti_table(*set.n, c.horizon);
  const auto violations = check_morse_inequalities(morse, betti, c.horizon);
  if (c.csv) {
    out << "q,M,b\n";
    for (std::int64_t q = 0; q <= c.horizon; ++q) out << q << ',' << morse[q] << ',' << betti.values[q] << '\n';
  } else {
    json list = json::array();
    for (const auto& v : violations) list.push_back(io::to_json(v));
    out << json{{"n", *set.n}, {"horizon", c.horizon}, {"M", morse.values}, {"b", betti.values},
                {"violations", list}}
               .dump()
        << '\n';
  }
  return violations.empty() ? kOk : kCheckFailed;
}

int exec(const Identity& c, std::ostream& out) {
  const auto set = io::models_from_json(io::load_file(c.models_path));
  if (!set.n) throw InvalidModel("the models file lists no model and no n");
  const ExactReal lhs = mean_index_identity_lhs(set.models);
  const ExactReal rhs = euler_limit(*set.n);
  const bool holds = lhs == rhs;
  out << json{{"lhs", io::to_json(lhs)}, {"rhs", io::to_json(rhs)}, {"holds", holds}}.dump() << '\n';
  return holds ? kOk : kCheckFailed;
}

int exec(const Prove& c, std::ostream& out) {
  const int n = sphere_dimension(c.n);
  const auto traces = replay(n, c.only);
  bool closed = true;
  for (const auto& t : traces) closed = closed && is_closed(t);
  const json cert = io::certificate(n, traces);
  if (c.json_path) {
    std::ofstream file(*c.json_path);
    if (!file) throw ParseError(*c.json_path, "cannot write file");
    file << cert.dump(2) << '\n';
    out << json{{"n", n}, {"traces", traces.size()}, {"closed", closed}}.dump() << '\n';
  } else {
    out << cert.dump() << '\n';
  }
  return closed ? kOk : kCheckFailed;
}

int exec(const VerifyCertificate& c, std::ostream& out) {
  const auto problems = io::verify_certificate(io::load_file(c.path));
  out << json{{"valid", problems.empty()}, {"problems", problems}}.dump() << '\n';
  return problems.empty() ? kOk : kCheckFailed;
}

}  // namespace

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  configure_threads();
  try {
    return std::visit([&](const auto& c) { return exec(c, out); }, cmd);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Index iteration and Morse inequality checks for closed geodesics on spheres"};
  app.require_subcommand(1);

  Iterate iterate;
  auto* it = app.add_subcommand("iterate", "Iterate indices and critical types of one model");
  it->add_option("--model", iterate.model_path, "Model JSON file")->required();
  it->add_option("--mmax", iterate.mmax, "Last iterate");
  it->add_flag("--csv", iterate.csv, "Emit CSV");

  Betti betti;
  auto* bt = app.add_subcommand("betti", "Betti numbers of the free loop space pair of S^n");
  bt->add_option("--n", betti.n, "Sphere dimension")->required();
  bt->add_option("--qmax", betti.qmax, "Largest degree");
  bt->add_flag("--csv", betti.csv, "Emit CSV");

  Series series;
  auto* sr = app.add_subcommand("series", "Poincare series coefficients from the generating function");
  sr->add_option("--n", series.n, "Sphere dimension")->required();
  sr->add_option("--degree", series.degree, "Truncation degree");
  sr->add_flag("--csv", series.csv, "Emit CSV");

  MorseCheck morse;
  int morse_n = 0;
  auto* mc = app.add_subcommand("morse-check", "Morse inequalities for a set of models");
  mc->add_option("--models", morse.models_path, "Models JSON file")->required();
  mc->add_option("--horizon", morse.horizon, "Largest degree checked");
  auto* mc_n = mc->add_option("--n", morse_n, "Sphere dimension when the file has no model");
  mc->add_flag("--csv", morse.csv, "Emit CSV");

  Identity identity;
  auto* id = app.add_subcommand("identity", "Mean index identity for a set of models");
  id->add_option("--models", identity.models_path, "Models JSON file")->required();

  Prove prove;
  std::string prove_case;
  std::string prove_json;
  auto* pv = app.add_subcommand("prove", "Replay the single-geodesic case analysis on S^n");
  pv->add_option("--n", prove.n, "Sphere dimension")->required();
  auto* pv_case = pv->add_option("--case", prove_case, "Only this case (ncg1..ncg5)");
  auto* pv_json = pv->add_option("--json", prove_json, "Write the certificate to this file");

  VerifyCertificate verify;
  auto* vc = app.add_subcommand("verify-cert", "Re-check a proof certificate");
  vc->add_option("--certificate", verify.path, "Certificate JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  Command cmd;
  if (it->parsed()) {
    cmd = iterate;
  } else if (bt->parsed()) {
    cmd = betti;
  } else if (sr->parsed()) {
    cmd = series;
  } else if (mc->parsed()) {
    if (mc_n->count() > 0) morse.n = morse_n;
    cmd = morse;
  } else if (id->parsed()) {
    cmd = identity;
  } else if (pv->parsed()) {
    if (pv_case->count() > 0) {
      try {
        prove.only = parse_ncg_case(prove_case);
      } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
      }
    }
    if (pv_json->count() > 0) prove.json_path = prove_json;
    cmd = prove;
  } else {
    cmd = verify;
  }
  return run(cmd, out, err);
}

}  // namespace indexlab::cli
