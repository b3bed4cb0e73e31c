/*
    Copyright 2026 The corrforms Authors

    Licensed under the Apache License, Version 2.0 (the "License");
    you may not use this file except in compliance with the License.
    You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

    Unless required by applicable law or agreed to in writing, software
    distributed under the License is distributed on an "AS IS" BASIS,
    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
    See the License for the specific language governing permissions and
    limitations under the License.
*/

#include "cli/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cli/json_io.hpp"

namespace corrforms::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Prepared {
  Correspondence c;
  std::optional<DifferentialForm> omega;
};

// Applies the optional coordinate change: sigma -> phi o sigma o phi^-1 and
// omega -> (phi^-1)^* omega, which keeps the semi-invariance ratio.
Prepared prepare(const InputDocument& doc) {
  if (!doc.mobius) return {Correspondence(doc.sigma1, doc.sigma2), doc.omega};
  const MobiusTransform& phi = *doc.mobius;
  Prepared out{Correspondence(mobius_conjugate(doc.sigma1, phi), mobius_conjugate(doc.sigma2, phi)), std::nullopt};
  if (doc.omega) out.omega = pullback(phi.inverse().as_map(), *doc.omega);
  return out;
}

InputDocument load_document(const std::string& path) { return parse_document(parse_json_text(read_file(path), path)); }

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_check(const std::string& file, const std::string& omega_file, std::ostream& out, std::ostream& err) {
  InputDocument doc = load_document(file);
  if (!omega_file.empty()) {
    Json j = parse_json_text(read_file(omega_file), omega_file);
    if (j.is_object() && j.contains("omega")) {
      doc.omega = parse_form(j.at("omega"), doc.field, "/omega");
    } else {
      doc.omega = parse_form(j, doc.field, "");
    }
  }
  if (!doc.omega) throw ParseError(file + ": no form given; add \"omega\" or pass --omega");
  const Prepared prep = prepare(doc);
  const DifferentialForm& omega = *prep.omega;

  const std::optional<Scalar> lambda = semi_invariance_ratio(prep.c, omega);
  Json report;
  report["lambda"] = lambda ? to_json(*lambda) : Json(nullptr);
  report["conductor"] = conductor(omega);
  std::optional<BoundCheck> bound;
  if (lambda && prep.c.d1() > prep.c.d2()) bound = ramification_bound_check(prep.c, omega);
  report["bound"] = bound ? Json(bound->bound.to_string()) : Json(nullptr);
  report["holds"] = bound ? Json(bound->holds) : Json(nullptr);
  report["semi_invariant"] = lambda.has_value();
  report["divisor"] = to_json(divisor_of(omega));
  report["affine_conductor"] = affine_conductor(omega);
  const WeightSumCheck ws = affine_weight_sum_check(omega);
  report["weight_sum"] = Json{{"sum", ws.sum}, {"expected", ws.expected}, {"holds", ws.holds}};
  report["ramification"] = Json{{"sigma1", to_json(ramification_divisor(prep.c.sigma1()))},
                                {"sigma2", to_json(ramification_divisor(prep.c.sigma2()))}};
  emit(out, report);

  if (!lambda) {
    err << "not semi-invariant\n";
  } else {
    err << "semi-invariant with lambda = " << lambda->to_string() << ", conductor " << conductor(omega);
    if (bound) {
      err << (bound->holds ? " <= " : " > ") << bound->bound.to_string();
    } else {
      err << " (bound needs deg sigma1 > deg sigma2)";
    }
    err << '\n';
  }
  return kExitOk;
}

int cmd_detect(const std::string& file, std::ostream& out, std::ostream& err) {
  const Prepared prep = prepare(load_document(file));
  const GroupReport report = find_primitive(prep.c);
  emit(out, to_json(report));
  if (report.primitive) {
    err << "cyclic, primitive " << report.primitive->form.to_string() << " with lambda "
        << report.primitive->lambda.to_string() << '\n';
  } else {
    err << "trivial";
    if (!report.complete) err << " among flat forms of weight 1 and 2 (not a proof: d1 < 14 d2)";
    err << '\n';
  }
  return kExitOk;
}

int cmd_sweep(const std::string& file, std::uint64_t pmin, std::uint64_t pmax, unsigned jobs, std::ostream& out,
              std::ostream& err) {
  if (pmin > pmax) throw ParseError("--pmin must not exceed --pmax");
  if (jobs == 0) throw ParseError("--jobs must be positive");
  const Prepared prep = prepare(load_document(file));
  const SweepReport report = sweep(prep.c, pmin, pmax, jobs);
  for (const SweepEntry& e : report.entries) out << to_json(e).dump() << '\n';
  const SweepSummary s = report.summary();
  out << to_json(s).dump() << '\n';
  err << s.primes << " primes: " << s.skipped << " skipped, " << s.trivial << " trivial, " << s.weight1
      << " weight 1, " << s.weight2 << " weight 2\n";
  return kExitOk;
}

int cmd_decompose(const std::string& file, std::ostream& out, std::ostream& err) {
  const Prepared prep = prepare(load_document(file));
  if (!prep.c.is_polynomial()) throw MathError(ErrorCode::NormalizationRequired, "decompose needs polynomial maps");
  const auto d = decompose_power_pair(prep.c.sigma1().body().num(), prep.c.sigma2().body().num());
  emit(out, to_json(d));
  if (d) {
    err << "sigma = " << d->sigma.to_string() << ", m = " << d->m << ", h = " << d->h << '\n';
  } else {
    err << "no common power structure\n";
  }
  return kExitOk;
}

int cmd_bound(long gx, long gy, long d1, long d2, std::ostream& out) {
  out << Json(genus_conductor_bound(gx, gy, d1, d2).to_string()).dump() << '\n';
  return kExitOk;
}

unsigned default_jobs() {
  const char* env = std::getenv("CORRFORMS_JOBS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || v == 0 || v > 1024) throw ParseError(std::string("CORRFORMS_JOBS=") + env + " is not a positive integer");
  return static_cast<unsigned>(v);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semi-invariant differential forms of polynomial and rational correspondences"};
  app.name("corrforms");
  app.require_subcommand(1);

  std::string file;
  std::string omega_file;

  auto* check = app.add_subcommand("check", "Test a form for semi-invariance and report divisors and bounds");
  check->add_option("file", file, "Input document")->required();
  check->add_option("--omega", omega_file, "File holding the form (overrides the document's omega)");

  auto* detect = app.add_subcommand("detect", "Search for a primitive semi-invariant flat form");
  detect->add_option("file", file, "Input document")->required();

  std::uint64_t pmin = 0;
  std::uint64_t pmax = 0;
  std::optional<unsigned> jobs;
  auto* sweep_cmd = app.add_subcommand("sweep", "Reduce modulo every prime in a range and search each reduction");
  sweep_cmd->add_option("file", file, "Input document over Q")->required();
  sweep_cmd->add_option("--pmin", pmin, "Lower end of the prime range")->required();
  sweep_cmd->add_option("--pmax", pmax, "Upper end of the prime range")->required();
  sweep_cmd->add_option("--jobs", jobs, "Worker threads (default: CORRFORMS_JOBS or 1)");

  auto* decompose = app.add_subcommand("decompose", "Recover sigma1 = l1 s^m, sigma2 = l2 s^h");
  decompose->add_option("file", file, "Input document over Q")->required();

  long gx = 0, gy = 0, d1 = 0, d2 = 0;
  auto* bound = app.add_subcommand("bound", "Genus-only conductor bound for unequal degrees");
  bound->add_option("--gx", gx, "Genus of the source curve")->required();
  bound->add_option("--gy", gy, "Genus of the target curve")->required();
  bound->add_option("--d1", d1, "Degree of the first map")->required();
  bound->add_option("--d2", d2, "Degree of the second map")->required();

  auto* gen = app.add_subcommand("gen", "Emit an input document from a generator family");
  gen->require_subcommand(1);
  std::string sigma_text;
  unsigned m = 0, h = 0;
  auto* gen_mult = gen->add_subcommand("multiplicative", "(s^m, s^h) for a polynomial s");
  gen_mult->set_help_flag("--help", "Print this help message and exit");
  gen_mult->add_option("--sigma", sigma_text, "Coefficient array of s, e.g. '[\"1\",\"0\",\"1\"]'")->required();
  gen_mult->add_option("--m", m, "Exponent of the first map")->required();
  gen_mult->add_option("--h", h, "Exponent of the second map")->required();
  auto* gen_mono = gen->add_subcommand("monomial", "(t^m, t^h)");
  gen_mono->set_help_flag("--help", "Print this help message and exit");
  gen_mono->add_option("--m", m, "Exponent of the first map")->required();
  gen_mono->add_option("--h", h, "Exponent of the second map")->required();
  unsigned cd1 = 0, cd2 = 0;
  auto* gen_cheb = gen->add_subcommand("chebyshev", "(T_d1, T_d2)");
  gen_cheb->add_option("--d1", cd1, "Degree of the first map")->required();
  gen_cheb->add_option("--d2", cd2, "Degree of the second map")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(file, omega_file, out, err);
    if (detect->parsed()) return cmd_detect(file, out, err);
    if (sweep_cmd->parsed()) return cmd_sweep(file, pmin, pmax, jobs ? *jobs : default_jobs(), out, err);
    if (decompose->parsed()) return cmd_decompose(file, out, err);
    if (bound->parsed()) return cmd_bound(gx, gy, d1, d2, out);
    if (gen_mult->parsed()) {
      const Field q = Field::rationals();
      const Polynomial sigma = parse_polynomial(parse_json_text(sigma_text, "--sigma"), q, "--sigma");
      emit(out, document_json(gen_multiplicative_pair(sigma, m, h)));
      return kExitOk;
    }
    if (gen_mono->parsed()) {
      emit(out, document_json(gen_multiplicative_pair(Polynomial::variable(Field::rationals()), m, h)));
      return kExitOk;
    }
    if (gen_cheb->parsed()) {
      emit(out, document_json(Correspondence(gen_chebyshev(cd1), gen_chebyshev(cd2))));
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const MathError& e) {
    err << "error: " << e.what() << '\n';
    return kExitMath;
  }
  err << "usage error: no command\n";
  return kExitUsage;
}

}  // namespace corrforms::cli
