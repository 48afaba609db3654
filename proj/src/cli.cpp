#include "zzosp/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "zzosp/algebras.hpp"
#include "zzosp/parastat.hpp"

namespace zzosp::cli {

std::string to_string(Subcommand s) {
  switch (s) {
    case Subcommand::basis: return "basis";
    case Subcommand::dims: return "dims";
    case Subcommand::check_osp: return "check-osp";
    case Subcommand::check_jacobi: return "check-jacobi";
    case Subcommand::check_relations: return "check-relations";
    case Subcommand::report: return "report";
  }
  return "?";
}

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool relations_apply(const AlgebraSpec& s) {
  if (s.family == Family::ospB) return s.m() + s.n() > 0;
  return s.family == Family::sl && s.m1 == 1 && s.m2 == 0 && s.n() > 0;
}

void validate(const RunConfig& config) {
  config.spec.validate();
  const std::size_t size = config.spec.matrix_size();
  if (size > kMaxDeskSize && !config.force) {
    throw UsageError("matrix size " + std::to_string(size) + " exceeds " + std::to_string(kMaxDeskSize) +
                     "; pass --force to run anyway");
  }
  if (config.subcommand == Subcommand::check_relations && !relations_apply(config.spec)) {
    throw UsageError("check-relations needs ospB with m1+m2+n1+n2 >= 1 or sl(1,0|n1,n2) with n1+n2 >= 1, got " +
                     config.spec.to_string());
  }
}

/// Basis the identity checks run over.
Basis working_basis(const AlgebraSpec& spec) {
  return spec.family == Family::gl ? elementary_basis(spec) : kernel_basis(spec);
}

struct Dims {
  std::size_t computed;
  std::size_t expected;
};

Dims compute_dims(const AlgebraSpec& spec) {
  const std::size_t size = spec.matrix_size();
  switch (spec.family) {
    case Family::gl: return {elementary_basis(spec).size(), size * size};
    case Family::sl: return {kernel_basis(spec).size(), size * size - 1};
    default: return {kernel_basis(spec).size(), expected_dim(spec)};
  }
}

CheckReport dimension_check(const AlgebraSpec& spec) {
  CheckReport r;
  r.check = "dimension";
  r.spec = spec;
  const Dims d = compute_dims(spec);
  const GradedMatrix none(spec.signature());
  r.record(d.computed == d.expected, kDefaultMaxCounterexamples,
           {"kernel vs expected", {long(d.computed), long(d.expected)}, {}, none});
  r.details.push_back({"kernel dimension", std::to_string(d.computed), ""});
  r.details.push_back({"expected dimension", std::to_string(d.expected), ""});
  if (spec.is_osp()) {
    const std::size_t s_rank = s_basis(spec).size();
    r.record(s_rank == d.expected, kDefaultMaxCounterexamples,
             {"s rank vs expected", {long(s_rank), long(d.expected)}, {}, none});
    r.details.push_back({"s_ij rank", std::to_string(s_rank), ""});
  }
  r.declared_total = r.total;
  return r;
}

void osp_checks(const RunConfig& c, std::vector<CheckReport>& out) {
  const AlgebraSpec& spec = c.spec;
  const Basis basis = working_basis(spec);
  out.push_back(verify_membership(basis, "membership_basis", c.max_counterexamples));
  if (spec.is_osp()) {
    out.push_back(verify_membership(s_generators(spec), "membership_s", c.max_counterexamples));
    out.push_back(verify_span_equivalence(spec));
  }
  out.push_back(verify_closure(basis, c.jobs, c.max_counterexamples));
  if (spec.family == Family::ospB) out.push_back(verify_block_conditions(spec, c.max_counterexamples));
}

void jacobi_checks(const RunConfig& c, std::vector<CheckReport>& out) {
  const Basis basis = working_basis(c.spec);
  out.push_back(verify_grading(basis, c.max_counterexamples));
  out.push_back(verify_symmetry(basis, c.max_counterexamples));
  out.push_back(verify_jacobi(basis, c.jobs, c.max_counterexamples));
}

void relation_checks(const RunConfig& c, std::vector<CheckReport>& out) {
  const AlgebraSpec& spec = c.spec;
  const std::size_t k = c.max_counterexamples;
  if (spec.family == Family::sl) {
    const GeneratorSet a = palev_ops(spec.n1, spec.n2);
    out.push_back(verify_generator_set(a, k));
    out.push_back(verify_relations(RelationFamily::A_same, a, k));
    out.push_back(verify_relations(RelationFamily::A_mixed, a, k));
    out.push_back(graded_bracket_consistency(a, k));
    return;
  }
  std::vector<GeneratorSet> sets;
  if (spec.m() > 0) {
    sets.push_back(parafermion_ops(spec));
    out.push_back(verify_generator_set(sets.back(), k));
    out.push_back(verify_relations(RelationFamily::FF, sets.back(), k));
  }
  if (spec.n() > 0) {
    sets.push_back(paraboson_ops(spec));
    out.push_back(verify_generator_set(sets.back(), k));
    out.push_back(verify_relations(RelationFamily::BB_same, sets.back(), k));
    out.push_back(verify_relations(RelationFamily::BB_mixed, sets.back(), k));
  }
  if (sets.size() == 2) {
    out.push_back(verify_relations(RelationFamily::PF_family1, sets[0], sets[1], k));
    out.push_back(verify_relations(RelationFamily::PF_family2, sets[0], sets[1], k));
  }
  if (!sets.empty()) out.push_back(graded_bracket_consistency(sets, k));
}

std::string render_text(const Json& doc) {
  std::ostringstream os;
  if (doc.contains("checks")) {
    os << doc["tool"].get<std::string>() << ' ' << doc["version"].get<std::string>() << '\n';
    const Json& s = doc["spec"];
    os << "algebra " << s["family"].get<std::string>() << '(' << s["m1"] << ',' << s["m2"] << '|' << s["n1"] << ','
       << s["n2"] << ")\n";
    for (const auto& c : doc["checks"]) {
      const bool ok = c["failed"].get<std::size_t>() == 0 && c["total"] == c["declared_total"];
      os << (ok ? "PASS " : "FAIL ") << c["check"].get<std::string>() << "  " << c["total"] << " checked, "
         << c["failed"] << " failed\n";
      if (c.contains("details")) {
        for (const auto& d : c["details"]) {
          os << "       " << d["item"].get<std::string>() << ": " << d["status"].get<std::string>() << '\n';
        }
      }
    }
    os << "summary: " << doc["summary"]["total"] << " checked, " << doc["summary"]["failed"] << " failed\n";
  } else if (doc.contains("elements")) {
    os << "dimension " << doc["dimension"] << '\n';
    for (const auto& e : doc["elements"]) {
      os << e["label"].get<std::string>() << ':';
      for (const auto& entry : e["matrix"]["entries"]) {
        const Scalar v = scalar_from_json(Json::array({entry[2], entry[3], entry[4], entry[5]}));
        os << " (" << entry[0] << ',' << entry[1] << ")=" << v;
      }
      os << '\n';
    }
  } else {
    os << "computed " << doc["computed"] << ", expected " << doc["expected"] << ", match "
       << (doc["match"].get<bool>() ? "yes" : "no") << '\n';
  }
  return os.str();
}

}  // namespace

Json run_checks(const RunConfig& config) {
  std::vector<CheckReport> checks;
  const Subcommand sub = config.subcommand;
  if (sub == Subcommand::report) checks.push_back(dimension_check(config.spec));
  if (sub == Subcommand::check_osp || sub == Subcommand::report) osp_checks(config, checks);
  if (sub == Subcommand::check_jacobi || sub == Subcommand::report) jacobi_checks(config, checks);
  if (sub == Subcommand::check_relations || (sub == Subcommand::report && relations_apply(config.spec))) {
    relation_checks(config, checks);
  }

  Json doc;
  doc["tool"] = kToolName;
  doc["version"] = kToolVersion;
  doc["spec"] = spec_to_json(config.spec);
  Json arr = Json::array();
  std::size_t total = 0;
  std::size_t failed = 0;
  for (const auto& c : checks) {
    arr.push_back(report_to_json(c));
    total += c.total;
    // A check that evaluated fewer instances than it declared counts as failed.
    failed += c.failed + (c.total == c.declared_total ? 0 : 1);
  }
  doc["checks"] = std::move(arr);
  doc["summary"] = {{"total", total}, {"failed", failed}};
  return doc;
}

int exit_status(const Json& report) {
  return report["summary"]["failed"].get<std::size_t>() == 0 ? kExitOk : kExitCheckFailed;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Json doc;
  bool ok = true;
  try {
    validate(config);
    switch (config.subcommand) {
      case Subcommand::basis:
        doc = basis_to_json(working_basis(config.spec));
        break;
      case Subcommand::dims: {
        const Dims d = compute_dims(config.spec);
        doc["computed"] = d.computed;
        doc["expected"] = d.expected;
        doc["match"] = d.computed == d.expected;
        ok = d.computed == d.expected;
        break;
      }
      default:
        doc = run_checks(config);
        ok = exit_status(doc) == kExitOk;
        break;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const std::string text = config.format == OutputFormat::json ? doc.dump(2) + "\n" : render_text(doc);
  if (config.output.empty()) {
    out << text;
  } else {
    std::ofstream file(config.output, std::ios::binary | std::ios::trunc);
    file << text;
    file.flush();
    if (!file) {
      err << "error: cannot write " << config.output << '\n';
      return kExitUsage;
    }
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Build Z2xZ2-graded gl/sl/osp matrix algebras and verify their identities exactly"};
  app.require_subcommand(1);

  RunConfig config;
  std::string family = "ospB";
  std::string format = "json";

  const std::vector<std::pair<Subcommand, std::string>> subs = {
      {Subcommand::basis, "Emit the canonical basis"},
      {Subcommand::dims, "Compare the computed dimension with the closed form"},
      {Subcommand::check_osp, "Membership, closure and block-condition checks"},
      {Subcommand::check_jacobi, "Grading, symmetry and Jacobi identities over the basis"},
      {Subcommand::check_relations, "Parastatistics triple relations and bracket placement"},
      {Subcommand::report, "Run everything and bundle one document"},
  };
  std::vector<CLI::App*> handles;
  for (const auto& [sub, help] : subs) {
    CLI::App* s = app.add_subcommand(to_string(sub), help);
    s->add_option("--algebra", family, "gl, sl, ospB or ospD")
        ->check(CLI::IsMember({"gl", "sl", "ospB", "ospD"}))
        ->capture_default_str();
    s->add_option("--m1", config.spec.m1)->capture_default_str();
    s->add_option("--m2", config.spec.m2)->capture_default_str();
    s->add_option("--n1", config.spec.n1)->capture_default_str();
    s->add_option("--n2", config.spec.n2)->capture_default_str();
    s->add_option("-o,--output", config.output, "Output file (default: standard output)");
    s->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    s->add_option("--max-counterexamples", config.max_counterexamples)->capture_default_str();
    s->add_option("-j,--jobs", config.jobs, "Worker threads (0: all cores)")->capture_default_str();
    s->add_flag("--force", config.force, "Allow matrix sizes above the desk-scale limit");
    handles.push_back(s);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    app.exit(e, msg, msg);
    err << msg.str();
    return kExitUsage;
  }

  for (std::size_t i = 0; i < handles.size(); ++i) {
    if (handles[i]->parsed()) config.subcommand = subs[i].first;
  }
  config.spec.family = parse_family(family);
  config.format = format == "text" ? OutputFormat::text : OutputFormat::json;
  return run(config, out, err);
}

}  // namespace zzosp::cli
