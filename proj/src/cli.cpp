#include "qsing/cli.hpp"

#include "qsing/dataset.hpp"
#include "qsing/group.hpp"
#include "qsing/record.hpp"
#include "qsing/tables.hpp"
#include "qsing/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <optional>
#include <ostream>

namespace qsing {
namespace {

using nlohmann::json;

void emit_error(std::ostream& err, std::string_view name, const std::string& message) {
  json doc = {{"schema", kSchemaVersion}, {"error", std::string(name)}, {"message", message}};
  err << doc.dump() << "\n";
}

std::optional<ExceptionalDivisor> lookup_divisor(const GroupDescriptor& desc,
                                                 const std::string& divisor_file,
                                                 const DivisorCatalog& bundled) {
  const std::string label = divisor_label(desc);
  if (!divisor_file.empty()) {
    const DivisorCatalog user = DivisorCatalog::load(divisor_file);
    if (user.records().size() == 1) return user.records().front();
    if (auto found = user.find(label)) return found;
  }
  return bundled.find(label);
}

int cmd_resolve(const std::string& descriptor, const RecordSections& sections,
                const std::string& format, const std::string& divisor_file, std::ostream& out) {
  const GroupDescriptor desc = parse_descriptor(descriptor);
  validate(desc);
  const Dataset data = Dataset::load_default();
  std::optional<ExceptionalDivisor> divisor;
  if (!desc.is_cyclic()) divisor = lookup_divisor(desc, divisor_file, data.divisors);
  const ModuliReport report = full_report(desc, divisor, data.table3);
  const OutputRecord record = make_record(report, sections);
  if (format == "md") {
    out << format_record_markdown(record);
  } else {
    json doc = to_json(record);
    doc["kind"] = "resolve";
    out << doc.dump() << "\n";
  }
  return 0;
}

int cmd_table1(const Integer& p_max, const std::string& format, std::ostream& out) {
  const Dataset data = Dataset::load_default();
  const auto entries = build_table1(p_max, data.divisors, data.table3);
  if (format == "md") {
    out << table1_markdown(entries);
  } else {
    for (const auto& e : entries) out << to_json(e).dump() << "\n";
  }
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.agrees(); })
             ? 0
             : 1;
}

int cmd_table3(const std::string& format, std::ostream& out) {
  const Dataset data = Dataset::load_default();
  const auto entries = build_table3(data.table3);
  if (format == "md") {
    out << table3_markdown(entries);
  } else {
    for (const auto& e : entries) out << to_json(e).dump() << "\n";
  }
  return 0;
}

int cmd_verify(const SweepOptions& options, std::ostream& out) {
  const Dataset data = Dataset::load_default();
  const VerifySummary summary = run_verify(options, data.divisors, data.table3);
  std::size_t passed = 0;
  std::size_t failed = 0;
  for (const auto& c : summary.checks) {
    json line = {{"schema", kSchemaVersion}, {"kind", "verify"}, {"check", c.name},
                 {"passed", c.passed},       {"failed", c.failed}};
    if (c.counterexample) line["counterexample"] = *c.counterexample;
    out << line.dump() << "\n";
    passed += c.passed;
    failed += c.failed;
  }
  json total = {{"schema", kSchemaVersion}, {"kind", "verify-summary"}, {"passed", passed},
                {"failed", failed},         {"ok", summary.ok()}};
  for (const auto& c : summary.checks) {
    if (c.counterexample) {
      total["firstCounterexample"] = c.name + ": " + *c.counterexample;
      break;
    }
  }
  out << total.dump() << "\n";
  return summary.ok() ? 0 : 1;
}

SeededFault parse_fault(const std::string& text) {
  const GroupDescriptor desc = parse_descriptor("cyclic:" + text);
  const auto& cyc = std::get<Cyclic>(desc.kind);
  validate(desc);
  return {cyc.p, cyc.q};
}

}  // namespace

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::ParseError: return 2;
    case Errc::NotCoprime:
    case Errc::QOutOfRange:
    case Errc::TableTwoConditionViolated:
    case Errc::MinimalityViolation:
    case Errc::ArmCountError:
    case Errc::ShapeMismatch:
    case Errc::ResidueClassInvalid:
    case Errc::TableThreeDisagreement: return 3;
    case Errc::DivisorDataRequired: return 4;
    default: return 1;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimal-resolution combinatorics and moduli dimensions for C^2/Gamma", "qsing"};
  app.require_subcommand(1);

  std::string divisor_file;
  app.add_option("--divisor-file", divisor_file, "Divisor record(s) for non-cyclic groups")
      ->check(CLI::ExistingFile);

  std::string descriptor;
  RecordSections sections;
  std::string format = "json";
  auto* resolve = app.add_subcommand("resolve", "Resolve one group descriptor");
  resolve->add_option("descriptor", descriptor, "e.g. cyclic:7/3, tetra:7, idx2dihedral:4,3")
      ->required();
  resolve->add_flag("--charts", sections.charts, "Include chart atlas and transition report");
  resolve->add_flag("--monomials", sections.monomials, "Include invariant monomials");
  resolve->add_flag("--lattice", sections.lattice, "Include the lattice chain");
  resolve->add_option("--format", format)->check(CLI::IsMember({"json", "md"}));
  resolve->add_option("--divisor-file", divisor_file)->check(CLI::ExistingFile);

  std::int64_t p_max = 100;
  auto* table1 = app.add_subcommand("table1", "Moduli dimensions for cyclic and dihedral rows");
  table1->add_option("--pmax", p_max, "Largest p")->check(CLI::Range(3, 1 << 20));
  table1->add_option("--format", format)->check(CLI::IsMember({"json", "md"}));

  auto* table3 = app.add_subcommand("table3", "Closed forms for T*, O*, I* with l > 1");
  table3->add_option("--format", format)->check(CLI::IsMember({"json", "md"}));

  std::int64_t verify_p_max = 100;
  std::int64_t verify_l_max = 300;
  unsigned threads = 0;
  std::string fault;
  auto* verify = app.add_subcommand("verify", "Run every invariant sweep");
  verify->add_option("--pmax", verify_p_max)->check(CLI::Range(2, 1 << 20));
  verify->add_option("--lmax", verify_l_max)->check(CLI::Range(2, 1 << 24));
  verify->add_option("--threads", threads, "Worker threads (0 = hardware)");
  // Test-only: perturbs the first HJ entry of one pair.
  verify->add_option("--inject-fault", fault)->group("");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& ex) {
    emit_error(err, "ParseError", ex.what());
    return 2;
  }

  try {
    if (*resolve) return cmd_resolve(descriptor, sections, format, divisor_file, out);
    if (*table1) return cmd_table1(p_max, format, out);
    if (*table3) return cmd_table3(format, out);
    if (*verify) {
      SweepOptions options;
      options.pMax = verify_p_max;
      options.lMax = verify_l_max;
      options.threads = threads;
      if (!fault.empty()) options.fault = parse_fault(fault);
      return cmd_verify(options, out);
    }
  } catch (const Error& ex) {
    emit_error(err, errc_name(ex.code()), ex.what());
    return exit_code_for(ex.code());
  } catch (const std::exception& ex) {
    emit_error(err, "InternalError", ex.what());
    return 1;
  }
  return 1;
}

}  // namespace qsing
