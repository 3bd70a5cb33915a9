// trigonal: tables of trigonal Hurwitz-Hodge integrals and the [C^2/Z3] crepant resolution checks.

#include "trigonal/trigonal.h"

#include <CLI11.hpp>

#include <cstdio>
#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string format = "text";
  std::string output;
  int max_genus = 20;
  int genus = 4;
  int order = 15;
  int n = 3;
};

struct TableDeleter {
  void operator()(trg_table* t) const { trg_table_destroy(t); }
};
using TablePtr = std::unique_ptr<trg_table, TableDeleter>;

struct StringDeleter {
  void operator()(char* s) const { trg_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

trg_format to_format(const std::string& name) {
  if (name == "json") {
    return TRG_FORMAT_JSON;
  }
  if (name == "csv") {
    return TRG_FORMAT_CSV;
  }
  return TRG_FORMAT_TEXT;
}

int report_error(trg_status status) {
  std::cerr << "error (" << trg_status_name(status) << "): " << trg_last_error() << "\n";
  return status == TRG_ERR_INVALID_ARGUMENT || status == TRG_ERR_INVALID_LABEL ? kExitUsage : kExitMismatch;
}

int write_output(const Options& opt, const char* body) {
  if (opt.output.empty()) {
    std::fputs(body, stdout);
    return kExitOk;
  }
  std::ofstream out(opt.output, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << opt.output << " for writing\n";
    return kExitMismatch;
  }
  out << body;
  return out ? kExitOk : kExitMismatch;
}

// Runs one report-producing call and maps its outcome to an exit code.
template <class F>
int run_report(const Options& opt, F&& call, bool checks_pass_flag = true) {
  char* raw = nullptr;
  int all_pass = 1;
  const trg_status status = call(&raw, &all_pass);
  OwnedString body(raw);
  if (status != TRG_OK) {
    return report_error(status);
  }
  const int written = write_output(opt, body.get());
  if (written != kExitOk) {
    return written;
  }
  return checks_pass_flag && all_pass == 0 ? kExitMismatch : kExitOk;
}

int with_table(int max_genus, const std::function<int(const trg_table*)>& body) {
  trg_table* raw = nullptr;
  const trg_status status = trg_table_create(max_genus, &raw);
  TablePtr table(raw);
  if (status != TRG_OK) {
    return report_error(status);
  }
  return body(table.get());
}

void add_output_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--output", opt.output, "Write to this file instead of standard output");
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Trigonal Hurwitz-Hodge integrals and the [C^2/Z3] crepant resolution identity"};
  app.set_version_flag("--version", std::string(trg_version()));
  app.require_subcommand(1);

  auto* tables = app.add_subcommand("tables", "Table of B_g, A•_g, A_g, gamma_g and component values");
  tables->add_option("--max-genus", opt.max_genus, "Largest genus")->capture_default_str();
  add_output_options(tables, opt);

  auto* components = app.add_subcommand("components", "Component values of one genus");
  components->add_option("--genus", opt.genus, "Genus")->required();
  add_output_options(components, opt);

  auto* verify = app.add_subcommand("verify", "Verification suites");
  verify->require_subcommand(1);
  auto* recursions = verify->add_subcommand("recursions", "Recursions against closed forms");
  recursions->add_option("--max-genus", opt.max_genus, "Largest genus")->capture_default_str();
  add_output_options(recursions, opt);
  auto* theta = verify->add_subcommand("theta", "theta_0 - theta_1 = 1/9");
  theta->add_option("--order", opt.order, "Total degree")->capture_default_str();
  add_output_options(theta, opt);
  auto* crc = verify->add_subcommand("crc", "F^X = F^Y after the change of variables");
  crc->add_option("--order", opt.order, "Truncation order")->capture_default_str();
  add_output_options(crc, opt);

  auto* localization = app.add_subcommand("localization", "Triple intersections of the resolution");
  add_output_options(localization, opt);

  auto* duval = app.add_subcommand("duval", "Character-table change of variables for Z_n");
  duval->add_option("--n", opt.n, "Group order")->capture_default_str();
  add_output_options(duval, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kExitUsage;
  }

  const trg_format format = to_format(opt.format);

  if (tables->parsed()) {
    return with_table(opt.max_genus, [&](const trg_table* t) {
      return run_report(opt, [&](char** out, int*) { return trg_table_export(t, format, out); }, false);
    });
  }
  if (components->parsed()) {
    return with_table(std::max(opt.genus, 1), [&](const trg_table* t) {
      return run_report(opt, [&](char** out, int* pass) { return trg_components(t, opt.genus, format, out, pass); });
    });
  }
  if (recursions->parsed()) {
    return with_table(opt.max_genus, [&](const trg_table* t) {
      return run_report(opt, [&](char** out, int* pass) { return trg_verify_recursions(t, format, out, pass); });
    });
  }
  if (theta->parsed()) {
    return run_report(opt, [&](char** out, int* pass) { return trg_verify_theta(opt.order, format, out, pass); });
  }
  if (crc->parsed()) {
    return with_table(std::max(1, opt.order - 2), [&](const trg_table* t) {
      return run_report(opt, [&](char** out, int* pass) { return trg_verify_crc(t, opt.order, format, out, pass); });
    });
  }
  if (localization->parsed()) {
    return run_report(opt, [&](char** out, int*) { return trg_localization(format, out); }, false);
  }
  if (duval->parsed()) {
    return run_report(opt, [&](char** out, int* pass) { return trg_duval(opt.n, format, out, pass); });
  }
  std::cerr << app.help();
  return kExitUsage;
}
