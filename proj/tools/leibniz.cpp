// leibniz: exact structure-constant computations for Leibniz algebras.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or parse error.

#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "leibniz/verify.hpp"
#include "refs.hpp"

int main(int argc, char** argv) {
  using namespace leibniz::cli;

  CLI::App app{"Exact arithmetic for Leibniz algebras given by structure constants"};
  app.require_subcommand(1);
  std::string format_name = "text";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();

  auto* catalog = app.add_subcommand("catalog", "Named algebras");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "List catalog keys");
  auto* show = catalog->add_subcommand("show", "Print a multiplication table");
  std::string show_ref;
  show->add_option("ref", show_ref, "Algebra reference, e.g. RNF@n=3")->required();
  auto* exp = catalog->add_subcommand("export", "Write an algebra file");
  std::string export_ref;
  exp->add_option("ref", export_ref, "Algebra reference")->required();

  auto* check = app.add_subcommand("check", "Identities and invariants of one algebra");
  std::string check_ref;
  check->add_option("ref", check_ref, "Algebra reference or file")->required();

  auto* der = app.add_subcommand("der", "Derivation algebra basis");
  std::string der_ref;
  der->add_option("ref", der_ref, "Algebra reference or file")->required();

  auto* degen = app.add_subcommand("degenerate", "Limit of g_t * source at t = 0");
  std::string d_source, d_family, d_target;
  degen->add_option("--source", d_source, "Source algebra")->required();
  degen->add_option("--family", d_family,
                    "identity | diag:c1,...,cn | named:<id> | split:<k>[:first|last] | file")
      ->required();
  degen->add_option("--target", d_target, "Expected limit")->required();

  auto* obstruct = app.add_subcommand("obstruct", "Necessary conditions for source -> target");
  std::string o_source, o_target;
  obstruct->add_option("--source", o_source, "Source algebra")->required();
  obstruct->add_option("--target", o_target, "Target algebra")->required();

  auto* verify = app.add_subcommand("verify-paper", "Run the built-in classification checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const Format format = format_name == "structured" ? Format::structured : Format::text;
  try {
    Report r;
    if (list->parsed()) {
      r = cmd_catalog_list();
    } else if (show->parsed()) {
      r = cmd_catalog_show(show_ref);
    } else if (exp->parsed()) {
      std::cout << cmd_catalog_export(export_ref);
      return 0;
    } else if (check->parsed()) {
      r = cmd_check(check_ref);
    } else if (der->parsed()) {
      r = cmd_der(der_ref);
    } else if (degen->parsed()) {
      r = cmd_degenerate(d_source, d_family, d_target);
    } else if (obstruct->parsed()) {
      r = cmd_obstruct(o_source, o_target);
    } else if (verify->parsed()) {
      r = cmd_verify_paper(leibniz::threads_from_env());
    }
    std::cout << r.render(format);
    return r.ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
