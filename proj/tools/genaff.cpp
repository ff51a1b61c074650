// genaff: command-line front end to the workbench.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "genaff/formats.hpp"
#include "genaff/workbench.hpp"

namespace {

using namespace genaff;

int emit_report(const Report& r) {
  std::cout << r.str();
  return r.status;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error("cannot write '" + p.string() + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite actions, generalized affine spaces and Malcev operations"};
  app.require_subcommand(1);

  std::string file;
  std::string variance = "covariant";
  auto* classify_cmd = app.add_subcommand("classify", "Classify an action");
  classify_cmd->add_option("file", file, "action file")->required();
  classify_cmd->add_option("--variance", variance, "covariant or contravariant")
      ->check(CLI::IsMember({"covariant", "contravariant"}));

  std::string vectors_file;
  bool semi = false;
  auto* affine_cmd = app.add_subcommand("affine", "Certify a preaffine space");
  affine_cmd->add_option("file", file, "action file")->required();
  affine_cmd->add_option("--vectors", vectors_file, "group file for V (default: the action's group)");
  affine_cmd->add_flag("--semi", semi, "accept strictly semipreaffine spaces");

  auto* field_cmd = app.add_subcommand("field", "Verify an action field");
  field_cmd->add_option("file", file, "field file")->required();

  std::string measure;
  bool exhaustive = false;
  auto* deform_cmd = app.add_subcommand("deform", "Tabulate a torsion, curvature or transport measure");
  deform_cmd->add_option("file", file, "action or field file")->required();
  deform_cmd->add_option("--measure", measure, "measure name")
      ->required()
      ->check(CLI::IsMember({"torsion0", "torsion1", "torsion1_star", "torsion0_star", "curvature0",
                             "curvature1", "dstar", "transport"}));
  deform_cmd->add_flag("--exhaustive", exhaustive, "tabulate every tuple");

  std::string command = "check";
  std::optional<std::string> base;
  auto* malcev_cmd = app.add_subcommand("malcev", "Ternary operation calculus");
  malcev_cmd->add_option("file", file, "malcev file")->required();
  malcev_cmd->add_option("--command", command, "check, iterate, recover or pointed")
      ->check(CLI::IsMember({"check", "iterate", "recover", "pointed"}));
  malcev_cmd->add_option("--base", base, "base point e");

  MineOptions mine_opts;
  std::string out_dir;
  auto* mine_cmd = app.add_subcommand("mine", "Search a structure family");
  mine_cmd->add_option("family", mine_opts.family, "family name")->required();
  mine_cmd->add_option("params", mine_opts.params, "family parameters");
  mine_cmd->add_option("--filter", mine_opts.filters, "filter (repeatable)");
  mine_cmd->add_option("--budget", mine_opts.budget, "candidate budget");
  mine_cmd->add_option("--keep", mine_opts.keep, "structures to keep");
  mine_cmd->add_option("--out", out_dir, "directory for kept structures");

  auto* convert_cmd = app.add_subcommand("convert", "Convert between action and binary tables");
  convert_cmd->add_option("file", file, "action or binary file")->required();

  std::string name, write_dir;
  auto* catalog_cmd = app.add_subcommand("catalog", "List or emit the shipped examples");
  catalog_cmd->add_option("name", name, "example name");
  catalog_cmd->add_option("--write", write_dir, "write every example into this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*classify_cmd) {
      return emit_report(run_classify(parse_action(read_file(file)),
                                      variance == "covariant" ? Variance::covariant : Variance::contravariant));
    }
    if (*affine_cmd) {
      std::optional<FiniteGroup> v;
      if (!vectors_file.empty()) v = parse_group(read_file(vectors_file));
      return emit_report(run_affine(parse_action(read_file(file)), v, semi));
    }
    if (*field_cmd) return emit_report(run_field(parse_field(read_file(file))));
    if (*deform_cmd) return emit_report(run_deform(parse_structure(read_file(file)), measure, exhaustive));
    if (*malcev_cmd) return emit_report(run_malcev(parse_malcev(read_file(file)), command, base));
    if (*mine_cmd) {
      auto result = mine(mine_opts);
      if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        for (std::size_t i = 0; i < result.kept.size(); ++i) {
          const auto& s = result.kept[i];
          write_file(std::filesystem::path(out_dir) /
                         (mine_opts.family + "_" + std::to_string(i) + "." + std::string(structure_kind(s))),
                     emit(s));
        }
      }
      return emit_report(result.summary);
    }
    if (*convert_cmd) {
      const Structure s = parse_structure(read_file(file));
      if (const auto* a = std::get_if<Action>(&s)) {
        std::cout << emit(to_binary(*a));
      } else if (const auto* b = std::get_if<BinaryActionTable>(&s)) {
        std::cout << emit(from_binary(*b));
      } else {
        throw PreconditionError("convert needs an action or binary file");
      }
      return kExitOk;
    }
    if (*catalog_cmd) {
      const auto& cat = example_catalog();
      if (!write_dir.empty()) {
        std::filesystem::create_directories(write_dir);
        for (const auto& [n, s] : cat) write_file(std::filesystem::path(write_dir) / n, emit(s));
        return kExitOk;
      }
      if (name.empty()) {
        for (const auto& [n, s] : cat) std::cout << n << " = " << structure_kind(s) << '\n';
        return kExitOk;
      }
      auto it = cat.find(name);
      if (it == cat.end()) throw PreconditionError("no example named '" + name + "'");
      std::cout << emit(it->second);
      return kExitOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "genaff: " << file << ": " << e.what() << '\n';
    return kExitParse;
  } catch (const BudgetExceeded& e) {
    std::cerr << "genaff: " << e.what() << '\n';
    return kExitBudget;
  } catch (const Error& e) {
    std::cerr << "genaff: " << e.what() << '\n';
    return kExitVerification;
  }
  return kExitOk;
}
